"""Acceptance criteria 1-9.

Each criterion prints one PASS/FAIL line (shown in the pytest terminal
summary). Run directly with ``python tests/test_acceptance.py`` to get the
same lines without pytest.
"""

import random
import time
from functools import lru_cache

import pytest

from crtbch.bch import bch_build, failing_roots
from crtbch.crt import crt_remainder, crt_setup, encode_poly
from crtbch.gf2poly import Gf2Poly, poly_divmod
from crtbch.lfsr import build_datapath
from crtbch.report import cost_report

MATRIX = [(4, 7), (5, 7), (6, 11), (11, 23)]
SAMPLES = 1000
RESULTS: list[tuple[str, bool, str]] = []

P = Gf2Poly.parse


def _report(code):
    plan = crt_setup(code)
    return cost_report(code, plan, build_datapath(plan))


@lru_cache(maxsize=None)
def _encoded(t, delta):
    """SAMPLES random messages per code, encoded by every backend."""
    code = bch_build(t, delta)
    rng = random.Random(1000 * t + delta)
    rows = []
    for _ in range(SAMPLES):
        m = Gf2Poly(rng.getrandbits(code.K))
        rows.append((m, {b: encode_poly(code, m, b) for b in ("naive", "lfsr_direct", "crt")}))
    return code, rows


def crit1():
    start = time.perf_counter()
    c = bch_build(4, 7, P("x^4+x+1"))
    elapsed = time.perf_counter() - start
    assert c.g == P("x^10+x^8+x^5+x^4+x^2+x+1")
    assert set(c.factors) == {P("x^4+x+1"), P("x^4+x^3+x^2+x+1"), P("x^2+x+1")}
    assert [set(cc.members) for cc in c.cosets] == [{1, 2, 4, 8}, {3, 6, 9, 12}, {5, 10}]
    assert c.r == 3
    assert elapsed < 1.0, elapsed
    return f"g = {c.g}, r = 3, {elapsed:.3f}s"


def _large(t, delta, k, deg_g, r, xors, fanout, limit):
    start = time.perf_counter()
    c = bch_build(t, delta)
    rep = _report(c)
    elapsed = time.perf_counter() - start
    assert (c.N, c.K, c.g.degree, c.r) == ((1 << t) - 1, k, deg_g, r)
    assert all(f.degree == t for f in c.factors)
    assert rep.total_actual <= xors, rep.total_actual
    assert rep.max_division_fanout <= fanout
    assert elapsed < limit, elapsed
    return f"XORs {rep.total_actual} <= {xors}, fanout {rep.max_division_fanout} <= {fanout}, {elapsed:.2f}s"


def crit2():
    return _large(11, 23, 1926, 121, 11, 1595, 11, 10.0)


def crit3():
    return _large(13, 79, 7684, 507, 39, 20865, 13, 60.0)


def crit4():
    for t, delta in MATRIX:
        code = bch_build(t, delta)
        plan = crt_setup(code)
        rng = random.Random(t)
        for _ in range(SAMPLES):
            f = Gf2Poly(rng.getrandbits(2 * code.g.degree))
            assert crt_remainder(plan, f) == poly_divmod(f, code.g)[1]
    return f"{SAMPLES} polynomials x {len(MATRIX)} codes, bit-exact"


def crit5():
    for t, delta in MATRIX:
        code, rows = _encoded(t, delta)
        for m, words in rows:
            assert words["naive"] == words["lfsr_direct"] == words["crt"]
            for w in words.values():
                assert w.value >> code.redundancy == m.value
    return f"{SAMPLES} messages x {len(MATRIX)} codes, 3 backends identical, systematic"


def crit6():
    n = 0
    for t, delta in MATRIX:
        code, rows = _encoded(t, delta)
        for _, words in rows:
            assert not failing_roots(code, words["crt"])
            n += 1
    return f"{n} codewords vanish at alpha^1..alpha^(delta-1)"


def crit7():
    start = time.perf_counter()
    c = bch_build(4, 7)
    weights = [encode_poly(c, Gf2Poly(m), "naive").value.bit_count() for m in range(1 << c.K)]
    elapsed = time.perf_counter() - start
    dmin = min(weights[1:])
    assert dmin >= 7 and elapsed < 1.0
    return f"minimum nonzero weight {dmin} over 32 codewords, {elapsed:.3f}s"


def crit8():
    parts = []
    for t, delta in [(11, 23), (13, 79)]:
        d = _report(bch_build(t, delta)).to_dict()
        crt_f, direct_f = d["max_division_fanout"], d["direct_division_fanout"]
        assert crt_f <= t and crt_f < direct_f
        parts.append(f"t={t}: {crt_f} < {direct_f}")
    return "; ".join(parts)


def crit9():
    parts = []
    for t, delta in [(11, 23), (13, 79)]:
        c = bch_build(t, delta)
        assert c.r * t == c.g.degree
        parts.append(f"t={t}: r={c.r}={c.g.degree}/{t}")
    return "; ".join(parts)


CRITERIA = [
    (1, "Example 1 exact reproduction", crit1),
    (2, "Example 2 parameters, XORs, fanout", crit2),
    (3, "Example 3 parameters, XORs, fanout", crit3),
    (4, "CRT remainder equals schoolbook division", crit4),
    (5, "backend equivalence and systematic prefix", crit5),
    (6, "codeword root property", crit6),
    (7, "[15,5] minimum distance", crit7),
    (8, "fanout reduction vs direct divider", crit8),
    (9, "prime-t law r = deg(g)/t", crit9),
]


def _run(num, name, fn):
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = f"assertion failed {exc}", False
    line = f"criterion {num} {'PASS' if ok else 'FAIL'}: {name} -- {detail}"
    RESULTS.append((line, ok, detail))
    return ok, line


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn):
    ok, line = _run(num, name, fn)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
