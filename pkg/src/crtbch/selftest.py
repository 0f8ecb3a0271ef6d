"""Reproduction checks for the three worked examples plus oracle cross-checks."""

from __future__ import annotations

import random
import time
from typing import Callable

from .bch import bch_build, verify_codeword
from .crt import crt_setup, crt_remainder, encode_poly
from .gf2poly import Gf2Poly
from .lfsr import build_datapath
from .report import cost_report

EXAMPLE1_G = Gf2Poly.parse("x^10+x^8+x^5+x^4+x^2+x+1")
EXAMPLE1_FACTORS = [Gf2Poly.parse(s) for s in ("x^4+x+1", "x^4+x^3+x^2+x+1", "x^2+x+1")]
EXAMPLE1_COSETS = [(1, 2, 4, 8), (3, 6, 12, 9), (5, 10)]

# (t, delta) pairs used for oracle cross-checks
MATRIX = [(4, 7), (5, 7), (6, 11), (11, 23)]


def _example1():
    c = bch_build(4, 7)
    assert (c.N, c.K, c.r) == (15, 5, 3)
    assert c.g == EXAMPLE1_G
    assert sorted(c.factors, key=int) == sorted(EXAMPLE1_FACTORS, key=int)
    assert [cc.members for cc in c.cosets] == EXAMPLE1_COSETS
    return f"g = {c.g}"


def _large_example(t, delta, k, deg_g, r, xor_limit, fanout_limit):
    c = bch_build(t, delta)
    assert (c.N, c.K, c.g.degree, c.r) == ((1 << t) - 1, k, deg_g, r)
    assert all(f.degree == t for f in c.factors)
    plan = crt_setup(c)
    rep = cost_report(c, plan, build_datapath(plan))
    assert rep.total_actual <= xor_limit, rep.total_actual
    assert rep.max_division_fanout <= fanout_limit
    assert rep.max_division_fanout < rep.direct_division_fanout
    return (
        f"XORs {rep.total_actual} <= {xor_limit}, fanout {rep.max_division_fanout} <= {fanout_limit}"
        f" (direct {rep.direct_division_fanout})"
    )


def _crt_vs_division(samples, rng):
    for t, d in MATRIX:
        c = bch_build(t, d)
        plan = crt_setup(c)
        for _ in range(samples):
            f = Gf2Poly(rng.getrandbits(2 * c.g.degree))
            assert crt_remainder(plan, f) == f % c.g
    return f"{samples} samples x {len(MATRIX)} codes"


def _backends(samples, rng):
    for t, d in MATRIX:
        c = bch_build(t, d)
        for _ in range(samples):
            m = Gf2Poly(rng.getrandbits(c.K))
            words = {b: encode_poly(c, m, b) for b in ("naive", "lfsr_direct", "crt")}
            assert len(set(words.values())) == 1
            w = words["crt"]
            assert w.value >> c.redundancy == m.value
            assert verify_codeword(c, w)
    return f"{samples} messages x {len(MATRIX)} codes"


def _min_distance():
    c = bch_build(4, 7)
    best = min(encode_poly(c, Gf2Poly(m), "naive").value.bit_count() for m in range(1, 1 << c.K))
    assert best >= 7, best
    return f"minimum weight {best}"


def run_selftest(samples: int = 100, seed: int = 0) -> list[tuple[str, bool, str, float]]:
    """Run every check; returns (name, passed, detail, seconds) per check."""
    rng = random.Random(seed)
    checks: list[tuple[str, Callable[[], str]]] = [
        ("example1 [15,5] generator and cosets", _example1),
        ("example2 [2047,1926] cost and fanout", lambda: _large_example(11, 23, 1926, 121, 11, 1595, 11)),
        ("example3 [8191,7684] cost and fanout", lambda: _large_example(13, 79, 7684, 507, 39, 20865, 13)),
        ("crt remainder equals division", lambda: _crt_vs_division(samples, rng)),
        ("backend equivalence and roots", lambda: _backends(samples, rng)),
        ("[15,5] minimum distance", _min_distance),
    ]
    results = []
    for name, fn in checks:
        start = time.perf_counter()
        try:
            detail, ok = fn(), True
        except AssertionError as exc:
            detail, ok = f"assertion failed: {exc}", False
        results.append((name, ok, detail, time.perf_counter() - start))
    return results
