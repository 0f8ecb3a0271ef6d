"""Narrow-sense binary BCH codes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from .errors import CodewordLengthError
from .gf2field import CyclotomicCoset, Gf2mField, cyclotomic_cosets, minimal_polynomial
from .gf2poly import Gf2Poly, is_irreducible, poly_gcd


@dataclass(frozen=True)
class BchCode:
    """A narrow-sense BCH code of length 2^t - 1 and designed distance ``delta``.

    ``factors`` are the distinct minimal polynomials of alpha^1..alpha^(delta-1),
    one per coset, in coset-representative order. ``g`` is their product.
    """

    t: int
    delta: int
    prim_poly: Gf2Poly
    cosets: tuple[CyclotomicCoset, ...]
    factors: tuple[Gf2Poly, ...]
    g: Gf2Poly
    field: Gf2mField = field(repr=False, compare=False)

    @property
    def N(self) -> int:
        return (1 << self.t) - 1

    @property
    def K(self) -> int:
        return self.N - self.g.degree

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def redundancy(self) -> int:
        return self.g.degree

    def __str__(self):
        return f"[{self.N},{self.K},>={self.delta}] BCH code, g = {self.g}"

    def check(self) -> None:
        """Assert the structural invariants. Raises AssertionError on failure."""
        prod = reduce(lambda a, b: a * b, self.factors, Gf2Poly(1))
        assert prod == self.g, "generator is not the product of its factors"
        for i, a in enumerate(self.factors):
            assert is_irreducible(a), f"factor {a} is reducible"
            for b in self.factors[i + 1:]:
                assert poly_gcd(a, b).value == 1, f"factors {a} and {b} share a factor"
        assert 2 * self.r <= self.g.degree
        if _is_prime(self.t):
            assert self.r * self.t == self.g.degree
        assert 1 <= self.K < self.N
        for j in range(1, self.delta):
            assert self.field.eval_poly_at_power(self.g, j) == 0, f"alpha^{j} is not a root of g"

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "N": self.N,
            "K": self.K,
            "delta": self.delta,
            "prim_poly": self.prim_poly.to_hex(),
            "g": self.g.to_hex(),
            "factors": [f.to_hex() for f in self.factors],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> BchCode:
        code = bch_build(d["t"], d["delta"], Gf2Poly.parse(d["prim_poly"]))
        for key in ("N", "K"):
            if key in d and d[key] != getattr(code, key):
                raise ValueError(f"descriptor {key}={d[key]} disagrees with rebuilt code ({getattr(code, key)})")
        if "g" in d and Gf2Poly.parse(d["g"]) != code.g:
            raise ValueError("descriptor generator disagrees with rebuilt code")
        if "factors" in d and [Gf2Poly.parse(f) for f in d["factors"]] != list(code.factors):
            raise ValueError("descriptor factors disagree with rebuilt code")
        return code

    @classmethod
    def from_json(cls, text: str) -> BchCode:
        return cls.from_dict(json.loads(text))


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def bch_build(t: int, delta: int, prim_poly: Gf2Poly | None = None) -> BchCode:
    field_ = Gf2mField(t, prim_poly)
    n = field_.order
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance must be in [2, {n}], got {delta}")
    cosets = tuple(cyclotomic_cosets(t, range(1, delta)))
    factors = tuple(minimal_polynomial(field_, c.representative) for c in cosets)
    g = reduce(lambda a, b: a * b, factors, Gf2Poly(1))
    if g.degree >= n:
        raise ValueError(f"delta={delta} leaves no information bits (deg g = {g.degree})")
    return BchCode(t, delta, field_.prim_poly, cosets, factors, g, field_)


def _as_poly(code: BchCode, c) -> Gf2Poly:
    if isinstance(c, Gf2Poly):
        if c.degree >= code.N:
            raise CodewordLengthError(f"codeword polynomial degree {c.degree} >= N={code.N}")
        return c
    if len(c) != code.N:
        raise CodewordLengthError(f"codeword has {len(c)} bits, expected N={code.N}")
    return Gf2Poly.from_bits(c)


def failing_roots(code: BchCode, c: Sequence[int] | Gf2Poly) -> list[int]:
    """Exponents j in 1..delta-1 with c(alpha^j) != 0.

    ``c`` is an MSB-first bit vector (c_{N-1} first) or a polynomial.
    """
    p = _as_poly(code, c)
    exps = p.exponents()
    f = code.field
    n, table = f.order, f._exp
    bad = []
    for j in range(1, code.delta):
        acc = 0
        for e in exps:
            acc ^= table[(j * e) % n]
        if acc:
            bad.append(j)
    return bad


def verify_codeword(code: BchCode, c: Sequence[int] | Gf2Poly) -> bool:
    """True iff every alpha^j, j = 1..delta-1, is a root of c(x)."""
    p = _as_poly(code, c)
    by_roots = not failing_roots(code, p)
    by_division = not (p % code.g)
    if by_roots != by_division:
        raise AssertionError("root evaluation and division by g disagree")
    return by_roots
