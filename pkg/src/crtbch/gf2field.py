"""GF(2^t) arithmetic, cyclotomic cosets and minimal polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import FieldConstructionError, NotPrimitiveError
from .gf2poly import Gf2Poly

MIN_T = 2
MAX_T = 16

# Default primitive polynomial per extension degree. Changing an entry changes
# which minimal polynomials make up a BCH generator, so treat this as versioned.
DEFAULT_PRIMITIVE_POLYS: dict[int, Gf2Poly] = {
    t: Gf2Poly.parse(s)
    for t, s in {
        2: "x^2+x+1",
        3: "x^3+x+1",
        4: "x^4+x+1",
        5: "x^5+x^2+1",
        6: "x^6+x+1",
        7: "x^7+x^3+1",
        8: "x^8+x^4+x^3+x^2+1",
        9: "x^9+x^4+1",
        10: "x^10+x^3+1",
        11: "x^11+x^2+1",
        12: "x^12+x^6+x^4+x+1",
        13: "x^13+x^4+x^3+x+1",
        14: "x^14+x^10+x^6+x+1",
        15: "x^15+x+1",
        16: "x^16+x^12+x^3+x+1",
    }.items()
}
DEFAULT_TABLE_VERSION = 1


class Gf2mField:
    """The field GF(2^t) in polynomial basis, with log/antilog tables.

    Elements are plain ints holding t bits (coefficients of 1, a, ..., a^(t-1)),
    where ``a`` is the class of x modulo ``prim_poly``. :class:`Gf2mElement`
    wraps them for operator syntax.
    """

    def __init__(self, t: int, prim_poly: Gf2Poly | None = None):
        if not MIN_T <= t <= MAX_T:
            raise ValueError(f"extension degree t must be in [{MIN_T}, {MAX_T}], got {t}")
        if prim_poly is None:
            prim_poly = DEFAULT_PRIMITIVE_POLYS[t]
        if prim_poly.degree != t:
            raise ValueError(f"primitive polynomial must have degree {t}, got {prim_poly}")
        self.t = t
        self.prim_poly = prim_poly
        self.order = (1 << t) - 1
        self._exp, self._log = self._build_tables()

    def _build_tables(self):
        n, t, p = self.order, self.t, self.prim_poly.value
        exp = [0] * (2 * n)
        log = [-1] * (n + 1)
        x = 1
        for k in range(n):
            if k > 0 and x == 1:
                raise NotPrimitiveError(self.prim_poly, k, n)
            exp[k] = x
            log[x] = k
            x <<= 1
            if x >> t:
                x ^= p
        if x != 1:
            # never returned to 1 within n steps; x has no finite order dividing n
            raise NotPrimitiveError(self.prim_poly, None, n)
        exp[n:] = exp[:n]
        return exp, log

    def __repr__(self):
        return f"Gf2mField(t={self.t}, prim_poly={self.prim_poly})"

    @property
    def size(self) -> int:
        return self.order + 1

    @property
    def alpha(self) -> Gf2mElement:
        return Gf2mElement(self, self._exp[1])

    def element(self, bits: int) -> Gf2mElement:
        return Gf2mElement(self, bits)

    # int-level arithmetic

    def exp(self, k: int) -> int:
        """alpha^k."""
        return self._exp[k % self.order]

    def log(self, e: int) -> int:
        if e == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[e]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[self.order - self._log[a]]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % self.order]

    def eval_poly(self, p: Gf2Poly, x: int) -> int:
        """Evaluate a GF(2) polynomial at a field element."""
        if x == 0:
            return p.value & 1
        lx = self._log[x]
        n, exp = self.order, self._exp
        acc = 0
        for e in p.exponents():
            acc ^= exp[(lx * e) % n]
        return acc

    def eval_poly_at_power(self, p: Gf2Poly, j: int) -> int:
        """p(alpha^j) using only the exponent table."""
        return self.eval_poly(p, self.exp(j))


def elem_mul(f: Gf2mField, a: Gf2mElement, b: Gf2mElement) -> Gf2mElement:
    return Gf2mElement(f, f.mul(a.bits, b.bits))


@dataclass(frozen=True)
class Gf2mElement:
    field: Gf2mField = field(repr=False, compare=False)
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.field.order:
            raise ValueError(f"{self.bits:#x} is not a reduced element of GF(2^{self.field.t})")

    def __add__(self, other: Gf2mElement) -> Gf2mElement:
        return Gf2mElement(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Gf2mElement) -> Gf2mElement:
        return Gf2mElement(self.field, self.field.mul(self.bits, other.bits))

    def __truediv__(self, other: Gf2mElement) -> Gf2mElement:
        return Gf2mElement(self.field, self.field.mul(self.bits, self.field.inv(other.bits)))

    def __pow__(self, k: int) -> Gf2mElement:
        return Gf2mElement(self.field, self.field.pow(self.bits, k))

    def __bool__(self):
        return self.bits != 0

    def log(self) -> int:
        return self.field.log(self.bits)


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit {j, 2j, 4j, ...} of an exponent under doubling mod 2^t - 1."""

    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, j: int) -> bool:
        return j in self.members


def coset_of(t: int, j: int) -> CyclotomicCoset:
    n = (1 << t) - 1
    j %= n
    members = [j]
    k = (2 * j) % n
    while k != j:
        members.append(k)
        k = (2 * k) % n
    rep = min(members)
    i = members.index(rep)
    return CyclotomicCoset(rep, tuple(members[i:] + members[:i]))


def cyclotomic_cosets(t: int, exponents: Iterable[int]) -> list[CyclotomicCoset]:
    """Disjoint cosets covering ``exponents``, sorted by representative."""
    n = (1 << t) - 1
    seen: set[int] = set()
    cosets = []
    for j in sorted(set(exponents)):
        if not 0 <= j < n:
            raise ValueError(f"exponent {j} outside [0, {n - 1}]")
        if j in seen:
            continue
        c = coset_of(t, j)
        seen.update(c.members)
        cosets.append(c)
    cosets.sort(key=lambda c: c.representative)
    return cosets


def minimal_polynomial(f: Gf2mField, j: int) -> Gf2Poly:
    """Minimal polynomial of alpha^j over GF(2).

    Multiplies out prod (x - alpha^s) over the coset of j with coefficients in
    GF(2^t), then checks every coefficient landed in GF(2).
    """
    if not 0 <= j < f.order:
        raise ValueError(f"exponent {j} outside [0, {f.order - 1}]")
    coeffs = [1]  # little-endian, GF(2^t) entries
    for s in coset_of(f.t, j).members:
        root = f.exp(s)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= f.mul(c, root)
        coeffs = nxt
    bad = [i for i, c in enumerate(coeffs) if c not in (0, 1)]
    if bad:
        raise FieldConstructionError(
            f"minimal polynomial of alpha^{j} has coefficients outside GF(2) at x^{bad}"
        )
    return Gf2Poly.from_coeffs(coeffs)
