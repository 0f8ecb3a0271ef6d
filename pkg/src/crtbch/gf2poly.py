"""Polynomials over GF(2).

A polynomial b_n x^n + ... + b_1 x + b_0 is stored as the nonnegative
integer b_n 2^n + ... + b_1 2 + b_0, so coefficient i lives in bit i.
Python integers are packed machine words, which gives word-parallel
addition (XOR) and shift-based multiplication and division for free.

The zero polynomial has degree ``-inf`` so that ``deg(a*b) == deg(a) + deg(b)``
and ``deg(r) < deg(b)`` hold without special cases.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import NotInvertibleError

NEG_INF = float("-inf")

_TO_BITS = bytes.maketrans(b"01", b"\x00\x01")
_FROM_BITS = bytes.maketrans(b"\x00\x01", b"01")
_TERM = re.compile(r"^(?:1|x|x\^(\d+))$")


class Gf2Poly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("value",)

    def __init__(self, value: int = 0):
        if isinstance(value, Gf2Poly):
            value = value.value
        if value < 0:
            raise ValueError("coefficient bits must be a nonnegative integer")
        object.__setattr__(self, "value", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    # constructors

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Gf2Poly:
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> Gf2Poly:
        """Build from a little-endian coefficient list (index i is x^i)."""
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def from_bits(cls, bits: bytes | Sequence[int]) -> Gf2Poly:
        """Build from an MSB-first bit sequence (first element is the top coefficient)."""
        if not isinstance(bits, (bytes, bytearray)):
            bits = bytes(bits)
        if not bits:
            return cls(0)
        return cls(int(bits.translate(_FROM_BITS), 2))

    @classmethod
    def parse(cls, text: str) -> Gf2Poly:
        """Parse exponent-list form (``x^4+x+1``) or hex form (``0x13``)."""
        s = text.strip().replace(" ", "")
        if s.lower().startswith("0x"):
            return cls(int(s, 16))
        if s == "0":
            return cls(0)
        v = 0
        for term in s.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
            if term == "1":
                e = 0
            elif term == "x":
                e = 1
            else:
                e = int(m.group(1))
            v ^= 1 << e
        return cls(v)

    # properties

    @property
    def degree(self) -> int | float:
        return self.value.bit_length() - 1 if self.value else NEG_INF

    def is_zero(self) -> bool:
        return self.value == 0

    def coeff(self, i: int) -> int:
        return (self.value >> i) & 1

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, highest first."""
        v = self.value
        out = []
        while v:
            e = v.bit_length() - 1
            out.append(e)
            v ^= 1 << e
        return out

    def coeffs(self) -> list[int]:
        if not self.value:
            return []
        return [(self.value >> i) & 1 for i in range(self.value.bit_length())]

    def to_bits(self, width: int | None = None) -> bytes:
        """MSB-first 0/1 bytes, left-padded to ``width``."""
        if width is None:
            width = max(self.value.bit_length(), 1)
        if self.value.bit_length() > width:
            raise ValueError(f"degree {self.degree} does not fit in {width} bits")
        if width == 0:
            return b""
        return format(self.value, f"0{width}b").encode().translate(_TO_BITS)

    def to_hex(self) -> str:
        return hex(self.value)

    def to_exponent_str(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)

    # arithmetic

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.value ^ _val(other))

    __sub__ = __add__
    __radd__ = __add__
    __xor__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(clmul(self.value, _val(other)))

    __rmul__ = __mul__

    def __divmod__(self, other: Gf2Poly):
        q, r = divmod_int(self.value, _val(other))
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(mod_int(self.value, _val(other)))

    def __lshift__(self, n: int) -> Gf2Poly:
        return Gf2Poly(self.value << n)

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("Gf2Poly", self.value))

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Gf2Poly({self.to_exponent_str()})"

    def __str__(self):
        return self.to_exponent_str()


def _val(p) -> int:
    return p.value if isinstance(p, Gf2Poly) else int(p)


# integer kernels; bit i is the coefficient of x^i

def clmul(a: int, b: int) -> int:
    """Carry-less product of two coefficient integers."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        low = b & -b
        c ^= a << (low.bit_length() - 1)
        b ^= low
    return c


def divmod_int(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def mod_int(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


# functional interface

def poly_add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a + b


def poly_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a * b


def poly_divmod(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Schoolbook division: returns (q, r) with a = q*b + r and deg r < deg b."""
    return divmod(a, b)


def poly_ext_gcd(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly, Gf2Poly]:
    """Extended Euclid. Returns (d, s, t) with s*a + t*b == d == gcd(a, b)."""
    x, y = _val(a), _val(b)
    if x == 0 and y == 0:
        raise ValueError("gcd of two zero polynomials is undefined")
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while y:
        q, r = divmod_int(x, y)
        x, y = y, r
        s0, s1 = s1, s0 ^ clmul(q, s1)
        t0, t1 = t1, t0 ^ clmul(q, t1)
    return Gf2Poly(x), Gf2Poly(s0), Gf2Poly(t0)


def poly_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return poly_ext_gcd(a, b)[0]


def poly_mod_inverse(a: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    """Inverse of ``a`` modulo ``m``; result has degree < deg(m)."""
    if m.degree < 1:
        raise ValueError(f"modulus must have degree >= 1, got {m}")
    a_red = a % m
    if not a_red:
        raise NotInvertibleError(a, m, m)
    d, s, _ = poly_ext_gcd(a_red, m)
    if d.value != 1:
        raise NotInvertibleError(a, m, d)
    return s % m


def nz(a: Gf2Poly) -> int:
    """Number of nonzero coefficients."""
    return _val(a).bit_count()


def poly_pow_mod(a: Gf2Poly, e: int, m: Gf2Poly) -> Gf2Poly:
    x, mv = mod_int(_val(a), _val(m)), _val(m)
    result = 1 if mv != 1 else 0
    while e:
        if e & 1:
            result = mod_int(clmul(result, x), mv)
        x = mod_int(clmul(x, x), mv)
        e >>= 1
    return Gf2Poly(result)


def is_irreducible(p: Gf2Poly) -> bool:
    """Rabin-style test: x^(2^n) == x mod p and gcd(x^(2^(n/q)) - x, p) == 1."""
    n = p.degree
    if n < 1:
        return False
    if n == 1:
        return True
    x = Gf2Poly(2)

    def frob(k):
        y = x
        for _ in range(k):
            y = poly_pow_mod(y, 2, p)
        return y

    if frob(n) != x % p:
        return False
    for q in _prime_factors(n):
        if poly_gcd(frob(n // q) + x, p).value != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
