"""CRT decomposition of the remainder modulo g and systematic encoders.

For g = w_1 ... w_r with pairwise coprime factors, let w_i' = g / w_i and
u_i = (w_i')^-1 mod w_i. Then

    Rem_g(f) = sum_i w_i' * Rem_{w_i}(u_i * f)

and each term already has degree < deg(g), so the sum needs no reduction.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

from .bch import BchCode
from .errors import CodewordLengthError
from .gf2poly import Gf2Poly, clmul, mod_int, poly_gcd, poly_mod_inverse

BACKENDS = ("naive", "lfsr_direct", "crt")


@dataclass(frozen=True)
class CrtBranch:
    w: Gf2Poly
    w_prime: Gf2Poly
    u: Gf2Poly


@dataclass(frozen=True)
class CrtPlan:
    g: Gf2Poly
    branches: tuple[CrtBranch, ...]
    n: int | None = None

    def __post_init__(self):
        for b in self.branches:
            q, rem = divmod(self.g, b.w)
            if rem or q != b.w_prime:
                raise ValueError(f"w' for factor {b.w} is not g/w")
            if b.u.degree >= b.w.degree:
                raise ValueError(f"u for factor {b.w} is not reduced")
            if (b.u * b.w_prime) % b.w != Gf2Poly(1):
                raise ValueError(f"u*w' != 1 mod {b.w}")

    @property
    def r(self) -> int:
        return len(self.branches)

    @classmethod
    def from_factors(cls, factors: Sequence[Gf2Poly], n: int | None = None) -> CrtPlan:
        """Plan for any g given as a product of pairwise coprime factors."""
        factors = list(factors)
        if not factors:
            raise ValueError("need at least one factor")
        for i, a in enumerate(factors):
            if a.degree < 1:
                raise ValueError(f"factor {a} is constant")
            for b in factors[i + 1:]:
                d = poly_gcd(a, b)
                if d.value != 1:
                    raise ValueError(f"factors {a} and {b} are not coprime (gcd {d})")
        g = reduce(lambda a, b: a * b, factors, Gf2Poly(1))
        branches = []
        for w in factors:
            w_prime = g // w
            u = poly_mod_inverse(w_prime % w, w)
            branches.append(CrtBranch(w, w_prime, u))
        return cls(g, tuple(branches), n)


def crt_setup(code: BchCode) -> CrtPlan:
    return CrtPlan.from_factors(code.factors, code.N)


def _branch_term(b: CrtBranch, f: int) -> int:
    return clmul(b.w_prime.value, mod_int(clmul(b.u.value, f), b.w.value))


def crt_remainder(plan: CrtPlan, f: Gf2Poly, workers: int | None = None) -> Gf2Poly:
    """Rem_g(f) assembled from the per-factor remainders."""
    fv = f.value
    if workers and workers > 1 and plan.r > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            terms = list(pool.map(lambda b: _branch_term(b, fv), plan.branches))
    else:
        terms = [_branch_term(b, fv) for b in plan.branches]
    acc = 0
    for term in terms:
        acc ^= term
    out = Gf2Poly(acc)
    assert out.degree < plan.g.degree, "CRT sum exceeded deg(g); plan constants are wrong"
    return out


# message / codeword handling

def message_poly(code: BchCode, m) -> Gf2Poly:
    """m is MSB-first (m_{K-1} first), or already a polynomial."""
    if isinstance(m, Gf2Poly):
        if m.degree >= code.K:
            raise CodewordLengthError(f"message degree {m.degree} >= K={code.K}")
        return m
    if len(m) != code.K:
        raise CodewordLengthError(f"message has {len(m)} bits, expected K={code.K}")
    return Gf2Poly.from_bits(m)


def bytes_to_poly(data: bytes, nbits: int) -> Gf2Poly:
    """Big-endian bytes, exactly ceil(nbits/8) long, padding bits in the top byte zero."""
    want = (nbits + 7) // 8
    if len(data) != want:
        raise CodewordLengthError(f"expected {want} bytes for {nbits} bits, got {len(data)}")
    v = int.from_bytes(data, "big")
    if v >> nbits:
        raise ValueError("padding bits in the top byte must be zero")
    return Gf2Poly(v)


def poly_to_bytes(p: Gf2Poly, nbits: int) -> bytes:
    if p.value >> nbits:
        raise ValueError(f"polynomial does not fit in {nbits} bits")
    return p.value.to_bytes((nbits + 7) // 8, "big")


@lru_cache(maxsize=32)
def _plan(code: BchCode) -> CrtPlan:
    return crt_setup(code)


@lru_cache(maxsize=32)
def _datapath(code: BchCode):
    from .lfsr import build_datapath

    return build_datapath(_plan(code))


@lru_cache(maxsize=32)
def _direct(code: BchCode):
    from .lfsr import build_div_lfsr

    return build_div_lfsr(code.g)


def parity(code: BchCode, m, backend: str = "crt", workers: int | None = None) -> Gf2Poly:
    """Rem_g(m(x) x^(N-K)) computed by the chosen backend."""
    mp = message_poly(code, m)
    if backend == "naive":
        return (mp << code.redundancy) % code.g
    if backend == "lfsr_direct":
        from .lfsr import simulate_serial

        _, state = simulate_serial(_direct(code), mp.to_bits(code.K) + bytes(code.redundancy))
        return Gf2Poly(state)
    if backend == "crt":
        from .lfsr import simulate_datapath

        return simulate_datapath(_datapath(code), mp, workers=workers)
    raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")


def encode_systematic(code: BchCode, m, backend: str = "crt", workers: int | None = None) -> list[int]:
    """Systematic codeword, MSB-first (c_{N-1} first); the first K bits are m."""
    return list(encode_poly(code, m, backend, workers).to_bits(code.N))


def encode_poly(code: BchCode, m, backend: str = "crt", workers: int | None = None) -> Gf2Poly:
    mp = message_poly(code, m)
    return (mp << code.redundancy) + parity(code, mp, backend, workers)
