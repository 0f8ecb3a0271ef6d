import pytest
from hypothesis import given, strategies as st

from crtbch.errors import NotInvertibleError
from crtbch.gf2poly import (
    NEG_INF,
    Gf2Poly,
    is_irreducible,
    nz,
    poly_add,
    poly_divmod,
    poly_ext_gcd,
    poly_gcd,
    poly_mod_inverse,
    poly_mul,
)

from oracles import brute_inverse, ladd, ldivmod, lmul, to_int, to_list

P = Gf2Poly.parse
G1 = P("x^10+x^8+x^5+x^4+x^2+x+1")

polys = st.integers(min_value=0, max_value=(1 << 200) - 1).map(Gf2Poly)
nonzero = st.integers(min_value=1, max_value=(1 << 120) - 1).map(Gf2Poly)


def test_add_examples():
    a = P("x^2+x+1")
    assert poly_add(a, a) == Gf2Poly(0)
    assert poly_add(a, Gf2Poly(0)) == a
    assert poly_add(a, P("x+1")) == P("x^2")


def test_mul_examples():
    assert poly_mul(P("x+1"), P("x+1")) == P("x^2+1")
    assert P("x^4+x+1") * P("x^4+x^3+x^2+x+1") * P("x^2+x+1") == G1
    assert poly_mul(G1, Gf2Poly(0)) == Gf2Poly(0)


def test_divmod_examples():
    q, r = poly_divmod(P("x^10"), G1)
    assert r == P("x^8+x^5+x^4+x^2+x+1")
    assert q == Gf2Poly(1)
    assert poly_divmod(G1, G1) == (Gf2Poly(1), Gf2Poly(0))
    assert (G1 % P("x^2+x+1")).is_zero()


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(G1, Gf2Poly(0))


def test_zero_degree_marker():
    z = Gf2Poly(0)
    assert z.degree == NEG_INF
    assert z.degree < Gf2Poly(1).degree == 0
    assert (z * G1).degree == z.degree + G1.degree


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, nonzero)
def test_division_identity(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.integers(0, (1 << 40) - 1), st.integers(1, (1 << 20) - 1))
def test_divmod_matches_list_oracle(a, b):
    q, r = poly_divmod(Gf2Poly(a), Gf2Poly(b))
    oq, orr = ldivmod(to_list(a), to_list(b))
    assert (q.value, r.value) == (to_int(oq), to_int(orr))


@given(st.integers(0, (1 << 40) - 1), st.integers(0, (1 << 40) - 1))
def test_mul_add_match_list_oracle(a, b):
    assert (Gf2Poly(a) * Gf2Poly(b)).value == to_int(lmul(to_list(a), to_list(b)))
    assert (Gf2Poly(a) + Gf2Poly(b)).value == to_int(ladd(to_list(a), to_list(b)))


@given(polys, polys)
def test_ext_gcd_bezout(a, b):
    if not a and not b:
        return
    d, s, t = poly_ext_gcd(a, b)
    assert s * a + t * b == d
    assert (a % d).is_zero()
    assert (b % d).is_zero()
    assert poly_gcd(a, b) == poly_gcd(b, a)


@given(nonzero)
def test_gcd_with_zero(a):
    assert poly_gcd(a, Gf2Poly(0)) == a
    assert poly_ext_gcd(a, a)[0] == a


def test_ext_gcd_both_zero():
    with pytest.raises(ValueError):
        poly_ext_gcd(Gf2Poly(0), Gf2Poly(0))


def test_ext_gcd_factors_coprime():
    fs = [P("x^4+x+1"), P("x^4+x^3+x^2+x+1"), P("x^2+x+1")]
    for i, a in enumerate(fs):
        for b in fs[i + 1:]:
            assert poly_ext_gcd(a, b)[0] == Gf2Poly(1)


def test_mod_inverse_examples():
    m = P("x^2+x+1")
    assert poly_mod_inverse(Gf2Poly(1), m) == Gf2Poly(1)
    assert poly_mod_inverse(P("x"), m) == P("x+1")
    # example 1, first factor: w' = g / (x^4+x+1); inverse found by enumeration
    w = P("x^4+x+1")
    wp = G1 // w
    u = poly_mod_inverse(wp % w, w)
    assert u == P("x^3+1")
    assert (u * wp) % w == Gf2Poly(1)


def test_mod_inverse_not_coprime():
    with pytest.raises(NotInvertibleError) as info:
        poly_mod_inverse(P("x^3+x"), P("x^2+1"))
    assert info.value.common_factor == P("x^2+1")
    with pytest.raises(NotInvertibleError) as info:
        poly_mod_inverse(P("x^2+1"), P("x^3+1"))
    assert info.value.common_factor == P("x+1")
    with pytest.raises(ValueError):
        poly_mod_inverse(P("x"), Gf2Poly(1))


@given(st.integers(1, (1 << 9) - 1))
def test_mod_inverse_matches_enumeration(a):
    m = P("x^9+x^4+1")
    v = poly_mod_inverse(Gf2Poly(a), m)
    assert to_int(brute_inverse(to_list(a), to_list(m.value))) == v.value
    assert v.degree < m.degree


def test_nz():
    assert nz(Gf2Poly(0)) == 0
    assert nz(G1) == 7


@given(nonzero)
def test_nz_bound(h):
    assert nz(h) <= h.degree + 1


@given(polys)
def test_text_round_trip(a):
    assert Gf2Poly.parse(a.to_exponent_str()) == a
    assert Gf2Poly.parse(a.to_hex()) == a
    assert Gf2Poly.from_bits(a.to_bits()) == a
    assert Gf2Poly.from_coeffs(a.coeffs()) == a


def test_text_forms():
    assert str(G1) == "x^10+x^8+x^5+x^4+x^2+x+1"
    assert G1.to_hex() == "0x537"
    assert P("0") == Gf2Poly(0) and str(Gf2Poly(0)) == "0"
    assert P(" x^3 + 1 ") == Gf2Poly(9)
    assert P("x+x") == Gf2Poly(0)
    with pytest.raises(ValueError):
        P("x^2+2x")


def test_bits_width():
    assert P("x+1").to_bits(4) == b"\x00\x00\x01\x01"
    with pytest.raises(ValueError):
        G1.to_bits(5)


def test_immutable():
    with pytest.raises(AttributeError):
        G1.value = 3


def test_irreducible():
    assert is_irreducible(P("x^4+x+1"))
    assert is_irreducible(P("x^4+x^3+x^2+x+1"))
    assert not is_irreducible(P("x^4+x^2+1"))
    assert not is_irreducible(G1)
