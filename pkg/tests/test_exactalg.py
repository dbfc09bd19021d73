from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from altdesc.exactalg import BiPoly, NCPoly, Poly, Series1, Series2, q_factorial, q_int

small_ints = st.integers(min_value=-5, max_value=5)
coeff_lists = st.lists(small_ints, max_size=5)
words = st.text(alphabet="cd", max_size=4)
ncpolys = st.dictionaries(words, small_ints, max_size=4).map(lambda d: NCPoly(d, "cd"))


def test_q_analogs():
    assert q_int(3) == Poly([1, 1, 1])
    assert q_factorial(3) == Poly([1, 2, 2, 1])
    for n in range(8):
        assert q_factorial(n)(1) == factorial(n)


def test_poly_basics():
    p = Poly([1, 1], "t")
    assert p ** 2 == Poly([1, 2, 1], "t")
    assert str(Poly([2, 2, 1])) == "2 + 2*q + q^2"
    assert Poly([0, 0, 3]).shift(-2) == Poly([3])
    with pytest.raises(ValueError):
        Poly([1, 3]).shift(-1)
    assert Poly([1, 2, 3]).reversed() == Poly([3, 2, 1])
    assert Poly.from_json(Poly([5, 0, 1]).to_json()) == Poly([5, 0, 1])


@given(coeff_lists, coeff_lists, coeff_lists)
def test_poly_ring_axioms(a, b, c):
    p, q, r = Poly(a), Poly(b), Poly(c)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p - p == Poly([])


def test_bipoly():
    b = BiPoly.from_pairs([(0, 0), (1, 1)])
    assert b.at_t(1) == Poly([1, 1])
    assert b.at_q(0) == Poly([1], "t")
    assert BiPoly.from_json(b.to_json()) == b


def test_ncpoly_substitution():
    c = NCPoly.letter("c", "cd")
    d = NCPoly.letter("d", "cd")
    a = NCPoly.letter("a", "ab")
    b = NCPoly.letter("b", "ab")
    p = c * c + d
    psi = p.substitute({"c": a + b, "d": a * b + b * a})
    assert psi == NCPoly({"aa": 1, "ab": 2, "ba": 2, "bb": 1}, "ab")
    assert p.substitute({"c": c, "d": c * c - d}) == NCPoly({"cc": 2, "d": -1}, "cd")
    assert p.substitute({"c": c, "d": d}) == p
    assert NCPoly.from_json(p.to_json()) == p


@given(ncpolys, ncpolys, ncpolys)
def test_ncpoly_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


def test_series1_exp_log():
    x = Series1.x(12)
    one_plus_x = 1 + x
    assert one_plus_x.log().exp() == one_plus_x
    e = Series1.from_egf([1] * 13, 12)
    assert e.derivative() == e.with_order(11)


def test_series1_rejects_floats():
    with pytest.raises(TypeError):
        Series1([1.0], 3)


def test_series1_order_mismatch():
    with pytest.raises(ValueError):
        Series1.one(3) + Series1.one(4)


def test_series1_inverse():
    geo = Series1([1] * 11, 10)
    assert geo * (1 - Series1.x(10)) == Series1.one(10)
    assert (1 - Series1.x(10)).inverse() == geo


def test_series2_geometric_in_t():
    t = Series2.t(5)
    s = Series2.constant(Poly([1] * 6, "t"), 5)
    prod = (s * (1 - t)).truncate_t(5)
    assert prod == Series2.constant(Poly([1], "t"), 5)


@given(st.lists(coeff_lists, min_size=1, max_size=6), st.lists(coeff_lists, min_size=1, max_size=6))
def test_series2_mul_matches_convolution(a, b):
    N = 5
    A = Series2([Poly(c, "t") for c in a], N)
    B = Series2([Poly(c, "t") for c in b], N)
    prod = A * B
    for n in range(N + 1):
        want = Poly([], "t")
        for k in range(n + 1):
            want = want + A[k] * B[n - k]
        assert prod[n] == want


def test_series_json():
    s = Series1([1, Fraction(1, 2)], 3)
    data = s.to_json()
    assert data["order"] == 3 and data["coeffs"][1] == ["1", "2"]
    assert Series1.from_json(data) == s
