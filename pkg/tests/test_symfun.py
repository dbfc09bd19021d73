from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from altdesc.symfun import (
    co,
    compositions,
    exp_spec,
    fhat_poly,
    g_f_at_ones,
    g_f_poly,
    geometric_spec,
    h_f_at_ones,
    m_gamma_at_ones,
    multinomial_E,
    odd_partitions,
    partitions,
    schur_f_at_ones,
    subset_of,
    tan_sec_spec,
    z_lambda,
)
from altdesc.exactalg import Poly


def test_combinatorics():
    assert co((1,), 3) == (1, 2)
    assert subset_of((1, 2)) == (1,)
    assert z_lambda((1, 1, 1)) == 6 and z_lambda((3,)) == 3
    assert multinomial_E(3, (1, 2)) == 3
    assert len(list(compositions(5))) == 16
    assert len(list(partitions(6))) == 11
    assert list(odd_partitions(4)) == [(3, 1), (1, 1, 1, 1)]
    with pytest.raises(ValueError):
        co((0,), 3)


def test_monomial_at_ones():
    assert m_gamma_at_ones((2, 1), 3) == 3
    assert m_gamma_at_ones((2, 1), 0) == 0
    assert m_gamma_at_ones((4,), 7) == 7


@pytest.mark.parametrize("n", range(1, 8))
def test_exp_gives_powers(n):
    for m in range(5):
        assert g_f_at_ones(exp_spec(), n, m) == m ** n


def test_tan_sec_small():
    spec = tan_sec_spec()
    assert g_f_poly(spec, 3) == Poly([0, 1, 0, 1], "m")
    assert g_f_poly(spec, 2) == Poly([0, 0, 1], "m")
    assert fhat_poly(1) == Poly([0, 1], "m")
    assert fhat_poly(2) == Poly([0, 0, 1], "m")
    assert fhat_poly(3) == Poly([0, 1, 0, 1], "m")


@pytest.mark.parametrize("make", [exp_spec, tan_sec_spec, geometric_spec])
def test_routes_agree(make):
    spec = make(8)
    for n in range(1, 9):
        for m in range(7):
            a = g_f_at_ones(spec, n, m, "compositions")
            assert a == g_f_at_ones(spec, n, m, "partitions")
            assert h_f_at_ones(spec, n, m) * factorial(n) == a


def test_unknown_route_and_order():
    with pytest.raises(ValueError):
        g_f_at_ones(exp_spec(), 2, 1, "neither")
    with pytest.raises(ValueError):
        g_f_at_ones(exp_spec(3), 4, 1)


def test_schur():
    spec = geometric_spec()
    for m in range(5):
        assert schur_f_at_ones(spec, (1,), m) == m
    # s_(2,1)(1,1,1) = 8
    assert schur_f_at_ones(spec, (2, 1), 3) == 8


def test_spec_b_values_exact():
    assert geometric_spec(6).b == tuple(Fraction(factorial(n - 1)) if n else Fraction(0) for n in range(7))
    assert all(isinstance(b, Fraction) for b in tan_sec_spec().b)
