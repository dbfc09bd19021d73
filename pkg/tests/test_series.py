from __future__ import annotations

from fractions import Fraction
from math import factorial

from altdesc import series
from altdesc.enumerators import count_R, ehat_poly, euler_numbers
from altdesc.exactalg import Poly


def test_tan_sec_coefficients():
    h = series.tan_sec_series(6)
    assert list(h.coeffs) == [1, 1, Fraction(1, 2), Fraction(1, 3), Fraction(5, 24),
                              Fraction(2, 15), Fraction(61, 720)]
    assert series.verify_tan_sec_reflection(12) is None
    assert series.verify_ln_tan_sec(12) is None
    assert series.verify_antiderivative(12) is None


def test_F_and_E_coefficients():
    F = series.F_from_triangle(7)
    E = series.E_from_classical(7)
    assert F[5] * factorial(5) == Poly([0, 16, 26, 36, 26, 16], "t")
    assert F[1] == Poly([0, 1], "t") == E[1]
    assert E[3] * 6 == Poly([0, 1, 4, 1], "t")


def test_residuals_vanish():
    assert series.verify_final_F(12).is_zero()
    assert series.verify_egf_eulerian(12).is_zero()
    assert series.verify_pde(10).is_zero()
    assert series.pde_initial_condition(10) is None


def test_pde_small_order():
    assert series.verify_pde(2).is_zero()


def test_t_zero_slice():
    F = series.F_from_triangle(8)
    E = euler_numbers(8)
    for n in range(1, 9):
        assert F[n][1] * factorial(n) == E[n]


def test_powers_and_fhat():
    h = series.tan_sec_series(8)
    assert series.power_tan_sec(1, 8) == h
    assert series.verify_H(8, 6, 8) is None
    assert series.verify_fhat(3, 12) is None
    for n in range(1, 9):
        assert series.verify_fhat(n, 10) is None
        assert series.verify_classical_powers(n, 10) is None


def test_G():
    assert series.verify_G(8, 8) is None


def test_R_series():
    R = series.R_series(12)
    assert R.egf_values()[:5] == [1, 1, 1, 3, 9]
    assert R.log()[3] == Fraction(1, 3)
    assert all(R.log()[2 * k] == 0 for k in range(7))
    assert series.verify_R_identities(12, [count_R(n) for n in range(9)]) is None


def test_H_endpoints():
    ehat = [ehat_poly(n) for n in range(8)]
    assert [p(0) for p in ehat] == [1, 1, 1, 1, 2, 2, 5, 5]
    assert [p(1) for p in ehat] == euler_numbers(7)
    assert series.verify_H_endpoints(ehat, 7) is None
