from __future__ import annotations

from math import factorial

import pytest

from altdesc import reference
from altdesc.enumerators import (
    ab_index,
    ab_index_alt_from_beta,
    ahat_bivariate,
    ahat_poly,
    alpha_hat,
    alt_eulerian_row_bruteforce,
    alt_eulerian_triangle,
    beta_hat,
    catalan,
    cd_index,
    cd_index_alt,
    cd_to_ab,
    classical_eulerian_poly,
    classical_eulerian_row,
    count_no_3descents,
    count_R,
    dyck_weight,
    dyck_weighted_sum,
    ehat_poly,
    ehat_poly_via_dyck,
    ehat_poly_via_pattern,
    enumerate_dyck,
    euler_numbers,
    phi_eval,
)
from altdesc.exactalg import NCPoly, Poly, q_factorial
from altdesc.perms import enumerate_updown


def test_euler_numbers():
    assert euler_numbers(8) == [1, 1, 1, 2, 5, 16, 61, 272, 1385]
    E = euler_numbers(9)
    for n in range(10):
        assert sum(1 for _ in enumerate_updown(n)) == E[n]


def test_catalan():
    assert [catalan(m) for m in range(7)] == list(reference.CATALAN)


def test_triangle_rows():
    tri = alt_eulerian_triangle(7)
    assert tri[0] == (1,)
    for n, row in reference.ALT_EULERIAN_ROWS.items():
        assert tri[n] == row
        assert alt_eulerian_row_bruteforce(n) == row
    assert tri[3][1] == 2


def test_ahat_and_classical():
    assert ahat_poly(3) == Poly([0, 2, 2, 2], "t")
    assert classical_eulerian_poly(3) == Poly([0, 1, 4, 1], "t")
    for n in range(1, 8):
        assert ahat_poly(n)(1) == factorial(n)
        assert Poly((0,) + classical_eulerian_row(n), "t") == classical_eulerian_poly(n)


def test_bivariate():
    assert ahat_bivariate(2).terms == {(0, 0): 1, (1, 1): 1}
    for n in range(1, 8):
        b = ahat_bivariate(n)
        assert b.at_t(1) == q_factorial(n)
        assert b.at_q(0) == Poly([1], "t")


@pytest.mark.parametrize("n", range(0, 8))
def test_ehat_three_routes(n):
    want = Poly(reference.EHAT_COEFFS[n])
    assert ehat_poly(n) == want
    assert ehat_poly_via_pattern(n) == want
    assert ehat_poly_via_dyck(n) == want


def test_dyck_weights():
    assert len(list(enumerate_dyck(3))) == 5
    assert dyck_weighted_sum(2, "even") == Poly([1]) + Poly([1, 1]) ** 2
    assert dyck_weighted_sum(2, "even") == ehat_poly(4)
    assert dyck_weighted_sum(2, "odd") == Poly([1, 1]) ** 2 + Poly([1, 1]) ** 2 * Poly([1, 1, 1])
    assert dyck_weighted_sum(0, "even") == Poly([1]) == dyck_weighted_sum(0, "odd")
    with pytest.raises(ValueError):
        dyck_weight("UD", "neither")


def test_alpha_beta():
    assert alpha_hat(3, (1,)) == 3
    assert beta_hat(3, (1,)) == 1
    for n in range(1, 8):
        assert alpha_hat(n, ()) == euler_numbers(n)[n]
    with pytest.raises(ValueError):
        alpha_hat(3, (3,))


def test_ab_and_cd():
    assert ab_index(3, "alt") == NCPoly({"aa": 2, "ab": 1, "ba": 1, "bb": 2}, "ab")
    assert ab_index_alt_from_beta(3) == ab_index(3, "alt")
    assert cd_index(3) == NCPoly({"cc": 1, "d": 1}, "cd")
    for n, terms in reference.PHI_HAT.items():
        assert cd_index_alt(n) == NCPoly(terms, "cd")
    assert cd_to_ab(cd_index_alt(3)) == ab_index(3, "alt")


def test_R_counts():
    assert [count_R(n) for n in range(5)] == list(reference.R_COUNTS)
    for n in range(1, 9):
        assert phi_eval(n, 1, 2) == count_R(n)
        assert cd_index_alt(n).evaluate({"c": 1, "d": -1}) == phi_eval(n, 1, 2)


def test_no_3descents():
    assert count_no_3descents(4, True) == 5
    assert count_no_3descents(4, False) == 25
