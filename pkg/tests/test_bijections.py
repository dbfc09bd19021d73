from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from altdesc.bijections import (
    block_assemble,
    block_decompose,
    circle_bijection,
    circle_bijection_inverse,
    code3_inverse,
    code_bijection,
    hat_code_inverse,
    lehmer_decode,
)
from altdesc.enumerators import code_space
from altdesc.perms import enumerate_sn, enumerate_tilde, enumerate_updown
from altdesc.stats import alt_descent_set, code3, d3_set, hat_code, i3, i_hat, lehmer_code
from conftest import perms


@pytest.mark.parametrize("sigma, omega", [((1, 2, 3), (1, 2)), ((1, 3, 2), (2, 1))])
def test_circle_forced_cases(sigma, omega):
    assert circle_bijection(sigma) == omega
    assert circle_bijection_inverse(omega) == sigma


def test_circle_round_trip_s6():
    for sigma in enumerate_tilde(6):
        omega = circle_bijection(sigma)
        assert circle_bijection_inverse(omega) == sigma
        assert d3_set(sigma) == alt_descent_set(omega)


def test_circle_rejects_bad_input():
    with pytest.raises(ValueError):
        circle_bijection((2, 1, 3))


def test_code3_inverse():
    assert code3_inverse((1,)) == (1, 3, 2)
    assert code3_inverse((0, 0, 0)) == (1, 2, 3, 4, 5)
    for c in code_space(5):
        assert code3(code3_inverse(c)) == c


def test_hat_code_inverse():
    assert hat_code_inverse((1, 2, 1)) == (2, 1, 4, 3)
    assert i_hat(hat_code_inverse((0, 0, 0, 0))) == 0
    for c in code_space(6):
        assert hat_code(hat_code_inverse(c)) == c


@given(perms())
def test_lehmer_round_trip(p):
    assert lehmer_decode(lehmer_code(p)) == p


def test_code_bijection_examples():
    assert code_bijection((1, 2)) == (1, 2, 3)
    assert code_bijection((2, 1)) == (1, 3, 2)


def test_code_bijection_transport_s7():
    seen = set()
    for omega in enumerate_sn(7):
        sigma = code_bijection(omega)
        assert d3_set(sigma) == alt_descent_set(omega)
        assert i3(sigma) == i_hat(omega)
        seen.add(sigma)
    assert len(seen) == 5040


def test_blocks_example():
    assert block_decompose((5, 9, 3, 4, 1, 8, 6, 7, 2)) == [(5, 9, 3, 4, 1), (8,), (6, 7, 2)]
    assert block_decompose((1, 2)) == [(1,), (2,)]
    with pytest.raises(ValueError):
        block_decompose((2, 1))


def test_blocks_round_trip_s7():
    for p in enumerate_updown(7):
        blocks = block_decompose(p)
        assert all(len(b) % 2 == 1 for b in blocks)
        assert block_assemble(blocks) == p
        assert block_assemble(list(reversed(blocks))) == p


@given(st.integers(min_value=1, max_value=7), st.data())
def test_circle_inverse_random(n, data):
    omega = tuple(data.draw(st.permutations(range(1, n + 1))))
    sigma = circle_bijection_inverse(omega)
    assert sigma[0] == 1 and circle_bijection(sigma) == omega
