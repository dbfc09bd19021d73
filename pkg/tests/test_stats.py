from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given

from altdesc.perms import enumerate_sn, is_downup, is_updown
from altdesc.stats import (
    ODD_TRIPLES,
    alt_descent_set,
    altdesc_from_code,
    avoids_312,
    code3,
    count_pattern,
    d3_set,
    descent_set,
    hat_code,
    hat_code_from_lehmer,
    i3,
    i_hat,
    in_code_set,
    check_code,
    inv,
    is_odd_triple,
    lehmer_code,
    major_index,
    stat,
)
from conftest import perms


def test_odd_triple_parity_matches_listed_patterns():
    for a, b, c in permutations((1, 2, 3)):
        assert is_odd_triple(a, b, c) == ((a, b, c) in ODD_TRIPLES)
    # arbitrary values, only relative order matters
    assert is_odd_triple(10, 70, 40)
    assert not is_odd_triple(5, 9, 2)


@pytest.mark.parametrize(
    "perm, expected",
    [((4, 2, 3, 5, 1, 6), (1, 4)), ((1, 2, 3), ()), ((3, 2, 1), (1, 2))],
)
def test_descent_set(perm, expected):
    assert descent_set(perm) == expected


@pytest.mark.parametrize(
    "perm, expected",
    [((1, 3, 2), (1,)), ((1, 3, 2, 4), (1, 2)), (tuple(range(1, 7)), ())],
)
def test_d3_set(perm, expected):
    assert d3_set(perm) == expected


@pytest.mark.parametrize(
    "perm, expected",
    [((2, 1, 4, 3), (1, 2, 3)), ((2, 3, 1), ())],
)
def test_alt_descent_set(perm, expected):
    assert alt_descent_set(perm) == expected


def test_updown_has_empty_alt_descent_set():
    for n in range(1, 7):
        for p in enumerate_sn(n):
            assert (alt_descent_set(p) == ()) == is_updown(p)


def test_lehmer():
    assert lehmer_code((2, 1, 4, 3)) == (1, 0, 1) and inv((2, 1, 4, 3)) == 2
    assert lehmer_code((1, 2, 3)) == (0, 0)
    assert lehmer_code((4, 3, 2, 1)) == (3, 2, 1) and inv((4, 3, 2, 1)) == 6


def test_code3():
    assert code3((1, 3, 2)) == (1,) and i3((1, 3, 2)) == 1
    assert code3((1, 3, 2, 4)) == (1, 1) and i3((1, 3, 2, 4)) == 2
    assert code3((1, 2, 3, 4, 5)) == (0, 0, 0)


@pytest.mark.parametrize(
    "perm, code, value",
    [((2, 1, 4, 3), (1, 2, 1), 4), ((2, 3, 1), (1, 0), 1), ((1, 2, 3, 4), (0, 2, 0), 2)],
)
def test_hat_code(perm, code, value):
    assert hat_code(perm) == code
    assert i_hat(perm) == value


@given(perms())
def test_hat_code_from_lehmer_agrees(p):
    assert hat_code_from_lehmer(lehmer_code(p), len(p)) == hat_code(p)


def test_major_index():
    assert major_index((3, 1, 2)) == 1
    assert major_index((2, 3, 1)) == 2
    assert major_index((1, 2, 3)) == 0


def test_patterns():
    assert count_pattern((3, 1, 4, 2), "31-2") == 1
    assert stat((2, 3, 1)) == 1
    with pytest.raises(ValueError):
        count_pattern((1, 2, 3), "12-3")


def test_i3_is_sum_of_odd_patterns():
    for p in enumerate_sn(6):
        total = sum(count_pattern(p, pat) for pat in ("13-2", "21-3", "32-1"))
        assert i3(p) == total


def test_altdesc_from_code():
    assert altdesc_from_code((1, 2, 1), 4) == (1, 2, 3)
    assert altdesc_from_code((1, 0), 3) == ()
    assert altdesc_from_code((0, 0, 0, 0), 5) == ()


def test_code_sets():
    assert in_code_set((2, 1, 0), 3)
    assert not in_code_set((0, 2), 2)
    with pytest.raises(ValueError):
        check_code((4, 0, 0), 3)


def test_avoids_312():
    assert avoids_312((2, 1, 4, 3))
    assert not avoids_312((3, 1, 4, 2))
    assert avoids_312((1, 2, 3, 4))


@given(perms(max_size=8))
def test_alt_descent_set_is_descent_parity_flip(p):
    D = set(descent_set(p))
    expected = tuple(i for i in range(1, len(p)) if (i in D) == (i % 2 == 1))
    assert alt_descent_set(p) == expected


@given(perms(max_size=8))
def test_downup_alt_descents_full(p):
    if is_downup(p):
        assert alt_descent_set(p) == tuple(range(1, len(p)))
