from __future__ import annotations

import pytest
from hypothesis import given

from altdesc.perms import (
    CapExceeded,
    append_max,
    cyclic_shift,
    enumerate_downup,
    enumerate_sn,
    enumerate_tilde,
    enumerate_updown,
    format_perm,
    is_downup,
    is_updown,
    parse_perm,
    reverse_complement,
    standardize,
    star,
    validate,
    zigzag_interleave,
)
from conftest import perms


def test_enumerate_sn_small():
    assert list(enumerate_sn(0)) == [()]
    assert list(enumerate_sn(1)) == [(1,)]
    s3 = list(enumerate_sn(3))
    assert len(s3) == 6 and s3[0] == (1, 2, 3) and s3[-1] == (3, 2, 1)


def test_enumerate_tilde():
    assert set(enumerate_tilde(3)) == {(1, 2, 3), (1, 3, 2)}
    s4 = list(enumerate_tilde(4))
    assert len(s4) == 6 and all(p[0] == 1 for p in s4)
    assert sum(1 for _ in enumerate_tilde(5)) == 24


def test_alternating_enumerations():
    assert set(enumerate_updown(3)) == {(1, 3, 2), (2, 3, 1)}
    assert sum(1 for _ in enumerate_downup(4)) == 5
    assert sum(1 for _ in enumerate_downup(7)) == 272


@pytest.mark.parametrize("n", range(0, 8))
def test_alternating_enumerations_are_complete(n):
    perms_n = list(enumerate_sn(n))
    assert list(enumerate_updown(n)) == [p for p in perms_n if is_updown(p)]
    assert list(enumerate_downup(n)) == [p for p in perms_n if is_downup(p)]


def test_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_sn(11))
    assert next(enumerate_sn(11, cap=None)) == tuple(range(1, 12))


@pytest.mark.parametrize(
    "perm, k, expected",
    [
        ((1, 3, 2, 4), 1, (2, 4, 3, 1)),
        ((2, 1, 3), 0, (2, 1, 3)),
        ((2, 1, 3), 3, (2, 1, 3)),
    ],
)
def test_cyclic_shift(perm, k, expected):
    assert cyclic_shift(perm, k) == expected


def test_reverse_complement_examples():
    assert reverse_complement((2, 3, 1)) == (3, 1, 2)
    assert reverse_complement((1, 2)) == (1, 2)


@pytest.mark.parametrize(
    "perm, expected",
    [
        ((1, 2, 3, 4), (1, 3, 4, 2)),
        ((1, 2, 3, 4, 5, 6), (1, 3, 5, 6, 4, 2)),
        ((1,), (1,)),
    ],
)
def test_zigzag_interleave(perm, expected):
    assert zigzag_interleave(perm) == expected


def test_star_and_append():
    assert star(1, (2, 1)) == (1, 3, 2)
    assert star(4, (1, 2, 3)) == (4, 1, 2, 3)
    assert append_max((2, 3, 1)) == (2, 3, 1, 4)
    with pytest.raises(ValueError):
        star(5, (1, 2))


def test_parse_and_format():
    assert parse_perm("5,9,3,4,1,8,6,7,2") == (5, 9, 3, 4, 1, 8, 6, 7, 2)
    assert format_perm((1, 3, 2)) == "1,3,2"
    for bad in ("1,1", "0,1", "a,b", "2,3"):
        with pytest.raises(ValueError):
            parse_perm(bad)
    with pytest.raises(ValueError):
        validate((1, 3))


@given(perms())
def test_reverse_complement_involution(p):
    assert reverse_complement(reverse_complement(p)) == p


@given(perms())
def test_shift_composes(p):
    n = len(p)
    assert cyclic_shift(cyclic_shift(p, 1), n - 1) == p


@given(perms())
def test_standardize_is_identity_on_perms(p):
    assert standardize(p) == p
    assert standardize([10 * v for v in p]) == p
