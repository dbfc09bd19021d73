"""Permutations as tuples of ints in one-line notation, plus class generators.

Values and positions are 1-based.  Every generator is lazy and refuses sizes
above ``cap`` (default 10) to guard against factorial blowups.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

Perm = tuple[int, ...]

DEFAULT_CAP = 10


class CapExceeded(ValueError):
    pass


def check_cap(n: int, cap: int | None = DEFAULT_CAP) -> None:
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    if cap is not None and n > cap:
        raise CapExceeded(
            f"n={n} exceeds the enumeration cap {cap}; "
            f"{n}-element enumeration is factorial, raise the cap explicitly"
        )


def validate(perm: Sequence[int]) -> Perm:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{len(perm)}")
    return perm


def parse_perm(text: str) -> Perm:
    """Parse ``"4,2,3,1"``; the empty string is the empty permutation."""
    text = text.strip()
    if not text:
        return ()
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse permutation {text!r}") from None
    return validate(values)


def format_perm(perm: Sequence[int]) -> str:
    return ",".join(str(v) for v in perm)


def enumerate_sn(n: int, cap: int | None = DEFAULT_CAP) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    check_cap(n, cap)
    return permutations(range(1, n + 1))


def enumerate_tilde(n: int, cap: int | None = DEFAULT_CAP) -> Iterator[Perm]:
    """Permutations of [n] whose first entry is 1."""
    if n < 1:
        raise ValueError("the class of permutations starting with 1 needs n >= 1")
    check_cap(n, cap)
    return ((1,) + rest for rest in permutations(range(2, n + 1)))


def _alternating(n: int, first_up: bool) -> Iterator[Perm]:
    word: list[int] = []
    used = [False] * (n + 2)

    def extend():
        i = len(word)
        if i == n:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if i:
                # position i (1-based) compares word[i-1] with v
                up = (i % 2 == 1) == first_up
                if up and not word[-1] < v:
                    continue
                if not up and not word[-1] > v:
                    continue
            used[v] = True
            word.append(v)
            yield from extend()
            word.pop()
            used[v] = False

    return extend()


def enumerate_updown(n: int, cap: int | None = DEFAULT_CAP) -> Iterator[Perm]:
    """sigma_1 < sigma_2 > sigma_3 < ..., lexicographic."""
    check_cap(n, cap)
    return _alternating(n, first_up=True)


def enumerate_downup(n: int, cap: int | None = DEFAULT_CAP) -> Iterator[Perm]:
    """sigma_1 > sigma_2 < sigma_3 > ..., lexicographic."""
    check_cap(n, cap)
    return _alternating(n, first_up=False)


def is_updown(perm: Sequence[int]) -> bool:
    return all((perm[i] < perm[i + 1]) == (i % 2 == 0) for i in range(len(perm) - 1))


def is_downup(perm: Sequence[int]) -> bool:
    return all((perm[i] > perm[i + 1]) == (i % 2 == 0) for i in range(len(perm) - 1))


def cyclic_shift(perm: Sequence[int], k: int) -> Perm:
    """Replace each value v by ((v - 1 + k) mod n) + 1; positions stay put."""
    n = len(perm)
    if n == 0:
        raise ValueError("cannot shift the empty permutation")
    return tuple((v - 1 + k) % n + 1 for v in perm)


def reverse_complement(perm: Sequence[int]) -> Perm:
    n = len(perm)
    return tuple(n + 1 - v for v in reversed(perm))


def zigzag_interleave(perm: Sequence[int]) -> Perm:
    """Odd positions left to right, then even positions right to left."""
    return tuple(perm[0::2]) + tuple(reversed(perm[1::2]))


def star(value: int, perm: Sequence[int]) -> Perm:
    """Permutation starting with ``value`` whose tail is order-isomorphic to ``perm``."""
    n = len(perm) + 1
    if not 1 <= value <= n:
        raise ValueError(f"leading value {value} outside 1..{n}")
    return (value,) + tuple(v + 1 if v >= value else v for v in perm)


def prepend_min(perm: Sequence[int]) -> Perm:
    return star(1, perm)


def append_max(perm: Sequence[int]) -> Perm:
    return tuple(perm) + (len(perm) + 1,)


def standardize(word: Sequence[int]) -> Perm:
    """Order-isomorphic permutation of a word with distinct letters."""
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)
