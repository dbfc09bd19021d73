"""Permutation statistics: descent-set variants, inversion codes, patterns.

Position sets are returned as sorted tuples of 1-based positions.  Codes are
tuples; a code of length ``k`` lives in ``C_k`` when ``a_i <= k + 1 - i``.
"""
from __future__ import annotations

from typing import Sequence

Positions = tuple[int, ...]
Code = tuple[int, ...]

ODD_TRIPLES = frozenset({(1, 3, 2), (2, 1, 3), (3, 2, 1)})

PATTERNS = {
    # vincular pattern -> standardized (sigma_i, sigma_{i+1}, sigma_j)
    "13-2": (1, 3, 2),
    "21-3": (2, 1, 3),
    "32-1": (3, 2, 1),
    "31-2": (3, 1, 2),
}


def is_odd_triple(a: int, b: int, c: int) -> bool:
    # parity of the inversion count of a 3-letter word
    return ((a > b) + (a > c) + (b > c)) % 2 == 1


def _std3(a: int, b: int, c: int) -> tuple[int, int, int]:
    return (1 + (a > b) + (a > c), 1 + (b > a) + (b > c), 1 + (c > a) + (c > b))


def descent_set(perm: Sequence[int]) -> Positions:
    return tuple(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def des(perm: Sequence[int]) -> int:
    return len(descent_set(perm))


def d3_set(perm: Sequence[int]) -> Positions:
    return tuple(
        i + 1 for i in range(len(perm) - 2) if is_odd_triple(perm[i], perm[i + 1], perm[i + 2])
    )


def d3(perm: Sequence[int]) -> int:
    return len(d3_set(perm))


def alt_descent_set(perm: Sequence[int]) -> Positions:
    # 0-based index i is position i+1: odd positions have even 0-based index
    return tuple(
        i + 1 for i in range(len(perm) - 1) if (perm[i] > perm[i + 1]) == (i % 2 == 0)
    )


def d_hat(perm: Sequence[int]) -> int:
    return len(alt_descent_set(perm))


def lehmer_code(perm: Sequence[int]) -> Code:
    n = len(perm)
    return tuple(sum(perm[i] > perm[j] for j in range(i + 1, n)) for i in range(n - 1))


def inv(perm: Sequence[int]) -> int:
    return sum(lehmer_code(perm))


def code3(perm: Sequence[int]) -> Code:
    n = len(perm)
    return tuple(
        sum(is_odd_triple(perm[i], perm[i + 1], perm[j]) for j in range(i + 2, n))
        for i in range(n - 2)
    )


def i3(perm: Sequence[int]) -> int:
    return sum(code3(perm))


def hat_code(perm: Sequence[int]) -> Code:
    """Alternating inversion code: inversions at odd i, non-inversions at even i."""
    n = len(perm)
    out = []
    for i in range(n - 1):
        x = perm[i]
        if i % 2 == 0:
            out.append(sum(x > perm[j] for j in range(i + 1, n)))
        else:
            out.append(sum(x < perm[j] for j in range(i + 1, n)))
    return tuple(out)


def hat_code_from_lehmer(code: Sequence[int], n: int) -> Code:
    """``(a1, n-2-a2, a3, n-4-a4, ...)``: the hat code from the Lehmer code."""
    return tuple(a if i % 2 == 1 else n - i - a for i, a in enumerate(code, start=1))


def i_hat(perm: Sequence[int]) -> int:
    return sum(hat_code(perm))


def major_index(perm: Sequence[int]) -> int:
    return sum(descent_set(perm))


def count_pattern(perm: Sequence[int], pattern: str) -> int:
    """Occurrences (i, j), i + 1 < j, of a vincular pattern such as ``"31-2"``."""
    try:
        target = PATTERNS[pattern]
    except KeyError:
        raise ValueError(f"unknown pattern {pattern!r}; known: {sorted(PATTERNS)}") from None
    n = len(perm)
    return sum(
        _std3(perm[i], perm[i + 1], perm[j]) == target
        for i in range(n - 2)
        for j in range(i + 2, n)
    )


def stat(perm: Sequence[int]) -> int:
    """Babson-Steingrimsson STAT: 13-2 + 21-3 + 32-1 occurrences plus descents."""
    return sum(count_pattern(perm, p) for p in ("13-2", "21-3", "32-1")) + des(perm)


def in_code_set(code: Sequence[int], k: int) -> bool:
    return len(code) == k and all(0 <= a <= k - i for i, a in enumerate(code))


def check_code(code: Sequence[int], k: int) -> Code:
    code = tuple(code)
    if not in_code_set(code, k):
        raise ValueError(f"{code!r} is not in C_{k} (need a_i <= {k} + 1 - i)")
    return code


def altdesc_from_code(code: Sequence[int], n: int) -> Positions:
    """``{i in [n-1] : a_i + a_{i+1} >= n - i}`` with ``a_n = 0``."""
    a = check_code(code, n - 1) + (0,)
    return tuple(i for i in range(1, n) if a[i - 1] + a[i] >= n - i)


def avoids_312(perm: Sequence[int]) -> bool:
    n = len(perm)
    for k in range(1, n - 1):
        low = perm[k]
        # largest earlier value above low, then look for a later value in between
        above = [perm[i] for i in range(k) if perm[i] > low]
        if not above:
            continue
        top = max(above)
        if any(low < perm[j] < top for j in range(k + 1, n)):
            return False
    return True


def has_double_descent(perm: Sequence[int]) -> bool:
    return any(perm[i] > perm[i + 1] > perm[i + 2] for i in range(len(perm) - 2))


def descent_string(perm: Sequence[int]) -> str:
    """``+`` for an ascent, ``-`` for a descent, one symbol per position 1..n-1."""
    return "".join("-" if perm[i] > perm[i + 1] else "+" for i in range(len(perm) - 1))

