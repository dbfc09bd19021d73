"""Bijections between permutations starting with 1 and all permutations.

Two routes from the set of permutations of [n+1] beginning with 1 to S_n:

* the circle construction, which carries the 3-descent set to the alternating
  descent set;
* composing ``code3`` with the inverse of ``hat_code``, which additionally
  carries ``i3`` to ``i_hat``.

Also here: the block decomposition of up-down permutations.
"""
from __future__ import annotations

from typing import Sequence

from .perms import Perm, cyclic_shift, is_updown, star, validate
from .stats import check_code, hat_code

# An arc is (start, end): the clockwise arc from point ``start`` to point
# ``end``.  Points are whatever objects sit in the ``ring`` list, which lists
# the points in clockwise order.


def _arc_gaps(ring: Sequence, arc: tuple) -> frozenset[int]:
    """Gaps (ring index k = gap between ring[k] and ring[k+1]) covered by an arc."""
    pos = {p: k for k, p in enumerate(ring)}
    m = len(ring)
    k, end = pos[arc[0]], pos[arc[1]]
    gaps = set()
    while k != end:
        gaps.add(k)
        k = (k + 1) % m
    return frozenset(gaps)


def _arc_points(ring: Sequence, arc: tuple) -> frozenset:
    pos = {p: k for k, p in enumerate(ring)}
    m = len(ring)
    k, end = pos[arc[0]], pos[arc[1]]
    pts = {ring[k]}
    while k != end:
        k = (k + 1) % m
        pts.add(ring[k])
    return frozenset(pts)


def _next_arc(ring: Sequence, prev: tuple | None, a, b) -> tuple:
    """The arc between a and b nested with ``prev`` (or clockwise a->b if first)."""
    if prev is None:
        return (a, b)
    prev_gaps = _arc_gaps(ring, prev)
    nested = [
        arc for arc in ((a, b), (b, a))
        if (g := _arc_gaps(ring, arc)) <= prev_gaps or prev_gaps <= g
    ]
    if len(nested) != 1:
        raise AssertionError(f"arc choice not unique: {nested}")
    return nested[0]


def _insert_by_rank(word: list[int], ell: int) -> list[int]:
    # omega^(i): new last entry ell, earlier entries >= ell bumped up
    return [v + 1 if v >= ell else v for v in word] + [ell]


def circle_bijection(sigma: Sequence[int]) -> Perm:
    """Map sigma in S~_{n+1} (sigma_1 = 1) to omega in S_n.

    The 3-descent set of sigma equals the alternating descent set of omega.
    """
    sigma = validate(sigma)
    if not sigma or sigma[0] != 1:
        raise ValueError(f"{sigma!r} does not start with 1")
    n = len(sigma) - 1
    ring = list(range(1, n + 2))
    arc = None
    omega: list[int] = []
    for i in range(n):
        arc = _next_arc(ring, arc, sigma[i], sigma[i + 1])
        inside = _arc_points(ring, arc)
        ell = sum(p in inside for p in sigma[: i + 1])
        omega = _insert_by_rank(omega, ell)
    return tuple(omega)


def circle_bijection_inverse(omega: Sequence[int]) -> Perm:
    """Rebuild sigma from omega by placing sigma_2, sigma_3, ... on the circle.

    At each step the new point goes into the unique gap whose resulting arc
    reproduces ``ell(i)``, the rank of omega_i among omega_1..omega_i.
    """
    omega = validate(omega)
    n = len(omega)
    # ring holds sigma-indices 0..i in clockwise order, starting from sigma_1
    ring = [0]
    arc = None
    for i in range(n):
        ell = sum(v <= omega[i] for v in omega[: i + 1])
        hits = []
        for gap in range(len(ring)):
            trial = ring[: gap + 1] + [i + 1] + ring[gap + 1:]
            cand = _next_arc(trial, arc, i, i + 1)
            inside = _arc_points(trial, cand)
            if sum(j in inside for j in range(i + 1)) == ell:
                hits.append((trial, cand))
        if len(hits) != 1:
            raise AssertionError(f"inverse step {i + 1} has {len(hits)} placements")
        ring, arc = hits[0]
    # clockwise order from sigma_1 assigns labels 1, 2, ..., n+1
    sigma = [0] * (n + 1)
    for label, idx in enumerate(ring, start=1):
        sigma[idx] = label
    return tuple(sigma)


def code3_inverse(code: Sequence[int]) -> Perm:
    """The unique sigma in S~_{k+2} with ``code3(sigma) == code`` (code in C_k)."""
    code = check_code(code, len(code))
    tau: Perm = (1, 2)
    for a in reversed(code):
        m = len(tau) + 1
        ell = m - a
        # shift so the leading ell becomes 1
        tau = cyclic_shift(star(ell, tau), 1 - ell)
    return tau


def lehmer_decode(code: Sequence[int]) -> Perm:
    """Inverse Lehmer code; ``code`` has length n-1."""
    n = len(code) + 1
    remaining = list(range(1, n + 1))
    out = []
    for a in code:
        out.append(remaining.pop(a))
    out.append(remaining.pop())
    return tuple(out)


def hat_code_inverse(code: Sequence[int]) -> Perm:
    """Inverse of ``hat_code`` on C_{n-1}."""
    code = check_code(code, len(code))
    n = len(code) + 1
    lehmer = [c if i % 2 == 1 else n - i - c for i, c in enumerate(code, start=1)]
    return lehmer_decode(lehmer)


def code_bijection(sigma: Sequence[int]) -> Perm:
    """S_n -> S~_{n+1}: ``code3_inverse(hat_code(sigma))``."""
    sigma = validate(sigma)
    if not sigma:
        return (1,)
    return code3_inverse(hat_code(sigma))


def block_decompose(sigma: Sequence[int]) -> list[Perm]:
    """Cut an up-down permutation at 1, then alternately at the max and the min."""
    sigma = validate(sigma)
    if not is_updown(sigma):
        raise ValueError(f"{sigma!r} is not up-down")
    blocks = []
    rest = list(sigma)
    cut_at_min = True
    while rest:
        target = min(rest) if cut_at_min else max(rest)
        k = rest.index(target) + 1
        blocks.append(tuple(rest[:k]))
        rest = rest[k:]
        cut_at_min = not cut_at_min
    return blocks


def block_assemble(blocks: Sequence[Sequence[int]]) -> Perm:
    """Concatenate blocks (given in any order) back into the up-down permutation."""
    pool = [tuple(b) for b in blocks]
    out: list[int] = []
    want_min = True
    while pool:
        values = [v for b in pool for v in b]
        target = min(values) if want_min else max(values)
        block = next(b for b in pool if target in b)
        pool.remove(block)
        out.extend(block)
        want_min = not want_min
    return validate(out)
