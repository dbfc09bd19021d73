"""Min-trees (increasing planar binary trees), simsun permutations, Dyck paths.

``T(w)`` puts the smallest letter of ``w`` at the root with ``T(left part)`` and
``T(right part)`` as subtrees; reading labels in order recovers ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .perms import Perm, is_downup, validate
from .stats import descent_string, has_double_descent


@dataclass(frozen=True)
class MinTree:
    label: int
    left: MinTree | None = None
    right: MinTree | None = None

    @property
    def children(self) -> int:
        return (self.left is not None) + (self.right is not None)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "left": self.left.to_json() if self.left else None,
            "right": self.right.to_json() if self.right else None,
        }

    @classmethod
    def from_json(cls, data) -> MinTree | None:
        if data is None:
            return None
        return cls(data["label"], cls.from_json(data["left"]), cls.from_json(data["right"]))


def build_min_tree(word: Sequence[int]) -> MinTree | None:
    if len(set(word)) != len(word):
        raise ValueError(f"word {tuple(word)!r} has repeated letters")
    if not word:
        return None
    k = min(range(len(word)), key=word.__getitem__)
    return MinTree(word[k], build_min_tree(word[:k]), build_min_tree(word[k + 1:]))


def read_word(tree: MinTree | None) -> Perm:
    if tree is None:
        return ()
    return read_word(tree.left) + (tree.label,) + read_word(tree.right)


def nodes(tree: MinTree | None) -> Iterator[MinTree]:
    if tree is not None:
        yield tree
        yield from nodes(tree.left)
        yield from nodes(tree.right)


def find(tree: MinTree | None, label: int) -> MinTree | None:
    return next((v for v in nodes(tree) if v.label == label), None)


def rightmost_path(tree: MinTree | None) -> list[int]:
    path = []
    while tree is not None:
        path.append(tree.label)
        tree = tree.right
    return path


def two_child_nodes(tree: MinTree | None) -> list[int]:
    return sorted(v.label for v in nodes(tree) if v.children == 2)


def has_lone_left_child(tree: MinTree | None) -> bool:
    return any(v.left is not None and v.right is None for v in nodes(tree))


def foata_strehl(tree: MinTree, s: int) -> MinTree:
    """Swap the two subtrees of node ``s``; returns a new tree."""
    target = find(tree, s)
    if target is None or target.children != 2:
        raise ValueError(f"node {s} does not have two children")

    def swap(v: MinTree | None) -> MinTree | None:
        if v is None:
            return None
        if v.label == s:
            return MinTree(v.label, v.right, v.left)
        return MinTree(v.label, swap(v.left), swap(v.right))

    return swap(tree)


def fs_orbit(perm: Sequence[int]) -> frozenset[Perm]:
    """All permutations reachable by Foata-Strehl swaps."""
    tree = build_min_tree(tuple(perm))
    labels = two_child_nodes(tree)
    orbit = set()
    # swaps commute and are involutions, so subsets of nodes enumerate the orbit
    for mask in product((False, True), repeat=len(labels)):
        t = tree
        for s, on in zip(labels, mask):
            if on:
                t = foata_strehl(t, s)
        orbit.add(read_word(t))
    return frozenset(orbit)


def is_R_perm(perm: Sequence[int]) -> bool:
    """No double descents and no final descent, via the tree criterion."""
    return not has_lone_left_child(build_min_tree(tuple(perm)))


def is_R_perm_direct(perm: Sequence[int]) -> bool:
    n = len(perm)
    return not has_double_descent(perm) and not (n >= 2 and perm[-2] > perm[-1])


def is_simsun(perm: Sequence[int]) -> bool:
    """Removing the k largest entries never leaves a double descent, for every k."""
    perm = tuple(perm)
    for k in range(len(perm)):
        cut = len(perm) - k
        if has_double_descent([v for v in perm if v <= cut]):
            return False
    return True


def in_simsun_class(perm: Sequence[int]) -> bool:
    """Simsun and ending with n."""
    return bool(perm) and perm[-1] == len(perm) and is_simsun(perm)


def is_simsun_tree(tree: MinTree | None) -> bool:
    if tree is None:
        return False
    n = sum(1 for _ in nodes(tree))
    path = rightmost_path(tree)
    if path[-1] != n or has_lone_left_child(tree):
        return False
    on_path = set(path)
    return all(
        v.left.label > v.right.label
        for v in nodes(tree)
        if v.children == 2 and v.label not in on_path
    )


def cd_monomial(perm: Sequence[int]) -> str:
    """Descent string with ``-+`` -> d and each remaining ``+`` -> c."""
    if not in_simsun_class(perm):
        raise ValueError(f"{tuple(perm)!r} is not a simsun permutation ending with its maximum")
    s = descent_string(perm)
    out = []
    i = 0
    while i < len(s):
        if s[i] == "-":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def simsun_representative(perm: Sequence[int]) -> Perm:
    """The unique simsun member (ending with n) of the Foata-Strehl orbit."""
    perm = validate(perm)
    if not is_R_perm(perm):
        raise ValueError(f"{perm!r} has a double descent or a final descent")
    n = len(perm)
    tree = build_min_tree(perm)

    def contains(v: MinTree | None, label: int) -> bool:
        return v is not None and (v.label == label or contains(v.left, label) or contains(v.right, label))

    def normalize(v: MinTree | None, toward_max: bool) -> MinTree | None:
        if v is None:
            return None
        left, right = v.left, v.right
        if v.children == 2:
            if toward_max:
                # the branch holding n goes right, making n the rightmost node
                if contains(left, n):
                    left, right = right, left
            elif left.label < right.label:
                left, right = right, left
        return MinTree(
            v.label,
            normalize(left, False),
            normalize(right, toward_max and contains(right, n)),
        )

    rep = read_word(normalize(tree, True))
    if not in_simsun_class(rep):
        raise AssertionError(f"representative {rep!r} of {perm!r} is not simsun")
    return rep


# ---------------------------------------------------------------------------
# Dyck paths as strings over "U"/"D"
# ---------------------------------------------------------------------------

def is_dyck(path: str) -> bool:
    height = 0
    for step in path:
        if step not in "UD":
            return False
        height += 1 if step == "U" else -1
        if height < 0:
            return False
    return height == 0


def step_levels(path: str) -> list[int]:
    """Level of a step: y-coordinate of its higher endpoint."""
    levels = []
    height = 0
    for step in path:
        if step == "U":
            height += 1
            levels.append(height)
        else:
            levels.append(height)
            height -= 1
    return levels


def dyck_path_of(perm: Sequence[int]) -> str:
    """U for an internal node i of T(perm), D for a leaf, i = 1..2*floor(n/2)."""
    perm = validate(perm)
    if not is_downup(perm):
        raise ValueError(f"{perm!r} is not down-up")
    tree = build_min_tree(perm)
    kids = {v.label: v.children for v in nodes(tree)}
    return "".join("U" if kids[i] else "D" for i in range(1, 2 * (len(perm) // 2) + 1))
