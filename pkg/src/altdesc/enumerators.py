"""Counting objects: Euler numbers, alternating Eulerian triangle, q-analogs,
ab/cd-indices, SWG counts, and weighted Dyck path sums.

Most objects are computed along several independent routes so that the
routes can be checked against each other.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence

from .exactalg import BiPoly, NCPoly, Poly, q_int
from .mintree import cd_monomial, dyck_path_of, in_simsun_class, is_R_perm_direct, step_levels
from .perms import (
    DEFAULT_CAP,
    append_max,
    check_cap,
    enumerate_downup,
    enumerate_sn,
    enumerate_tilde,
)
from .stats import (
    alt_descent_set,
    altdesc_from_code,
    count_pattern,
    d3,
    d3_set,
    d_hat,
    des,
    descent_set,
    i3,
    i_hat,
    major_index,
)


def euler_numbers(N: int) -> list[int]:
    """E_0..E_N by the boustrophedon (Seidel-Entringer-Arnold) triangle."""
    if N < 0:
        raise ValueError("N must be non-negative")
    out = [1]
    row = [1]
    for n in range(1, N + 1):
        new = [0]
        for v in reversed(row):
            new.append(new[-1] + v)
        row = new
        out.append(row[-1])
    return out


@lru_cache(maxsize=None)
def _euler_upto(N: int) -> tuple[int, ...]:
    return tuple(euler_numbers(N))


def euler(n: int) -> int:
    return _euler_upto(max(n, 16))[n]


def catalan(m: int) -> int:
    c = [1]
    for k in range(m):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[m]


# ---------------------------------------------------------------------------
# alternating Eulerian numbers
# ---------------------------------------------------------------------------

def alt_eulerian_row_bruteforce(n: int, cap: int | None = DEFAULT_CAP) -> tuple[int, ...]:
    """(A(n,1), ..., A(n,n)) from the alternating descent histogram."""
    if n == 0:
        return (1,)
    hist = Counter(d_hat(p) for p in enumerate_sn(n, cap))
    return tuple(hist.get(k, 0) for k in range(n))


def alt_eulerian_triangle(N: int) -> list[tuple[int, ...]]:
    """Rows 0..N from the convolution recurrence seeded with A(n,1) = E_n.

    Row 0 is ``(1,)``: the empty permutation has no alternating descents.
    """
    E = euler_numbers(N)
    # A[n][k] for k = 1..n (index k); A[0][1] = 1
    A: list[list[int]] = [[0, 1]]

    def get(i: int, k: int) -> int:
        row = A[i]
        return row[k] if 0 <= k < len(row) else 0

    for n in range(1, N + 1):
        row = [0] * (n + 2)
        row[1] = E[n]
        A.append(row)
        for k in range(0, n):
            inner = sum(
                comb(n, i) * get(i, j + 1) * get(n - i, k - j + 1)
                for i in range(1, n)
                for j in range(k + 1)
            )
            num = inner + (k + 1 - n) * row[k + 1]
            q, r = divmod(num, k + 1)
            if r:
                raise ArithmeticError(f"recurrence division not exact at n={n}, k={k}")
            if k + 2 <= n:
                row[k + 2] = q
            elif q != 0:
                # k = n-1 predicts A(n, n+1), which must vanish
                raise ArithmeticError(f"recurrence predicts A({n},{n + 1}) = {q}")
    return [tuple(A[0][1:2])] + [tuple(A[n][1 : n + 1]) for n in range(1, N + 1)]


def ahat_poly(n: int, cap: int | None = DEFAULT_CAP) -> Poly:
    """Sum over S_n of t^(alternating descents + 1)."""
    if n < 1:
        raise ValueError("n >= 1")
    return Poly((0,) + alt_eulerian_row_bruteforce(n, cap), "t")


def classical_eulerian_poly(n: int, cap: int | None = DEFAULT_CAP) -> Poly:
    if n < 1:
        raise ValueError("n >= 1")
    hist = Counter(des(p) for p in enumerate_sn(n, cap))
    return Poly([0] + [hist.get(k, 0) for k in range(n)], "t")


def classical_eulerian_row(n: int) -> tuple[int, ...]:
    """A(n,1..n) by the standard recurrence (no enumeration)."""
    row = [1]
    for m in range(2, n + 1):
        prev = [0] + row + [0]
        row = [k * prev[k] + (m - k + 1) * prev[k - 1] for k in range(1, m + 1)]
    return tuple(row) if n >= 1 else (1,)


# ---------------------------------------------------------------------------
# bivariate and q-polynomials
# ---------------------------------------------------------------------------

def ahat_bivariate(n: int, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Sum over S_n of t^d_hat q^i_hat."""
    return BiPoly.from_pairs((d_hat(p), i_hat(p)) for p in enumerate_sn(n, cap))


def code_space(k: int) -> Iterator[tuple[int, ...]]:
    """All of C_k."""
    if k == 0:
        yield ()
        return
    for head in range(k + 1):
        for tail in code_space(k - 1):
            yield (head,) + tail


def ahat_bivariate_via_codes(n: int) -> BiPoly:
    """Sum over C_{n-1} of t^|D_hat(code)| q^(sum of code)."""
    if n == 0:
        return BiPoly({(0, 0): 1})
    return BiPoly.from_pairs(
        (len(altdesc_from_code(c, n)), sum(c)) for c in code_space(n - 1)
    )


def d3_i3_tilde(n: int, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Sum over S~_{n+1} of t^d3 q^i3."""
    return BiPoly.from_pairs((d3(p), i3(p)) for p in enumerate_tilde(n + 1, cap))


def d3_maj_transport(n: int, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Sum over S_n of t^d3(omega with n+1 appended) q^maj(omega)."""
    return BiPoly.from_pairs((d3(append_max(p)), major_index(p)) for p in enumerate_sn(n, cap))


def _ehat_shift(n: int) -> int:
    return n * n // 4


def ehat_poly(n: int, cap: int | None = DEFAULT_CAP) -> Poly:
    """q^(-floor(n^2/4)) times the i_hat generating function of down-up perms."""
    hist = Counter(i_hat(p) - _ehat_shift(n) for p in enumerate_downup(n, cap))
    return _poly_from_hist(hist)


def ehat_poly_via_pattern(n: int, cap: int | None = DEFAULT_CAP) -> Poly:
    """Sum over down-up perms of q^(number of 31-2 occurrences)."""
    hist = Counter(count_pattern(p, "31-2") for p in enumerate_downup(n, cap))
    return _poly_from_hist(hist)


def _poly_from_hist(hist: Counter) -> Poly:
    if not hist:
        return Poly([], "q")
    if min(hist) < 0:
        raise ArithmeticError("negative exponent in histogram")
    return Poly([hist.get(k, 0) for k in range(max(hist) + 1)], "q")


# ---------------------------------------------------------------------------
# Dyck paths
# ---------------------------------------------------------------------------

def enumerate_dyck(m: int) -> Iterator[str]:
    """Dyck paths of length 2m, lexicographic with U < D."""

    def extend(prefix: str, ups: int, height: int):
        if len(prefix) == 2 * m:
            yield prefix
            return
        if ups < m:
            yield from extend(prefix + "U", ups + 1, height + 1)
        if height > 0:
            yield from extend(prefix + "D", ups, height - 1)

    return extend("", 0, 0)


def dyck_weight(path: str, parity: str) -> Poly:
    """Product of [level]_q over steps; odd parity uses [level+1]_q on down-steps."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    w = Poly([1], "q")
    for step, level in zip(path, step_levels(path)):
        bump = 1 if parity == "odd" and step == "D" else 0
        w = w * q_int(level + bump)
    return w


def dyck_weighted_sum(m: int, parity: str) -> Poly:
    total = Poly([], "q")
    for path in enumerate_dyck(m):
        total = total + dyck_weight(path, parity)
    return total


def ehat_poly_via_dyck(n: int) -> Poly:
    return dyck_weighted_sum(n // 2, "even" if n % 2 == 0 else "odd")


def dyck_fiber_polys(n: int, cap: int | None = DEFAULT_CAP) -> dict[str, Poly]:
    """For each Dyck path, the 31-2 generating function of its down-up fiber."""
    fibers: dict[str, Counter] = {}
    for p in enumerate_downup(n, cap):
        fibers.setdefault(dyck_path_of(p), Counter())[count_pattern(p, "31-2")] += 1
    return {path: _poly_from_hist(h) for path, h in fibers.items()}


# ---------------------------------------------------------------------------
# alternating descent sets, ab- and cd-indices
# ---------------------------------------------------------------------------

def _check_subset(S: Sequence[int], n: int) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    if any(not 1 <= s <= n - 1 for s in S):
        raise ValueError(f"{S!r} is not a subset of [{n - 1}]")
    return S


def _multinomial_E(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for p in parts:
        out = out // factorial(p) * euler(p)
    return out


def _co(S: Sequence[int], n: int) -> tuple[int, ...]:
    pts = [0, *S, n]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def alpha_hat(n: int, S: Sequence[int]) -> int:
    """Number of sigma in S_n with alternating descent set inside S."""
    S = _check_subset(S, n)
    return _multinomial_E(n, _co(S, n))


def beta_hat(n: int, S: Sequence[int]) -> int:
    """Number of sigma in S_n with alternating descent set exactly S."""
    S = _check_subset(S, n)
    return sum(
        (-1) ** (len(S) - r) * alpha_hat(n, T)
        for r in range(len(S) + 1)
        for T in combinations(S, r)
    )


def _u_word(S: Sequence[int], n: int) -> str:
    S = set(S)
    return "".join("b" if i in S else "a" for i in range(1, n))


def ab_index(n: int, variant: str = "classic", cap: int | None = DEFAULT_CAP) -> NCPoly:
    """Sum of u_S weighted by descent-set (classic) or alternating-descent-set (alt) counts."""
    if variant == "classic":
        stat = descent_set
    elif variant == "alt":
        stat = alt_descent_set
    else:
        raise ValueError(f"variant must be 'classic' or 'alt', got {variant!r}")
    hist = Counter(_u_word(stat(p), n) for p in enumerate_sn(n, cap))
    return NCPoly(dict(hist), "ab")


def ab_index_alt_from_beta(n: int) -> NCPoly:
    """The alternating ab-index assembled from inclusion-exclusion counts."""
    terms = {}
    for r in range(n):
        for S in combinations(range(1, n), r):
            terms[_u_word(S, n)] = beta_hat(n, S)
    return NCPoly(terms, "ab")


def simsun_class(n: int, cap: int | None = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    check_cap(n, cap)
    # last entry n is forced, so enumerate S_{n-1} and append
    for p in enumerate_sn(n - 1, cap):
        q = append_max(p)
        if in_simsun_class(q):
            yield q


def cd_index(n: int, cap: int | None = DEFAULT_CAP) -> NCPoly:
    """Sum of cd-monomials over simsun permutations ending with n."""
    if n < 1:
        raise ValueError("n >= 1")
    return NCPoly(dict(Counter(cd_monomial(p) for p in simsun_class(n, cap))), "cd")


def cd_index_alt(n: int, cap: int | None = DEFAULT_CAP) -> NCPoly:
    """cd_index with d replaced by c^2 - d."""
    c = NCPoly.letter("c", "cd")
    d = NCPoly.letter("d", "cd")
    return cd_index(n, cap).substitute({"c": c, "d": c * c - d})


def cd_to_ab(poly: NCPoly) -> NCPoly:
    """Expand c = a + b, d = ab + ba."""
    a = NCPoly.letter("a", "ab")
    b = NCPoly.letter("b", "ab")
    return poly.substitute({"c": a + b, "d": a * b + b * a})


def count_R(n: int, cap: int | None = DEFAULT_CAP) -> int:
    """Permutations with no double descent and no final descent."""
    return sum(1 for p in enumerate_sn(n, cap) if is_R_perm_direct(p))


def phi_eval(n: int, c0: int, d0: int, cap: int | None = DEFAULT_CAP) -> int:
    return cd_index(n, cap).evaluate({"c": c0, "d": d0})


def count_no_3descents(n: int, restricted: bool, cap: int | None = DEFAULT_CAP) -> int:
    """Empty 3-descent set, over S~_{n+1} (restricted) or S_{n+1}."""
    perms = enumerate_tilde(n + 1, cap) if restricted else enumerate_sn(n + 1, cap)
    return sum(1 for p in perms if not d3_set(p))
