"""Compositions, partitions and symmetric-function values at 1^m.

No symmetric function is stored symbolically.  Each one is represented only by
its evaluation at ``x_1 = ... = x_m = 1`` (remaining variables 0), which is a
polynomial in ``m``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Callable, Iterator, Sequence

from .enumerators import euler_numbers
from .exactalg import Poly, Series1


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n, parts weakly decreasing, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def odd_partitions(n: int) -> Iterator[tuple[int, ...]]:
    return (lam for lam in partitions(n) if all(p % 2 for p in lam))


def z_lambda(lam: Sequence[int]) -> int:
    return prod(i ** r * factorial(r) for i, r in Counter(lam).items())


def co(S: Sequence[int], n: int) -> tuple[int, ...]:
    """Composition of n cut at the elements of S."""
    S = sorted(S)
    if len(set(S)) != len(S) or any(not 1 <= s <= n - 1 for s in S):
        raise ValueError(f"{tuple(S)!r} is not a subset of [{n - 1}]")
    pts = [0, *S, n]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def subset_of(gamma: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`co`: partial sums of all but the last part."""
    out, acc = [], 0
    for g in gamma[:-1]:
        acc += g
        out.append(acc)
    return tuple(out)


def multinomial(n: int, gamma: Sequence[int]) -> int:
    if sum(gamma) != n:
        raise ValueError(f"parts {tuple(gamma)!r} do not sum to {n}")
    out = factorial(n)
    for g in gamma:
        out //= factorial(g)
    return out


def multinomial_E(n: int, gamma: Sequence[int]) -> int:
    E = euler_numbers(max(gamma, default=0))
    return multinomial(n, gamma) * prod(E[g] for g in gamma)


def m_gamma_at_ones(gamma: Sequence[int], m: int) -> int:
    """Monomial quasisymmetric function M_gamma at 1^m: choose(m, #parts)."""
    return comb(m, len(gamma))


@dataclass(frozen=True)
class SeriesSpec:
    """f(x) = 1 + sum a_n x^n/n!, with ln f = sum b_n x^n/n! computed exactly."""

    name: str
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...] = field(init=False)

    def __post_init__(self):
        if self.a[0] != 1:
            raise ValueError("f(0) must be 1")
        order = len(self.a) - 1
        log = Series1.from_egf(self.a, order).log()
        object.__setattr__(self, "b", tuple(log.egf_values()))

    @property
    def order(self) -> int:
        return len(self.a) - 1

    def need(self, n: int) -> None:
        if n > self.order:
            raise ValueError(f"series {self.name!r} only known to order {self.order}, need {n}")


def exp_spec(order: int = 14) -> SeriesSpec:
    return SeriesSpec("exp", tuple(Fraction(1) for _ in range(order + 1)))


def tan_sec_spec(order: int = 14) -> SeriesSpec:
    return SeriesSpec("tan+sec", tuple(Fraction(e) for e in euler_numbers(order)))


def geometric_spec(order: int = 14) -> SeriesSpec:
    """f(x) = 1/(1-x); its b_n are (n-1)!."""
    return SeriesSpec("1/(1-x)", tuple(Fraction(factorial(k)) for k in range(order + 1)))


SPECS: dict[str, Callable[[int], SeriesSpec]] = {
    "exp": exp_spec,
    "tan+sec": tan_sec_spec,
    "geometric": geometric_spec,
}


def g_f_at_ones(spec: SeriesSpec, n: int, m: int, route: str = "compositions") -> Fraction:
    """g_{f,n}(1^m) by summing over compositions or over partitions."""
    spec.need(n)
    if route == "compositions":
        return sum(
            (multinomial(n, g) * prod(spec.a[p] for p in g) * m_gamma_at_ones(g, m)
             for g in compositions(n)),
            Fraction(0),
        )
    if route == "partitions":
        return sum(
            (Fraction(factorial(n), z_lambda(lam))
             * prod(spec.b[p] / factorial(p - 1) for p in lam)
             * m ** len(lam)
             for lam in partitions(n)),
            Fraction(0),
        )
    raise ValueError(f"unknown route {route!r}")


def g_f_poly(spec: SeriesSpec, n: int) -> Poly:
    """g_{f,n}(1^m) as a polynomial in m (partition route)."""
    spec.need(n)
    coeffs = [Fraction(0)] * (n + 1)
    for lam in partitions(n):
        coeffs[len(lam)] += Fraction(factorial(n), z_lambda(lam)) * prod(
            spec.b[p] / factorial(p - 1) for p in lam
        )
    return Poly(coeffs, "m")


def fhat_poly(n: int) -> Poly:
    """Sum over odd partitions of n!/z * prod E_{p-1}/(p-1)! * m^len."""
    E = euler_numbers(max(n, 1))
    coeffs = [Fraction(0)] * (n + 1)
    for lam in odd_partitions(n):
        coeffs[len(lam)] += Fraction(factorial(n), z_lambda(lam)) * prod(
            Fraction(E[p - 1], factorial(p - 1)) for p in lam
        )
    poly = Poly(coeffs, "m")
    if not poly.is_integral():
        raise ArithmeticError(f"f_hat_{n} has non-integer coefficients: {poly}")
    return poly


def h_f_at_ones(spec: SeriesSpec, n: int, m: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return g_f_at_ones(spec, n, m, "partitions") / factorial(n)


def _det(matrix: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            for c in range(col, size):
                a[r][c] -= factor * a[col][c]
    return det


def schur_f_at_ones(spec: SeriesSpec, lam: Sequence[int], m: int) -> Fraction:
    """Jacobi-Trudi determinant det[h_{f, lam_i - i + j}] evaluated at 1^m."""
    lam = [p for p in lam if p > 0]
    k = len(lam)
    cache: dict[int, Fraction] = {}

    def h(j: int) -> Fraction:
        if j not in cache:
            cache[j] = h_f_at_ones(spec, j, m)
        return cache[j]

    return _det([[h(lam[i] - i + j) for j in range(k)] for i in range(k)])
