"""Generating-function identities, certified coefficient by coefficient.

Identities whose denominators have non-unit constant terms in the t-polynomial
ring (``1 - t``, ``h - t``) are checked by cross-multiplying, never by dividing.

Convention: ``F(t,u) = sum_{n>=1} A_n(t) u^n/n!`` has no constant term.  The
PDE is stated for the normalized ``1 + F/t``, i.e. the generating function of
``t^d_hat`` including the empty permutation.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .enumerators import alt_eulerian_triangle, catalan, classical_eulerian_row, euler_numbers
from .exactalg import DEFAULT_ORDER, Poly, Series1, Series2
from .report import Report
from .symfun import fhat_poly


def tan_sec_series(N: int = DEFAULT_ORDER) -> Series1:
    """tan x + sec x from the Euler numbers."""
    return Series1.from_egf(euler_numbers(N), N)


def _t_poly(row) -> Poly:
    # row = (A(n,1), ..., A(n,n)) -> sum A(n,k) t^k
    return Poly((0,) + tuple(row), "t")


def F_from_triangle(N: int = DEFAULT_ORDER) -> Series2:
    """sum_{n>=1} A_hat_n(t) u^n/n! from the recurrence triangle."""
    rows = alt_eulerian_triangle(N)
    return Series2(
        [Poly([], "t")] + [_t_poly(rows[n]) * Fraction(1, factorial(n)) for n in range(1, N + 1)],
        N,
    )


def F_normalized(N: int = DEFAULT_ORDER) -> Series2:
    """1 + F/t: generating function of t^d_hat over all n >= 0."""
    F = F_from_triangle(N)
    return Series2([Poly([1], "t")] + [p.shift(-1) for p in F.coeffs[1:]], N)


def E_from_classical(N: int = DEFAULT_ORDER) -> Series2:
    """sum_{n>=1} A_n(t) u^n/n! for the classical Eulerian polynomials."""
    return Series2(
        [Poly([], "t")]
        + [_t_poly(classical_eulerian_row(n)) * Fraction(1, factorial(n)) for n in range(1, N + 1)],
        N,
    )


def _u_times_t_minus_1(N: int) -> Series2:
    return Series2([0, Poly([-1, 1], "t")], N)


def verify_final_F(N: int = 12) -> Series2:
    """(h(u(t-1)) - t) F - t (1 - h(u(t-1))) with h = tan + sec; zero iff the identity holds."""
    h = tan_sec_series(N).compose(_u_times_t_minus_1(N))
    F = F_from_triangle(N)
    t = Series2.t(N)
    return (h - t) * F - t * (1 - h)


def verify_egf_eulerian(N: int = 12) -> Series2:
    """Same cross-multiplied check for the classical E(t,u) with exp."""
    e = Series1.from_egf([1] * (N + 1), N).compose(_u_times_t_minus_1(N))
    E = E_from_classical(N)
    t = Series2.t(N)
    return (e - t) * E - t * (1 - e)


def verify_pde(N: int = 10) -> Series2:
    """G^2 - G - u G_u - (1 - t) G_t for G = 1 + F/t."""
    G = F_normalized(N)
    one_minus_t = Poly([1, -1], "t")
    return G * G - G - G.u_d_du() - G.d_dt() * one_minus_t


def pde_initial_condition(N: int = 10) -> str | None:
    """Compare the t = 0 slice of 1 + F/t with tan u + sec u."""
    slice0 = F_normalized(N).at_t(0)
    target = tan_sec_series(N)
    for n in range(N + 1):
        if slice0[n] != target[n]:
            return f"u^{n}: {slice0[n]} != {target[n]}"
    return None


def power_tan_sec(m: int, N: int = DEFAULT_ORDER) -> Series1:
    return tan_sec_series(N) ** m


def _expand_over_one_minus_t(row_poly: Poly, n: int, M: int) -> list[int]:
    """Coefficients t^0..t^M of row_poly * (1 - t)^-(n+1)."""
    inv = [comb(n + j, n) for j in range(M + 1)]
    return [sum(row_poly[i] * inv[k - i] for i in range(k + 1)) for k in range(M + 1)]


def verify_fhat(n: int, M: int = 12) -> str | None:
    """Coefficients of A_hat_n(t)/(1-t)^(n+1) against f_hat_n(m), m = 1..M."""
    row = alt_eulerian_triangle(n)[n]
    coeffs = _expand_over_one_minus_t(_t_poly(row), n, M)
    f = fhat_poly(n)
    if coeffs[0] != 0:
        return f"t^0 coefficient {coeffs[0]} != 0"
    for m in range(1, M + 1):
        if coeffs[m] != f(m):
            return f"n={n}, m={m}: {coeffs[m]} != f_hat({m}) = {f(m)}"
    return None


def verify_classical_powers(n: int, M: int = 12) -> str | None:
    """A_n(t)/(1-t)^(n+1) = sum m^n t^m."""
    coeffs = _expand_over_one_minus_t(_t_poly(classical_eulerian_row(n)), n, M)
    for m in range(M + 1):
        if coeffs[m] != (m ** n if m else 0):
            return f"n={n}, m={m}: {coeffs[m]} != {m}^{n}"
    return None


def verify_H(n_max: int, m_max: int, N: int = DEFAULT_ORDER) -> str | None:
    """n! [u^n] ((tan u + sec u)^m - 1) = f_hat_n(m)."""
    for m in range(m_max + 1):
        vals = (power_tan_sec(m, N) - 1).egf_values()
        for n in range(1, n_max + 1):
            if vals[n] != fhat_poly(n)(m):
                return f"n={n}, m={m}: {vals[n]} != {fhat_poly(n)(m)}"
    return None


def G_series(N: int, M: int) -> Series2:
    """sum A_hat_n(t)/(1-t)^(n+1) u^n/n!, each t-series cut at t^M."""
    rows = alt_eulerian_triangle(N)
    coeffs = [Poly([], "t")]
    for n in range(1, N + 1):
        expanded = _expand_over_one_minus_t(_t_poly(rows[n]), n, M)
        coeffs.append(Poly(expanded, "t") * Fraction(1, factorial(n)))
    return Series2(coeffs, N)


def verify_G(N: int = 10, M: int = 10) -> str | None:
    """G (1-t)(1 - t h(u)) = t (h(u) - 1) mod t^(M+1), and [t^m] G = h(u)^m - 1."""
    G = G_series(N, M)
    h = Series2.from_series1(tan_sec_series(N))
    t = Series2.t(N)
    lhs = (G * Poly([1, -1], "t") * (1 - t * h)).truncate_t(M)
    rhs = (t * (h - 1)).truncate_t(M)
    diff = lhs - rhs
    if not diff.is_zero():
        return f"cross-multiplied residual nonzero at (u, t) = {diff.first_nonzero()}"
    for m in range(1, M + 1):
        col = Series1([p[m] for p in G.coeffs], N)
        if col != power_tan_sec(m, N) - 1:
            return f"[t^{m}] G differs from (tan+sec)^{m} - 1"
    return None


def verify_ln_tan_sec(N: int = 12) -> str | None:
    """log(tan + sec) has coefficients E_{2k}/(2k+1)! on x^(2k+1) and 0 on even powers."""
    h = tan_sec_series(N)
    log_h = h.log()
    E = euler_numbers(N)
    for n in range(N + 1):
        want = Fraction(E[n - 1], factorial(n)) if n % 2 else Fraction(0)
        if log_h[n] != want:
            return f"x^{n}: {log_h[n]} != {want}"
    return None


def verify_antiderivative(N: int = 12) -> str | None:
    """d/dx log(tan + sec) = sec = even part of tan + sec."""
    h = tan_sec_series(N)
    lhs = h.log().derivative()
    rhs = h.even_part().with_order(N - 1)
    if lhs != rhs:
        k = next(i for i in range(N) if lhs[i] != rhs[i])
        return f"x^{k}: {lhs[k]} != {rhs[k]}"
    back = h.even_part().integral()
    if back != h.log():
        return "integral of sec differs from log(tan + sec)"
    return None


def verify_tan_sec_reflection(N: int = 12) -> str | None:
    h = tan_sec_series(N)
    prod = h * h.reflect()
    if prod != Series1.one(N):
        return f"h(x)h(-x) - 1 nonzero at x^{(prod - 1).first_nonzero()}"
    return None


def R_series(N: int = DEFAULT_ORDER) -> Series1:
    """(1 + s)/(1 - s) with s(x) = tan(x*sqrt3/2)/sqrt3, built from rational coefficients.

    tan y = sum E_{2k+1} y^(2k+1)/(2k+1)!, so s has coefficient
    E_{2k+1} 3^k / (2^(2k+1) (2k+1)!) on x^(2k+1).
    """
    E = euler_numbers(N)
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1, 2):
        k = (n - 1) // 2
        coeffs[n] = Fraction(E[n] * 3 ** k, 2 ** n * factorial(n))
    s = Series1(coeffs, N)
    return (1 + s) / (1 - s)


def verify_R_identities(N: int = 12, counts: list[int] | None = None) -> str | None:
    """R(x)R(-x) = 1, the closed form of log R, and (optionally) brute-force counts."""
    R = R_series(N)
    vals = R.egf_values()
    if counts is not None:
        for n, c in enumerate(counts):
            if n <= N and vals[n] != c:
                return f"n!*[x^{n}]R = {vals[n]} but brute force gives {c}"
    if R * R.reflect() != Series1.one(N):
        return "R(x)R(-x) != 1"
    log_R = R.log()
    for n in range(N + 1):
        if n % 2 == 0:
            want = Fraction(0)
        else:
            want = 2 * vals[n - 1] / factorial(n) - (1 if n == 1 else 0)
        if log_R[n] != want:
            return f"[x^{n}] log R = {log_R[n]} != {want}"
    return None


def catalan_series(N: int) -> Series1:
    """C(y) solving C = 1 + y C^2, by fixed-point iteration (no closed form)."""
    y = Series1.x(N)
    C = Series1.one(N)
    for _ in range(N + 1):
        C = 1 + y * C * C
    return C


def H_at_zero_series(N: int) -> Series1:
    """(1 + x) C(x^2): the q = 0 endpoint."""
    C = catalan_series(N)
    x2 = Series1([0, 0, 1], N)
    return (1 + Series1.x(N)) * C.compose(x2)


def verify_H_endpoints(ehat: list[Poly], N: int) -> str | None:
    """q=1: E_hat_n(1)/n! against tan+sec; q=0: E_hat_n(0) against Catalan numbers."""
    h = tan_sec_series(N)
    H0 = H_at_zero_series(N)
    for n, p in enumerate(ehat[: N + 1]):
        if Fraction(p(1), factorial(n)) != h[n]:
            return f"q=1, n={n}: {p(1)}/{n}! != {h[n]}"
        if p(0) != catalan(n // 2):
            return f"q=0, n={n}: {p(0)} != catalan({n // 2})"
        if p(0) != H0[n]:
            return f"q=0, n={n}: {p(0)} != [x^{n}] (1+x)C(x^2)"
    return None


def residual_report(check_id: str, residual, order: int) -> Report:
    if residual.is_zero():
        return Report.of(check_id, order, None)
    return Report.of(check_id, order, f"nonzero residual at {residual.first_nonzero()}")
