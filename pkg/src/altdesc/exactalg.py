"""Exact arithmetic: polynomials, noncommutative polynomials and truncated series.

Everything here works over Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere.  Series carry a fixed truncation order and refuse to
mix orders.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Callable, Iterable, Mapping

DEFAULT_ORDER = 14


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _normalize(c):
    # keep ints as ints; collapse integral Fractions
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Dense univariate polynomial with exact coefficients (ascending order)."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        self.coeffs = tuple(_normalize(c) for c in _trim(list(coeffs)))
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "q") -> Poly:
        return cls([0] * k + [c], var)

    @classmethod
    def constant(cls, c, var: str = "q") -> Poly:
        return cls([c], var)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return Poly([other], self.var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return Poly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def shift(self, k: int) -> Poly:
        """Multiply by ``var**k``; negative ``k`` requires divisibility."""
        if k >= 0:
            return Poly([0] * k + list(self.coeffs), self.var)
        if any(self.coeffs[:-k]):
            raise ValueError(f"polynomial not divisible by {self.var}^{-k}")
        return Poly(self.coeffs[-k:], self.var)

    def truncate(self, degree: int) -> Poly:
        return Poly(self.coeffs[: degree + 1], self.var)

    def reversed(self, degree: int | None = None) -> Poly:
        """Return ``var**degree * p(1/var)``."""
        if degree is None:
            degree = self.degree
        if self.degree > degree:
            raise ValueError("degree too small for reversal")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return Poly(reversed(padded), self.var)

    def with_var(self, var: str) -> Poly:
        return Poly(self.coeffs, var)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self) -> dict:
        if not self.is_integral():
            raise ValueError("only integer polynomials have a JSON form")
        return {"variable": self.var, "coefficients": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> Poly:
        return cls([int(c) for c in data["coefficients"]], data["variable"])

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{k}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


# alias for integer-coefficient polynomials
IntPoly = Poly


def q_int(k: int, var: str = "q") -> Poly:
    """The q-integer ``[k]_q = 1 + q + ... + q^(k-1)``."""
    if k < 0:
        raise ValueError("q-integers are defined for k >= 0")
    return Poly([1] * k, var)


def q_factorial(n: int, var: str = "q") -> Poly:
    if n < 0:
        raise ValueError("q-factorial is defined for n >= 0")
    result = Poly([1], var)
    for i in range(1, n + 1):
        result = result * q_int(i, var)
    return result


class BiPoly:
    """Sparse polynomial in ``(t, q)`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> BiPoly:
        """Histogram of ``(t_exponent, q_exponent)`` pairs."""
        terms: dict[tuple[int, int], int] = {}
        for key in pairs:
            terms[key] = terms.get(key, 0) + 1
        return cls(terms)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __mul__(self, other: BiPoly) -> BiPoly:
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                out[a + x, b + y] = out.get((a + x, b + y), 0) + c * d
        return BiPoly(out)

    def at_t(self, t) -> Poly:
        """Specialize ``t`` to a number; result is a polynomial in ``q``."""
        deg = max((b for _, b in self.terms), default=-1)
        coeffs = [0] * (deg + 1)
        for (a, b), c in self.terms.items():
            coeffs[b] += c * t ** a
        return Poly(coeffs, "q")

    def at_q(self, q) -> Poly:
        deg = max((a for a, _ in self.terms), default=-1)
        coeffs = [0] * (deg + 1)
        for (a, b), c in self.terms.items():
            coeffs[a] += c * q ** b
        return Poly(coeffs, "t")

    def to_json(self) -> dict:
        return {
            "vars": ["t", "q"],
            "terms": [{"t": a, "q": b, "c": str(c)} for (a, b), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> BiPoly:
        return cls({(term["t"], term["q"]): int(term["c"]) for term in data["terms"]})

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("t" if a == 1 else f"t^{a}"),
                    "" if b == 0 else ("q" if b == 1 else f"q^{b}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class NCPoly:
    """Polynomial in noncommuting letters; words are strings over ``alphabet``."""

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms: Mapping[str, int] | None = None, alphabet: str = "cd"):
        self.alphabet = alphabet
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}
        for w in self.terms:
            if set(w) - set(alphabet):
                raise ValueError(f"word {w!r} not over alphabet {alphabet!r}")

    @classmethod
    def letter(cls, x: str, alphabet: str) -> NCPoly:
        return cls({x: 1}, alphabet)

    @classmethod
    def one(cls, alphabet: str) -> NCPoly:
        return cls({"": 1}, alphabet)

    def _check(self, other: NCPoly):
        if other.alphabet != self.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other: NCPoly) -> NCPoly:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(out, self.alphabet)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return NCPoly({w: c * other for w, c in self.terms.items()}, self.alphabet)
        self._check(other)
        out: dict[str, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out[u + v] = out.get(u + v, 0) + a * b
        return NCPoly(out, self.alphabet)

    def __rmul__(self, scalar):
        return self * scalar

    def __pow__(self, k: int) -> NCPoly:
        result = NCPoly.one(self.alphabet)
        for _ in range(k):
            result = result * self
        return result

    def coefficient(self, word: str) -> int:
        return self.terms.get(word, 0)

    def substitute(self, images: Mapping[str, NCPoly]) -> NCPoly:
        """Replace each letter by its image, multiplying left to right."""
        alphabets = {p.alphabet for p in images.values()}
        if len(alphabets) != 1:
            raise ValueError("substitution images must share an alphabet")
        target = alphabets.pop()
        cache: dict[str, NCPoly] = {"": NCPoly.one(target)}
        out = NCPoly({}, target)
        for word, c in self.terms.items():
            # memoize prefixes; cd-words share long prefixes
            for k in range(1, len(word) + 1):
                if word[:k] not in cache:
                    cache[word[:k]] = cache[word[: k - 1]] * images[word[k - 1]]
            out = out + cache[word] * c
        return out

    def evaluate(self, values: Mapping[str, int]):
        """Commutative scalar evaluation."""
        total = 0
        for word, c in self.terms.items():
            term = c
            for x in word:
                term *= values[x]
            total += term
        return total

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "terms": [{"word": w, "c": str(c)} for w, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> NCPoly:
        return cls({t["word"]: int(t["c"]) for t in data["terms"]}, data["alphabet"])

    def __repr__(self):
        return f"NCPoly({dict(sorted(self.terms.items()))!r}, alphabet={self.alphabet!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (-len(wc[0]), wc[0])):
            mono = _compress_word(w)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _compress_word(word: str) -> str:
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "".join(out)


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------

def _check_order(a, b):
    if a.order != b.order:
        raise ValueError(f"mixed truncation orders: {a.order} and {b.order}")


class Series1:
    """Power series in one variable over the rationals, truncated at ``x^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("order must be non-negative")
        c = list(coeffs)[: order + 1]
        if any(isinstance(x, float) for x in c):
            raise TypeError("floating-point coefficients are not allowed")
        c = [Fraction(x) for x in c]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> Series1:
        return cls([1], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> Series1:
        return cls([0, 1], order)

    @classmethod
    def from_egf(cls, values: Iterable[int], order: int = DEFAULT_ORDER) -> Series1:
        """Series with coefficients ``values[n] / n!``."""
        out, fact = [], 1
        for n, v in enumerate(values):
            if n > order:
                break
            if n:
                fact *= n
            out.append(Fraction(v, fact))
        return cls(out, order)

    def egf_values(self) -> list[Fraction]:
        """Inverse of :meth:`from_egf`: ``n! * [x^n]``."""
        out, fact = [], 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_nonzero(self) -> int | None:
        return next((n for n, c in enumerate(self.coeffs) if c), None)

    def _lift(self, other) -> Series1:
        if isinstance(other, Series1):
            _check_order(self, other)
            return other
        return Series1([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        return Series1([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series1):
            return Series1([a * other for a in self.coeffs], self.order)
        _check_order(self, other)
        N = self.order
        out = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return Series1(out, N)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series1:
        if k < 0:
            return self.inverse() ** (-k)
        result = Series1.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> Series1:
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError(f"series with constant term {a0} is not invertible")
        N = self.order
        out = [Fraction(0)] * (N + 1)
        out[0] = Fraction(1) / a0
        for n in range(1, N + 1):
            s = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out[n] = -s / a0
        return Series1(out, N)

    def __truediv__(self, other):
        if isinstance(other, Series1):
            return self * other.inverse()
        return Series1([Fraction(a) / other for a in self.coeffs], self.order)

    def derivative(self) -> Series1:
        """d/dx; the result is known only to order ``order - 1``."""
        return Series1([n * c for n, c in enumerate(self.coeffs)][1:], max(self.order - 1, 0))

    def integral(self) -> Series1:
        """Antiderivative vanishing at 0, truncated back to ``order``."""
        return Series1([0] + [Fraction(c) / (n + 1) for n, c in enumerate(self.coeffs)], self.order)

    def reflect(self) -> Series1:
        """f(-x)."""
        return Series1([c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], self.order)

    def even_part(self) -> Series1:
        return Series1([c if n % 2 == 0 else 0 for n, c in enumerate(self.coeffs)], self.order)

    def odd_part(self) -> Series1:
        return Series1([c if n % 2 else 0 for n, c in enumerate(self.coeffs)], self.order)

    def with_order(self, order: int) -> Series1:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series1(self.coeffs, order)

    def compose(self, inner):
        """``self(inner)``; ``inner`` is a Series1 or Series2 with zero constant term."""
        if isinstance(inner, Series1):
            _check_order(self, inner)
            if inner.coeffs[0] != 0:
                raise ValueError(f"inner series has constant term {inner.coeffs[0]}, need 0")
            result = Series1([self.coeffs[-1]], self.order)
            for c in reversed(self.coeffs[:-1]):
                result = result * inner + c
            return result
        if isinstance(inner, Series2):
            if inner.order != self.order:
                raise ValueError(f"mixed truncation orders: {self.order} and {inner.order}")
            if inner.coeffs[0]:
                raise ValueError(f"inner series has u-constant term {inner.coeffs[0]}, need 0")
            result = Series2.constant(self.coeffs[-1], self.order)
            for c in reversed(self.coeffs[:-1]):
                result = result * inner + c
            return result
        raise TypeError(f"cannot compose with {type(inner).__name__}")

    def exp(self) -> Series1:
        if self.coeffs[0] != 0:
            raise ValueError(f"exp needs constant term 0, got {self.coeffs[0]}")
        N = self.order
        out = [Fraction(0)] * (N + 1)
        out[0] = Fraction(1)
        for n in range(1, N + 1):
            out[n] = sum((k * self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return Series1(out, N)

    def log(self) -> Series1:
        if self.coeffs[0] != 1:
            raise ValueError(f"log needs constant term 1, got {self.coeffs[0]}")
        N = self.order
        out = [Fraction(0)] * (N + 1)
        for n in range(1, N + 1):
            s = sum((k * out[k] * self.coeffs[n - k] for k in range(1, n)), Fraction(0))
            out[n] = self.coeffs[n] - s / n
        return Series1(out, N)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Series1:
        return cls([Fraction(int(a), int(b)) for a, b in data["coeffs"]], data["order"])

    def __repr__(self):
        return f"Series1({[str(c) for c in self.coeffs]}, order={self.order})"


class Series2:
    """Series in ``u`` whose coefficients are rational polynomials in ``t``.

    Truncated at ``u^order``.  Division is only offered when the u-constant term
    is a nonzero number; anything like ``1 - t`` is not a unit here.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int = DEFAULT_ORDER):
        c = [p if isinstance(p, Poly) else Poly([p], "t") for p in list(coeffs)[: order + 1]]
        c = [p.with_var("t") for p in c]
        c += [Poly([], "t")] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> Series2:
        return cls([c if isinstance(c, Poly) else Poly([c], "t")], order)

    @classmethod
    def from_series1(cls, s: Series1) -> Series2:
        return cls([Poly([c], "t") for c in s.coeffs], s.order)

    @classmethod
    def u(cls, order: int = DEFAULT_ORDER) -> Series2:
        return cls([0, 1], order)

    @classmethod
    def t(cls, order: int = DEFAULT_ORDER) -> Series2:
        return cls([Poly([0, 1], "t")], order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_nonzero(self) -> tuple[int, int] | None:
        """``(u_exponent, t_exponent)`` of the first nonzero coefficient."""
        for n, p in enumerate(self.coeffs):
            for k, c in enumerate(p.coeffs):
                if c:
                    return n, k
        return None

    def _lift(self, other) -> Series2:
        if isinstance(other, Series2):
            _check_order(self, other)
            return other
        if isinstance(other, Series1):
            _check_order(self, other)
            return Series2.from_series1(other)
        return Series2.constant(other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        return Series2([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series2([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return Series2([a * other for a in self.coeffs], self.order)
        other = self._lift(other)
        N = self.order
        out = [Poly([], "t")] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Series2(out, N)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series2:
        result = Series2.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> Series2:
        a0 = self.coeffs[0]
        if a0.degree != 0:
            raise ZeroDivisionError(f"u-constant term {a0} is not a unit")
        inv0 = Fraction(1) / Fraction(a0[0])
        N = self.order
        out = [Poly([], "t")] * (N + 1)
        out[0] = Poly([inv0], "t")
        for n in range(1, N + 1):
            s = Poly([], "t")
            for k in range(1, n + 1):
                s = s + self.coeffs[k] * out[n - k]
            out[n] = s * (-inv0)
        return Series2(out, N)

    def d_du(self) -> Series2:
        """Partial derivative in ``u``; known only to order ``order - 1``."""
        return Series2([p * n for n, p in enumerate(self.coeffs)][1:], max(self.order - 1, 0))

    def u_d_du(self) -> Series2:
        """Euler operator ``u * d/du``; keeps the order."""
        return Series2([p * n for n, p in enumerate(self.coeffs)], self.order)

    def d_dt(self) -> Series2:
        return Series2([p.derivative() for p in self.coeffs], self.order)

    def scale_u(self, factor: Poly) -> Series2:
        """Substitute ``u -> factor * u``."""
        factor = factor if isinstance(factor, Poly) else Poly([factor], "t")
        return Series2([p * factor ** n for n, p in enumerate(self.coeffs)], self.order)

    def at_t(self, t) -> Series1:
        return Series1([p(t) for p in self.coeffs], self.order)

    def truncate_t(self, degree: int) -> Series2:
        return Series2([p.truncate(degree) for p in self.coeffs], self.order)

    def map_coeffs(self, fn: Callable[[Poly], Poly]) -> Series2:
        return Series2([fn(p) for p in self.coeffs], self.order)

    def with_order(self, order: int) -> Series2:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series2(self.coeffs, order)

    def __repr__(self):
        return f"Series2([{', '.join(str(p) for p in self.coeffs)}], order={self.order})"
