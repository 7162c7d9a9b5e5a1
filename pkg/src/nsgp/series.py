"""Exact truncated power series and sparse integer polynomials.

Coefficients are Python integers throughout, so arithmetic is exact and
cannot overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N``, an element of Z[[t]] known to degree ``N``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls((0,) * (trunc + 1))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]], trunc: int) -> "TruncatedSeries":
        c = [0] * (trunc + 1)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, v in items:
            if 0 <= e <= trunc:
                c[e] += v
        return cls(tuple(c))

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.trunc:
            raise IndexError(f"degree {n} is beyond the truncation {self.trunc}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, trunc: int) -> "TruncatedSeries":
        if trunc > self.trunc:
            raise ValueError(f"cannot extend a series known to degree {self.trunc} to {trunc}")
        return TruncatedSeries(self.coeffs[: trunc + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __mul__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def mul_one_minus(self, e: int) -> "TruncatedSeries":
        """Multiply by ``1 - t^e``."""
        c = list(self.coeffs)
        for n in range(len(c) - 1, e - 1, -1):
            c[n] -= c[n - e]
        return TruncatedSeries(tuple(c))

    def div_one_minus(self, e: int) -> "TruncatedSeries":
        """Divide by ``1 - t^e``, i.e. multiply by ``1 + t^e + t^2e + ...``."""
        c = list(self.coeffs)
        for n in range(e, len(c)):
            c[n] += c[n - e]
        return TruncatedSeries(tuple(c))

    def substitute_power(self, d: int, trunc: int | None = None) -> "TruncatedSeries":
        """``f(t^d)``, truncated at ``trunc`` (default: as far as this series determines it)."""
        if trunc is None:
            trunc = d * self.trunc + d - 1
        if trunc > d * self.trunc + d - 1:
            raise ValueError(f"f(t^{d}) is only determined to degree {d * self.trunc + d - 1}")
        c = [0] * (trunc + 1)
        for i, v in enumerate(self.coeffs):
            if d * i > trunc:
                break
            c[d * i] = v
        return TruncatedSeries(tuple(c))

    def first_mismatch(self, other: "TruncatedSeries") -> int | None:
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(e, c) for e, c in enumerate(self.coeffs) if c]


def _common(a: TruncatedSeries, b: TruncatedSeries) -> int:
    return min(a.trunc, b.trunc)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common(a, b)
    return TruncatedSeries(tuple(x - y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller truncation degree."""
    n = _common(a, b)
    # iterate over the sparser operand
    if sum(1 for x in a.coeffs[: n + 1] if x) > sum(1 for x in b.coeffs[: n + 1] if x):
        a, b = b, a
    bc = b.coeffs
    out = [0] * (n + 1)
    for i, x in enumerate(a.coeffs[: n + 1]):
        if not x:
            continue
        for j in range(n - i + 1):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def expand_geometric(e: int, trunc: int) -> TruncatedSeries:
    """``1 / (1 - t^e)`` to degree ``trunc``."""
    if e < 1:
        raise ValueError("exponent must be positive")
    return TruncatedSeries(tuple(1 if n % e == 0 else 0 for n in range(trunc + 1)))


def z_series(s: NumericalSemigroup, trunc: int) -> TruncatedSeries:
    """``prod 1/(1 - t^n_i)``; coefficient ``n`` counts factorizations of ``n``."""
    out = TruncatedSeries.from_terms({0: 1}, trunc)
    for g in s.generators:
        out = out.div_one_minus(g)
    return out


def lambda_series(s: NumericalSemigroup, trunc: int) -> TruncatedSeries:
    """``sum t^n_i / (1 - t^n_i)``."""
    c = [0] * (trunc + 1)
    for g in s.generators:
        for n in range(g, trunc + 1, g):
            c[n] += 1
    return TruncatedSeries(tuple(c))


def lambda_times(series: TruncatedSeries, s: NumericalSemigroup) -> TruncatedSeries:
    """``lambda(t) * series`` in O(kN), one ``t^n_i / (1 - t^n_i)`` factor at a time."""
    n = series.trunc
    out = [0] * (n + 1)
    for g in s.generators:
        shifted = TruncatedSeries((0,) * min(g, n + 1) + series.coeffs[: max(n + 1 - g, 0)])
        for e, c in enumerate(shifted.div_one_minus(g).coeffs):
            out[e] += c
    return TruncatedSeries(tuple(out))


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(t(?:\s*\^\s*(\d+))?)?")


class SparsePolynomial:
    """Integer polynomial stored as ``exponent -> nonzero coefficient``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "SparsePolynomial":
        return cls((e, c) for e, c in enumerate(coeffs) if c)

    @classmethod
    def parse(cls, text: str) -> "SparsePolynomial":
        """Parse the text format produced by ``str``, e.g. ``"1 - t^18 - 2t^60"``."""
        src = text.replace("−", "-").replace(" ", "")
        if src in ("", "0"):
            return cls()
        terms = []
        pos = 0
        while pos < len(src):
            m = _TERM.match(src, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial at {src[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) else 1
            else:
                exp = 0
            terms.append((exp, sign * coef))
            pos = m.end()
        return cls(terms)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return list(self._terms.items())

    @property
    def degree(self) -> float | int:
        return max(self._terms) if self._terms else float("-inf")

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._terms == other._terms
        if isinstance(other, str):
            return self == SparsePolynomial.parse(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return SparsePolynomial(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return SparsePolynomial(out)

    def expand(self, trunc: int) -> TruncatedSeries:
        return TruncatedSeries.from_terms(self._terms, trunc)

    def over(self, denominator: Iterable[int], trunc: int) -> TruncatedSeries:
        """Expand ``self / prod (1 - t^e)`` to degree ``trunc``."""
        out = self.expand(trunc)
        for e in denominator:
            out = out.div_one_minus(e)
        return out

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePolynomial({str(self)!r})"


def numerator_extract(series: TruncatedSeries, s: NumericalSemigroup) -> SparsePolynomial:
    """Multiply ``series`` by ``prod (1 - t^n_i)`` and keep degrees ``0..N``.

    Each coefficient only reads the series at degrees ``<= N``, so the result is
    exact on the whole range.
    """
    out = series
    for g in s.generators:
        out = out.mul_one_minus(g)
    return SparsePolynomial.from_coefficients(out.coeffs)


def is_stably_zero(p: SparsePolynomial, trunc: int, window: int) -> bool:
    """True iff ``p`` has no term with exponent in ``(trunc - window, trunc]``."""
    if window < 1:
        raise ValueError("window must be at least 1")
    return not any(trunc - window < e <= trunc for e in p.terms)
