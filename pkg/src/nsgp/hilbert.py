"""Rational numerators of plain and augmented Hilbert series.

Every numerator over ``prod (1 - t^n_i)`` is computed element by element from
divisor complexes and then checked against an independent series-algebra
evaluation of the same identity. Numerators with no a-priori degree bound are
certified empirically: a numerator computed to degree ``N`` is *stable* when it
has no term in the window ``(N - W, N]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .complex import augmented_euler, divisor_complex, euler_char, weighted_euler
from .errors import IdentityMismatch, NotStable, NotTwoGenerated
from .factorization import (
    DEFAULT_CAP,
    InvariantId,
    InvariantTable,
    invariant_table,
    length_recurrence_threshold,
)
from .semigroup import NumericalSemigroup
from .series import (
    SparsePolynomial,
    TruncatedSeries,
    is_stably_zero,
    lambda_times,
    numerator_extract,
)


class NumeratorForm(str, enum.Enum):
    APERY = "apery"
    CHI = "chi"
    CHIHAT = "chihat"
    SECOND_DIFFERENCE = "secdiff"
    ONE_MINUS_T = "oneminust"
    CLOSED_2GEN = "closed2gen"


@dataclass(frozen=True)
class NumeratorReport:
    form: NumeratorForm
    poly: SparsePolynomial
    certified_to: int
    stable: bool
    denominator: tuple[int, ...]

    @property
    def closed_form(self) -> bool:
        return self.form is NumeratorForm.CLOSED_2GEN

    def expand(self, trunc: int) -> TruncatedSeries:
        """The series ``poly / prod (1 - t^e)`` over the stated denominator."""
        return self.poly.over(self.denominator, trunc)

    def to_json(self) -> dict:
        return {
            "form": self.form.value,
            "denominator": list(self.denominator),
            "terms": self.poly.to_json(),
            "certified_to": self.certified_to,
            "stable": self.stable,
        }


def degree_bound(s: NumericalSemigroup) -> int:
    """Degree past which the plain, max- and min-length numerators vanish.

    Above ``max(F(S), T) + n_[k]`` every complex is the full simplex and the
    invariant obeys its recurrence on all of ``n - n_F``, so the alternating
    sums cancel; ``T`` is the larger length recurrence threshold.
    """
    t = max(
        s.frobenius,
        length_recurrence_threshold(s, InvariantId.MAX_LEN),
        length_recurrence_threshold(s, InvariantId.MIN_LEN),
    )
    return t + s.generator_sum


def default_trunc(s: NumericalSemigroup) -> int:
    g = s.generators
    return max(s.frobenius + g[0] * g[-1] + 2 * s.generator_sum + 64, degree_bound(s) + default_window(s))


def default_window(s: NumericalSemigroup) -> int:
    return s.generators[0] * s.generators[-1]


def hilbert_series(s: NumericalSemigroup, trunc: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(1 if n in s else 0 for n in range(trunc + 1)))


def augmented_series(
    s: NumericalSemigroup, f: "InvariantId | str", trunc: int, cap: int = DEFAULT_CAP
) -> TruncatedSeries:
    """``sum f(n) t^n`` to degree ``trunc``."""
    return TruncatedSeries(invariant_table(s, f, trunc, cap).values)


def numerator_apery(s: NumericalSemigroup, p: int) -> NumeratorReport:
    ap = s.apery(p)
    poly = SparsePolynomial((a, 1) for a in ap)
    return NumeratorReport(NumeratorForm.APERY, poly, poly.degree, True, (p,))


def _certify(
    s: NumericalSemigroup,
    build: Callable[[int], SparsePolynomial],
    trunc: int | None,
    window: int | None,
    strict: bool = True,
) -> tuple[SparsePolynomial, int, bool]:
    n = default_trunc(s) if trunc is None else trunc
    w = default_window(s) if window is None else window
    poly = build(n)
    if is_stably_zero(poly, n, w) or not strict:
        return poly, n, is_stably_zero(poly, n, w)
    n *= 2
    poly = build(n)
    if not is_stably_zero(poly, n, w):
        raise NotStable(f"numerator of {s} still has terms in ({n - w}, {n}]")
    return poly, n, True


def _check(label: str, direct: SparsePolynomial, via_series: SparsePolynomial) -> None:
    if direct != via_series:
        diff = direct - via_series
        raise IdentityMismatch(f"{label}: per-element and series evaluations differ at degree {min(diff.terms)}")


def chi_coefficients(s: NumericalSemigroup, trunc: int) -> SparsePolynomial:
    return SparsePolynomial.from_coefficients([euler_char(divisor_complex(s, n)) for n in range(trunc + 1)])


def numerator_chi(s: NumericalSemigroup, trunc: int | None = None, window: int | None = None) -> NumeratorReport:
    """``sum chi(Delta_n) t^n`` over ``prod (1 - t^n_i)``."""

    def build(n: int) -> SparsePolynomial:
        poly = chi_coefficients(s, n)
        _check("chi", poly, numerator_extract(hilbert_series(s, n), s))
        return poly

    poly, n, stable = _certify(s, build, trunc, window)
    return NumeratorReport(NumeratorForm.CHI, poly, n, stable, s.generators)


def _strict(f: InvariantId) -> bool:
    # min-linf has period dividing n_1 + ... + n_k, so its numerators are expected not to terminate
    return f is not InvariantId.MIN_LINF


def chi_f_coefficients(s: NumericalSemigroup, table: InvariantTable) -> SparsePolynomial:
    return SparsePolynomial.from_coefficients(
        [weighted_euler(divisor_complex(s, n), table) for n in range(table.bound + 1)]
    )


def chihat_f_coefficients(s: NumericalSemigroup, table: InvariantTable) -> SparsePolynomial:
    return SparsePolynomial.from_coefficients(
        [augmented_euler(divisor_complex(s, n), table) for n in range(table.bound + 1)]
    )


def numerator_chi_f(
    s: NumericalSemigroup,
    f: "InvariantId | str",
    trunc: int | None = None,
    window: int | None = None,
    cap: int = DEFAULT_CAP,
) -> NumeratorReport:
    """``sum chi_f(Delta_n) t^n``, the numerator of ``H_f`` over ``prod (1 - t^n_i)``."""
    f = InvariantId.parse(f)

    def build(n: int) -> SparsePolynomial:
        table = invariant_table(s, f, n, cap)
        poly = chi_f_coefficients(s, table)
        _check(f"chi_{f.value}", poly, numerator_extract(TruncatedSeries(table.values), s))
        return poly

    poly, n, stable = _certify(s, build, trunc, window, _strict(f))
    return NumeratorReport(NumeratorForm.CHI, poly, n, stable, s.generators)


def numerator_chihat_f(
    s: NumericalSemigroup,
    f: "InvariantId | str",
    trunc: int | None = None,
    window: int | None = None,
    cap: int = DEFAULT_CAP,
) -> NumeratorReport:
    """``sum chihat_f(Delta_n) t^n``, so that ``H_f = lambda H + poly z``."""
    f = InvariantId.parse(f)

    def build(n: int) -> SparsePolynomial:
        table = invariant_table(s, f, n, cap)
        poly = chihat_f_coefficients(s, table)
        rest = TruncatedSeries(table.values) - lambda_times(hilbert_series(s, n), s)
        _check(f"chihat_{f.value}", poly, numerator_extract(rest, s))
        return poly

    poly, n, stable = _certify(s, build, trunc, window, _strict(f))
    return NumeratorReport(NumeratorForm.CHIHAT, poly, n, stable, s.generators)


def numerator_second_difference(
    s: NumericalSemigroup,
    f: "InvariantId | str",
    p: int,
    trunc: int | None = None,
    window: int | None = None,
    cap: int = DEFAULT_CAP,
) -> NumeratorReport:
    """``sum (f(n) - 2f(n-p) + f(n-2p)) t^n`` over ``(1 - t^p)^2``.

    The numerator terminates only when ``f`` is eventually quasilinear with a
    period dividing ``p``; otherwise the report is unstable, which is not an
    error.
    """
    if p < 1:
        raise ValueError("shift must be positive")
    n = default_trunc(s) if trunc is None else trunc
    w = default_window(s) if window is None else window
    table = invariant_table(s, f, n, cap)
    poly = SparsePolynomial.from_coefficients(
        [table(x) - 2 * table(x - p) + table(x - 2 * p) for x in range(n + 1)]
    )
    series = TruncatedSeries(table.values)
    if poly.over((p, p), n) != series:
        raise IdentityMismatch(f"second difference with shift {p} does not re-expand to H_f")
    return NumeratorReport(NumeratorForm.SECOND_DIFFERENCE, poly, n, is_stably_zero(poly, n, w), (p, p))


def one_minus_t_form(s: NumericalSemigroup) -> NumeratorReport:
    """``(1 - t) H(S;t)``, a polynomial of degree ``F(S) + 1``."""
    top = s.frobenius + 1
    poly = SparsePolynomial.from_coefficients([(x in s) - (x - 1 in s) for x in range(top + 1)])
    return NumeratorReport(NumeratorForm.ONE_MINUS_T, poly, top, True, (1,))


def twogen_closed_forms(s: NumericalSemigroup, f: "InvariantId | str") -> NumeratorReport:
    """Closed form of the augmented numerator for ``S = <n_1, n_2>`` and max/min length."""
    f = InvariantId.parse(f)
    if s.k != 2:
        raise NotTwoGenerated(f"{s} does not have exactly two generators")
    n1, n2 = s.generators
    if f is InvariantId.MAX_LEN:
        c = -n1
    elif f is InvariantId.MIN_LEN:
        c = -n2
    else:
        raise ValueError(f"no closed form for invariant {f.value!r}")
    return NumeratorReport(NumeratorForm.CLOSED_2GEN, SparsePolynomial({n1 * n2: c}), n1 * n2, True, s.generators)
