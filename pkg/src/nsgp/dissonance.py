"""Dissonance points of maximum and minimum factorization length."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AnchorUnverified, NoDissonance, UnsupportedInvariant
from .factorization import InvariantId, InvariantTable, invariant_table, length_recurrence_threshold
from .hilbert import numerator_chihat_f
from .semigroup import NumericalSemigroup

SUPPORTED = (InvariantId.MAX_LEN, InvariantId.MIN_LEN)


def _supported(f: "InvariantId | str") -> InvariantId:
    f = InvariantId.parse(f)
    if f not in SUPPORTED:
        raise UnsupportedInvariant(f"dissonance is only defined here for max/min length, not {f.value!r}")
    return f


def recurrence_step(s: NumericalSemigroup, f: "InvariantId | str") -> int:
    """Shift ``s`` with ``f(n + s) = f(n) + 1`` for large ``n``: ``n_1`` for max, ``n_k`` for min."""
    f = _supported(f)
    return s.generators[0] if f is InvariantId.MAX_LEN else s.generators[-1]


def min_anchor(s: NumericalSemigroup) -> int:
    """Anchors must exceed this value."""
    g = s.generators
    return s.frobenius + g[0] * g[-1] + s.generator_sum


def default_anchor(s: NumericalSemigroup, f: "InvariantId | str") -> int:
    g = s.generators
    return max(s.frobenius + 2 * g[0] * g[-1] + s.generator_sum, length_recurrence_threshold(s, _supported(f)))


class QuasiExtension:
    """The eventual quasilinear function ``g`` agreeing with ``f`` from ``anchor`` on.

    ``g`` is obtained by running the recurrence ``g(n + s) = g(n) + 1`` outward
    from the window ``[anchor, anchor + s)``, after checking that ``f`` obeys
    the recurrence on ``[anchor, anchor + n_1 n_k]``.
    """

    def __init__(self, s: NumericalSemigroup, f: "InvariantId | str", anchor: int | None = None):
        self.semigroup = s
        self.invariant = _supported(f)
        self.step = recurrence_step(s, self.invariant)
        explicit = anchor is not None
        anchor = default_anchor(s, self.invariant) if anchor is None else anchor
        if anchor <= min_anchor(s):
            raise ValueError(f"anchor must exceed {min_anchor(s)}, got {anchor}")
        for attempt in range(2):
            self.table = self._table(anchor)
            bad = self._first_violation(anchor)
            if bad is None:
                self.anchor = anchor
                return
            anchor *= 2
        raise AnchorUnverified(
            f"{self.invariant.value}(n + {self.step}) = {self.invariant.value}(n) + 1 fails at n = {bad}"
            + ("" if explicit else " even after doubling the anchor")
        )

    def _table(self, anchor: int) -> InvariantTable:
        g = self.semigroup.generators
        return invariant_table(self.semigroup, self.invariant, anchor + g[0] * g[-1] + self.step)

    def _first_violation(self, anchor: int) -> int | None:
        g = self.semigroup.generators
        f = self.table
        for x in range(anchor, anchor + g[0] * g[-1] + 1):
            if f(x + self.step) != f(x) + 1:
                return x
        return None

    def __call__(self, n: int) -> int:
        # representative of n's class in [anchor, anchor + step)
        t = (self.anchor - n + self.step - 1) // self.step
        r = n + t * self.step
        return self.table(r) - t


def quasi_extension(
    s: NumericalSemigroup, f: "InvariantId | str", n: int, anchor: int | None = None
) -> int:
    return QuasiExtension(s, f, anchor)(n)


def dissonance_bruteforce(s: NumericalSemigroup, f: "InvariantId | str", anchor: int | None = None) -> int:
    """Largest ``n >= F(S)`` with ``f(n) != g(n)``."""
    g = QuasiExtension(s, f, anchor)
    for n in range(g.anchor, s.frobenius - 1, -1):
        if g.table(n) != g(n):
            return n
    raise NoDissonance(f"{g.invariant.value} agrees with its quasilinear extension on every n >= F(S) in {s}")


def dissonance_from_numerator(
    s: NumericalSemigroup, f: "InvariantId | str", trunc: int | None = None, window: int | None = None
) -> int:
    """Degree of the augmented-Euler numerator minus ``n_1 + ... + n_k``."""
    f = _supported(f)
    poly = numerator_chihat_f(s, f, trunc, window).poly
    if not poly:
        raise NoDissonance(f"the {f.value} augmented numerator of {s} is zero")
    return poly.degree - s.generator_sum


def is_harmonic(s: NumericalSemigroup, f: "InvariantId | str", anchor: int | None = None) -> bool:
    g = QuasiExtension(s, f, anchor)
    return all(g.table(n) == g(n) for n in range(g.anchor + 1) if n in s)


@dataclass(frozen=True)
class DissonanceReport:
    invariant: InvariantId
    D_formula: int | None
    D_bruteforce: int | None
    harmonic: bool
    anchor: int

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant.value,
            "D_formula": self.D_formula,
            "D_bruteforce": self.D_bruteforce,
            "harmonic": self.harmonic,
            "anchor": self.anchor,
        }


def dissonance_report(
    s: NumericalSemigroup,
    f: "InvariantId | str",
    trunc: int | None = None,
    window: int | None = None,
    anchor: int | None = None,
) -> DissonanceReport:
    f = _supported(f)
    g = QuasiExtension(s, f, anchor)
    try:
        formula = dissonance_from_numerator(s, f, trunc, window)
    except NoDissonance:
        formula = None
    try:
        brute = dissonance_bruteforce(s, f, g.anchor)
    except NoDissonance:
        brute = None
    harmonic = all(g.table(n) == g(n) for n in range(g.anchor + 1) if n in s)
    return DissonanceReport(f, formula, brute, harmonic, g.anchor)
