"""Gluings ``S = d1 S1 + d2 S2`` and their Hilbert series identities.

Only ``gcd(d1, d2) = 1`` is enforced. The membership and non-minimality
conditions on ``d1`` and ``d2`` are reported in ``GluingValidity`` so that
technically invalid gluings can still be built and examined.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from .errors import GcdNotOne, NoDecomposition
from .factorization import InvariantId, invariant_table
from .hilbert import hilbert_series
from .semigroup import NumericalSemigroup
from .series import SparsePolynomial, TruncatedSeries, series_mul


@dataclass(frozen=True)
class GluingValidity:
    gcd_one: bool
    d1_in_s2: bool
    d2_in_s1: bool
    d1_not_minimal_generator_of_s2: bool
    d2_not_minimal_generator_of_s1: bool

    @property
    def valid(self) -> bool:
        return all(asdict(self).values())

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GluingSpec:
    """Ordered data ``(S1, S2, d1, d2)``; the order matters for harmonicity."""

    s1: NumericalSemigroup
    s2: NumericalSemigroup
    d1: int
    d2: int

    def validity(self) -> GluingValidity:
        return GluingValidity(
            gcd_one=gcd(self.d1, self.d2) == 1,
            d1_in_s2=self.d1 in self.s2,
            d2_in_s1=self.d2 in self.s1,
            d1_not_minimal_generator_of_s2=self.d1 not in self.s2.minimal_generators,
            d2_not_minimal_generator_of_s1=self.d2 not in self.s1.minimal_generators,
        )

    @property
    def generators(self) -> list[int]:
        return sorted({self.d1 * g for g in self.s1.generators} | {self.d2 * g for g in self.s2.generators})


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of a coefficientwise comparison up to degree ``trunc``."""

    passed: bool
    trunc: int
    first_mismatch: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"passed": self.passed, "trunc": self.trunc, "first_mismatch": self.first_mismatch}


def glue(spec: GluingSpec) -> tuple[NumericalSemigroup, GluingValidity]:
    if gcd(spec.d1, spec.d2) != 1:
        raise GcdNotOne(f"gcd(d1, d2) must be 1, got gcd({spec.d1}, {spec.d2}) = {gcd(spec.d1, spec.d2)}")
    return NumericalSemigroup(spec.generators), spec.validity()


def hilbert_gluing_check(spec: GluingSpec, trunc: int) -> IdentityCheck:
    """Compare ``H(S)`` with ``(1 - t^(d1 d2)) H(S1; t^d1) H(S2; t^d2)`` to degree ``trunc``."""
    s, _ = glue(spec)
    h1 = hilbert_series(spec.s1, trunc // spec.d1).substitute_power(spec.d1, trunc)
    h2 = hilbert_series(spec.s2, trunc // spec.d2).substitute_power(spec.d2, trunc)
    rhs = series_mul(h1, h2).mul_one_minus(spec.d1 * spec.d2)
    bad = hilbert_series(s, trunc).first_mismatch(rhs)
    return IdentityCheck(bad is None, trunc, bad)


def exit_set(s: NumericalSemigroup, p: int) -> list[int]:
    """``{m in S : m - p not in S}``, sorted.

    This is the Apery set when ``p`` is in S; for ``p`` outside S it is still a
    finite set, used as a stand-in so that invalid gluings can be evaluated.
    """
    if p in s and p >= 1:
        return sorted(s.apery(p))
    return [m for m in range(s.frobenius + p + 1) if m in s and (m - p) not in s]


def _decompose(n: int, da: int, sa: NumericalSemigroup, db: int, sb: NumericalSemigroup) -> tuple[int, int]:
    """``n = da x + db y`` with ``x`` in ``sa``, ``y`` in ``sb`` and ``x`` maximal."""
    if n < 0:
        raise NoDecomposition(f"{n} is negative")
    if da in sb and da >= 1:
        # y must be the least element of sb in its class mod da, i.e. the Apery entry;
        # only an invalid gluing can leave x outside sa here
        y = sb.apery(da)[(n * pow(db, -1, da)) % da]
        rest = n - db * y
        if rest >= 0 and rest % da == 0 and rest // da in sa:
            return rest // da, y
    for y in range(n // db + 1):
        rest = n - db * y
        if y in sb and rest % da == 0 and rest // da in sa:
            return rest // da, y
    raise NoDecomposition(f"{n} has no expression {da}x + {db}y with x, y in the factors")


def decompose_max(spec: GluingSpec, n: int) -> tuple[int, int]:
    """``n = d1 n' + d2 n''`` with ``n'`` in S1, ``n''`` in S2 and ``n'`` maximal."""
    return _decompose(n, spec.d1, spec.s1, spec.d2, spec.s2)


def decompose_min(spec: GluingSpec, n: int) -> tuple[int, int]:
    """``n = d1 n' + d2 n''`` with ``n''`` maximal."""
    y, x = _decompose(n, spec.d2, spec.s2, spec.d1, spec.s1)
    return x, y


def _pieces(f: "InvariantId | str") -> InvariantId:
    f = InvariantId.parse(f)
    if f not in (InvariantId.MAX_LEN, InvariantId.MIN_LEN):
        raise ValueError(f"gluing formulas cover max/min length only, not {f.value!r}")
    return f


def harmonic_gluing_violations(spec: GluingSpec, f: "InvariantId | str", trunc: int) -> list[int]:
    """Elements ``n <= trunc`` of S where ``f_S(n) != f_S1(n') + f_S2(n'')``."""
    f = _pieces(f)
    s, _ = glue(spec)
    fs = invariant_table(s, f, trunc)
    f1 = invariant_table(spec.s1, f, trunc // spec.d1)
    f2 = invariant_table(spec.s2, f, trunc // spec.d2)
    split = decompose_max if f is InvariantId.MAX_LEN else decompose_min
    bad = []
    for n in range(trunc + 1):
        if n not in s:
            continue
        x, y = split(spec, n)
        if fs(n) != f1(x) + f2(y):
            bad.append(n)
    return bad


def is_harmonic_gluing(spec: GluingSpec, f: "InvariantId | str", trunc: int) -> bool:
    return not harmonic_gluing_violations(spec, f, trunc)


def augmented_gluing_formula(
    spec: GluingSpec, f: "InvariantId | str", trunc: int
) -> tuple[TruncatedSeries, IdentityCheck]:
    """Right-hand side of the harmonic-gluing expansion of ``H_f(S)``, compared with ``H_f(S)``.

    For max length the sums run over ``A2 = Ap(S2; d1)``; for min length the
    mirrored expression runs over ``A1 = Ap(S1; d2)``.
    """
    f = _pieces(f)
    s, _ = glue(spec)
    if f is InvariantId.MAX_LEN:
        da, sa, db, sb = spec.d1, spec.s1, spec.d2, spec.s2
    else:
        da, sa, db, sb = spec.d2, spec.s2, spec.d1, spec.s1
    ap = exit_set(sb, da)
    fb = invariant_table(sb, f, max(ap))
    weighted = SparsePolynomial((db * a, fb(a)) for a in ap).expand(trunc)
    plain = SparsePolynomial((db * a, 1) for a in ap).expand(trunc)
    h = hilbert_series(sa, trunc // da).substitute_power(da, trunc)
    hf = TruncatedSeries(invariant_table(sa, f, trunc // da).values).substitute_power(da, trunc)
    rhs = series_mul(h, weighted) + series_mul(hf, plain)
    direct = TruncatedSeries(invariant_table(s, f, trunc).values)
    bad = direct.first_mismatch(rhs)
    return rhs, IdentityCheck(bad is None, trunc, bad)
