"""Factorizations and the length-based invariants built on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterator

from .errors import ExplosionGuard, SingleGenerator, TableTooShort
from .semigroup import NumericalSemigroup, _sieve

DEFAULT_CAP = 10**7

Factorization = tuple[int, ...]


class InvariantId(str, enum.Enum):
    MAX_LEN = "max"
    MIN_LEN = "min"
    LEN_COUNT = "numlens"
    MIN_LINF = "linf"

    @classmethod
    def parse(cls, value: "str | InvariantId") -> "InvariantId":
        if isinstance(value, cls):
            return value
        aliases = {"M": "max", "m": "min", "l": "numlens", "maxlen": "max", "minlen": "min"}
        return cls(aliases.get(value, value))


@dataclass(frozen=True)
class InvariantTable:
    """Values of an S-invariant on ``0..bound``; zero off S."""

    id: InvariantId
    bound: int
    values: tuple[int, ...]

    def __call__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.bound:
            raise TableTooShort(f"{self.id.value} table covers 0..{self.bound}, asked for {n}")
        return self.values[n]

    def __getitem__(self, n: int) -> int:
        return self(n)

    def __len__(self) -> int:
        return self.bound + 1


def _prefix_spans(gens: tuple[int, ...], n: int) -> list[bytearray]:
    """``spans[j][x]`` is 1 iff ``x`` is a combination of ``gens[:j]``."""
    spans = [bytearray(n + 1)]
    spans[0][0] = 1
    for j in range(1, len(gens) + 1):
        spans.append(_sieve(gens[:j], n))
    return spans


def iter_factorizations(
    s: NumericalSemigroup, n: int, spans: "list[bytearray] | None" = None
) -> Iterator[Factorization]:
    """Yield every factorization of ``n``.

    Generators are assigned from last to first, and a branch is entered only if
    the residual is a combination of the generators still unassigned, so no
    dead branches are explored. ``spans`` may be a precomputed
    ``_prefix_spans`` table covering ``n``.
    """
    if n < 0 or n not in s:
        return
    gens = s.generators
    k = len(gens)
    if spans is None or len(spans[0]) <= n:
        spans = _prefix_spans(gens, n)
    a = [0] * k

    def rec(j: int, r: int) -> Iterator[Factorization]:
        # assign gens[j-1]; residual r is known to lie in the span of gens[:j]
        if j == 0:
            yield tuple(a)
            return
        g = gens[j - 1]
        span = spans[j - 1]
        for c in range(r // g + 1):
            rest = r - c * g
            if span[rest]:
                a[j - 1] = c
                yield from rec(j - 1, rest)
        a[j - 1] = 0

    yield from rec(k, n)


def factorizations(
    s: NumericalSemigroup, n: int, cap: int = DEFAULT_CAP, spans: "list[bytearray] | None" = None
) -> list[Factorization]:
    """All factorizations of ``n`` in lexicographic order (empty if ``n`` is not in S)."""
    out: list[Factorization] = []
    for a in iter_factorizations(s, n, spans):
        out.append(a)
        if len(out) > cap:
            raise ExplosionGuard(f"{n} has more than {cap} factorizations in {s}")
    out.sort()
    return out


def length_sum(s: NumericalSemigroup, n: int, cap: int = DEFAULT_CAP) -> int:
    """Sum of the lengths of all factorizations of ``n``."""
    return sum(sum(a) for a in factorizations(s, n, cap))


def generator_gap_gcd(s: NumericalSemigroup) -> int:
    if s.k < 2:
        raise SingleGenerator(f"{s} has a single generator")
    g = s.generators
    return reduce(gcd, (g[i] - g[i - 1] for i in range(1, len(g))))


def length_recurrence_threshold(s: NumericalSemigroup, id: "InvariantId | str") -> int:
    """Least ``T`` such that ``M(n + n_1) = M(n) + 1`` (resp. ``m(n + n_k) = m(n) + 1``) for all ``n >= T``.

    Not the least such value, but a proven one: a longest factorization of
    ``n + n_1`` avoiding ``n_1`` has every other coefficient below ``n_1``
    (trade ``n_1`` copies of ``n_i`` for ``n_i`` copies of ``n_1`` otherwise),
    so ``n + n_1 <= (n_1 - 1)(n_2 + ... + n_k)``. Shortest factorizations of
    ``n + n_k`` are handled the same way. ``n`` must also lie in S.
    """
    id = InvariantId.parse(id)
    g = s.generators
    if id is InvariantId.MAX_LEN:
        step = g[0]
        trade = (g[0] - 1) * (sum(g) - g[0])
    elif id is InvariantId.MIN_LEN:
        step = g[-1]
        trade = (g[-1] - 1) * (sum(g) - g[-1])
    else:
        raise ValueError(f"no recurrence threshold for {id.value!r}")
    return max(s.frobenius + 1, trade - step + 1)


def _extremal_lengths(s: NumericalSemigroup, bound: int, pick) -> list[int]:
    vals = [0] * (bound + 1)
    for n in range(1, bound + 1):
        if n not in s:
            continue
        vals[n] = 1 + pick(vals[n - g] for g in s.generators if n - g in s)
    return vals


def length_sets(s: NumericalSemigroup, bound: int) -> list[int]:
    """Length sets on ``0..bound`` as bitsets: bit ``j`` of entry ``n`` is set iff ``j`` is in L(n)."""
    sets = [0] * (bound + 1)
    sets[0] = 1
    for n in range(1, bound + 1):
        acc = 0
        for g in s.generators:
            if g > n:
                break
            acc |= sets[n - g]
        sets[n] = acc << 1
    return sets


def _min_linf(s: NumericalSemigroup, bound: int, cap: int) -> list[int]:
    vals = [0] * (bound + 1)
    spans = _prefix_spans(s.generators, bound)
    for n in range(1, bound + 1):
        if n in s:
            vals[n] = min(max(a) for a in factorizations(s, n, cap, spans))
    return vals


def invariant_table(
    s: NumericalSemigroup, id: "InvariantId | str", bound: int, cap: int = DEFAULT_CAP
) -> InvariantTable:
    id = InvariantId.parse(id)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if id is InvariantId.MAX_LEN:
        vals = _extremal_lengths(s, bound, max)
    elif id is InvariantId.MIN_LEN:
        vals = _extremal_lengths(s, bound, min)
    elif id is InvariantId.LEN_COUNT:
        vals = [b.bit_count() for b in length_sets(s, bound)]
    else:
        vals = _min_linf(s, bound, cap)
    return InvariantTable(id, bound, tuple(vals))
