"""Numerical semigroups with a fixed generating set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import EmptyGenerators, GcdNotOne, GeneratorTooLarge, NotAnElement

MAX_GENERATOR = 2**31


@dataclass(frozen=True)
class MembershipTable:
    """Membership bits for ``0..bound``; ``bits[n]`` is 1 iff ``n`` is in S."""

    bound: int
    bits: bytes

    def __getitem__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.bound:
            raise IndexError(f"{n} is beyond the table bound {self.bound}")
        return bool(self.bits[n])

    def __len__(self) -> int:
        return self.bound + 1

    def elements(self) -> list[int]:
        return [n for n, b in enumerate(self.bits) if b]


def _sieve(gens: Sequence[int], bound: int) -> bytearray:
    bits = bytearray(bound + 1)
    if bound < 0:
        return bits
    bits[0] = 1
    for g in gens:
        # unbounded-coin forward pass: after generator g, bits holds <gens[:i+1]>
        for n in range(g, bound + 1):
            if bits[n - g]:
                bits[n] = 1
    return bits


class NumericalSemigroup:
    """``S = <n_1, ..., n_k>`` with the generating set kept exactly as given.

    Generators are sorted and deduplicated. Non-minimal generating sets are
    accepted; every complex and numerator is computed relative to the stored
    generators, and ``is_minimal`` reports whether any of them is redundant.
    """

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyGenerators("generator list is empty")
        if gens[0] < 1:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if gens[-1] > MAX_GENERATOR:
            raise GeneratorTooLarge(f"generator {gens[-1]} exceeds {MAX_GENERATOR}")
        g = reduce(gcd, gens)
        if g != 1:
            raise GcdNotOne(f"gcd must be 1 (gcd of {gens} is {g})")
        self.generators: tuple[int, ...] = tuple(gens)
        self._bits = _sieve(self.generators, self.generators[0] * self.generators[-1])

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumericalSemigroup) and other.generators == self.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def generator_sum(self) -> int:
        """``n_[k]``, the sum of all generators."""
        return sum(self.generators)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        out = []
        for i, g in enumerate(self.generators):
            others = self.generators[:i] + self.generators[i + 1 :]
            if not _sieve(others, g)[g]:
                out.append(g)
        return tuple(out)

    @property
    def is_minimal(self) -> bool:
        return self.minimal_generators == self.generators

    @cached_property
    def frobenius(self) -> int:
        """Largest integer not in S; -1 for ``<1>``."""
        # Schur: F(S) <= n_1 n_k - n_1 - n_k, so the construction sieve covers every gap.
        for n in range(len(self._bits) - 1, -1, -1):
            if not self._bits[n]:
                return n
        return -1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self._bits[n])

    def membership_table(self, bound: int) -> MembershipTable:
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        f = self.frobenius
        if bound <= f:
            return MembershipTable(bound, bytes(self._bits[: bound + 1]))
        return MembershipTable(bound, bytes(self._bits[: f + 1]) + b"\x01" * (bound - f))

    def apery(self, p: int) -> list[int]:
        """Apery set of ``p``; entry ``r`` is the least element of S congruent to ``r`` mod ``p``."""
        if p < 1 or p not in self:
            raise NotAnElement(f"{p} is not a positive element of {self}")
        out: list[int | None] = [None] * p
        missing = p
        n = 0
        while missing:
            if n in self and out[n % p] is None:
                out[n % p] = n
                missing -= 1
            n += 1
        return out  # type: ignore[return-value]

    def elements_up_to(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n in self]

    def gaps(self) -> list[int]:
        return [n for n in range(self.frobenius + 1) if n not in self]


def new_semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(gens)


def frobenius(s: NumericalSemigroup) -> int:
    return s.frobenius


def apery(s: NumericalSemigroup, p: int) -> list[int]:
    return s.apery(p)


def membership_table(s: NumericalSemigroup, bound: int) -> MembershipTable:
    return s.membership_table(bound)
