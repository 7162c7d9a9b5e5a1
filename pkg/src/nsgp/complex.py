"""Squarefree divisor complexes and their (weighted, augmented) Euler characteristics.

Faces are bitmasks over generator indices: bit ``i`` stands for ``n_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import TableTooShort, TooManyGenerators
from .factorization import InvariantTable
from .semigroup import NumericalSemigroup

MAX_K = 20


@lru_cache(maxsize=64)
def subset_data(gens: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(sums, sizes)`` indexed by bitmask: ``n_F`` and ``|F|`` for every ``F`` in ``[k]``."""
    k = len(gens)
    if k > MAX_K:
        raise TooManyGenerators(f"divisor complexes support at most {MAX_K} generators, got {k}")
    sums = [0] * (1 << k)
    sizes = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        sums[mask] = sums[rest] + gens[low]
        sizes[mask] = sizes[rest] + 1
    return tuple(sums), tuple(sizes)


@dataclass(frozen=True)
class SquarefreeDivisorComplex:
    n: int
    generators: tuple[int, ...]
    faces: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.generators)

    def face_generators(self) -> list[tuple[int, ...]]:
        """Faces as tuples of generator values, ordered by size then lexicographically."""
        out = [tuple(g for i, g in enumerate(self.generators) if mask >> i & 1) for mask in self.faces]
        return sorted(out, key=lambda f: (len(f), f))

    def is_downward_closed(self) -> bool:
        for mask in self.faces:
            sub = mask
            while sub:
                sub = (sub - 1) & mask
                if sub not in self.faces:
                    return False
        return True

    def is_full_simplex(self) -> bool:
        return len(self.faces) == 1 << self.k


def divisor_complex(s: NumericalSemigroup, n: int) -> SquarefreeDivisorComplex:
    sums, _ = subset_data(s.generators)
    faces = frozenset(mask for mask, nf in enumerate(sums) if n - nf in s)
    return SquarefreeDivisorComplex(n, s.generators, faces)


def euler_char(cx: SquarefreeDivisorComplex) -> int:
    _, sizes = subset_data(cx.generators)
    return sum(-1 if sizes[mask] & 1 else 1 for mask in cx.faces)


def _covered(cx: SquarefreeDivisorComplex, f: InvariantTable) -> None:
    if cx.faces and cx.n > f.bound:
        raise TableTooShort(f"invariant table stops at {f.bound}, complex is at {cx.n}")


def weighted_euler(cx: SquarefreeDivisorComplex, f: InvariantTable) -> int:
    """``sum over faces F of (-1)^|F| f(n - n_F)``."""
    _covered(cx, f)
    sums, sizes = subset_data(cx.generators)
    total = 0
    for mask in cx.faces:
        v = f(cx.n - sums[mask])
        total += -v if sizes[mask] & 1 else v
    return total


def augmented_euler(cx: SquarefreeDivisorComplex, f: InvariantTable) -> int:
    """``sum over faces F of (-1)^|F| (f(n - n_F) + |F|)``."""
    _covered(cx, f)
    sums, sizes = subset_data(cx.generators)
    total = 0
    for mask in cx.faces:
        v = f(cx.n - sums[mask]) + sizes[mask]
        total += -v if sizes[mask] & 1 else v
    return total


def weighted_euler_all_subsets(s: NumericalSemigroup, n: int, f: InvariantTable) -> int:
    """``sum over all A in [k] of (-1)^|A| f(n - n_A)``.

    Agrees with ``weighted_euler`` because ``f`` vanishes off S; kept as an
    independent evaluation path.
    """
    if n > f.bound:
        raise TableTooShort(f"invariant table stops at {f.bound}, asked for {n}")
    sums, sizes = subset_data(s.generators)
    return sum(-f(n - a) if z & 1 else f(n - a) for a, z in zip(sums, sizes))
