"""Partitions, finite-set maps and the enumerations the other modules consume.

Finite sets are skeletal: ``[n] = {1, ..., n}``.  Partitions are listed in
lexicographically descending order, e.g. ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded, DomainError

DEFAULT_CAP = 8


@dataclass(frozen=True, order=False)
class Partition:
    """An integer partition stored as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def factorial(self) -> int:
        """``prod_i m_i(lambda)!``."""
        out = 1
        for m in Counter(self.parts).values():
            out *= math.factorial(m)
        return out

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def union(self, other: "Partition") -> "Partition":
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [
            self.parts[i] - j - 1 + conj.parts[j] - i
            for i in range(len(self.parts))
            for j in range(self.parts[i])
        ]

    # Sorting key: larger partitions (lexicographically) come first.
    def sort_key(self):
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls.of(*data)


EMPTY = Partition(())


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")
    out = _partitions_cached(n)
    if max_rows is not None:
        out = tuple(p for p in out if len(p) <= max_rows)
    return list(out)


def partitions_up_to(D: int, max_rows: int | None = None) -> list[Partition]:
    return [p for d in range(D + 1) for p in partitions_of(d, max_rows)]


def z_lambda(lam: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    out = lam.factorial()
    for p in lam.parts:
        out *= p
    return out


def part_rk(r: int, k: int) -> set[Partition]:
    """Non-empty partitions with at most ``k`` columns and fewer than ``r`` rows."""
    if r < 0 or k < 0:
        raise DomainError("r and k must be non-negative")
    out = set()
    rows = r - 1
    if rows <= 0 or k == 0:
        return out
    for length in range(1, rows + 1):
        for combo in itertools.combinations_with_replacement(range(k, 0, -1), length):
            out.add(Partition(combo))
    return out


@dataclass(frozen=True)
class FiniteMap:
    """A function ``[n] -> [m]``; ``values[a-1]`` is the image of ``a``."""

    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != self.n:
            raise DomainError(f"map from [{self.n}] needs {self.n} values, got {len(values)}")
        if any(not 1 <= v <= self.m for v in values):
            raise DomainError(f"values {values} not in [1..{self.m}]")
        object.__setattr__(self, "values", values)

    def __call__(self, a: int) -> int:
        return self.values[a - 1]

    def fiber(self, i: int) -> tuple[int, ...]:
        return tuple(a + 1 for a, v in enumerate(self.values) if v == i)

    def fibers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.m)]
        for a, v in enumerate(self.values, start=1):
            out[v - 1].append(a)
        return tuple(tuple(f) for f in out)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.m

    @property
    def is_bijective(self) -> bool:
        return self.n == self.m and self.is_surjective

    def compose(self, inner: "FiniteMap") -> "FiniteMap":
        """``self o inner``."""
        if inner.m != self.n:
            raise DomainError("cannot compose maps with mismatched sizes")
        return FiniteMap(inner.n, self.m, tuple(self.values[v - 1] for v in inner.values))

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(n, n, tuple(range(1, n + 1)))


def check_cap(cap: int, *sizes: int) -> None:
    for s in sizes:
        if s > cap:
            raise CapExceeded(f"size {s} exceeds enumeration cap {cap}")


def maps(n: int, m: int, surjective_only: bool = False, cap: int = DEFAULT_CAP) -> list[FiniteMap]:
    """Every function ``[n] -> [m]`` (or every surjection), each exactly once."""
    if n < 0 or m < 0:
        raise DomainError("set sizes must be non-negative")
    check_cap(cap, n, m)
    out = []
    for values in itertools.product(range(1, m + 1), repeat=n):
        if surjective_only and len(set(values)) != m:
            continue
        out.append(FiniteMap(n, m, values))
    return out


def bijections(n: int, cap: int = DEFAULT_CAP) -> list[FiniteMap]:
    check_cap(cap, n)
    return [FiniteMap(n, n, p) for p in itertools.permutations(range(1, n + 1))]


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on ``[n]``."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return Partition.of(*lengths)


def class_representative(mu: Partition) -> tuple[int, ...]:
    """A permutation of cycle type ``mu`` whose cycles are runs of consecutive points."""
    out = []
    start = 1
    for length in mu.parts:
        cycle = list(range(start, start + length))
        out.extend(cycle[1:] + cycle[:1])
        start += length
    return tuple(out)


def sign(perm: Sequence[int]) -> int:
    mu = cycle_type(perm)
    return -1 if (mu.size - len(mu)) % 2 else 1


def weak_compositions(d: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` non-negative integers summing to ``d`` (lex descending)."""
    if parts == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in weak_compositions(d - first, parts - 1):
            yield (first,) + rest


def multinomial(counts: Sequence[int]) -> int:
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def frac(x) -> Fraction:
    """Parse an exact rational from an int, Fraction or ``"p/q"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise DomainError("floating-point coefficients are not accepted")
    return Fraction(x)
