"""Integer partitions, hooks, corners, and symmetric-group dimensions.

A partition is a weakly decreasing tuple of positive integers; it indexes
irreducible representations of S_n, conjugacy classes of S_n, and the
components of GL(n,q) irreducible families.  The canonical text encoding
joins parts with "+" ("3+2+1"); the empty partition encodes as "-".
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        if not self:
            return self
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def n_stat(self) -> int:
        """sum_i (i-1)*parts[i], rows indexed from 1."""
        return sum(i * p for i, p in enumerate(self))

    def hooks(self) -> tuple[int, ...]:
        """Multiset of hook lengths parts[i] + transpose[j] - i - j - 1 (0-based)."""
        t = self.transpose()
        out = []
        for i, p in enumerate(self):
            for j in range(p):
                out.append(p + t[j] - i - j - 1)
        return tuple(sorted(out, reverse=True))

    def removable_corners(self) -> list["Partition"]:
        """Partitions of size-1 obtained by deleting one corner box."""
        out = []
        for i, p in enumerate(self):
            if i + 1 < len(self) and self[i + 1] == p:
                continue
            parts = list(self)
            parts[i] -= 1
            if parts[i] == 0:
                parts.pop(i)
            out.append(Partition(parts))
        return sorted(out, reverse=True)

    def addable_corners(self) -> list["Partition"]:
        """Partitions of size+1 obtained by adding one corner box."""
        out = []
        for i in range(len(self)):
            if i == 0 or self[i - 1] > self[i]:
                parts = list(self)
                parts[i] += 1
                out.append(Partition(parts))
        out.append(Partition(list(self) + [1]))
        return sorted(out, reverse=True)

    def to_string(self) -> str:
        return "+".join(str(p) for p in self) if self else "-"

    @classmethod
    def from_string(cls, s: str) -> "Partition":
        s = s.strip()
        if s == "-" or s == "":
            return cls(())
        return cls(int(tok) for tok in s.split("+"))

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition(())


class PartitionStats(NamedTuple):
    transpose: Partition
    n_stat: int
    hooks: tuple[int, ...]


class CornerMoves(NamedTuple):
    removable: tuple[Partition, ...]
    addable: tuple[Partition, ...]


def _gen_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _gen_partitions(n, n))


def partition_stats(lam: Partition) -> PartitionStats:
    lam = Partition(lam)
    return PartitionStats(lam.transpose(), lam.n_stat(), lam.hooks())


def corner_moves(lam: Partition) -> CornerMoves:
    lam = Partition(lam)
    return CornerMoves(tuple(lam.removable_corners()), tuple(lam.addable_corners()))


@lru_cache(maxsize=None)
def dimension_sn(lam: Partition) -> int:
    """Hook-length formula: |lam|! / prod of hooks, always an exact integer."""
    lam = Partition(lam)
    if not lam:
        return 1
    num = math.factorial(lam.size)
    den = math.prod(lam.hooks())
    if num % den:
        raise ArithmeticError(f"hook product does not divide {lam.size}! for {lam}")
    return num // den


def log_dimension_sn(lam: Partition) -> float:
    """Double-precision log of dimension_sn, usable far beyond exact range."""
    lam = Partition(lam)
    if not lam:
        return 0.0
    return math.lgamma(lam.size + 1) - sum(math.log(h) for h in lam.hooks())


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (independent of enumeration)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
