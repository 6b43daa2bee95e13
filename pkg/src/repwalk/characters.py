"""Conjugacy classes and irreducible characters of the symmetric group.

Character values come from the Murnaghan-Nakayama rule, implemented on
beta-sets (first-column hook lengths) with memoization; the largest cycle
is stripped first.  Full tables are built on demand, orthogonality-checked,
and cached per n.  Fixed-point statistics use exact derangement numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapacityError
from .partitions import Partition, dimension_sn, enumerate_partitions

DEFAULT_TABLE_LIMIT = 12


@dataclass(frozen=True)
class CycleType:
    """A conjugacy class of S_n, labelled by its cycle lengths."""

    cycle_lengths: Partition
    class_size: int
    fixed_points: int

    @property
    def n(self) -> int:
        return self.cycle_lengths.size

    @classmethod
    def from_partition(cls, lam: Partition) -> "CycleType":
        lam = Partition(lam)
        return cls(lam, class_size_of(lam), sum(1 for p in lam if p == 1))


def class_size_of(lam: Partition) -> int:
    """n! / prod(i^m_i * m_i!) with m_i the multiplicity of part i."""
    lam = Partition(lam)
    den = 1
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        den *= p**m * math.factorial(m)
    return math.factorial(lam.size) // den


@lru_cache(maxsize=None)
def enumerate_classes(n: int) -> tuple[CycleType, ...]:
    """One class per partition of n, in enumerate_partitions order."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(CycleType.from_partition(lam) for lam in enumerate_partitions(n))


def derangements(m: int) -> int:
    """Number of fixed-point-free permutations of m symbols."""
    d = 1
    for k in range(1, m + 1):
        d = k * d + (-1) ** k
    return d


def fixed_point_profile(n: int) -> dict[int, int]:
    """Map i -> #permutations of n symbols with exactly i fixed points.

    Zero counts (always i = n-1) are omitted.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for i in range(n + 1):
        c = math.comb(n, i) * derangements(n - i)
        if c:
            out[i] = c
    return out


@lru_cache(maxsize=None)
def _mn(shape: tuple, cycles: tuple) -> int:
    # Murnaghan-Nakayama on the beta-set shape[i] + (len-1-i); removing a
    # border strip of length k moves one beta value down by k, with sign
    # (-1)^(number of beta values jumped over).
    if not cycles:
        return 1 if not shape else 0
    k = cycles[0]
    rest = cycles[1:]
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_shape = tuple(
            v
            for j, x in enumerate(new_beta)
            if (v := x - (ell - 1 - j)) > 0
        )
        sign = -1 if height % 2 else 1
        total += sign * _mn(new_shape, rest)
    return total


def mn_character(lam: Partition, cycle_type) -> int:
    """Character value of the irreducible labelled lam at the given class."""
    lam = Partition(lam)
    cycles = cycle_type.cycle_lengths if isinstance(cycle_type, CycleType) else Partition(cycle_type)
    if lam.size != cycles.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} vs |{cycles}| = {cycles.size}")
    return _mn(tuple(lam), tuple(sorted(cycles, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    classes: tuple[CycleType, ...]
    values: tuple[tuple[int, ...], ...]  # [partition index][class index]

    def value(self, lam: Partition, cycles: Partition) -> int:
        i = self.partitions.index(Partition(lam))
        j = self.partitions.index(Partition(cycles))
        return self.values[i][j]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.partitions.index(Partition(lam))]

    def verify_orthogonality(self) -> None:
        n_fact = math.factorial(self.n)
        sizes = [c.class_size for c in self.classes]
        m = len(self.partitions)
        for a in range(m):
            for b in range(a, m):
                dot = sum(sizes[j] * self.values[a][j] * self.values[b][j] for j in range(m))
                if dot != (n_fact if a == b else 0):
                    raise ArithmeticError(f"row orthogonality fails at {a},{b}")
        for a in range(m):
            for b in range(a, m):
                dot = sum(self.values[i][a] * self.values[i][b] for i in range(m))
                want = n_fact // sizes[a] if a == b else 0
                if dot != want:
                    raise ArithmeticError(f"column orthogonality fails at {a},{b}")
        id_col = self.partitions.index(Partition([1] * self.n) if self.n else Partition())
        for i, lam in enumerate(self.partitions):
            if self.values[i][id_col] != dimension_sn(lam):
                raise ArithmeticError(f"identity column is not the dimension at {lam}")


_table_cache: dict[int, CharacterTable] = {}


def character_table(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> CharacterTable:
    """Full character table of S_n, orthogonality-verified and cached."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise CapacityError("character table", n, limit)
    if n not in _table_cache:
        parts = enumerate_partitions(n)
        classes = enumerate_classes(n)
        values = tuple(
            tuple(mn_character(lam, c) for c in classes) for lam in parts
        )
        table = CharacterTable(n, parts, classes, values)
        table.verify_orthogonality()
        _table_cache[n] = table
    return _table_cache[n]


def plancherel_fc_moments(n: int, cycles: Partition) -> tuple[Fraction, Fraction]:
    """Exact mean and variance of |C|^(1/2) chi^rho(C)/d_rho under Plancherel.

    Returned as (mean / |C|^(1/2), variance), both rational; the mean is 0
    and the variance 1 for every non-identity class by orthogonality.
    """
    table = character_table(n)
    cycles = Partition(cycles)
    n_fact = math.factorial(n)
    j = table.partitions.index(cycles)
    size = table.classes[j].class_size
    mean_red = Fraction(0)
    second = Fraction(0)
    for i, lam in enumerate(table.partitions):
        d = dimension_sn(lam)
        g = Fraction(table.values[i][j], d)
        pi = Fraction(d * d, n_fact)
        mean_red += pi * g
        second += pi * g * g * size
    return mean_red, second - mean_red * mean_red * size
