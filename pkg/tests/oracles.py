"""Independent brute-force oracles used across the test suite.

Nothing here calls the code paths it is meant to check: character values
come from permutation modules, dimensions from explicit tableau counting,
GL counts from literal matrix enumeration over prime fields, cuspidal
counts from irreducible-polynomial enumeration.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from repwalk.partitions import Partition, enumerate_partitions


def cycle_type_brute(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        ln, p = 0, s
        while not seen[p]:
            seen[p] = True
            p = perm[p]
            ln += 1
        lengths.append(ln)
    return Partition(sorted(lengths, reverse=True))


def class_sizes_brute(n: int) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for p in permutations(range(n)):
        ct = cycle_type_brute(p)
        out[ct] = out.get(ct, 0) + 1
    return out


def fixed_point_counts_brute(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in permutations(range(n)):
        k = sum(1 for i, v in enumerate(p) if i == v)
        out[k] = out.get(k, 0) + 1
    return out


# ---------------------------------------------------------------------------
# symmetric group characters from permutation modules (Young's rule +
# Gram-Schmidt down the reverse-lex order; never touches Murnaghan-Nakayama)


def _tabloids(n: int, shape: Partition):
    """Ordered set partitions of range(n) with block sizes `shape`."""
    out = []

    def rec(remaining: frozenset, blocks: tuple, i: int):
        if i == len(shape):
            out.append(blocks)
            return
        from itertools import combinations

        for block in combinations(sorted(remaining), shape[i]):
            rec(remaining - set(block), blocks + (frozenset(block),), i + 1)

    rec(frozenset(range(n)), (), 0)
    return out


def _perm_for_class(cycles: Partition) -> tuple[int, ...]:
    out = [0] * cycles.size
    start = 0
    for length in cycles:
        for i in range(length):
            out[start + i] = start + (i + 1) % length
        start += length
    return tuple(out)


def young_permutation_character(n: int, shape: Partition) -> list[int]:
    """Character of the action on tabloids, one value per class."""
    tabs = _tabloids(n, shape)
    values = []
    for cycles in enumerate_partitions(n):
        g = _perm_for_class(Partition(cycles))
        fixed = 0
        for blocks in tabs:
            if all(frozenset(g[x] for x in b) == b for b in blocks):
                fixed += 1
        values.append(fixed)
    return values


@lru_cache(maxsize=None)
def character_table_brute(n: int) -> dict[Partition, tuple[int, ...]]:
    """Full character table from permutation modules alone."""
    sizes = class_sizes_brute(n)
    classes = list(enumerate_partitions(n))
    weights = [sizes[c] for c in classes]
    n_fact = math.factorial(n)

    def inner(a, b) -> Fraction:
        return Fraction(sum(w * x * y for w, x, y in zip(weights, a, b)), n_fact)

    table: dict[Partition, tuple[int, ...]] = {}
    for shape in classes:  # reverse-lex order refines dominance downwards
        v = [Fraction(x) for x in young_permutation_character(n, shape)]
        for chi in table.values():
            m = inner(v, chi)
            assert m.denominator == 1 and m >= 0
            if m:
                v = [a - m * b for a, b in zip(v, chi)]
        assert inner(v, v) == 1, "residue is not irreducible"
        ints = []
        for x in v:
            assert x.denominator == 1
            ints.append(x.numerator)
        table[shape] = tuple(ints)
    return table


def count_standard_tableaux(shape: Partition) -> int:
    """Number of standard Young tableaux by explicit recursive filling."""

    @lru_cache(maxsize=None)
    def rec(rows: tuple) -> int:
        if sum(rows) == 0:
            return 1
        total = 0
        for i, r in enumerate(rows):
            if r and (i == len(rows) - 1 or r > rows[i + 1]):
                total += rec(rows[:i] + (r - 1,) + rows[i + 1 :])
        return total

    return rec(tuple(shape))


# ---------------------------------------------------------------------------
# GL(n, p) brute force over prime fields


def _rank_mod_p(matrix: list[list[int]], p: int) -> int:
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank, row = 0, 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m[r][col] % p), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(n_rows):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def gl_elements_brute(n: int, p: int):
    """Yield every invertible n x n matrix over the prime field F_p."""
    total = p ** (n * n)
    for code in range(total):
        entries = []
        c = code
        for _ in range(n * n):
            entries.append(c % p)
            c //= p
        matrix = [entries[i * n : (i + 1) * n] for i in range(n)]
        if _rank_mod_p(matrix, p) == n:
            yield matrix


def fixed_space_counts_brute(n: int, p: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for g in gl_elements_brute(n, p):
        shifted = [[(v - (1 if i == j else 0)) % p for j, v in enumerate(row)]
                   for i, row in enumerate(g)]
        d = n - _rank_mod_p(shifted, p)
        out[d] = out.get(d, 0) + 1
    return out


# ---------------------------------------------------------------------------
# irreducible polynomials over F_p


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over F_p; polynomials as coefficient lists,
    lowest degree first, den monic."""
    num = num[:]
    while len(num) >= len(den) and any(num):
        while num and num[-1] % p == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        lead = num[-1] % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
    while num and num[-1] % p == 0:
        num.pop()
    return num


def irreducible_monic_count_brute(d: int, p: int, exclude_x: bool = True) -> int:
    """Count monic irreducible degree-d polynomials over F_p (minus x if asked)."""

    def monics(deg):
        for code in range(p**deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            yield coeffs + [1]

    count = 0
    for poly in monics(d):
        if d == 1:
            if exclude_x and poly[0] == 0:
                continue
            count += 1
            continue
        divisible = False
        for deg in range(1, d // 2 + 1):
            for div in monics(deg):
                if not _poly_mod(poly, div, p):
                    divisible = True
                    break
            if divisible:
                break
        if not divisible:
            count += 1
    return count
