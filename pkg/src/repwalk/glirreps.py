"""Irreducible representations of GL(n,q) as families of partitions.

Irr(GL(n,q)) is in bijection with assignments of partitions to cuspidal
labels with total weighted size n.  Cuspidal labels are opaque (degree,
index) pairs; no GL character values are ever computed.  Everything here
is polynomial in q, so q is any integer >= 2 (only prime powers are
group-theoretically meaningful; the brute-force test oracles require a
prime).  Dimensions, Plancherel measure, fixed-space element counts, the
L2 mixing bound, and the unipotent-part bounds are all exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .errors import CapacityError
from .partitions import EMPTY, Partition, enumerate_partitions

DEFAULT_ENUM_N = 5
DEFAULT_ENUM_Q = 4


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cuspidal_count(d: int, q: int) -> int:
    """Number of cuspidal characters of GL(d,q): (1/d) sum_{e|d} mu(d/e)(q^e - 1).

    Equals the count of monic irreducible degree-d polynomials over the
    q-element field other than x; in particular q - 1 for d = 1.
    """
    if d < 1 or q < 2:
        raise ValueError("need d >= 1 and q >= 2")
    total = sum(mobius(d // e) * (q**e - 1) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


@dataclass(frozen=True, order=True)
class CuspidalLabel:
    """Opaque cuspidal character label: degree d, index below cuspidal_count(d,q)."""

    degree: int
    index: int


UNIT_LABEL = CuspidalLabel(1, 0)  # the unit character e of GL(1,q)


@dataclass(frozen=True)
class GLIrrep:
    """A family: finite map from cuspidal labels to nonempty partitions."""

    n: int
    q: int
    assignment: tuple[tuple[CuspidalLabel, Partition], ...]

    def __post_init__(self):
        deg = 0
        seen = set()
        for label, lam in self.assignment:
            if not lam:
                raise ValueError("assigned partitions must be nonempty")
            if label in seen:
                raise ValueError("duplicate cuspidal label")
            if not 0 <= label.index < cuspidal_count(label.degree, self.q):
                raise ValueError(f"label index out of range: {label}")
            seen.add(label)
            deg += label.degree * lam.size
        if deg != self.n:
            raise ValueError(f"family degree {deg} != n = {self.n}")

    @property
    def unipotent_part(self) -> Partition:
        for label, lam in self.assignment:
            if label == UNIT_LABEL:
                return lam
        return EMPTY

    def descriptor(self) -> str:
        return ";".join(
            f"{label.degree}.{label.index}:{lam.to_string()}"
            for label, lam in self.assignment
        )

    @classmethod
    def from_descriptor(cls, n: int, q: int, text: str) -> "GLIrrep":
        assignment = []
        for chunk in text.split(";"):
            head, part = chunk.split(":")
            d, i = head.split(".")
            assignment.append((CuspidalLabel(int(d), int(i)), Partition.from_string(part)))
        return cls(n, q, tuple(sorted(assignment)))


def _degree_assignments(d: int, boxes: int, n_labels: int):
    """All ways to place nonempty partitions totalling `boxes` boxes on
    distinct labels of one degree; yields tuples of (index, partition)."""
    if boxes == 0:
        yield ()
        return
    for k in range(1, min(boxes, n_labels) + 1):
        for multiset in _partition_multisets(boxes, k):
            arrangements = sorted(set(permutations(multiset)))
            for idxs in combinations(range(n_labels), k):
                for arr in arrangements:
                    yield tuple(zip(idxs, arr))


def _partition_multisets(boxes: int, k: int, cap: Partition | None = None):
    """Multisets of exactly k nonempty partitions with sizes summing to boxes,
    listed weakly decreasing in reverse-lex order to avoid duplicates."""
    if k == 1:
        for lam in enumerate_partitions(boxes):
            if cap is None or lam <= cap:
                yield (lam,)
        return
    for size in range(boxes - k + 1, 0, -1):
        for lam in enumerate_partitions(size):
            if cap is not None and lam > cap:
                continue
            for rest in _partition_multisets(boxes - size, k - 1, lam):
                yield (lam,) + rest


def enumerate_gl_irreps(n: int, q: int, max_n: int = DEFAULT_ENUM_N,
                        max_q: int = DEFAULT_ENUM_Q) -> tuple[GLIrrep, ...]:
    """Every family of degree n exactly once, in a fixed canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n or q > max_q:
        raise CapacityError("GL family enumeration", (n, q), (max_n, max_q))

    families: list[GLIrrep] = []

    def recurse(d: int, budget: int, acc: list):
        if budget == 0:
            families.append(GLIrrep(n, q, tuple(acc)))
            return
        if d > budget:
            return
        n_labels = cuspidal_count(d, q)
        for boxes in range(budget // d, -1, -1):
            for placed in _degree_assignments(d, boxes, n_labels):
                added = [(CuspidalLabel(d, i), lam) for i, lam in placed]
                recurse(d + 1, budget - d * boxes, acc + added)

    recurse(1, n, [])
    families.sort(key=_family_sort_key)
    return tuple(families)


def _family_sort_key(phi: GLIrrep):
    pairs = sorted((label.degree, tuple(lam)) for label, lam in phi.assignment)
    idxs = sorted((label.degree, label.index) for label, lam in phi.assignment)
    return (pairs, idxs)


@lru_cache(maxsize=None)
def order_gl(n: int, q: int) -> int:
    """|GL(n,q)| = prod_{i=0}^{n-1} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def dimension_gl(phi: GLIrrep) -> int:
    """(q^n - 1)...(q - 1) * prod over labels of q^(d n(lam)) / prod (q^(d h) - 1)."""
    n, q = phi.n, phi.q
    value = Fraction(1)
    for k in range(1, n + 1):
        value *= q**k - 1
    for label, lam in phi.assignment:
        d = label.degree
        value *= Fraction(q ** (d * lam.n_stat()))
        for h in lam.hooks():
            value /= q ** (d * h) - 1
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"dimension of {phi.descriptor()} is not a positive integer")
    return value.numerator


def plancherel_gl(n: int, q: int) -> dict[GLIrrep, Fraction]:
    """Plancherel measure d_phi^2 / |GL(n,q)|; sums to 1 exactly."""
    g = order_gl(n, q)
    masses = {phi: Fraction(dimension_gl(phi) ** 2, g) for phi in enumerate_gl_irreps(n, q)}
    if sum(masses.values()) != 1:
        raise ArithmeticError("Plancherel masses do not sum to 1")
    return masses


def fixed_space_counts(n: int, q: int) -> dict[int, int]:
    """#{g in GL(n,q) : dim fix(g) = i}, exact, for i = 0..n.

    count(i) = (|GL_n|/|GL_i|) sum_{j=0}^{n-i} (-1)^j q^C(j,2) / (q^(ij) |GL_j|).
    """
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    out = {}
    for i in range(n + 1):
        total = Fraction(0)
        for j in range(n - i + 1):
            total += Fraction(
                (-1) ** j * q ** math.comb(j, 2),
                q ** (i * j) * order_gl(j, q),
            )
        value = Fraction(order_gl(n, q), order_gl(i, q)) * total
        if value.denominator != 1 or value < 0:
            raise ArithmeticError("fixed-space count is not a non-negative integer")
        out[i] = value.numerator
    if sum(out.values()) != order_gl(n, q):
        raise ArithmeticError("fixed-space counts do not sum to the group order")
    return out


def gl_upper_bound_squared(n: int, q: int, r: int) -> Fraction:
    """Exact square of the L2 bound: (1/4) sum_{i=1}^n count(n-i) q^(-2ri)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    counts = fixed_space_counts(n, q)
    total = Fraction(0)
    for i in range(1, n + 1):
        total += counts[n - i] * Fraction(1, q ** (2 * r * i))
    return total / 4


def gl_upper_bound(n: int, q: int, r: int) -> float:
    """L2 upper bound on TV distance after r steps; <= 1/(2 q^c) at r = n + c."""
    return math.sqrt(gl_upper_bound_squared(n, q, r))


def unipotent_marginal(n: int, q: int) -> dict[Partition, Fraction]:
    """Distribution of the unipotent part under Plancherel measure (exact)."""
    out: dict[Partition, Fraction] = {}
    for phi, mass in plancherel_gl(n, q).items():
        lam = phi.unipotent_part
        out[lam] = out.get(lam, Fraction(0)) + mass
    return out


def unipotent_mass_bound(q: int, lam: Partition) -> Fraction:
    """Upper bound 1 / (q^(sum lam_i^2) prod_b (1 - q^(-h(b)))^2) on the marginal."""
    lam = Partition(lam)
    value = Fraction(1, q ** sum(p * p for p in lam))
    for h in lam.hooks():
        value /= (1 - Fraction(1, q**h)) ** 2
    return value


def unipotent_tail_bound(q: int, c: int, rel_tol: Fraction = Fraction(1, 10**15)) -> Fraction:
    """Upper bound (1-1/q)^(-6) sum_{m>=c} 1/(q^m - 1) on P(|unipotent part| >= c).

    The sum is evaluated exactly until the geometric remainder drops below
    rel_tol, then closed with that remainder, so the result stays an upper
    bound.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    prefactor = (1 - Fraction(1, q)) ** -6
    total = Fraction(0)
    m = c
    while True:
        total += Fraction(1, q**m - 1)
        m += 1
        # 1/(q^m - 1) <= 2 q^-m, so the remaining sum is <= 2 q^(1-m)/(q-1)
        remainder = Fraction(2 * q, (q - 1) * q**m)
        if remainder < rel_tol * total:
            total += remainder
            break
    return prefactor * total


def gl_lower_bound(n: int, q: int, c: int,
                   max_n: int = DEFAULT_ENUM_N, max_q: int = DEFAULT_ENUM_Q):
    """Certified lower bound on TV distance at r = n - c steps.

    The walk support at r = n - c keeps the first row of the unipotent part
    at size >= c, an event of full walk probability, so TV >= 1 - pi(A).
    Enumerable cases use the exact marginal; larger ones the tail bound.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    if n <= max_n and q <= max_q:
        marg = unipotent_marginal(n, q)
        pa = sum(mass for lam, mass in marg.items() if lam and lam[0] >= c)
        return 1 - pa
    tail = unipotent_tail_bound(q, c)
    return 1 - min(Fraction(1), tail)
