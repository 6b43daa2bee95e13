"""Tensor-product random walk on irreducible representations of S_n.

The chain steps from lam to rho with probability d_rho * mult(rho in
lam (x) eta) / (d_lam * n), where eta is the n-dimensional defining
representation.  Two independent kernel constructions are provided: the
down-up corner-box chain and the character-theoretic tensor decomposition;
they agree exactly.  The spectrum is indexed by conjugacy classes with
eigenvalue fixed_points/n, which drives the L2 mixing bound, the moment
transfer method, and the Chebyshev lower-bound estimate.  Monte Carlo
samplers (exact-rational inverse CDF) and an RSK shuffle oracle round out
the module.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import (
    DEFAULT_TABLE_LIMIT,
    CycleType,
    character_table,
    enumerate_classes,
    fixed_point_profile,
)
from .errors import CapacityError
from .partitions import Partition, dimension_sn, enumerate_partitions
from .rng import SplitMix64

EXACT_KERNEL_LIMIT = 18
FLOAT_LIMIT = 40

# per-entry relative accuracy budget; float distributions report the
# accumulated bound r * p(n) * this
FLOAT_ENTRY_RELERR = 1e-14


@dataclass
class WalkDistribution:
    """Probability vector over partitions of n (exact rational or float)."""

    n: int
    mode: str
    masses: dict[Partition, Fraction | float]
    error_bound: float = 0.0

    def mass(self, lam) -> Fraction | float:
        return self.masses.get(Partition(lam), Fraction(0) if self.mode == "exact" else 0.0)

    def total(self):
        return sum(self.masses.values())


@dataclass
class SparseKernel:
    """Row-stochastic sparse transition matrix on partitions of n."""

    n: int
    mode: str
    rows: dict[Partition, dict[Partition, Fraction | float]]

    def entry(self, lam, rho):
        zero = Fraction(0) if self.mode == "exact" else 0.0
        return self.rows.get(Partition(lam), {}).get(Partition(rho), zero)

    def entries(self):
        for lam, row in self.rows.items():
            for rho, v in row.items():
                yield lam, rho, v

    def apply_dist(self, masses: dict) -> dict:
        """One step: out[rho] = sum_lam masses[lam] * K(lam, rho)."""
        out: dict[Partition, Fraction | float] = {}
        for lam, m in masses.items():
            if not m:
                continue
            for rho, k in self.rows[lam].items():
                out[rho] = out.get(rho, 0) + m * k
        return out

    def apply_function(self, f: dict) -> dict:
        """(K f)(lam) = sum_rho K(lam, rho) f(rho)."""
        return {
            lam: sum(k * f[rho] for rho, k in row.items())
            for lam, row in self.rows.items()
        }


@dataclass(frozen=True)
class SpectrumEntry:
    """Eigenvalue fixed_points/n with eigenfunction f_C = |C|^(1/2) chi/d."""

    cycle_type: CycleType
    eigenvalue: Fraction
    rational_part: dict[Partition, Fraction] = field(compare=False)
    eigenfunction: dict[Partition, float] = field(compare=False)


def plancherel_sn(n: int, mode: str = "exact") -> WalkDistribution:
    """Plancherel measure: mass d_lam^2 / n! on each partition of n."""
    n_fact = math.factorial(n)
    masses = {}
    for lam in enumerate_partitions(n):
        d = dimension_sn(lam)
        masses[lam] = Fraction(d * d, n_fact) if mode == "exact" else (d * d) / n_fact
    return WalkDistribution(n, mode, masses)


def kernel_downup(n: int, mode: str = "exact") -> SparseKernel:
    """Remove a corner box (prob d_mu/d_lam), re-add one (prob d_rho/(n d_mu)).

    The double sum collapses: K(lam, rho) = #common corners * d_rho/(n d_lam).
    """
    if n < 2:
        raise ValueError("the walk needs n >= 2")
    if mode == "exact" and n > EXACT_KERNEL_LIMIT:
        raise CapacityError("exact kernel", n, EXACT_KERNEL_LIMIT)
    if n > FLOAT_LIMIT:
        raise CapacityError("kernel", n, FLOAT_LIMIT)
    rows = {}
    for lam in enumerate_partitions(n):
        d_lam = dimension_sn(lam)
        counts: dict[Partition, int] = {}
        for mu in lam.removable_corners():
            for rho in mu.addable_corners():
                counts[rho] = counts.get(rho, 0) + 1
        row = {}
        for rho, c in counts.items():
            num = c * dimension_sn(rho)
            den = n * d_lam
            row[rho] = Fraction(num, den) if mode == "exact" else num / den
        rows[lam] = row
    return SparseKernel(n, mode, rows)


def tensor_multiplicity(n: int, lam: Partition, rho: Partition,
                        limit: int = DEFAULT_TABLE_LIMIT) -> int:
    """Multiplicity of rho in lam (x) eta as a character inner product."""
    table = character_table(n, limit)
    n_fact = math.factorial(n)
    total = 0
    li = table.partitions.index(Partition(lam))
    ri = table.partitions.index(Partition(rho))
    for j, c in enumerate(table.classes):
        total += c.class_size * table.values[ri][j] * c.fixed_points * table.values[li][j]
    if total % n_fact:
        raise ArithmeticError("tensor multiplicity is not an integer")
    m = total // n_fact
    if m < 0:
        raise ArithmeticError("negative tensor multiplicity")
    return m


def kernel_from_tensor(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> SparseKernel:
    """K(lam, rho) = d_rho * mult(rho in lam (x) eta) / (d_lam * n), from characters."""
    parts = enumerate_partitions(n)
    rows = {}
    for lam in parts:
        d_lam = dimension_sn(lam)
        row = {}
        for rho in parts:
            m = tensor_multiplicity(n, lam, rho, limit)
            if m:
                row[rho] = Fraction(m * dimension_sn(rho), n * d_lam)
        rows[lam] = row
    return SparseKernel(n, "exact", rows)


def spectrum_sn(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> tuple[SpectrumEntry, ...]:
    """One spectral entry per conjugacy class.

    rational_part holds g_C(rho) = chi^rho(C)/d_rho; the eigenfunction is
    |C|^(1/2) g_C.  Exact identities are checked on g_C so no square roots
    enter the arithmetic.
    """
    table = character_table(n, limit)
    out = []
    for j, c in enumerate(table.classes):
        g = {}
        f = {}
        root = math.sqrt(c.class_size)
        for i, lam in enumerate(table.partitions):
            gv = Fraction(table.values[i][j], dimension_sn(lam))
            g[lam] = gv
            f[lam] = root * float(gv)
        out.append(SpectrumEntry(c, Fraction(c.fixed_points, n), g, f))
    return tuple(out)


def _as_start(n: int, start) -> Partition:
    if start is None:
        return Partition((n,))
    start = Partition(start)
    if start.size != n:
        raise ValueError(f"start partition {start} has size {start.size}, expected {n}")
    return start


def walk_distribution(n: int, r: int, start=None, mode: str = "exact",
                      kernel: SparseKernel | None = None) -> WalkDistribution:
    """Distribution after r steps from start (default: the one-row partition)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    start = _as_start(n, start)
    if mode == "float":
        eng = _float_engine(n)
        v = eng.delta(start)
        for _ in range(r):
            v = eng.step(v)
        return eng.to_distribution(v, r)
    if kernel is None:
        kernel = kernel_downup(n, mode)
    masses: dict[Partition, Fraction] = {start: Fraction(1)}
    for _ in range(r):
        masses = kernel.apply_dist(masses)
    return WalkDistribution(n, "exact", masses)


def walk_distribution_spectral(n: int, r: int, start=None,
                               limit: int = DEFAULT_TABLE_LIMIT) -> WalkDistribution:
    """Same distribution through the eigenbasis.

    K^r(x,y) = sum_C beta_C^r f_C(x) f_C(y) pi(y); the |C| factors combine
    so everything stays rational.
    """
    start = _as_start(n, start)
    spec = spectrum_sn(n, limit)
    n_fact = math.factorial(n)
    masses = {}
    for rho in enumerate_partitions(n):
        d = dimension_sn(rho)
        pi = Fraction(d * d, n_fact)
        total = Fraction(0)
        for entry in spec:
            total += (
                entry.eigenvalue**r
                * entry.cycle_type.class_size
                * entry.rational_part[start]
                * entry.rational_part[rho]
            )
        masses[rho] = total * pi
    return WalkDistribution(n, "exact", masses)


def tv_to_plancherel(dist: WalkDistribution):
    """Half L1 distance to the Plancherel measure (matches dist's mode)."""
    pi = plancherel_sn(dist.n, dist.mode)
    return sum(abs(dist.mass(lam) - pi.masses[lam]) for lam in pi.masses) / 2


def tv_witness(dist: WalkDistribution):
    """The event A = {dist > pi} and |dist(A) - pi(A)|, the max-form witness."""
    pi = plancherel_sn(dist.n, dist.mode)
    a = tuple(lam for lam in pi.masses if dist.mass(lam) > pi.masses[lam])
    gap = abs(sum(dist.mass(l) for l in a) - sum(pi.masses[l] for l in a))
    return a, gap


def sn_upper_bound_squared(n: int, r: int) -> Fraction:
    """Exact square of the L2 bound: (1/4) sum_i count(i) (i/n)^(2r)."""
    if n < 2 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    profile = fixed_point_profile(n)
    total = Fraction(0)
    for i, count in profile.items():
        if i <= n - 2:
            total += count * Fraction(i, n) ** (2 * r)
    return total / 4


def sn_upper_bound(n: int, r: int) -> float:
    """L2 upper bound on total variation after r steps."""
    return math.sqrt(sn_upper_bound_squared(n, r))


def class_walk_probability(n: int, cycle_type, s: int,
                           limit: int = DEFAULT_TABLE_LIMIT) -> dict[Partition, Fraction]:
    """Class distribution of the s-step walk on S_n generated by class C.

    Fourier expression: p(T) = (|T|/n!) sum_rho d_rho^2 (chi(T)/d)(chi(C)/d)^s,
    keyed by the cycle type of T.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    table = character_table(n, limit)
    cycles = cycle_type.cycle_lengths if isinstance(cycle_type, CycleType) else Partition(cycle_type)
    ci = table.partitions.index(cycles)
    n_fact = math.factorial(n)
    dims = [dimension_sn(lam) for lam in table.partitions]
    out = {}
    for tj, t in enumerate(table.classes):
        total = Fraction(0)
        for i in range(len(table.partitions)):
            d = dims[i]
            total += d * d * Fraction(table.values[i][tj], d) * Fraction(table.values[i][ci], d) ** s
        p = Fraction(t.class_size, n_fact) * total
        if p < 0:
            raise ArithmeticError("negative class probability")
        out[t.cycle_lengths] = p
    if sum(out.values()) != 1:
        raise ArithmeticError("class probabilities do not sum to 1")
    return out


def transposition_moments_closed(n: int, r: int) -> tuple[Fraction, Fraction]:
    """Closed forms for the transposition-class eigenfunction moments.

    Returns (E[f]/|C|^(1/2), E[f^2]) for the walk started at the one-row
    partition: (1-2/n)^r and 1 + C(n-2,2)(1-4/n)^r + (2n-4)(1-3/n)^r.
    """
    mean_red = Fraction(n - 2, n) ** r
    second = (
        1
        + math.comb(n - 2, 2) * Fraction(n - 4, n) ** r
        + (2 * n - 4) * Fraction(n - 3, n) ** r
    )
    return mean_red, second


def moment_fc_reduced(n: int, cycle_type, s: int, r: int, method: str = "transfer",
                      limit: int = DEFAULT_TABLE_LIMIT) -> Fraction:
    """E[(f_C)^s] / |C|^(s/2) after r steps from the one-row partition, exact.

    method 'transfer' runs the class-walk identity
    sum_T p_{s,C}(T) (fp(T)/n)^r; 'direct' evaluates the expectation under
    the exact walk distribution; 'closed' uses the transposition closed forms.
    """
    if s not in (1, 2):
        raise ValueError("s must be 1 or 2 (higher s is quadratically costly)")
    cycles = cycle_type.cycle_lengths if isinstance(cycle_type, CycleType) else Partition(cycle_type)
    if method == "transfer":
        probs = class_walk_probability(n, cycles, s, limit)
        sizes = {c.cycle_lengths: c for c in enumerate_classes(n)}
        return sum(
            p * Fraction(sizes[t].fixed_points, n) ** r for t, p in probs.items()
        )
    if method == "direct":
        dist = walk_distribution(n, r)
        table = character_table(n, limit)
        ci = table.partitions.index(cycles)
        total = Fraction(0)
        for i, lam in enumerate(table.partitions):
            g = Fraction(table.values[i][ci], dimension_sn(lam))
            total += dist.mass(lam) * g**s
        return total
    if method == "closed":
        if cycles != Partition([2] + [1] * (n - 2)):
            raise ValueError("closed forms exist for the transposition class only")
        mean_red, second = transposition_moments_closed(n, r)
        if s == 1:
            return mean_red
        return second / math.comb(n, 2)
    raise ValueError(f"unknown method {method!r}")


def moment_fc(n: int, cycle_type, s: int, r: int, method: str = "transfer") -> float:
    """E[(f_C)^s] after r steps, as a float (the |C|^(s/2) factor reattached)."""
    cycles = cycle_type.cycle_lengths if isinstance(cycle_type, CycleType) else Partition(cycle_type)
    size = CycleType.from_partition(cycles).class_size
    red = moment_fc_reduced(n, cycles, s, r, method)
    return float(red) * size ** (s / 2)


def sn_lower_bound_estimate(n: int, r: int, alpha: float) -> float:
    """Certified Chebyshev lower bound on TV distance at r steps.

    Uses the transposition eigenfunction: under Plancherel f_C has mean 0 and
    variance 1, so pi(f_C <= alpha) >= 1 - 1/alpha^2, while under the walk
    P(f_C <= alpha) <= Var(f_C)/(E - alpha)^2 when E > alpha.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    size = math.comb(n, 2)
    mean_red, second = transposition_moments_closed(n, r)
    var = second - size * mean_red**2
    mean = math.sqrt(size) * float(mean_red)
    if mean <= alpha:
        return 0.0
    est = 1.0 - 1.0 / alpha**2 - float(var) / (mean - alpha) ** 2
    return max(0.0, est)


def sn_tv_curve(n: int, rmax: int, mode: str = "exact"):
    """Rows (r, tv, l2_bound) for r = 1..rmax, sharing one kernel pass."""
    rows = []
    if mode == "float":
        eng = _float_engine(n)
        v = eng.delta(Partition((n,)))
        for r in range(1, rmax + 1):
            v = eng.step(v)
            rows.append((r, eng.tv(v), sn_upper_bound(n, r)))
        return rows
    kernel = kernel_downup(n, "exact")
    masses = {Partition((n,)): Fraction(1)}
    for r in range(1, rmax + 1):
        masses = kernel.apply_dist(masses)
        tv = tv_to_plancherel(WalkDistribution(n, "exact", masses))
        rows.append((r, tv, sn_upper_bound(n, r)))
    return rows


# ---------------------------------------------------------------------------
# float engine


class _FloatEngine:
    def __init__(self, n: int):
        self.n = n
        self.parts = enumerate_partitions(n)
        self.index = {lam: i for i, lam in enumerate(self.parts)}
        n_fact = math.factorial(n)
        dims = [dimension_sn(lam) for lam in self.parts]
        self.pi = np.array([d * d / n_fact for d in dims])
        src, dst, val = [], [], []
        for li, lam in enumerate(self.parts):
            counts: dict[Partition, int] = {}
            for mu in lam.removable_corners():
                for rho in mu.addable_corners():
                    counts[rho] = counts.get(rho, 0) + 1
            for rho, c in counts.items():
                src.append(li)
                dst.append(self.index[rho])
                # exact integer ratio, correctly rounded to double
                val.append((c * dims[self.index[rho]]) / (n * dims[li]))
        self.src = np.array(src, dtype=np.int64)
        self.dst = np.array(dst, dtype=np.int64)
        self.val = np.array(val)

    def delta(self, start: Partition) -> np.ndarray:
        v = np.zeros(len(self.parts))
        v[self.index[start]] = 1.0
        return v

    def step(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        np.add.at(out, self.dst, self.val * v[self.src])
        return out

    def tv(self, v: np.ndarray) -> float:
        return float(np.abs(v - self.pi).sum() / 2)

    def to_distribution(self, v: np.ndarray, r: int) -> WalkDistribution:
        masses = {lam: float(v[i]) for i, lam in enumerate(self.parts)}
        err = r * len(self.parts) * FLOAT_ENTRY_RELERR
        return WalkDistribution(self.n, "float", masses, error_bound=err)


@lru_cache(maxsize=4)
def _float_engine(n: int) -> _FloatEngine:
    if n > FLOAT_LIMIT:
        raise CapacityError("float kernel", n, FLOAT_LIMIT)
    return _FloatEngine(n)


# ---------------------------------------------------------------------------
# samplers


def _choose_by_dimension(rng: SplitMix64, candidates: list[Partition]) -> tuple[Partition, int]:
    """Pick a candidate with probability proportional to its dimension.

    Candidates arrive in enumeration (reverse-lex) order, which fixes the
    inverse-CDF tie-break.  Returns (choice, total weight).
    """
    weights = [dimension_sn(c) for c in candidates]
    i = rng.choose_weighted(weights)
    return candidates[i], sum(weights)


def plancherel_growth_step(rng: SplitMix64, mu: Partition) -> Partition:
    """One up step: add a corner box with probability d_rho / ((m+1) d_mu)."""
    rho, total = _choose_by_dimension(rng, mu.addable_corners())
    assert total == (mu.size + 1) * dimension_sn(mu)
    return rho


def sample_plancherel_sn(n: int, seed: int) -> Partition:
    """Plancherel-distributed partition of n via the growth process from empty."""
    rng = SplitMix64(seed)
    return _grow(rng, n)


def _grow(rng: SplitMix64, n: int) -> Partition:
    lam = Partition(())
    for _ in range(n):
        lam = plancherel_growth_step(rng, lam)
    return lam


def walk_step(rng: SplitMix64, lam: Partition) -> Partition:
    """One down-up move with exact rational thresholds."""
    n = lam.size
    mu, down_total = _choose_by_dimension(rng, lam.removable_corners())
    assert down_total == dimension_sn(lam)
    rho, up_total = _choose_by_dimension(rng, mu.addable_corners())
    assert up_total == n * dimension_sn(mu)
    return rho


def sample_walk(n: int, r: int, seed: int) -> Partition:
    """Simulate r down-up steps from the one-row partition."""
    rng = SplitMix64(seed)
    lam = Partition((n,))
    for _ in range(r):
        lam = walk_step(rng, lam)
    return lam


def walk_samples(n: int, r: int, count: int, seed: int) -> list[Partition]:
    """count independent r-step walks from one seeded stream."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        lam = Partition((n,))
        for _ in range(r):
            lam = walk_step(rng, lam)
        out.append(lam)
    return out


def plancherel_samples(n: int, count: int, seed: int) -> list[Partition]:
    rng = SplitMix64(seed)
    return [_grow(rng, n) for _ in range(count)]


def rsk_shape(word) -> Partition:
    """Shape of the row-insertion tableau of a sequence of distinct values."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                x = None
                break
            row[pos], x = x, row[pos]
        if x is not None:
            rows.append([x])
    return Partition(len(row) for row in rows)


def top_to_random_step(rng: SplitMix64, deck: list[int]) -> None:
    """Move the top card to a uniform position (n choices, in place)."""
    card = deck.pop(0)
    deck.insert(rng.randrange(len(deck) + 1), card)


def rsk_oracle(n: int, r: int, seed: int) -> Partition:
    """RSK shape after r top-to-random shuffles of the identity deck.

    Distributed like walk_distribution(n, r) started at the one-row
    partition; the package tests this statistically rather than assuming it.
    """
    rng = SplitMix64(seed)
    deck = list(range(1, n + 1))
    for _ in range(r):
        top_to_random_step(rng, deck)
    return rsk_shape(deck)


def rsk_samples(n: int, r: int, count: int, seed: int) -> list[Partition]:
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        deck = list(range(1, n + 1))
        for _ in range(r):
            top_to_random_step(rng, deck)
        out.append(rsk_shape(deck))
    return out
