"""Asymptotics of GL(n,q) Plancherel measure and an exact Plancherel sampler.

The two-parameter measure on all partitions

    S(lam) = Z(u,q) * u^|lam| / (q^(sum lam_i^2) prod_b (1 - q^-h(b))^2),
    Z(u,q) = prod_{i>=1} prod_{j>=0} (1 - u q^-(i+j)) = prod_{t>=1} (1 - u/q^t)^t,

is the limit law of each cuspidal component of a Plancherel-random family.
Mixing Plancherel measures of GL(N,q) over N with weights
prod_m (1 - u/q^m) u^N/(1/q)_N makes the components exactly independent
S-distributed, so rejection on the total degree yields exact Plancherel
samples of GL(n,q).  The sampler's accept/reject path compares lazily
extended uniforms against certified rational interval thresholds; no
floating point is involved.  A representation-valued cycle index ties the
enumerated Plancherel data to the infinite product, coefficientwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError
from .glirreps import (
    CuspidalLabel,
    GLIrrep,
    cuspidal_count,
    plancherel_gl,
)
from .intervals import Interval, euler_product_enclosure
from .partitions import Partition, enumerate_partitions
from .rng import LazyUniform, SplitMix64
from .series import q_pochhammer

SAMPLE_N_LIMIT = 20
SAMPLE_Q_LIMIT = 3
DEFAULT_PREC = 320
DEFAULT_ATTEMPT_CAP = 10_000_000


# ---------------------------------------------------------------------------
# the measure S_{u,q}


def suq_weight(u, q, lam: Partition) -> Fraction:
    """Unnormalized weight u^|lam| / (q^(sum lam_i^2) prod (1 - q^-h)^2)."""
    u, q = Fraction(u), Fraction(q)
    lam = Partition(lam)
    w = u**lam.size / q ** sum(p * p for p in lam)
    for h in lam.hooks():
        w /= (1 - q**-h) ** 2
    return w


def _normalizer_terms(u: Fraction, q: Fraction, target: Fraction) -> int:
    """Smallest truncation depth whose Weierstrass remainder is below target."""
    z = 1 / q
    t = 8
    while True:
        tail = u * z ** (t + 1) * ((t + 1) - t * z) / (1 - z) ** 2
        if tail < target:
            return t
        t *= 2


def suq_normalizer(u, q, terms: int | None = None, prec: int = DEFAULT_PREC) -> Interval:
    """Certified enclosure of Z(u,q) = prod_{t>=1} (1 - u/q^t)^t for 0 < u < q.

    The omitted factors each lie in (1 - u/q^t, 1); the Weierstrass product
    inequality turns their sum into a rational lower bound on the tail.
    """
    u, q = Fraction(u), Fraction(q)
    if not 0 < u < q or q <= 1:
        raise ValueError("need 0 < u < q and q > 1")
    target = Fraction(1, 1 << max(prec - 16, 16))
    if terms is None:
        terms = _normalizer_terms(u, q, target)
    head = Interval.point(1)
    z = 1 / q
    for t in range(1, terms + 1):
        head = (head * Interval.point(1 - u * z**t).pow_int(t, prec)).rounded(prec)
    tail_sum = u * z ** (terms + 1) * ((terms + 1) - terms * z) / (1 - z) ** 2
    lo = head.lo * (1 - tail_sum) if tail_sum < 1 else Fraction(0)
    return Interval(max(lo, Fraction(0)), head.hi).rounded(prec)


def suq_mass(u, q, lam: Partition, normalizer_terms: int | None = None,
             prec: int = DEFAULT_PREC) -> Interval:
    """Certified enclosure of S_{u,q}(lam)."""
    return suq_normalizer(u, q, normalizer_terms, prec) * suq_weight(u, q, lam)


def suq_size_tail_bound(u, q, size_cut: int) -> Fraction:
    """Upper bound on the S_{u,q} mass of {|lam| > size_cut}.

    The total weight in size m is at most u^m / ((q^m - 1)(1 - 1/q)^6) and
    the normalizer is at most 1; the series closes with a geometric bound.
    """
    u, q = Fraction(u), Fraction(q)
    if not 0 < u < q:
        raise ValueError("need 0 < u < q")
    prefactor = (1 - 1 / q) ** -6
    total = Fraction(0)
    m = size_cut + 1
    while True:
        total += u**m / (q**m - 1)
        m += 1
        # u^m/(q^m - 1) <= 2 (u/q)^m once q^m >= 2
        remainder = 2 * (u / q) ** m / (1 - u / q)
        if remainder < Fraction(1, 10**40) * max(total, Fraction(1, 10**40)):
            total += remainder
            break
    return prefactor * total


@dataclass(frozen=True)
class SUQMeasure:
    """S_{u,q} truncated to |lam| <= truncation_size, with a tail bound."""

    u: Fraction
    q: Fraction
    truncation_size: int
    masses: dict[Partition, Interval]
    tail_bound: Fraction


def suq_measure(u, q, truncation_size: int, prec: int = DEFAULT_PREC) -> SUQMeasure:
    u, q = Fraction(u), Fraction(q)
    z = suq_normalizer(u, q, prec=prec)
    masses = {}
    for m in range(truncation_size + 1):
        for lam in enumerate_partitions(m):
            masses[lam] = z * suq_weight(u, q, lam)
    return SUQMeasure(u, q, truncation_size, masses, suq_size_tail_bound(u, q, truncation_size))


def limit_marginal(q, c_degree: int, truncation_size: int,
                   prec: int = DEFAULT_PREC) -> dict[Partition, Interval]:
    """Masses of S_{1, q^d}: the large-n limit law of a degree-d component."""
    if c_degree < 1:
        raise ValueError("degree must be >= 1")
    qd = Fraction(q) ** c_degree
    return suq_measure(Fraction(1), qd, truncation_size, prec).masses


# ---------------------------------------------------------------------------
# cycle index


def _poly_trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (Fraction(0),)


def _poly_mul(a, b, cap: int):
    out = [Fraction(0)] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y and i + j <= cap:
                out[i + j] += x * y
    return out


def cycle_index_lhs(n_max: int, q: int, marker: str = "none") -> list[tuple[Fraction, ...]]:
    """Coefficients of u^m, m <= n_max, of 1 + sum_m Z-hat_m u^m/(1/q)_m.

    Z-hat_m averages, under Plancherel measure of GL(m,q), the product of
    component markers; marker 'none' sets every marker to 1, marker
    'unipotent' tracks t^(size of the unipotent part).  Each coefficient is
    returned as a dense polynomial in t (a plain tuple of rationals).
    """
    if marker not in ("none", "unipotent"):
        raise ValueError("marker must be 'none' or 'unipotent'")
    out = [(Fraction(1),)]
    for m in range(1, n_max + 1):
        poly = [Fraction(0)] * (m + 1)
        for phi, mass in plancherel_gl(m, q).items():
            t_pow = phi.unipotent_part.size if marker == "unipotent" else 0
            poly[t_pow] += mass
        scale = 1 / q_pochhammer(q, m)
        out.append(_poly_trim([c * scale for c in poly]))
    return out


def cycle_index_rhs(q: int, order: int, marker: str = "none") -> list[tuple[Fraction, ...]]:
    """Same coefficients from the product over cuspidal labels.

    Each degree-d label contributes 1 + sum_lam marker(lam) u^(d|lam|)
    w(lam), with w the S-weight at (u^d, q^d); there are cuspidal_count(d,q)
    interchangeable copies, of which exactly one (the unit character) is
    tracked when marker='unipotent'.
    """
    if marker not in ("none", "unipotent"):
        raise ValueError("marker must be 'none' or 'unipotent'")
    # series[i] = dense t-polynomial coefficient of u^i
    series = [[Fraction(1)]] + [[Fraction(0)] for _ in range(order)]

    def mul_into(series, factor):
        out = [[Fraction(0)] for _ in range(order + 1)]
        for i in range(order + 1):
            if series[i] == [Fraction(0)]:
                continue
            for j in range(order + 1 - i):
                if factor[j] == [Fraction(0)]:
                    continue
                prod = _poly_mul(series[i], factor[j], order)
                dst = out[i + j]
                if len(dst) < len(prod):
                    dst.extend([Fraction(0)] * (len(prod) - len(dst)))
                for k, v in enumerate(prod):
                    dst[k] += v
        return out

    for d in range(1, order + 1):
        n_labels = cuspidal_count(d, q)
        plain = [[Fraction(0)] for _ in range(order + 1)]
        plain[0] = [Fraction(1)]
        marked = [[Fraction(0)] for _ in range(order + 1)]
        marked[0] = [Fraction(1)]
        for size in range(1, order // d + 1):
            for lam in enumerate_partitions(size):
                w = suq_weight(Fraction(1), Fraction(q) ** d, lam)
                u_pow = d * size
                plain[u_pow][0] += w
                dst = marked[u_pow]
                if len(dst) < size + 1:
                    dst.extend([Fraction(0)] * (size + 1 - len(dst)))
                dst[size] += w
        if d == 1 and marker == "unipotent":
            series = mul_into(series, marked)
            copies = n_labels - 1
        else:
            copies = n_labels
        for _ in range(copies):
            series = mul_into(series, plain)
    return [_poly_trim(list(poly)) for poly in series]


# ---------------------------------------------------------------------------
# exact Plancherel sampler


def default_rejection_u(n: int) -> Fraction:
    """u = 1 - 1/max(n,2), clamped to [1/2, 63/64]: flattens P(N=n) near n."""
    u = 1 - Fraction(1, max(n, 2))
    return min(max(u, Fraction(1, 2)), Fraction(63, 64))


def high_degree_empty_direct(n: int, q: int, u, explicit_degrees: int = 24,
                             prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of prod_{d>n} Z(u^d, q^d)^(N_d) built degree by degree.

    Finitely many degrees enter as explicit interval powers; the rest are
    bounded below through 1 - Z_d <= sum_t t (u^d/q^(dt)) and the geometric
    envelope N_d * (that sum) <= (q/(q-1))^2 u^d.
    """
    u, q = Fraction(u), Fraction(q)
    explicit = Interval.point(1)
    for d in range(n + 1, n + 1 + explicit_degrees):
        n_d = cuspidal_count(d, int(q))
        z_d = suq_normalizer(u**d, q**d, prec=prec)
        explicit = (explicit * z_d.pow_int(n_d, prec)).rounded(prec)
    d = n + 1 + explicit_degrees
    tail_deficit = (q / (q - 1)) ** 2 * u**d / (1 - u)
    lo = max(Fraction(0), explicit.lo * (1 - tail_deficit))
    return Interval(lo, explicit.hi)


def acceptance_probability(n: int, q: int, u, prec: int = DEFAULT_PREC) -> Interval:
    """P(total degree = n) = prod_{m>=0}(1 - u/q^m) u^n/(1/q)_n, enclosed."""
    u = Fraction(u)
    terms = _normalizer_terms(u, Fraction(q), Fraction(1, 1 << prec))
    head = euler_product_enclosure(u, Fraction(q), terms, prec)
    return head * (u**n / q_pochhammer(q, n))


class _ThresholdSet:
    """Cumulative interval thresholds; locates a lazy uniform among them.

    builder(prec) returns a list of (outcome, Interval) with increasing
    thresholds; a uniform beyond the last threshold maps to the terminal
    outcome.  Thresholds are flattened to integers at a fixed dyadic scale
    so the hot path is pure integer comparison; ambiguities trigger a
    higher-precision rebuild.
    """

    def __init__(self, builder, terminal, prec: int = DEFAULT_PREC, max_doublings: int = 6):
        self._builder = builder
        self._terminal = terminal
        self._prec = prec
        self._cache: dict[int, tuple[list, int]] = {}
        self._max_doublings = max_doublings

    def _thresholds(self, level: int) -> tuple[list, int]:
        if level not in self._cache:
            scale = self._prec << level
            flat = []
            for outcome, iv in self._builder(scale):
                lo = (iv.lo.numerator << scale) // iv.lo.denominator
                hi = -((-(iv.hi.numerator << scale)) // iv.hi.denominator)
                flat.append((outcome, lo, hi))
            self._cache[level] = (flat, scale)
        return self._cache[level]

    def locate(self, u: LazyUniform):
        for level in range(self._max_doublings + 1):
            thresholds, scale = self._thresholds(level)
            ambiguous = False
            for outcome, lo, hi in thresholds:
                res = u.compare_scaled(lo, hi, scale)
                if res is True:
                    return outcome
                if res is None:
                    ambiguous = True
                    break
            if not ambiguous:
                return self._terminal
        raise RuntimeError("threshold enclosures failed to separate a uniform draw")


_REJECT = object()


class _DegreePlan:
    """Per-degree sampling machinery: occupation counts and component law."""

    def __init__(self, n: int, q: int, u: Fraction, d: int, prec: int):
        self.d = d
        self.n_labels = cuspidal_count(d, q)
        self.max_count = min(self.n_labels, n // d)
        self.sizes_cap = n // d
        ud, qd = u**d, Fraction(q) ** d
        self.partitions = [
            lam for m in range(1, self.sizes_cap + 1) for lam in enumerate_partitions(m)
        ]
        weights = [suq_weight(ud, qd, lam) for lam in self.partitions]

        def build_counts(p: int) -> list:
            z = suq_normalizer(ud, qd, prec=p)
            occ = z.one_minus()
            out = []
            cum = Interval.point(0)
            for j in range(self.max_count + 1):
                pmf = (
                    math.comb(self.n_labels, j)
                    * occ.pow_int(j, p)
                    * z.pow_int(self.n_labels - j, p)
                )
                cum = (cum + pmf).rounded(p)
                out.append((j, cum))
            return out

        def build_components(p: int) -> list:
            z = suq_normalizer(ud, qd, prec=p)
            ratio = z / z.one_minus()  # Z/(1-Z)
            out = []
            cum = Fraction(0)
            for lam, w in zip(self.partitions, weights):
                cum += w
                out.append((lam, (ratio * cum).rounded(p)))
            return out

        self.count_thresholds = _ThresholdSet(build_counts, _REJECT, prec)
        self.component_thresholds = _ThresholdSet(build_components, _REJECT, prec)


class GLPlancherelSampler:
    """Exact Plancherel sampler for Irr(GL(n,q)) by rejection on total degree."""

    def __init__(self, n: int, q: int, u=None, seed: int = 0,
                 prec: int = DEFAULT_PREC, attempt_cap: int = DEFAULT_ATTEMPT_CAP):
        if n < 1 or n > SAMPLE_N_LIMIT or q > SAMPLE_Q_LIMIT:
            raise CapacityError("GL Plancherel sampler", (n, q), (SAMPLE_N_LIMIT, SAMPLE_Q_LIMIT))
        self.n = n
        self.q = q
        self.u = Fraction(u) if u is not None else default_rejection_u(n)
        if not 0 < self.u < 1:
            raise ValueError("need 0 < u < 1")
        self.rng = SplitMix64(seed)
        self.attempt_cap = attempt_cap
        self.attempts = 0
        self.plans = [_DegreePlan(n, q, self.u, d, prec) for d in range(1, n + 1)]
        self.high_degree_empty = _ThresholdSet(self._build_high_degree, _REJECT, prec)

    def _build_high_degree(self, prec: int) -> list:
        """Single threshold: probability that every label of degree > n is empty.

        Computed as prod_{m>=0}(1 - u/q^m) / prod_{d<=n} Z_d^(N_d): the full
        all-empty probability divided by the explicit low-degree factors.
        (high_degree_empty_direct bounds the same quantity degree by degree;
        the tests check the two enclosures overlap.)
        """
        q, u = Fraction(self.q), self.u
        terms = _normalizer_terms(u, q, Fraction(1, 1 << prec))
        full = euler_product_enclosure(u, q, terms, prec)
        low = Interval.point(1)
        for plan in self.plans:
            z_d = suq_normalizer(u**plan.d, q**plan.d, prec=prec)
            low = (low * z_d.pow_int(plan.n_labels, prec)).rounded(prec)
        iv = full / low
        iv = Interval(max(Fraction(0), iv.lo), min(Fraction(1), iv.hi))
        return [(True, iv)]

    def _draw_indices(self, count: int, pool: int) -> list[int]:
        """Uniform sorted count-subset of range(pool)."""
        if count == pool:
            return list(range(count))
        if pool <= 2048:
            arr = list(range(pool))
            for i in range(count):
                j = i + self.rng.randrange(pool - i)
                arr[i], arr[j] = arr[j], arr[i]
            return sorted(arr[:count])
        chosen: set[int] = set()
        while len(chosen) < count:
            chosen.add(self.rng.randrange(pool))
        return sorted(chosen)

    def _attempt(self) -> GLIrrep | None:
        self.attempts += 1
        counts = []
        floor_total = 0
        for plan in self.plans:
            outcome = plan.count_thresholds.locate(LazyUniform(self.rng))
            if outcome is _REJECT:
                return None
            counts.append(outcome)
            floor_total += plan.d * outcome
        if floor_total > self.n:
            return None
        if self.high_degree_empty.locate(LazyUniform(self.rng)) is _REJECT:
            return None
        assignment = []
        total = 0
        for plan, k in zip(self.plans, counts):
            if not k:
                continue
            indices = self._draw_indices(k, plan.n_labels)
            for idx in indices:
                lam = plan.component_thresholds.locate(LazyUniform(self.rng))
                if lam is _REJECT:
                    return None
                total += plan.d * lam.size
                if total > self.n:
                    return None
                assignment.append((CuspidalLabel(plan.d, idx), lam))
        if total != self.n:
            return None
        return GLIrrep(self.n, self.q, tuple(assignment))

    def sample(self) -> GLIrrep:
        start = self.attempts
        while self.attempts - start < self.attempt_cap:
            phi = self._attempt()
            if phi is not None:
                return phi
        raise RuntimeError(
            f"no acceptance within {self.attempt_cap} attempts; try a different u "
            f"(current u = {self.u})"
        )


def gl_plancherel_sample(n: int, q: int, u=None, seed: int = 0) -> GLIrrep:
    """One exact Plancherel-distributed irreducible family of GL(n,q)."""
    return GLPlancherelSampler(n, q, u, seed).sample()


def gl_plancherel_samples(n: int, q: int, count: int, u=None, seed: int = 0) -> list[GLIrrep]:
    sampler = GLPlancherelSampler(n, q, u, seed)
    return [sampler.sample() for _ in range(count)]
