"""Truncated formal power series over exact rationals, with q-series helpers.

A TruncSeries holds coefficients c_0..c_M; multiplication truncates at
order M.  The Euler identity sum_n u^n/(1/q)_n = prod_m (1 - u/q^m)^(-1)
is verified through a finite closed form: the coefficient of u^n in the
N-factor partial product is the Gaussian binomial [N+n-1, n] at 1/q, which
equals (1/(1/q)_n) prod_{j=0}^{n-1} (1 - q^(-(N+j))) exactly and converges
monotonically to 1/(1/q)_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_ORDER = 6
STABILIZATION_THRESHOLD = Fraction(1, 10**30)
STABLE_INCREMENTS = 3


@dataclass(frozen=True)
class TruncSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> "TruncSeries":
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.from_coeffs(order, [1])

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls.from_coeffs(order, [])

    def _check(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError("series orders must match")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.order, tuple(c * other for c in self.coeffs))
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            return self.reciprocal() ** (-k)
        out = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if not self.coeffs[0]:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            out[k] = -inv0 * acc
        return TruncSeries(self.order, tuple(out))


def geometric_factor(order: int, ratio: Fraction) -> TruncSeries:
    """(1 - ratio*u)^(-1) = sum_k ratio^k u^k, truncated."""
    ratio = Fraction(ratio)
    coeffs = [ratio**k for k in range(order + 1)]
    return TruncSeries(order, tuple(coeffs))


def q_pochhammer(q, r: int) -> Fraction:
    """(1/q)_r = (1 - 1/q)(1 - 1/q^2)...(1 - 1/q^r); empty product is 1."""
    if r < 0:
        raise ValueError("r must be non-negative")
    q = Fraction(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    out = Fraction(1)
    for k in range(1, r + 1):
        out *= 1 - q**-k
    return out


def euler_lhs(q, order: int) -> TruncSeries:
    """sum_{n>=0} u^n / (1/q)_n, truncated at the given order."""
    return TruncSeries(order, tuple(1 / q_pochhammer(q, n) for n in range(order + 1)))


def euler_partial_product(q, order: int, n_factors: int) -> TruncSeries:
    """prod_{m=0}^{n_factors-1} (1 - u/q^m)^(-1), truncated."""
    q = Fraction(q)
    out = TruncSeries.one(order)
    for m in range(n_factors):
        out = out * geometric_factor(order, q**-m)
    return out


def gaussian_binomial(a: int, b: int, x: Fraction) -> Fraction:
    """[a choose b] at x: prod_{k=1}^{b} (1 - x^(a-b+k)) / (1 - x^k)."""
    x = Fraction(x)
    out = Fraction(1)
    for k in range(1, b + 1):
        out *= (1 - x ** (a - b + k)) / (1 - x**k)
    return out


def euler_lhs_rhs(q, order: int = DEFAULT_ORDER,
                  threshold: Fraction = STABILIZATION_THRESHOLD) -> tuple[TruncSeries, TruncSeries]:
    """The two sides of the Euler identity, the right side stabilized.

    The partial product is expanded with more and more factors until every
    coefficient changes by less than `threshold` for STABLE_INCREMENTS
    consecutive increments.  Two exact cross-checks run along the way: each
    partial-product coefficient must equal the Gaussian binomial closed form,
    and its deviation from the limit 1/(1/q)_n must be exactly
    (1 - prod_{j=0}^{n-1} (1 - q^(-(N+j)))) / (1/q)_n, which shrinks to 0.
    """
    q = Fraction(q)
    lhs = euler_lhs(q, order)
    n_factors = order + 1
    prev = euler_partial_product(q, order, n_factors)
    _check_partial_product_closed_form(q, prev, n_factors)
    stable = 0
    while stable < STABLE_INCREMENTS:
        n_factors += 1
        cur = prev * geometric_factor(order, q ** -(n_factors - 1))
        _check_partial_product_closed_form(q, cur, n_factors)
        delta = max(abs(a - b) for a, b in zip(cur.coeffs, prev.coeffs))
        stable = stable + 1 if delta < threshold else 0
        prev = cur
    return lhs, prev


def _check_partial_product_closed_form(q: Fraction, series: TruncSeries, n_factors: int):
    for n, c in enumerate(series.coeffs):
        want = gaussian_binomial(n_factors + n - 1, n, 1 / q)
        if c != want:
            raise ArithmeticError("partial product disagrees with its closed form")
        # exact deviation from the limiting coefficient
        limit = 1 / q_pochhammer(q, n)
        correction = Fraction(1)
        for j in range(n):
            correction *= 1 - q ** -(n_factors + j)
        if c != limit * correction:
            raise ArithmeticError("partial product deviation formula fails")
