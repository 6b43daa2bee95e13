"""Seedable 64-bit random number generation.

All samplers in this package draw from SplitMix64, a tiny reproducible
64-bit generator.  Parallel workers derive independent streams with
``derive_seed(seed, worker)``, so a (seed, worker-count) pair pins every
sampled byte.  Exact categorical sampling never touches floating point:
uniform integers below an arbitrary bound come from bit-rejection, and
lazily extended uniforms in [0,1) support comparisons against rational
interval thresholds.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a 64-bit bijective scrambler."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, worker: int) -> int:
    """Per-worker stream seed: mix64(seed + (worker+1) * golden gamma)."""
    return mix64((seed + (worker + 1) * _GOLDEN) & _MASK)


class SplitMix64:
    """The SplitMix64 sequence generator (Steele, Lea, Flood 2014)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def randbits(self, k: int) -> int:
        """Uniform k-bit integer."""
        out = 0
        got = 0
        while got < k:
            out = (out << 64) | self.next_u64()
            got += 64
        return out >> (got - k)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), exact via bit rejection."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        k = n.bit_length()
        while True:
            v = self.randbits(k)
            if v < n:
                return v

    def choose_weighted(self, weights) -> int:
        """Index i with probability weights[i]/sum, weights exact integers."""
        total = sum(weights)
        t = self.randrange(total)
        acc = 0
        for i, w in enumerate(weights):
            acc += w
            if t < acc:
                return i
        raise AssertionError("weights exhausted")  # pragma: no cover


class LazyUniform:
    """A uniform U in [0,1) revealed 64 bits at a time.

    After b bits, U is only known to lie in [v/2^b, (v+1)/2^b).  Comparisons
    against a rational threshold (or a rational interval enclosing one)
    extend the bit stream until they resolve, so the decision U < t is exact.
    """

    __slots__ = ("_rng", "_value", "_bits")

    def __init__(self, rng: SplitMix64):
        self._rng = rng
        self._value = 0
        self._bits = 0

    def _extend(self):
        self._value = (self._value << 64) | self._rng.next_u64()
        self._bits += 64

    def is_below(self, t: Fraction) -> bool:
        """Decide U < t for an exactly known rational t."""
        while True:
            if self._bits == 0:
                self._extend()
            num, den = t.numerator, t.denominator
            # U_hi = (v+1)/2^b, U_lo = v/2^b
            if (self._value + 1) * den <= num << self._bits:
                return True
            if self._value * den >= num << self._bits:
                return False
            self._extend()

    def compare_enclosure(self, lo: Fraction, hi: Fraction, max_bits: int = 4096):
        """Decide U < t for a true t known only to lie in [lo, hi].

        Returns True/False when decidable, None when U provably lies inside
        [lo, hi] at max_bits resolution (caller must tighten the enclosure).
        """
        while True:
            if self._bits == 0:
                self._extend()
            b, v = self._bits, self._value
            if (v + 1) * lo.denominator <= lo.numerator << b:
                return True
            if v * hi.denominator >= hi.numerator << b:
                return False
            if b >= max_bits:
                u_lo = Fraction(v, 1 << b)
                u_hi = Fraction(v + 1, 1 << b)
                if lo <= u_lo and u_hi <= hi:
                    return None
            self._extend()

    def compare_scaled(self, lo_int: int, hi_int: int, scale_bits: int,
                       slack_bits: int = 128):
        """Decide U < t for t enclosed by [lo_int, hi_int] / 2^scale_bits.

        Pure integer comparisons.  Returns None once U has been resolved
        slack_bits beyond the threshold scale without a decision, signalling
        that the enclosure itself must be tightened.
        """
        while True:
            if self._bits == 0:
                self._extend()
            b, v = self._bits, self._value
            if b <= scale_bits:
                shift = scale_bits - b
                if (v + 1) << shift <= lo_int:
                    return True
                if v << shift >= hi_int:
                    return False
            else:
                shift = b - scale_bits
                if v + 1 <= lo_int << shift:
                    return True
                if v >= hi_int << shift:
                    return False
            if b >= scale_bits + slack_bits:
                return None
            self._extend()
