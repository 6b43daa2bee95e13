from fractions import Fraction

import pytest

from repwalk.intervals import Interval, euler_product_enclosure


def test_interval_basics():
    a = Interval(Fraction(1, 3), Fraction(1, 2))
    b = Interval(Fraction(2), Fraction(3))
    assert (a + b).lo == Fraction(7, 3)
    assert (a * b).hi == Fraction(3, 2)
    assert a.contains(Fraction(2, 5))
    assert not a.contains(Fraction(2, 3))
    with pytest.raises(ValueError):
        Interval(Fraction(1), Fraction(0))


def test_interval_mul_signs():
    a = Interval(Fraction(-2), Fraction(3))
    b = Interval(Fraction(-1), Fraction(4))
    prod = a * b
    assert prod.lo == Fraction(-8) and prod.hi == Fraction(12)


def test_division():
    a = Interval(Fraction(1), Fraction(2))
    b = Interval(Fraction(1, 2), Fraction(1))
    q = a / b
    assert q.lo == 1 and q.hi == 4
    with pytest.raises(ZeroDivisionError):
        a / Interval(Fraction(-1), Fraction(1))


def test_rounded_outward():
    x = Interval(Fraction(1, 3), Fraction(1, 3))
    r = x.rounded(8)
    assert r.lo <= Fraction(1, 3) <= r.hi
    assert r.width == Fraction(1, 256)
    assert r.lo.denominator <= 256


def test_pow_int_encloses_true_power():
    base = Interval(Fraction(1, 3), Fraction(1, 3))
    for k in (0, 1, 2, 7, 100):
        p = base.pow_int(k, prec=128)
        assert p.contains(Fraction(1, 3) ** k)
        assert p.width < Fraction(1, 2**100)


def test_pow_int_rejects_negative_base():
    with pytest.raises(ValueError):
        Interval(Fraction(-1), Fraction(1)).pow_int(2)


def test_euler_product_enclosure():
    # prod_{m>=0} (1 - u/2^m) at u = 1/2, converging from both sides
    wide = euler_product_enclosure(Fraction(1, 2), Fraction(2), 10)
    tight = euler_product_enclosure(Fraction(1, 2), Fraction(2), 120, prec=256)
    assert tight.lo >= wide.lo and tight.hi <= wide.hi
    assert tight.width < Fraction(1, 2**100)
    assert wide.lo > Fraction(1, 4) and wide.hi < Fraction(1, 3)
