"""Laurent tails at infinity: windows, exact division, square roots.

The square-root expansion is validated the only honest way: square the
result and compare coefficients with the input polynomial over the
whole window of claimed exactness.
"""

import random
from fractions import Fraction

import pytest

from pellian.errors import DomainError, PrecisionError
from pellian.fields import QQ
from pellian.laurent import LaurentSeries, sqrt_series
from pellian.poly import Poly, parse_poly


def rand_monic_even(rng, half_deg):
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3))
          for _ in range(2 * half_deg)]
    cs.append(Fraction(1))
    return Poly(QQ, tuple(cs))


def series_of(text, bot=-6):
    return LaurentSeries.from_poly(parse_poly(text), bot)


def test_window_and_coefficient_access():
    s = series_of("x^2 + 3", bot=-2)
    assert (s.bot, s.top) == (-2, 2)
    assert s.coefficient(2) == 1
    assert s.coefficient(0) == 3
    assert s.coefficient(-1) == 0
    assert s.coefficient(99) == 0  # above the window everything is zero
    with pytest.raises(PrecisionError):
        s.coefficient(-3)


def test_sqrt_squares_back_to_input():
    rng = random.Random(501)
    for _ in range(100):
        d = rand_monic_even(rng, rng.randint(1, 4))
        bot = -d.degree - rng.randint(1, 4)
        s = sqrt_series(d, bot)
        assert s.top == d.degree // 2
        sq = s.mul(s)
        for e in range(sq.bot, sq.top + 1):
            want = d[e] if e >= 0 else Fraction(0)
            assert sq.coefficient(e) == want, (d, e)


def test_sqrt_nonmonic_square_lead():
    d = parse_poly("4*x^2 + 4*x + 5")
    s = sqrt_series(d, -4)
    assert s.coefficient(1) == 2
    sq = s.mul(s)
    for e in range(sq.bot, sq.top + 1):
        assert sq.coefficient(e) == d[e] if e >= 0 else sq.coefficient(e) == 0


def test_sqrt_rejects_non_squares():
    with pytest.raises(DomainError):
        sqrt_series(parse_poly("x^3 + 1"), -4)
    with pytest.raises(DomainError):
        sqrt_series(parse_poly("2*x^2 + 1"), -4)
    with pytest.raises(DomainError):
        sqrt_series(parse_poly("-x^2 + 1"), -4)
    with pytest.raises(DomainError):
        sqrt_series(Poly(QQ, ()), -4)


def test_mul_window_is_sum_of_windows():
    a = series_of("x^2 + 1", bot=-3)
    b = series_of("x + 2", bot=-2)
    p = a.mul(b)
    assert p.top == 3
    assert p.bot == max(-3 + 1, -2 + 2)  # worst unknown-tail interaction
    assert p.coefficient(3) == 1
    assert p.coefficient(2) == 2


def test_div_poly_round_trip():
    rng = random.Random(502)
    for _ in range(80):
        d = rand_monic_even(rng, rng.randint(1, 3))
        p = Poly(QQ, tuple(Fraction(rng.randint(-5, 5)) for _ in range(3)) +
                 (Fraction(rng.choice((1, 2, -3))),))
        s = sqrt_series(d, -8)
        q = s.div_poly(p)
        assert q.bot == s.bot - p.degree
        back = q.mul_poly(p)
        for e in range(back.bot, back.top + 1):
            assert back.coefficient(e) == s.coefficient(e)
    with pytest.raises(ZeroDivisionError):
        s.div_poly(Poly(QQ, ()))


def test_principal_part():
    s = series_of("x^3 + 2*x - 5", bot=-4)
    assert s.principal_part() == parse_poly("x^3 + 2*x - 5")
    d = parse_poly("x^2 + 2")
    tail = sqrt_series(d, -5).add_poly(-Poly(QQ, (Fraction(0), Fraction(1))))
    # sqrt(x^2+2) - x = 1/x - ... has empty polynomial part
    assert tail.principal_part() == Poly(QQ, ())
    shifted = LaurentSeries(QQ, 2, 3, [Fraction(1), Fraction(1)])
    with pytest.raises(PrecisionError):
        shifted.principal_part()


def test_add_and_negate():
    a = series_of("x^2 + 1", bot=-3)
    b = a.add(-a)
    assert all(b.coefficient(e) == 0 for e in range(b.bot, b.top + 1))
    c = a.add_poly(parse_poly("x - 1"))
    assert c.coefficient(1) == 1
    assert c.coefficient(0) == 0
    assert c.bot == a.bot
