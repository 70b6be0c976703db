import pytest

from dahalab.algebra import (
    NOT_DIVISIBLE,
    Binomial,
    DahaParams,
    FactoredFraction,
    LaurentPoly,
    Pole,
    VarSpace,
    WeightPoint,
    binomial_divide,
    eval_at_point,
    ff_reduce,
)


@pytest.fixture
def y():
    space = VarSpace(['Y1', 'Y2'])
    return space.monomial('Y1'), space.monomial('Y2')


def test_binomial_divide(y):
    """Test exact division and the detection of remainders"""
    y1, y2 = y
    assert binomial_divide(y1**2 - y2**2, Binomial(y1 - y2)) == y1 + y2
    assert binomial_divide(y1**-1 - y2**-1, Binomial(y1 - y2)) == -(y1**-1) * y2**-1
    assert binomial_divide(y1 - y1, Binomial(y1 - y2)) == 0
    assert binomial_divide(y1**2 + y2**2, Binomial(y1 - y2)) is NOT_DIVISIBLE
    assert not NOT_DIVISIBLE


def test_binomial_units(y):
    """Test that binomials differing by a unit are equal"""
    y1, y2 = y
    b = Binomial(y1 - y2)
    assert b == Binomial(y2 - y1)
    assert b == Binomial(3 * y1**2 - 3 * y1 * y2)
    assert hash(b) == hash(Binomial(y2 - y1))
    assert b != Binomial(y1 + y2)
    assert Binomial(y1 - y2, (1, 2)) == b
    assert str(Binomial(y1 - y2, (1, 2))) == 'f(1,2)'

    with pytest.raises(ValueError):
        Binomial(y1)
    with pytest.raises(ValueError):
        Binomial(y1 + y2 + 1)
    with pytest.raises(ValueError):
        Binomial(y1**2 - y2**2)


def test_fraction_arithmetic(y):
    """Test that fractions cancel to a unique reduced form"""
    y1, y2 = y
    b = Binomial(y1 - y2)
    x = FactoredFraction(y1, [b])

    assert not x.is_polynomial
    assert x * (y1 - y2) == y1
    assert (x * (y1 - y2)).is_polynomial
    assert x - x == 0
    assert not (x - x)
    assert x + x == 2 * x
    assert FactoredFraction(y1, {b: 2}) * (y1 - y2) == x
    assert FactoredFraction(y1 - y2, [b]) == 1


def test_ff_reduce(y):
    """Test that reducing cancels common binomial factors and leaves reduced fractions alone"""
    y1, y2 = y
    b = Binomial(y1 - y2)
    x = FactoredFraction(y1 * (y1 - y2), {b: 2})
    assert x.den == {b: 1}
    assert x.num == y1

    reduced = ff_reduce(x)
    assert reduced is not x
    assert reduced == x
    assert reduced.den == x.den
    assert ff_reduce(FactoredFraction(y1 - y1, [b])).is_polynomial


def test_fraction_division(y):
    """Test division by monomials, binomials and fractions"""
    y1, y2 = y
    one = FactoredFraction.from_poly(y1 - y1 + 1)
    assert FactoredFraction.from_poly(y1**2) / y1 == y1
    assert (FactoredFraction.from_poly(y1) / (y1 - y2)) * (y1 - y2) == y1
    assert one / Binomial(y1 - y2) == FactoredFraction(y1 - y1 + 1, [Binomial(y1 - y2)])
    assert one / FactoredFraction(y1 - y1 + 1, [Binomial(y1 - y2)]) == y1 - y2

    with pytest.raises(ZeroDivisionError):
        FactoredFraction.from_poly(y1) / (y1 - y1)
    with pytest.raises(ValueError):
        FactoredFraction.from_poly(y1) / (y1 + y2 + 1)


def test_eval_at_point():
    """Test evaluation of f-factor fractions at weights, including poles"""
    dp = DahaParams(2, regime='GL')
    one = LaurentPoly.constant(dp.space, 1)
    f = dp.t * dp.y(1) - dp.t**-1 * dp.y(2)
    x = FactoredFraction(one, [Binomial(f)])

    value = eval_at_point(x, WeightPoint(dp, [one, dp.t**2]))
    assert isinstance(value, Pole)
    assert value.order == 1
    assert str(value) == 'POLE(1)'

    t = dp.scalar(dp.t)
    assert eval_at_point(x, WeightPoint.trivial(dp)) == 1 / (t - 1 / t)
    assert eval_at_point(f, WeightPoint.trivial(dp)) == t - 1 / t
    assert eval_at_point(x * f, WeightPoint(dp, [one, dp.t**2])) == 1


def test_vanishing_order():
    """Test the order of vanishing of a numerator at a weight"""
    dp = DahaParams(2, regime='GL')
    y1, y2 = dp.y(1), dp.y(2)
    images = WeightPoint.trivial(dp).images
    assert FactoredFraction.from_poly(y1 + y2).vanishing_order(images) == 0
    assert FactoredFraction.from_poly(y1 - 1).vanishing_order(images) == 1
    assert FactoredFraction.from_poly(y1**2 - 2 * y1 + 1).vanishing_order(images) == 2
