import random
from fractions import Fraction
from math import gcd

import pytest

from core.exactnum import (
    IntPolynomial,
    RatFunction,
    format_rational,
    parse_rational,
    poly_gcd,
    rat_normalize,
    rational_roots,
    split_candidates,
)
from core.exceptions import ExactArithmeticError, ParseError


def poly(*coefficients):
    return IntPolynomial(coefficients)


@pytest.mark.parametrize(
    "n,d,expected",
    [(2, -4, "-1/2"), (0, 7, "0/1"), (6, 3, "2/1")],
)
def test_rat_normalize(n, d, expected):
    assert format_rational(rat_normalize(n, d)) == expected


def test_rat_normalize_zero_denominator():
    with pytest.raises(ExactArithmeticError, match="division by zero"):
        rat_normalize(1, 0)


@pytest.mark.parametrize("text,value", [("1/2", Fraction(1, 2)), ("-3", Fraction(-3)), (" 4 / 6 ", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def random_rational(rng: random.Random) -> Fraction:
    return rat_normalize(rng.randint(-50, 50), rng.choice([d for d in range(-12, 13) if d]))


@pytest.mark.parametrize("seed", range(5))
def test_rationals_satisfy_field_axioms(seed):
    rng = random.Random(seed)
    for _ in range(20):
        a, b, c = (random_rational(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
        if a:
            assert a * (1 / a) == 1
        assert a.denominator > 0 and gcd(a.numerator, a.denominator) == 1
        assert parse_rational(format_rational(a)) == a


def test_poly_gcd_examples():
    # t^2 - t and t - 1
    assert poly_gcd(poly(0, -1, 1), poly(-1, 1)) == poly(-1, 1)
    assert poly_gcd(poly(0, 1), poly()) == poly(0, 1)
    assert poly_gcd(poly(1, 2), poly(3)) == poly(1)
    assert poly_gcd(poly(), poly()).is_zero


def test_poly_gcd_divides_both():
    a = poly(-1, 1) * poly(2, 3) * poly(1, 0, 1)
    b = poly(-1, 1) * poly(5, 1)
    g = poly_gcd(a, b)
    assert g == poly(-1, 1)
    assert poly_gcd(a.exquo(g), b.exquo(g)) == poly(1)


def random_polynomial(rng: random.Random, degree: int) -> IntPolynomial:
    coefficients = [rng.randint(-5, 5) for _ in range(degree)]
    return IntPolynomial(tuple(coefficients) + (rng.choice([-3, -2, -1, 1, 2, 3]),))


@pytest.mark.parametrize("seed", range(8))
def test_poly_gcd_of_products_with_a_shared_factor(seed):
    rng = random.Random(seed)
    shared = random_polynomial(rng, rng.randint(1, 2))
    a = shared * random_polynomial(rng, rng.randint(0, 2))
    b = shared * random_polynomial(rng, rng.randint(0, 2))
    g = poly_gcd(a, b)
    assert a.exquo(g) * g == a
    assert b.exquo(g) * g == b
    assert g == g.primitive()
    assert poly_gcd(g, shared) == shared.primitive()
    assert poly_gcd(a.exquo(g), b.exquo(g)) == poly(1)


@pytest.mark.parametrize(
    "coefficients,roots",
    [
        ((-1, 2), {Fraction(1, 2)}),
        ((0, -1, 1), {Fraction(0), Fraction(1)}),
        ((1, 0, 1), set()),
        ((-6, 11, -6, 1), {Fraction(1), Fraction(2), Fraction(3)}),
        ((3, -8, 4), {Fraction(1, 2), Fraction(3, 2)}),
    ],
)
def test_rational_roots(coefficients, roots):
    assert rational_roots(IntPolynomial(coefficients)) == roots


def test_rational_roots_brute_force_cubic():
    p = poly(2, -3, -3, 2)  # (t + 1)(2t - 1)(t - 2)
    brute = {
        Fraction(sign * num, den)
        for num in range(0, 5)
        for den in range(1, 5)
        for sign in (1, -1)
        if p.evaluate(Fraction(sign * num, den)) == 0
    }
    assert rational_roots(p) == brute == {Fraction(-1), Fraction(1, 2), Fraction(2)}


def brute_force_roots(p: IntPolynomial):
    """Every rational root n/d of p has |n| <= |constant term| and d <= |leading coefficient|."""
    bound_n = abs(p.coefficients[0])
    bound_d = abs(p.leading_coefficient)
    return {
        Fraction(sign * n, d)
        for n in range(1, bound_n + 1)
        for d in range(1, bound_d + 1)
        for sign in (1, -1)
        if p.evaluate(Fraction(sign * n, d)) == 0
    }


@pytest.mark.parametrize("seed", range(10))
def test_rational_roots_match_brute_force(seed):
    rng = random.Random(seed)
    target = rng.randint(1, 3)
    p = IntPolynomial((rng.choice([-2, -1, 1, 2]),))
    while p.degree < target:
        if p.degree + 2 > target or rng.random() < 0.6:
            p = p * IntPolynomial((rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]), rng.randint(1, 3)))
        else:
            p = p * IntPolynomial((rng.randint(1, 4), 0, 1))
    assert rational_roots(p) == brute_force_roots(p)


def test_rational_roots_of_zero():
    with pytest.raises(ExactArithmeticError, match="all of"):
        rational_roots(poly())


def test_split_candidates_reports_irreducible_leftovers():
    roots, leftovers = split_candidates([poly(-1, 2) * poly(1, 0, 1), poly(0, 1), poly(7)])
    assert roots == {Fraction(1, 2), Fraction(0)}
    assert leftovers == [poly(1, 0, 1)]


def test_split_candidates_factors_leftovers_into_irreducibles():
    product = poly(-2, 0, 1) * poly(-1, 1, 1) * poly(1, -2)
    roots, leftovers = split_candidates([product])
    assert roots == {Fraction(1, 2)}
    assert leftovers == [poly(-2, 0, 1), poly(-1, 1, 1)]


def test_ratfunction_is_reduced():
    value = RatFunction.make(poly(-1, 0, 1), poly(-2, 2))  # (t^2 - 1) / (2t - 2)
    assert value.numerator == poly(1, 1)
    assert value.denominator == poly(2)
    assert value.evaluate(Fraction(3)) == 2


def test_ratfunction_linear():
    value = RatFunction.linear(Fraction(1, 2), Fraction(-1, 3))
    assert value.evaluate(Fraction(3, 2)) == 0
    assert (value - value).is_zero
