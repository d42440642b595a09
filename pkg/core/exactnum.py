"""Exact scalars: rationals, integer polynomials in delta, and their quotients.

Rationals are ``fractions.Fraction``.  Polynomial arithmetic (products, gcd,
primitive parts, exact quotients) is delegated to sympy's sparse polynomial
ring ``ZZ[delta]``; ``IntPolynomial`` is the immutable, serializable carrier
around it.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Set, Tuple, Union

from sympy import divisors
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from core.exceptions import ExactArithmeticError, ParseError

Rational = Fraction

DELTA_RING, DELTA = ring("delta", ZZ)

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def rat_normalize(n: int, d: int) -> Fraction:
    """Canonical reduced rational n/d with a positive denominator."""
    if d == 0:
        raise ExactArithmeticError("division by zero")
    return Fraction(n, d)


def format_rational(value: Union[Fraction, int]) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "n/d" or "n" (or pass through an int/Fraction)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"not a rational: {value!r}")
    match = _RATIONAL_PATTERN.match(value)
    if not match:
        raise ParseError(f"not a rational: {value!r} (expected n/d)")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"not a rational: {value!r} (zero denominator)")
    return Fraction(numerator, denominator)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate integer polynomial in delta, coefficients lowest degree first."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def from_ring(cls, element) -> "IntPolynomial":
        if not element:
            return cls(())
        coeffs = [0] * (int(element.degree()) + 1)
        for (power,), coeff in element.terms():
            coeffs[power] = int(coeff)
        return cls(tuple(coeffs))

    def to_ring(self):
        return DELTA_RING.from_dict(
            {(power,): coeff for power, coeff in enumerate(self.coefficients) if coeff}
        )

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def content(self) -> int:
        result = 0
        for coeff in self.coefficients:
            result = gcd(result, coeff)
        return result

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero:
            return self
        scale = self.content
        if self.leading_coefficient < 0:
            scale = -scale
        return IntPolynomial(tuple(c // scale for c in self.coefficients))

    def evaluate(self, point: Fraction) -> Fraction:
        result = Fraction(0)
        for coeff in reversed(self.coefficients):
            result = result * point + coeff
        return result

    def exquo(self, divisor: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring().exquo(divisor.to_ring()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() + other.to_ring())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() - other.to_ring())

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() * other.to_ring())

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def to_json(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        return str(self.to_ring().as_expr()) if not self.is_zero else "0"


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
    if a.is_zero and b.is_zero:
        return IntPolynomial(())
    return IntPolynomial.from_ring(a.to_ring().gcd(b.to_ring())).primitive()


def poly_lcm(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero or b.is_zero:
        return IntPolynomial(())
    return IntPolynomial.from_ring(a.to_ring().lcm(b.to_ring())).primitive()


def rational_roots(p: IntPolynomial) -> Set[Fraction]:
    """All rational roots of p via the rational root theorem on its primitive form.

    Raises:
        ExactArithmeticError: p is the zero polynomial.
    """
    if p.is_zero:
        raise ExactArithmeticError("root set is all of ℚ")
    primitive = p.primitive()
    coeffs = primitive.coefficients
    roots: Set[Fraction] = set()

    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    trimmed = IntPolynomial(coeffs[shift:])
    if trimmed.degree < 1:
        return roots

    constant_term = abs(trimmed.coefficients[0])
    leading = abs(trimmed.leading_coefficient)
    for numerator in divisors(constant_term):
        for denominator in divisors(leading):
            for sign in (1, -1):
                candidate = Fraction(sign * int(numerator), int(denominator))
                if trimmed.evaluate(candidate) == 0:
                    roots.add(candidate)
    return roots


def linear_factor(root: Fraction) -> IntPolynomial:
    """The primitive polynomial den*delta - num vanishing at ``root``."""
    return IntPolynomial((-root.numerator, root.denominator))


def strip_rational_roots(p: IntPolynomial) -> Tuple[Set[Fraction], IntPolynomial]:
    """Split p into its rational roots and the cofactor left after removing them."""
    roots = rational_roots(p)
    cofactor = p.primitive().to_ring()
    for root in sorted(roots):
        factor = linear_factor(root).to_ring()
        while True:
            quotient, remainder = cofactor.div(factor)
            if remainder:
                break
            cofactor = quotient
    return roots, IntPolynomial.from_ring(cofactor).primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree < 1:
        return p.primitive()
    element = p.to_ring()
    derivative = element.diff(DELTA)
    return IntPolynomial.from_ring(element.exquo(element.gcd(derivative))).primitive()


def split_candidates(polynomials: Iterable[IntPolynomial]) -> Tuple[Set[Fraction], List[IntPolynomial]]:
    """Rational roots of all given polynomials plus the nonlinear leftovers.

    Leftovers are the irreducible factors over Z of degree >= 2, primitive,
    deduplicated and sorted by (degree, coefficients).
    """
    roots: Set[Fraction] = set()
    leftovers: Set[IntPolynomial] = set()
    for poly in polynomials:
        if poly.degree < 1:
            continue
        found, cofactor = strip_rational_roots(poly)
        roots |= found
        cofactor = squarefree_part(cofactor)
        if cofactor.degree < 1:
            continue
        _, factors = cofactor.to_ring().factor_list()
        for factor, _ in factors:
            irreducible = IntPolynomial.from_ring(factor).primitive()
            if irreducible.degree >= 1:
                leftovers.add(irreducible)
    ordered = sorted(leftovers, key=lambda q: (q.degree, q.coefficients))
    return roots, ordered


@dataclass(frozen=True)
class RatFunction:
    """Reduced quotient of integer polynomials with positive leading denominator."""

    numerator: IntPolynomial
    denominator: IntPolynomial = IntPolynomial((1,))

    @classmethod
    def make(cls, numerator: IntPolynomial, denominator: IntPolynomial) -> "RatFunction":
        if denominator.is_zero:
            raise ExactArithmeticError("division by zero")
        if numerator.is_zero:
            return cls(IntPolynomial(()), IntPolynomial((1,)))
        common = poly_gcd(numerator, denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        scale = gcd(numerator.content, denominator.content)
        if denominator.leading_coefficient < 0:
            scale = -scale
        return cls(
            IntPolynomial(tuple(c // scale for c in numerator.coefficients)),
            IntPolynomial(tuple(c // scale for c in denominator.coefficients)),
        )

    @classmethod
    def from_rational(cls, value: Fraction) -> "RatFunction":
        value = Fraction(value)
        return cls.make(IntPolynomial((value.numerator,)), IntPolynomial((value.denominator,)))

    @classmethod
    def linear(cls, constant: Fraction, slope: Fraction) -> "RatFunction":
        """constant + slope * delta"""
        constant, slope = Fraction(constant), Fraction(slope)
        common = constant.denominator * slope.denominator
        return cls.make(
            IntPolynomial((constant.numerator * slope.denominator, slope.numerator * constant.denominator)),
            IntPolynomial((common,)),
        )

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def evaluate(self, point: Fraction) -> Fraction:
        denominator = self.denominator.evaluate(point)
        if denominator == 0:
            raise ExactArithmeticError("division by zero")
        return self.numerator.evaluate(point) / denominator

    def __add__(self, other: "RatFunction") -> "RatFunction":
        return RatFunction.make(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "RatFunction") -> "RatFunction":
        return self + (-other)

    def __neg__(self) -> "RatFunction":
        return RatFunction(-self.numerator, self.denominator)

    def __mul__(self, other: "RatFunction") -> "RatFunction":
        return RatFunction.make(self.numerator * other.numerator, self.denominator * other.denominator)
