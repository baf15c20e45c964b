"""This module contains exact arithmetic in the Chow ring of a product of projective spaces"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import operator
from types import MappingProxyType

from components.errors import AmbientMismatchError, OutOfRangeError, ShapeError, ValidationError


def compositions(total, bounds):
    """
    This function enumerates the exponent vectors of a given total degree inside a box

    The vectors come in descending lexicographic order, so (2, 0) precedes (1, 1). Sweeps, exponent
    listings and rendered polynomials all follow this order.

    Parameters:
        total (int): Entry sum of the vectors
        bounds (tuple): Upper bound for every entry

    Returns:
        generator: Tuples v with 0 <= v_i <= bounds_i and sum(v) == total, in descending lexicographic order
    """
    if not bounds:
        if total == 0:
            yield ()
        return
    capacity = sum(bounds[1:])
    for head in range(min(bounds[0], total), max(0, total - capacity) - 1, -1):
        for tail in compositions(total - head, bounds[1:]):
            yield (head,) + tail


def unit(ell, i) -> tuple:
    """Returns the basis vector e_i of length ell (0-based index)"""
    return tuple(int(j == i) for j in range(ell))


def shift(exponents, i, step=1):
    """
    This function adds step * e_i to an exponent vector

    Returns:
        tuple: The shifted vector
        None: If the shift produces a negative entry
    """
    shifted = list(exponents)
    shifted[i] += step
    if shifted[i] < 0:
        return None
    return tuple(shifted)


def is_below(lower, upper) -> bool:
    """Componentwise comparison lower <= upper"""
    return all(a <= b for a, b in zip(lower, upper))


def format_monomial(exponents, symbol='T') -> str:
    """Renders T^exponents as 'T1^2*T2', the constant monomial as '1'"""
    factors = [f'{symbol}{i + 1}' + (f'^{e}' if e > 1 else '') for i, e in enumerate(exponents) if e]
    return '*'.join(factors) if factors else '1'


def format_number(value) -> str:
    """Renders an integer or a rational as 'p' or 'p/q'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_polynomial(items, symbol='T') -> str:
    """
    This function renders a polynomial from its (exponents, coefficient) pairs in the given order

    Parameters:
        items (iterable): Pairs of exponent tuples and nonzero int or Fraction coefficients
        symbol (str): Variable name

    Returns:
        str: For example '21*T1^2*T2 + 18*T1*T2^2' or '0'
    """
    rendered = ''
    for exponents, coefficient in items:
        monomial = format_monomial(exponents, symbol)
        magnitude = format_number(abs(coefficient))
        if monomial == '1':
            term = magnitude
        elif magnitude == '1':
            term = monomial
        else:
            term = f'{magnitude}*{monomial}'
        if not rendered:
            rendered = f'-{term}' if coefficient < 0 else term
        else:
            rendered += f' - {term}' if coefficient < 0 else f' + {term}'
    return rendered or '0'


def export_number(value):
    """Returns an integer unchanged and a non-integral rational as a 'p/q' string"""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else format_number(value)


@dataclass(frozen=True)
class Ambient:
    """This class represents a product of projective spaces P^n_1 x ... x P^n_l"""

    dims: tuple
    symbol: str = 'T'

    def __post_init__(self):
        """This method normalizes and validates the factor dimensions"""
        try:
            dims = tuple(operator.index(n) for n in self.dims)
        except TypeError:
            raise ValidationError(f'Ambient dimensions must be integers ({self.dims!r} was passed)')
        if not dims:
            raise ValidationError('The ambient space needs at least one factor')
        if any(n < 1 for n in dims):
            raise ValidationError(f'Every ambient dimension must be at least 1 ({list(dims)} was passed)')
        object.__setattr__(self, 'dims', dims)

    @property
    def ell(self) -> int:
        """Number of factors"""
        return len(self.dims)

    @property
    def total(self) -> int:
        """Total dimension N = n_1 + ... + n_l"""
        return sum(self.dims)

    @property
    def top(self) -> tuple:
        """Exponent vector of the point class T_1^n_1 ... T_l^n_l"""
        return self.dims

    def contains(self, exponents) -> bool:
        """Tells whether an exponent vector lies in the box [0, n]"""
        return len(exponents) == self.ell and all(0 <= e <= n for e, n in zip(exponents, self.dims))

    def check(self, exponents, name='exponent vector') -> tuple:
        """
        This method validates an exponent vector against the ambient

        Parameters:
            exponents (iterable): Candidate vector
            name (str): Name used in error messages

        Returns:
            tuple: The vector as a tuple of integers
        """
        try:
            exponents = tuple(operator.index(e) for e in exponents)
        except TypeError:
            raise ValidationError(f'The {name} must consist of integers')
        if len(exponents) != self.ell:
            raise ShapeError(f'The {name} {list(exponents)} must have length {self.ell}')
        if not self.contains(exponents):
            raise OutOfRangeError(f'The {name} {list(exponents)} must lie between 0 and {list(self.dims)}')
        return exponents

    def exponents(self, degree):
        """All exponent vectors of the given degree inside the box, in descending lexicographic order"""
        return compositions(degree, self.dims)

    def monomial(self, exponents, coefficient=1) -> ChowClass:
        """Returns coefficient * T^exponents"""
        return ChowClass(self, {tuple(exponents): coefficient})

    def one(self) -> ChowClass:
        """Returns the unit class"""
        return self.monomial((0,) * self.ell)

    def generator(self, i) -> ChowClass:
        """Returns the hyperplane class T_i of the i-th factor (0-based)"""
        return self.monomial(unit(self.ell, i))

    def linear(self, coefficients) -> ChowClass:
        """Returns the divisor class sum_j coefficients_j * T_j"""
        if len(coefficients) != self.ell:
            raise ShapeError(f'A divisor class on {self.ell} factors needs {self.ell} coefficients')
        return ChowClass(self, {unit(self.ell, j): c for j, c in enumerate(coefficients)})

    def canonical_class(self) -> ChowClass:
        """Returns K = sum_j (-n_j - 1) * T_j"""
        return self.linear([-n - 1 for n in self.dims])


class ChowClass:
    """This class represents an element of the truncated polynomial ring Z[T_1, ..., T_l] / <T_i^(n_i + 1)>"""

    __slots__ = ('_ambient', '_terms')

    def __init__(self, ambient, terms=None):
        """
        This class constructor stores the nonzero in-range terms of a class

        Parameters:
            ambient (Ambient): The product of projective spaces
            terms (dict): Map from exponent tuples to integer coefficients; truncated monomials are dropped
        """
        collected = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != ambient.ell:
                raise ShapeError(f'The exponent vector {list(exponents)} must have length {ambient.ell}')
            if any(e < 0 for e in exponents):
                raise OutOfRangeError(f'The exponent vector {list(exponents)} has a negative entry')
            try:
                coefficient = operator.index(coefficient)
            except TypeError:
                raise ValidationError(f'Chow class coefficients must be integers ({coefficient!r} was passed)')
            if coefficient and ambient.contains(exponents):
                collected[exponents] = collected.get(exponents, 0) + coefficient
        self._ambient = ambient
        self._terms = {e: c for e, c in sorted(collected.items(), reverse=True) if c}

    @property
    def ambient(self) -> Ambient:
        return self._ambient

    @property
    def terms(self):
        """Read-only map from exponent tuples to coefficients in canonical order"""
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def degree(self):
        """The common degree of all terms, or None for the zero class or a non-homogeneous class"""
        degrees = {sum(e) for e in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def coefficient(self, exponents) -> int:
        """Coefficient of T^exponents; 0 for absent or out-of-range exponents"""
        return self._terms.get(tuple(exponents), 0)

    def integral(self) -> int:
        """Coefficient of the top monomial T_1^n_1 ... T_l^n_l"""
        return self.coefficient(self._ambient.top)

    def __check(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        if other.ambient != self._ambient:
            raise AmbientMismatchError(
                f'Cannot combine classes on {list(self._ambient.dims)} and {list(other.ambient.dims)}')
        return other

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if self.__check(other) is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for exponents, coefficient in other.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return ChowClass(self._ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self._ambient, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if self.__check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self._ambient, {e: c * other for e, c in self._terms.items()})
        if self.__check(other) is NotImplemented:
            return NotImplemented
        dims = self._ambient.dims
        terms = {}
        for left, a in self._terms.items():
            for right, b in other.items():
                product = tuple(x + y for x, y in zip(left, right))
                if all(e <= n for e, n in zip(product, dims)):
                    terms[product] = terms.get(product, 0) + a * b
        return ChowClass(self._ambient, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent):
        exponent = operator.index(exponent)
        if exponent < 0:
            raise ValidationError('Chow classes cannot be raised to negative powers')
        result = self._ambient.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self._ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        return hash((self._ambient, tuple(self._terms.items())))

    def to_dict(self) -> dict:
        """This method returns a JSON-ready representation of the class"""
        return {'text': str(self),
                'terms': [{'exponents': list(e), 'coefficient': c} for e, c in self._terms.items()]}

    def __str__(self) -> str:
        """Canonical rendering, terms in descending lexicographic order of exponents"""
        return format_polynomial(self._terms.items(), self._ambient.symbol)

    def __repr__(self) -> str:
        return f'ChowClass({list(self._ambient.dims)}, {self})'


def chow_add(a, b) -> ChowClass:
    """Termwise sum of two classes on the same ambient"""
    if not isinstance(a, ChowClass) or not isinstance(b, ChowClass):
        raise ValidationError('chow_add expects two Chow classes')
    return a + b


def chow_mul(a, b) -> ChowClass:
    """Product of two classes, discarding monomials killed by T_i^(n_i + 1) = 0"""
    if not isinstance(a, ChowClass) or not isinstance(b, ChowClass):
        raise ValidationError('chow_mul expects two Chow classes')
    return a * b


def coefficient(a, alpha) -> int:
    """The coefficient of T^alpha in a; 0 when absent or outside the truncation box"""
    return a.coefficient(alpha)


def integral(a) -> int:
    """The degree of the zero-dimensional part of a"""
    return a.integral()
