"""This module contains exact polyhedral geometry: hulls, Minkowski sums, volumes, lattice points and mixed volumes"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, factorial, floor, gcd, lcm, prod
import operator

import numpy as np
from sympy import Matrix, Rational

from components.chowring import compositions, format_polynomial, export_number, unit
from components.errors import OutOfRangeError, ShapeError, ValidationError


def _coordinate(value):
    """Returns an integral rational as int and anything else as Fraction"""
    if isinstance(value, bool):
        raise ValidationError('Point coordinates must be numbers')
    try:
        return operator.index(value)
    except TypeError:
        pass
    try:
        value = Fraction(value)
    except (TypeError, ValueError):
        raise ValidationError(f'Point coordinates must be integers or rationals ({value!r} was passed)')
    return value.numerator if value.denominator == 1 else value


def _dot(left, right):
    return sum(a * b for a, b in zip(left, right))


def _primitive(vector) -> tuple:
    """Scales a nonzero rational vector to the integer vector with coprime entries pointing the same way"""
    vector = [Fraction(x) for x in vector]
    scale = lcm(*(x.denominator for x in vector))
    integral = [int(x * scale) for x in vector]
    divisor = gcd(*integral)
    return tuple(x // divisor for x in integral)


def _rational_matrix(rows) -> Matrix:
    return Matrix([[Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x for x in row]
                   for row in rows])


def _fraction(value) -> Fraction:
    """Converts a sympy rational to Fraction"""
    return Fraction(int(value.p), int(value.q))


def _independent_indices(vectors) -> list:
    """
    This function selects a maximal linearly independent subfamily greedily

    Parameters:
        vectors (list): Rational vectors of a common length

    Returns:
        list: Indices of the selected vectors, in input order
    """
    _, pivots = _rational_matrix(vectors).T.rref()
    return list(pivots)


def _determinant(rows) -> Fraction:
    return _fraction(_rational_matrix(rows).det(method='bareiss'))


def _facet_rays(generators) -> list:
    """
    This function runs the double description method on the cone spanned by integer generators

    The extreme rays y of the dual cone {y : y.g >= 0 for every generator g} are the facet normals
    of the cone. Adjacency of rays is decided combinatorially from their sets of tight generators.

    Parameters:
        generators (list): Integer vectors spanning the whole space

    Returns:
        list: Pairs (ray, mask) where bit j of mask is set when generator j is tight on the ray
    """
    size = len(generators[0])
    basis = _independent_indices(generators)
    full = sum(1 << j for j in basis)
    inverse = _rational_matrix([generators[j] for j in basis]).inv()
    rays = []
    for k, j in enumerate(basis):
        column = [_fraction(x) for x in inverse.col(k)]
        rays.append((_primitive(column), full & ~(1 << j)))

    for index in sorted(set(range(len(generators))) - set(basis)):
        generator = generators[index]
        bit = 1 << index
        values = [_dot(generator, ray) for ray, _ in rays]
        negative = [k for k, value in enumerate(values) if value < 0]
        if not negative:
            rays = [(ray, mask | bit) if value == 0 else (ray, mask) for (ray, mask), value in zip(rays, values)]
            continue
        positive = [k for k, value in enumerate(values) if value > 0]
        created = []
        for p in positive:
            for m in negative:
                common = rays[p][1] & rays[m][1]
                if common.bit_count() < size - 2:
                    continue
                if any(k not in (p, m) and rays[k][1] & common == common for k in range(len(rays))):
                    continue
                combined = [values[p] * y - values[m] * x for x, y in zip(rays[p][0], rays[m][0])]
                created.append((_primitive(combined), common | bit))
        kept = [(ray, mask | bit) if value == 0 else (ray, mask)
                for (ray, mask), value in zip(rays, values) if value >= 0]
        rays = kept + created
    return rays


@dataclass(frozen=True)
class SupportSet:
    """This class represents a finite nonempty set of distinct lattice points in Z^d"""

    dim: int
    points: tuple

    def __post_init__(self):
        """This method validates the dimension and the points"""
        try:
            dim = operator.index(self.dim)
            points = tuple(tuple(operator.index(x) for x in point) for point in self.points)
        except TypeError:
            raise ValidationError('Support sets consist of integer points in an integer dimension')
        if dim < 1:
            raise ValidationError(f'The torus dimension must be at least 1 ({dim} was passed)')
        if not points:
            raise ValidationError('A support set must contain at least one point')
        if any(len(point) != dim for point in points):
            raise ShapeError(f'Every point of a support set in Z^{dim} must have {dim} coordinates')
        if len(set(points)) != len(points):
            raise ValidationError(f'The points of a support set must be distinct ({[list(p) for p in points]})')
        object.__setattr__(self, 'dim', dim)
        object.__setattr__(self, 'points', points)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class Polytope:
    """
    This class represents a rational polytope by its vertices and, when full-dimensional, its facets

    A facet is a pair (a, b) with a primitive integer normal a, describing the inequality a.x <= b.
    Lower-dimensional polytopes carry no facets.
    """

    dim_ambient: int
    vertices: tuple
    facets: tuple
    affine_dim: int

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim_ambient

    def __str__(self):
        points = ', '.join('(' + ', '.join(str(x) for x in vertex) + ')' for vertex in self.vertices)
        return f'conv({points})'


def _point(dim_ambient) -> Polytope:
    return Polytope(dim_ambient, ((0,) * dim_ambient,), (), 0)


def _full_hull(points) -> Polytope:
    """This function computes vertices and facets of a full-dimensional set of distinct rational points"""
    dim = len(points[0])
    scale = lcm(*(Fraction(x).denominator for point in points for x in point))
    generators = [(scale,) + tuple(int(x * scale) for x in point) for point in points]
    rays = _facet_rays(generators)

    facets = []
    incidence = [0] * len(points)
    for f, (ray, mask) in enumerate(rays):
        normal = [-y for y in ray[1:]]
        divisor = gcd(*normal)
        facets.append((tuple(x // divisor for x in normal), _coordinate(Fraction(ray[0], divisor))))
        for j in range(len(points)):
            if mask >> j & 1:
                incidence[j] |= 1 << f
    vertices = [points[j] for j in range(len(points))
                if not any(k != j and incidence[j] & ~incidence[k] == 0 for k in range(len(points)))]
    return Polytope(dim, tuple(sorted(vertices)), tuple(sorted(facets)), dim)


def convex_hull(points, dim=None) -> Polytope:
    """
    This function computes the convex hull of finitely many points

    Parameters:
        points (SupportSet or iterable): The points, integer or rational coordinates
        dim (int): Ambient dimension, required only to disambiguate

    Returns:
        Polytope: Extreme points of the input, with facets when the hull is full-dimensional
    """
    if isinstance(points, SupportSet):
        dim = points.dim
        points = points.points
    points = sorted({tuple(_coordinate(x) for x in point) for point in points})
    if not points:
        raise ValidationError('Cannot take the convex hull of an empty set of points')
    dim = len(points[0]) if dim is None else dim
    if dim < 1:
        raise ValidationError('Polytopes live in a space of dimension at least 1')
    if any(len(point) != dim for point in points):
        raise ShapeError(f'Every point must have {dim} coordinates')

    origin = points[0]
    differences = [[x - y for x, y in zip(point, origin)] for point in points[1:]]
    columns = _independent_indices(list(zip(*differences))) if differences else []
    if len(columns) == dim:
        return _full_hull(points)
    if not columns:
        return Polytope(dim, (origin,), (), 0)
    projected = {tuple(point[j] for j in columns): point for point in points}
    shadow = _full_hull(sorted(projected))
    vertices = tuple(sorted(projected[vertex] for vertex in shadow.vertices))
    return Polytope(dim, vertices, (), len(columns))


def minkowski_sum(first, second) -> Polytope:
    """Returns the hull of all pairwise vertex sums of two polytopes in the same space"""
    if first.dim_ambient != second.dim_ambient:
        raise ShapeError(f'Cannot add polytopes in dimensions {first.dim_ambient} and {second.dim_ambient}')
    sums = {tuple(x + y for x, y in zip(p, q)) for p in first.vertices for q in second.vertices}
    return convex_hull(sums, first.dim_ambient)


def dilate(polytope, factor) -> Polytope:
    """Returns factor * P for a nonnegative integer factor"""
    factor = operator.index(factor)
    if factor < 0:
        raise OutOfRangeError(f'Dilation factors must be nonnegative ({factor} was passed)')
    if factor == 0:
        return _point(polytope.dim_ambient)
    vertices = tuple(tuple(_coordinate(factor * x) for x in vertex) for vertex in polytope.vertices)
    facets = tuple((normal, _coordinate(factor * bound)) for normal, bound in polytope.facets)
    return Polytope(polytope.dim_ambient, vertices, facets, polytope.affine_dim)


def translate(polytope, vector) -> Polytope:
    """Returns P + vector"""
    vector = tuple(_coordinate(x) for x in vector)
    if len(vector) != polytope.dim_ambient:
        raise ShapeError(f'A translation of R^{polytope.dim_ambient} needs {polytope.dim_ambient} coordinates')
    vertices = tuple(sorted(tuple(_coordinate(x + y) for x, y in zip(vertex, vector))
                            for vertex in polytope.vertices))
    facets = tuple(sorted((normal, _coordinate(bound + _dot(normal, vector))) for normal, bound in polytope.facets))
    return Polytope(polytope.dim_ambient, vertices, facets, polytope.affine_dim)


def _face_simplices(face) -> list:
    """Triangulates a list of points spanning an affine hyperplane, returning simplices as point tuples"""
    origin = face[0]
    if len(origin) == 1:
        return [(origin,)]
    differences = [[x - y for x, y in zip(point, origin)] for point in face[1:]]
    columns = _independent_indices(list(zip(*differences)))
    projected = {tuple(point[j] for j in columns): point for point in face}
    shadow = convex_hull(list(projected), len(columns))
    return [tuple(projected[vertex] for vertex in simplex) for simplex in _simplices(shadow)]


def _simplices(polytope) -> list:
    """Pulling triangulation of a full-dimensional polytope from its first vertex"""
    vertices = polytope.vertices
    if len(vertices) == polytope.dim_ambient + 1:
        return [vertices]
    apex = vertices[0]
    simplices = []
    for normal, bound in polytope.facets:
        if _dot(normal, apex) == bound:
            continue
        face = [vertex for vertex in vertices if _dot(normal, vertex) == bound]
        simplices.extend((apex,) + simplex for simplex in _face_simplices(face))
    return simplices


def volume(polytope) -> Fraction:
    """
    This function computes the exact Lebesgue volume of a polytope

    Parameters:
        polytope (Polytope): Any polytope

    Returns:
        Fraction: The volume; 0 when the polytope is not full-dimensional
    """
    if not polytope.is_full_dimensional:
        return Fraction(0)
    dim = polytope.dim_ambient
    total = Fraction(0)
    for simplex in _simplices(polytope):
        apex = simplex[0]
        total += abs(_determinant([[x - y for x, y in zip(vertex, apex)] for vertex in simplex[1:]]))
    return total / factorial(dim)


def interior_lattice_points(polytope) -> int:
    """
    This function counts the integer points strictly inside a polytope

    The integer bounding box of the interior is scanned slice by slice along the first coordinate.
    Strict inequalities a.z < b become a.z <= ceil(b) - 1 for integer a and z.

    Parameters:
        polytope (Polytope): Any polytope

    Returns:
        int: The count; 0 when the polytope is not full-dimensional
    """
    if not polytope.is_full_dimensional:
        return 0
    dim = polytope.dim_ambient
    lows = [floor(min(vertex[i] for vertex in polytope.vertices)) + 1 for i in range(dim)]
    highs = [ceil(max(vertex[i] for vertex in polytope.vertices)) - 1 for i in range(dim)]
    if any(low > high for low, high in zip(lows, highs)):
        return 0
    normals = np.array([normal for normal, _ in polytope.facets], dtype=np.int64)
    bounds = np.array([ceil(bound) - 1 for _, bound in polytope.facets], dtype=np.int64)
    first = np.arange(lows[0], highs[0] + 1, dtype=np.int64)
    if dim == 1:
        return int(np.count_nonzero(np.all(np.outer(first, normals[:, 0]) <= bounds, axis=1)))

    axes = [np.arange(low, high + 1, dtype=np.int64) for low, high in zip(lows[1:], highs[1:])]
    rest = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, dim - 1)
    partial = rest @ normals[:, 1:].T
    count = 0
    for value in first:
        count += np.count_nonzero(np.all(partial + value * normals[:, 0] <= bounds, axis=1))
    return int(count)


class MinkowskiSums:
    """
    This class memoizes the integer-weighted Minkowski sums P_t = t_1 P_1 + ... + t_l P_l of fixed polytopes

    Each sum is built once from a smaller one and then kept, together with its volume and interior point count.
    """

    def __init__(self, polytopes):
        """
        This class constructor checks that the polytopes share one ambient space

        Parameters:
            polytopes (list): The summands P_1, ..., P_l
        """
        polytopes = tuple(polytopes)
        if not polytopes:
            raise ValidationError('At least one polytope is needed')
        dims = {p.dim_ambient for p in polytopes}
        if len(dims) != 1:
            raise ShapeError(f'All polytopes must live in the same space (dimensions {sorted(dims)} were passed)')
        self.polytopes = polytopes
        self.dim = dims.pop()
        self._sums = {(0,) * len(polytopes): _point(self.dim)}
        self._volumes = {}
        self._interior = {}

    def _weights(self, weights) -> tuple:
        weights = tuple(operator.index(t) for t in weights)
        if len(weights) != len(self.polytopes) or any(t < 0 for t in weights):
            raise ShapeError(f'Weights must be {len(self.polytopes)} nonnegative integers ({list(weights)} was passed)')
        return weights

    def polytope(self, weights) -> Polytope:
        """Returns the sum with the given nonnegative integer weights"""
        weights = self._weights(weights)
        if weights not in self._sums:
            i = next(i for i, t in enumerate(weights) if t)
            smaller = tuple(t - (j == i) for j, t in enumerate(weights))
            self._sums[weights] = minkowski_sum(self.polytope(smaller), self.polytopes[i])
        return self._sums[weights]

    def volume(self, weights) -> Fraction:
        weights = self._weights(weights)
        if weights not in self._volumes:
            self._volumes[weights] = volume(self.polytope(weights))
        return self._volumes[weights]

    def interior_lattice_points(self, weights) -> int:
        weights = self._weights(weights)
        if weights not in self._interior:
            self._interior[weights] = interior_lattice_points(self.polytope(weights))
        return self._interior[weights]


def _exact(value):
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def mixed_volume(summands, dim, sums=None):
    """
    This function computes the mixed volume MV(P_1, ..., P_1, P_2, ..., P_l) by inclusion-exclusion

    The normalization is MV(P, ..., P) = d! vol(P). A sub-multiset taking t_i copies of P_i contributes
    (-1)^(d - |t|) * prod C(gamma_i, t_i) * vol(t_1 P_1 + ... + t_l P_l).

    Parameters:
        summands (list): Pairs (Polytope, multiplicity) with multiplicities summing to dim
        dim (int): Ambient dimension d
        sums (MinkowskiSums): Optional cache over exactly the listed polytopes, in order

    Returns:
        int or Fraction: The mixed volume, an integer for lattice polytopes
    """
    summands = list(summands)
    multiplicities = tuple(operator.index(m) for _, m in summands)
    if any(m < 0 for m in multiplicities) or sum(multiplicities) != dim:
        raise OutOfRangeError(f'Multiplicities {list(multiplicities)} must be nonnegative and sum to {dim}')
    if any(p.dim_ambient != dim for p, _ in summands):
        raise ShapeError(f'Every summand of a mixed volume in dimension {dim} must live in R^{dim}')
    if sums is None:
        sums = MinkowskiSums(p for p, _ in summands)
    elif len(sums.polytopes) != len(summands):
        raise ShapeError('The Minkowski sum cache must cover exactly the summands')

    total = Fraction(0)
    for size in range(1, dim + 1):
        for weights in compositions(size, multiplicities):
            multiplicity = prod(comb(m, t) for m, t in zip(multiplicities, weights))
            total += (-1) ** (dim - size) * multiplicity * sums.volume(weights)
    return _exact(total)


@dataclass(frozen=True)
class VolumeForm:
    """This class represents a homogeneous form with nonnegative rational coefficients, such as vol(T_1 P_1 + ...)"""

    ell: int
    degree: int
    terms: tuple

    def __post_init__(self):
        """This method drops zero terms, validates the rest and sorts them in descending lexicographic order"""
        terms = []
        for exponents, value in self.terms:
            exponents = tuple(exponents)
            value = Fraction(value)
            if len(exponents) != self.ell or sum(exponents) != self.degree or any(e < 0 for e in exponents):
                raise ShapeError(f'The exponent vector {list(exponents)} is not of degree {self.degree} '
                                 f'in {self.ell} variables')
            if value < 0:
                raise ValidationError(f'Volume form coefficients are nonnegative ({value} was passed)')
            if value:
                terms.append((exponents, _exact(value)))
        object.__setattr__(self, 'terms', tuple(sorted(terms, reverse=True)))

    def coefficient(self, exponents):
        return dict(self.terms).get(tuple(exponents), 0)

    def evaluate(self, point) -> Fraction:
        """Returns V(point) for a vector of rationals"""
        return sum((Fraction(c) * prod(Fraction(t) ** e for t, e in zip(point, exponents))
                    for exponents, c in self.terms), Fraction(0))

    def to_dict(self) -> dict:
        return {'text': str(self),
                'terms': [{'exponents': list(e), 'coefficient': export_number(c)} for e, c in self.terms]}

    def __str__(self):
        return format_polynomial(self.terms)


def volume_polynomial(polytopes, sums=None) -> VolumeForm:
    """
    This function computes V(T) = vol(T_1 P_1 + ... + T_l P_l) from mixed volumes

    Parameters:
        polytopes (list): P_1, ..., P_l in a common space R^d
        sums (MinkowskiSums): Optional cache over the same polytopes

    Returns:
        VolumeForm: The form with coefficients MV(P_1^gamma_1, ..., P_l^gamma_l) / gamma!
    """
    polytopes = list(polytopes)
    sums = MinkowskiSums(polytopes) if sums is None else sums
    dim = sums.dim
    terms = []
    for gamma in compositions(dim, (dim,) * len(polytopes)):
        value = mixed_volume(zip(polytopes, gamma), dim, sums)
        terms.append((gamma, Fraction(value) / prod(factorial(g) for g in gamma)))
    return VolumeForm(len(polytopes), dim, tuple(terms))


def volume_polynomial_by_interpolation(polytopes, sums=None) -> VolumeForm:
    """
    This function recovers V(T) from the volumes of the sums P_t at all weights t with |t| = d

    The weights form the lattice points of a dilated simplex, on which homogeneous forms of degree d
    are determined uniquely; the linear system is solved exactly.
    """
    polytopes = list(polytopes)
    sums = MinkowskiSums(polytopes) if sums is None else sums
    dim = sums.dim
    bounds = (dim,) * len(polytopes)
    monomials = list(compositions(dim, bounds))
    samples = list(compositions(dim, bounds))
    system = Matrix([[prod(t ** e for t, e in zip(sample, gamma)) for gamma in monomials] for sample in samples])
    values = Matrix([Rational(v.numerator, v.denominator) for v in (sums.volume(t) for t in samples)])
    solution = system.LUsolve(values)
    terms = [(gamma, Fraction(int(x.p), int(x.q))) for gamma, x in zip(monomials, solution)]
    return VolumeForm(len(polytopes), dim, tuple(terms))


def standard_simplex(dim, factor=1) -> Polytope:
    """Returns factor * conv(0, e_1, ..., e_dim)"""
    return dilate(convex_hull([(0,) * dim] + [unit(dim, i) for i in range(dim)]), factor)


def contains(polytope, point) -> bool:
    """Tells whether a point lies in a full-dimensional polytope"""
    return all(_dot(normal, point) <= bound for normal, bound in polytope.facets)


def is_subset(inner, outer) -> bool:
    """Tells whether every vertex of inner lies in the full-dimensional polytope outer"""
    return all(contains(outer, vertex) for vertex in inner.vertices)
