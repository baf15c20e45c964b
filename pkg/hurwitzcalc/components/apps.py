"""This module contains the two applications: Nash equilibria of generic games and line incidences from graphs"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from math import factorial, prod
import operator

from components.chowring import Ambient, ChowClass, shift, unit
from components.ci import (DEGENERATE_BOUND_ONLY, DELTA_BELOW_TWO, GATED, RAW, CompleteIntersection, DegreeMatrix,
                           DegreeReport, check_mode, check_total, hurwitz_bound, hurwitz_degree_ci,
                           non_curve_direction)
from components.errors import InternalConsistencyError, OutOfRangeError, ShapeError, ValidationError
from components.polytope import VolumeForm
from components.toric import ToricSpec

GRASSMANNIAN_DIM = 5
UPPER_BOUND_NOTE = ('Degrees of the generic complete intersection U_G; for the incidence variety V_G '
                    'they are upper bounds, the Hurwitz form of V_G may carry extraneous factors')


@dataclass(frozen=True)
class GameSpec:
    """This class represents the format (k_1 + 1) x ... x (k_l + 1) of a game with l players"""

    k: tuple

    def __post_init__(self):
        try:
            k = tuple(operator.index(x) for x in self.k)
        except TypeError:
            raise ValidationError('A game format consists of integers')
        if len(k) < 2:
            raise ShapeError(f'A game needs at least two players ({list(k)} was passed)')
        if any(x < 1 for x in k):
            raise ValidationError(f'Every player needs at least two strategies ({list(k)} was passed)')
        object.__setattr__(self, 'k', k)

    @property
    def ell(self) -> int:
        return len(self.k)

    @property
    def dim(self) -> int:
        """d = k_1 + ... + k_l"""
        return sum(self.k)

    @property
    def dims(self) -> tuple:
        """n_i = prod_(j != i) (k_j + 1) - 1"""
        return tuple(prod(x + 1 for j, x in enumerate(self.k) if j != i) - 1 for i in range(self.ell))

    @property
    def codim(self) -> int:
        return sum(self.dims) - self.dim

    @property
    def alpha_star(self) -> tuple:
        """The exponent n - k whose multidegree coefficient counts totally mixed equilibria"""
        return tuple(n - x for n, x in zip(self.dims, self.k))

    @cached_property
    def ambient(self) -> Ambient:
        return Ambient(self.dims)

    @cached_property
    def sigma(self) -> Ambient:
        """The product of projective spaces P^k_1 x ... x P^k_l with hyperplane classes H_i"""
        return Ambient(self.k, 'H')

    def hat(self, i) -> ChowClass:
        """H^_i = sum of H_j over j != i"""
        return self.sigma.linear([int(j != i) for j in range(self.ell)])

    def to_dict(self) -> dict:
        return {'format': [x + 1 for x in self.k]}


def _power_product(g, exponents) -> ChowClass:
    return reduce(operator.mul, (g.hat(i) ** e for i, e in enumerate(exponents)), g.sigma.one())


def nash_delta(g) -> int:
    """Returns the number of totally mixed Nash equilibria, the integral of H = prod H^_i^k_i"""
    return _power_product(g, g.k).integral()


def nash_hurwitz_bound(g) -> list:
    """
    This function evaluates the expected degree vector of the Nash discriminant

    u_i is the integral of 2H + H_(i) (-H^_i + sum_j (k_j H^_j - (k_j + 1) H_j)) with H_(i) = H / H^_i.

    Parameters:
        g (GameSpec): The game format

    Returns:
        list: One degree per player
    """
    sigma = g.sigma
    twice = 2 * nash_delta(g)
    common = sum((g.hat(j) * x for j, x in enumerate(g.k)), sigma.linear([-x - 1 for x in g.k]))
    degrees = []
    for i in range(g.ell):
        reduced = _power_product(g, shift(g.k, i, -1))
        degrees.append(twice + (reduced * (common - g.hat(i))).integral())
    return degrees


def binary_game_bound(ell) -> int:
    """Closed form of the expected Nash discriminant degree for l players with two strategies each"""
    ell = operator.index(ell)
    if ell < 3:
        raise OutOfRangeError(f'The closed form holds for at least three players ({ell} was passed)')
    value = factorial(ell - 1) * sum(Fraction((-1) ** j, factorial(j)) * ((ell - 3) * (ell - j) + ell)
                                     for j in range(ell + 1))
    if value.denominator != 1:
        raise InternalConsistencyError(f'The binary game bound for {ell} players is not an integer ({value})')
    return value.numerator


def game_to_toric(g) -> ToricSpec:
    """
    This function lists the support sets of the Segre-embedded game variety

    A_i is the set of lattice points of Delta_k_1 x ... x Delta_k_l with the i-th factor pinned to 0,
    Delta_k being {0, e_1, ..., e_k} in Z^k.
    """
    simplices = [[(0,) * x] + [unit(x, a) for a in range(x)] for x in g.k]
    supports = []
    for i in range(g.ell):
        factors = [[(0,) * x] if j == i else simplices[j] for j, x in enumerate(g.k)]
        supports.append(tuple(sum(point, ()) for point in product(*factors)))
    return ToricSpec(g.dim, tuple(supports))


def _volume_numerators(g) -> ChowClass:
    """prod_i (H^_i)^k_i, untruncated"""
    free = Ambient((g.dim,) * g.ell)
    hats = [free.linear([int(j != i) for j in range(g.ell)]) for i in range(g.ell)]
    return reduce(operator.mul, (h ** x for h, x in zip(hats, g.k)), free.one())


def game_volume_polynomial(g) -> VolumeForm:
    """Returns vol(T_1 P_1 + ... + T_l P_l) = prod_i (sum_(j != i) T_j)^k_i / k_i! for the game polytopes"""
    scale = prod(factorial(x) for x in g.k)
    return VolumeForm(g.ell, g.dim, tuple((e, Fraction(c, scale)) for e, c in _volume_numerators(g).items()))


def game_multidegree(g) -> ChowClass:
    """
    This function reads the multidegree of the game variety off its volume polynomial

    delta_(n - gamma) = gamma! * mu_gamma for every |gamma| = d.
    """
    scale = prod(factorial(x) for x in g.k)
    terms = {}
    for gamma, coefficient in _volume_numerators(g).items():
        alpha = tuple(n - x for n, x in zip(g.dims, gamma))
        if any(a < 0 for a in alpha):
            continue
        value = Fraction(coefficient * prod(factorial(x) for x in gamma), scale)
        if value.denominator != 1:
            raise InternalConsistencyError(f'The multidegree coefficient at {list(alpha)} is not an integer')
        terms[alpha] = value.numerator
    return ChowClass(g.ambient, terms)


def _curve_class(g, beta) -> ChowClass:
    return _power_product(g, tuple(n - b for n, b in zip(g.dims, beta)))


def is_curve_section_game(g, beta, multidegree=None) -> bool:
    """Tells whether beta is a curve direction: some delta_(beta - e_j) with beta_j >= 1 is positive"""
    beta = check_total(g.ambient, beta, g.codim + 1, 'genus direction')
    multidegree = game_multidegree(g) if multidegree is None else multidegree
    return any(multidegree.coefficient(lowered) > 0
               for lowered in (shift(beta, j, -1) for j in range(g.ell)) if lowered is not None)


def splits_into_lines(g, beta) -> bool:
    """
    This function tells whether the curve section in direction beta is a disjoint union of lines

    When m_j = n_j - beta_j equals d - k_j, the m_j sections of H^_j do not involve the j-th factor and cut
    finitely many points of the other factors. Over each point the remaining k_j - 1 sections restrict to
    hyperplanes of P^k_j and leave a line.
    """
    cut = tuple(n - b for n, b in zip(g.dims, beta))
    return any(m == g.dim - x for m, x in zip(cut, g.k))


def game_genus(g, beta, mode=GATED) -> int:
    """
    This function computes the multisectional genus of the game variety by adjunction on P^k_1 x ... x P^k_l

    The curve is cut by n_j - beta_j sections of class H^_j; with m = n - beta,
    2g - 2 is the integral of prod H^_j^m_j * (sum_j m_j H^_j + K).
    The raw value is the arithmetic genus, 1 - N on a union of N disjoint lines.
    The gated value is 0 off the curve directions and on unions of lines, as the lattice point count gives.

    Parameters:
        g (GameSpec): The game format
        beta (tuple): Direction with |beta| = c + 1 inside the box
        mode (str): 'raw' or 'gated'

    Returns:
        int: The genus
    """
    return _game_genus(g, beta, mode)


def _game_genus(g, beta, mode, multidegree=None) -> int:
    check_mode(mode)
    beta = check_total(g.ambient, beta, g.codim + 1, 'genus direction')
    if mode == GATED and (not is_curve_section_game(g, beta, multidegree) or splits_into_lines(g, beta)):
        return 0
    cut = tuple(n - b for n, b in zip(g.dims, beta))
    adjoint = sum((g.hat(j) * m for j, m in enumerate(cut)), g.sigma.canonical_class())
    twice = (_curve_class(g, beta) * adjoint).integral()
    if twice % 2:
        raise InternalConsistencyError(f'The adjunction degree {twice} at {list(beta)} is odd')
    return 1 + twice // 2


def game_genus_polynomial(g, mode=GATED) -> ChowClass:
    multidegree = game_multidegree(g)
    return ChowClass(g.ambient, {beta: _game_genus(g, beta, mode, multidegree)
                                 for beta in g.ambient.exponents(g.codim + 1)})


def nash_genus_vector(g) -> list:
    """Genera of the curve sections in the directions alpha* + e_i, None where alpha* + e_i leaves the box"""
    genera = []
    for i in range(g.ell):
        raised = shift(g.alpha_star, i)
        genera.append(game_genus(g, raised, RAW) if g.ambient.contains(raised) else None)
    return genera


def game_hurwitz_degree(g, alpha, mode=GATED) -> DegreeReport:
    """This function bounds the Hurwitz degrees of the game variety at any alpha with |alpha| = c"""
    check_mode(mode)
    alpha = check_total(g.ambient, alpha, g.codim, 'exponent vector')
    multidegree = game_multidegree(g)
    delta = multidegree.coefficient(alpha)
    flags = {DEGENERATE_BOUND_ONLY}
    if delta < 2:
        flags.add(DELTA_BELOW_TWO)
    genus_vector = []
    for i in range(g.ell):
        raised = shift(alpha, i)
        if not g.ambient.contains(raised):
            genus_vector.append(None)
            flags.add(non_curve_direction(i + 1))
            continue
        if not is_curve_section_game(g, raised, multidegree):
            flags.add(non_curve_direction(i + 1))
        genus_vector.append(_game_genus(g, raised, mode, multidegree))
    return DegreeReport(alpha, delta, tuple(genus_vector), tuple(hurwitz_bound(delta, genus_vector)), tuple(flags))


@dataclass(frozen=True)
class GraphSpec:
    """This class represents a simple graph on the vertices 1, ..., l"""

    ell: int
    edges: tuple = ()

    def __post_init__(self):
        """This method validates the graph and sorts its edges"""
        try:
            ell = operator.index(self.ell)
            edges = [tuple(operator.index(v) for v in edge) for edge in self.edges]
        except TypeError:
            raise ValidationError('Graph vertices and edges must be given by integers')
        if ell < 1:
            raise ValidationError(f'A graph needs at least one vertex ({ell} was passed)')
        if any(len(edge) != 2 for edge in edges):
            raise ShapeError('Every edge must join exactly two vertices')
        if any(not 1 <= v <= ell for edge in edges for v in edge):
            raise OutOfRangeError(f'Edge endpoints must be vertices between 1 and {ell}')
        if any(i == j for i, j in edges):
            raise ValidationError('Graphs may not have loops')
        edges = sorted(tuple(sorted(edge)) for edge in edges)
        if len(set(edges)) != len(edges):
            raise ValidationError('Graphs may not have multiple edges')
        object.__setattr__(self, 'ell', ell)
        object.__setattr__(self, 'edges', tuple(edges))

    def degree(self, vertex) -> int:
        return sum(vertex in edge for edge in self.edges)

    def to_dict(self) -> dict:
        return {'vertices': self.ell, 'edges': [list(edge) for edge in self.edges]}


def graph_degree_matrix(g) -> tuple:
    """
    This function builds the complete intersection type of the line incidence variety of a graph

    Returns:
        tuple: The ambient (P^5)^l and the matrix with rows 2e_i for every vertex, then e_i + e_j for every edge
    """
    ambient = Ambient((GRASSMANNIAN_DIM,) * g.ell)
    rows = [tuple(2 * x for x in unit(g.ell, i)) for i in range(g.ell)]
    rows += [tuple(int(v in (i - 1, j - 1)) for v in range(g.ell)) for i, j in g.edges]
    return ambient, DegreeMatrix(tuple(rows))


def graph_variety(g) -> CompleteIntersection:
    return CompleteIntersection(*graph_degree_matrix(g))


def graph_multidegree(g) -> ChowClass:
    """Returns 2^l T_1 ... T_l prod_(ij in G) (T_i + T_j)"""
    ambient = Ambient((GRASSMANNIAN_DIM,) * g.ell)
    factors = [ambient.monomial((1,) * g.ell, 2 ** g.ell)]
    factors += [ambient.generator(i - 1) + ambient.generator(j - 1) for i, j in g.edges]
    return reduce(operator.mul, factors)


def graph_hurwitz_degree(g, alpha, mode=RAW) -> DegreeReport:
    """Degree report of the Hurwitz form of U_G, an upper bound for V_G"""
    ambient, matrix = graph_degree_matrix(g)
    return replace(hurwitz_degree_ci(ambient, matrix, alpha, mode), note=UPPER_BOUND_NOTE)
