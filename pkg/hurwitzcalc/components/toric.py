"""This module contains the invariants of projective toric varieties given by support sets"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, prod
import operator

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from components.chowring import Ambient, ChowClass, compositions, shift
from components.ci import (DEGENERATE_BOUND_ONLY, DELTA_BELOW_TWO, GATED, DegreeReport, check_mode,
                           check_total, hurwitz_bound, non_curve_direction)
from components.errors import InternalConsistencyError, OutOfRangeError, ShapeError, SpecRejectedError
from components.polytope import MinkowskiSums, SupportSet, convex_hull, mixed_volume, volume_polynomial


def is_saturated(supports, dim) -> bool:
    """
    This function tells whether the differences of points within each support set generate Z^dim

    The lattice is all of Z^dim exactly when the difference matrix has dim invariant factors, all units.
    """
    differences = [[x - y for x, y in zip(point, support.points[0])]
                   for support in supports for point in support.points[1:]]
    if len(differences) < dim:
        return False
    factors = invariant_factors(Matrix(differences), domain=ZZ)
    return len(factors) == dim and all(abs(int(f)) == 1 for f in factors)


@dataclass(frozen=True)
class ToricSpec:
    """This class represents the toric variety of the support sets A_1, ..., A_l in Z^d"""

    dim: int
    supports: tuple
    _deltas: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        """This method validates the supports and checks the derived dimensions and the lattice"""
        dim = operator.index(self.dim)
        supports = tuple(s if isinstance(s, SupportSet) else SupportSet(dim, tuple(tuple(p) for p in s))
                         for s in self.supports)
        if not supports:
            raise ShapeError('A toric variety needs at least one support set')
        if any(s.dim != dim for s in supports):
            raise ShapeError(f'Every support set must live in Z^{dim}')
        object.__setattr__(self, 'dim', dim)
        object.__setattr__(self, 'supports', supports)
        if any(len(s) < 2 for s in supports):
            raise SpecRejectedError('Every support set needs at least two points, so that n_i >= 1')
        if self.codim < 0:
            raise SpecRejectedError(f'The support sets span projective spaces of total dimension {sum(self.dims)}, '
                                    f'less than the torus dimension {dim}')
        if not is_saturated(supports, dim):
            raise SpecRejectedError(f'The differences of the support points do not generate the lattice Z^{dim}')

    @property
    def dims(self) -> tuple:
        """n_i = |A_i| - 1"""
        return tuple(len(s) - 1 for s in self.supports)

    @property
    def codim(self) -> int:
        return sum(self.dims) - self.dim

    @cached_property
    def ambient(self) -> Ambient:
        return Ambient(self.dims)

    @cached_property
    def polytopes(self) -> tuple:
        """Newton polytopes P_i = conv(A_i)"""
        return tuple(convex_hull(s) for s in self.supports)

    @cached_property
    def sums(self) -> MinkowskiSums:
        return MinkowskiSums(self.polytopes)


def _delta(spec, alpha) -> int:
    if alpha not in spec._deltas:
        gamma = tuple(n - a for n, a in zip(spec.dims, alpha))
        value = Fraction(mixed_volume(zip(spec.polytopes, gamma), spec.dim, spec.sums))
        if value.denominator != 1:
            raise InternalConsistencyError(f'The mixed volume {value} for {list(alpha)} is not an integer')
        spec._deltas[alpha] = value.numerator
    return spec._deltas[alpha]


def toric_delta(spec, alpha) -> int:
    """
    This function computes one coefficient of the multidegree by a single mixed volume

    Parameters:
        spec (ToricSpec): The toric variety
        alpha (tuple): Exponent vector with |alpha| = c inside the box

    Returns:
        int: delta_alpha = MV(P_1 (n_1 - alpha_1 times), ..., P_l (n_l - alpha_l times))
    """
    alpha = check_total(spec.ambient, alpha, spec.codim, 'exponent vector')
    return _delta(spec, alpha)


def toric_multidegree(spec) -> ChowClass:
    """Returns [X] = sum_alpha delta_alpha T^alpha with every coefficient a mixed volume"""
    return ChowClass(spec.ambient, {alpha: _delta(spec, alpha) for alpha in spec.ambient.exponents(spec.codim)})


def toric_volume_polynomial(spec):
    return volume_polynomial(spec.polytopes, spec.sums)


def khovanskii_genus(polytopes, m, sums=None) -> int:
    """
    This function computes the genus of a generic curve cut by m_i equations with Newton polytope P_i

    g = sum over gamma <= m of (-1)^|m - gamma| * prod C(m_i, gamma_i) * #int(gamma_1 P_1 + ... + gamma_l P_l),
    every sub-multiset of the equations contributing one interior lattice point count.

    Parameters:
        polytopes (list): Newton polytopes P_1, ..., P_l in R^d
        m (tuple): Equation counts with |m| = d - 1
        sums (MinkowskiSums): Optional cache over the same polytopes

    Returns:
        int: The genus
    """
    sums = MinkowskiSums(polytopes) if sums is None else sums
    m = tuple(operator.index(x) for x in m)
    if len(m) != len(sums.polytopes):
        raise ShapeError(f'Equation counts {list(m)} do not match {len(sums.polytopes)} polytopes')
    if any(x < 0 for x in m) or sum(m) != sums.dim - 1:
        raise OutOfRangeError(f'Equation counts {list(m)} must be nonnegative and sum to {sums.dim - 1}')
    genus = 0
    for size in range(1, sum(m) + 1):
        for gamma in compositions(size, m):
            multiplicity = prod(comb(a, b) for a, b in zip(m, gamma))
            genus += (-1) ** (sum(m) - size) * multiplicity * sums.interior_lattice_points(gamma)
    return genus


def is_curve_section_toric(spec, beta) -> bool:
    """Tells whether beta is a curve direction: some delta_(beta - e_j) with beta_j >= 1 is positive"""
    beta = check_total(spec.ambient, beta, spec.codim + 1, 'genus direction')
    return any(_delta(spec, lowered) > 0
               for lowered in (shift(beta, j, -1) for j in range(spec.ambient.ell)) if lowered is not None)


def toric_genus(spec, beta, mode=GATED) -> int:
    """
    This function computes the multisectional genus g_beta from lattice points

    The curve section is cut by n_i - beta_i equations with Newton polytope P_i.
    In gated mode directions that are not curve sections have genus 0.
    """
    check_mode(mode)
    beta = check_total(spec.ambient, beta, spec.codim + 1, 'genus direction')
    if mode == GATED and not is_curve_section_toric(spec, beta):
        return 0
    return khovanskii_genus(spec.polytopes, tuple(n - b for n, b in zip(spec.dims, beta)), spec.sums)


def toric_genus_polynomial(spec, mode=GATED) -> ChowClass:
    return ChowClass(spec.ambient, {beta: toric_genus(spec, beta, mode)
                                    for beta in spec.ambient.exponents(spec.codim + 1)})


def toric_hurwitz_degree(spec, alpha) -> DegreeReport:
    """
    This function bounds the degree vector of the Hurwitz form of a toric variety

    The bound 2 (g_(alpha + e_i) + delta_alpha - 1) is exact only for polynodal varieties, which is not
    checked, so every report carries the bound-only flag. Directions leaving the box get u_i = 0.

    Parameters:
        spec (ToricSpec): The toric variety
        alpha (tuple): Exponent vector with |alpha| = c

    Returns:
        DegreeReport: delta, gated genus vector, bound and flags
    """
    alpha = check_total(spec.ambient, alpha, spec.codim, 'exponent vector')
    delta = _delta(spec, alpha)
    flags = {DEGENERATE_BOUND_ONLY}
    if delta < 2:
        flags.add(DELTA_BELOW_TWO)
    genus_vector = []
    for i in range(spec.ambient.ell):
        raised = shift(alpha, i)
        if not spec.ambient.contains(raised):
            genus_vector.append(None)
            flags.add(non_curve_direction(i + 1))
            continue
        if not is_curve_section_toric(spec, raised):
            flags.add(non_curve_direction(i + 1))
        genus_vector.append(toric_genus(spec, raised, GATED))
    return DegreeReport(alpha, delta, tuple(genus_vector), tuple(hurwitz_bound(delta, genus_vector)), tuple(flags))
