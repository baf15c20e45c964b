"""This module contains the invariants of generic complete intersections in a product of projective spaces"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
import operator

from components.chowring import Ambient, ChowClass, shift
from components.errors import InternalConsistencyError, OutOfRangeError, ShapeError, ValidationError

RAW = 'raw'
GATED = 'gated'
GENUS_MODES = (RAW, GATED)

DEGENERATE_BOUND_ONLY = 'degenerate_bound_only'
DELTA_BELOW_TWO = 'delta_below_two'


def non_curve_direction(i) -> str:
    """Flag for a genus direction alpha + e_i that does not cut a curve (i is 1-based)"""
    return f'non_curve_direction({i})'


def check_mode(mode) -> str:
    if mode not in GENUS_MODES:
        raise ValidationError(f'Unknown genus mode {mode!r}, choose one of {", ".join(GENUS_MODES)}')
    return mode


@dataclass(frozen=True)
class DegreeMatrix:
    """This class represents the degrees b_ij of the c defining equations in the l factors"""

    rows: tuple

    def __post_init__(self):
        """This method validates the entries and freezes the rows"""
        try:
            rows = tuple(tuple(operator.index(b) for b in row) for row in self.rows)
        except TypeError:
            raise ValidationError('Degree matrix entries must be integers')
        if not rows:
            raise ShapeError('A degree matrix needs at least one row')
        if len({len(row) for row in rows}) != 1 or not rows[0]:
            raise ShapeError(f'All rows of a degree matrix must have the same positive length ({rows} was passed)')
        if any(b < 0 for row in rows for b in row):
            raise ValidationError('Degree matrix entries must be nonnegative')
        if any(not any(row) for row in rows):
            raise ValidationError('Every row of a degree matrix must be nonzero')
        object.__setattr__(self, 'rows', rows)

    @property
    def codim(self) -> int:
        return len(self.rows)

    @property
    def cols(self) -> int:
        return len(self.rows[0])

    @property
    def column_sums(self) -> tuple:
        return tuple(sum(column) for column in zip(*self.rows))

    def to_list(self) -> list:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class CompleteIntersection:
    """This class bundles an ambient product of projective spaces with a degree matrix"""

    ambient: Ambient
    matrix: DegreeMatrix

    def __post_init__(self):
        ambient = self.ambient if isinstance(self.ambient, Ambient) else Ambient(tuple(self.ambient))
        matrix = self.matrix if isinstance(self.matrix, DegreeMatrix) else DegreeMatrix(tuple(self.matrix))
        if matrix.cols != ambient.ell:
            raise ShapeError(f'The degree matrix has {matrix.cols} columns but the ambient space '
                             f'has {ambient.ell} factors')
        object.__setattr__(self, 'ambient', ambient)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def codim(self) -> int:
        return self.matrix.codim

    def divisors(self) -> list:
        """The classes D_p = sum_j b_pj T_j of the defining equations"""
        return [self.ambient.linear(row) for row in self.matrix.rows]

    def multidegree(self) -> ChowClass:
        return multidegree_ci(self.ambient, self.matrix)

    def genus(self, beta, mode=RAW) -> int:
        return genus_ci(self.ambient, self.matrix, beta, mode)

    def genus_polynomial(self, mode=RAW) -> ChowClass:
        return genus_polynomial_ci(self.ambient, self.matrix, mode)

    def hurwitz_degree(self, alpha, mode=RAW) -> DegreeReport:
        return hurwitz_degree_ci(self.ambient, self.matrix, alpha, mode)


@dataclass(frozen=True)
class DegreeReport:
    """This class represents the degree data attached to one exponent vector alpha"""

    alpha: tuple
    delta: int
    genus_vector: tuple
    hurwitz_degree: tuple
    flags: tuple = ()
    note: str = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'flags', tuple(sorted(set(self.flags))))

    def to_dict(self) -> dict:
        """This method returns a JSON-ready representation of the report"""
        return {'alpha': list(self.alpha),
                'delta': self.delta,
                'genus_vector': list(self.genus_vector),
                'hurwitz_degree': list(self.hurwitz_degree),
                'flags': list(self.flags),
                'note': self.note}


def _variety(n, B) -> CompleteIntersection:
    return CompleteIntersection(n, B)


def check_total(ambient, vector, total, name):
    vector = ambient.check(vector, name)
    if sum(vector) != total:
        raise OutOfRangeError(f'The {name} {list(vector)} must have entry sum {total}')
    return vector


def multidegree_ci(n, B) -> ChowClass:
    """
    This function computes the class [X] = D_1 ... D_c of a complete intersection

    Parameters:
        n (Ambient): The product of projective spaces
        B (DegreeMatrix): The degree matrix

    Returns:
        ChowClass: The multidegree, homogeneous of degree c or zero
    """
    variety = _variety(n, B)
    return reduce(operator.mul, variety.divisors(), variety.ambient.one())


def _section_class(variety, beta) -> ChowClass:
    """Class of the curve section [X] * T^(n - beta)"""
    ambient = variety.ambient
    cut = ambient.monomial(tuple(n - b for n, b in zip(ambient.dims, beta)))
    return variety.multidegree() * cut


def is_curve_section(n, B, beta) -> bool:
    """Tells whether a generic multilinear space of type beta meets X in a curve"""
    variety = _variety(n, B)
    beta = check_total(variety.ambient, beta, variety.codim + 1, 'genus direction')
    return bool(_section_class(variety, beta))


def genus_ci(n, B, beta, mode=RAW) -> int:
    """
    This function computes the multisectional genus g_beta by adjunction

    With m = n - beta the curve is [X] * T^m and 2g - 2 is the degree of
    (D_1 + ... + D_c + m_1 T_1 + ... + m_l T_l + K) on it. The raw value is returned unchanged;
    the gated value is 0 when the section is not a curve.

    Parameters:
        n (Ambient): The product of projective spaces
        B (DegreeMatrix): The degree matrix
        beta (tuple): Direction with |beta| = c + 1 inside the box [0, n]
        mode (str): 'raw' or 'gated'

    Returns:
        int: The genus
    """
    check_mode(mode)
    variety = _variety(n, B)
    ambient = variety.ambient
    beta = check_total(ambient, beta, variety.codim + 1, 'genus direction')
    section = _section_class(variety, beta)
    if mode == GATED and not section:
        return 0
    cut = [n - b for n, b in zip(ambient.dims, beta)]
    adjoint = sum(variety.divisors(), ambient.linear(cut)) + ambient.canonical_class()
    twice = (section * adjoint).integral()
    if twice % 2:
        raise InternalConsistencyError(f'The adjunction degree {twice} at {list(beta)} is odd')
    return 1 + twice // 2


def genus_polynomial_ci(n, B, mode=RAW) -> ChowClass:
    """Collects g_beta T^beta over all directions |beta| = c + 1 inside the box"""
    variety = _variety(n, B)
    ambient = variety.ambient
    if variety.codim + 1 > ambient.total:
        raise OutOfRangeError(f'A variety of codimension {variety.codim} in dimension {ambient.total} has no curve '
                              f'sections')
    return ChowClass(ambient, {beta: genus_ci(ambient, variety.matrix, beta, mode)
                               for beta in ambient.exponents(variety.codim + 1)})


def hurwitz_bound(delta, genus_vector) -> list:
    """
    This function evaluates the degree bound u_i <= 2 (g_i + delta - 1)

    Directions without a genus (None) get 0.
    """
    return [0 if genus is None else 2 * (genus + delta - 1) for genus in genus_vector]


def hurwitz_degree_ci(n, B, alpha, mode=RAW) -> DegreeReport:
    """
    This function computes the degree vector of the Hurwitz form of a complete intersection

    u_i = 2 delta_alpha + sum_j delta_(alpha + e_i - e_j) * (colsum_j - alpha_j - 1 - [i = j]), the sum running
    over the j with alpha_j + [i = j] > 0. Whenever alpha + e_i lies in the box, u_i must agree with the bound
    2 (g_(alpha + e_i) + delta_alpha - 1) computed from the raw adjunction genus.

    Parameters:
        n (Ambient): The product of projective spaces
        B (DegreeMatrix): The degree matrix
        alpha (tuple): Exponent vector with |alpha| = c inside the box
        mode (str): Genus mode used for the reported genus vector

    Returns:
        DegreeReport: delta, genus vector, degree vector and flags
    """
    check_mode(mode)
    variety = _variety(n, B)
    ambient = variety.ambient
    alpha = check_total(ambient, alpha, variety.codim, 'exponent vector')
    multidegree = variety.multidegree()
    delta = multidegree.coefficient(alpha)
    column_sums = variety.matrix.column_sums

    flags = set()
    if delta < 2:
        flags.add(DELTA_BELOW_TWO)
    degrees = []
    genus_vector = []
    for i in range(ambient.ell):
        raised = shift(alpha, i)
        u = 2 * delta
        for j in range(ambient.ell):
            lowered = shift(raised, j, -1)
            if lowered is not None:
                u += multidegree.coefficient(lowered) * (column_sums[j] - alpha[j] - 1 - (i == j))
        degrees.append(u)

        if not ambient.contains(raised):
            genus_vector.append(None)
            flags.add(non_curve_direction(i + 1))
            continue
        raw = genus_ci(ambient, variety.matrix, raised, RAW)
        if u != 2 * (raw + delta - 1):
            raise InternalConsistencyError(f'Hurwitz degree {u} and genus {raw} disagree at {list(alpha)} '
                                           f'in direction {i + 1}')
        if not _section_class(variety, raised):
            flags.add(non_curve_direction(i + 1))
            genus_vector.append(0 if mode == GATED else raw)
        else:
            genus_vector.append(raw)
    return DegreeReport(alpha, delta, tuple(genus_vector), tuple(degrees), tuple(flags))


def chow_degrees(md, alpha, codim=None) -> list:
    """
    This function reads the degrees of the Chow form off a multidegree

    Parameters:
        md (ChowClass): A homogeneous multidegree of degree c
        alpha (tuple): Exponent vector with |alpha| = c - 1
        codim (int): The codimension c, read off md when omitted; a zero multidegree needs it

    Returns:
        list: The coefficients of T^(alpha + e_i), one per factor
    """
    codim = md.degree if codim is None else operator.index(codim)
    if codim is None:
        raise ValidationError('Chow degrees of a zero multidegree need the codimension')
    if codim < 1:
        raise OutOfRangeError(f'Chow degrees need a positive codimension ({codim} was passed)')
    alpha = check_total(md.ambient, alpha, codim - 1, 'exponent vector')
    return [md.coefficient(shift(alpha, i)) for i in range(md.ambient.ell)]
