"""This module contains the class that dispatches a request to the invariant computations"""

from dataclasses import dataclass

from components import apps, ci, toric
from components.chowring import format_monomial
from components.errors import ValidationError
from components.report import Report


class CompleteIntersectionVariety:
    """Adapter for a complete intersection given by a degree matrix"""

    kind = 'complete intersection'
    default_mode = ci.RAW

    def __init__(self, spec):
        self.spec = spec
        self.ambient = spec.ambient
        self.codim = spec.codim

    def multidegree(self):
        return ci.multidegree_ci(self.spec.ambient, self.spec.matrix)

    def volume_polynomial(self):
        return None

    def genus(self, beta, mode):
        return ci.genus_ci(self.spec.ambient, self.spec.matrix, beta, mode)

    def genus_polynomial(self, mode):
        return ci.genus_polynomial_ci(self.spec.ambient, self.spec.matrix, mode)

    def hurwitz_degree(self, alpha, mode):
        return ci.hurwitz_degree_ci(self.spec.ambient, self.spec.matrix, alpha, mode)

    def extra(self):
        return []


class GraphVariety(CompleteIntersectionVariety):
    """Adapter for the line incidence variety of a graph, through its complete intersection U_G"""

    kind = 'graph'

    def __init__(self, spec):
        super().__init__(apps.graph_variety(spec))
        self.graph = spec

    def multidegree(self):
        return apps.graph_multidegree(self.graph)

    def hurwitz_degree(self, alpha, mode):
        return apps.graph_hurwitz_degree(self.graph, alpha, mode)


class ToricVariety:
    """Adapter for a toric variety given by support sets"""

    kind = 'toric variety'
    default_mode = ci.GATED

    def __init__(self, spec):
        self.spec = spec
        self.ambient = spec.ambient
        self.codim = spec.codim

    def multidegree(self):
        return toric.toric_multidegree(self.spec)

    def volume_polynomial(self):
        return toric.toric_volume_polynomial(self.spec)

    def genus(self, beta, mode):
        return toric.toric_genus(self.spec, beta, mode)

    def genus_polynomial(self, mode):
        return toric.toric_genus_polynomial(self.spec, mode)

    def hurwitz_degree(self, alpha, mode):
        return toric.toric_hurwitz_degree(self.spec, alpha)

    def extra(self):
        return []


class GameVariety:
    """Adapter for the Segre-embedded variety of a game, computed in P^k_1 x ... x P^k_l"""

    kind = 'game'
    default_mode = ci.GATED

    def __init__(self, spec):
        self.spec = spec
        self.ambient = spec.ambient
        self.codim = spec.codim

    def multidegree(self):
        return apps.game_multidegree(self.spec)

    def volume_polynomial(self):
        return apps.game_volume_polynomial(self.spec)

    def genus(self, beta, mode):
        return apps.game_genus(self.spec, beta, mode)

    def genus_polynomial(self, mode):
        return apps.game_genus_polynomial(self.spec, mode)

    def hurwitz_degree(self, alpha, mode):
        return apps.game_hurwitz_degree(self.spec, alpha, mode)

    def extra(self):
        """Totally mixed Nash equilibria and the expected degrees of the Nash discriminant"""
        alpha_star = self.spec.alpha_star
        equilibria = apps.nash_delta(self.spec)
        bound = apps.nash_hurwitz_bound(self.spec)
        if self.ambient.contains(alpha_star):
            where = f'at {format_monomial(alpha_star)}'
        else:
            where = f'(n - k = {Report.vector(alpha_star)} lies outside the box)'
        return [('nash', {'alpha_star': list(alpha_star), 'equilibria': equilibria, 'hurwitz_bound': bound},
                 f'{equilibria} totally mixed equilibria {where}, discriminant degrees {Report.vector(bound)}')]


VARIETIES = {ci.CompleteIntersection: CompleteIntersectionVariety,
             toric.ToricSpec: ToricVariety,
             apps.GameSpec: GameVariety,
             apps.GraphSpec: GraphVariety}


@dataclass(frozen=True)
class SweepRow:
    """This class represents one row of a sweep over all exponent vectors of a degree"""

    index: int
    alpha: tuple
    delta: int
    degrees: tuple
    flags: tuple = ()
    symbol: str = 'T'

    @property
    def monomial(self) -> str:
        return format_monomial(self.alpha, self.symbol)

    def to_dict(self, degrees_key='hurwitz_degree') -> dict:
        return {'index': self.index,
                'alpha': list(self.alpha),
                'monomial': self.monomial,
                'delta': self.delta,
                degrees_key: list(self.degrees),
                'flags': list(self.flags)}


class Calculator:
    """This class runs one request"""

    def __init__(self, request, logger):
        """
        This class constructor selects the adapter for the variety of the request

        Parameters:
            request (Request): Validated request
            logger (module): logging module
        """
        self.request = request
        self.logger = logger
        self.variety = VARIETIES[type(request.spec)](request.spec)
        self.mode = request.options.genus_mode or self.variety.default_mode

    def run(self) -> Report:
        """
        This method computes the result of the query

        Returns:
            Report: The result, ready to be printed or exported
        """
        kind = self.request.query.kind
        self.logger.info(f'Computing {kind} of a {self.variety.kind}')
        report = Report(self.request, self.logger)
        getattr(self, f'_{kind}')(report)
        self.logger.info('Computation finished')
        return report

    def _multidegree(self, report):
        multidegree = self.variety.multidegree()
        report.add('multidegree', multidegree.to_dict(), str(multidegree))
        volume = self.variety.volume_polynomial()
        if volume is not None:
            report.add('volume_polynomial', volume.to_dict(), str(volume), 'volume polynomial')
        self._extra(report)

    def _genus(self, report):
        report.add('genus_mode', self.mode)
        beta = self.request.query.beta
        if beta is None:
            polynomial = self.variety.genus_polynomial(self.mode)
            report.add('genus_polynomial', polynomial.to_dict(), str(polynomial), f'genus polynomial ({self.mode})')
        else:
            genus = self.variety.genus(beta, self.mode)
            report.add('beta', list(beta))
            report.add('genus', genus, str(genus), f'genus at {format_monomial(beta)} ({self.mode})')

    def _hurwitz(self, report):
        report.add('genus_mode', self.mode)
        alpha = self.request.query.alpha
        if alpha is not None:
            report.degree_report(self.variety.hurwitz_degree(alpha, self.mode))
        else:
            rows = []
            notes = set()
            for index, alpha in enumerate(self.variety.ambient.exponents(self.variety.codim)):
                self.logger.info(f'Computing the Hurwitz degrees at {format_monomial(alpha)}')
                degree_report = self.variety.hurwitz_degree(alpha, self.mode)
                rows.append(SweepRow(index, alpha, degree_report.delta, degree_report.hurwitz_degree,
                                     degree_report.flags))
                if degree_report.note:
                    notes.add(degree_report.note)
            report.sweep(rows, 'hurwitz degree')
            for note in sorted(notes):
                report.add('note', note, note)
        self._extra(report)

    def _chow(self, report):
        multidegree = self.variety.multidegree()
        if self.variety.codim < 1:
            raise ValidationError('A variety of codimension 0 has no Chow forms')
        alpha = self.request.query.alpha
        if alpha is not None:
            degrees = ci.chow_degrees(multidegree, alpha, self.variety.codim)
            report.add('alpha', list(alpha))
            report.add('chow_degrees', degrees, Report.vector(degrees),
                       f'chow degrees at {format_monomial(alpha)}')
        else:
            rows = [SweepRow(index, alpha, None, tuple(ci.chow_degrees(multidegree, alpha, self.variety.codim)))
                    for index, alpha in enumerate(self.variety.ambient.exponents(self.variety.codim - 1))]
            report.sweep(rows, 'chow degrees')

    def _extra(self, report):
        for key, value, text in self.variety.extra():
            report.add(key, value, text)
