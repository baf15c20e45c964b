"""This module contains the class that prints the result of a calculation"""

import json

from pygments import highlight
from pygments.formatters.terminal import TerminalFormatter
from pygments.lexers.data import JsonLexer

from components.request import SCHEMA, spec_to_dict

SWEEP_COLUMNS = ('index', 'delta', 'monomial')


class Report:
    """This class collects the result of one request and renders it as a table or as JSON"""

    def __init__(self, request, logger, colorize=False):
        """
        This class constructor initializes an empty report

        Parameters:
            request (Request): The request being answered
            logger (module): logging module
            colorize (bool): Highlight JSON output
        """
        self.request = request
        self.logger = logger
        self.colorize = colorize
        self.result = {}
        self.lines = []
        self.rows = None
        self.sweep_label = None

    @staticmethod
    def vector(values) -> str:
        """Renders a vector as {a, b, c}, missing entries as -"""
        return '{' + ', '.join('-' if value is None else str(value) for value in values) + '}'

    @staticmethod
    def flags(flags) -> str:
        return ', '.join(flags) if flags else '-'

    def add(self, key, value, text=None, label=None):
        """
        This method stores one value of the result

        Parameters:
            key (str): JSON key
            value: JSON value
            text (str or NoneType): Table rendering, the value is left out of the table when None
            label (str or NoneType): Table label, defaults to the key
        """
        self.result[key] = value
        if text is not None:
            self.lines.append((label or key.replace('_', ' '), text))

    def degree_report(self, degree_report):
        """This method stores the degree data attached to one exponent vector"""
        for key, value in degree_report.to_dict().items():
            self.result[key] = value
        self.lines += [('alpha', self.vector(degree_report.alpha)),
                       ('delta', str(degree_report.delta)),
                       ('genus vector', self.vector(degree_report.genus_vector)),
                       ('hurwitz degree', self.vector(degree_report.hurwitz_degree)),
                       ('flags', self.flags(degree_report.flags))]
        if degree_report.note:
            self.lines.append(('note', degree_report.note))

    def sweep(self, rows, label):
        """
        This method stores a sweep over all exponent vectors of one degree

        Parameters:
            rows (list): Objects of class SweepRow
            label (str): Name of the degree column
        """
        key = label.replace(' ', '_')
        self.rows = rows
        self.sweep_label = label
        self.result['rows'] = [row.to_dict(key) for row in rows]

    def to_dict(self) -> dict:
        return {'schema': SCHEMA,
                'spec': spec_to_dict(self.request.spec),
                'query': self.request.query.to_dict(),
                'result': self.result}

    def header(self) -> tuple:
        return (*SWEEP_COLUMNS, self.sweep_label, 'flags')

    def cells(self) -> list:
        """This method renders every sweep row as a tuple of strings"""
        return [(str(row.index), '-' if row.delta is None else str(row.delta), row.monomial, self.vector(row.degrees),
                 self.flags(row.flags))
                for row in self.rows or ()]

    def table(self) -> str:
        """This method renders the sweep as aligned columns followed by the labelled values"""
        blocks = []
        if self.rows is not None:
            header = self.header()
            cells = [header] + self.cells()
            widths = [max(len(line[column]) for line in cells) for column in range(len(header))]
            blocks += [' | '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells]
        blocks += [f'{label}: {text}' for label, text in self.lines]
        return '\n'.join(blocks)

    def __str__(self) -> str:
        """This method override default __str__ method which computes the string representation of an object"""
        if self.request.options.output == 'json':
            self.logger.info('Printing the result to STDOUT in JSON')
            formatted_json = json.dumps(self.to_dict(), indent=4, sort_keys=True, ensure_ascii=False)
            if self.colorize:
                return highlight(formatted_json, JsonLexer(), TerminalFormatter())
            return formatted_json
        self.logger.info('Printing the result to STDOUT')
        return self.table()
