"""This module is needed to work with command-line arguments"""

import argparse
import json

from pathvalidate.argparse import validate_filepath_arg

VERSION = '1.0'
QUERIES = ('multidegree', 'genus', 'hurwitz', 'chow')


class Parser:
    """This class is needed to work with command-line arguments"""

    def __init__(self):
        """
        This class constructor initializes the command-line arguments parser
        and calls the method that adds command-line arguments
        """
        self.parser = argparse.ArgumentParser(
            prog='hurwitzcalc',
            description='Degrees of multigraded Hurwitz and Chow forms, multidegrees and multisectional genera.')
        self.__add_arguments()

    def __add_arguments(self):
        """This method adds command-line arguments"""
        self.parser.add_argument('query', nargs='?', choices=QUERIES, default=None,
                                 help='What to compute (taken from the request document when omitted)')
        self.parser.add_argument('--version', help='Print version info', action='version', version=f'Version {VERSION}')
        self.parser.add_argument('--input', type=validate_filepath_arg, dest='input',
                                 help='Read the JSON request from a file instead of STDIN')
        self.parser.add_argument('--ambient', type=validate_vector_arg,
                                 help='Dimensions of the projective factors of a complete intersection (example "2,2")')
        self.parser.add_argument('--degree-matrix', type=validate_matrix_arg, dest='degree_matrix',
                                 help='Degree matrix of a complete intersection, rows separated by ";" '
                                      '(example "2,1;3,4")')
        self.parser.add_argument('--toric', type=validate_toric_arg,
                                 help='Toric variety as JSON (example \'{"dim": 1, "supports": [[[0], [1], [2]]]}\')')
        self.parser.add_argument('--game', type=validate_game_arg,
                                 help='Game format, numbers of strategies per player (example "2,2,2")')
        self.parser.add_argument('--graph', type=validate_graph_arg,
                                 help='Graph as "vertices:edges" (example "3:1-2,2-3")')
        self.parser.add_argument('--alpha', type=validate_vector_arg, help='Exponent vector for hurwitz and chow')
        self.parser.add_argument('--beta', type=validate_vector_arg, help='Genus direction for genus')
        self.parser.add_argument('--mode', choices=('raw', 'gated'), default=None,
                                 help='Genus convention for directions that do not cut a curve')
        self.parser.add_argument('--format', choices=('table', 'json'), default=None, dest='output',
                                 help='Print the result as a table (default) or as JSON')
        self.parser.add_argument('--verbose', help='Outputs verbose status messages', action='store_true')
        self.parser.add_argument('--colorize', help='Print the result of the utility in colorized mode',
                                 action='store_true')
        self.parser.add_argument('--to-html', type=validate_filepath_arg, dest='to_html',
                                 help='Saves the result in HTML format')

    def parse_args(self, argv) -> argparse.Namespace:
        """
        This method parses command-line arguments and return them

        Parameters:
            argv (list): List of command-line arguments
        """
        return self.parser.parse_args(argv)


def validate_vector_arg(input_value) -> list:
    """
    This function checks the format of comma separated nonnegative integers such as --alpha

    Parameters:
        input_value (str): Argument value
    """
    try:
        vector = [int(part) for part in input_value.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'Invalid vector "{input_value}". Expected comma separated integers (example "1,2")')
    if any(x < 0 for x in vector):
        raise argparse.ArgumentTypeError(f'Vector entries must be nonnegative ({input_value} was passed)')
    return vector


def validate_matrix_arg(input_value) -> list:
    """
    This function checks the format of the argument value --degree-matrix

    Parameters:
        input_value (str): Argument value --degree-matrix
    """
    rows = [validate_vector_arg(row) for row in input_value.split(';')]
    if len({len(row) for row in rows}) != 1:
        raise argparse.ArgumentTypeError(f'All rows of the degree matrix must have the same length ({input_value} '
                                         f'was passed)')
    return rows


def validate_toric_arg(input_value) -> dict:
    """
    This function checks the format of the argument value --toric

    Parameters:
        input_value (str): Argument value --toric
    """
    try:
        document = json.loads(input_value)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f'The toric argument must be a JSON object ({input_value} was passed)')
    if not isinstance(document, dict) or not {'dim', 'supports'} <= document.keys():
        raise argparse.ArgumentTypeError('The toric argument needs the keys "dim" and "supports"')
    return document


def validate_game_arg(input_value) -> list:
    """
    This function checks the format of the argument value --game

    Parameters:
        input_value (str): Argument value --game
    """
    strategies = validate_vector_arg(input_value)
    if len(strategies) < 2 or any(x < 2 for x in strategies):
        raise argparse.ArgumentTypeError(
            f'A game needs at least two players with at least two strategies each ({input_value} was passed)')
    return strategies


def validate_graph_arg(input_value) -> dict:
    """
    This function checks the format of the argument value --graph

    Parameters:
        input_value (str): Argument value --graph
    """
    vertices, _, edges = input_value.partition(':')
    try:
        vertices = int(vertices)
        edges = [[int(v) for v in edge.split('-')] for edge in edges.split(',') if edge]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'Invalid graph "{input_value}". Expected "vertices:edges" (example "3:1-2,2-3")')
    if vertices < 1 or any(len(edge) != 2 for edge in edges):
        raise argparse.ArgumentTypeError(
            f'Invalid graph "{input_value}". Expected at least one vertex and edges of the form "i-j"')
    return {'vertices': vertices, 'edges': edges}
