"""This module contains the request model: what to compute for which variety, and how to print it"""

from dataclasses import dataclass
import json

from components.apps import GameSpec, GraphSpec
from components.ci import GENUS_MODES, CompleteIntersection
from components.errors import ShapeError, ValidationError
from components.parser import QUERIES
from components.toric import ToricSpec

SCHEMA = 1
OUTPUTS = ('table', 'json')
SPEC_KINDS = ('complete_intersection', 'toric', 'game', 'graph')


@dataclass(frozen=True)
class Query:
    """This class represents the query kind with its optional exponent vector"""

    kind: str
    alpha: tuple = None
    beta: tuple = None

    def to_dict(self) -> dict:
        query = {'kind': self.kind}
        if self.alpha is not None:
            query['alpha'] = list(self.alpha)
        if self.beta is not None:
            query['beta'] = list(self.beta)
        return query


@dataclass(frozen=True)
class Options:
    genus_mode: str = None
    output: str = 'table'


@dataclass(frozen=True)
class Request:
    """This class represents one validated calculation request"""

    spec: object
    query: Query
    options: Options

    @property
    def ell(self) -> int:
        if isinstance(self.spec, CompleteIntersection):
            return self.spec.ambient.ell
        if isinstance(self.spec, ToricSpec):
            return len(self.spec.supports)
        return self.spec.ell


def spec_to_dict(spec) -> dict:
    """This function returns the request form of a variety presentation"""
    if isinstance(spec, CompleteIntersection):
        return {'complete_intersection': {'ambient': list(spec.ambient.dims), 'degrees': spec.matrix.to_list()}}
    if isinstance(spec, ToricSpec):
        return {'toric': {'dim': spec.dim, 'supports': [[list(p) for p in s.points] for s in spec.supports]}}
    if isinstance(spec, GameSpec):
        return {'game': spec.to_dict()}
    return {'graph': spec.to_dict()}


def parse_spec(document) -> object:
    """
    This function builds a variety presentation from its JSON form

    Parameters:
        document (dict): Exactly one of the keys complete_intersection, toric, game, graph

    Returns:
        CompleteIntersection, ToricSpec, GameSpec or GraphSpec
    """
    if not isinstance(document, dict) or len(document) != 1 or next(iter(document)) not in SPEC_KINDS:
        raise ValidationError(f'The spec must have exactly one of the keys {", ".join(SPEC_KINDS)}')
    kind, body = next(iter(document.items()))
    try:
        if kind == 'complete_intersection':
            return CompleteIntersection(tuple(body['ambient']), tuple(tuple(row) for row in body['degrees']))
        if kind == 'toric':
            return ToricSpec(body['dim'], tuple(tuple(tuple(p) for p in s) for s in body['supports']))
        if kind == 'game':
            return GameSpec(tuple(x - 1 for x in body['format']))
        return GraphSpec(body['vertices'], tuple(tuple(edge) for edge in body.get('edges', ())))
    except KeyError as error:
        raise ValidationError(f'The {kind} spec is missing the key {error}')
    except TypeError:
        raise ValidationError(f'The {kind} spec is malformed')


def _vector(value, name):
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ValidationError(f'The {name} must be a list of integers')
    return tuple(value)


def parse_request(document) -> Request:
    """
    This function validates a request document

    Parameters:
        document (dict): Keys spec, query and optionally options and schema

    Returns:
        Request: The validated request
    """
    if not isinstance(document, dict):
        raise ValidationError('The request must be a JSON object')
    if document.get('schema', SCHEMA) != SCHEMA:
        raise ValidationError(f'Unsupported request schema {document["schema"]!r}, expected {SCHEMA}')
    if 'spec' not in document:
        raise ValidationError('The request has no spec')
    spec = parse_spec(document['spec'])

    query = document.get('query') or {}
    if not isinstance(query, dict) or query.get('kind') not in QUERIES:
        raise ValidationError(f'The query kind must be one of {", ".join(QUERIES)}')
    kind = query['kind']
    alpha = _vector(query.get('alpha'), 'alpha vector')
    beta = _vector(query.get('beta'), 'beta vector')
    if alpha is not None and kind not in ('hurwitz', 'chow'):
        raise ValidationError(f'The {kind} query does not take an alpha vector')
    if beta is not None and kind != 'genus':
        raise ValidationError(f'The {kind} query does not take a beta vector')

    options = document.get('options') or {}
    if not isinstance(options, dict):
        raise ValidationError('The options must be a JSON object')
    mode = options.get('genus_mode')
    if mode is not None and mode not in GENUS_MODES:
        raise ValidationError(f'Unknown genus mode {mode!r}, choose one of {", ".join(GENUS_MODES)}')
    output = options.get('output', 'table')
    if output not in OUTPUTS:
        raise ValidationError(f'Unknown output format {output!r}, choose one of {", ".join(OUTPUTS)}')

    request = Request(spec, Query(kind, alpha, beta), Options(mode, output))
    for vector in (alpha, beta):
        if vector is not None and len(vector) != request.ell:
            raise ShapeError(f'The vector {list(vector)} must have length {request.ell}')
    return request


def load_document(text) -> dict:
    """This function parses a JSON request"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ValidationError(f'Malformed JSON request: {error.msg} (line {error.lineno}, column {error.colno})')


def request_from_arguments(args, stream) -> Request:
    """
    This function merges the request document with command-line flags, the flags taking precedence

    The document is read from --input, else from the stream unless a spec flag is given.

    Parameters:
        args (argparse.Namespace): Parsed command-line arguments
        stream (file): Standard input

    Returns:
        Request: The validated request
    """
    shorthand = {}
    if args.degree_matrix is not None or args.ambient is not None:
        if args.degree_matrix is None or args.ambient is None:
            raise ValidationError('--degree-matrix and --ambient must be given together')
        shorthand = {'complete_intersection': {'ambient': args.ambient, 'degrees': args.degree_matrix}}
    for key, value in (('toric', args.toric), ('game', args.game and {'format': args.game}), ('graph', args.graph)):
        if value is not None:
            if shorthand:
                raise ValidationError('Only one variety can be given on the command line')
            shorthand = {key: value}

    if args.input is not None:
        try:
            with open(args.input, 'r') as file:
                document = load_document(file.read())
        except OSError as error:
            raise ValidationError(f'Unable to read the request file {args.input} ({error.strerror})')
    elif not shorthand:
        document = load_document(stream.read())
    else:
        document = {}
    if not isinstance(document, dict):
        raise ValidationError('The request must be a JSON object')

    if shorthand:
        document['spec'] = shorthand
    query = dict(document.get('query') or {})
    if args.query is not None:
        query['kind'] = args.query
    if args.alpha is not None:
        query['alpha'] = args.alpha
    if args.beta is not None:
        query['beta'] = args.beta
    document['query'] = query
    options = dict(document.get('options') or {})
    if args.mode is not None:
        options['genus_mode'] = args.mode
    if args.output is not None:
        options['output'] = args.output
    document['options'] = options
    return parse_request(document)
