""" File input/output for logdp: polynomial, diagram, point and fixture files, and
the deterministic JSON rendering of reports. """

import json
import logging
import math
import os.path
from collections import OrderedDict
from fractions import Fraction

import numpy as np

from pkg_resources import resource_filename, resource_listdir

from logdp.dynkin import ConfigName, Diagram
from logdp.errors import FixtureError, LogDPError, ParseError
from logdp.polyq import format_polynomial, format_rational, parse_polynomial, to_fraction, RationalPolynomial

logger = logging.getLogger(__name__)

FIXTURE_DIRECTORY = 'fixtures'
DIAGRAM_DIRECTORY = 'diagrams'
EXACT = 'exact'
SUBSET = 'subset'


def read_file_contents(local_filepath):
    if os.path.isfile(local_filepath):
        with open(local_filepath, encoding='utf-8') as f:
            data = f.read()
            return data
    else:
        return None


def _read_required(path, error=LogDPError):
    text = read_file_contents(str(path))
    if text is None:
        raise error("File not found: {}".format(path))
    return text


def read_polynomial_file(path, variables=None):
    """
    Reads a .poly file: one polynomial per non-empty line, '#' starting a
    comment line. Two lines describe a complete intersection.
    :param variables: ordered variable list shared by every polynomial of the file
    :return: list of RationalPolynomial
    :raises ParseError: with the line of the file and the column inside that line
    """
    text = _read_required(path)
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue
        lines.append((number, line))
    if not lines:
        raise ParseError("No polynomial found in {}".format(path), 1, 1)

    if variables is None:
        names = set()
        for number, line in lines:
            try:
                names.update(parse_polynomial(line).variables)
            except ParseError as e:
                raise ParseError(e.message, number, e.column)
        variables = tuple(sorted(names))

    polynomials = []
    for number, line in lines:
        try:
            polynomials.append(parse_polynomial(line, variables))
        except ParseError as e:
            raise ParseError(e.message, number, e.column)
    logger.debug("Read %d polynomial(s) in %s from %s", len(polynomials), ",".join(variables), path)
    return polynomials


def _read_json(path):
    text = _read_required(path)
    try:
        return json.loads(text)
    except ValueError as e:
        raise ParseError("Invalid JSON in {}: {}".format(path, e.msg), e.lineno, e.colno)


def read_diagram_file(path):
    """ Reads a diagram in the JSON format {vertices: [{id, self, kind}], edges: [[u, v, mult]]}. """
    return Diagram.from_dict(_read_json(path))


def read_multiplicities(path):
    """
    The optional multiplicity vector stored next to a diagram, as
    [[vertex, mult], ...] pairs.
    :return: OrderedDict vertex -> int, or None when the file has none
    """
    document = _read_json(path)
    pairs = document.get('multiplicities') if isinstance(document, dict) else None
    if pairs is None:
        return None
    try:
        return OrderedDict((vertex, int(m)) for vertex, m in pairs)
    except (TypeError, ValueError):
        raise LogDPError("Malformed multiplicities in {}".format(path))


def parse_multiplicities(text):
    """ Reads "v1=1,v2=2"; integer-looking vertex names become integers. """
    result = OrderedDict()
    for item in text.split(','):
        if not item.strip():
            continue
        vertex, sep, value = item.partition('=')
        vertex = vertex.strip()
        if not sep or not value.strip().isdigit():
            raise ParseError("Invalid multiplicity '{}'".format(item.strip()), 1, text.find(item) + 1)
        if vertex.lstrip('-').isdigit():
            vertex = int(vertex)
        result[vertex] = int(value)
    return result


def parse_point(text):
    """ Reads a homogeneous point written "0:0:1" or "1,-1/2,0". """
    separator = ':' if ':' in text else ','
    try:
        return tuple(to_fraction(c) for c in text.strip().strip('()').split(separator))
    except ParseError:
        raise ParseError("Invalid point '{}'".format(text), 1, 1)


def read_points_file(path):
    """
    Reads a JSON list of projective points, each a list of integers or "n/d" strings.
    :return: list of tuples of Fractions
    """
    document = _read_json(path)
    if isinstance(document, dict):
        document = document.get('points')
    if not isinstance(document, list) or not all(isinstance(p, list) for p in document):
        raise LogDPError("Points file {} must hold a list of coordinate lists".format(path))
    return [tuple(to_fraction(c) for c in point) for point in document]


class Fixture(object):
    """ A transcribed list of configurations together with the diagram that generates it. """

    def __init__(self, name, generator, entries, mode=EXACT, description=None, sources=None):
        if mode not in (EXACT, SUBSET):
            raise FixtureError("Fixture {} has unknown mode '{}'".format(name, mode))
        self.name = name
        self.generator = generator
        self.entries = list(entries)
        self.mode = mode
        self.description = description
        self.sources = list(sources) if sources is not None else [None] * len(self.entries)

    @classmethod
    def from_dict(cls, document):
        try:
            entries = []
            sources = []
            for item in document['entries']:
                if isinstance(item, dict):
                    entries.append(ConfigName.parse(item['config']))
                    sources.append(item.get('source'))
                else:
                    entries.append(ConfigName.parse(item))
                    sources.append(None)
            return cls(document['name'], document.get('generator', ''), entries,
                       mode=document.get('mode', EXACT),
                       description=document.get('description'),
                       sources=sources)
        except (KeyError, TypeError) as e:
            raise FixtureError("Malformed fixture document: {}".format(e))

    def __repr__(self):
        return "Fixture({!r}, mode={}, {} entries)".format(self.name, self.mode, len(self.entries))


def read_fixture(path):
    text = read_file_contents(str(path))
    if text is None:
        raise FixtureError("Fixture file not found: {}".format(path))
    try:
        document = json.loads(text)
    except ValueError as e:
        raise FixtureError("Invalid JSON in fixture {}: {}".format(path, e))
    return Fixture.from_dict(document)


def _packaged_json_files(directory):
    return sorted(os.path.join(resource_filename('logdp', directory), name)
                  for name in resource_listdir('logdp', directory) if name.endswith('.json'))


def list_fixture_files():
    """ Paths of the fixture files shipped with the package, sorted by name. """
    return _packaged_json_files(FIXTURE_DIRECTORY)


def list_diagram_files():
    return _packaged_json_files(DIAGRAM_DIRECTORY)


def _plain(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, RationalPolynomial):
        return format_polynomial(value)
    if isinstance(value, ConfigName):
        return str(value)
    if isinstance(value, dict):
        return OrderedDict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, 'to_dict'):
        return _plain(value.to_dict())
    return str(value)


def to_json_text(document):
    """
    Renders a document as JSON: insertion key order, two-space indentation,
    Fractions as "n/d" strings, integers as integers.
    """
    return json.dumps(_plain(document), indent=2, ensure_ascii=False)


def write_json(document, stream):
    stream.write(to_json_text(document))
    stream.write('\n')
