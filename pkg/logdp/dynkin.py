""" Diagrams of exceptional curves: typed intersection graphs, the K_n
resolution chains, Gram matrices, the Du Val and logarithmic parts, ADE
subdiagram enumeration and elliptic pencil checks. """

import itertools
import logging
import re
from collections import Counter, OrderedDict
from fractions import Fraction
from functools import lru_cache

import networkx as nx
import numpy as np
from toolz import unique

from logdp.errors import DiagramError, ParseError

logger = logging.getLogger(__name__)

BLACK = 'black'
TRANSPARENT = 'transparent'
DOUBLE_TRANSPARENT = 'double_transparent'
CROSSED = 'crossed'

KIND_BY_SELF_INTERSECTION = {-2: BLACK, -1: TRANSPARENT, -4: DOUBLE_TRANSPARENT, -3: CROSSED}
SELF_INTERSECTION_BY_KIND = {kind: s for s, kind in KIND_BY_SELF_INTERSECTION.items()}


class Diagram(object):
    """
    Intersection graph of rational curves. Vertices keep insertion order and
    carry a self-intersection and a kind; edges carry an intersection
    multiplicity.
    """

    def __init__(self, vertices=(), edges=()):
        self.graph = nx.Graph()
        for vertex in vertices:
            self.add_vertex(*vertex)
        for edge in edges:
            self.add_edge(*edge)

    def add_vertex(self, vertex_id, self_intersection, kind=None):
        if vertex_id in self.graph:
            raise DiagramError("Duplicate vertex {!r}".format(vertex_id))
        self_intersection = int(self_intersection)
        expected = KIND_BY_SELF_INTERSECTION.get(self_intersection)
        if expected is None:
            raise DiagramError("No vertex kind has self-intersection {}".format(self_intersection))
        if kind is None:
            kind = expected
        elif kind != expected:
            raise DiagramError("Vertex {!r}: kind {} needs self-intersection {}, got {}".format(
                vertex_id, kind, SELF_INTERSECTION_BY_KIND.get(kind), self_intersection))
        self.graph.add_node(vertex_id, self_intersection=self_intersection, kind=kind)

    def add_edge(self, u, v, mult=1):
        if u == v:
            raise DiagramError("Self-loop at vertex {!r}".format(u))
        for w in (u, v):
            if w not in self.graph:
                raise DiagramError("Edge endpoint {!r} is not a vertex".format(w))
        mult = int(mult)
        if mult < 1:
            raise DiagramError("Edge multiplicity must be positive, got {}".format(mult))
        if self.graph.has_edge(u, v):
            self.graph[u][v]['mult'] += mult
        else:
            self.graph.add_edge(u, v, mult=mult)

    @property
    def vertices(self):
        return list(self.graph.nodes)

    def edges(self):
        return [(u, v, data['mult']) for u, v, data in self.graph.edges(data=True)]

    def self_intersection(self, v):
        return self.graph.nodes[v]['self_intersection']

    def kind(self, v):
        return self.graph.nodes[v]['kind']

    def neighbors(self, v):
        return list(self.graph.neighbors(v))

    def multiplicity(self, u, v):
        if self.graph.has_edge(u, v):
            return self.graph[u][v]['mult']
        return 0

    def subdiagram(self, vertex_ids):
        keep = set(vertex_ids)
        result = Diagram()
        for v in self.graph.nodes:
            if v in keep:
                result.add_vertex(v, self.self_intersection(v), self.kind(v))
        for u, v, mult in self.edges():
            if u in keep and v in keep:
                result.add_edge(u, v, mult)
        return result

    def components(self):
        """ Connected components as diagrams, ordered by their first vertex. """
        order = {v: i for i, v in enumerate(self.graph.nodes)}
        parts = sorted((sorted(c, key=order.get) for c in nx.connected_components(self.graph)),
                       key=lambda c: order[c[0]])
        return [self.subdiagram(part) for part in parts]

    def relabel(self, mapping):
        result = Diagram()
        for v in self.graph.nodes:
            result.add_vertex(mapping[v], self.self_intersection(v), self.kind(v))
        for u, v, mult in self.edges():
            result.add_edge(mapping[u], mapping[v], mult)
        return result

    def to_dict(self):
        return OrderedDict([
            ('vertices', [OrderedDict([('id', v), ('self', self.self_intersection(v)), ('kind', self.kind(v))])
                          for v in self.graph.nodes]),
            ('edges', [[u, v, mult] for u, v, mult in self.edges()]),
        ])

    @classmethod
    def from_dict(cls, document):
        try:
            vertices = [(item['id'], item['self'], item.get('kind')) for item in document['vertices']]
            edges = [tuple(edge) for edge in document.get('edges', [])]
        except (KeyError, TypeError) as e:
            raise DiagramError("Malformed diagram document: {}".format(e))
        for edge in edges:
            if len(edge) not in (2, 3):
                raise DiagramError("Edge {} must be [id, id] or [id, id, mult]".format(list(edge)))
        return cls(vertices, edges)

    def __len__(self):
        return self.graph.number_of_nodes()

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "Diagram({} vertices, {} edges)".format(len(self), self.graph.number_of_edges())


def chain(self_intersections):
    """ A chain with vertices 0..n-1 carrying the given self-intersections. """
    values = list(self_intersections)
    return Diagram([(i, s) for i, s in enumerate(values)], [(i, i + 1) for i in range(len(values) - 1)])


def chain_order(d):
    """ Vertices of a chain from one end to the other, starting at the end listed first. """
    if len(d) == 0:
        return []
    if len(d) == 1:
        return d.vertices
    if not nx.is_connected(d.graph) or any(deg > 2 for _, deg in d.graph.degree()) or \
            d.graph.number_of_edges() != len(d) - 1:
        raise DiagramError("Diagram is not a chain.")
    start = next(v for v in d.vertices if d.graph.degree(v) == 1)
    return list(nx.dfs_preorder_nodes(d.graph, start))


def kn_minimal(n):
    """ Minimal resolution graph of K_n: [-4]; [-3]-[-3]; or -3, (n-2) x -2, -3. """
    if n < 1:
        raise DiagramError("K_n needs n >= 1, got {}".format(n))
    if n == 1:
        return chain([-4])
    return chain([-3] + [-2] * (n - 2) + [-3])


def blow_up(d, u, v):
    """
    Blows up the intersection point of two adjacent curves: both lose one
    from their self-intersection and a new -1 curve meets each once.
    """
    if not d.graph.has_edge(u, v):
        raise DiagramError("Vertices {!r} and {!r} do not meet.".format(u, v))
    ids = [w for w in d.vertices if isinstance(w, int)]
    new = max(ids) + 1 if ids else len(d)
    result = Diagram()
    for w in d.vertices:
        s = d.self_intersection(w) - (1 if w in (u, v) else 0)
        result.add_vertex(w, s)
    result.add_vertex(new, -1)
    for a, b, mult in d.edges():
        if {a, b} == {u, v}:
            if mult > 1:
                result.add_edge(a, b, mult - 1)
            continue
        result.add_edge(a, b, mult)
    result.add_edge(u, new)
    result.add_edge(new, v)
    return result


def kn_right_resolution(n):
    """ Blows up every intersection point of the K_n chain; vertices renumbered along the chain. """
    d = kn_minimal(n)
    for u, v, _ in list(d.edges()):
        d = blow_up(d, u, v)
    order = chain_order(d)
    return d.relabel({v: i for i, v in enumerate(order)})


def gram_matrix(d):
    vertices = d.vertices
    index = {v: i for i, v in enumerate(vertices)}
    matrix = np.zeros((len(vertices), len(vertices)), dtype=int)
    for v in vertices:
        matrix[index[v], index[v]] = d.self_intersection(v)
    for u, v, mult in d.edges():
        matrix[index[u], index[v]] = mult
        matrix[index[v], index[u]] = mult
    return matrix


def is_negative_definite(d):
    """ Exact test: Gaussian elimination on -G over the rationals must meet only positive pivots. """
    m = [[Fraction(-int(x)) for x in row] for row in gram_matrix(d)]
    size = len(m)
    for i in range(size):
        pivot = m[i][i]
        if pivot <= 0:
            logger.debug("Pivot %s at step %d", pivot, i)
            return False
        for r in range(i + 1, size):
            factor = m[r][i] / pivot
            if factor:
                for c in range(i, size):
                    m[r][c] -= factor * m[i][c]
    return True


def duv_part(d):
    return d.subdiagram(v for v in d.vertices if d.kind(v) == BLACK)


def _double_neighbors(d, v):
    return sum(1 for w in d.neighbors(v) if d.kind(w) == DOUBLE_TRANSPARENT)


def log_part(d):
    """ Double transparent vertices and the transparent ones meeting at least two of them. """
    keep = [v for v in d.vertices
            if d.kind(v) == DOUBLE_TRANSPARENT or (d.kind(v) == TRANSPARENT and _double_neighbors(d, v) >= 2)]
    return d.subdiagram(keep)


def cg_intersections(d):
    """ C_g.V for every vertex of a right resolution diagram. """
    result = OrderedDict()
    for v in d.vertices:
        kind = d.kind(v)
        if kind in (BLACK, DOUBLE_TRANSPARENT):
            result[v] = 0
        elif kind == TRANSPARENT:
            result[v] = 2 - _double_neighbors(d, v)
        else:
            raise DiagramError("Vertex {!r} is a -3 curve; right resolutions have none.".format(v))
    return result


def elliptic_pencil_check(d, mult):
    """
    True iff E = sum mult(v) v has zero intersection with each of its
    components and E.E = 0.
    :param mult: dict vertex -> positive integer
    """
    index = {v: i for i, v in enumerate(d.vertices)}
    vector = np.zeros(len(index), dtype=int)
    for v, m in mult.items():
        if v not in index:
            raise DiagramError("Multiplicity given for unknown vertex {!r}".format(v))
        if int(m) < 1:
            raise DiagramError("Multiplicities must be positive, got {} at {!r}".format(m, v))
        vector[index[v]] = int(m)
    product = gram_matrix(d).dot(vector)
    if any(product[index[v]] != 0 for v in mult):
        return False
    return int(vector.dot(product)) == 0


# ADE shapes

_ORDER = {'E': 0, 'D': 1, 'A': 2, 'K': 3}
_COMPONENT = re.compile(r'(?P<count>\d*)(?P<letter>[ADEK])_?\{?(?P<index>\d+)\}?')
EMPTY = '∅'


class ConfigName(object):
    """ A multiset of singularity labels such as 2A_3 A_1. """

    def __init__(self, components=()):
        counts = Counter()
        for letter, index in components:
            if letter not in _ORDER:
                raise DiagramError("Unknown singularity letter {!r}".format(letter))
            counts[(letter, int(index))] += 1
        self._counts = counts
        self._key = tuple(sorted(counts.items(), key=lambda item: (_ORDER[item[0][0]], -item[0][1])))

    @classmethod
    def parse(cls, text):
        """ Reads names such as "A_3 A_2 2A_1", "A3A2 2A1", "A_{11}" or "∅". """
        text = text.strip()
        if text in ('', EMPTY, '0', 'empty'):
            return cls()
        components = []
        offset = 0
        for token in text.replace('$', ' ').split():
            offset = text.find(token, offset)
            position = 0
            for match in _COMPONENT.finditer(token):
                if match.start() != position:
                    break
                count = int(match.group('count') or 1)
                components.extend([(match.group('letter'), int(match.group('index')))] * count)
                position = match.end()
            if position != len(token):
                raise ParseError("Invalid configuration name '{}'".format(text), 1, offset + position + 1)
            offset += len(token)
        return cls(components)

    def components(self):
        return [name for name, count in self._key for _ in range(count)]

    def rank(self):
        return sum(index * count for (_, index), count in self._key)

    def scale(self, factor):
        return ConfigName([name for name in self.components() for _ in range(int(factor))])

    def __add__(self, other):
        return ConfigName(self.components() + other.components())

    def __len__(self):
        return sum(self._counts.values())

    def __eq__(self, other):
        return isinstance(other, ConfigName) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return -self.rank(), -len(self), [(_ORDER[letter], -index, -count) for (letter, index), count in self._key]

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        if not self._key:
            return EMPTY
        return " ".join("{}{}_{}".format(count if count > 1 else '', letter, index)
                        for (letter, index), count in self._key)

    def __repr__(self):
        return "ConfigName('{}')".format(self)


def ade_diagram(letter, n):
    """ The Dynkin diagram of A_n, D_n or E_n as black -2 curves numbered 0..n-1. """
    if letter == 'A' and n >= 1:
        return chain([-2] * n)
    if letter == 'D' and n >= 4:
        d = chain([-2] * (n - 1))
        d.add_vertex(n - 1, -2)
        d.add_edge(n - 3, n - 1)
        return d
    if letter == 'E' and n in (6, 7, 8):
        d = chain([-2] * (n - 1))
        d.add_vertex(n - 1, -2)
        d.add_edge(2, n - 1)
        return d
    raise DiagramError("No Dynkin diagram {}_{}".format(letter, n))


def affine_ade_diagram(letter, n):
    """ The extended Dynkin diagram; vertex numbering matches null_root. """
    if letter == 'A' and n >= 1:
        d = chain([-2] * (n + 1))
        d.add_edge(n, 0)
        return d
    if letter == 'D' and n >= 4:
        d = ade_diagram('D', n)
        d.add_vertex(n, -2)
        d.add_edge(1, n)
        return d
    if letter == 'E' and n == 6:
        d = Diagram([(i, -2) for i in range(7)], [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        return d
    if letter == 'E' and n == 7:
        d = chain([-2] * 7)
        d.add_vertex(7, -2)
        d.add_edge(3, 7)
        return d
    if letter == 'E' and n == 8:
        d = chain([-2] * 8)
        d.add_vertex(8, -2)
        d.add_edge(2, 8)
        return d
    raise DiagramError("No extended Dynkin diagram {}_{}".format(letter, n))


def null_root(letter, n):
    """ Multiplicities of the imaginary root on affine_ade_diagram(letter, n). """
    if letter == 'A' and n >= 1:
        return OrderedDict((i, 1) for i in range(n + 1))
    if letter == 'D' and n >= 4:
        values = [1] + [2] * (n - 3) + [1, 1, 1]
        return OrderedDict(enumerate(values))
    if letter == 'E' and n == 6:
        return OrderedDict(enumerate([3, 2, 1, 2, 1, 2, 1]))
    if letter == 'E' and n == 7:
        return OrderedDict(enumerate([1, 2, 3, 4, 3, 2, 1, 2]))
    if letter == 'E' and n == 8:
        return OrderedDict(enumerate([2, 4, 6, 5, 4, 3, 2, 1, 3]))
    raise DiagramError("No extended Dynkin diagram {}_{}".format(letter, n))


def ade_name(d):
    """
    Name of a connected diagram of black curves joined simply, read off its
    arm lengths.
    :return: (letter, index)
    """
    n = len(d)
    if n == 0 or not nx.is_connected(d.graph):
        raise DiagramError("An ADE name needs a nonempty connected diagram.")
    if any(d.kind(v) != BLACK for v in d.vertices) or any(m != 1 for _, _, m in d.edges()):
        raise DiagramError("ADE diagrams consist of -2 curves meeting transversally.")
    if d.graph.number_of_edges() != n - 1:
        raise DiagramError("Diagram contains a cycle; it is not of ADE type.")
    degrees = dict(d.graph.degree())
    branch = [v for v, k in degrees.items() if k > 2]
    if not branch:
        return 'A', n
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise DiagramError("Diagram is not of ADE type.")
    center = branch[0]
    rest = d.graph.copy()
    rest.remove_node(center)
    arms = sorted(len(c) for c in nx.connected_components(rest))
    if arms[0] == 1 and arms[1] == 1:
        return 'D', n
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return 'E', n
    raise DiagramError("Diagram with arms {} is not of ADE type.".format(arms))


def config_of(d):
    """ Canonical name of a diagram whose components are all of ADE type. """
    return ConfigName(ade_name(c) for c in d.components())


@lru_cache(maxsize=None)
def _component_subconfigs(letter, n):
    d = ade_diagram(letter, n)
    vertices = d.vertices
    found = set()
    for size in range(len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            found.add(config_of(d.subdiagram(subset)))
    logger.debug("%s_%d has %d subdiagram configurations", letter, n, len(found))
    return frozenset(found)


def _combine(collections):
    combined = {ConfigName()}
    for options in collections:
        combined = set(unique(a + b for a in combined for b in options))
    return combined


def enumerate_ade_subdiagrams(d):
    """
    All configurations of induced subdiagrams of a disjoint union of ADE
    diagrams, the empty configuration included.
    :return: set of ConfigName
    """
    return _combine(_component_subconfigs(*ade_name(c)) for c in d.components())


def enumerate_configurations(items):
    """
    Subdiagram configurations of a diagram, a ConfigName, a name such as
    "A_5 A_1", or a list of any of these (taken as a disjoint union).
    """
    if isinstance(items, (Diagram, ConfigName, str)):
        items = [items]
    parts = []
    for item in items:
        if isinstance(item, Diagram):
            parts.append(enumerate_ade_subdiagrams(item))
            continue
        name = item if isinstance(item, ConfigName) else ConfigName.parse(item)
        for letter, index in name.components():
            if letter == 'K':
                raise DiagramError("K_n is not a Dynkin diagram.")
            parts.append(_component_subconfigs(letter, index))
    return _combine(parts)


def enumerate_union(generators):
    """
    Union of the subdiagram configurations of several generators, given as a
    list or as one string with the alternatives separated by '|', such as
    "2D_4 | D_8 | D_6 2A_1".
    """
    if isinstance(generators, str):
        generators = generators.split('|')
    found = set()
    for generator in generators:
        found |= enumerate_configurations(generator.strip() if isinstance(generator, str) else generator)
    return found


def sorted_configs(configs):
    return sorted(configs, key=ConfigName.sort_key)
