""" Weighted projective spaces: weight hygiene, monomial bases, singular strata,
quasi-smoothness on the affine cone and the adjunction invariants K^2 and g. """

import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from math import gcd
from functools import reduce

from logdp.errors import DegreeError, LogDPError
from logdp.polyq import affine_point, gradient

logger = logging.getLogger(__name__)

SystemInvariants = namedtuple('SystemInvariants', ['dim_cg', 'cg_square', 'dim_dg', 'dg_square'])
Stratum = namedtuple('Stratum', ['coordinates', 'order'])


def _gcd_list(values):
    return reduce(gcd, values, 0)


class WeightedSpace(object):
    """ The weighted projective space P(w_0, ..., w_n). """

    def __init__(self, weights, variables=None):
        weights = tuple(int(w) for w in weights)
        if len(weights) < 2:
            raise DegreeError("A weighted projective space needs at least two coordinates.")
        if any(w < 1 for w in weights):
            raise DegreeError("Weights must be positive integers: {}".format(weights))
        if variables is None:
            variables = tuple('x{}'.format(i) for i in range(len(weights)))
        variables = tuple(variables)
        if len(variables) != len(weights):
            raise DegreeError("Variables {} do not match weights {}".format(variables, weights))
        self.weights = weights
        self.variables = variables

    @classmethod
    def parse(cls, text, variables=None):
        """ Reads a comma list such as "1,1,2,3". """
        try:
            weights = [int(w) for w in str(text).split(',') if w.strip()]
        except ValueError:
            raise LogDPError("Invalid weight list '{}'".format(text))
        return cls(weights, variables)

    @property
    def dimension(self):
        return len(self.weights) - 1

    def weight_of(self, name):
        return self.weights[self.variables.index(name)]

    def weight_one_indices(self):
        return tuple(i for i, w in enumerate(self.weights) if w == 1)

    def __eq__(self, other):
        return isinstance(other, WeightedSpace) and self.weights == other.weights and self.variables == other.variables

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.weights, self.variables))

    def __repr__(self):
        return "P({})".format(",".join(str(w) for w in self.weights))


def is_well_formed(space):
    """ True iff the gcd of every n-element subset of the n+1 weights is 1. """
    n = len(space.weights)
    return all(_gcd_list(subset) == 1 for subset in itertools.combinations(space.weights, n - 1))


def weighted_degree(space, p):
    """
    The common weighted degree of all terms of p, or None if terms disagree
    (or p is zero).
    """
    if len(p.variables) != len(space.weights):
        raise DegreeError("Polynomial in {} variables does not fit {}".format(len(p.variables), space))
    degrees = set(sum(e * w for e, w in zip(exponents, space.weights)) for exponents in p.terms)
    if len(degrees) != 1:
        return None
    return degrees.pop()


class WeightedForm(object):
    """ A quasi-homogeneous polynomial together with its ambient space and degree. """

    def __init__(self, space, poly, degree=None):
        if poly.is_zero():
            raise DegreeError("The zero polynomial does not define a hypersurface.")
        if poly.variables != space.variables:
            poly = poly.with_variables(space.variables)
        actual = weighted_degree(space, poly)
        if actual is None:
            raise DegreeError("Polynomial {} is not quasi-homogeneous in {}".format(poly, space))
        if degree is not None and actual != degree:
            raise DegreeError("Polynomial has weighted degree {}, expected {}".format(actual, degree))
        self.space = space
        self.poly = poly
        self.degree = actual

    def __repr__(self):
        return "WeightedForm({!r}, {}, degree={})".format(self.space, self.poly, self.degree)


def _exponent_vectors(weights, d):
    if len(weights) == 1:
        if d % weights[0] == 0:
            yield (d // weights[0],)
        return
    for e in range(d // weights[0], -1, -1):
        for rest in _exponent_vectors(weights[1:], d - e * weights[0]):
            yield (e,) + rest


def monomial_basis(space, d):
    """ All exponent vectors of weighted degree d, graded-lexicographic descending. """
    if d < 0:
        raise DegreeError("Degree must be non-negative.")
    vectors = list(_exponent_vectors(space.weights, d))
    return sorted(vectors, key=lambda e: (sum(e), e), reverse=True)


def embedding_dimension(g):
    """ Dimension of the projective space the natural embedding of P(1^g, 2) lands in. """
    if g < 1:
        raise DegreeError("g must be positive.")
    return g * (g + 1) // 2


def singular_strata(space):
    """
    Coordinate strata with nontrivial cyclic stabilizer: every coordinate
    subset whose weights share a factor m > 1 and that no strictly larger
    subset with the same factor contains.
    :return: list of Stratum(coordinates, order), coordinates as index tuples
    """
    if not is_well_formed(space):
        raise DegreeError("{} is not well-formed.".format(space))
    n = len(space.weights)
    found = {}
    for size in range(1, n):
        for subset in itertools.combinations(range(n), size):
            m = _gcd_list(space.weights[i] for i in subset)
            if m > 1:
                found[subset] = m
    strata = []
    for subset, m in found.items():
        closed = not any(set(subset) < set(other) and found[other] == m for other in found)
        if closed:
            strata.append(Stratum(subset, m))
    return sorted(strata, key=lambda s: (len(s.coordinates), s.coordinates))


def stratum_point(space, stratum):
    """ Renders a stratum as a point like (0:0:1:0), with * for free coordinates. """
    marks = []
    for i in range(len(space.weights)):
        if i in stratum.coordinates:
            marks.append('1' if len(stratum.coordinates) == 1 else '*')
        else:
            marks.append('0')
    return "({})".format(":".join(marks))


def cone_point(space, point, chart=None):
    """ Lifts chart coordinates (chart coordinate set to 1) to a point of the affine cone. """
    point = affine_point(point)
    if chart is None:
        if len(point) != len(space.weights):
            raise DegreeError("Cone point {} does not fit {}".format(point, space))
        return point
    if len(point) != len(space.weights) - 1:
        raise DegreeError("Chart point {} does not fit {}".format(point, space))
    return point[:chart] + (Fraction(1),) + point[chart:]


def quasi_smooth_at(form, point, chart=None):
    """
    True iff some partial derivative of the form is nonzero at the cone point.
    :param point: homogeneous coordinates, or chart coordinates when chart is given
    :param chart: index of the coordinate set to 1
    """
    lifted = cone_point(form.space, point, chart)
    if not any(lifted):
        raise DegreeError("The cone vertex is not a point of the projective space.")
    if form.poly.evaluate(lifted) != 0:
        raise LogDPError("Point {} is not on the hypersurface {}".format(lifted, form.poly))
    return any(partial.evaluate(lifted) != 0 for partial in gradient(form.poly))


def k_square(space, degrees):
    """
    Adjunction invariants of a quasi-smooth well-formed surface cut out by
    forms of the given degrees: K^2 = prod(d) * (sum(w) - sum(d))^2 / prod(w).
    :return: (K^2, g) as Fractions, g = K^2 + 1
    """
    degrees = [int(d) for d in degrees]
    if len(degrees) > 2:
        raise DegreeError("Only hypersurfaces and complete intersections of two forms are supported.")
    if space.dimension - len(degrees) != 2:
        raise DegreeError("{} cut by {} forms is not a surface.".format(space, len(degrees)))
    amplitude = sum(space.weights) - sum(degrees)
    if amplitude <= 0:
        raise DegreeError("Anti-canonical class is not ample: sum of weights minus degrees is {}.".format(amplitude))
    numerator = amplitude ** 2
    for d in degrees:
        numerator *= d
    denominator = 1
    for w in space.weights:
        denominator *= w
    ksq = Fraction(numerator, denominator)
    return ksq, ksq + 1


def genus_system_invariants(g):
    """ (dim|C_g|, C_g^2, dim|D_g|, D_g^2) = (3g-3, 4g-4, g, 2g-2). """
    if g < 2:
        raise DegreeError("g must be at least 2, got {}".format(g))
    return SystemInvariants(3 * g - 3, 4 * g - 4, g, 2 * g - 2)
