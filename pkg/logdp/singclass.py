""" Local analysis of isolated singular points: intersection multiplicities of
plane curves, Milnor numbers, ADE classification of curve and surface germs,
the quotient rule for symmetric centers and the search for rational singular
points of a projective or weighted hypersurface. """

import logging
import math
import re
from collections import namedtuple
from fractions import Fraction

from sympy import Poly, Rational, Symbol

from logdp.errors import ClassificationError, ContradictionError, DegreeError, LogDPError
from logdp.polyq import (RationalPolynomial, differentiate, exact_divide, format_polynomial, gcd, gcd_all, gradient,
                         homogeneous_part, is_squarefree, resultant, substitute, substitute_values,
                         translate_to_origin, truncate)

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 16
DEFAULT_ELIMINATION_LIMIT = 24

SMOOTH = 'Smooth'
A = 'A'
D = 'D'
E = 'E'
K = 'K'
CYCLIC = 'Cyclic'
NOT_SIMPLE = 'NotSimple'
NON_ISOLATED = 'NonIsolated'
UNDETERMINED = 'Undetermined'

PASS = 'pass'
FAIL = 'fail'

_INDEXED = (A, D, E, K)
_LABEL = re.compile(r'^\s*(?P<tag>[ADEK])_?(?P<index>\d+)\s*$')

# verdict on a center of symmetry; quotient is None unless the verdict passes with a K type
SymmetricCenter = namedtuple('SymmetricCenter', ['verdict', 'type', 'quotient'])


class SingularityType(namedtuple('SingularityType', ['tag', 'index', 'milnor'])):
    """
    Analytic type of a point. ADE and K types carry their index; NotSimple may
    carry the Milnor number when it is finite.
    """
    __slots__ = ()

    @classmethod
    def smooth(cls):
        return cls(SMOOTH, None, 0)

    @classmethod
    def a(cls, n):
        if n < 1:
            raise ClassificationError("A_n needs n >= 1, got {}".format(n))
        return cls(A, n, n)

    @classmethod
    def d(cls, n):
        if n < 4:
            raise ClassificationError("D_n needs n >= 4, got {}".format(n))
        return cls(D, n, n)

    @classmethod
    def e(cls, n):
        if n not in (6, 7, 8):
            raise ClassificationError("E_n needs n in 6, 7, 8, got {}".format(n))
        return cls(E, n, n)

    @classmethod
    def k(cls, n):
        if n < 1:
            raise ClassificationError("K_n needs n >= 1, got {}".format(n))
        return cls(K, n, None)

    @classmethod
    def not_simple(cls, milnor=None):
        return cls(NOT_SIMPLE, None, milnor)

    @classmethod
    def non_isolated(cls):
        return cls(NON_ISOLATED, None, math.inf)

    @classmethod
    def undetermined(cls):
        return cls(UNDETERMINED, None, None)

    @classmethod
    def parse(cls, label):
        """ Reads labels such as "A3", "D_5", "K2", "Smooth" or "1/4(1,1)". """
        text = str(label).strip()
        if text == QUARTER_ONE_ONE.label:
            return QUARTER_ONE_ONE
        for tag, factory in ((SMOOTH, cls.smooth), (NOT_SIMPLE, cls.not_simple),
                             (NON_ISOLATED, cls.non_isolated), (UNDETERMINED, cls.undetermined)):
            if text == tag:
                return factory()
        match = _LABEL.match(text)
        if not match:
            raise LogDPError("Unknown singularity label '{}'".format(label))
        index = int(match.group('index'))
        return {A: cls.a, D: cls.d, E: cls.e, K: cls.k}[match.group('tag')](index)

    @property
    def label(self):
        if self.tag == CYCLIC:
            return "1/4(1,1)"
        if self.tag in _INDEXED:
            return "{}{}".format(self.tag, self.index)
        return self.tag

    def is_ade(self):
        return self.tag in (A, D, E)

    def is_log_terminal(self):
        return self.tag in (SMOOTH, A, D, E, K, CYCLIC)

    def __str__(self):
        return self.label


# The index-4 cyclic quotient point; the degenerate K_1 of the quotient rule.
QUARTER_ONE_ONE = SingularityType(CYCLIC, 4, None)

SingularPoint = namedtuple('SingularPoint', ['point', 'type', 'chart'])


class SingularPointSearch(object):
    """ Outcome of a singular point search. complete is False when some
    candidate could not be pinned down over the rationals.

    Each unresolved entry reads "v: factor", the irreducible factor of degree
    above one left in the unknown v, followed by " at k=c, ..." listing the
    coordinates already fixed when the factor turned up.
    """

    def __init__(self, points, unresolved, positive_dimensional=False, non_reduced=False):
        self.points = points
        self.unresolved = unresolved
        self.positive_dimensional = positive_dimensional
        self.non_reduced = non_reduced

    @property
    def complete(self):
        return not self.unresolved and not self.positive_dimensional

    def types(self):
        return [p.type for p in self.points]

    def __repr__(self):
        return "SingularPointSearch(points={}, unresolved={}, complete={})".format(
            len(self.points), self.unresolved, self.complete)


def _keep_order(p, bindings):
    return substitute(p, bindings).with_variables(p.variables)


def _at_origin(f):
    if f.is_zero():
        raise ClassificationError("The zero polynomial is not a germ.")
    if f.constant_term() != 0:
        raise ClassificationError("Germ {} does not vanish at the origin.".format(f))


def multiplicity(f):
    """ Order of vanishing at the origin: the lowest total degree present. """
    if f.is_zero():
        raise ClassificationError("The zero polynomial has no multiplicity.")
    return f.order()


def _restricted_degree(p, x, y):
    """ Degree in x of p(x, 0), or None when p(x, 0) vanishes identically. """
    r = substitute_values(p, {y: 0})
    if r.is_zero():
        return None, r
    return r.degree(x), r


def _fulton(f, g, x, y):
    total = 0
    pending = [(f, g)]
    while pending:
        f, g = pending.pop()
        if f.is_zero() or g.is_zero():
            return math.inf
        if f.constant_term() != 0 or g.constant_term() != 0:
            continue
        r, fr = _restricted_degree(f, x, y)
        s, gs = _restricted_degree(g, x, y)
        if r is None and s is None:
            # both divisible by y: a common component through the origin
            return math.inf
        if r is None or (s is not None and s < r):
            f, g, r, s, fr, gs = g, f, s, r, gs, fr
        if s is None:
            # g = y*h; I(f, g) = I(f, y) + I(f, h) and I(f, y) = ord f(x, 0)
            total += fr.order()
            h = exact_divide(g, RationalPolynomial.variable(y, g.variables))
            pending.append((f, h))
            continue
        a = fr.coefficient_in(x, r).constant_term()
        b = gs.coefficient_in(x, s).constant_term()
        shift = RationalPolynomial.variable(x, f.variables) ** (s - r)
        pending.append((f, g.scale(a) - f * shift.scale(b)))
    return total


def intersection_multiplicity(f, g):
    """
    Local intersection number of two plane curves at the origin.
    :return: a non-negative int, or math.inf when the curves share a
             component through the origin
    """
    if f.variables != g.variables or len(f.variables) != 2:
        raise DegreeError("Intersection multiplicity needs two polynomials in the same two variables.")
    if f.is_zero() or g.is_zero():
        return math.inf
    if f.constant_term() != 0 or g.constant_term() != 0:
        return 0
    h = gcd(f, g)
    if not h.is_constant():
        if h.constant_term() == 0:
            return math.inf
        # h is a unit near the origin
        f = exact_divide(f, h)
        g = exact_divide(g, h)
    x, y = f.variables
    return _fulton(f, g, x, y)


def milnor_number(f):
    """ Milnor number of a plane curve germ: I(f_x, f_y) at the origin. """
    if len(f.variables) != 2:
        raise DegreeError("Milnor numbers are computed for plane curve germs only.")
    fx, fy = gradient(f)
    return intersection_multiplicity(fx, fy)


def classify_curve_germ(f):
    """
    Classifies a plane curve germ singular (or not) at the origin.
    :param f: bivariate polynomial with f(0) = 0
    :return: SingularityType
    """
    if len(f.variables) != 2:
        raise DegreeError("A curve germ needs exactly two variables, got {}".format(f.variables))
    _at_origin(f)
    m = multiplicity(f)
    if m == 1:
        return SingularityType.smooth()
    mu = milnor_number(f)
    if mu == math.inf:
        return SingularityType.non_isolated()
    if m == 2:
        return SingularityType.a(mu)
    if m == 3:
        cone = homogeneous_part(f, 3)
        x, y = f.variables
        repeated = gcd_all([cone, differentiate(cone, x), differentiate(cone, y)]).total_degree()
        if repeated == 0:
            if mu != 4:
                raise ClassificationError("Ordinary triple point with Milnor number {}".format(mu))
            return SingularityType.d(4)
        if repeated == 1:
            return SingularityType.d(mu)
        if mu in (6, 7, 8):
            return SingularityType.e(mu)
        return SingularityType.not_simple(mu)
    return SingularityType.not_simple(mu)


def _shear(q, variables):
    """ A unimodular change v_i -> v_i + v_j making some square coefficient of q nonzero. """
    for i, vi in enumerate(variables):
        for vj in variables[i + 1:]:
            mixed = q.coefficient_in(vi, 1).coefficient_in(vj, 1).constant_term()
            if mixed != 0:
                return {vi: RationalPolynomial.variable(vi, q.variables) + RationalPolynomial.variable(vj, q.variables)}
    return None


def _square_variable(q, variables):
    for v in variables:
        if q.coefficient_in(v, 2).constant_term() != 0:
            return v
    return None


def split_quadratic(f, order=DEFAULT_ORDER):
    """
    Splitting lemma up to the given order: removes one square at a time by
    completing it, until the remaining germ has no quadratic part.
    :return: (residual, split_variables, exact) where residual no longer
             involves the split variables and exact says no term was dropped
    """
    work = f
    exact = True

    def cut(p):
        kept = truncate(p, order)
        return kept, len(kept) == len(p)

    work, ok = cut(work)
    exact = exact and ok
    free = list(f.variables)
    split = []
    while free:
        q = homogeneous_part(work, 2)
        if q.is_zero():
            break
        v = _square_variable(q, free)
        if v is None:
            bindings = _shear(q, free)
            work, ok = cut(_keep_order(work, bindings))
            exact = exact and ok
            continue
        a = q.coefficient_in(v, 2).constant_term()
        x = RationalPolynomial.variable(v, work.variables)
        for _ in range(order + 2):
            c1 = work.coefficient_in(v, 1)
            if c1.is_zero():
                break
            work, ok = cut(_keep_order(work, {v: x - c1.scale(Fraction(1, 2) / a)}))
            exact = exact and ok
        else:
            raise ClassificationError("Square completion in {} did not converge.".format(v))
        work = work.coefficient_in(v, 0)
        free.remove(v)
        split.append(v)
        logger.debug("Split off %s; residual %s", v, work)
    return work, split, exact


def classify_surface_double_point(f, order=DEFAULT_ORDER):
    """
    Classifies a hypersurface germ at the origin (normally a surface in three
    variables) by the splitting lemma carried out to the given order.
    """
    if order < 2:
        raise ClassificationError("Classification order must be at least 2.")
    _at_origin(f)
    m = multiplicity(f)
    if m == 1:
        return SingularityType.smooth()
    if m > 2:
        return SingularityType.not_simple()
    residual, split, exact = split_quadratic(f, order)
    free = [v for v in f.variables if v not in split]
    if not free:
        return SingularityType.a(1)
    if residual.is_zero():
        return SingularityType.non_isolated() if exact else SingularityType.undetermined()
    if len(free) == 1:
        return SingularityType.a(residual.order() - 1)
    if len(free) == 2:
        curve = residual.with_variables(free)
        kind = classify_curve_germ(curve)
        if kind.tag == NON_ISOLATED:
            return kind if exact else SingularityType.undetermined()
        if kind.is_ade() and kind.index + 1 > order:
            return SingularityType.undetermined()
        return kind
    return SingularityType.not_simple()


def quotient_type(kind):
    """
    Type of the image of a symmetric center under the involution:
    A_{2n+1} goes to K_n, and the index-4 point 1/4(1,1) is K_1.
    """
    if kind == QUARTER_ONE_ONE:
        return SingularityType.k(1)
    if kind.tag == A and kind.index % 2 == 1:
        if kind.index == 1:
            raise ClassificationError("An A1 center has a smooth quotient; K_0 is not a type.")
        return SingularityType.k((kind.index - 1) // 2)
    if kind.tag in (A, D, E):
        raise ContradictionError("A symmetric center cannot be of type {}".format(kind.label))
    raise ClassificationError("No quotient rule for type {}".format(kind.label))


def symmetric_center_verdict(kind):
    """
    Verdict on the type of a center of symmetry: only A_{2n+1} passes, with
    quotient K_n for n >= 1 and no quotient type for A1. Anything else fails
    and carries the offending type.
    :return: SymmetricCenter
    """
    if kind.tag == A and kind.index % 2 == 1:
        quotient = quotient_type(kind) if kind.index > 1 else None
        return SymmetricCenter(PASS, kind, quotient)
    return SymmetricCenter(FAIL, kind, None)


def is_symmetric_germ(f, negated=None):
    """ True when f is invariant under negating the given variables (all of them by default). """
    negated = tuple(f.variables if negated is None else negated)
    return _keep_order(f, {v: -RationalPolynomial.variable(v, f.variables) for v in negated}) == f


def check_symmetric_center(f, negated=None, order=DEFAULT_ORDER):
    """
    Classifies a germ invariant under negating the given variables (all of
    them by default) and returns the verdict on its type. A germ that is not
    invariant raises ClassificationError.
    :return: SymmetricCenter
    """
    if not is_symmetric_germ(f, negated):
        names = f.variables if negated is None else negated
        raise ClassificationError("Germ {} is not invariant under negating {}".format(f, ", ".join(names)))
    if len(f.variables) == 2:
        kind = classify_curve_germ(f)
    else:
        kind = classify_surface_double_point(f, order)
    center = symmetric_center_verdict(kind)
    if center.verdict == FAIL:
        logger.debug("Symmetric germ %s classified as %s", f, kind.label)
    return center


def _power_series_root(F, v, order):
    """ Solves F = 0 for v as a truncated power series in the other variables. """
    c = F.coefficient_in(v, 1).constant_term()
    others = tuple(w for w in F.variables if w != v)
    phi = RationalPolynomial.zero(F.variables)
    for _ in range(order + 1):
        value = truncate(_keep_order(F, {v: phi}), order)
        if value.is_zero():
            break
        phi = truncate(phi - value.scale(1 / c), order)
    return phi.with_variables(F.variables), others


def classify_complete_intersection_point(F, G, point, order=DEFAULT_ORDER):
    """
    Classifies a point of the surface F = G = 0 in affine 4-space by solving a
    smooth equation for one variable and classifying the other equation
    restricted to it.
    """
    if F.variables != G.variables:
        raise DegreeError("Both equations must use the same variables.")
    F = translate_to_origin(F, point)
    G = translate_to_origin(G, point)
    if F.constant_term() != 0 or G.constant_term() != 0:
        raise LogDPError("Point {} is not on the surface.".format(tuple(point)))
    linear_f = [differentiate(F, v).constant_term() for v in F.variables]
    linear_g = [differentiate(G, v).constant_term() for v in F.variables]
    rank_two = any(linear_f[i] * linear_g[j] != linear_f[j] * linear_g[i]
                   for i in range(len(linear_f)) for j in range(i + 1, len(linear_f)))
    if rank_two:
        return SingularityType.smooth()
    if not any(linear_f):
        if not any(linear_g):
            return SingularityType.not_simple()
        F, G, linear_f = G, F, linear_g
    v = F.variables[next(i for i, c in enumerate(linear_f) if c != 0)]
    phi, others = _power_series_root(F, v, order)
    restricted = truncate(_keep_order(G, {v: phi}), order).with_variables(others)
    logger.debug("Restricted germ at %s: %s", tuple(point), restricted)
    if restricted.is_zero():
        return SingularityType.undetermined()
    return classify_surface_double_point(restricted, order)


# Rational points of zero-dimensional systems

def _rational_roots(h, v):
    """
    Rational roots of a univariate polynomial, and its irreducible factors of
    degree above one rendered as strings.
    """
    sym = Symbol(v)
    coefficients = h.coefficients_in(v)
    top = h.degree(v)
    values = [Rational(c.numerator, c.denominator) for c in
              (coefficients[k].constant_term() if k in coefficients else Fraction(0) for k in range(top, -1, -1))]
    _, factors = Poly(values, sym, domain='QQ').factor_list()
    roots = []
    leftovers = []
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            root = -Fraction(int(b.p), int(b.q)) / Fraction(int(a.p), int(a.q))
            roots.append(root)
        else:
            terms = {}
            for (k,), c in factor.terms():
                terms[(k,)] = Fraction(int(c.p), int(c.q))
            leftovers.append(format_polynomial(RationalPolynomial((v,), terms)))
    return sorted(roots), leftovers


class _Solver(object):
    """ Rational solutions of a polynomial system expected to be zero-dimensional. """

    def __init__(self, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
        self.elimination_limit = elimination_limit
        self.unresolved = []
        self.positive_dimensional = False

    def solve(self, equations, unknowns, context=None):
        context = context or {}
        eqs = []
        for e in equations:
            if e.is_zero():
                continue
            e = e.monic()
            if e.is_constant():
                return []
            if e not in eqs:
                eqs.append(e)
        if not unknowns:
            return [{}]
        if not eqs:
            self.positive_dimensional = True
            logger.debug("Free unknowns %s at partial solution %s", unknowns, context)
            return []
        best = None
        for v in unknowns:
            univariate = [e for e in eqs if e.active_variables() == (v,)]
            if univariate:
                h = gcd_all(univariate)
                if best is None or h.degree(v) < best[1].degree(best[0]):
                    best = (v, h)
        if best is not None:
            v, h = best
            return self._branch(eqs, unknowns, v, h, context)
        for v in reversed(unknowns):
            involved = [e for e in eqs if e.degree(v) > 0]
            if not involved:
                continue
            projected = [e for e in eqs if e.degree(v) == 0]
            pivot = min(involved, key=lambda e: (e.degree(v), len(e)))
            for e in involved:
                if e is pivot:
                    continue
                if pivot.degree(v) + e.degree(v) > self.elimination_limit:
                    logger.debug("Skipping resultant in %s: degrees %d and %d", v, pivot.degree(v), e.degree(v))
                    continue
                r = resultant(pivot, e, v)
                if not r.is_zero():
                    projected.append(r)
            if not projected:
                continue
            rest = [u for u in unknowns if u != v]
            solutions = []
            for partial in self.solve(projected, rest, context):
                lifted = [substitute_values(e, partial) for e in eqs]
                merged = dict(context)
                merged.update(partial)
                for s in self.solve(lifted, [v], merged):
                    s = dict(s)
                    s.update(partial)
                    solutions.append(s)
            return solutions
        self.positive_dimensional = True
        return []

    def _branch(self, eqs, unknowns, v, h, context):
        roots, leftovers = _rational_roots(h, v)
        for factor in leftovers:
            where = ", ".join("{}={}".format(k, context[k]) for k in sorted(context))
            self.unresolved.append("{}: {}{}".format(v, factor, " at " + where if where else ""))
        rest = [u for u in unknowns if u != v]
        solutions = []
        for root in roots:
            reduced = [substitute_values(e, {v: root}) for e in eqs]
            merged = dict(context)
            merged[v] = root
            for s in self.solve(reduced, rest, merged):
                s = dict(s)
                s[v] = root
                solutions.append(s)
        return solutions


def _classify_point(germ, order):
    if len(germ.variables) == 2:
        return classify_curve_germ(germ)
    return classify_surface_double_point(germ, order)


def _search_piece(F, chart, zeros, order, solver):
    """ Singular points of the chart x_chart = 1 with the given coordinates set to 0. """
    names = F.variables
    local = substitute_values(F, {names[chart]: 1})
    others = tuple(v for i, v in enumerate(names) if i != chart)
    local = local.with_variables(others)
    equations = [local] + [differentiate(local, v) for v in others]
    fixed = {names[i]: 0 for i in zeros}
    if fixed:
        equations = [substitute_values(e, fixed) for e in equations]
    unknowns = [v for v in others if v not in fixed]
    found = []
    for solution in solver.solve(equations, unknowns):
        values = dict(fixed)
        values.update(solution)
        affine = tuple(values[v] for v in others)
        germ = translate_to_origin(local, affine)
        kind = _classify_point(germ, order)
        point = affine[:chart] + (Fraction(1),) + affine[chart:]
        found.append(SingularPoint(point, kind, chart))
    return found


def find_rational_singular_points(F, weights=None, order=DEFAULT_ORDER,
                                  elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """
    Finds and classifies the rational singular points of F = 0.

    Without weights F is an affine curve or surface and every variable is an
    unknown. With weights F is quasi-homogeneous and the search runs over the
    charts of the weight-one coordinates, each chart skipping the points the
    earlier charts already cover; points where every weight-one coordinate
    vanishes are left to the caller.
    :return: SingularPointSearch
    """
    if F.is_zero():
        raise DegreeError("The zero polynomial does not define a hypersurface.")
    if not is_squarefree(F):
        logger.debug("Polynomial %s is not reduced", F)
        return SingularPointSearch([], [], positive_dimensional=True, non_reduced=True)
    solver = _Solver(elimination_limit)
    points = []
    if weights is None:
        equations = [F] + gradient(F)
        for solution in solver.solve(equations, list(F.variables)):
            affine = tuple(solution[v] for v in F.variables)
            germ = translate_to_origin(F, affine)
            points.append(SingularPoint(affine, _classify_point(germ, order), None))
    else:
        weights = tuple(weights)
        if len(weights) != len(F.variables):
            raise DegreeError("Weights {} do not match variables {}".format(weights, F.variables))
        ones = [i for i, w in enumerate(weights) if w == 1]
        for position, chart in enumerate(ones):
            points.extend(_search_piece(F, chart, ones[:position], order, solver))
    points.sort(key=lambda p: tuple(p.point))
    logger.debug("Found %d singular points, unresolved %s", len(points), solver.unresolved)
    return SingularPointSearch(points, solver.unresolved, solver.positive_dimensional)


def _chart_of(point, weights):
    for i, (c, w) in enumerate(zip(point, weights)):
        if c != 0 and w == 1:
            return i
    return None


def _normalize_point(point, weights):
    """ Scales a weighted point so its first nonzero weight-one coordinate is 1. """
    point = tuple(Fraction(c) for c in point)
    chart = _chart_of(point, weights)
    if chart is None:
        raise LogDPError("Point {} has no nonzero weight-one coordinate.".format(point))
    scale = point[chart]
    return tuple(c / scale ** w for c, w in zip(point, weights)), chart


def classify_projective_point(F, point, weights=None, order=DEFAULT_ORDER):
    """ Classifies the hypersurface F = 0 at a point given in (weighted) homogeneous coordinates. """
    weights = tuple(weights or (1,) * len(F.variables))
    point, chart = _normalize_point(point, weights)
    if F.evaluate(point) != 0:
        raise LogDPError("Point {} is not on the hypersurface.".format(point))
    others = tuple(v for i, v in enumerate(F.variables) if i != chart)
    local = substitute_values(F, {F.variables[chart]: 1}).with_variables(others)
    affine = point[:chart] + point[chart + 1:]
    return SingularPoint(point, _classify_point(translate_to_origin(local, affine), order), chart)


def _chart_system(F, G, chart, zeros):
    names = F.variables
    others = tuple(v for i, v in enumerate(names) if i != chart)
    local_f = substitute_values(F, {names[chart]: 1}).with_variables(others)
    local_g = substitute_values(G, {names[chart]: 1}).with_variables(others)
    df = [differentiate(local_f, v) for v in others]
    dg = [differentiate(local_g, v) for v in others]
    minors = [df[i] * dg[j] - df[j] * dg[i] for i in range(len(others)) for j in range(i + 1, len(others))]
    fixed = {names[i]: 0 for i in zeros}
    equations = [local_f, local_g] + minors
    if fixed:
        equations = [substitute_values(e, fixed) for e in equations]
    return local_f, local_g, others, fixed, equations


def find_complete_intersection_singular_points(F, G, order=DEFAULT_ORDER,
                                               elimination_limit=DEFAULT_ELIMINATION_LIMIT, skip=None):
    """
    Rational singular points of the projective surface F = G = 0: points of
    every chart where both equations vanish and the Jacobian has rank below 2.
    :param skip: homogeneous points left to the caller
    """
    if F.variables != G.variables:
        raise DegreeError("Both equations must use the same variables.")
    common = gcd(F, G)
    if not common.is_constant():
        logger.debug("Equations share the factor %s", common)
        return SingularPointSearch([], [], positive_dimensional=True, non_reduced=True)
    skip = set(tuple(Fraction(c) for c in p) for p in (skip or ()))
    solver = _Solver(elimination_limit)
    points = []
    n = len(F.variables)
    for chart in range(n):
        local_f, local_g, others, fixed, equations = _chart_system(F, G, chart, range(chart))
        unknowns = [v for v in others if v not in fixed]
        for solution in solver.solve(equations, unknowns):
            values = dict(fixed)
            values.update(solution)
            affine = tuple(values[v] for v in others)
            point = affine[:chart] + (Fraction(1),) + affine[chart:]
            if point in skip:
                continue
            kind = classify_complete_intersection_point(local_f, local_g, affine, order)
            points.append(SingularPoint(point, kind, chart))
    points.sort(key=lambda p: tuple(p.point))
    return SingularPointSearch(points, solver.unresolved, solver.positive_dimensional)


def classify_complete_intersection_projective(F, G, point, order=DEFAULT_ORDER):
    """ Classifies the surface F = G = 0 of projective 4-space at a homogeneous point. """
    point, chart = _normalize_point(point, (1,) * len(F.variables))
    if F.evaluate(point) != 0 or G.evaluate(point) != 0:
        raise LogDPError("Point {} is not on the surface.".format(point))
    local_f, local_g, _, _, _ = _chart_system(F, G, chart, ())
    affine = point[:chart] + point[chart + 1:]
    return SingularPoint(point, classify_complete_intersection_point(local_f, local_g, affine, order), chart)
