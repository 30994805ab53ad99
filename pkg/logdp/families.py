""" Verifiers for the equation families of log del Pezzo surfaces of index at
most two: each checks the hypotheses of its family on a candidate equation
and reports the invariants g, K^2, k, the index and the Du Val configuration. """

import logging
from collections import OrderedDict, namedtuple
from fractions import Fraction

import pandas as pd

from logdp import data_service
from logdp.dynkin import ConfigName, enumerate_union
from logdp.errors import ContradictionError, DegreeError, LogDPError
from logdp.polyq import RationalPolynomial, format_rational, is_squarefree, substitute_values
from logdp.singclass import (A, D, DEFAULT_ELIMINATION_LIMIT, DEFAULT_ORDER, E, FAIL, PASS, SMOOTH, UNDETERMINED,
                             check_symmetric_center, classify_complete_intersection_point,
                             classify_complete_intersection_projective, classify_projective_point,
                             find_complete_intersection_singular_points, find_rational_singular_points,
                             multiplicity, symmetric_center_verdict)
from logdp.wps import WeightedForm, WeightedSpace, k_square, quasi_smooth_at, weighted_degree

logger = logging.getLogger(__name__)

G2_P1123 = 'G2_P1123'
G3A_P1144 = 'G3A_P1144'
G3B_P1112 = 'G3B_P1112'
G4_CI_P11112 = 'G4_CI_P11112'
G6C_P1114 = 'G6C_P1114'
HIGHER_CONE = 'HIGHER_CONE'

EVEN = 'even'
ODD = 'odd'
NONE = 'none'

FamilySpec = namedtuple('FamilySpec', ['family', 'name', 'weights', 'degrees', 'k_square', 'g',
                                       'equation_weights', 'variables', 'index_two_locus'])

_CATALOG = (
    FamilySpec(G2_P1123, 'g2', (1, 1, 2, 3), (6,), 1, 2, (1, 1, 2), ('x', 'y', 'z'),
               "K_k at the center (0:0:1) when the sextic G(a,b,c^2) has an A_{2k+1} there"),
    FamilySpec(G3A_P1144, 'g3a', (1, 1, 4, 4), (8,), 2, 3, (1, 1, 4), ('x', 'y', 'z'),
               "two K_1 points over the vertex (0:0:1)"),
    FamilySpec(G3B_P1112, 'g3b', (1, 1, 1, 2), (4,), 2, 3, (1, 1, 1, 2), ('x', 'y', 'z', 't'),
               "K_n at (0:0:0:1) when the quartic F(a,b,c,d^2) has an A_{2n+1} there"),
    FamilySpec(G4_CI_P11112, 'g4', (1, 1, 1, 1, 2), (2, 3), 3, 4, (1, 1, 1, 1, 2), ('x', 'y', 'z', 't', 'u'),
               "index 2 iff the quadric F(a,b,c,d,e^2) is singular"),
    FamilySpec(G6C_P1114, 'quintic', (1, 1, 1, 4), (5,), 5, 6, (1, 1, 1, 4), ('x', 'y', 'z', 'u'),
               "one K_1 point at (0:0:0:1)"),
    FamilySpec(HIGHER_CONE, 'cone', None, None, 9, 10, None, None,
               "cone over the rational normal quartic"),
)

# Generators of the admissible configurations, one half of each symmetric
# pair, keyed by the index f of an A_f center. Alternatives are separated by '|'.
SEXTIC_CENTER_CONFIGS = OrderedDict([(1, '2D_4 | D_8 | D_6 2A_1 | D_5 A_3'), (3, 'A_7'), (5, 'A_5 A_1'), (7, 'A_4'),
                                     (9, 'A_4'), (11, 'A_2'), (13, 'A_1'), (15, ''), (17, '')])
QUARTIC_CENTER_CONFIGS = OrderedDict([(1, 'A_7'), (3, '2A_3'), (5, '2A_2'), (7, 'A_2 A_1'), (9, 'A_2'), (11, 'A_2')])
CI_CENTER_CONFIGS = OrderedDict([(1, 'A_5 A_1'), (3, '2A_2'), (5, '2A_2'), (7, 'A_1'), (9, 'A_1')])
CI_OFF_CENTER_CONFIGS = 'E_6 | A_5 A_1 | 3A_2'
OCTIC_CONFIGS = 'A_7'
QUINTIC_CONFIGS = 'A_4'


def family_catalog():
    """ The family table, each entry cross-checked against the adjunction formula. """
    for spec in _CATALOG:
        if spec.weights is None:
            continue
        ksq, g = k_square(WeightedSpace(spec.weights), spec.degrees)
        if ksq != spec.k_square or g != spec.g:
            raise LogDPError("Catalog entry {} disagrees with K^2 = {}".format(spec.family, ksq))
    return list(_CATALOG)


def family_by_name(name):
    for spec in _CATALOG:
        if name in (spec.name, spec.family):
            return spec
    raise LogDPError("Unknown family '{}' (known: {})".format(name, ", ".join(s.name for s in _CATALOG)))


def catalog_to_pandas():
    rows = []
    for spec in family_catalog():
        rows.append(OrderedDict([
            ('family', spec.family),
            ('name', spec.name),
            ('weights', ",".join(str(w) for w in spec.weights) if spec.weights else ''),
            ('degrees', ",".join(str(d) for d in spec.degrees) if spec.degrees else ''),
            ('k_square', spec.k_square),
            ('g', spec.g),
            ('index_two_locus', spec.index_two_locus),
        ]))
    return pd.DataFrame(rows, columns=list(rows[0].keys()))


def detect_symmetry(form, name):
    """ even, odd or none according to the parities of the exponents of one variable. """
    i = form.poly.index_of(name)
    if form.poly.degree(name) <= 0:
        raise DegreeError("Variable '{}' does not occur in {}".format(name, form.poly))
    parities = set(e[i] % 2 for e in form.poly.terms)
    if parities == {0}:
        return EVEN
    if parities == {1}:
        return ODD
    return NONE


def desymmetrize(form, name, new_name='u'):
    """ Replaces v^2 by a fresh variable of twice the weight; v must occur evenly. """
    if detect_symmetry(form, name) != EVEN:
        raise DegreeError("Variable '{}' does not occur evenly in {}".format(name, form.poly))
    i = form.poly.index_of(name)
    if new_name in form.poly.variables and new_name != name:
        raise DegreeError("Variable '{}' is already in use".format(new_name))
    variables = form.poly.variables[:i] + (new_name,) + form.poly.variables[i + 1:]
    weights = form.space.weights[:i] + (2 * form.space.weights[i],) + form.space.weights[i + 1:]
    terms = {}
    for exponents, c in form.poly.terms.items():
        terms[exponents[:i] + (exponents[i] // 2,) + exponents[i + 1:]] = c
    return WeightedForm(WeightedSpace(weights, variables), RationalPolynomial(variables, terms))


def cover_polynomial(poly, weights, names=('a', 'b', 'c', 'd', 'e')):
    """ Substitutes x_i -> a_i^(w_i): the polynomial on the symmetric cover. """
    variables = tuple(names[:len(weights)])
    return RationalPolynomial(variables, {tuple(e * w for e, w in zip(exponents, weights)): c
                                          for exponents, c in poly.terms.items()})


class FamilyReport(object):
    """ Verdict and invariants of one verification run. """

    def __init__(self, spec):
        self.spec = spec
        self.verdict = PASS
        self.reason = None
        self.k_square = spec.k_square
        self.g = spec.g
        self.k = 0
        self.index = 1
        self.center_type = None
        self.index_two = ConfigName()
        self.duval_config = ConfigName()
        self.cover_config = None
        self.complete = True
        self.unresolved = []
        self.singular_points = []
        self.notes = []

    @property
    def passed(self):
        return self.verdict == PASS

    def fail(self, reason):
        # the first failed hypothesis is the one reported
        if self.verdict == PASS:
            self.verdict = FAIL
            self.reason = reason
        logger.debug("%s: %s", self.spec.name, reason)

    def note(self, text):
        self.notes.append(text)

    def to_dict(self):
        return OrderedDict([
            ('family', self.spec.family),
            ('verdict', self.verdict),
            ('reason', self.reason),
            ('weights', list(self.spec.weights)),
            ('degrees', list(self.spec.degrees)),
            ('k_square', self.k_square),
            ('g', self.g),
            ('k', self.k),
            ('index', self.index),
            ('center_type', self.center_type.label if self.center_type is not None else None),
            ('index_two', str(self.index_two)),
            ('duval_config', str(self.duval_config)),
            ('cover_config', str(self.cover_config) if self.cover_config is not None else None),
            ('complete', self.complete),
            ('unresolved', list(self.unresolved)),
            ('singular_points', [OrderedDict([('point', [format_rational(c) for c in p.point]),
                                              ('type', p.type.label)])
                                 for p in self.singular_points]),
            ('notes', list(self.notes)),
        ])

    def to_json(self):
        return data_service.to_json_text(self.to_dict())

    def __repr__(self):
        return "FamilyReport({}, {}{})".format(self.spec.name, self.verdict,
                                               ", " + self.reason if self.reason else "")


def _prepare(spec, poly, degree):
    poly = poly.with_variables(spec.variables)
    space = WeightedSpace(spec.equation_weights, spec.variables)
    actual = weighted_degree(space, poly)
    if actual != degree:
        raise DegreeError("Expected a form of weighted degree {} in {}, got {}".format(
            degree, space, 'mixed degrees' if actual is None else actual))
    return poly


def _check_invariants(report, degrees):
    ksq, g = k_square(WeightedSpace(report.spec.weights), degrees)
    if ksq.denominator != 1 or ksq != report.spec.k_square or g != ksq + 1:
        raise LogDPError("Invariant cross-check failed for {}: K^2 = {}".format(report.spec.family, ksq))
    report.k_square, report.g = int(ksq), int(g)


def _point_label(point):
    return "({})".format(":".join(format_rational(c) for c in point))


def _absorb_search(report, search):
    if not search.complete:
        report.complete = False
        report.unresolved.extend(search.unresolved)
        if search.positive_dimensional:
            report.note("elimination left a positive-dimensional candidate set")


def _require_simple(report, points):
    for p in points:
        if not p.type.is_ade():
            if p.type.tag == UNDETERMINED:
                report.fail("singularity at {} undetermined at the classification order".format(_point_label(p.point)))
            else:
                report.fail("singularity at {} is not simple ({})".format(_point_label(p.point), p.type.label))


def _merge_points(found, supplied):
    seen = set(tuple(p.point) for p in found)
    merged = list(found)
    for p in supplied:
        if tuple(p.point) not in seen and p.type.tag != SMOOTH:
            merged.append(p)
            seen.add(tuple(p.point))
    return sorted(merged, key=lambda p: tuple(p.point))


def _set_center(report, center, where):
    """
    Records the verdict on a center of symmetry. False when the center fails;
    an even A, D or E type at a symmetric center raises ContradictionError.
    """
    report.center_type = center.type
    if center.verdict == FAIL:
        if center.type.tag in (A, D, E):
            raise ContradictionError("Symmetric center {} classified as {}".format(where, center.type.label))
        report.fail("center {} is {}".format(where, center.type.label))
        return False
    if center.quotient is None:
        report.note("A1 at the center of symmetry: smooth quotient, k = 0")
        return True
    report.k = center.quotient.index
    report.index = 2
    report.index_two = ConfigName([('K', center.quotient.index)])
    return True


def _check_listed(report, allowed, what):
    if report.duval_config not in allowed:
        report.fail("configuration {} is not among the subdiagrams of {}".format(report.duval_config, what))


def _check_center_list(report, table):
    """ Checks the half configuration against the list for the A_f center found, if any. """
    if report.center_type is None or report.center_type.tag != A:
        return
    generator = table.get(report.center_type.index)
    if generator is None:
        report.note("no configuration list is checked for center {}".format(report.center_type.label))
        return
    _check_listed(report, enumerate_union(generator), generator or "the empty diagram")


def _half_list(report, points, fixed_coordinate, reject_fixed):
    """ Off-center points pair up under the symmetry; one of each pair is counted. """
    halves = []
    for p in points:
        value = p.point[fixed_coordinate]
        if value == 0:
            if reject_fixed:
                report.fail("singular point {} on the fixed locus of the symmetry".format(_point_label(p.point)))
            else:
                report.note("singular point {} on the fixed locus is not counted".format(_point_label(p.point)))
        elif value > 0:
            halves.append(p.type)
    report.duval_config = ConfigName((t.tag, t.index) for t in halves if t.is_ade())


def verify_g2(G, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """
    Double covers t^2 = G(x,y,z) of P(1,1,2): the sextic G(a,b,c^2) must be
    reduced, at most doubly singular at (0:0:1) and simply singular.
    """
    spec = family_by_name('g2')
    G = _prepare(spec, G, 6)
    report = FamilyReport(spec)
    _check_invariants(report, spec.degrees)
    sextic = cover_polynomial(G, spec.equation_weights)
    if not is_squarefree(sextic):
        report.fail("sextic is not reduced")
        return report
    center = (0, 0, 1)
    if sextic.evaluate(center) == 0:
        germ = substitute_values(sextic, {'c': 1}).with_variables(('a', 'b'))
        m = multiplicity(germ)
        if m > 2:
            report.fail("center (0:0:1) has multiplicity {}".format(m))
            return report
        if not _set_center(report, check_symmetric_center(germ, order=order), "(0:0:1)"):
            return report
    search = find_rational_singular_points(sextic, weights=(1, 1, 1), order=order,
                                           elimination_limit=elimination_limit)
    _absorb_search(report, search)
    supplied = [classify_projective_point(sextic, p, order=order) for p in points or ()]
    found = _merge_points(search.points, supplied)
    off_center = [p for p in found if p.point[:2] != (0, 0)]
    report.singular_points = found
    report.cover_config = ConfigName((p.type.tag, p.type.index) for p in off_center if p.type.is_ade())
    _require_simple(report, off_center)
    _half_list(report, off_center, 2, reject_fixed=True)
    _check_center_list(report, SEXTIC_CENTER_CONFIGS)
    return report


def verify_g3a(G, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """ Octics G(x,y,z) in P(1,1,4): reduced, simply singular and off the vertex (0:0:1). """
    spec = family_by_name('g3a')
    G = _prepare(spec, G, 8)
    report = FamilyReport(spec)
    _check_invariants(report, spec.degrees)
    report.index = 2
    report.k = 2
    report.index_two = ConfigName([('K', 1), ('K', 1)])
    if not is_squarefree(G):
        report.fail("octic is not reduced")
        return report
    if G.evaluate((0, 0, 1)) == 0:
        report.fail("octic passes through the vertex (0:0:1)")
        return report
    search = find_rational_singular_points(G, weights=spec.equation_weights, order=order,
                                           elimination_limit=elimination_limit)
    _absorb_search(report, search)
    supplied = [classify_projective_point(G, p, spec.equation_weights, order) for p in points or ()]
    report.singular_points = _merge_points(search.points, supplied)
    _require_simple(report, report.singular_points)
    report.duval_config = ConfigName((p.type.tag, p.type.index) for p in report.singular_points if p.type.is_ade())
    _check_listed(report, enumerate_union(OCTIC_CONFIGS), OCTIC_CONFIGS)
    report.cover_config = report.duval_config.scale(2)
    return report


def verify_g3b(F, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """
    Quartics F(x,y,z,t) in P(1,1,1,2) whose cover F(a,b,c,d^2) has only ADE
    singularities. A center on the quartic must be A_{2n+1}: an even A, D or E
    type there raises ContradictionError, any other type fails the report.
    The half configuration is checked against the list for the center type.
    """
    spec = family_by_name('g3b')
    F = _prepare(spec, F, 4)
    report = FamilyReport(spec)
    _check_invariants(report, spec.degrees)
    quartic = cover_polynomial(F, spec.equation_weights)
    if not is_squarefree(quartic):
        report.fail("quartic is not reduced")
        return report
    center = (0, 0, 0, 1)
    if quartic.evaluate(center) == 0:
        germ = substitute_values(quartic, {'d': 1}).with_variables(('a', 'b', 'c'))
        if not _set_center(report, check_symmetric_center(germ, order=order), "(0:0:0:1)"):
            return report
    else:
        report.note("quartic misses the center (0:0:0:1)")
        report.note("off-center configurations are not checked against a list")
    search = find_rational_singular_points(quartic, weights=(1, 1, 1, 1), order=order,
                                           elimination_limit=elimination_limit)
    _absorb_search(report, search)
    supplied = [classify_projective_point(quartic, p, order=order) for p in points or ()]
    found = _merge_points(search.points, supplied)
    off_center = [p for p in found if p.point[:3] != (0, 0, 0)]
    report.singular_points = found
    report.cover_config = ConfigName((p.type.tag, p.type.index) for p in off_center if p.type.is_ade())
    _require_simple(report, off_center)
    _half_list(report, off_center, 3, reject_fixed=False)
    _check_center_list(report, QUARTIC_CENTER_CONFIGS)
    return report


def quadric_rank(poly):
    """ Rank of a quadratic form, from its symmetric matrix over the rationals. """
    variables = poly.variables
    n = len(variables)
    m = [[Fraction(0)] * n for _ in range(n)]
    for exponents, c in poly.terms.items():
        if sum(exponents) != 2:
            raise DegreeError("{} is not a quadratic form".format(poly))
        idx = [i for i, e in enumerate(exponents) for _ in range(e)]
        if idx[0] == idx[1]:
            m[idx[0]][idx[0]] += c
        else:
            m[idx[0]][idx[1]] += c / 2
            m[idx[1]][idx[0]] += c / 2
    rank = 0
    rows = list(range(n))
    for col in range(n):
        pivot = next((r for r in rows if m[r][col] != 0), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rank += 1
        for r in rows:
            factor = m[r][col] / m[pivot][col]
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[pivot])]
    return rank


def verify_g4(F, G, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT, search=True):
    """
    Complete intersections of a quadric F and a cubic G in P(1,1,1,1,2). The
    substituted surface in P^4 must have only Du Val singularities off the
    hyperplane e = 0; the index is 2 iff the quadric F(a,b,c,d,e^2) is singular.
    The half configuration is checked against the list for the center type,
    or against the subgraphs of E_6, A_5 A_1 and 3A_2 off the center.
    """
    spec = family_by_name('g4')
    F = _prepare(spec, F, 2)
    G = _prepare(spec, G, 3)
    report = FamilyReport(spec)
    _check_invariants(report, spec.degrees)
    quadric = cover_polynomial(F, spec.equation_weights)
    cubic = cover_polynomial(G, spec.equation_weights)
    rank = quadric_rank(quadric)
    report.note("quadric rank {}".format(rank))
    if rank == 5:
        report.note("quadric is smooth: the quotient is isomorphic to a cubic surface")
    else:
        report.index = 2
    common = find_complete_intersection_singular_points(quadric, cubic, order=order,
                                                        elimination_limit=elimination_limit,
                                                        skip=[(0, 0, 0, 0, 1)]) if search else None
    if common is not None and common.non_reduced:
        report.fail("quadric and cubic share a component")
        return report
    center = (0, 0, 0, 0, 1)
    if quadric.evaluate(center) == 0:
        local_f = substitute_values(quadric, {'e': 1}).with_variables(('a', 'b', 'c', 'd'))
        local_g = substitute_values(cubic, {'e': 1}).with_variables(('a', 'b', 'c', 'd'))
        kind = classify_complete_intersection_point(local_f, local_g, (0, 0, 0, 0), order)
        if kind.tag == SMOOTH:
            report.center_type = kind
        elif not _set_center(report, symmetric_center_verdict(kind), "(0:0:0:0:1)"):
            return report
    elif report.index == 2:
        report.note("quadric is singular away from the center")
    found = []
    if common is not None:
        _absorb_search(report, common)
        found = common.points
    else:
        report.complete = False
        report.note("singular point search skipped; only supplied points were classified")
    supplied = [classify_complete_intersection_projective(quadric, cubic, p, order) for p in points or ()]
    found = [p for p in _merge_points(found, supplied) if p.point[:4] != (0, 0, 0, 0)]
    report.singular_points = found
    report.cover_config = ConfigName((p.type.tag, p.type.index) for p in found if p.type.is_ade())
    _require_simple(report, found)
    _half_list(report, found, 4, reject_fixed=True)
    if quadric.evaluate(center) != 0:
        _check_listed(report, enumerate_union(CI_OFF_CENTER_CONFIGS), CI_OFF_CENTER_CONFIGS)
    else:
        _check_center_list(report, CI_CENTER_CONFIGS)
    return report


def verify_quintic(F5, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """
    Quintics F5(x,y,z,u) in P(1,1,1,4). F5 itself must be reduced and its
    singular points are searched on F5 = 0 in P(1,1,1,4), which is smooth away
    from the vertex (0:0:0:1). At the vertex only the cover F5(a,b,c,d^4) is
    used: it must be smooth there.
    """
    spec = family_by_name('quintic')
    F5 = _prepare(spec, F5, 5)
    report = FamilyReport(spec)
    _check_invariants(report, spec.degrees)
    report.index = 2
    report.k = 1
    report.index_two = ConfigName([('K', 1)])
    if not is_squarefree(F5):
        report.fail("quintic is not reduced")
        return report
    surface = cover_polynomial(F5, spec.equation_weights)
    form = WeightedForm(WeightedSpace((1, 1, 1, 1), surface.variables), surface)
    if not quasi_smooth_at(form, (0, 0, 0, 1)):
        report.fail("surface F5(a,b,c,d^4) is singular at (0:0:0:1)")
        return report
    search = find_rational_singular_points(F5, weights=spec.equation_weights, order=order,
                                           elimination_limit=elimination_limit)
    _absorb_search(report, search)
    supplied = [classify_projective_point(F5, p, spec.equation_weights, order) for p in points or ()]
    report.singular_points = _merge_points(search.points, supplied)
    _require_simple(report, report.singular_points)
    report.duval_config = ConfigName((p.type.tag, p.type.index) for p in report.singular_points if p.type.is_ade())
    _check_listed(report, enumerate_union(QUINTIC_CONFIGS), QUINTIC_CONFIGS)
    return report


VERIFIERS = OrderedDict([
    ('g2', verify_g2),
    ('g3a', verify_g3a),
    ('g3b', verify_g3b),
    ('g4', verify_g4),
    ('quintic', verify_quintic),
])


def verify(name, polynomials, points=None, order=DEFAULT_ORDER, elimination_limit=DEFAULT_ELIMINATION_LIMIT):
    """
    Runs the verifier of a family on parsed equations (two for g4, one otherwise).
    :return: FamilyReport
    """
    spec = family_by_name(name)
    if spec.name not in VERIFIERS:
        raise LogDPError("Family '{}' has no equation verifier.".format(name))
    polynomials = list(polynomials)
    expected = len(spec.degrees)
    if len(polynomials) != expected:
        raise DegreeError("Family {} takes {} equation(s), got {}".format(spec.name, expected, len(polynomials)))
    return VERIFIERS[spec.name](*polynomials, points=points, order=order, elimination_limit=elimination_limit)
