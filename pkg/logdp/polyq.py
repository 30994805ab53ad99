""" Exact sparse multivariate polynomials with rational coefficients.

Every polynomial carries its ordered variable list and a map from exponent
vectors to nonzero Fractions. Values are immutable; all operations return new
polynomials. Term order is graded-lexicographic throughout.
"""

import logging
import re
from fractions import Fraction
from types import MappingProxyType

from logdp.errors import DegreeError, ParseError, VariableMismatchError

logger = logging.getLogger(__name__)

ADD = 'add'
SUB = 'sub'
MUL = 'mul'


def to_fraction(value):
    """
    Converts an integer, Fraction or "n/d" string into a Fraction.
    :param value: value to convert
    :type value: int or Fraction or str
    :return: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Boolean is not a rational number.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.match(r'^[+-]?\d+(/\d+)?$', text):
            raise ParseError("Invalid rational number '{}'".format(value))
        return Fraction(text)
    raise TypeError("Unsupported coefficient type: {}".format(type(value).__name__))


def affine_point(coordinates):
    """ Returns the coordinates as a tuple of Fractions. """
    return tuple(to_fraction(c) for c in coordinates)


def format_rational(value):
    """ Renders a Fraction as "n" or "n/d". """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def _grlex_key(exponents):
    return sum(exponents), exponents


class RationalPolynomial(object):
    """ Sparse polynomial over the rationals in an ordered list of variables. """

    __slots__ = ('_variables', '_terms', '_hash')

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableMismatchError("Repeated variable in {}".format(variables))
        normalized = {}
        if terms:
            for exponents, coefficient in terms.items():
                exponents = tuple(int(e) for e in exponents)
                if len(exponents) != len(variables):
                    raise DegreeError("Exponent vector {} does not match variables {}".format(exponents, variables))
                if any(e < 0 for e in exponents):
                    raise DegreeError("Negative exponent in {}".format(exponents))
                normalized[exponents] = normalized.get(exponents, 0) + to_fraction(coefficient)
        self._variables = variables
        self._terms = {e: c for e, c in normalized.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # terms must already be normalized: tuple exponents, nonzero Fractions
        poly = cls.__new__(cls)
        poly._variables = variables
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value, variables):
        variables = tuple(variables)
        value = to_fraction(value)
        if value == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name, variables):
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError("Unknown variable '{}'".format(name))
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exponents: Fraction(1)})

    @classmethod
    def monomial(cls, exponents, variables, coefficient=1):
        return cls(variables, {tuple(exponents): coefficient})

    @property
    def variables(self):
        return self._variables

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * len(self._variables), Fraction(0))

    def total_degree(self):
        """ Total degree; -1 for the zero polynomial. """
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def order(self):
        """ Lowest total degree among the terms; -1 for the zero polynomial. """
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    def index_of(self, name):
        try:
            return self._variables.index(name)
        except ValueError:
            raise VariableMismatchError("Unknown variable '{}' (variables: {})".format(name, ', '.join(self._variables)))

    def degree(self, name):
        """ Degree in one variable; -1 for the zero polynomial. """
        i = self.index_of(name)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def active_variables(self):
        """ Variables that occur with positive exponent, in variable-list order. """
        used = [False] * len(self._variables)
        for exponents in self._terms:
            for i, e in enumerate(exponents):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._variables, used) if u)

    def sorted_terms(self):
        """ Terms in graded-lexicographic descending order. """
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def leading_exponents(self):
        if not self._terms:
            return None
        return max(self._terms, key=_grlex_key)

    def leading_coefficient(self):
        if not self._terms:
            return Fraction(0)
        return self._terms[self.leading_exponents()]

    def coefficients_in(self, name):
        """
        Splits the polynomial by powers of one variable.
        :return: dict degree -> RationalPolynomial (same variable list, free of the variable)
        """
        i = self.index_of(name)
        parts = {}
        for exponents, coefficient in self._terms.items():
            k = exponents[i]
            reduced = exponents[:i] + (0,) + exponents[i + 1:]
            parts.setdefault(k, {})[reduced] = coefficient
        return {k: RationalPolynomial._raw(self._variables, t) for k, t in parts.items()}

    def coefficient_in(self, name, k):
        return self.coefficients_in(name).get(k, RationalPolynomial.zero(self._variables))

    def evaluate(self, point):
        """
        Evaluates at a point given as a sequence (one value per variable) or a dict.
        :return: Fraction
        """
        if isinstance(point, dict):
            values = [to_fraction(point[v]) for v in self._variables]
        else:
            values = list(affine_point(point))
            if len(values) != len(self._variables):
                raise DegreeError("Point {} does not match variables {}".format(point, self._variables))
        total = Fraction(0)
        for exponents, coefficient in self._terms.items():
            term = coefficient
            for value, e in zip(values, exponents):
                if e:
                    term *= value ** e
            total += term
        return total

    def scale(self, factor):
        factor = to_fraction(factor)
        if factor == 0:
            return RationalPolynomial.zero(self._variables)
        return RationalPolynomial._raw(self._variables, {e: c * factor for e, c in self._terms.items()})

    def monic(self):
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def with_variables(self, variables):
        """ Re-embeds into another variable list that contains every active variable. """
        variables = tuple(variables)
        if variables == self._variables:
            return self
        positions = []
        for v in self._variables:
            positions.append(variables.index(v) if v in variables else None)
        terms = {}
        for exponents, coefficient in self._terms.items():
            target = [0] * len(variables)
            for e, p, v in zip(exponents, positions, self._variables):
                if e:
                    if p is None:
                        raise VariableMismatchError("Variable '{}' is missing from {}".format(v, variables))
                    target[p] = e
            terms[tuple(target)] = coefficient
        return RationalPolynomial._raw(variables, terms)

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            if other._variables != self._variables:
                raise VariableMismatchError("Variable lists differ: {} vs {}".format(self._variables, other._variables))
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial.constant(other, self._variables)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return RationalPolynomial._raw(self._variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return RationalPolynomial._raw(self._variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DegreeError("Only non-negative integer powers are supported.")
        result = RationalPolynomial.constant(1, self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Fraction(other)
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * len(self._variables): other}
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return "RationalPolynomial({!r}, {!r})".format(self._variables, format_polynomial(self))

    def __str__(self):
        return format_polynomial(self)


def _check_same(p, q):
    if p.variables != q.variables:
        raise VariableMismatchError("Variable lists differ: {} vs {}".format(p.variables, q.variables))


def arith(p, q, op):
    """
    Exact sum, difference or product of two polynomials over the same variables.
    :param op: one of 'add', 'sub', 'mul'
    """
    _check_same(p, q)
    if op == ADD:
        return p + q
    if op == SUB:
        return p - q
    if op == MUL:
        return p * q
    raise ValueError("Unknown arithmetic operation '{}'".format(op))


def differentiate(p, name):
    """ Formal partial derivative with respect to one variable. """
    i = p.index_of(name)
    terms = {}
    for exponents, coefficient in p.terms.items():
        k = exponents[i]
        if k:
            reduced = exponents[:i] + (k - 1,) + exponents[i + 1:]
            terms[reduced] = coefficient * k
    return RationalPolynomial._raw(p.variables, terms)


def gradient(p):
    """ Partial derivatives of p in variable-list order. """
    return [differentiate(p, v) for v in p.variables]


def substitute(p, bindings):
    """
    Substitutes polynomials (or rational constants) for variables.

    The output variable list is p's list with each bound variable replaced, in
    place, by the variables of its binding that are not already present.
    :param bindings: dict variable -> RationalPolynomial or rational constant
    :type bindings: dict
    """
    for name in bindings:
        p.index_of(name)
    values = {}
    output = []
    for v in p.variables:
        if v in bindings:
            value = bindings[v]
            if isinstance(value, RationalPolynomial):
                for w in value.active_variables():
                    if w not in output:
                        output.append(w)
                values[v] = value
            else:
                values[v] = to_fraction(value)
        elif v not in output:
            output.append(v)
    # unbound variables of p that reappear inside bindings keep a single slot
    output = tuple(output)
    embedded = {}
    for v in p.variables:
        if v in values:
            value = values[v]
            if isinstance(value, RationalPolynomial):
                embedded[v] = value.with_variables(output)
            else:
                embedded[v] = RationalPolynomial.constant(value, output)
        else:
            embedded[v] = RationalPolynomial.variable(v, output)
    powers = {}

    def power(v, k):
        key = (v, k)
        if key not in powers:
            powers[key] = embedded[v] ** k
        return powers[key]

    result = RationalPolynomial.zero(output)
    for exponents, coefficient in p.terms.items():
        term = RationalPolynomial.constant(coefficient, output)
        for v, k in zip(p.variables, exponents):
            if k:
                term = term * power(v, k)
        result = result + term
    return result


def substitute_values(p, values):
    """ Substitutes rational constants for some variables, keeping the variable list. """
    indices = {p.index_of(v): to_fraction(c) for v, c in values.items()}
    terms = {}
    for exponents, coefficient in p.terms.items():
        c = coefficient
        reduced = list(exponents)
        for i, value in indices.items():
            if exponents[i]:
                c *= value ** exponents[i]
                reduced[i] = 0
        if c:
            key = tuple(reduced)
            terms[key] = terms.get(key, 0) + c
    return RationalPolynomial._raw(p.variables, {e: c for e, c in terms.items() if c})


def translate_to_origin(p, point):
    """ Returns p(x + point), so that p(point) becomes the constant term. """
    point = affine_point(point)
    if len(point) != len(p.variables):
        raise DegreeError("Point {} does not match variables {}".format(point, p.variables))
    bindings = {}
    for v, c in zip(p.variables, point):
        if c != 0:
            bindings[v] = RationalPolynomial.variable(v, p.variables) + c
    if not bindings:
        return p
    return substitute(p, bindings)


def divide(p, q):
    """
    Exact multivariate division.
    :return: the quotient p/q, or None when q does not divide p
    """
    _check_same(p, q)
    if q.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial.")
    lead_q = q.leading_exponents()
    lead_c = q.leading_coefficient()
    remainder = dict(p.terms)
    quotient = {}
    q_terms = list(q.terms.items())
    while remainder:
        lead_r = max(remainder, key=_grlex_key)
        shift = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(s < 0 for s in shift):
            return None
        factor = remainder[lead_r] / lead_c
        quotient[shift] = factor
        for e, c in q_terms:
            key = tuple(a + b for a, b in zip(e, shift))
            value = remainder.get(key, 0) - factor * c
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return RationalPolynomial._raw(p.variables, quotient)


def exact_divide(p, q):
    quotient = divide(p, q)
    if quotient is None:
        raise DegreeError("Division is not exact: ({}) / ({})".format(p, q))
    return quotient


def prem(p, q, name):
    """ Pseudo-remainder of p by q with respect to one variable. """
    _check_same(p, q)
    n = q.degree(name)
    if n < 0:
        raise ZeroDivisionError("Pseudo-division by the zero polynomial.")
    x = RationalPolynomial.variable(name, p.variables)
    lc = q.coefficient_in(name, n)
    r = p
    e = max(p.degree(name) - n + 1, 0)
    while not r.is_zero() and r.degree(name) >= n:
        d = r.degree(name)
        t = r.coefficient_in(name, d) * x ** (d - n)
        r = lc * r - t * q
        e -= 1
    return lc ** e * r


def _normalize(p):
    return p.monic()


def content(p, name):
    """ Gcd of the coefficients of p viewed as a polynomial in one variable. """
    result = RationalPolynomial.zero(p.variables)
    for coefficient in p.coefficients_in(name).values():
        result = _gcd(result, coefficient)
        if result.is_constant() and not result.is_zero():
            return RationalPolynomial.constant(1, p.variables)
    return _normalize(result)


def primitive_part(p, name):
    if p.is_zero():
        return p
    return exact_divide(p, content(p, name))


def _gcd(p, q):
    if p.is_zero():
        return _normalize(q)
    if q.is_zero():
        return _normalize(p)
    if p.is_constant() or q.is_constant():
        return RationalPolynomial.constant(1, p.variables)
    active = set(p.active_variables()) | set(q.active_variables())
    name = [v for v in p.variables if v in active][-1]
    if p.degree(name) == 0:
        return _gcd(p, content(q, name))
    if q.degree(name) == 0:
        return _gcd(content(p, name), q)
    cp = content(p, name)
    cq = content(q, name)
    c = _gcd(cp, cq)
    a = exact_divide(p, cp)
    b = exact_divide(q, cq)
    if a.degree(name) < b.degree(name):
        a, b = b, a
    while True:
        r = prem(a, b, name)
        if r.is_zero():
            g = primitive_part(b, name)
            break
        if r.degree(name) == 0:
            g = RationalPolynomial.constant(1, p.variables)
            break
        a, b = b, primitive_part(r, name)
    return _normalize(c * g)


def gcd(p, q):
    """
    Greatest common divisor, normalized to leading coefficient 1 (graded-lex).
    gcd(0, q) is the normalized q; gcd(0, 0) is 0.
    """
    _check_same(p, q)
    return _gcd(p, q)


def gcd_all(polys):
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty collection")
    result = RationalPolynomial.zero(polys[0].variables)
    for p in polys:
        result = gcd(result, p)
        if result.is_constant() and not result.is_zero():
            break
    return result


def is_squarefree(p):
    """ True iff no square of a nonconstant polynomial divides p. """
    if p.is_zero():
        raise DegreeError("Squarefreeness is undefined for the zero polynomial.")
    if p.is_constant():
        return True
    g = gcd_all([p] + [differentiate(p, v) for v in p.active_variables()])
    return g.is_constant()


def _bareiss_determinant(matrix, variables):
    size = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    previous = RationalPolynomial.constant(1, variables)
    for i in range(size - 1):
        if m[i][i].is_zero():
            pivot = None
            for r in range(i + 1, size):
                if not m[r][i].is_zero():
                    pivot = r
                    break
            if pivot is None:
                return RationalPolynomial.zero(variables)
            m[i], m[pivot] = m[pivot], m[i]
            sign = -sign
        for r in range(i + 1, size):
            for c in range(i + 1, size):
                m[r][c] = exact_divide(m[i][i] * m[r][c] - m[r][i] * m[i][c], previous)
            m[r][i] = RationalPolynomial.zero(variables)
        previous = m[i][i]
    det = m[size - 1][size - 1]
    return det if sign > 0 else -det


def sylvester_matrix(p, q, name):
    """ Sylvester matrix of p and q in one variable, rows of p first. """
    _check_same(p, q)
    m = p.degree(name)
    n = q.degree(name)
    if m <= 0 or n <= 0:
        raise DegreeError("Resultant needs positive degree in '{}' for both arguments.".format(name))
    zero = RationalPolynomial.zero(p.variables)
    cp = p.coefficients_in(name)
    cq = q.coefficients_in(name)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = cp.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = cq.get(k, zero)
        rows.append(row)
    return rows


def resultant(p, q, name):
    """
    Resultant with respect to one variable: the Sylvester determinant with
    p's coefficient rows first. The result keeps p's variable list and no
    longer involves the eliminated variable.
    """
    rows = sylvester_matrix(p, q, name)
    logger.debug("Resultant in %s: Sylvester matrix of size %d", name, len(rows))
    return _bareiss_determinant(rows, p.variables)


# Parsing

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))')


def _tokenize(text):
    tokens = []
    line = 1
    line_start = 0
    position = 0
    while position < len(text):
        char = text[position]
        if char == '\n':
            line += 1
            position += 1
            line_start = position
            continue
        if char.isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise ParseError("Unexpected character '{}'".format(char), line, position - line_start + 1)
        start = match.start(match.lastgroup)
        tokens.append((match.lastgroup, match.group(match.lastgroup), line, start - line_start + 1))
        position = match.end()
    tokens.append(('end', '', line, position - line_start + 1))
    return tokens


class _Parser(object):

    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.index = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.index]

    def take(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message, token=None):
        token = token or self.peek()
        return ParseError(message, token[2], token[3])

    def expression(self):
        sign = 1
        if self.peek()[1] in ('+', '-') and self.peek()[0] == 'op':
            sign = -1 if self.take()[1] == '-' else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == 'op' and self.peek()[1] in ('+', '-'):
            op = self.take()[1]
            right = self.term()
            result = result + right if op == '+' else result - right
        return result

    def term(self):
        result = self.power()
        while self.peek()[0] == 'op' and self.peek()[1] in ('*', '/'):
            op = self.take()
            right = self.power()
            if op[1] == '*':
                result = result * right
            else:
                if not right.is_constant() or right.is_zero():
                    raise self.error("Division only by a nonzero rational constant", op)
                result = result.scale(1 / right.constant_term())
        return result

    def power(self):
        base = self.atom()
        if self.peek()[0] == 'op' and self.peek()[1] == '^':
            self.take()
            token = self.take()
            if token[0] != 'number':
                raise self.error("Expected a non-negative integer exponent", token)
            base = base ** int(token[1])
        return base

    def atom(self):
        token = self.take()
        kind, value = token[0], token[1]
        if kind == 'number':
            return RationalPolynomial.constant(int(value), self.variables)
        if kind == 'name':
            if value not in self.variables:
                raise self.error("Unknown variable '{}'".format(value), token)
            return RationalPolynomial.variable(value, self.variables)
        if kind == 'op' and value == '(':
            inner = self.expression()
            closing = self.take()
            if closing[1] != ')':
                raise self.error("Expected ')'", closing)
            return inner
        if kind == 'op' and value == '-':
            return -self.power()
        raise self.error("Unexpected token '{}'".format(value) if value else "Unexpected end of input", token)


def parse_polynomial(text, variables=None):
    """
    Parses the polynomial text grammar: terms joined by + and -, monomials as
    coeff*var^exp*..., rational coefficients as n/d, parentheses allowed.
    :param variables: ordered variable list; defaults to the sorted identifiers of the text
    :raises ParseError: with line and column of the offending token
    """
    tokens = _tokenize(text)
    if variables is None:
        variables = tuple(sorted(set(t[1] for t in tokens if t[0] == 'name')))
    parser = _Parser(tokens, tuple(variables))
    if parser.peek()[0] == 'end':
        raise parser.error("Empty polynomial")
    result = parser.expression()
    if parser.peek()[0] != 'end':
        raise parser.error("Unexpected token '{}'".format(parser.peek()[1]))
    return result


def format_polynomial(p):
    """ Renders p in graded-lex descending order, e.g. "-1/2*x^6 - y^6 + t^2". """
    if p.is_zero():
        return "0"
    pieces = []
    for i, (exponents, coefficient) in enumerate(p.sorted_terms()):
        factors = []
        for v, e in zip(p.variables, exponents):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("{}^{}".format(v, e))
        magnitude = abs(coefficient)
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = format_rational(magnitude) + "*" + "*".join(factors)
        if i == 0:
            pieces.append(("-" if coefficient < 0 else "") + body)
        else:
            pieces.append(("- " if coefficient < 0 else "+ ") + body)
    return " ".join(pieces)


def truncate(p, order):
    """ Drops every term of total degree above order. """
    return RationalPolynomial._raw(p.variables, {e: c for e, c in p.terms.items() if sum(e) <= order})


def homogeneous_part(p, degree):
    return RationalPolynomial._raw(p.variables, {e: c for e, c in p.terms.items() if sum(e) == degree})
