""" Unit test for exact rational polynomials.
    To execute on a command line, run:
    python -m unittest tests.test_polyq

"""
import random
import unittest
from fractions import Fraction

from logdp.errors import DegreeError, ParseError, VariableMismatchError
from logdp.polyq import (RationalPolynomial, content, differentiate, divide, exact_divide, format_polynomial, gcd,
                         gradient, is_squarefree, parse_polynomial, prem, primitive_part, resultant, substitute,
                         substitute_values, translate_to_origin, truncate)

XY = ('x', 'y')


def p(text, variables=XY):
    return parse_polynomial(text, variables)


class TestParsing(unittest.TestCase):

    def test_parse_and_format(self):
        f = parse_polynomial("x^2 - 2*x*y + 1/2")
        self.assertEqual(f.variables, XY, "Default variables should be the sorted identifiers.")
        self.assertEqual(format_polynomial(f), "x^2 - 2*x*y + 1/2")

    def test_parse_expands_powers(self):
        self.assertEqual(p("(x + y)^2"), p("x^2 + 2*x*y + y^2"))
        self.assertEqual(p("-(x - 1)*(x + 1)"), p("1 - x^2"))

    def test_format_zero_and_negative_lead(self):
        self.assertEqual(format_polynomial(RationalPolynomial.zero(XY)), "0")
        self.assertEqual(format_polynomial(p("-1/2*x^6 - y^6 + 3")), "-1/2*x^6 - y^6 + 3")

    def test_parse_error_reports_column(self):
        with self.assertRaises(ParseError) as cm:
            parse_polynomial("x^2 + * y")
        self.assertEqual(cm.exception.line, 1)
        self.assertEqual(cm.exception.column, 7)

    def test_parse_error_reports_line(self):
        with self.assertRaises(ParseError) as cm:
            parse_polynomial("x +\n y $")
        self.assertEqual((cm.exception.line, cm.exception.column), (2, 4))

    def test_unknown_variable(self):
        with self.assertRaises(ParseError) as cm:
            parse_polynomial("x + z", XY)
        self.assertIn("Unknown variable", cm.exception.message)
        self.assertEqual(cm.exception.column, 5)

    def test_division_only_by_constants(self):
        self.assertEqual(p("x/2"), p("1/2*x"))
        with self.assertRaises(ParseError):
            parse_polynomial("x/y")
        with self.assertRaises(ParseError):
            parse_polynomial("x/0")

    def test_empty_text(self):
        with self.assertRaises(ParseError):
            parse_polynomial("   ")


class TestArithmetic(unittest.TestCase):

    def test_mismatched_variables(self):
        with self.assertRaises(VariableMismatchError):
            p("x", ('x',)) + p("x")

    def test_constant_comparison(self):
        self.assertEqual(p("x - x + 3"), 3)
        self.assertEqual(p("x - x"), 0)
        self.assertNotEqual(p("x"), 0)

    def test_evaluate(self):
        self.assertEqual(p("x^2*y - 1/2").evaluate((2, 3)), Fraction(23, 2))
        self.assertEqual(p("x^2*y - 1/2").evaluate({'x': 2, 'y': 3}), Fraction(23, 2))

    def test_differentiate(self):
        self.assertEqual(differentiate(p("x^3*y + y^2"), 'x'), p("3*x^2*y"))
        self.assertEqual(differentiate(p("x^3*y + y^2"), 'y'), p("x^3 + 2*y"))

    def test_gradient(self):
        self.assertEqual(gradient(p("x^3*y + y^2")), [p("3*x^2*y"), p("x^3 + 2*y")])
        self.assertEqual(gradient(p("x*z", ("x", "y", "z"))), [p("z", ("x", "y", "z")), p("0", ("x", "y", "z")),
                                                              p("x", ("x", "y", "z"))])

    def test_truncate(self):
        self.assertEqual(truncate(p("x + x*y + x^3"), 2), p("x + x*y"))

    def test_substitute_values_keeps_variables(self):
        f = substitute_values(p("x^2 + x*y + 1"), {'x': 2})
        self.assertEqual(f.variables, XY)
        self.assertEqual(f, p("2*y + 5"))

    def test_substitute_polynomial(self):
        f = substitute(p("x^2 + y"), {'x': p("x + y")})
        self.assertEqual(f.with_variables(XY), p("x^2 + 2*x*y + y^2 + y"))

    def test_translate_to_origin(self):
        self.assertEqual(translate_to_origin(p("x^2 + y^2 - 2"), (1, 1)), p("x^2 + y^2 + 2*x + 2*y"))


class TestDivisionAndGcd(unittest.TestCase):

    def test_exact_division(self):
        self.assertEqual(divide(p("x^2 - y^2"), p("x - y")), p("x + y"))
        self.assertIsNone(divide(p("x^2 + 1"), p("x")))
        with self.assertRaises(DegreeError):
            exact_divide(p("x^2 + 1"), p("x"))

    def test_division_of_random_products(self):
        rng = random.Random(20)
        for _ in range(10):
            a = RationalPolynomial(XY, {(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) or 1
                                        for _ in range(4)})
            b = RationalPolynomial(XY, {(rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(1, 7), 3)
                                        for _ in range(3)})
            self.assertEqual(divide(a * b, b), a)

    def test_pseudo_remainder(self):
        self.assertEqual(prem(p("x^2 + 1", ('x',)), p("x - 1", ('x',)), 'x'), 2)

    def test_gcd(self):
        f = p("(x - y)*(x + 2)")
        g = p("(x - y)*(y + 3)")
        self.assertEqual(gcd(f, g), p("x - y"))
        self.assertEqual(gcd(p("x^2 + 1"), p("y")), 1)

    def test_content(self):
        self.assertEqual(content(p("x*y + x"), 'y'), p("x"))
        self.assertEqual(primitive_part(p("x*y + x"), 'y'), p("y + 1"))

    def test_squarefree(self):
        self.assertTrue(is_squarefree(p("x^2 + y^2 - 1")))
        self.assertFalse(is_squarefree(p("(x - y)^2*(x + 1)")))
        with self.assertRaises(DegreeError):
            is_squarefree(RationalPolynomial.zero(XY))


class TestResultant(unittest.TestCase):

    def test_univariate(self):
        self.assertEqual(resultant(p("x - 1", ('x',)), p("x + 1", ('x',)), 'x'), 2)

    def test_eliminates_variable(self):
        r = resultant(p("x^2 + y^2 - 1"), p("x - y"), 'x')
        self.assertEqual(r, p("2*y^2 - 1"))
        self.assertEqual(r.degree('x'), 0)
        self.assertEqual(resultant(p("x^2 + y"), p("x + y"), 'x'), p("y^2 + y"))

    def test_common_root_gives_zero(self):
        self.assertEqual(resultant(p("x^2 - y^2"), p("x - y"), 'x'), 0)

    def test_needs_positive_degree(self):
        with self.assertRaises(DegreeError):
            resultant(p("y"), p("x"), 'x')


def random_polynomial(rng, degree=3, size=4):
    return RationalPolynomial(XY, {(rng.randint(0, degree), rng.randint(0, degree)):
                                   Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size)})


class TestRandomizedLaws(unittest.TestCase):

    def test_ring_laws(self):
        rng = random.Random(31)
        for _ in range(40):
            a, b, c = (random_polynomial(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertTrue((a - a).is_zero())
            self.assertEqual(a * 1, a)

    def test_leibniz_rule(self):
        rng = random.Random(32)
        for _ in range(40):
            a, b = random_polynomial(rng), random_polynomial(rng)
            for v in XY:
                self.assertEqual(differentiate(a * b, v), differentiate(a, v) * b + a * differentiate(b, v))

    def test_substitution_is_a_homomorphism(self):
        rng = random.Random(33)
        bindings = {'x': p("x + 2*y"), 'y': p("y^2 - x")}
        for _ in range(25):
            a, b, c = (random_polynomial(rng, degree=2) for _ in range(3))
            self.assertEqual(substitute(a * b + c, bindings),
                             substitute(a, bindings) * substitute(b, bindings) + substitute(c, bindings))
            point = (Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 3))
            self.assertEqual(substitute_values(a * b, dict(zip(XY, point))).constant_term(),
                             a.evaluate(point) * b.evaluate(point))

    def test_gcd_divides_both_inputs(self):
        rng = random.Random(34)
        for _ in range(25):
            a, b, c = (random_polynomial(rng, degree=2, size=3) for _ in range(3))
            if a.is_zero() or b.is_zero() or c.is_zero():
                continue
            g = gcd(a * c, b * c)
            self.assertIsNotNone(divide(a * c, g))
            self.assertIsNotNone(divide(b * c, g))
            self.assertIsNotNone(divide(g, c), "gcd {} misses the common factor {}".format(g, c))

    def test_resultant_vanishes_iff_common_factor(self):
        rng = random.Random(35)
        checked = 0
        for _ in range(40):
            a, b = random_polynomial(rng, degree=2, size=3), random_polynomial(rng, degree=2, size=3)
            if rng.random() < 0.5:
                h = random_polynomial(rng, degree=1, size=2)
                a, b = a * h, b * h
            if a.degree('x') < 1 or b.degree('x') < 1:
                continue
            checked += 1
            self.assertEqual(resultant(a, b, 'x').is_zero(), gcd(a, b).degree('x') > 0,
                             "resultant and gcd disagree on {} and {}".format(a, b))
        self.assertGreater(checked, 10)


if __name__ == '__main__':
    unittest.main()
