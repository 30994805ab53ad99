""" Unit test for weighted projective spaces.
    To execute on a command line, run:
    python -m unittest tests.test_wps

"""
import unittest
from fractions import Fraction

from logdp.errors import DegreeError, LogDPError
from logdp.polyq import parse_polynomial
from logdp.wps import (WeightedForm, WeightedSpace, cone_point, embedding_dimension, genus_system_invariants,
                       is_well_formed, k_square, monomial_basis, quasi_smooth_at, singular_strata, stratum_point,
                       weighted_degree)


class TestWeightedSpace(unittest.TestCase):

    def test_parse(self):
        space = WeightedSpace.parse("1,1,2,3")
        self.assertEqual(space.weights, (1, 1, 2, 3))
        self.assertEqual(space.dimension, 3)
        self.assertEqual(space.weight_one_indices(), (0, 1))
        with self.assertRaises(LogDPError):
            WeightedSpace.parse("1,a")
        with self.assertRaises(DegreeError):
            WeightedSpace((1, 0, 2))

    def test_well_formed(self):
        self.assertTrue(is_well_formed(WeightedSpace((1, 1, 2, 3))))
        self.assertTrue(is_well_formed(WeightedSpace((1, 1, 4, 4))))
        self.assertFalse(is_well_formed(WeightedSpace((2, 2, 3))))

    def test_weighted_degree(self):
        space = WeightedSpace((1, 1, 2, 3), ('x', 'y', 'z', 't'))
        f = parse_polynomial("t^2 + z^3 + x^6 + y^6", space.variables)
        self.assertEqual(weighted_degree(space, f), 6)
        self.assertIsNone(weighted_degree(space, parse_polynomial("t + x", space.variables)))
        with self.assertRaises(DegreeError):
            WeightedForm(space, parse_polynomial("t + x", space.variables))

    def test_monomial_basis(self):
        space = WeightedSpace((1, 1, 2))
        self.assertEqual(monomial_basis(space, 2), [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)])

    def test_monomial_count_p1123(self):
        basis = monomial_basis(WeightedSpace((1, 1, 2, 3)), 6)
        self.assertEqual(len(basis), 23)
        self.assertEqual(len(set(basis)), 23)
        self.assertIn((0, 0, 0, 2), basis)
        self.assertIn((0, 0, 3, 0), basis)

    def test_embedding_dimension(self):
        for g in range(2, 13):
            space = WeightedSpace((1,) * g + (2,))
            self.assertEqual(len(monomial_basis(space, 2)), g * (g + 1) // 2 + 1)
            self.assertEqual(embedding_dimension(g), len(monomial_basis(space, 2)) - 1)


class TestStrata(unittest.TestCase):

    def test_isolated_strata(self):
        strata = singular_strata(WeightedSpace((1, 1, 2, 3)))
        self.assertEqual([(s.coordinates, s.order) for s in strata], [((2,), 2), ((3,), 3)])

    def test_line_stratum(self):
        space = WeightedSpace((1, 1, 4, 4))
        strata = singular_strata(space)
        self.assertEqual([(s.coordinates, s.order) for s in strata], [((2, 3), 4)])
        self.assertEqual(stratum_point(space, strata[0]), "(0:0:*:*)")

    def test_not_well_formed(self):
        with self.assertRaises(DegreeError):
            singular_strata(WeightedSpace((2, 2, 3)))


class TestQuasiSmoothness(unittest.TestCase):

    def test_double_sextic(self):
        space = WeightedSpace((1, 1, 2, 3), ('x', 'y', 'z', 't'))
        form = WeightedForm(space, parse_polynomial("t^2 + z^3 + x^6 + y^6", space.variables))
        self.assertTrue(quasi_smooth_at(form, (0, 0, -1, 1)))

    def test_singular_cone_point(self):
        space = WeightedSpace((1, 1, 1), ('x', 'y', 'z'))
        form = WeightedForm(space, parse_polynomial("x*y", space.variables))
        self.assertFalse(quasi_smooth_at(form, (0, 0, 1)))
        self.assertFalse(quasi_smooth_at(form, (0, 0), chart=2))
        with self.assertRaises(LogDPError):
            quasi_smooth_at(form, (1, 1, 0))
        with self.assertRaises(DegreeError):
            quasi_smooth_at(form, (0, 0, 0))

    def test_chart_independence(self):
        cases = [(WeightedSpace((1, 1, 1), ('x', 'y', 'z')), "(x - z)*(y - z)*(x + y)", (1, 1, 1), False),
                 (WeightedSpace((1, 1, 1), ('x', 'y', 'z')), "(x - z)*(y - z)*(x + y)", (1, 3, 1), True),
                 (WeightedSpace((1, 1, 2, 3), ('x', 'y', 'z', 't')), "t^2 + z^3 + x^6 + y^6",
                  (2, 2, -12, 40), True)]
        for space, text, point, expected in cases:
            form = WeightedForm(space, parse_polynomial(text, space.variables))
            self.assertEqual(quasi_smooth_at(form, point), expected)
            for chart in space.weight_one_indices():
                scale = Fraction(1, point[chart])
                local = tuple(c * scale ** w for i, (c, w) in enumerate(zip(point, space.weights)) if i != chart)
                self.assertEqual(quasi_smooth_at(form, local, chart=chart), expected,
                                 "{} at {} in chart {}".format(text, point, chart))

    def test_cone_point(self):
        space = WeightedSpace((1, 1, 1))
        self.assertEqual(cone_point(space, (2, 3), chart=1), (2, 1, 3))
        self.assertEqual(cone_point(space, (2, 1, 3)), (2, 1, 3))
        with self.assertRaises(DegreeError):
            cone_point(space, (2, 3))


class TestInvariants(unittest.TestCase):

    def test_k_square_table(self):
        table = [((1, 1, 2, 3), (6,), (1, 2)),
                 ((1, 1, 4, 4), (8,), (2, 3)),
                 ((1, 1, 1, 2), (4,), (2, 3)),
                 ((1, 1, 1, 1, 2), (2, 3), (3, 4)),
                 ((1, 1, 1, 4), (5,), (5, 6))]
        for weights, degrees, expected in table:
            self.assertEqual(k_square(WeightedSpace(weights), degrees), expected,
                             "Wrong K^2 for P{} with degrees {}".format(weights, degrees))

    def test_k_square_fraction(self):
        ksq, g = k_square(WeightedSpace((1, 2, 3, 5)), (10,))
        self.assertEqual(ksq, Fraction(1, 3))
        self.assertEqual(g, Fraction(4, 3))

    def test_k_square_rejects_non_surfaces(self):
        with self.assertRaises(DegreeError):
            k_square(WeightedSpace((1, 1, 1)), (2,))
        with self.assertRaises(DegreeError):
            k_square(WeightedSpace((1, 1, 1, 1)), (4,))

    def test_genus_system_invariants(self):
        for g in range(2, 13):
            invariants = genus_system_invariants(g)
            self.assertEqual(tuple(invariants), (3 * g - 3, 4 * g - 4, g, 2 * g - 2))
        with self.assertRaises(DegreeError):
            genus_system_invariants(1)


if __name__ == '__main__':
    unittest.main()
