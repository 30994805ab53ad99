""" Unit test for resolution diagrams and configuration enumeration.
    To execute on a command line, run:
    python -m unittest tests.test_dynkin

"""
import itertools
import unittest

import networkx as nx

from logdp import data_service
from logdp.dynkin import (BLACK, DOUBLE_TRANSPARENT, TRANSPARENT, ConfigName, Diagram, ade_diagram, ade_name,
                          affine_ade_diagram, blow_up, cg_intersections, chain, chain_order, config_of, duv_part,
                          elliptic_pencil_check, enumerate_ade_subdiagrams, enumerate_configurations, enumerate_union,
                          gram_matrix, is_negative_definite, kn_minimal, kn_right_resolution, log_part, null_root,
                          sorted_configs)
from logdp.errors import DiagramError, ParseError


def run_length_oracle(n):
    """ Configurations of subsets of the A_n chain, read off the lengths of maximal runs. """
    found = set()
    for mask in itertools.product((0, 1), repeat=n):
        runs = [len(list(group)) for bit, group in itertools.groupby(mask) if bit]
        found.add(ConfigName(('A', r) for r in runs))
    return found


class TestDiagram(unittest.TestCase):

    def test_vertex_kinds(self):
        d = Diagram([(0, -2), (1, -1), (2, -4)], [(0, 1), (1, 2)])
        self.assertEqual([d.kind(v) for v in d.vertices], [BLACK, TRANSPARENT, DOUBLE_TRANSPARENT])
        with self.assertRaises(DiagramError):
            Diagram([(0, -5)])
        with self.assertRaises(DiagramError):
            Diagram([(0, -2, TRANSPARENT)])
        with self.assertRaises(DiagramError):
            Diagram([(0, -2), (0, -2)])

    def test_edges(self):
        d = Diagram([(0, -2), (1, -2)], [(0, 1)])
        d.add_edge(1, 0)
        self.assertEqual(d.multiplicity(0, 1), 2)
        with self.assertRaises(DiagramError):
            d.add_edge(0, 0)
        with self.assertRaises(DiagramError):
            d.add_edge(0, 7)

    def test_dict_round_trip(self):
        d = kn_right_resolution(3)
        self.assertEqual(Diagram.from_dict(d.to_dict()), d)
        with self.assertRaises(DiagramError):
            Diagram.from_dict({"edges": []})

    def test_read_diagram_file(self):
        path = data_service.list_diagram_files()[0]
        d = data_service.read_diagram_file(path)
        self.assertTrue(all(d.kind(v) == BLACK for v in d.vertices))


class TestResolutions(unittest.TestCase):

    def test_kn_minimal(self):
        self.assertEqual(gram_matrix(kn_minimal(1)).tolist(), [[-4]])
        self.assertEqual([kn_minimal(4).self_intersection(v) for v in kn_minimal(4).vertices], [-3, -2, -2, -3])
        with self.assertRaises(DiagramError):
            kn_minimal(0)

    def test_blow_up(self):
        d = blow_up(chain([-2, -2]), 0, 1)
        self.assertEqual(len(d), 3)
        self.assertEqual(d.self_intersection(2), -1)
        self.assertEqual(d.multiplicity(0, 1), 0)
        with self.assertRaises(DiagramError):
            blow_up(chain([-2, -2, -2]), 0, 2)

    def test_kn_right_resolution(self):
        for n in range(1, 21):
            d = kn_right_resolution(n)
            self.assertEqual(len(d), 2 * n - 1)
            self.assertTrue(nx.is_isomorphic(d.graph, nx.path_graph(2 * n - 1)))
            expected = [-4 if i % 2 == 0 else -1 for i in range(2 * n - 1)]
            self.assertEqual([d.self_intersection(v) for v in chain_order(d)], expected)
            self.assertTrue(is_negative_definite(kn_minimal(n)))

    def test_log_and_duv_parts(self):
        d = kn_right_resolution(2)
        self.assertEqual(len(log_part(d)), 3)
        self.assertEqual(len(duv_part(d)), 0)
        self.assertEqual(list(cg_intersections(d).values()), [0, 0, 0])

    def test_cg_intersections(self):
        d = Diagram([('a', -4), ('t', -1), ('b', -2)], [('a', 't'), ('t', 'b')])
        self.assertEqual(cg_intersections(d), {'a': 0, 't': 1, 'b': 0})
        self.assertEqual(len(log_part(d)), 1)
        with self.assertRaises(DiagramError):
            cg_intersections(chain([-3]))


class TestLattice(unittest.TestCase):

    def test_gram_matrix(self):
        self.assertEqual(gram_matrix(ade_diagram('A', 3)).tolist(), [[-2, 1, 0], [1, -2, 1], [0, 1, -2]])

    def test_ade_negative_definite(self):
        for letter, n in [('A', 1), ('A', 6), ('D', 4), ('D', 7), ('E', 6), ('E', 7), ('E', 8)]:
            self.assertTrue(is_negative_definite(ade_diagram(letter, n)), "{}_{}".format(letter, n))

    def test_affine_diagrams_and_null_root(self):
        for letter, n in [('A', 1), ('A', 5), ('D', 4), ('D', 6), ('E', 6), ('E', 7), ('E', 8)]:
            d = affine_ade_diagram(letter, n)
            self.assertFalse(is_negative_definite(d), "Extended {}_{}".format(letter, n))
            self.assertTrue(elliptic_pencil_check(d, null_root(letter, n)), "Null root of {}_{}".format(letter, n))

    def test_packaged_elliptic_diagrams(self):
        paths = data_service.list_diagram_files()
        self.assertEqual(len(paths), 5)
        for path in paths:
            d = data_service.read_diagram_file(path)
            mult = data_service.read_multiplicities(path)
            self.assertTrue(elliptic_pencil_check(d, mult), "{} is not an elliptic pencil".format(path))

    def test_wrong_multiplicities(self):
        d = affine_ade_diagram('E', 7)
        self.assertFalse(elliptic_pencil_check(d, {v: 1 for v in d.vertices}))
        with self.assertRaises(DiagramError):
            elliptic_pencil_check(d, {99: 1})
        with self.assertRaises(DiagramError):
            elliptic_pencil_check(d, {0: 0})


class TestConfigName(unittest.TestCase):

    def test_parse_variants(self):
        self.assertEqual(ConfigName.parse("A3A2 2A1"), ConfigName.parse("A_3 A_2 2A_1"))
        self.assertEqual(ConfigName.parse("A_{11}"), ConfigName([('A', 11)]))
        self.assertEqual(ConfigName.parse("∅"), ConfigName())
        self.assertEqual(len(ConfigName.parse("")), 0)

    def test_canonical_order(self):
        self.assertEqual(str(ConfigName.parse("A_1 D_4 E_6")), "E_6 D_4 A_1")
        self.assertEqual(str(ConfigName.parse("A_1 A_3 A_1")), "A_3 2A_1")
        self.assertEqual(str(ConfigName()), "∅")

    def test_scale_and_rank(self):
        name = ConfigName.parse("A_3 A_1")
        self.assertEqual(name.scale(2), ConfigName.parse("2A_3 2A_1"))
        self.assertEqual(name.rank(), 4)

    def test_parse_error(self):
        with self.assertRaises(ParseError) as cm:
            ConfigName.parse("A_3 B_2")
        self.assertEqual(cm.exception.column, 5)

    def test_ade_name(self):
        for letter, n in [('A', 4), ('D', 5), ('E', 6), ('E', 7), ('E', 8)]:
            self.assertEqual(ade_name(ade_diagram(letter, n)), (letter, n))
        for letter, n in [('A', 3), ('D', 4), ('E', 6)]:
            with self.assertRaises(DiagramError):
                ade_name(affine_ade_diagram(letter, n))
        with self.assertRaises(DiagramError):
            ade_name(kn_minimal(2))

    def test_config_of_disjoint_union(self):
        d = Diagram([(i, -2) for i in range(5)], [(0, 1), (1, 2), (3, 4)])
        self.assertEqual(config_of(d), ConfigName.parse("A_3 A_2"))


class TestEnumeration(unittest.TestCase):

    def test_known_counts(self):
        self.assertEqual(len(enumerate_configurations("A_4")), 7)
        self.assertEqual(len(enumerate_configurations("A_7")), 22)
        self.assertEqual(len(enumerate_configurations("A_5 A_1")), 17)

    def test_chains_match_run_lengths(self):
        for n in range(1, 9):
            self.assertEqual(enumerate_configurations(ConfigName([('A', n)])), run_length_oracle(n),
                             "Subconfigurations of A_{} disagree".format(n))

    def test_d4(self):
        names = set(str(c) for c in enumerate_configurations("D_4"))
        self.assertEqual(names, {"D_4", "A_3", "A_2", "3A_1", "2A_1", "A_1", "∅"})

    def test_inputs(self):
        self.assertEqual(enumerate_configurations(ade_diagram('A', 4)), enumerate_configurations("A_4"))
        self.assertEqual(enumerate_ade_subdiagrams(ade_diagram('E', 6)), enumerate_configurations("E_6"))
        self.assertEqual(enumerate_configurations(["A_2", ConfigName.parse("A_1")]),
                         enumerate_configurations("A_2 A_1"))
        self.assertEqual(enumerate_configurations([]), {ConfigName()})
        with self.assertRaises(DiagramError):
            enumerate_configurations("K_2")

    def test_union_of_generators(self):
        union = enumerate_union("A_3 | 2A_1")
        self.assertEqual(union, enumerate_configurations("A_3") | enumerate_configurations("2A_1"))
        self.assertEqual(enumerate_union(["A_2", "A_1 A_1"]), enumerate_union("A_2|2A_1"))
        self.assertEqual(enumerate_union(""), {ConfigName()})
        self.assertEqual(len(enumerate_union("2D_4 | D_8 | D_6 2A_1 | D_5 A_3")), 52)

    def test_sorted_configs(self):
        ordered = [str(c) for c in sorted_configs(enumerate_configurations("A_3"))]
        self.assertEqual(ordered, ["A_3", "2A_1", "A_2", "A_1", "∅"])


if __name__ == '__main__':
    unittest.main()
