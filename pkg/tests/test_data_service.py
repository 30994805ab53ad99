""" Unit test for reading input files and rendering reports.
    To execute on a command line, run:
    python -m unittest tests.test_data_service

"""
import json
import math
import os
import tempfile
import unittest
from collections import OrderedDict
from fractions import Fraction

from logdp import data_service
from logdp.dynkin import ConfigName
from logdp.errors import FixtureError, LogDPError, ParseError
from logdp.polyq import parse_polynomial

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def data_file(name):
    return os.path.join(DATA_DIR, name)


class TestFileContents(unittest.TestCase):

    def test_read_file_contents_existing_file(self):
        local_filepath = data_file("fermat_sextic.poly")

        if os.path.isfile(local_filepath):
            results = data_service.read_file_contents(local_filepath)
            self.assertIn("z^3 + x^6 + y^6", results)
        else:
            self.fail("Test data file does not exist. Please ensure the file exists and try running test again")

    def test_read_file_contents_missing_file(self):
        local_filepath = data_file("missing_nonexistent.poly")

        if not os.path.isfile(local_filepath):
            results = data_service.read_file_contents(local_filepath)
            self.assertEqual(results, None)
        else:
            self.fail("File should not exist on filesystem. Please remove the file and try running test again.")


class TestPolynomialFiles(unittest.TestCase):

    def test_comments_are_skipped(self):
        polynomials = data_service.read_polynomial_file(data_file("fermat_sextic.poly"))
        self.assertEqual(len(polynomials), 1)
        self.assertEqual(polynomials[0], parse_polynomial("z^3 + x^6 + y^6"))

    def test_shared_variable_list(self):
        variables = ('x', 'y', 'z', 't', 'u')
        F, G = data_service.read_polynomial_file(data_file("g4_pair.poly"), variables)
        self.assertEqual(F.variables, variables)
        self.assertEqual(G, parse_polynomial("u*x + y^3 + z^3 + t^3", variables))

    def test_default_variables_cover_every_line(self):
        F, G = data_service.read_polynomial_file(data_file("g4_pair.poly"))
        self.assertEqual(F.variables, ('t', 'u', 'x', 'y', 'z'))
        self.assertEqual(G.variables, F.variables)

    def test_parse_error_carries_file_line(self):
        with self.assertRaises(ParseError) as cm:
            data_service.read_polynomial_file(data_file("bad_syntax.poly"))
        self.assertEqual(cm.exception.line, 2)
        self.assertEqual(cm.exception.column, 7)

    def test_missing_file(self):
        with self.assertRaises(LogDPError):
            data_service.read_polynomial_file(data_file("missing_nonexistent.poly"))


class TestPointsAndDiagrams(unittest.TestCase):

    def test_read_points_file(self):
        points = data_service.read_points_file(data_file("points.json"))
        self.assertEqual(points, [(0, 0, 1), (1, Fraction(1, 2), 0)])

    def test_parse_point(self):
        self.assertEqual(data_service.parse_point("0:0:1"), (0, 0, 1))
        self.assertEqual(data_service.parse_point("(1,-1/2,0)"), (1, Fraction(-1, 2), 0))
        with self.assertRaises(ParseError):
            data_service.parse_point("1:x")

    def test_parse_multiplicities(self):
        self.assertEqual(data_service.parse_multiplicities("0=1, 1=2,w=3"), OrderedDict([(0, 1), (1, 2), ('w', 3)]))
        with self.assertRaises(ParseError):
            data_service.parse_multiplicities("0=1,1")

    def test_diagram_with_multiplicities(self):
        d = data_service.read_diagram_file(data_file("triangle.json"))
        self.assertEqual(len(d), 3)
        self.assertEqual(data_service.read_multiplicities(data_file("triangle.json")),
                         OrderedDict([(0, 1), (1, 1), (2, 1)]))

    def test_diagram_without_multiplicities(self):
        d = data_service.read_diagram_file(data_file("chain_a3.json"))
        self.assertEqual(d.vertices, ['u', 'v', 'w'])
        self.assertIsNone(data_service.read_multiplicities(data_file("chain_a3.json")))

    def test_invalid_json(self):
        with self.assertRaises(ParseError) as cm:
            data_service.read_diagram_file(data_file("bad_syntax.poly"))
        self.assertEqual(cm.exception.line, 1)


class TestFixtures(unittest.TestCase):

    def test_packaged_fixtures(self):
        paths = data_service.list_fixture_files()
        names = [os.path.basename(path) for path in paths]
        self.assertEqual(len(names), 20)
        self.assertEqual(names, sorted(names))
        self.assertIn("ex5_quintic_configs.json", names)

    def test_read_fixture(self):
        path = [p for p in data_service.list_fixture_files() if p.endswith("ex5_quintic_configs.json")][0]
        fixture = data_service.read_fixture(path)
        self.assertEqual(fixture.mode, data_service.EXACT)
        self.assertEqual(fixture.generator, "A_4")
        self.assertEqual(len(fixture.entries), 7)
        self.assertIn(ConfigName.parse("A_2 A_1"), fixture.entries)

    def test_read_fixture_from_temporary_directory(self):
        document = {"name": "union", "generator": "A_2 | D_4", "entries": ["D_4", {"config": "A_2", "source": "$A_2$"}]}
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "union.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(document, f)
            fixture = data_service.read_fixture(path)
        self.assertEqual(fixture.generator, "A_2 | D_4")
        self.assertEqual(fixture.entries, [ConfigName.parse("D_4"), ConfigName.parse("A_2")])
        self.assertEqual(fixture.sources, [None, "$A_2$"])

    def test_malformed_fixtures(self):
        with self.assertRaises(FixtureError):
            data_service.read_fixture(data_file("missing_nonexistent.json"))
        with self.assertRaises(FixtureError):
            data_service.Fixture.from_dict({"name": "no entries"})
        with self.assertRaises(FixtureError):
            data_service.Fixture("bad mode", "A_1", [], mode="approximate")


class TestJsonRendering(unittest.TestCase):

    def test_plain_values(self):
        document = OrderedDict([("a", Fraction(1, 2)), ("b", 3), ("c", math.inf), ("d", ConfigName.parse("A_1 A_1"))])
        self.assertEqual(data_service.to_json_text(document),
                         '{\n  "a": "1/2",\n  "b": 3,\n  "c": "inf",\n  "d": "2A_1"\n}')

    def test_polynomials_and_nesting(self):
        document = {"p": parse_polynomial("x^2 - 1/2"), "list": [Fraction(3), (1, 2)]}
        loaded = json.loads(data_service.to_json_text(document))
        self.assertEqual(loaded["p"], "x^2 - 1/2")
        self.assertEqual(loaded["list"], ["3", [1, 2]])

    def test_write_json_ends_with_newline(self):
        class Stream(object):
            def __init__(self):
                self.parts = []

            def write(self, text):
                self.parts.append(text)

        stream = Stream()
        data_service.write_json({"empty": ConfigName()}, stream)
        self.assertEqual("".join(stream.parts), '{\n  "empty": "∅"\n}\n')


if __name__ == '__main__':
    unittest.main()
