# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import collections
import unittest
from fractions import Fraction

import numpy as np

import prokit.error as err
from prokit.lib import checks
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import paths
from prokit.lib import represent as rep
from prokit.lib import semiring as sr

MERGE = cir.ChipDecl("m", 1, 2)
SPLIT = cir.ChipDecl("s", 2, 1)
SIGNATURE = cir.Signature([MERGE, SPLIT])
BUBBLE = cir.vcomp(cir.Chip(MERGE), cir.Chip(SPLIT))


class TestLabelings(unittest.TestCase):

    def test_count(self):
        # The output, both inputs of m and the input of s.
        self.assertEqual(paths.count_labelings(BUBBLE, 2), 16)
        self.assertEqual(len(list(paths.enumerate_labelings(BUBBLE, 2))), 16)
        self.assertEqual(paths.count_labelings(cir.EMPTY, 3), 1)

    def test_boundary_constraints(self):
        found = list(paths.enumerate_labelings(BUBBLE, 3, [2], [1]))
        self.assertEqual(len(found), 9)
        for q in found:
            self.assertEqual(q.out_colors, (2, ))
            self.assertEqual(q.in_colors, (1, ))

    def test_straight_wire_with_two_colors(self):
        self.assertEqual(list(paths.enumerate_labelings(cir.WIRE, 2, [1], [2])), [])
        self.assertEqual(len(list(paths.enumerate_labelings(cir.WIRE, 2, [2], [2]))),
                         1)

    def test_needs_pluggable_chips(self):
        bot = cir.ChipDecl("bot", 1, 0)
        with self.assertRaises(err.SemanticError):
            list(paths.enumerate_labelings(cir.Chip(bot), 2))

    def test_color_range(self):
        with self.assertRaises(err.ShapeError):
            list(paths.enumerate_labelings(BUBBLE, 2, [3], [1]))


class TestComposition(unittest.TestCase):

    def test_from_port_colors(self):
        q = paths.LabeledCircuit.from_port_colors(BUBBLE, 2, [1], [2],
                                                  [((1, ), (2, 1)), ((2, 1), (2, ))])
        self.assertEqual(q.chip_colors(0), ((1, ), (2, 1)))
        self.assertEqual(q.chip_colors(1), ((2, 1), (2, )))
        with self.assertRaises(err.SemanticError):
            paths.LabeledCircuit.from_port_colors(
                BUBBLE, 2, [1], [2], [((1, ), (2, 1)), ((1, 1), (2, ))])

    def test_compose_h(self):
        left = next(paths.enumerate_labelings(cir.Chip(SPLIT), 2, [1, 2], [2]))
        right = next(paths.enumerate_labelings(cir.WIRE, 2, [1], [1]))
        joined = paths.compose_h(left, right)
        self.assertEqual(joined.out_colors, (1, 2, 1))
        self.assertEqual(joined.in_colors, (2, 1))
        self.assertEqual(paths.unlabel(joined),
                         cir.hcomp(cir.Chip(SPLIT), cir.WIRE))

    def test_compose_v_matches_enumeration(self):
        top = cir.Chip(MERGE)
        bottom = cir.Chip(SPLIT)
        below = collections.defaultdict(list)
        for q in paths.enumerate_labelings(bottom, 2):
            below[q.out_colors].append(q)
        composed = {
            paths.compose_v(q_top, q_bottom)
            for q_top in paths.enumerate_labelings(top, 2)
            for q_bottom in below[q_top.in_colors]
        }
        self.assertEqual(composed, set(paths.enumerate_labelings(BUBBLE, 2)))

    def test_compose_v_needs_matching_cut(self):
        top = next(paths.enumerate_labelings(cir.Chip(MERGE), 2, [1], [1, 1]))
        bottom = next(paths.enumerate_labelings(cir.Chip(SPLIT), 2, [2, 2], [1]))
        with self.assertRaises(err.SemanticError):
            paths.compose_v(top, bottom)

    def test_json(self):
        q = next(paths.enumerate_labelings(BUBBLE, 2, [2], [1]))
        data = q.to_json()
        self.assertEqual(data["colors"]["out:0"], 2)
        self.assertEqual(paths.LabeledCircuit.from_json(data, SIGNATURE), q)


class TestPathSums(unittest.TestCase):

    def test_worked_example(self):
        x, x2, y, y2 = Fraction(2), Fraction(3), Fraction(5), Fraction(7)
        term, mu = checks.worked_path_example(x, x2, y, y2)
        expected = x2 * y2 * y2 + x * y * y2
        self.assertEqual(expected, 217)
        self.assertEqual(paths.path_sum_oracle(term, mu, [1, 3, 1, 3], [2, 3]),
                         expected)
        self.assertEqual(mu.evaluate(term).entry([1, 3, 1, 3], [2, 3]), expected)

    def test_table_matches_evaluation(self):
        rng = np.random.default_rng(2)
        mu = rep.random_representation(SIGNATURE, 2, sr.NATURAL, rng)
        for _ in range(10):
            term = cir.random_term(SIGNATURE, rng, 3)
            table = paths.path_sum_table(term, mu)
            expected = {(i, j): v for i, j, v in mu.evaluate(term).decompose()}
            self.assertEqual(table, expected)

    def test_table_matches_evaluation_on_small_circuits(self):
        mu = rep.random_representation(checks.SMALL_SIGNATURE, 1, sr.NATURAL,
                                       np.random.default_rng(5))
        circuits = checks.small_circuits(5)
        self.assertGreater(len(circuits), len(checks.small_circuits(4)))
        for term in circuits:
            expected = {(i, j): v for i, j, v in mu.evaluate(term).decompose()}
            self.assertEqual(paths.path_sum_table(term, mu), expected)

    def test_weight(self):
        mu = rep.Representation(
            2, sr.NATURAL, SIGNATURE, {
                "m": hm.from_entries(sr.NATURAL, 2, 1, 2, [1, 2, 3, 4, 5, 6, 7, 8]),
                "s": hm.from_entries(sr.NATURAL, 2, 2, 1, [1, 2, 3, 4, 5, 6, 7, 8]),
            })
        q = paths.LabeledCircuit.from_port_colors(BUBBLE, 2, [1], [2],
                                                  [((1, ), (2, 1)), ((2, 1), (2, ))])
        # m^1_{21} = 3, s^{21}_2 = 6
        self.assertEqual(paths.weight(q, mu), 18)


if __name__ == "__main__":
    unittest.main()
