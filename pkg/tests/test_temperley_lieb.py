# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import unittest

import prokit.error as err
from prokit.lib import circuit as cir
from prokit.lib import semiring as sr
from prokit.lib import temperley_lieb as tl


class TestDiagrams(unittest.TestCase):

    def test_crossing_strands(self):
        with self.assertRaises(err.SemanticError):
            tl.TlDiagram(2, 2, frozenset({(0, 3), (1, 2)}))

    def test_not_a_matching(self):
        with self.assertRaises(err.ShapeError):
            tl.TlDiagram(1, 1, frozenset({(0, 0)}))
        with self.assertRaises(err.ShapeError):
            tl.u_generator(3, 3)

    def test_relations(self):
        u1 = tl.u_generator(3, 1)
        looped = tl.word_diagram(3, [1, 1])
        self.assertEqual(looped.matching, u1.matching)
        self.assertEqual(looped.loops, 1)
        self.assertEqual(tl.word_diagram(3, [1, 2, 1]), u1)
        self.assertEqual(tl.word_diagram(4, [1, 3]), tl.word_diagram(4, [3, 1]))
        self.assertNotEqual(tl.word_diagram(3, [1, 2]), tl.word_diagram(3, [2, 1]))

    def test_tensor(self):
        self.assertEqual(tl.tl_tensor(tl.identity_diagram(1), tl.u_generator(2, 1)),
                         tl.u_generator(3, 2))

    def test_stacking_mismatch(self):
        with self.assertRaises(err.ShapeError):
            tl.tl_compose(tl.identity_diagram(2), tl.identity_diagram(3))

    def test_json(self):
        self.assertEqual(tl.identity_diagram(1).to_json(), {
            "n_bottom": 1,
            "n_top": 1,
            "pairs": [[0, 1]],
            "loops": 0
        })


class TestCircuits(unittest.TestCase):

    def test_reduction_matches_words(self):
        for word in ([], [1], [2, 1], [1, 3, 2], [2, 2, 1]):
            self.assertEqual(tl.reduce_term(tl.word_term(4, word)),
                             tl.word_diagram(4, word), word)

    def test_loop_and_snakes(self):
        self.assertEqual(tl.reduce_term(tl.loop_term()),
                         tl.TlDiagram(0, 0, frozenset(), 1))
        for snake in tl.snake_terms():
            self.assertEqual(tl.reduce_term(snake), tl.identity_diagram(1))

    def test_diagram_term(self):
        diagram = tl.word_diagram(4, [1, 3, 2, 2])
        self.assertEqual(tl.reduce_term(tl.diagram_term(diagram)), diagram)

    def test_foreign_chips(self):
        with self.assertRaises(err.SemanticError):
            tl.reduce_term(cir.Chip(cir.ChipDecl("x", 1, 1)))


class TestStandardRepresentation(unittest.TestCase):

    def setUp(self):
        self.mu = tl.standard_rep()
        self.d = sr.RationalFunction.variable()

    def test_loop_value(self):
        self.assertEqual(tl.check_relations(self.mu), self.d)

    def test_traces(self):
        self.assertEqual(self.mu.evaluate(cir.wires(2)).trace(), 4)
        self.assertEqual(self.mu.evaluate(tl.u_term(3, 1)).trace(), 2 * self.d)

    def test_cycle_close(self):
        term = cir.hcomp(tl.word_term(4, [1, 2, 3]), cir.wires(2))
        self.assertEqual(tl.cycle_close(term), (1, 2))
        self.assertEqual(tl.cycle_close(cir.wires(3)), (0, 3))
        with self.assertRaises(err.ShapeError):
            tl.cycle_close(cir.Chip(tl.CUP))

    def test_winding_strand_breaks_the_trace_formula(self):
        lhs, rhs, equal = tl.conjecture_check(tl.word_term(3, [1, 2]), self.mu)
        self.assertEqual(lhs, 2)
        self.assertEqual(rhs, self.d)
        self.assertFalse(equal)

    def test_experiment(self):
        report = tl.conjecture_experiment(2, 3, self.mu)
        self.assertEqual(report["terms"], 10)
        self.assertEqual(report["agreeing"], 8)
        self.assertEqual(sorted(c["word"] for c in report["counterexamples"]),
                         [[1, 2], [2, 1]])
        self.assertTrue(all(row["equal"] for row in report["rows"] if row["n"] == 2))

    def test_u_words(self):
        self.assertEqual(len(list(tl.u_words(3, 2))), 7)


if __name__ == "__main__":
    unittest.main()
