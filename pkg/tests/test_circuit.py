# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import unittest

import numpy as np

import prokit.error as err
from prokit.lib import circuit as cir

A = cir.ChipDecl("a", 1, 1)
B = cir.ChipDecl("b", 1, 1)
MERGE = cir.ChipDecl("m", 1, 2)
SPLIT = cir.ChipDecl("s", 2, 1)
SIGNATURE = cir.Signature([A, B, MERGE, SPLIT])


def c(decl):
    return cir.Chip(decl)


class TestSignature(unittest.TestCase):

    def test_lookup(self):
        self.assertEqual(SIGNATURE["m"], MERGE)
        self.assertIn("s", SIGNATURE)
        with self.assertRaises(err.SemanticError):
            _ = SIGNATURE["x"]

    def test_duplicates(self):
        with self.assertRaises(err.SemanticError):
            cir.Signature([A, cir.ChipDecl("a", 2, 2)])

    def test_json(self):
        data = {"chips": [{"name": "m", "out": 1, "in": 2}]}
        signature = cir.Signature.from_json(data)
        self.assertEqual(signature.to_json(), data)
        with self.assertRaises(err.ParseError):
            cir.Signature.from_json({"chips": [{"name": "m", "out": -1, "in": 2}]})

    def test_pluggable(self):
        self.assertTrue(SIGNATURE.pluggable)
        self.assertFalse(cir.Signature([A, cir.ChipDecl("bot", 1, 0)]).pluggable)


class TestTerms(unittest.TestCase):

    def test_units_are_absorbed(self):
        self.assertIs(cir.hcomp(cir.EMPTY, cir.WIRE), cir.WIRE)
        self.assertEqual(cir.vcomp(cir.WIRE, c(A), cir.WIRE), c(A))
        self.assertIs(cir.wires(0), cir.EMPTY)
        self.assertEqual(cir.wires(3).arity, (3, 3))

    def test_arities(self):
        term = cir.vcomp(c(MERGE), c(SPLIT))
        self.assertEqual(term.arity, (1, 1))
        self.assertEqual(cir.hcomp(c(SPLIT), cir.WIRE).arity, (3, 2))

    def test_stacking_mismatch(self):
        with self.assertRaises(err.ShapeError):
            cir.vcomp(c(MERGE), cir.WIRE)
        with self.assertRaises(err.ShapeError):
            cir.VComp(c(A), c(SPLIT))

    def test_chips(self):
        term = cir.vcomp(c(MERGE), cir.hcomp(c(A), c(B)), c(SPLIT))
        self.assertEqual(cir.chips_of(term), [MERGE, A, B, SPLIT])
        self.assertEqual(cir.size(term), 4)
        self.assertEqual(cir.signature_of(term).names(), ["m", "a", "b", "s"])


class TestJson(unittest.TestCase):

    def test_parse_and_write(self):
        data = {"v": [{"chip": "m"}, {"h": [{"chip": "a"}, "wire"]}, {"chip": "s"}]}
        term = cir.parse_term(data, SIGNATURE)
        self.assertEqual(term.arity, (1, 1))
        self.assertEqual(cir.term_to_json(term), data)

    def test_bad_terms(self):
        with self.assertRaises(err.ParseError):
            cir.parse_term("bogus", SIGNATURE)
        with self.assertRaises(err.ParseError):
            cir.parse_term({"v": []}, SIGNATURE)
        with self.assertRaises(err.SemanticError):
            cir.parse_term({"chip": "x"}, SIGNATURE)
        with self.assertRaises(err.ShapeError):
            cir.parse_term({"v": [{"chip": "m"}, "wire"]}, SIGNATURE)


class TestCanonicalKey(unittest.TestCase):

    def test_interchange(self):
        lhs = cir.hcomp(cir.vcomp(c(A), c(B)), cir.vcomp(c(B), c(A)))
        rhs = cir.vcomp(cir.hcomp(c(A), c(B)), cir.hcomp(c(B), c(A)))
        self.assertEqual(cir.term_key(lhs), cir.term_key(rhs))

    def test_order_matters(self):
        self.assertNotEqual(cir.term_key(cir.hcomp(c(A), c(B))),
                            cir.term_key(cir.hcomp(c(B), c(A))))
        self.assertNotEqual(cir.term_key(cir.vcomp(c(A), c(B))),
                            cir.term_key(cir.vcomp(c(B), c(A))))

    def test_rewriting_keeps_the_circuit(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            term = cir.random_term(SIGNATURE, rng, 4)
            rewritten = cir.rewrite(term, rng, steps=15)
            self.assertEqual(rewritten.arity, term.arity)
            self.assertEqual(cir.size(rewritten), 4)
            self.assertEqual(cir.term_key(rewritten), cir.term_key(term))

    def test_floating_components(self):
        bot = cir.ChipDecl("bot", 1, 0)
        top = cir.ChipDecl("top", 0, 1)
        closed = cir.vcomp(c(top), c(bot))
        self.assertEqual(cir.term_key(cir.hcomp(closed, cir.WIRE)),
                         cir.term_key(cir.hcomp(cir.WIRE, closed)))


class TestComponents(unittest.TestCase):

    def test_decomposition(self):
        apart = cir.vcomp(cir.hcomp(c(MERGE), c(MERGE)),
                          cir.hcomp(c(SPLIT), c(SPLIT)))
        linked = cir.vcomp(cir.hcomp(cir.WIRE, c(MERGE), cir.WIRE),
                           cir.hcomp(c(SPLIT), c(SPLIT)))
        self.assertEqual(len(cir.connected_components(apart)), 2)
        self.assertTrue(cir.is_connected(linked))
        self.assertEqual(len(cir.connected_components(cir.wires(3))), 3)
        self.assertEqual(cir.connected_components(cir.EMPTY), [])

    def test_agrees_with_port_graph(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            term = cir.random_term(SIGNATURE, rng, 3)
            self.assertEqual(len(cir.connected_components(term)),
                             cir.to_port_graph(term).component_count())


class TestEnumeration(unittest.TestCase):

    def test_merge_split_circuits(self):
        signature = cir.Signature([MERGE, SPLIT])
        found = list(cir.enumerate_circuits(signature, 2, 1, 1))
        self.assertEqual(len(found), 2)
        self.assertEqual(found[0], cir.WIRE)
        self.assertEqual(cir.term_key(found[1]),
                         cir.term_key(cir.vcomp(c(MERGE), c(SPLIT))))

    def test_no_duplicates(self):
        signature = cir.Signature([MERGE, SPLIT])
        found = list(cir.enumerate_circuits(signature, 2, 2, 2))
        self.assertEqual(len(found), 6)
        self.assertEqual(len({cir.term_key(t) for t in found}), 6)
        self.assertTrue(all(t.arity == (2, 2) for t in found))

    def test_unary_chips(self):
        found = list(cir.enumerate_circuits(cir.Signature([A, B]), 2, 1, 1))
        # wire, a, b, aa, ab, ba, bb
        self.assertEqual(len(found), 7)


if __name__ == "__main__":
    unittest.main()
