# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import unittest
from fractions import Fraction

import numpy as np

import prokit.config as conf
import prokit.error as err
from prokit.lib import semiring as sr


class TestBoolean(unittest.TestCase):

    def test_operations(self):
        self.assertTrue(sr.BOOLEAN.add(True, False))
        self.assertFalse(sr.BOOLEAN.mul(True, False))
        self.assertTrue(sr.BOOLEAN.from_int(2))
        self.assertFalse(sr.BOOLEAN.from_int(0))

    def test_coerce_rejects_other_integers(self):
        self.assertTrue(sr.BOOLEAN.coerce(1))
        with self.assertRaises(err.ParseError):
            sr.BOOLEAN.coerce(2)


class TestNatural(unittest.TestCase):

    def test_folds(self):
        self.assertEqual(sr.NATURAL.sum([1, 2, 3]), 6)
        self.assertEqual(sr.NATURAL.product([2, 3]), 6)
        self.assertEqual(sr.NATURAL.product([]), 1)

    def test_decode(self):
        self.assertEqual(sr.NATURAL.decode("12"), 12)
        self.assertEqual(sr.NATURAL.decode(np.int64(3)), 3)
        with self.assertRaises(err.ParseError):
            sr.NATURAL.decode(-1)
        with self.assertRaises(err.ParseError):
            sr.NATURAL.decode("twelve")


class TestRational(unittest.TestCase):

    def test_encoding(self):
        value = sr.RATIONAL.decode("3/6")
        self.assertEqual(value, Fraction(1, 2))
        self.assertEqual(sr.RATIONAL.encode(value), "1/2")
        self.assertEqual(sr.RATIONAL.decode(4), Fraction(4))

    def test_decode_rejects_garbage(self):
        with self.assertRaises(err.ParseError):
            sr.RATIONAL.decode("1/0")
        with self.assertRaises(err.ParseError):
            sr.RATIONAL.decode("x")

    def test_random_elements_are_reproducible(self):
        a = [sr.RATIONAL.random_element(np.random.default_rng(7)) for _ in range(3)]
        b = [sr.RATIONAL.random_element(np.random.default_rng(7)) for _ in range(3)]
        self.assertEqual(a, b)


class TestComplex(unittest.TestCase):

    def test_equality_uses_tolerance(self):
        self.assertTrue(sr.COMPLEX.eq(1, 1 + 1e-14))
        self.assertFalse(sr.COMPLEX.eq(1, 1.001))

    def test_tolerance_is_read_at_call_time(self):
        saved = conf.tolerance
        try:
            conf.tolerance = 0.01
            self.assertTrue(sr.COMPLEX.eq(1, 1.001))
        finally:
            conf.tolerance = saved

    def test_encoding(self):
        self.assertEqual(sr.COMPLEX.decode([0, 1]), 1j)
        self.assertEqual(sr.COMPLEX.encode(2 - 1j), [2.0, -1.0])
        with self.assertRaises(err.ParseError):
            sr.COMPLEX.decode([1])


class TestRationalFunction(unittest.TestCase):

    def setUp(self):
        self.d = sr.RationalFunction.variable()

    def test_reduction(self):
        d = self.d
        self.assertEqual((2 - d) / (2 - d), 1)
        self.assertEqual(d * (1 / d), 1)
        self.assertEqual((d * d - 1) / (d - 1), d + 1)

    def test_coefficients_are_normalized(self):
        value = (2 * self.d + 4) / (2 * self.d)
        self.assertEqual(value.numerator, [2, 1])
        self.assertEqual(value.denominator, [0, 1])

    def test_evaluate(self):
        value = (self.d + 1) / (self.d - 2)
        self.assertEqual(value.evaluate(Fraction(3)), 4)
        with self.assertRaises(err.SemanticError):
            value.evaluate(Fraction(2))

    def test_division_by_zero(self):
        with self.assertRaises(err.SemanticError):
            sr.RationalFunction(1, 0)
        with self.assertRaises(err.SemanticError):
            _ = self.d / 0

    def test_json_encoding(self):
        value = (self.d - 2) / (self.d + Fraction(1, 2))
        encoded = sr.RATFUNC.encode(value)
        self.assertEqual(encoded, {"num": ["-2", "1"], "den": ["1/2", "1"]})
        self.assertEqual(sr.RATFUNC.decode(encoded), value)
        self.assertEqual(sr.RATFUNC.decode("3/4"), Fraction(3, 4))

class TestAxioms(unittest.TestCase):

    def test_random_elements_satisfy_the_semiring_laws(self):
        rng = np.random.default_rng(11)
        for name in sr.names():
            s = sr.get(name)
            with self.subTest(semiring=name):
                for _ in range(50):
                    a, b, c = (s.random_element(rng) for _ in range(3))
                    self.assertTrue(
                        s.eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c))))
                    self.assertTrue(s.eq(s.add(a, b), s.add(b, a)))
                    self.assertTrue(
                        s.eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))))
                    self.assertTrue(s.eq(s.mul(a, b), s.mul(b, a)))
                    self.assertTrue(
                        s.eq(s.mul(a, s.add(b, c)),
                             s.add(s.mul(a, b), s.mul(a, c))))
                    self.assertTrue(
                        s.eq(s.mul(s.add(a, b), c),
                             s.add(s.mul(a, c), s.mul(b, c))))
                    self.assertTrue(s.eq(s.add(a, s.zero), a))
                    self.assertTrue(s.eq(s.mul(a, s.one), a))
                    self.assertTrue(s.eq(s.mul(s.one, a), a))
                    self.assertTrue(s.eq(s.mul(a, s.zero), s.zero))
                    self.assertTrue(s.eq(s.mul(s.zero, a), s.zero))



class TestRegistry(unittest.TestCase):

    def test_get(self):
        self.assertEqual(sr.get("boolean"), sr.BOOLEAN)
        self.assertEqual(sr.get(None), sr.get(conf.default_semiring))
        self.assertEqual(
            sr.names(), ["boolean", "natural", "rational", "complex", "ratfunc"])

    def test_unknown_tag(self):
        with self.assertRaises(err.ParseError):
            sr.get("tropical")


if __name__ == "__main__":
    unittest.main()
