# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import unittest
from fractions import Fraction

import numpy as np

import prokit.error as err
from prokit.lib import hypermat as hm
from prokit.lib import semiring as sr


def matrix(rows, semiring=sr.NATURAL):
    return hm.from_matrix(semiring, 2, 1, 1, rows)


class TestIndices(unittest.TestCase):

    def test_rank_and_unrank(self):
        self.assertEqual(hm.rank_index([2, 1], 3), 3)
        self.assertEqual(hm.unrank_index(3, 3, 2), (2, 1))
        self.assertEqual(hm.rank_index([], 3), 0)
        with self.assertRaises(err.ShapeError):
            hm.unrank_index(9, 3, 2)

    def test_mod_div(self):
        self.assertEqual(hm.mod_div([5, 2], 2), ((1, 2), (3, 1)))

    def test_check_multi_index(self):
        self.assertEqual(hm.check_multi_index([1, 2], 2, 2), (1, 2))
        with self.assertRaises(err.ShapeError):
            hm.check_multi_index([1, 3], 2, 2)
        with self.assertRaises(err.ShapeError):
            hm.check_multi_index([1], 2, 2)


class TestCompositions(unittest.TestCase):

    def test_vcomp_is_matrix_product(self):
        product = matrix([[1, 2], [3, 4]]).vcomp(matrix([[5, 6], [7, 8]]))
        self.assertEqual(product.to_matrix(), [[19, 22], [43, 50]])

    def test_hcomp_entries(self):
        a = matrix([[1, 2], [3, 4]])
        b = matrix([[5, 6], [7, 8]])
        juxtaposed = a.hcomp(b)
        self.assertEqual(juxtaposed.arity, (2, 2))
        self.assertEqual(juxtaposed.entry([1, 2], [2, 1]), 2 * 7)
        self.assertEqual(juxtaposed.entry([2, 2], [2, 2]), 4 * 8)

    def test_vcomp_rank_mismatch(self):
        a = hm.zeros(sr.NATURAL, 2, 1, 2)
        with self.assertRaises(err.ShapeError):
            a.vcomp(matrix([[1, 0], [0, 1]]))

    def test_mixed_semirings(self):
        with self.assertRaises(err.ShapeError):
            matrix([[1, 0], [0, 1]]).hcomp(
                matrix([[1, 0], [0, 1]], sr.RATIONAL))

    def test_boolean_composition(self):
        a = matrix([[True, False], [True, True]], sr.BOOLEAN)
        b = matrix([[False, True], [True, False]], sr.BOOLEAN)
        self.assertEqual(a.vcomp(b).to_matrix(), [[False, True], [True, True]])

    def test_units(self):
        a = hm.random_hypermatrix(sr.RATIONAL, 2, 2, 1,
                                  np.random.default_rng(1))
        self.assertEqual(hm.identity(sr.RATIONAL, 2, 2).vcomp(a), a)
        self.assertEqual(a.vcomp(hm.identity(sr.RATIONAL, 2, 1)), a)
        self.assertEqual(hm.scalar(sr.RATIONAL, 2, 1).hcomp(a), a)

    def test_sum_and_scale(self):
        a = matrix([[1, 2], [3, 4]], sr.RATIONAL)
        self.assertEqual((a + a).to_matrix(), a.scale(2).to_matrix())
        self.assertEqual(a.scale(Fraction(1, 2)).entry([1], [1]), Fraction(1, 2))


class TestKronecker(unittest.TestCase):

    def test_basis_elements(self):
        a = hm.basis_e(sr.NATURAL, 2, 1, 1, [1], [2])
        b = hm.basis_e(sr.NATURAL, 3, 1, 1, [3], [1])
        # digit of a plus (digit of b - 1) * 2
        self.assertEqual(a.kronecker(b), hm.basis_e(sr.NATURAL, 6, 1, 1, [5], [2]))

    def test_scalars_multiply(self):
        a = hm.scalar(sr.NATURAL, 2, 3)
        b = hm.scalar(sr.NATURAL, 3, 5)
        product = a.kronecker(b)
        self.assertEqual(product.base_dim, 6)
        self.assertEqual(product.entry([], []), 15)

    def test_rank_mismatch(self):
        with self.assertRaises(err.ShapeError):
            hm.identity(sr.NATURAL, 2, 1).kronecker(hm.identity(sr.NATURAL, 2, 2))


class TestQuasiDirectSum(unittest.TestCase):

    def test_identities_sum_to_identity(self):
        unit = hm.identity(sr.NATURAL, 1, 1)
        self.assertEqual(unit.quasi_direct_sum(hm.identity(sr.NATURAL, 2, 1)),
                         hm.identity(sr.NATURAL, 3, 1))

    def test_blocks(self):
        a = hm.from_entries(sr.NATURAL, 1, 1, 1, [7])
        b = matrix([[1, 2], [3, 4]])
        total = a.quasi_direct_sum(b)
        self.assertEqual(total.to_matrix(), [[7, 0, 0], [0, 1, 2], [0, 3, 4]])

    def test_scalars_keep_the_first_summand(self):
        total = hm.scalar(sr.NATURAL, 1, 2).quasi_direct_sum(
            hm.scalar(sr.NATURAL, 2, 5))
        self.assertEqual(total.base_dim, 3)
        self.assertEqual(total.entry([], []), 2)

    def test_not_compatible_with_juxtaposition(self):
        unit = hm.identity(sr.NATURAL, 1, 1)
        summed = unit.quasi_direct_sum(unit)
        self.assertEqual(summed.hcomp(summed).entry([1, 2], [1, 2]), 1)
        self.assertEqual(
            unit.hcomp(unit).quasi_direct_sum(unit.hcomp(unit)).entry([1, 2],
                                                                      [1, 2]),
            0)

class TestModuleLaws(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(7)

    def random(self, out_rank, in_rank, base_dim=2):
        return hm.random_hypermatrix(sr.RATIONAL, base_dim, out_rank, in_rank,
                                     self.rng)

    def test_vcomp_distributes_on_both_sides(self):
        a, a2 = self.random(1, 2), self.random(1, 2)
        b, b2 = self.random(2, 1), self.random(2, 1)
        self.assertEqual((a + a2).vcomp(b), a.vcomp(b) + a2.vcomp(b))
        self.assertEqual(a.vcomp(b + b2), a.vcomp(b) + a.vcomp(b2))

    def test_hcomp_distributes_on_both_sides(self):
        a, a2 = self.random(1, 1), self.random(1, 1)
        b, b2 = self.random(0, 1), self.random(0, 1)
        self.assertEqual((a + a2).hcomp(b), a.hcomp(b) + a2.hcomp(b))
        self.assertEqual(a.hcomp(b + b2), a.hcomp(b) + a.hcomp(b2))

    def test_scalars_pass_through_compositions(self):
        a, b, c = self.random(1, 2), self.random(2, 1), self.random(1, 0)
        r = Fraction(3, 7)
        self.assertEqual(a.vcomp(b).scale(r), a.scale(r).vcomp(b))
        self.assertEqual(a.vcomp(b).scale(r), a.vcomp(b.scale(r)))
        self.assertEqual(a.hcomp(c).scale(r), a.scale(r).hcomp(c))
        self.assertEqual(a.hcomp(c).scale(r), a.hcomp(c.scale(r)))

    def test_kronecker_is_bilinear(self):
        a, a2 = self.random(1, 1, 2), self.random(1, 1, 2)
        b, b2 = self.random(1, 1, 3), self.random(1, 1, 3)
        r = Fraction(-2, 5)
        self.assertEqual((a + a2).kronecker(b), a.kronecker(b) + a2.kronecker(b))
        self.assertEqual(a.kronecker(b + b2), a.kronecker(b) + a.kronecker(b2))
        self.assertEqual(a.kronecker(b).scale(r), a.scale(r).kronecker(b))
        self.assertEqual(a.kronecker(b).scale(r), a.kronecker(b.scale(r)))

    def test_quasi_sum_adds_blockwise(self):
        a, a2 = self.random(1, 1, 1), self.random(1, 1, 1)
        b, b2 = self.random(1, 1, 2), self.random(1, 1, 2)
        r = Fraction(5, 3)
        self.assertEqual((a + a2).quasi_direct_sum(b + b2),
                         a.quasi_direct_sum(b) + a2.quasi_direct_sum(b2))
        self.assertEqual(a.quasi_direct_sum(b).scale(r),
                         a.scale(r).quasi_direct_sum(b.scale(r)))

    def test_quasi_sum_counts_each_block_once(self):
        a = hm.from_entries(sr.NATURAL, 1, 1, 1, [1])
        b = hm.from_entries(sr.NATURAL, 1, 1, 1, [2])
        doubled = (a.quasi_direct_sum(b) + a.quasi_direct_sum(b) +
                   a.quasi_direct_sum(b) + a.quasi_direct_sum(b))
        self.assertEqual((a + a).quasi_direct_sum(b + b).to_matrix(),
                         [[2, 0], [0, 4]])
        self.assertEqual(doubled.to_matrix(), [[4, 0], [0, 8]])

    def test_scalars_commute_in_every_semiring(self):
        for name in sr.names():
            semiring = sr.get(name)
            with self.subTest(semiring=name):
                for base_dim in (1, 2, 3):
                    a = hm.random_hypermatrix(semiring, base_dim, 0, 0, self.rng)
                    b = hm.random_hypermatrix(semiring, base_dim, 0, 0, self.rng)
                    self.assertEqual(a.vcomp(b), b.vcomp(a))
                    self.assertEqual(a.vcomp(b), a.hcomp(b))
                    self.assertEqual(a.hcomp(b), b.hcomp(a))



class TestBasis(unittest.TestCase):

    def test_decompose_and_compose(self):
        a = hm.random_hypermatrix(sr.NATURAL, 2, 1, 2, np.random.default_rng(3))
        self.assertEqual(hm.compose(sr.NATURAL, 2, 1, 2, a.decompose()), a)

    def test_decompose_skips_zeros(self):
        a = hm.basis_e(sr.RATIONAL, 3, 1, 1, [2], [3]).scale(Fraction(1, 3))
        self.assertEqual(a.decompose(), [((2, ), (3, ), Fraction(1, 3))])

    def test_trace_and_transpose(self):
        self.assertEqual(hm.identity(sr.NATURAL, 2, 2).trace(), 4)
        a = hm.basis_e(sr.NATURAL, 2, 2, 1, [1, 2], [2])
        self.assertEqual(a.transpose(), hm.basis_e(sr.NATURAL, 2, 1, 2, [2], [1, 2]))
        with self.assertRaises(err.ShapeError):
            a.trace()


class TestJson(unittest.TestCase):

    def test_dense_and_sparse_forms_agree(self):
        a = matrix([[0, 2], [0, 5]])
        self.assertEqual(a.to_json(), {
            "N": 2,
            "out_rank": 1,
            "in_rank": 1,
            "entries": ["0", "2", "0", "5"]
        })
        sparse = a.to_json(sparse=True)
        self.assertEqual(sparse["sparse"], [{
            "out": [1],
            "in": [2],
            "val": "2"
        }, {
            "out": [2],
            "in": [2],
            "val": "5"
        }])
        self.assertEqual(hm.Hypermatrix.from_json(sparse, sr.NATURAL), a)
        self.assertEqual(hm.Hypermatrix.from_json(a.to_json(), sr.NATURAL), a)

    def test_bad_documents(self):
        with self.assertRaises(err.ParseError):
            hm.Hypermatrix.from_json({"N": 2, "out_rank": 1, "in_rank": 1},
                                     sr.NATURAL)
        with self.assertRaises(err.ShapeError):
            hm.Hypermatrix.from_json(
                {
                    "N": 2,
                    "out_rank": 1,
                    "in_rank": 1,
                    "entries": [1, 2, 3]
                }, sr.NATURAL)

    def test_complex_equality_within_tolerance(self):
        a = hm.from_entries(sr.COMPLEX, 1, 1, 1, [1j])
        b = hm.from_entries(sr.COMPLEX, 1, 1, 1, [1j + 1e-15])
        self.assertEqual(a, b)


if __name__ == "__main__":
    unittest.main()
