# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import itertools
import math
import unittest

import prokit.error as err
from prokit.lib import hypermat as hm
from prokit.lib import quantum_gates as qg
from prokit.lib import semiring as sr

BIT_PAIRS = list(itertools.product((0, 1), repeat=2))


class TestGates(unittest.TestCase):

    def test_cnot_formula(self):
        cnot = qg.cnot_matrix()
        for out_bits in BIT_PAIRS:
            for in_bits in BIT_PAIRS:
                value = cnot.entry([b + 1 for b in out_bits], [b + 1 for b in in_bits])
                self.assertAlmostEqual(value, qg.cnot_formula(out_bits, in_bits))

    def test_contraction_matches_evaluation(self):
        self.assertEqual(qg.cnot_by_contraction(), qg.cnot_matrix())

    def test_unitarity(self):
        for gate in (qg.hadamard_gate(), qg.cv_gate(), qg.cnot_matrix()):
            self.assertLess(qg.unitarity_residual(gate), 1e-12)
        with self.assertRaises(err.ShapeError):
            qg.unitarity_residual(hm.zeros(sr.COMPLEX, 2, 1, 2))

    def test_cv_squares_to_controlled_z(self):
        v = qg.cv_gate()
        self.assertEqual(v.vcomp(v).to_matrix(),
                         [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])


class TestStates(unittest.TestCase):

    def test_basis_state(self):
        state = qg.basis_state([0, 1])
        self.assertEqual(state.qubits, 2)
        self.assertEqual(state.amplitude([0, 1]), 1)
        self.assertEqual(state.amplitude([1, 0]), 0)
        self.assertEqual(state.to_json(), {"01": [1.0, 0.0]})
        with self.assertRaises(err.ShapeError):
            qg.basis_state([2])

    def test_only_complex_rows(self):
        with self.assertRaises(err.ShapeError):
            qg.QubitState(hm.basis_e(sr.NATURAL, 2, 0, 1, [], [1]))
        with self.assertRaises(err.ShapeError):
            qg.QubitState(hm.identity(sr.COMPLEX, 2, 1))

    def test_cnot_entangles(self):
        spread = qg.basis_state([0, 0]) + qg.basis_state([0, 1])
        bell = qg.apply_state(spread.scale(1 / math.sqrt(2)), qg.cnot_matrix())
        self.assertAlmostEqual(bell.amplitude([0, 0]), 1 / math.sqrt(2))
        self.assertAlmostEqual(bell.amplitude([1, 1]), 1 / math.sqrt(2))
        self.assertAlmostEqual(bell.amplitude([0, 1]), 0)
        self.assertFalse(qg.is_entangled(spread))
        self.assertTrue(qg.is_entangled(bell))

    def test_gate_on_second_qubit(self):
        gate = qg.on_second_qubit(qg.hadamard_gate())
        self.assertEqual(gate.arity, (2, 2))
        spread = qg.apply_state(qg.basis_state([1, 0]), gate)
        self.assertAlmostEqual(spread.amplitude([1, 0]), 1 / math.sqrt(2))
        self.assertAlmostEqual(spread.amplitude([1, 1]), 1 / math.sqrt(2))
        self.assertAlmostEqual(spread.amplitude([0, 0]), 0)

    def test_gate_arity(self):
        with self.assertRaises(err.ShapeError):
            qg.apply_state(qg.basis_state([0]), qg.cnot_matrix())


class TestDemo(unittest.TestCase):

    def test_report(self):
        report = qg.bell_state_demo()
        self.assertLess(report["formula_error"], 1e-12)
        self.assertEqual(set(report["unitarity_residual"]), {"H", "V", "CNOT"})
        self.assertEqual(set(report["bell"]["after"]), {"00", "11"})
        self.assertFalse(report["bell"]["entangled_before"])
        self.assertTrue(report["bell"]["entangled_after"])


if __name__ == "__main__":
    unittest.main()
