"""
Quantum gates as complex hypermatrices over N = 2.

Qubit values are 0 and 1 at this module's boundary and index 1 and 2 in the hypermatrices.
"""

import itertools
import math
import typing

import numpy as np

import prokit.config as conf
import prokit.error as err
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import represent as rep
from prokit.lib import semiring as sr

HADAMARD = cir.ChipDecl("H", 1, 1)
CONTROLLED_V = cir.ChipDecl("V", 2, 2)

Bits = typing.Sequence[int]


def _offsets(bits: Bits) -> tuple[int, ...]:
    for bit in bits:
        if bit not in (0, 1):
            raise err.ShapeError(f"Qubit values are 0 or 1, got {bit}.")
    return tuple(bit + 1 for bit in bits)


def hadamard_gate() -> hm.Hypermatrix:
    """
    H with entries 1/sqrt(2), except -1/sqrt(2) on the value pair (1, 1).
    """
    h = 1 / math.sqrt(2)
    return hm.from_entries(sr.COMPLEX, 2, 1, 1, [h, h, h, -h])


def cv_gate() -> hm.Hypermatrix:
    """
    Controlled V: the identity, except the imaginary unit on the diagonal entry at (1 1, 1 1).
    """
    return hm.from_matrix(sr.COMPLEX, 2, 2, 2,
                          np.diag([1, 1, 1, 1j]).tolist())


def quantum_signature() -> cir.Signature:
    """
    The gates H and V.
    """
    return cir.Signature([HADAMARD, CONTROLLED_V])


def quantum_rep() -> rep.Representation:
    """
    The representation sending the gate chips to their matrices.
    """
    return rep.Representation(2, sr.COMPLEX, quantum_signature(), {
        HADAMARD.name: hadamard_gate(),
        CONTROLLED_V.name: cv_gate(),
    })


def cnot_network() -> cir.CircuitTerm:
    """
    H on the first qubit, V twice, H on the first qubit again.
    """
    outer = cir.hcomp(cir.Chip(HADAMARD), cir.WIRE)
    v = cir.Chip(CONTROLLED_V)
    return cir.vcomp(outer, v, v, outer)


def cnot_matrix() -> hm.Hypermatrix:
    """
    The evaluated network.
    """
    return quantum_rep().evaluate(cnot_network())


def cnot_by_contraction() -> hm.Hypermatrix:
    """
    The network as the explicit sum over its four inner wires.
    """
    h = hadamard_gate()
    v = cv_gate()
    indices = (1, 2)
    values = []
    for a, b, c, d in itertools.product(indices, repeat=4):
        total = 0j
        for x, y, z, u in itertools.product(indices, repeat=4):
            total += (h.entry([a], [x]) * v.entry([x, b], [y, z]) *
                      v.entry([y, z], [u, d]) * h.entry([u], [c]))
        values.append(total)
    return hm.from_entries(sr.COMPLEX, 2, 2, 2, values)


def cnot_formula(out_bits: Bits, in_bits: Bits) -> int:
    """
    delta(b, d) * delta(c, a + b mod 2) for outputs (a, b) and inputs (c, d).
    """
    (a, b), (c, d) = out_bits, in_bits
    return int(b == d and c == (a + b) % 2)


def conjugate_transpose(gate: hm.Hypermatrix) -> hm.Hypermatrix:
    """
    Swaps the index blocks and conjugates the entries.
    """
    return gate.transpose().map(lambda value: complex(value).conjugate())


def unitarity_residual(gate: hm.Hypermatrix) -> float:
    """
    Largest entry of |gate above its conjugate transpose - identity|.
    """
    if gate.out_rank != gate.in_rank:
        raise err.ShapeError(f"Only square gates are unitary, got {gate.arity}.")
    product = gate.vcomp(conjugate_transpose(gate))
    unit = hm.identity(sr.COMPLEX, gate.base_dim, gate.in_rank)
    return float(np.max(np.abs(product.array - unit.array)))


class QubitState:
    """
    Amplitudes of a pure k-qubit state, an element of K(2,0,k).
    """

    def __init__(self, amplitudes: hm.Hypermatrix):
        if amplitudes.base_dim != 2 or amplitudes.out_rank != 0:
            raise err.ShapeError(
                f"A qubit state lives in K(2,0,k), got K({amplitudes.base_dim},{amplitudes.out_rank},{amplitudes.in_rank})."
            )
        if amplitudes.semiring != sr.COMPLEX:
            raise err.ShapeError("Qubit amplitudes must be complex.")
        self.amplitudes = amplitudes

    @property
    def qubits(self) -> int:
        """
        k, the number of qubits.
        """
        return self.amplitudes.in_rank

    def amplitude(self, bits: Bits) -> complex:
        """
        The amplitude of the basis state |bits>.
        """
        return complex(self.amplitudes.entry((), _offsets(bits)))

    def __add__(self, other: "QubitState") -> "QubitState":
        return QubitState(self.amplitudes + other.amplitudes)

    def scale(self, factor: complex) -> "QubitState":
        """
        factor times the state.
        """
        return QubitState(self.amplitudes.scale(factor))

    def isclose(self, other: "QubitState") -> bool:
        """
        Amplitudes agree within the configured tolerance.
        """
        return self.amplitudes == other.amplitudes

    def to_json(self) -> dict[str, typing.Any]:
        """
        Non-zero amplitudes keyed by bit strings.
        """
        return {
            "".join(str(o - 1) for o in in_index):
            sr.COMPLEX.encode(value)
            for _, in_index, value in self.amplitudes.decompose()
        }

    def __repr__(self) -> str:
        return f"QubitState({self.to_json()})"


def basis_state(bits: Bits) -> QubitState:
    """
    |bits>, with amplitude one on a single basis vector.
    """
    return QubitState(
        hm.basis_e(sr.COMPLEX, 2, 0, len(bits), [], _offsets(bits)))


def apply_state(state: QubitState, gate: hm.Hypermatrix) -> QubitState:
    """
    The state stacked on top of a gate of K(2,k,k).
    """
    if gate.arity != (state.qubits, state.qubits):
        raise err.ShapeError(
            f"A {state.qubits}-qubit state needs a gate of arity ({state.qubits},{state.qubits}), got {gate.arity}."
        )
    return QubitState(state.amplitudes.vcomp(gate))


def is_entangled(state: QubitState) -> bool:
    """
    A 2-qubit state factorizes exactly when its 2x2 amplitude table has rank one.
    """
    if state.qubits != 2:
        raise err.ShapeError("The rank test is for 2-qubit states.")
    table = state.amplitudes.array.reshape(2, 2)
    return bool(abs(np.linalg.det(table)) > conf.tolerance)


def on_second_qubit(gate: hm.Hypermatrix) -> hm.Hypermatrix:
    """
    identity on the first qubit beside gate on the second.
    """
    return hm.identity(sr.COMPLEX, 2, 1).hcomp(gate)


def bell_state_demo() -> dict[str, typing.Any]:
    """
    Evaluates the CNOT network, checks unitarity and builds a Bell state from |00>.
    """
    cnot = cnot_matrix()
    residuals = {
        "H": unitarity_residual(hadamard_gate()),
        "V": unitarity_residual(cv_gate()),
        "CNOT": unitarity_residual(cnot),
    }
    formula_error = max(
        abs(cnot.entry(_offsets(out_bits), _offsets(in_bits)) -
            cnot_formula(out_bits, in_bits))
        for out_bits in itertools.product((0, 1), repeat=2)
        for in_bits in itertools.product((0, 1), repeat=2))

    start = basis_state([0, 0])
    spread = apply_state(start, on_second_qubit(hadamard_gate()))
    bell = apply_state(spread, cnot)
    return {
        "cnot": [[sr.COMPLEX.encode(v) for v in row]
                 for row in cnot.to_matrix()],
        "formula_error": formula_error,
        "unitarity_residual": residuals,
        "bell": {
            "before": spread.to_json(),
            "after": bell.to_json(),
            "entangled_before": is_entangled(spread),
            "entangled_after": is_entangled(bell),
        },
    }