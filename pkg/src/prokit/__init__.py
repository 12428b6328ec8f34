"""
Module for working with hypermatrix PROs, circuit representations and PRO automata.

Scripts use the names below; the submodules of prokit.lib hold the rest.
"""

from prokit.error import (ConfigError, ParseError, SemanticError, ShapeError,
                          UserFacingError)
from prokit.lib.automata import (ProAutomaton, Tree, TreeAutomaton,
                                 WordAutomaton, intersect, union)
from prokit.lib.circuit import (WIRE, ChipDecl, CircuitTerm, Signature, chip,
                                enumerate_circuits, hcomp, parse_term,
                                term_to_json, vcomp, wires)
from prokit.lib.hypermat import (Hypermatrix, basis_e, compose, identity,
                                 random_hypermatrix, zeros)
from prokit.lib.paths import (LabeledCircuit, enumerate_labelings,
                              path_sum_oracle)
from prokit.lib.represent import Representation
from prokit.lib.semiring import (BOOLEAN, COMPLEX, NATURAL, RATFUNC, RATIONAL,
                                 RationalFunction, Semiring)


def evaluate(mu: Representation, term: CircuitTerm) -> Hypermatrix:
    """
    Shortcut for mu.evaluate(term).
    """
    return mu.evaluate(term)


__all__ = [
    "BOOLEAN", "COMPLEX", "NATURAL", "RATFUNC", "RATIONAL", "WIRE", "ChipDecl",
    "CircuitTerm", "ConfigError", "Hypermatrix", "LabeledCircuit", "ParseError",
    "ProAutomaton", "RationalFunction", "Representation", "SemanticError",
    "Semiring", "ShapeError", "Signature", "Tree", "TreeAutomaton",
    "UserFacingError", "WordAutomaton", "basis_e", "chip", "compose",
    "enumerate_circuits", "enumerate_labelings", "evaluate", "hcomp", "identity",
    "intersect", "parse_term", "path_sum_oracle", "random_hypermatrix",
    "term_to_json", "union", "vcomp", "wires", "zeros"
]
