"""
Multilinear representations: free PRO morphisms into K(N), fixed by their values on chips.
"""

import typing

import numpy as np

import prokit.error as err
import prokit.lib as l
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import semiring as sr


class Representation:
    """
    Assigns every chip of a signature a hypermatrix of K(N) of the chip's arity.

    Shapes are validated when the representation is built. Chips of the signature may be
    left unassigned; evaluating a circuit that uses one is an error.
    """

    def __init__(self, base_dim: int, semiring: sr.Semiring,
                 signature: cir.Signature,
                 assignments: typing.Mapping[str, hm.Hypermatrix]):
        for name, value in assignments.items():
            decl = signature[name]
            if value.semiring != semiring:
                raise err.ShapeError(
                    f"Chip '{name}' is assigned a hypermatrix over {value.semiring.name}, expected {semiring.name}."
                )
            if value.base_dim != base_dim:
                raise err.ShapeError(
                    f"Chip '{name}' is assigned a hypermatrix of base dimension {value.base_dim}, expected {base_dim}."
                )
            if value.arity != (decl.out_arity, decl.in_arity):
                raise err.ShapeError(
                    f"Chip '{name}' has arity ({decl.out_arity},{decl.in_arity}) but is assigned K({base_dim},{value.out_rank},{value.in_rank})."
                )
        self.base_dim = base_dim
        self.semiring = semiring
        self.signature = signature
        self._assignments = dict(assignments)

    def __getitem__(self, name: str) -> hm.Hypermatrix:
        try:
            return self._assignments[name]
        except KeyError as e:
            raise err.SemanticError(f"Chip '{name}' has no assignment.") from e

    def __contains__(self, name: str) -> bool:
        return name in self._assignments

    def assigned(self) -> list[str]:
        """
        Names of the assigned chips in signature order.
        """
        return [name for name in self.signature.names() if name in self]

    def _chip_value(self, decl: cir.ChipDecl) -> hm.Hypermatrix:
        if decl.name in self.signature and self.signature[decl.name] != decl:
            raise err.ShapeError(
                f"Chip '{decl.name}' is used with arity ({decl.out_arity},{decl.in_arity}), which differs from its declaration."
            )
        return self[decl.name]

    def evaluate(self, term: cir.CircuitTerm) -> hm.Hypermatrix:
        """
        The image of a circuit, by structural recursion over the term.
        """
        if isinstance(term, cir.Empty):
            return hm.scalar(self.semiring, self.base_dim, self.semiring.one)
        if isinstance(term, cir.Wire):
            return hm.identity(self.semiring, self.base_dim, 1)
        if isinstance(term, cir.Chip):
            return self._chip_value(term.decl)
        if isinstance(term, cir.HComp):
            return self.evaluate(term.left).hcomp(self.evaluate(term.right))
        if isinstance(term, cir.VComp):
            return self.evaluate(term.top).vcomp(self.evaluate(term.bottom))
        raise TypeError(f"Not a circuit term: {term!r}")

    def apply(self, term: cir.CircuitTerm, tensor: np.ndarray,
              offset: int = 0) -> np.ndarray:
        """
        Pushes tensor upward through term: the axes offset..offset+n-1 of tensor are fed to
        the n inputs of term and replaced by its m outputs. Other axes are untouched.

        Equivalent to contracting with evaluate(term), without ever forming it.
        """
        if tensor.ndim < offset + term.in_arity:
            raise err.ShapeError(
                f"A tensor with {tensor.ndim} axes can't feed {term.in_arity} inputs at position {offset}."
            )
        if isinstance(term, (cir.Empty, cir.Wire)):
            return tensor
        if isinstance(term, cir.Chip):
            value = self._chip_value(term.decl)
            m, n = value.arity
            contracted = np.tensordot(value.array,
                                      tensor,
                                      axes=(list(range(m, m + n)),
                                            list(range(offset, offset + n))))
            moved = np.moveaxis(contracted, list(range(m)),
                                list(range(offset, offset + m)))
            return np.asarray(moved, dtype=self.semiring.dtype)
        if isinstance(term, cir.HComp):
            tensor = self.apply(term.left, tensor, offset)
            return self.apply(term.right, tensor, offset + term.left.out_arity)
        if isinstance(term, cir.VComp):
            return self.apply(term.top, self.apply(term.bottom, tensor, offset),
                              offset)
        raise TypeError(f"Not a circuit term: {term!r}")

    def _check_compatible(self, other: "Representation", what: str):
        if self.semiring != other.semiring:
            raise err.SemanticError(
                f"Can't build the {what} of representations over {self.semiring.name} and {other.semiring.name}."
            )
        if self.signature != other.signature or set(self.assigned()) != set(
                other.assigned()):
            raise err.SemanticError(
                f"Can't build the {what} of representations of different signatures."
            )

    def hadamard(self, other: "Representation") -> "Representation":
        """
        Chipwise Kronecker product, a representation over K(MN).
        """
        self._check_compatible(other, "Hadamard product")
        return Representation(
            self.base_dim * other.base_dim, self.semiring, self.signature, {
                name: self[name].kronecker(other[name])
                for name in self.assigned()
            })

    def quasi_sum(self, other: "Representation") -> "Representation":
        """
        Chipwise quasi-direct sum, a representation over K(M+N).
        """
        self._check_compatible(other, "quasi-direct sum")
        return Representation(
            self.base_dim + other.base_dim, self.semiring, self.signature, {
                name: self[name].quasi_direct_sum(other[name])
                for name in self.assigned()
            })

    def to_json(self, sparse: bool = False) -> dict[str, typing.Any]:
        """
        The representation file form.
        """
        return {
            "N": self.base_dim,
            "semiring": self.semiring.name,
            "chips": {
                name: self[name].to_json(sparse)
                for name in self.assigned()
            },
        }

    @staticmethod
    def from_json(data: typing.Any) -> "Representation":
        """
        Reads a representation file. The signature is read off the ranks.
        """
        l.require_keys(data, ["N", "chips"], "representation")
        base_dim = l.require_int(data["N"], "N", 1)
        semiring = sr.get(data.get("semiring"))
        if not isinstance(data["chips"], dict):
            raise err.ParseError("'chips' must map chip names to hypermatrices.")

        decls = []
        assignments = {}
        for name, item in data["chips"].items():
            value = hm.Hypermatrix.from_json(item, semiring)
            if value.base_dim != base_dim:
                raise err.ShapeError(
                    f"Chip '{name}' has base dimension {value.base_dim}, expected {base_dim}."
                )
            decls.append(cir.ChipDecl(name, value.out_rank, value.in_rank))
            assignments[name] = value
        return Representation(base_dim, semiring, cir.Signature(decls),
                              assignments)

    def __repr__(self) -> str:
        return f"Representation(N={self.base_dim}, {self.semiring.name}, {self.assigned()})"


def trivial_representation(signature: cir.Signature,
                           semiring: sr.Semiring) -> Representation:
    """
    The 1-dimensional representation sending every chip to all ones.
    """
    return Representation(
        1, semiring, signature, {
            decl.name: hm.Hypermatrix(
                semiring, 1, decl.out_arity, decl.in_arity,
                semiring.full((1, ) * (decl.out_arity + decl.in_arity),
                              semiring.one))
            for decl in signature
        })


def random_representation(signature: cir.Signature, base_dim: int,
                          semiring: sr.Semiring,
                          rng: np.random.Generator) -> Representation:
    """
    A representation with independent random entries on every chip.
    """
    return Representation(
        base_dim, semiring, signature, {
            decl.name: hm.random_hypermatrix(semiring, base_dim,
                                             decl.out_arity, decl.in_arity,
                                             rng)
            for decl in signature
        })
