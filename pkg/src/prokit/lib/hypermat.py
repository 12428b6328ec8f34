"""
Hypermatrices: the PRO and ModPro K(N) over a commutative semiring.

A hypermatrix of K(N, m, n) is stored as a numpy array of shape (N,)*(m+n) with the m output
axes first, so that its flattened entries are in row-major order with the output multi-index
major. Multi-indices are 1-based tuples at the API boundary and 0-based inside arrays.
"""

import typing

import numpy as np

import prokit.error as err
import prokit.lib as l
from prokit.lib import semiring as sr

MultiIndex = tuple[int, ...]


def check_multi_index(index: typing.Sequence[int], base_dim: int,
                      length: int) -> MultiIndex:
    """
    Validates a 1-based multi-index of the given length over [base_dim].
    """
    index = tuple(int(i) for i in index)
    if len(index) != length:
        raise err.ShapeError(
            f"Multi-index {list(index)} should have length {length}.")
    for digit in index:
        if not 1 <= digit <= base_dim:
            raise err.ShapeError(
                f"Multi-index {list(index)} has a digit outside 1..{base_dim}."
            )
    return index


def rank_index(index: typing.Sequence[int], base_dim: int) -> int:
    """
    Returns the 0-based row-major offset of a 1-based multi-index.
    """
    offset = 0
    for digit in index:
        offset = offset * base_dim + (digit - 1)
    return offset


def unrank_index(offset: int, base_dim: int, length: int) -> MultiIndex:
    """
    Inverse of rank_index.
    """
    digits = []
    for _ in range(length):
        offset, digit = divmod(offset, base_dim)
        digits.append(digit + 1)
    if offset:
        raise err.ShapeError(
            f"Offset doesn't fit in {length} digits over [{base_dim}].")
    return tuple(reversed(digits))


def mod_div(index: typing.Sequence[int],
            modulus: int) -> tuple[MultiIndex, MultiIndex]:
    """
    Splits every digit i of a 1-based multi-index as i = (q-1)*modulus + r with
    1 <= r <= modulus and returns (remainders, quotients).
    """
    if modulus < 1:
        raise err.ShapeError(f"Modulus must be positive, got {modulus}.")
    if any(i < 1 for i in index):
        raise err.ShapeError(f"Multi-index {list(index)} must be 1-based.")
    rems = tuple((i - 1) % modulus + 1 for i in index)
    quots = tuple((i - 1) // modulus + 1 for i in index)
    return rems, quots


class Hypermatrix:
    """
    An element of K(N, m, n): entries a^I_J with I in [N]^m (outputs) and J in [N]^n
    (inputs). Immutable.
    """

    def __init__(self, semiring: sr.Semiring, base_dim: int, out_rank: int,
                 in_rank: int, array: typing.Any):
        if base_dim < 1:
            raise err.ShapeError(f"Base dimension must be positive, got {base_dim}.")
        if out_rank < 0 or in_rank < 0:
            raise err.ShapeError("Ranks must be non-negative.")

        array = np.asarray(array, dtype=semiring.dtype)
        expected = (base_dim, ) * (out_rank + in_rank)
        if array.shape != expected:
            raise err.ShapeError(
                f"Entries of shape {array.shape} don't fit K({base_dim},{out_rank},{in_rank})."
            )
        array = np.array(array, copy=True)
        array.flags.writeable = False

        self.semiring = semiring
        self.base_dim = base_dim
        self.out_rank = out_rank
        self.in_rank = in_rank
        self._array = array

    @property
    def array(self) -> np.ndarray:
        """
        Read-only view of the entries, output axes first.
        """
        return self._array

    @property
    def arity(self) -> tuple[int, int]:
        """
        The pair (out_rank, in_rank).
        """
        return (self.out_rank, self.in_rank)

    def entry(self, out_index: typing.Sequence[int],
              in_index: typing.Sequence[int]) -> typing.Any:
        """
        Returns a^I_J for 1-based multi-indices I and J.
        """
        out_index = check_multi_index(out_index, self.base_dim,
                                      self.out_rank)
        in_index = check_multi_index(in_index, self.base_dim, self.in_rank)
        offsets = tuple(i - 1 for i in out_index + in_index)
        return self.semiring.scalar(self._array[offsets])

    def entries(self) -> list[typing.Any]:
        """
        All entries in row-major order, output index major.
        """
        return [self.semiring.scalar(v) for v in self._array.reshape(-1)]

    def _check_same_kind(self, other: "Hypermatrix", what: str):
        if self.semiring != other.semiring:
            raise err.ShapeError(
                f"Can't {what} hypermatrices over {self.semiring.name} and {other.semiring.name}."
            )
        if self.base_dim != other.base_dim:
            raise err.ShapeError(
                f"Can't {what} hypermatrices of base dimensions {self.base_dim} and {other.base_dim}."
            )

    def _new(self, array: typing.Any, out_rank: int, in_rank: int,
             base_dim: typing.Optional[int] = None) -> "Hypermatrix":
        if base_dim is None:
            base_dim = self.base_dim
        return Hypermatrix(self.semiring, base_dim, out_rank, in_rank, array)

    def hcomp(self, other: "Hypermatrix") -> "Hypermatrix":
        """
        Horizontal composition: c^{II'}_{JJ'} = a^I_J * b^{I'}_{J'}.
        """
        self._check_same_kind(other, "juxtapose")
        m, n = self.arity
        p, q = other.arity
        outer = np.asarray(np.multiply.outer(self._array, other._array),
                           dtype=self.semiring.dtype)
        perm = (list(range(m)) + list(range(m + n, m + n + p)) +
                list(range(m, m + n)) + list(range(m + n + p, m + n + p + q)))
        return self._new(np.transpose(outer, perm), m + p, n + q)

    def vcomp(self, other: "Hypermatrix") -> "Hypermatrix":
        """
        Vertical composition, self on top: c^I_J = sum over K of a^I_K * b^K_J.
        """
        self._check_same_kind(other, "stack")
        m, n = self.arity
        k, p = other.arity
        if n != k:
            raise err.ShapeError(
                f"Can't stack K(N,{m},{n}) on top of K(N,{k},{p}): inner ranks differ."
            )
        contracted = np.tensordot(self._array,
                                  other._array,
                                  axes=(list(range(m, m + n)), list(range(n))))
        return self._new(contracted, m, p)

    def __add__(self, other: "Hypermatrix") -> "Hypermatrix":
        self._check_same_kind(other, "add")
        if self.arity != other.arity:
            raise err.ShapeError(
                f"Can't add K(N,{self.out_rank},{self.in_rank}) and K(N,{other.out_rank},{other.in_rank})."
            )
        return self._new(self._array + other._array, self.out_rank,
                         self.in_rank)

    def scale(self, value: typing.Any) -> "Hypermatrix":
        """
        Scalar multiple value * A.
        """
        factor = np.asarray(self.semiring.coerce(value),
                            dtype=self.semiring.dtype)
        return self._new(self._array * factor, self.out_rank, self.in_rank)

    def kronecker(self, other: "Hypermatrix") -> "Hypermatrix":
        """
        Kronecker product of self in K(M,p,q) with other in K(N,p,q), an element of
        K(MN,p,q) with c^I_J = a^{I%M}_{J%M} * b^{I/M}_{J/M}.
        """
        if self.semiring != other.semiring:
            raise err.ShapeError("Kronecker product needs a common semiring.")
        if self.arity != other.arity:
            raise err.ShapeError(
                f"Kronecker product needs equal ranks, got {self.arity} and {other.arity}."
            )
        size_m, size_n = self.base_dim, other.base_dim
        k = self.out_rank + self.in_rank
        # Quotient digit (from other) is the major part of every combined digit.
        outer = np.asarray(np.multiply.outer(other._array, self._array),
                           dtype=self.semiring.dtype)
        perm = [axis for i in range(k) for axis in (i, k + i)]
        combined = np.transpose(outer, perm).reshape((size_m * size_n, ) * k)
        return self._new(combined, self.out_rank, self.in_rank,
                         size_m * size_n)

    def quasi_direct_sum(self, other: "Hypermatrix") -> "Hypermatrix":
        """
        Quasi-direct sum of self in K(M,p,q) with other in K(N,p,q): self on the block
        [M]^(p+q), other shifted by M on the block of all digits above M, zero elsewhere.

        On K(.,0,0) both blocks are the single empty index and the result is self.
        """
        if self.semiring != other.semiring:
            raise err.ShapeError("Quasi-direct sum needs a common semiring.")
        if self.arity != other.arity:
            raise err.ShapeError(
                f"Quasi-direct sum needs equal ranks, got {self.arity} and {other.arity}."
            )
        size_m, size_n = self.base_dim, other.base_dim
        k = self.out_rank + self.in_rank
        if k == 0:
            return self._new(self._array, 0, 0, size_m + size_n)
        result = self.semiring.full((size_m + size_n, ) * k,
                                    self.semiring.zero)
        result[(slice(0, size_m), ) * k] = self._array
        result[(slice(size_m, size_m + size_n), ) * k] = other._array
        return self._new(result, self.out_rank, self.in_rank,
                         size_m + size_n)

    def trace(self) -> typing.Any:
        """
        Sum of the diagonal entries a^I_I of an element of K(N,n,n).
        """
        if self.out_rank != self.in_rank:
            raise err.ShapeError(
                f"Trace needs equal ranks, got {self.arity}.")
        size = self.base_dim**self.in_rank
        diagonal = np.diagonal(self._array.reshape(size, size))
        return self.semiring.sum(
            self.semiring.scalar(v) for v in diagonal)

    def transpose(self) -> "Hypermatrix":
        """
        Swaps the output and input blocks: K(N,m,n) -> K(N,n,m).
        """
        m, n = self.arity
        perm = list(range(m, m + n)) + list(range(m))
        return self._new(np.transpose(self._array, perm), n, m)

    def map(self, func: typing.Callable[[typing.Any],
                                        typing.Any]) -> "Hypermatrix":
        """
        Applies func to every entry.
        """
        values = [func(v) for v in self.entries()]
        return self._new(
            self.semiring.array(values, self._array.shape), self.out_rank,
            self.in_rank)

    def decompose(self) -> list[tuple[MultiIndex, MultiIndex, typing.Any]]:
        """
        Coefficients of the unique decomposition in the E basis, zero terms left out.
        """
        m = self.out_rank
        terms = []
        for offsets in np.ndindex(*self._array.shape):
            value = self.semiring.scalar(self._array[offsets])
            if self.semiring.is_zero(value):
                continue
            digits = tuple(o + 1 for o in offsets)
            terms.append((digits[:m], digits[m:], value))
        return terms

    def to_matrix(self) -> list[list[typing.Any]]:
        """
        The N^m x N^n matrix view as nested lists of elements.
        """
        rows = self.base_dim**self.out_rank
        cols = self.base_dim**self.in_rank
        flat = self.entries()
        return [flat[r * cols:(r + 1) * cols] for r in range(rows)]

    def to_json(self, sparse: bool = False) -> dict[str, typing.Any]:
        """
        Dense or sparse JSON form.
        """
        data: dict[str, typing.Any] = {
            "N": self.base_dim,
            "out_rank": self.out_rank,
            "in_rank": self.in_rank,
        }
        encode = self.semiring.encode
        if sparse:
            data["sparse"] = [{
                "out": list(out_index),
                "in": list(in_index),
                "val": encode(value)
            } for out_index, in_index, value in self.decompose()]
        else:
            data["entries"] = [encode(v) for v in self.entries()]
        return data

    @staticmethod
    def from_json(data: typing.Any, semiring: sr.Semiring) -> "Hypermatrix":
        """
        Reads a hypermatrix from its dense or sparse JSON form.
        """
        l.require_keys(data, ["N", "out_rank", "in_rank"], "hypermatrix")
        base_dim = l.require_int(data["N"], "N", 1)
        out_rank = l.require_int(data["out_rank"], "out_rank")
        in_rank = l.require_int(data["in_rank"], "in_rank")

        if "entries" in data:
            values = data["entries"]
            if not isinstance(values, list):
                raise err.ParseError("Hypermatrix entries must be a list.")
            expected = base_dim**(out_rank + in_rank)
            if len(values) != expected:
                raise err.ShapeError(
                    f"Expected {expected} entries for K({base_dim},{out_rank},{in_rank}), got {len(values)}."
                )
            array = semiring.array([semiring.decode(v) for v in values],
                                   (base_dim, ) * (out_rank + in_rank))
            return Hypermatrix(semiring, base_dim, out_rank, in_rank, array)

        if "sparse" in data:
            array = semiring.full((base_dim, ) * (out_rank + in_rank),
                                  semiring.zero)
            for item in data["sparse"]:
                l.require_keys(item, ["out", "in", "val"], "sparse entry")
                out_index = check_multi_index(item["out"], base_dim, out_rank)
                in_index = check_multi_index(item["in"], base_dim, in_rank)
                array[tuple(i - 1 for i in out_index + in_index)] = \
                    semiring.decode(item["val"])
            return Hypermatrix(semiring, base_dim, out_rank, in_rank, array)

        raise err.ParseError(
            "A hypermatrix needs either 'entries' or 'sparse'.")

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return (self.semiring == other.semiring
                and self.base_dim == other.base_dim
                and self.arity == other.arity
                and self.semiring.arrays_equal(self._array, other._array))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (f"Hypermatrix(K({self.base_dim},{self.out_rank},{self.in_rank}), "
                f"{self.semiring.name})")


def zeros(semiring: sr.Semiring, base_dim: int, out_rank: int,
          in_rank: int) -> Hypermatrix:
    """
    The zero element of K(N, m, n).
    """
    return Hypermatrix(
        semiring, base_dim, out_rank, in_rank,
        semiring.full((base_dim, ) * (out_rank + in_rank), semiring.zero))


def scalar(semiring: sr.Semiring, base_dim: int,
           value: typing.Any) -> Hypermatrix:
    """
    The element value of K(N, 0, 0).
    """
    return Hypermatrix(semiring, base_dim, 0, 0,
                       semiring.array([value], ()))


def from_entries(semiring: sr.Semiring, base_dim: int, out_rank: int,
                 in_rank: int, values: typing.Sequence[typing.Any]) -> Hypermatrix:
    """
    Builds a hypermatrix from its entries in row-major order.
    """
    expected = base_dim**(out_rank + in_rank)
    if len(values) != expected:
        raise err.ShapeError(
            f"Expected {expected} entries for K({base_dim},{out_rank},{in_rank}), got {len(values)}."
        )
    return Hypermatrix(
        semiring, base_dim, out_rank, in_rank,
        semiring.array(list(values), (base_dim, ) * (out_rank + in_rank)))


def from_matrix(semiring: sr.Semiring, base_dim: int, out_rank: int,
                in_rank: int, rows: typing.Sequence[typing.Sequence[typing.Any]]
                ) -> Hypermatrix:
    """
    Builds a hypermatrix from its N^m x N^n matrix view.
    """
    return from_entries(semiring, base_dim, out_rank, in_rank,
                        [v for row in rows for v in row])


def basis_e(semiring: sr.Semiring, base_dim: int, out_rank: int, in_rank: int,
            out_index: typing.Sequence[int],
            in_index: typing.Sequence[int]) -> Hypermatrix:
    """
    E(N,p,q;K,L): one at (K, L), zero elsewhere.
    """
    out_index = check_multi_index(out_index, base_dim, out_rank)
    in_index = check_multi_index(in_index, base_dim, in_rank)
    array = semiring.full((base_dim, ) * (out_rank + in_rank), semiring.zero)
    array[tuple(i - 1 for i in out_index + in_index)] = semiring.one
    return Hypermatrix(semiring, base_dim, out_rank, in_rank, array)


def compose(semiring: sr.Semiring, base_dim: int, out_rank: int, in_rank: int,
            terms: typing.Iterable[tuple[typing.Sequence[int],
                                         typing.Sequence[int], typing.Any]]
            ) -> Hypermatrix:
    """
    Sums value * E(N,m,n;I,J) over the given terms.
    """
    result = zeros(semiring, base_dim, out_rank, in_rank)
    for out_index, in_index, value in terms:
        result = result + basis_e(semiring, base_dim, out_rank, in_rank,
                                  out_index, in_index).scale(value)
    return result


def identity(semiring: sr.Semiring, base_dim: int, rank: int) -> Hypermatrix:
    """
    The graded unit I(N)^(<->rank); the scalar one when rank is 0.
    """
    size = base_dim**rank
    square = semiring.full((size, size), semiring.zero)
    np.fill_diagonal(square, semiring.one)
    return Hypermatrix(semiring, base_dim, rank, rank,
                       square.reshape((base_dim, ) * (2 * rank)))


def random_hypermatrix(semiring: sr.Semiring, base_dim: int, out_rank: int,
                       in_rank: int, rng: np.random.Generator) -> Hypermatrix:
    """
    A hypermatrix with independent random entries.
    """
    count = base_dim**(out_rank + in_rank)
    return from_entries(semiring, base_dim, out_rank, in_rank,
                        [semiring.random_element(rng) for _ in range(count)])
