"""
Commutative semirings the hypermatrix calculus is generic over.

Every instance knows its zero and one, its operations, its equality, the numpy dtype its
elements are stored with, and the JSON encoding of its scalars.
"""

import fractions
import functools
import typing

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

import prokit.config as conf
import prokit.error as err

_POLY_RING, _D = ring("d", QQ)


def _to_fraction(coeff: typing.Any) -> fractions.Fraction:
    return fractions.Fraction(int(coeff.numerator), int(coeff.denominator))


def _from_fraction(value: fractions.Fraction) -> typing.Any:
    return QQ(value.numerator, value.denominator)


def _as_poly(value: typing.Any):
    if isinstance(value, type(_D)) and value.ring == _POLY_RING:
        return value
    if isinstance(value, (bool, np.bool_)):
        return _POLY_RING(int(value))
    if isinstance(value, (int, np.integer)):
        return _POLY_RING(int(value))
    if isinstance(value, fractions.Fraction):
        return _POLY_RING.ground_new(_from_fraction(value))
    raise TypeError(f"Can't use {value!r} as a polynomial in d.")


def _poly_coefficients(poly) -> list[fractions.Fraction]:
    if not poly:
        return [fractions.Fraction(0)]
    terms = dict(poly.terms())
    return [
        _to_fraction(terms.get((k, ), QQ.zero))
        for k in range(poly.degree() + 1)
    ]


def _poly_from_coefficients(coeffs: list[fractions.Fraction]):
    return _POLY_RING.from_dict({(k, ): _from_fraction(c)
                                 for k, c in enumerate(coeffs) if c})


def _eval_poly(poly, x: fractions.Fraction) -> fractions.Fraction:
    result = fractions.Fraction(0)
    for coeff in reversed(_poly_coefficients(poly)):
        result = result * x + coeff
    return result


class RationalFunction:
    """
    Quotient of two polynomials in the formal parameter d with rational coefficients.

    Values are always reduced: numerator and denominator are coprime, the denominator is
    monic and the zero function has denominator 1.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: typing.Any = 0, denominator: typing.Any = 1):
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if not den:
            raise err.SemanticError("Division by the zero polynomial.")

        if not num:
            num, den = _POLY_RING.zero, _POLY_RING.one
        else:
            _, num, den = num.cofactors(den)
            lead = den.LC
            if lead != QQ.one:
                num = num.quo_ground(lead)
                den = den.quo_ground(lead)

        self._num = num
        self._den = den

    @staticmethod
    def variable() -> "RationalFunction":
        """
        Returns the parameter d.
        """
        return RationalFunction(_D)

    @staticmethod
    def from_coefficients(num: list[fractions.Fraction],
                          den: list[fractions.Fraction]) -> "RationalFunction":
        """
        Builds a function from coefficient lists in ascending powers of d.
        """
        return RationalFunction(_poly_from_coefficients(num),
                                _poly_from_coefficients(den))

    @property
    def numerator(self) -> list[fractions.Fraction]:
        """
        Coefficients of the numerator in ascending powers of d.
        """
        return _poly_coefficients(self._num)

    @property
    def denominator(self) -> list[fractions.Fraction]:
        """
        Coefficients of the monic denominator in ascending powers of d.
        """
        return _poly_coefficients(self._den)

    def is_zero(self) -> bool:
        """
        Returns True for the zero function.
        """
        return not self._num

    def evaluate(self, x: fractions.Fraction) -> fractions.Fraction:
        """
        Evaluates the function at a rational point.
        """
        den = _eval_poly(self._den, x)
        if den == 0:
            raise err.SemanticError(f"{self} has a pole at d = {x}.")
        return _eval_poly(self._num, x) / den

    @staticmethod
    def _coerce(value: typing.Any) -> typing.Optional["RationalFunction"]:
        if isinstance(value, RationalFunction):
            return value
        try:
            return RationalFunction(value)
        except TypeError:
            return None

    def __add__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(self._num * other._den + other._num * self._den,
                                self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        if not self._num or not other._num:
            return _RF_ZERO
        if other._num == other._den:
            return self
        if self._num == self._den:
            return other
        return RationalFunction(self._num * other._num,
                                self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            raise err.SemanticError("Division by the zero polynomial.")
        return RationalFunction(self._num * other._den,
                                self._den * other._num)

    def __rtruediv__(self, other: typing.Any) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return (_RF_ONE / self)**(-exponent)
        result = _RF_ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: typing.Any) -> bool:
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((frozenset(self._num.items()),
                     frozenset(self._den.items())))

    def __str__(self) -> str:
        if self._den == _POLY_RING.one:
            return str(self._num)
        return f"({self._num})/({self._den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


_RF_ZERO = RationalFunction(0)
_RF_ONE = RationalFunction(1)


class Semiring:
    """
    A commutative semiring together with the numpy layout of its elements.

    Instances are stateless singletons, compare them by name.
    """

    name: str = ""
    dtype: typing.Any = object
    exact: bool = True

    @property
    def zero(self) -> typing.Any:
        """
        The additive identity.
        """
        raise NotImplementedError

    @property
    def one(self) -> typing.Any:
        """
        The multiplicative identity.
        """
        raise NotImplementedError

    def add(self, a: typing.Any, b: typing.Any) -> typing.Any:
        """
        Semiring sum.
        """
        return a + b

    def mul(self, a: typing.Any, b: typing.Any) -> typing.Any:
        """
        Semiring product.
        """
        return a * b

    def eq(self, a: typing.Any, b: typing.Any) -> bool:
        """
        Semiring equality.
        """
        return bool(a == b)

    def is_zero(self, a: typing.Any) -> bool:
        """
        Returns True if a equals zero.
        """
        return self.eq(a, self.zero)

    def sum(self, values: typing.Iterable[typing.Any]) -> typing.Any:
        """
        Folds values with add, starting from zero.
        """
        return functools.reduce(self.add, values, self.zero)

    def product(self, values: typing.Iterable[typing.Any]) -> typing.Any:
        """
        Folds values with mul, starting from one.
        """
        return functools.reduce(self.mul, values, self.one)

    def from_int(self, k: int) -> typing.Any:
        """
        Returns the k-fold sum of one.
        """
        return self.coerce(k)

    def coerce(self, value: typing.Any) -> typing.Any:
        """
        Converts a Python value into an element of this semiring.
        """
        raise NotImplementedError

    def scalar(self, value: typing.Any) -> typing.Any:
        """
        Converts an element read from a numpy array to its canonical Python form.
        """
        return value

    def encode(self, value: typing.Any) -> typing.Any:
        """
        Returns the JSON encoding of an element.
        """
        raise NotImplementedError

    def decode(self, data: typing.Any) -> typing.Any:
        """
        Reads an element from its JSON encoding.
        """
        raise NotImplementedError

    def random_element(self, rng: np.random.Generator) -> typing.Any:
        """
        Returns a small random element.
        """
        raise NotImplementedError

    def array(self, values: typing.Sequence[typing.Any],
              shape: tuple[int, ...]) -> np.ndarray:
        """
        Builds an array of the given shape from values in row-major order.
        """
        values = [self.coerce(v) for v in values]
        if self.dtype is object:
            arr = np.empty(len(values), dtype=object)
            arr[:] = values
        else:
            arr = np.array(values, dtype=self.dtype)
        return arr.reshape(shape)

    def full(self, shape: tuple[int, ...], value: typing.Any) -> np.ndarray:
        """
        Builds an array filled with one element.
        """
        return np.full(shape, self.coerce(value), dtype=self.dtype)

    def arrays_equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        """
        Entrywise equality of two arrays of elements.
        """
        if a.shape != b.shape:
            return False
        return bool(np.array_equal(a, b))

    def __eq__(self, other: typing.Any) -> bool:
        return isinstance(other, Semiring) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"Semiring({self.name})"


class BooleanSemiring(Semiring):
    """
    {0,1} with or and and.
    """

    name = "boolean"
    dtype = np.bool_

    @property
    def zero(self) -> bool:
        return False

    @property
    def one(self) -> bool:
        return True

    def add(self, a, b):
        return bool(a) or bool(b)

    def mul(self, a, b):
        return bool(a) and bool(b)

    def eq(self, a, b):
        return bool(a) == bool(b)

    def from_int(self, k):
        return k > 0

    def coerce(self, value):
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)) and value in (0, 1):
            return bool(value)
        raise err.ParseError(f"{value!r} is not a boolean.")

    def scalar(self, value):
        return bool(value)

    def encode(self, value):
        return bool(value)

    def decode(self, data):
        return self.coerce(data)

    def random_element(self, rng):
        return bool(rng.integers(0, 2))


class NaturalSemiring(Semiring):
    """
    Non-negative integers of arbitrary precision.
    """

    name = "natural"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value):
        if isinstance(value, (bool, np.bool_)):
            return int(value)
        if isinstance(value, (int, np.integer)) and value >= 0:
            return int(value)
        if isinstance(value, fractions.Fraction) and value.denominator == 1 \
                and value >= 0:
            return int(value)
        raise err.ParseError(f"{value!r} is not a natural number.")

    def scalar(self, value):
        return int(value)

    def encode(self, value):
        return str(int(value))

    def decode(self, data):
        if isinstance(data, str):
            try:
                data = int(data)
            except ValueError as e:
                raise err.ParseError(
                    f"'{data}' is not a natural number.") from e
        return self.coerce(data)

    def random_element(self, rng):
        return int(rng.integers(0, 5))


class RationalSemiring(Semiring):
    """
    Exact rationals, kept in lowest terms by fractions.Fraction.
    """

    name = "rational"

    @property
    def zero(self) -> fractions.Fraction:
        return fractions.Fraction(0)

    @property
    def one(self) -> fractions.Fraction:
        return fractions.Fraction(1)

    def coerce(self, value):
        if isinstance(value, fractions.Fraction):
            return value
        if isinstance(value, (bool, np.bool_, int, np.integer)):
            return fractions.Fraction(int(value))
        raise err.ParseError(f"{value!r} is not a rational number.")

    def encode(self, value):
        return str(value)

    def decode(self, data):
        if isinstance(data, str):
            try:
                return fractions.Fraction(data)
            except (ValueError, ZeroDivisionError) as e:
                raise err.ParseError(
                    f"'{data}' is not a rational number.") from e
        return self.coerce(data)

    def random_element(self, rng):
        return fractions.Fraction(int(rng.integers(-4, 5)),
                                  int(rng.integers(1, 4)))


class ComplexSemiring(Semiring):
    """
    Double precision complex numbers, equal up to the configured absolute tolerance.
    """

    name = "complex"
    dtype = np.complex128
    exact = False

    @property
    def zero(self) -> complex:
        return complex(0)

    @property
    def one(self) -> complex:
        return complex(1)

    def eq(self, a, b):
        return abs(complex(a) - complex(b)) <= conf.tolerance

    def coerce(self, value):
        if isinstance(value, fractions.Fraction):
            return complex(float(value))
        if isinstance(value, (bool, np.bool_, int, float, complex, np.number)):
            return complex(value)
        raise err.ParseError(f"{value!r} is not a complex number.")

    def scalar(self, value):
        return complex(value)

    def encode(self, value):
        value = complex(value)
        return [value.real, value.imag]

    def decode(self, data):
        if isinstance(data, list):
            if len(data) != 2:
                raise err.ParseError(
                    f"A complex number is a pair [re, im], got {data!r}.")
            return complex(float(data[0]), float(data[1]))
        return self.coerce(data)

    def random_element(self, rng):
        return complex(rng.normal(), rng.normal())

    def arrays_equal(self, a, b):
        if a.shape != b.shape:
            return False
        return bool(np.allclose(a, b, rtol=0, atol=conf.tolerance))


class RationalFunctionSemiring(Semiring):
    """
    Rational functions in the formal parameter d over the rationals.
    """

    name = "ratfunc"

    @property
    def zero(self) -> RationalFunction:
        return _RF_ZERO

    @property
    def one(self) -> RationalFunction:
        return _RF_ONE

    def coerce(self, value):
        if isinstance(value, RationalFunction):
            return value
        try:
            return RationalFunction(value)
        except TypeError as e:
            raise err.ParseError(
                f"{value!r} is not a rational function.") from e

    def encode(self, value):
        value = self.coerce(value)
        return {
            "num": [str(c) for c in value.numerator],
            "den": [str(c) for c in value.denominator],
        }

    def decode(self, data):
        if isinstance(data, dict):
            if "num" not in data or "den" not in data:
                raise err.ParseError(
                    f"A rational function needs 'num' and 'den', got {data!r}."
                )
            try:
                num = [fractions.Fraction(str(c)) for c in data["num"]]
                den = [fractions.Fraction(str(c)) for c in data["den"]]
            except (ValueError, ZeroDivisionError) as e:
                raise err.ParseError(
                    f"Bad rational function coefficients {data!r}.") from e
            return RationalFunction.from_coefficients(num, den)
        if isinstance(data, str):
            try:
                return RationalFunction(fractions.Fraction(data))
            except (ValueError, ZeroDivisionError) as e:
                raise err.ParseError(
                    f"'{data}' is not a rational constant.") from e
        return self.coerce(data)

    def random_element(self, rng):
        num = [
            fractions.Fraction(int(rng.integers(-3, 4))) for _ in range(2)
        ]
        den = [fractions.Fraction(int(rng.integers(1, 4))), 1]
        return RationalFunction.from_coefficients(num, den)


BOOLEAN = BooleanSemiring()
NATURAL = NaturalSemiring()
RATIONAL = RationalSemiring()
COMPLEX = ComplexSemiring()
RATFUNC = RationalFunctionSemiring()

_REGISTRY: dict[str, Semiring] = {
    s.name: s
    for s in (BOOLEAN, NATURAL, RATIONAL, COMPLEX, RATFUNC)
}


def names() -> list[str]:
    """
    Returns the tags of all available semirings.
    """
    return list(_REGISTRY)


def get(name: typing.Optional[str] = None) -> Semiring:
    """
    Returns the semiring with the given tag, or the configured default.
    """
    if name is None:
        name = conf.default_semiring
    try:
        return _REGISTRY[name]
    except KeyError as e:
        raise err.ParseError(
            f"Unknown semiring '{name}', expected one of {', '.join(names())}."
        ) from e
