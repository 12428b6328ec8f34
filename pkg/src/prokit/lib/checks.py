"""
Named invariant suites for `prokit check`.

Every suite draws from its own generator seeded with conf.seed, so a suite reproduces on its
own. A law stops at its first failing trial and records a witness.
"""

import collections
import dataclasses
import fractions
import functools
import itertools
import typing

import numpy as np

import prokit.config as conf
import prokit.error as err
import prokit.lib as l
from prokit.lib import automata as aut
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import paths
from prokit.lib import quantum_gates as qg
from prokit.lib import represent as rep
from prokit.lib import semiring as sr
from prokit.lib import temperley_lieb as tl

EXACT_SEMIRINGS = [sr.BOOLEAN, sr.NATURAL, sr.RATIONAL]

# A merge and a split: enough to build connected and disconnected circuits of every arity.
MERGE = cir.ChipDecl("m", 1, 2)
SPLIT = cir.ChipDecl("s", 2, 1)
SMALL_SIGNATURE = cir.Signature([MERGE, SPLIT])
SMALL_ARITIES = [(1, 1), (1, 2), (2, 1), (2, 2)]

Law = typing.Callable[[np.random.Generator], typing.Optional[typing.Any]]


@dataclasses.dataclass
class CheckResult:
    """
    Outcome of one law: trials run, seed used and a witness on failure.
    """

    name: str
    passed: bool
    trials: int
    seed: int
    witness: typing.Optional[typing.Any] = None

    def to_json(self) -> dict[str, typing.Any]:
        """
        The report form.
        """
        data: dict[str, typing.Any] = {
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "seed": self.seed,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data


def _run_law(name: str, trials: int, rng: np.random.Generator,
             law: Law) -> CheckResult:
    for trial in range(trials):
        witness = law(rng)
        if witness is not None:
            l.print_debug(f"{name} failed on trial {trial + 1}: {witness}")
            return CheckResult(name, False, trial + 1, conf.seed, witness)
    return CheckResult(name, True, trials, conf.seed)


def _run_cases(name: str, cases: typing.Iterable[typing.Any],
               holds: typing.Callable[[typing.Any], bool]) -> CheckResult:
    count = 0
    for case in cases:
        count += 1
        if not holds(case):
            l.print_debug(f"{name} failed on {case}")
            return CheckResult(name, False, count, conf.seed, repr(case))
    return CheckResult(name, True, count, conf.seed)


def _setting(rng: np.random.Generator) -> tuple[sr.Semiring, int, int]:
    semiring = EXACT_SEMIRINGS[int(rng.integers(len(EXACT_SEMIRINGS)))]
    base_dim = int(rng.integers(1, 4))
    max_rank = 1 if base_dim == 3 else 2
    return semiring, base_dim, max_rank


def _ranks(rng: np.random.Generator, count: int, max_rank: int) -> list[int]:
    return [int(rng.integers(0, max_rank + 1)) for _ in range(count)]


def _hcomp_all(values: typing.Sequence[hm.Hypermatrix]) -> hm.Hypermatrix:
    return functools.reduce(lambda a, b: a.hcomp(b), values)


def _law_interchange(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n, p, m2, n2, p2 = _ranks(rng, 6, top)
    a = hm.random_hypermatrix(semiring, size, m, n, rng)
    b = hm.random_hypermatrix(semiring, size, n, p, rng)
    c = hm.random_hypermatrix(semiring, size, m2, n2, rng)
    d = hm.random_hypermatrix(semiring, size, n2, p2, rng)
    if a.vcomp(b).hcomp(c.vcomp(d)) != a.hcomp(c).vcomp(b.hcomp(d)):
        return {"semiring": semiring.name, "N": size, "ranks": [m, n, p, m2, n2, p2]}
    return None


def _law_hcomp_assoc(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    a, b, c = (hm.random_hypermatrix(semiring, size, *_ranks(rng, 2, top), rng)
               for _ in range(3))
    if a.hcomp(b).hcomp(c) != a.hcomp(b.hcomp(c)):
        return {"semiring": semiring.name, "N": size}
    return None


def _law_vcomp_assoc(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n, p, q = _ranks(rng, 4, top)
    a = hm.random_hypermatrix(semiring, size, m, n, rng)
    b = hm.random_hypermatrix(semiring, size, n, p, rng)
    c = hm.random_hypermatrix(semiring, size, p, q, rng)
    if a.vcomp(b).vcomp(c) != a.vcomp(b.vcomp(c)):
        return {"semiring": semiring.name, "N": size, "ranks": [m, n, p, q]}
    return None


def _law_units(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n = _ranks(rng, 2, top)
    a = hm.random_hypermatrix(semiring, size, m, n, rng)
    one = hm.scalar(semiring, size, semiring.one)
    same = [
        hm.identity(semiring, size, m).vcomp(a),
        a.vcomp(hm.identity(semiring, size, n)),
        one.hcomp(a),
        a.hcomp(one),
    ]
    if any(value != a for value in same):
        return {"semiring": semiring.name, "N": size, "ranks": [m, n]}
    return None


def _law_distributivity(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n, p, q = _ranks(rng, 4, top)
    a, a2 = (hm.random_hypermatrix(semiring, size, m, n, rng) for _ in range(2))
    b, b2 = (hm.random_hypermatrix(semiring, size, n, p, rng) for _ in range(2))
    c = hm.random_hypermatrix(semiring, size, p, q, rng)
    sides = {
        "vcomp-left": ((a + a2).vcomp(b), a.vcomp(b) + a2.vcomp(b)),
        "vcomp-right": (a.vcomp(b + b2), a.vcomp(b) + a.vcomp(b2)),
        "hcomp-left": ((a + a2).hcomp(c), a.hcomp(c) + a2.hcomp(c)),
        "hcomp-right": (c.hcomp(a + a2), c.hcomp(a) + c.hcomp(a2)),
    }
    for law, (lhs, rhs) in sides.items():
        if lhs != rhs:
            return {"semiring": semiring.name, "N": size, "law": law}
    return None


def _law_scalar_compatibility(
        rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n, p, q = _ranks(rng, 4, top)
    r = semiring.random_element(rng)
    a = hm.random_hypermatrix(semiring, size, m, n, rng)
    b = hm.random_hypermatrix(semiring, size, n, p, rng)
    c = hm.random_hypermatrix(semiring, size, p, q, rng)
    if not a.hcomp(c).scale(r) == a.scale(r).hcomp(c) == a.hcomp(c.scale(r)):
        return {"semiring": semiring.name, "N": size, "law": "hcomp"}
    if not a.vcomp(b).scale(r) == a.scale(r).vcomp(b) == a.vcomp(b.scale(r)):
        return {"semiring": semiring.name, "N": size, "law": "vcomp"}
    return None


def check_pro_axioms(rng: np.random.Generator) -> list[CheckResult]:
    """
    Interchange, associativities, units, distributivities and scalar compatibility of K(N).
    """
    trials = conf.check_trials
    return [
        _run_law("interchange", trials, rng, _law_interchange),
        _run_law("hcomp-associativity", trials, rng, _law_hcomp_assoc),
        _run_law("vcomp-associativity", trials, rng, _law_vcomp_assoc),
        _run_law("units", trials, rng, _law_units),
        _run_law("distributivity", trials, rng, _law_distributivity),
        _run_law("scalar-compatibility", trials, rng, _law_scalar_compatibility),
    ]


def _indices(size: int, rank: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(1, size + 1), repeat=rank))


def _rank_pairs() -> list[tuple[int, int]]:
    return [(m, n) for m in range(3) for n in range(3) if m + n <= 2]


def check_modpro(rng: np.random.Generator) -> list[CheckResult]:
    """
    Identities of the E basis, exhaustively for N, M <= 2.
    """
    semiring = sr.NATURAL
    results = []

    def e(size, m, n, i, j):
        return hm.basis_e(semiring, size, m, n, i, j)

    def ehe_cases():
        for size in (1, 2):
            for (m, n), (p, q) in itertools.product(_rank_pairs(), repeat=2):
                for i, j, k, h in itertools.product(_indices(size, m),
                                                    _indices(size, n),
                                                    _indices(size, p),
                                                    _indices(size, q)):
                    yield size, (m, n, i, j), (p, q, k, h)

    results.append(
        _run_cases(
            "basis-hcomp", ehe_cases(), lambda c: e(c[0], *c[1]).hcomp(
                e(c[0], *c[2])) == e(c[0], c[1][0] + c[2][0], c[1][1] + c[2][1],
                                     c[1][2] + c[2][2], c[1][3] + c[2][3])))

    def eve_cases():
        for size in (1, 2):
            for m, n, p in itertools.product(range(3), repeat=3):
                if m + n > 2 or n + p > 2:
                    continue
                for i, k, k2, j in itertools.product(_indices(size, m),
                                                     _indices(size, n),
                                                     _indices(size, n),
                                                     _indices(size, p)):
                    yield size, m, n, p, i, k, k2, j

    def eve_holds(c):
        size, m, n, p, i, k, k2, j = c
        product = e(size, m, n, i, k).vcomp(e(size, n, p, k2, j))
        expected = e(size, m, p, i, j) if k == k2 else hm.zeros(
            semiring, size, m, p)
        return product == expected

    results.append(_run_cases("basis-vcomp", eve_cases(), eve_holds))

    def kron_cases():
        for size_a, size_b in itertools.product((1, 2), repeat=2):
            for m, n in _rank_pairs():
                for i, j, k, h in itertools.product(_indices(size_a, m),
                                                    _indices(size_a, n),
                                                    _indices(size_b, m),
                                                    _indices(size_b, n)):
                    yield size_a, size_b, m, n, i, j, k, h

    def kron_holds(c):
        size_a, size_b, m, n, i, j, k, h = c
        product = e(size_a, m, n, i, j).kronecker(e(size_b, m, n, k, h))
        return product == e(size_a * size_b, m, n,
                            aut.word_odot(i, k, size_a),
                            aut.word_odot(j, h, size_a))

    results.append(_run_cases("basis-kronecker", kron_cases(), kron_holds))

    def sum_cases():
        for size_a, size_b in itertools.product((1, 2), repeat=2):
            for m, n in _rank_pairs():
                if m + n == 0:
                    continue
                for i, j in itertools.product(_indices(size_a, m),
                                              _indices(size_a, n)):
                    yield "left", size_a, size_b, m, n, i, j
                for i, j in itertools.product(_indices(size_b, m),
                                              _indices(size_b, n)):
                    yield "right", size_a, size_b, m, n, i, j

    def sum_holds(c):
        side, size_a, size_b, m, n, i, j = c
        total = size_a + size_b
        if side == "left":
            value = e(size_a, m, n, i, j).quasi_direct_sum(
                hm.zeros(semiring, size_b, m, n))
            return value == e(total, m, n, i, j)
        value = hm.zeros(semiring, size_a, m, n).quasi_direct_sum(
            e(size_b, m, n, i, j))
        return value == e(total, m, n, [x + size_a for x in i],
                          [x + size_a for x in j])

    results.append(_run_cases("basis-quasi-sum", sum_cases(), sum_holds))
    results.append(
        _run_cases(
            "identity-quasi-sum", itertools.product((1, 2), repeat=2),
            lambda c: hm.identity(semiring, c[0], 1).quasi_direct_sum(
                hm.identity(semiring, c[1], 1)) == hm.identity(
                    semiring, c[0] + c[1], 1)))

    def decomposition(rng_: np.random.Generator) -> typing.Optional[typing.Any]:
        value_semiring, size, top = _setting(rng_)
        m, n = _ranks(rng_, 2, top)
        value = hm.random_hypermatrix(value_semiring, size, m, n, rng_)
        if hm.compose(value_semiring, size, m, n, value.decompose()) != value:
            return {"semiring": value_semiring.name, "N": size}
        return None

    results.append(
        _run_law("basis-decomposition", conf.check_trials, rng, decomposition))
    return results


def _kron_setting(rng: np.random.Generator) -> tuple[sr.Semiring, int]:
    return EXACT_SEMIRINGS[int(rng.integers(len(EXACT_SEMIRINGS)))], 2


def _law_kron_vcomp(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size = _kron_setting(rng)
    m, n, p = _ranks(rng, 3, 2)
    a, a2 = (hm.random_hypermatrix(semiring, size, m, n, rng) for _ in range(2))
    b, b2 = (hm.random_hypermatrix(semiring, size, n, p, rng) for _ in range(2))
    if a.vcomp(b).kronecker(a2.vcomp(b2)) != a.kronecker(a2).vcomp(
            b.kronecker(b2)):
        return {"semiring": semiring.name, "ranks": [m, n, p]}
    return None


def _law_kron_hcomp(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size = _kron_setting(rng)
    m, n, p, q = _ranks(rng, 4, 1)
    a, a2 = (hm.random_hypermatrix(semiring, size, m, n, rng) for _ in range(2))
    b, b2 = (hm.random_hypermatrix(semiring, size, p, q, rng) for _ in range(2))
    if a.hcomp(b).kronecker(a2.hcomp(b2)) != a.kronecker(a2).hcomp(
            b.kronecker(b2)):
        return {"semiring": semiring.name, "ranks": [m, n, p, q]}
    return None


def _law_kron_linear(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring = EXACT_SEMIRINGS[int(rng.integers(len(EXACT_SEMIRINGS)))]
    size_a, size_b = int(rng.integers(1, 3)), int(rng.integers(1, 3))
    m, n = _ranks(rng, 2, 2)
    r = semiring.random_element(rng)
    a, a2 = (hm.random_hypermatrix(semiring, size_a, m, n, rng) for _ in range(2))
    b, b2 = (hm.random_hypermatrix(semiring, size_b, m, n, rng) for _ in range(2))
    if (a + a2).kronecker(b) != a.kronecker(b) + a2.kronecker(b):
        return {"semiring": semiring.name, "law": "left-sum"}
    if a.kronecker(b + b2) != a.kronecker(b) + a.kronecker(b2):
        return {"semiring": semiring.name, "law": "right-sum"}
    scaled = a.kronecker(b).scale(r)
    if not scaled == a.scale(r).kronecker(b) == a.kronecker(b.scale(r)):
        return {"semiring": semiring.name, "law": "scalar"}
    return None


def small_circuits(max_chips: int) -> list[cir.CircuitTerm]:
    """
    Every circuit over the merge/split signature with at most max_chips chips and a small
    arity, one per isomorphism class.
    """
    found = []
    for m, n in SMALL_ARITIES:
        found.extend(cir.enumerate_circuits(SMALL_SIGNATURE, max_chips, m, n))
    return found


def check_kronecker(rng: np.random.Generator) -> list[CheckResult]:
    """
    The Kronecker product is a bilinear PRO morphism, and Hadamard products of representations
    evaluate to Kronecker products on every circuit.
    """
    trials = max(1, conf.check_trials // 2)
    results = [
        _run_law("kronecker-vcomp", trials, rng, _law_kron_vcomp),
        _run_law("kronecker-hcomp", trials, rng, _law_kron_hcomp),
        _run_law("kronecker-bilinear", trials, rng, _law_kron_linear),
    ]
    mu = rep.random_representation(SMALL_SIGNATURE, 2, sr.NATURAL, rng)
    nu = rep.random_representation(SMALL_SIGNATURE, 2, sr.NATURAL, rng)
    product = mu.hadamard(nu)
    results.append(
        _run_cases(
            "hadamard-representation", small_circuits(4),
            lambda t: product.evaluate(t) == mu.evaluate(t).kronecker(
                nu.evaluate(t))))
    return results


def _law_quasi_vcomp(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, _, _ = _setting(rng)
    size_a, size_b = int(rng.integers(1, 3)), int(rng.integers(1, 3))
    m, n, p = _ranks(rng, 3, 2)
    a = hm.random_hypermatrix(semiring, size_a, m, n, rng)
    b = hm.random_hypermatrix(semiring, size_a, n, p, rng)
    a2 = hm.random_hypermatrix(semiring, size_b, m, n, rng)
    b2 = hm.random_hypermatrix(semiring, size_b, n, p, rng)
    if a.quasi_direct_sum(a2).vcomp(b.quasi_direct_sum(b2)) != a.vcomp(
            b).quasi_direct_sum(a2.vcomp(b2)):
        return {"semiring": semiring.name, "M": size_a, "N": size_b}
    return None


def _law_quasi_linear(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, _, _ = _setting(rng)
    size_a, size_b = int(rng.integers(1, 3)), int(rng.integers(1, 3))
    m, n = _ranks(rng, 2, 2)
    r = semiring.random_element(rng)
    a, a2 = (hm.random_hypermatrix(semiring, size_a, m, n, rng) for _ in range(2))
    b, b2 = (hm.random_hypermatrix(semiring, size_b, m, n, rng) for _ in range(2))
    # The summands occupy disjoint blocks, so each pair is added once.
    if (a + a2).quasi_direct_sum(b + b2) != a.quasi_direct_sum(
            b) + a2.quasi_direct_sum(b2):
        return {"semiring": semiring.name, "ranks": [m, n], "law": "sum"}
    if a.quasi_direct_sum(b).scale(r) != a.scale(r).quasi_direct_sum(b.scale(r)):
        return {"semiring": semiring.name, "ranks": [m, n], "law": "scalar"}
    return None


def _composition(rng: np.random.Generator, total: int) -> list[int]:
    parts = []
    while total:
        part = min(int(rng.integers(1, 3)), total)
        parts.append(part)
        total -= part
    return parts


def _prefixes(parts: list[int]) -> set[int]:
    return set(itertools.accumulate(parts[:-1]))


def _law_quasi_connected(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, _, _ = _setting(rng)
    size_a, size_b = int(rng.integers(1, 3)), int(rng.integers(1, 3))
    ins = [int(rng.integers(1, 3)) for _ in range(int(rng.integers(1, 3)))]
    outs = _composition(rng, sum(ins))
    while _prefixes(ins) & _prefixes(outs):
        outs = _composition(rng, sum(ins))

    tops = [(hm.random_hypermatrix(semiring, size_a, 1, n, rng),
             hm.random_hypermatrix(semiring, size_b, 1, n, rng)) for n in ins]
    bottoms = [(hm.random_hypermatrix(semiring, size_a, p, 1, rng),
                hm.random_hypermatrix(semiring, size_b, p, 1, rng))
               for p in outs]
    lhs = _hcomp_all([a.quasi_direct_sum(a2) for a, a2 in tops]).vcomp(
        _hcomp_all([b.quasi_direct_sum(b2) for b, b2 in bottoms]))
    rhs = _hcomp_all([a for a, _ in tops]).vcomp(
        _hcomp_all([b for b, _ in bottoms])).quasi_direct_sum(
            _hcomp_all([a2 for _, a2 in tops]).vcomp(
                _hcomp_all([b2 for _, b2 in bottoms])))
    if lhs != rhs:
        return {"semiring": semiring.name, "ins": ins, "outs": outs}
    return None


def _law_eckmann_hilton(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring, size, top = _setting(rng)
    m, n = _ranks(rng, 2, top)
    a = hm.random_hypermatrix(semiring, size, 0, n, rng)
    b = hm.random_hypermatrix(semiring, size, m, 0, rng)
    if not a.hcomp(b) == b.vcomp(a) == b.hcomp(a):
        return {"semiring": semiring.name, "N": size, "ranks": [m, n]}
    return None


def _law_scalars_commute(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    semiring = sr.get(sr.names()[int(rng.integers(len(sr.names())))])
    size = int(rng.integers(1, 4))
    a = hm.random_hypermatrix(semiring, size, 0, 0, rng)
    b = hm.random_hypermatrix(semiring, size, 0, 0, rng)
    if not a.vcomp(b) == b.vcomp(a) == a.hcomp(b) == b.hcomp(a):
        return {"semiring": semiring.name, "N": size,
                "values": [semiring.encode(a.entry([], [])),
                           semiring.encode(b.entry([], []))]}
    return None


def quasi_sum_counterexample() -> tuple[typing.Any, typing.Any]:
    """
    The entry at ([1,2],[1,2]) of (I(1) qsum I(1)) <-> (I(1) qsum I(1)) and of
    (I(1) <-> I(1)) qsum (I(1) <-> I(1)).
    """
    semiring = sr.NATURAL
    unit = hm.identity(semiring, 1, 1)
    summed = unit.quasi_direct_sum(unit)
    first = summed.hcomp(summed)
    second = unit.hcomp(unit).quasi_direct_sum(unit.hcomp(unit))
    return first.entry([1, 2], [1, 2]), second.entry([1, 2], [1, 2])


def check_quasisum(rng: np.random.Generator) -> list[CheckResult]:
    """
    The quasi-direct sum is linear and commutes with vertical composition and with connected
    horizontal arrangements, but not with juxtaposition in general. Scalars commute.
    """
    trials = max(1, conf.check_trials // 2)
    results = [
        _run_law("quasi-sum-vcomp", trials, rng, _law_quasi_vcomp),
        _run_law("quasi-sum-connected", trials, rng, _law_quasi_connected),
        _run_law("quasi-sum-linear", trials, rng, _law_quasi_linear),
        _run_law("eckmann-hilton", trials, rng, _law_eckmann_hilton),
        _run_law("eckmann-hilton-scalars", trials, rng, _law_scalars_commute),
    ]
    first, second = quasi_sum_counterexample()
    results.append(
        CheckResult("quasi-sum-hcomp-counterexample", (first, second) == (1, 0),
                    1, conf.seed,
                    None if (first, second) == (1, 0) else [first, second]))

    mu = rep.random_representation(SMALL_SIGNATURE, 2, sr.NATURAL, rng)
    nu = rep.random_representation(SMALL_SIGNATURE, 1, sr.NATURAL, rng)
    summed = mu.quasi_sum(nu)
    connected = [t for t in small_circuits(4) if cir.is_connected(t)]
    results.append(
        _run_cases(
            "quasi-sum-representation", connected,
            lambda t: summed.evaluate(t) == mu.evaluate(t).quasi_direct_sum(
                nu.evaluate(t))))
    pair = cir.hcomp(cir.WIRE, cir.WIRE)
    disconnected_differs = summed.evaluate(pair) != mu.evaluate(
        pair).quasi_direct_sum(nu.evaluate(pair))
    results.append(
        CheckResult("quasi-sum-disconnected-witness", disconnected_differs, 1,
                    conf.seed,
                    None if disconnected_differs else cir.term_to_json(pair)))
    return results


def worked_path_example(x: typing.Any, x2: typing.Any, y: typing.Any,
                        y2: typing.Any) -> tuple[cir.CircuitTerm,
                                                 rep.Representation]:
    """
    Two copies of a (2,1) chip b side by side on top of a (2,2) chip a, over N = 3, with
    a^{2,3}_{2,3} = x, a^{3,3}_{2,3} = x2, b^{1,3}_2 = y, b^{1,3}_3 = y2 and zeros elsewhere.
    """
    semiring = sr.RATIONAL
    a_decl = cir.ChipDecl("a", 2, 2)
    b_decl = cir.ChipDecl("b", 2, 1)
    signature = cir.Signature([a_decl, b_decl])
    a = hm.compose(semiring, 3, 2, 2, [([2, 3], [2, 3], x), ([3, 3], [2, 3], x2)])
    b = hm.compose(semiring, 3, 2, 1, [([1, 3], [2], y), ([1, 3], [3], y2)])
    mu = rep.Representation(3, semiring, signature, {"a": a, "b": b})
    term = cir.vcomp(cir.hcomp(cir.Chip(b_decl), cir.Chip(b_decl)),
                     cir.Chip(a_decl))
    return term, mu


def _oracle_holds(term: cir.CircuitTerm, mu: rep.Representation) -> bool:
    value = mu.evaluate(term)
    table = paths.path_sum_table(term, mu)
    for out_index, in_index, entry in value.decompose():
        if not mu.semiring.eq(table.pop((out_index, in_index), mu.semiring.zero),
                              entry):
            return False
    return not table


def _law_path_counts(rng: np.random.Generator) -> typing.Optional[typing.Any]:
    size = 2
    p1 = cir.random_term(SMALL_SIGNATURE, rng, int(rng.integers(1, 3)))
    p2 = cir.random_term(SMALL_SIGNATURE, rng, int(rng.integers(1, 3)))
    juxtaposed = cir.hcomp(p1, p2)
    if paths.count_labelings(juxtaposed, size) != paths.count_labelings(
            p1, size) * paths.count_labelings(p2, size):
        return {"rule": "hcomp", "terms": [cir.term_to_json(p1),
                                           cir.term_to_json(p2)]}

    top = cir.random_term(SMALL_SIGNATURE, rng, int(rng.integers(1, 3)),
                          in_arity=p1.out_arity)
    stacked = cir.vcomp(top, p1)
    above = list(paths.enumerate_labelings(top, size))
    below = collections.defaultdict(list)
    for q in paths.enumerate_labelings(p1, size):
        below[q.out_colors].append(q)
    composed = {
        paths.compose_v(q_top, q_bottom)
        for q_top in above for q_bottom in below[q_top.in_colors]
    }
    if composed != set(paths.enumerate_labelings(stacked, size)):
        return {"rule": "vcomp", "terms": [cir.term_to_json(top),
                                           cir.term_to_json(p1)]}
    return None


def check_paths_oracle(rng: np.random.Generator) -> list[CheckResult]:
    """
    Evaluation equals the sum over colored paths, on the circuits small enough for a quick
    run. paths-oracle-exhaustive covers every circuit with at most 5 chips.
    """
    mu2 = rep.random_representation(SMALL_SIGNATURE, 2, sr.NATURAL, rng)
    mu3 = rep.random_representation(SMALL_SIGNATURE, 3, sr.NATURAL, rng)
    results = [
        _run_cases("path-sum-N2", small_circuits(4),
                   lambda t: _oracle_holds(t, mu2)),
        _run_cases("path-sum-N3", small_circuits(3),
                   lambda t: _oracle_holds(t, mu3)),
    ]

    def worked(rng_: np.random.Generator) -> typing.Optional[typing.Any]:
        x, x2, y, y2 = (fractions.Fraction(int(rng_.integers(1, 10)),
                                           int(rng_.integers(1, 5)))
                        for _ in range(4))
        term, mu = worked_path_example(x, x2, y, y2)
        expected = x2 * y2 * y2 + x * y * y2
        oracle = paths.path_sum_oracle(term, mu, [1, 3, 1, 3], [2, 3])
        entry = mu.evaluate(term).entry([1, 3, 1, 3], [2, 3])
        if not oracle == entry == expected:
            return {"values": [str(v) for v in (x, x2, y, y2)]}
        return None

    results.append(_run_law("path-sum-worked-example", 5, rng, worked))
    results.append(
        _run_law("path-composition", max(1, conf.check_trials // 10), rng,
                 _law_path_counts))
    return results


def check_paths_oracle_exhaustive(
        rng: np.random.Generator) -> list[CheckResult]:
    """
    Evaluation equals the sum over colored paths on every circuit with at most 5 chips, for
    N = 1, 2 and 3. Slow: the N = 3 case colors up to a dozen wires per circuit.
    """
    circuits = small_circuits(5)
    l.print_info(f"Comparing {len(circuits)} circuits against their path sums.")
    results = []
    for size in (1, 2, 3):
        mu = rep.random_representation(SMALL_SIGNATURE, size, sr.NATURAL, rng)
        results.append(
            _run_cases(f"path-sum-exhaustive-N{size}", circuits,
                       lambda t, mu=mu: _oracle_holds(t, mu)))
    return results


def _small_boolean_automaton(rng: np.random.Generator) -> aut.ProAutomaton:
    mu = rep.random_representation(SMALL_SIGNATURE, 2, sr.BOOLEAN, rng)
    letters = aut.digits(2)
    return aut.ProAutomaton(
        mu, aut.random_word_automaton(sr.BOOLEAN, 2, letters, rng),
        aut.random_word_automaton(sr.BOOLEAN, 2, letters, rng))


def near_walls() -> list[cir.CircuitTerm]:
    """
    Circuits close to the 8 x 4 wall that aren't walls.
    """
    s = cir.Chip(aut.HALF_BRICK)
    d = cir.Chip(aut.BRICK)
    top, bottom = aut.wall_row(1, 8), aut.wall_row(0, 8)
    found = []
    # One brick of the bottom row split into two half bricks.
    for position in range(1, 4):
        chips = [s, d, d, d, s]
        chips[position:position + 1] = [s, s]
        found.append(cir.vcomp(top, bottom, top, cir.hcomp(*chips)))
    # One brick of the top row split into two half bricks.
    for position in range(4):
        chips = [d, d, d, d]
        chips[position:position + 1] = [s, s]
        found.append(cir.vcomp(cir.hcomp(*chips), bottom, top, bottom))
    # Aligned rows.
    found.append(cir.vcomp(top, top, top, top))
    found.append(cir.vcomp(top, top, bottom, bottom))
    found.append(cir.vcomp(bottom, bottom))
    # Half bricks inside a row.
    found.append(cir.vcomp(top, cir.hcomp(d, s, d, d, s)))
    found.append(cir.vcomp(cir.hcomp(s, d, s, d, d), bottom))
    return found


def check_automata(rng: np.random.Generator) -> list[CheckResult]:
    """
    Word, tree, branching and PRO automata against their direct definitions.
    """
    results = []
    letters = ["a", "b"]
    word_a = aut.random_word_automaton(sr.RATIONAL, 3, letters, rng)
    word_b = aut.random_word_automaton(sr.RATIONAL, 3, letters, rng)
    _, mu_a = aut.word_rep(word_a)
    _, mu_b = aut.word_rep(word_b)
    words = [w for k in range(7) for w in itertools.product(letters, repeat=k)]
    results.append(
        _run_cases(
            "word-behavior", words, lambda w: aut.scalar_value(
                mu_a.evaluate(aut.word_to_circuit(w))) == word_a.
            behavior_coeff(w)))
    summed = mu_a.quasi_sum(mu_b)
    results.append(
        _run_cases(
            "word-sum", words,
            lambda w: aut.scalar_value(summed.evaluate(aut.word_to_circuit(w)))
            == word_a.behavior_coeff(w) + word_b.behavior_coeff(w)))
    multiplied = mu_a.hadamard(mu_b)
    results.append(
        _run_cases(
            "word-hadamard", words, lambda w: aut.scalar_value(
                multiplied.evaluate(aut.word_to_circuit(w))) == word_a.
            behavior_coeff(w) * word_b.behavior_coeff(w)))

    arities = {"a": 2, "b": 0, "c": 0}
    trees = aut.random_tree_automaton(3, arities, rng)
    _, tree_mu = aut.tree_rep(trees)
    results.append(
        _run_cases(
            "tree-acceptance", aut.enumerate_trees(arities, 7),
            lambda t: aut.tree_accepts(trees, t) == aut.tree_rep_accepts(
                tree_mu, t)))

    dfa_a = aut.random_word_automaton(sr.BOOLEAN, 3, aut.digits(2), rng, True)
    dfa_b = aut.random_word_automaton(sr.BOOLEAN, 3, aut.digits(3), rng, True)
    paired = aut.lang_odot(dfa_a, dfa_b, 2, 3)

    def odot_cases():
        for k in range(5):
            for u in itertools.product(range(1, 3), repeat=k):
                for v in itertools.product(range(1, 4), repeat=k):
                    yield u, v

    results.append(
        _run_cases(
            "language-odot", odot_cases(), lambda c: paired.contains(
                [str(x) for x in aut.word_odot(c[0], c[1], 2)]) ==
            (dfa_a.contains([str(x) for x in c[0]]) and dfa_b.contains(
                [str(x) for x in c[1]]))))

    walls = aut.wall_automaton()
    results.append(
        _run_cases("wall-accepted", [aut.wall(8, 4), aut.wall(5, 3)],
                   walls.accepts))
    results.append(
        _run_cases("near-wall-rejected", near_walls(),
                   lambda t: not walls.accepts(t)))

    a = _small_boolean_automaton(rng)
    b = _small_boolean_automaton(rng)
    both = aut.intersect(a, b)
    either = aut.union(a, b)
    circuits = small_circuits(4)
    results.append(
        _run_cases(
            "pro-intersection", circuits,
            lambda t: both.accepts(t) == (a.accepts(t) and b.accepts(t))))
    results.append(
        _run_cases(
            "pro-union", circuits,
            lambda t: either.accepts(t) == (a.accepts(t) or b.accepts(t))))
    results.append(
        _run_cases("pro-literal-acceptance", circuits,
                   lambda t: a.accepts(t) == a.accepts_literal(t)))
    return results


def check_tl(rng: np.random.Generator) -> list[CheckResult]:
    """
    Diagram algebra relations, the standard representation and its traces.
    """
    results = []

    def diagram_cases():
        for n in range(2, 7):
            for i in range(1, n):
                for j in range(1, n):
                    yield n, i, j

    def diagram_holds(c):
        n, i, j = c
        u_i, u_j = tl.u_generator(n, i), tl.u_generator(n, j)
        square = tl.tl_compose(u_i, u_i)
        if square.matching != u_i.matching or square.loops != 1:
            return False
        if abs(i - j) == 1:
            return tl.tl_compose(tl.tl_compose(u_i, u_j), u_i) == u_i
        if abs(i - j) > 1:
            return tl.tl_compose(u_i, u_j) == tl.tl_compose(u_j, u_i)
        return True

    results.append(_run_cases("diagram-relations", diagram_cases(),
                              diagram_holds))

    def rewrite_law(rng_: np.random.Generator) -> typing.Optional[typing.Any]:
        n = int(rng_.integers(2, 6))
        word = [int(rng_.integers(1, n)) for _ in range(int(rng_.integers(0, 5)))]
        term = cir.rewrite(tl.word_term(n, word), rng_, steps=8)
        if tl.reduce_term(term) != tl.word_diagram(n, word):
            return {"n": n, "word": word}
        return None

    results.append(
        _run_law("reduction-invariance", max(1, conf.check_trials // 4), rng,
                 rewrite_law))

    mu = tl.standard_rep()
    try:
        d = tl.check_relations(mu)
        results.append(
            CheckResult("snake-and-loop", d == sr.RationalFunction.variable(), 1,
                        conf.seed))
    except err.SemanticError as e:
        results.append(
            CheckResult("snake-and-loop", False, 1, conf.seed,
                        e.user_facing_msg))
        return results

    results.append(
        _run_cases(
            "representation-square",
            [(n, i) for n in range(2, 4) for i in range(1, n)],
            lambda c: mu.evaluate(tl.word_term(c[0], [c[1], c[1]])) == mu.
            evaluate(tl.u_term(c[0], c[1])).scale(d)))

    def trace_holds(c):
        n, i = c
        two = sr.RATFUNC.from_int(2)
        if i == 0:
            return mu.evaluate(cir.wires(n)).trace() == two**n
        return mu.evaluate(tl.u_term(n, i)).trace() == two**(n - 2) * d

    results.append(
        _run_cases("traces", [(n, i) for n in range(1, 6) for i in range(n)],
                   trace_holds))
    return results


def check_quantum(rng: np.random.Generator) -> list[CheckResult]:
    """
    The CNOT network, unitarity and state application.
    """
    cnot = qg.cnot_matrix()
    bits = list(itertools.product((0, 1), repeat=2))
    results = [
        _run_cases(
            "cnot-formula", itertools.product(bits, bits),
            lambda c: abs(
                cnot.entry([b + 1 for b in c[0]], [b + 1 for b in c[1]]) -
                qg.cnot_formula(c[0], c[1])) <= conf.tolerance),
        _run_cases(
            "unitarity", [qg.hadamard_gate(),
                          qg.cv_gate(), cnot],
            lambda gate: qg.unitarity_residual(gate) < conf.tolerance),
        CheckResult("explicit-contraction", qg.cnot_by_contraction() == cnot, 1,
                    conf.seed),
    ]
    state = qg.basis_state([0, 0]) + qg.basis_state([0, 1])
    expected = qg.basis_state([0, 0]) + qg.basis_state([1, 1])
    results.append(
        CheckResult("cnot-on-state",
                    qg.apply_state(state, cnot).isclose(expected), 1, conf.seed))
    return results


SUITES: dict[str, typing.Callable[[np.random.Generator], list[CheckResult]]] = {
    "pro-axioms": check_pro_axioms,
    "modpro": check_modpro,
    "kronecker": check_kronecker,
    "quasisum": check_quasisum,
    "paths-oracle": check_paths_oracle,
    "paths-oracle-exhaustive": check_paths_oracle_exhaustive,
    "automata": check_automata,
    "tl": check_tl,
    "quantum": check_quantum,
}


def suite_names() -> list[str]:
    """
    Every accepted suite name, "all" included.
    """
    return list(SUITES) + ["all"]


def run_checks(suite: str) -> dict[str, list[CheckResult]]:
    """
    Runs one suite, or every suite for "all".
    """
    if suite == "all":
        selected = list(SUITES)
    elif suite in SUITES:
        selected = [suite]
    else:
        raise err.ParseError(
            f"Unknown suite '{suite}'. Choose one of {', '.join(suite_names())}.")

    report = {}
    for name in selected:
        l.print_info(f"Running suite {name}.")
        results = SUITES[name](np.random.default_rng(conf.seed))
        failed = [r.name for r in results if not r.passed]
        if failed:
            l.print_list(f"Suite {name} has failing laws:", failed)
        else:
            l.print_summary(f"Suite {name}: all {len(results)} laws hold.")
        report[name] = results
    return report
