"""
Automata encoded as representations of free PROs.

Word, tree and branching automata become representations over signatures with a root cap
"bot" (arity (1,0)) and a leaf cap "top" (arity (0,1)). PRO automata (Q, mu, I, J) accept
circuits through a representation and two weighted word automata over the digits 1..N.
"""

import dataclasses
import functools
import itertools
import typing

import numpy as np

import prokit.error as err
import prokit.lib as l
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import represent as rep
from prokit.lib import semiring as sr

BOTTOM = cir.ChipDecl("bot", 1, 0)
TOP = cir.ChipDecl("top", 0, 1)

Word = typing.Sequence[str]


def digits(count: int) -> list[str]:
    """
    The letters "1".."count" of the boundary alphabet of a PRO automaton.
    """
    return [str(i) for i in range(1, count + 1)]


def _kron_vectors(major: np.ndarray, minor: np.ndarray,
                  semiring: sr.Semiring) -> np.ndarray:
    return np.asarray(np.multiply.outer(major, minor),
                      dtype=semiring.dtype).reshape(-1)


def _kron_matrices(major: np.ndarray, minor: np.ndarray,
                   semiring: sr.Semiring) -> np.ndarray:
    # Row p*Q + q of the result pairs row p of major with row q of minor.
    outer = np.asarray(np.multiply.outer(major, minor), dtype=semiring.dtype)
    size = major.shape[0] * minor.shape[0]
    return np.transpose(outer, (0, 2, 1, 3)).reshape(size, size)


def _block_diagonal(a: np.ndarray, b: np.ndarray,
                    semiring: sr.Semiring) -> np.ndarray:
    p, q = a.shape[0], b.shape[0]
    result = semiring.full((p + q, p + q), semiring.zero)
    result[:p, :p] = a
    result[p:, p:] = b
    return result


class WordAutomaton:
    """
    A weighted word automaton (lambda, rho, gamma) with N states.

    The behavior coefficient of a word w = a_1...a_n is lambda * rho(a_1) * ... * rho(a_n) * gamma.
    """

    def __init__(self, semiring: sr.Semiring, initial: typing.Sequence[typing.Any],
                 transitions: typing.Mapping[str, typing.Any],
                 final: typing.Sequence[typing.Any]):
        size = len(initial)
        if size < 1:
            raise err.ShapeError("A word automaton needs at least one state.")
        if len(final) != size:
            raise err.ShapeError(
                f"The initial vector has {size} states but the final vector has {len(final)}."
            )
        self.semiring = semiring
        self.initial = semiring.array(list(initial), (size, ))
        self.final = semiring.array(list(final), (size, ))
        self._transitions: dict[str, np.ndarray] = {}
        for letter, matrix in transitions.items():
            rows = [list(row) for row in matrix]
            if len(rows) != size or any(len(row) != size for row in rows):
                raise err.ShapeError(
                    f"The transition matrix of '{letter}' must be {size}x{size}.")
            self._transitions[str(letter)] = semiring.array(
                [v for row in rows for v in row], (size, size))

    @property
    def size(self) -> int:
        """
        Number of states.
        """
        return self.initial.shape[0]

    @property
    def alphabet(self) -> list[str]:
        """
        Letters with a transition matrix.
        """
        return list(self._transitions)

    def transition(self, letter: str, strict: bool = True) -> np.ndarray:
        """
        The matrix rho(letter); zero for letters outside the alphabet unless strict.
        """
        if letter in self._transitions:
            return self._transitions[letter]
        if strict:
            raise err.SemanticError(f"Letter '{letter}' isn't in the alphabet.")
        return self.semiring.full((self.size, self.size), self.semiring.zero)

    def behavior_coeff(self, word: Word, strict: bool = True) -> typing.Any:
        """
        The coefficient of word in the behavior series.
        """
        vector = self.initial
        for letter in word:
            vector = np.asarray(np.dot(vector, self.transition(letter, strict)),
                                dtype=self.semiring.dtype)
        return self.semiring.scalar(np.dot(vector, self.final))

    def contains(self, word: Word) -> bool:
        """
        True if word has a non-zero coefficient.
        """
        return not self.semiring.is_zero(self.behavior_coeff(word, strict=False))

    def with_alphabet(self, letters: typing.Iterable[str]) -> "WordAutomaton":
        """
        The same automaton, with zero matrices for the given letters it lacks.
        """
        transitions = dict(self._transitions)
        for letter in letters:
            if letter not in transitions:
                transitions[letter] = self.transition(letter, strict=False)
        return WordAutomaton(self.semiring, self.initial, transitions,
                             self.final)

    def to_json(self) -> dict[str, typing.Any]:
        """
        The word automaton file form.
        """
        encode = self.semiring.encode
        return {
            "semiring": self.semiring.name,
            "lambda": [encode(v) for v in self.initial],
            "rho": {
                letter: [[encode(v) for v in row] for row in matrix]
                for letter, matrix in self._transitions.items()
            },
            "gamma": [encode(v) for v in self.final],
        }

    @staticmethod
    def from_json(data: typing.Any,
                  semiring: typing.Optional[sr.Semiring] = None) -> "WordAutomaton":
        """
        Reads a word automaton file. An explicit semiring wins over the file's tag.
        """
        l.require_keys(data, ["lambda", "rho", "gamma"], "word automaton")
        if semiring is None:
            semiring = sr.get(data.get("semiring"))
        if not isinstance(data["rho"], dict):
            raise err.ParseError("'rho' must map letters to matrices.")
        try:
            initial = [semiring.decode(v) for v in data["lambda"]]
            final = [semiring.decode(v) for v in data["gamma"]]
            transitions = {
                letter: [[semiring.decode(v) for v in row] for row in matrix]
                for letter, matrix in data["rho"].items()
            }
        except TypeError as e:
            raise err.ParseError("Malformed word automaton.") from e
        return WordAutomaton(semiring, initial, transitions, final)

    def __repr__(self) -> str:
        return f"WordAutomaton({self.size} states, {self.alphabet}, {self.semiring.name})"


def series(automaton: WordAutomaton,
           max_len: int) -> dict[tuple[str, ...], typing.Any]:
    """
    The behavior coefficients of all words of length at most max_len.
    """
    return {
        word: automaton.behavior_coeff(word)
        for length in range(max_len + 1)
        for word in itertools.product(automaton.alphabet, repeat=length)
    }


def _merged_alphabet(a: WordAutomaton, b: WordAutomaton) -> list[str]:
    return a.alphabet + [x for x in b.alphabet if x not in a.alphabet]


def word_sum(a: WordAutomaton, b: WordAutomaton) -> WordAutomaton:
    """
    Disjoint union; coefficients add.
    """
    if a.semiring != b.semiring:
        raise err.SemanticError("Can't add automata over different semirings.")
    semiring = a.semiring
    letters = _merged_alphabet(a, b)
    return WordAutomaton(
        semiring, np.concatenate([a.initial, b.initial]), {
            x: _block_diagonal(a.transition(x, False), b.transition(x, False),
                               semiring)
            for x in letters
        }, np.concatenate([a.final, b.final]))


def word_hadamard(a: WordAutomaton, b: WordAutomaton) -> WordAutomaton:
    """
    Product automaton on state pairs, b's state major; coefficients multiply.
    """
    if a.semiring != b.semiring:
        raise err.SemanticError(
            "Can't multiply automata over different semirings.")
    semiring = a.semiring
    return WordAutomaton(
        semiring, _kron_vectors(b.initial, a.initial, semiring), {
            x: _kron_matrices(b.transition(x, False), a.transition(x, False),
                              semiring)
            for x in _merged_alphabet(a, b)
        }, _kron_vectors(b.final, a.final, semiring))


def shift_letters(automaton: WordAutomaton, shift: int) -> WordAutomaton:
    """
    Renames every digit letter i to i + shift.
    """
    try:
        transitions = {
            str(int(x) + shift): automaton.transition(x)
            for x in automaton.alphabet
        }
    except ValueError as e:
        raise err.SemanticError("Only digit letters can be shifted.") from e
    return WordAutomaton(automaton.semiring, automaton.initial, transitions,
                         automaton.final)


def universal(semiring: sr.Semiring, alphabet: Word) -> WordAutomaton:
    """
    Coefficient one on every word.
    """
    one = semiring.one
    return WordAutomaton(semiring, [one], {x: [[one]] for x in alphabet},
                         [one])


def empty_language(semiring: sr.Semiring, alphabet: Word) -> WordAutomaton:
    """
    Coefficient zero on every word.
    """
    return WordAutomaton(semiring, [semiring.one],
                         {x: [[semiring.one]] for x in alphabet},
                         [semiring.zero])


def epsilon_only(semiring: sr.Semiring, alphabet: Word) -> WordAutomaton:
    """
    Coefficient one on the empty word, zero elsewhere.
    """
    return WordAutomaton(semiring, [semiring.one],
                         {x: [[semiring.zero]] for x in alphabet},
                         [semiring.one])


def non_empty(semiring: sr.Semiring, alphabet: Word) -> WordAutomaton:
    """
    Coefficient one on every non-empty word.
    """
    zero, one = semiring.zero, semiring.one
    return WordAutomaton(semiring, [one, zero],
                         {x: [[zero, one], [zero, one]] for x in alphabet},
                         [zero, one])


def singleton(semiring: sr.Semiring, word: Word,
              alphabet: Word) -> WordAutomaton:
    """
    Coefficient one on word only.
    """
    size = len(word) + 1
    zero, one = semiring.zero, semiring.one
    transitions = {}
    for x in alphabet:
        matrix = [[zero] * size for _ in range(size)]
        for position, letter in enumerate(word):
            if letter == x:
                matrix[position][position + 1] = one
        transitions[x] = matrix
    return WordAutomaton(semiring, [one] + [zero] * (size - 1), transitions,
                         [zero] * (size - 1) + [one])


def random_word_automaton(semiring: sr.Semiring,
                          states: int,
                          alphabet: Word,
                          rng: np.random.Generator,
                          deterministic: bool = False) -> WordAutomaton:
    """
    A random automaton. Deterministic ones are complete, start in state 1 and have 0/1
    weights.
    """
    zero, one = semiring.zero, semiring.one
    if not deterministic:
        return WordAutomaton(
            semiring, [semiring.random_element(rng) for _ in range(states)], {
                x: [[semiring.random_element(rng) for _ in range(states)]
                    for _ in range(states)] for x in alphabet
            }, [semiring.random_element(rng) for _ in range(states)])

    transitions = {}
    for x in alphabet:
        matrix = [[zero] * states for _ in range(states)]
        for p in range(states):
            matrix[p][int(rng.integers(states))] = one
        transitions[x] = matrix
    final = [one if rng.integers(2) else zero for _ in range(states)]
    return WordAutomaton(semiring, [one] + [zero] * (states - 1), transitions,
                         final)


def word_signature(alphabet: Word) -> cir.Signature:
    """
    The caps plus one (1,1) chip per letter.
    """
    if BOTTOM.name in alphabet or TOP.name in alphabet:
        raise err.SemanticError(
            f"Letters can't be named '{BOTTOM.name}' or '{TOP.name}'.")
    return cir.Signature([BOTTOM, TOP] +
                         [cir.ChipDecl(x, 1, 1) for x in alphabet])


def word_rep(
        automaton: WordAutomaton) -> tuple[cir.Signature, rep.Representation]:
    """
    The representation with mu(bot) = lambda, mu(top) = gamma and mu(a) the transpose of
    rho(a), so that a word circuit evaluates to its behavior coefficient.
    """
    semiring = automaton.semiring
    size = automaton.size
    signature = word_signature(automaton.alphabet)
    assignments = {
        BOTTOM.name: hm.Hypermatrix(semiring, size, 1, 0, automaton.initial),
        TOP.name: hm.Hypermatrix(semiring, size, 0, 1, automaton.final),
    }
    for x in automaton.alphabet:
        assignments[x] = hm.Hypermatrix(semiring, size, 1, 1,
                                        automaton.transition(x).T)
    return signature, rep.Representation(size, semiring, signature,
                                         assignments)


def word_to_circuit(word: Word) -> cir.CircuitTerm:
    """
    top, then the letters from last to first, then bot, stacked top to bottom.
    """
    letters = [cir.Chip(cir.ChipDecl(x, 1, 1)) for x in reversed(list(word))]
    return cir.vcomp(cir.Chip(TOP), *letters, cir.Chip(BOTTOM))


def scalar_value(value: hm.Hypermatrix) -> typing.Any:
    """
    The single entry of an element of K(N,0,0).
    """
    return value.entry((), ())


@dataclasses.dataclass(frozen=True)
class Tree:
    """
    A ranked tree. A None child is a hole, closed by the leaf cap when evaluated.
    """

    letter: str
    children: tuple[typing.Optional["Tree"], ...] = ()

    def size(self) -> int:
        """
        Number of letter nodes.
        """
        return 1 + sum(child.size() for child in self.children
                       if child is not None)

    def holes(self) -> int:
        """
        Number of holes.
        """
        return sum(1 if child is None else child.holes()
                   for child in self.children)

    def to_json(self) -> typing.Any:
        """
        {"letter": .., "children": [..]} with null for holes.
        """
        return {
            "letter": self.letter,
            "children": [
                None if child is None else child.to_json()
                for child in self.children
            ]
        }

    @staticmethod
    def from_json(data: typing.Any) -> "Tree":
        """
        Reads a tree written by to_json.
        """
        l.require_keys(data, ["letter"], "tree")
        children = tuple(None if child is None else Tree.from_json(child)
                         for child in data.get("children", []))
        return Tree(str(data["letter"]), children)

    def __str__(self) -> str:
        if not self.children:
            return self.letter
        inner = ",".join("_" if child is None else str(child)
                         for child in self.children)
        return f"{self.letter}({inner})"


class TreeAutomaton:
    """
    A bottom-up tree automaton (Q, Sigma, delta, F) with states 1..N.
    """

    def __init__(self, states: int, arities: typing.Mapping[str, int],
                 transitions: typing.Mapping[tuple[str, tuple[int, ...]],
                                             typing.Iterable[int]],
                 finals: typing.Iterable[int]):
        if states < 1:
            raise err.ShapeError("A tree automaton needs at least one state.")
        self.states = states
        self.arities = dict(arities)
        self.transitions: dict[tuple[str, tuple[int, ...]], frozenset[int]] = {}
        for (letter, children), targets in transitions.items():
            if letter not in self.arities:
                raise err.SemanticError(f"Letter '{letter}' has no rank.")
            if len(children) != self.arities[letter]:
                raise err.ShapeError(
                    f"Letter '{letter}' has rank {self.arities[letter]} but a transition reads {len(children)} states."
                )
            targets = frozenset(targets)
            self._check_states(tuple(children) + tuple(targets))
            key = (letter, tuple(children))
            self.transitions[key] = self.transitions.get(key,
                                                         frozenset()) | targets
        self.finals = frozenset(finals)
        self._check_states(tuple(self.finals))

    def _check_states(self, states: typing.Iterable[int]):
        for q in states:
            if not 1 <= q <= self.states:
                raise err.ShapeError(f"State {q} is outside 1..{self.states}.")

    def delta(self, letter: str, children: tuple[int, ...]) -> frozenset[int]:
        """
        delta(letter, q_1..q_k).
        """
        return self.transitions.get((letter, children), frozenset())

    def to_json(self) -> dict[str, typing.Any]:
        """
        The tree automaton file form.
        """
        return {
            "states": self.states,
            "arities": self.arities,
            "delta": [{
                "letter": letter,
                "children": list(children),
                "to": q
            } for (letter, children), targets in self.transitions.items()
                      for q in sorted(targets)],
            "finals": sorted(self.finals),
        }

    @staticmethod
    def from_json(data: typing.Any) -> "TreeAutomaton":
        """
        Reads a tree automaton file.
        """
        l.require_keys(data, ["states", "arities", "delta", "finals"],
                       "tree automaton")
        transitions: dict[tuple[str, tuple[int, ...]], set[int]] = {}
        for item in data["delta"]:
            l.require_keys(item, ["letter", "children", "to"], "transition")
            key = (str(item["letter"]), tuple(int(q) for q in item["children"]))
            transitions.setdefault(key, set()).add(int(item["to"]))
        return TreeAutomaton(
            l.require_int(data["states"], "states", 1),
            {str(k): l.require_int(v, "rank")
             for k, v in data["arities"].items()}, transitions,
            [int(q) for q in data["finals"]])


def tree_delta_star(automaton: TreeAutomaton,
                    tree: typing.Optional[Tree]) -> frozenset[int]:
    """
    The set of states reachable at the root of tree. A hole reaches every state.
    """
    if tree is None:
        return frozenset(range(1, automaton.states + 1))
    if tree.letter not in automaton.arities:
        raise err.SemanticError(f"Letter '{tree.letter}' isn't in the alphabet.")
    if len(tree.children) != automaton.arities[tree.letter]:
        raise err.SemanticError(
            f"Letter '{tree.letter}' has rank {automaton.arities[tree.letter]} but {len(tree.children)} children."
        )
    child_sets = [tree_delta_star(automaton, child) for child in tree.children]
    reached: set[int] = set()
    for combo in itertools.product(*child_sets):
        reached |= automaton.delta(tree.letter, combo)
    return frozenset(reached)


def tree_accepts(automaton: TreeAutomaton, tree: Tree) -> bool:
    """
    True if some run ends in a final state at the root.
    """
    return bool(tree_delta_star(automaton, tree) & automaton.finals)


def tree_signature(automaton: TreeAutomaton) -> cir.Signature:
    """
    The caps plus a chip of arity (rank, 1) per letter.
    """
    return cir.Signature(
        [BOTTOM, TOP] +
        [cir.ChipDecl(x, rank, 1) for x, rank in automaton.arities.items()])


def tree_rep(
        automaton: TreeAutomaton) -> tuple[cir.Signature, rep.Representation]:
    """
    The boolean representation with mu(a)^{q_1..q_k}_q = [q in delta(a, q_1..q_k)], the root
    cap carrying F and the leaf cap all ones.
    """
    semiring = sr.BOOLEAN
    size = automaton.states
    signature = tree_signature(automaton)

    finals = semiring.full((size, ), False)
    for q in automaton.finals:
        finals[q - 1] = True
    assignments = {
        BOTTOM.name: hm.Hypermatrix(semiring, size, 1, 0, finals),
        TOP.name: hm.Hypermatrix(semiring, size, 0, 1,
                                 semiring.full((size, ), True)),
    }
    for letter, rank in automaton.arities.items():
        array = semiring.full((size, ) * (rank + 1), False)
        for (x, children), targets in automaton.transitions.items():
            if x != letter:
                continue
            for q in targets:
                array[tuple(c - 1 for c in children) + (q - 1, )] = True
        assignments[letter] = hm.Hypermatrix(semiring, size, rank, 1, array)
    return signature, rep.Representation(size, semiring, signature,
                                         assignments)


def tree_term(tree: Tree) -> cir.CircuitTerm:
    """
    The circuit of a tree with its holes left open as outputs; arity (holes, 1).
    """
    parts = [
        cir.WIRE if child is None else tree_term(child)
        for child in tree.children
    ]
    return cir.vcomp(cir.hcomp(*parts),
                     cir.Chip(cir.ChipDecl(tree.letter, len(tree.children),
                                           1)))


def tree_to_circuit(tree: Tree) -> cir.CircuitTerm:
    """
    Closes tree_term with leaf caps on the holes and the root cap below.
    """
    caps = [cir.Chip(TOP)] * tree.holes()
    return cir.vcomp(cir.hcomp(*caps), tree_term(tree), cir.Chip(BOTTOM))


def tree_rep_accepts(mu: rep.Representation, tree: Tree) -> bool:
    """
    Acceptance read off the evaluated tree circuit.
    """
    return not mu.semiring.is_zero(scalar_value(mu.evaluate(
        tree_to_circuit(tree))))


def _compositions(total: int, parts: int) -> typing.Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, ) + rest


def enumerate_trees(arities: typing.Mapping[str, int],
                    max_nodes: int) -> list[Tree]:
    """
    All trees without holes with at most max_nodes nodes, by increasing size.
    """

    @functools.lru_cache(maxsize=None)
    def of_size(nodes: int) -> tuple[Tree, ...]:
        found = []
        for letter, rank in arities.items():
            if rank == 0:
                if nodes == 1:
                    found.append(Tree(letter))
                continue
            for sizes in _compositions(nodes - 1, rank):
                for children in itertools.product(*(of_size(s) for s in sizes)):
                    found.append(Tree(letter, tuple(children)))
        return tuple(found)

    return [tree for nodes in range(1, max_nodes + 1) for tree in of_size(nodes)]


def random_tree_automaton(states: int, arities: typing.Mapping[str, int],
                          rng: np.random.Generator,
                          density: float = 0.3) -> TreeAutomaton:
    """
    Every transition target and every final state is drawn independently.
    """
    transitions = {}
    for letter, rank in arities.items():
        for children in itertools.product(range(1, states + 1), repeat=rank):
            targets = [q for q in range(1, states + 1) if rng.random() < density]
            if targets:
                transitions[(letter, children)] = targets
    finals = [q for q in range(1, states + 1) if rng.random() < 0.5]
    return TreeAutomaton(states, arities, transitions, finals)


def fork_decl(width: int) -> cir.ChipDecl:
    """
    The fork chip with width branches, arity (width, 1).
    """
    return cir.ChipDecl(f"fork{width}", width, 1)


def join_decl(width: int) -> cir.ChipDecl:
    """
    The join chip with width branches, arity (1, width).
    """
    return cir.ChipDecl(f"join{width}", 1, width)


@dataclasses.dataclass(frozen=True)
class BranchingAutomaton:
    """
    States 1..N with sequential, fork and join transitions. Fork and join multisets are
    stored as sorted tuples of size at least 2.
    """

    states: int
    alphabet: tuple[str, ...]
    sequential: frozenset[tuple[int, str, int]]
    forks: frozenset[tuple[int, tuple[int, ...]]]
    joins: frozenset[tuple[tuple[int, ...], int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "sequential", frozenset(self.sequential))
        object.__setattr__(
            self, "forks",
            frozenset((p, tuple(sorted(ms))) for p, ms in self.forks))
        object.__setattr__(
            self, "joins",
            frozenset((tuple(sorted(ms)), q) for ms, q in self.joins))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))

        for _, ms in self.forks:
            if len(ms) < 2:
                raise err.ShapeError("Fork multisets need at least two states.")
        for ms, _ in self.joins:
            if len(ms) < 2:
                raise err.ShapeError("Join multisets need at least two states.")
        for p, letter, q in self.sequential:
            if letter not in self.alphabet:
                raise err.SemanticError(f"Letter '{letter}' isn't in the alphabet.")

    def widths(self) -> list[int]:
        """
        The fork and join widths in use; binary ones are always present.
        """
        found = {2}
        found.update(len(ms) for _, ms in self.forks)
        found.update(len(ms) for ms, _ in self.joins)
        return sorted(found)


def branching_signature(automaton: BranchingAutomaton) -> cir.Signature:
    """
    Caps, letters and a fork and a join chip per width.
    """
    decls = [BOTTOM, TOP] + [cir.ChipDecl(x, 1, 1) for x in automaton.alphabet]
    for width in automaton.widths():
        decls += [fork_decl(width), join_decl(width)]
    return cir.Signature(decls)


def branching_rep(
    automaton: BranchingAutomaton
) -> tuple[cir.Signature, rep.Representation]:
    """
    The boolean representation of a branching automaton. Fork and join hypermatrices are
    symmetric under permutations of their multi-index.
    """
    semiring = sr.BOOLEAN
    size = automaton.states
    signature = branching_signature(automaton)

    def indicator(states: typing.Iterable[int]) -> np.ndarray:
        vector = semiring.full((size, ), False)
        for q in states:
            vector[q - 1] = True
        return vector

    assignments = {
        BOTTOM.name: hm.Hypermatrix(semiring, size, 1, 0,
                                    indicator(automaton.initial)),
        TOP.name: hm.Hypermatrix(semiring, size, 0, 1,
                                 indicator(automaton.final)),
    }
    for x in automaton.alphabet:
        array = semiring.full((size, size), False)
        for p, letter, q in automaton.sequential:
            if letter == x:
                array[q - 1, p - 1] = True
        assignments[x] = hm.Hypermatrix(semiring, size, 1, 1, array)

    for width in automaton.widths():
        forks = semiring.full((size, ) * (width + 1), False)
        for p, ms in automaton.forks:
            if len(ms) == width:
                for perm in set(itertools.permutations(ms)):
                    forks[tuple(q - 1 for q in perm) + (p - 1, )] = True
        assignments[fork_decl(width).name] = hm.Hypermatrix(
            semiring, size, width, 1, forks)

        joins = semiring.full((size, ) * (width + 1), False)
        for ms, q in automaton.joins:
            if len(ms) == width:
                for perm in set(itertools.permutations(ms)):
                    joins[(q - 1, ) + tuple(p - 1 for p in perm)] = True
        assignments[join_decl(width).name] = hm.Hypermatrix(
            semiring, size, 1, width, joins)
    return signature, rep.Representation(size, semiring, signature,
                                         assignments)


def letter_term(letter: str) -> cir.CircuitTerm:
    """
    A single letter as a (1,1) chip.
    """
    return cir.Chip(cir.ChipDecl(letter, 1, 1))


def sequential_term(*parts: cir.CircuitTerm) -> cir.CircuitTerm:
    """
    The parts in reading order, the first one at the bottom.
    """
    if not parts:
        return cir.WIRE
    return cir.vcomp(*reversed(parts))


def parallel_term(*parts: cir.CircuitTerm) -> cir.CircuitTerm:
    """
    A fork into the parts, side by side, and a join back.
    """
    if len(parts) == 1:
        return parts[0]
    if not parts:
        raise err.ShapeError("A parallel composition needs at least one part.")
    width = len(parts)
    return cir.vcomp(cir.Chip(join_decl(width)), cir.hcomp(*parts),
                     cir.Chip(fork_decl(width)))


def branching_accepts(mu: rep.Representation, term: cir.CircuitTerm) -> bool:
    """
    True if the (1,1) circuit between the caps evaluates to a non-zero scalar.
    """
    if term.arity != (1, 1):
        raise err.ShapeError(
            f"Branching automata read (1,1) circuits, got {term.arity}.")
    closed = cir.vcomp(cir.Chip(TOP), term, cir.Chip(BOTTOM))
    return not mu.semiring.is_zero(scalar_value(mu.evaluate(closed)))


def balanced_branching_automaton() -> BranchingAutomaton:
    """
    Accepts nested parallel compositions pairing every a with a b.
    """
    return BranchingAutomaton(
        states=6,
        alphabet=("a", "b"),
        sequential=frozenset({(2, "a", 4), (3, "b", 5)}),
        forks=frozenset({(1, (1, 1)), (1, (2, 3))}),
        joins=frozenset({((6, 6), 6), ((4, 5), 6)}),
        initial=frozenset({1}),
        final=frozenset({1, 6}),
    )


def in_matrix(word: typing.Sequence[int],
              base_dim: int,
              semiring: sr.Semiring = sr.BOOLEAN) -> hm.Hypermatrix:
    """
    IN_w = E(N,k,0;w,[]), plugged below a circuit to feed its inputs.
    """
    return hm.basis_e(semiring, base_dim, len(word), 0, word, [])


def out_matrix(word: typing.Sequence[int],
               base_dim: int,
               semiring: sr.Semiring = sr.BOOLEAN) -> hm.Hypermatrix:
    """
    OUT_w = E(N,0,k;[],w), plugged above a circuit to read its outputs.
    """
    return hm.basis_e(semiring, base_dim, 0, len(word), [], word)


def word_odot(u: typing.Sequence[int], v: typing.Sequence[int],
              modulus: int) -> list[int]:
    """
    Letterwise (v_i - 1) * modulus + u_i, for u over [modulus].
    """
    if len(u) != len(v):
        raise err.ShapeError(
            f"Can't pair words of lengths {len(u)} and {len(v)}.")
    for letter in u:
        if not 1 <= letter <= modulus:
            raise err.ShapeError(f"Letter {letter} is outside 1..{modulus}.")
    return [(b - 1) * modulus + a for a, b in zip(u, v)]


def lang_odot(a: WordAutomaton, b: WordAutomaton, size_a: int,
              size_b: int) -> WordAutomaton:
    """
    The automaton over [size_a * size_b] with coefficient a(u) * b(v) on the word u odot v.
    """
    if a.semiring != b.semiring:
        raise err.SemanticError(
            "Can't combine automata over different semirings.")
    semiring = a.semiring
    transitions = {}
    for letter in range(1, size_a * size_b + 1):
        (r, ), (q, ) = hm.mod_div([letter], size_a)
        transitions[str(letter)] = _kron_matrices(
            b.transition(str(q), False), a.transition(str(r), False), semiring)
    return WordAutomaton(semiring, _kron_vectors(b.initial, a.initial, semiring),
                         transitions, _kron_vectors(b.final, a.final, semiring))


class ProAutomaton:
    """
    A PRO automaton (Q, mu, I, J): mu represents the circuits, I weighs output words and J
    weighs input words, both over the digits 1..N.
    """

    def __init__(self, mu: rep.Representation, initial: WordAutomaton,
                 final: WordAutomaton):
        for automaton in (initial, final):
            if automaton.semiring != mu.semiring:
                raise err.SemanticError(
                    f"Boundary automaton over {automaton.semiring.name} doesn't match the representation over {mu.semiring.name}."
                )
            extra = set(automaton.alphabet) - set(digits(mu.base_dim))
            if extra:
                raise err.SemanticError(
                    f"Boundary letters {sorted(extra)} are outside 1..{mu.base_dim}."
                )
        self.mu = mu
        self.initial = initial
        self.final = final

    @property
    def base_dim(self) -> int:
        """
        N, the number of states.
        """
        return self.mu.base_dim

    @property
    def semiring(self) -> sr.Semiring:
        """
        The semiring of the weights.
        """
        return self.mu.semiring

    @property
    def signature(self) -> cir.Signature:
        """
        The chips the automaton reads.
        """
        return self.mu.signature

    def boundary_weights(self, automaton: WordAutomaton,
                         length: int) -> np.ndarray:
        """
        The tensor over [N]^length holding the coefficient of every boundary word, built by
        length synchronized steps of automaton.
        """
        semiring = self.semiring
        stacked = np.stack([
            automaton.transition(x, strict=False)
            for x in digits(self.base_dim)
        ])
        forward = automaton.initial
        for _ in range(length):
            forward = np.asarray(np.tensordot(forward,
                                              stacked,
                                              axes=([forward.ndim - 1], [1])),
                                 dtype=semiring.dtype)
        return np.asarray(np.tensordot(forward,
                                       automaton.final,
                                       axes=([forward.ndim - 1], [0])),
                          dtype=semiring.dtype)

    def weighted_accept(self, term: cir.CircuitTerm) -> typing.Any:
        """
        The sum over u, v of I(u) * J(v) * mu(term)^u_v.
        """
        m, n = term.arity
        outputs = self.boundary_weights(self.initial, m)
        inputs = self.boundary_weights(self.final, n)
        pushed = self.mu.apply(term, inputs)
        total = np.tensordot(outputs, pushed, axes=m)
        return self.semiring.scalar(np.asarray(total)[()])

    def accepts(self, term: cir.CircuitTerm) -> bool:
        """
        True if the weighted acceptance is non-zero.
        """
        return not self.semiring.is_zero(self.weighted_accept(term))

    def accepts_literal(self, term: cir.CircuitTerm) -> bool:
        """
        Acceptance by enumerating boundary words: some u in I and v in J with
        OUT_u above mu(term) above IN_v non-zero.
        """
        semiring = self.semiring
        size = self.base_dim
        value = self.mu.evaluate(term)
        m, n = term.arity
        letters = range(1, size + 1)
        for u in itertools.product(letters, repeat=m):
            if not self.initial.contains([str(x) for x in u]):
                continue
            above = out_matrix(u, size, semiring).vcomp(value)
            for v in itertools.product(letters, repeat=n):
                if not self.final.contains([str(x) for x in v]):
                    continue
                entry = scalar_value(above.vcomp(in_matrix(v, size, semiring)))
                if not semiring.is_zero(entry):
                    return True
        return False

    def to_json(self) -> dict[str, typing.Any]:
        """
        The PRO automaton file form.
        """
        return {
            "N": self.base_dim,
            "mu": self.mu.to_json(),
            "I": self.initial.to_json(),
            "J": self.final.to_json(),
        }

    @staticmethod
    def from_json(data: typing.Any) -> "ProAutomaton":
        """
        Reads a PRO automaton file.
        """
        l.require_keys(data, ["N", "mu", "I", "J"], "PRO automaton")
        mu = rep.Representation.from_json(data["mu"])
        if mu.base_dim != l.require_int(data["N"], "N", 1):
            raise err.ShapeError(
                f"The representation has N={mu.base_dim}, the file says {data['N']}."
            )
        return ProAutomaton(mu,
                            WordAutomaton.from_json(data["I"], mu.semiring),
                            WordAutomaton.from_json(data["J"], mu.semiring))

    def __repr__(self) -> str:
        return f"ProAutomaton(N={self.base_dim}, {self.signature.names()}, {self.semiring.name})"


def intersect(a: ProAutomaton, b: ProAutomaton) -> ProAutomaton:
    """
    (NN', mu Hadamard mu', I odot I', J odot J'). Accepts the intersection of the
    languages; weights multiply.
    """
    mu = a.mu.hadamard(b.mu)
    return ProAutomaton(
        mu, lang_odot(a.initial, b.initial, a.base_dim, b.base_dim),
        lang_odot(a.final, b.final, a.base_dim, b.base_dim))


def union(a: ProAutomaton, b: ProAutomaton) -> ProAutomaton:
    """
    (N+N', mu quasi-sum mu', I + shifted I', J + shifted J') with the empty word handled
    apart. Boolean automata over pluggable signatures only.
    """
    if a.semiring != sr.BOOLEAN or b.semiring != sr.BOOLEAN:
        raise err.SemanticError("Union is only defined for boolean automata.")
    if not a.signature.pluggable:
        raise err.SemanticError(
            "Union needs a signature whose chips all have inputs and outputs.")
    mu = a.mu.quasi_sum(b.mu)
    semiring = sr.BOOLEAN
    letters = digits(a.base_dim + b.base_dim)
    # The empty circuit is the only one with empty boundary words.
    with_empty = (a.initial.contains([]) and a.final.contains([])) or (
        b.initial.contains([]) and b.final.contains([]))

    def side(mine: WordAutomaton, theirs: WordAutomaton) -> WordAutomaton:
        parts = [
            word_hadamard(mine, non_empty(semiring, digits(a.base_dim))),
            shift_letters(
                word_hadamard(theirs, non_empty(semiring,
                                                digits(b.base_dim))),
                a.base_dim),
        ]
        if with_empty:
            parts.append(epsilon_only(semiring, letters))
        return functools.reduce(word_sum, parts).with_alphabet(letters)

    return ProAutomaton(mu, side(a.initial, b.initial), side(a.final, b.final))


def all_accepting(signature: cir.Signature,
                  semiring: sr.Semiring = sr.BOOLEAN) -> ProAutomaton:
    """
    The 1-state automaton accepting every circuit.
    """
    return ProAutomaton(rep.trivial_representation(signature, semiring),
                        universal(semiring, digits(1)),
                        universal(semiring, digits(1)))


HALF_BRICK = cir.ChipDecl("s", 1, 1)
BRICK = cir.ChipDecl("d", 2, 2)

# Wire states: 1 left edge, 2 left interior, 3 right interior, 4 right edge of a brick top,
# 5 and 6 the tops of the left and right half bricks.
_BRICK_MOVES = {(3, 2): (2, 3), (3, 6): (2, 4), (5, 2): (1, 3), (5, 6): (1, 4)}
_HALF_BRICK_MOVES = {1: 5, 4: 6}

# Row tops: 5 (2 3)* 6, 5 (2 3)* 2 4, 1 (3 2)* 4 and 1 3 (2 3)* 6.
_ROW_STEPS = {
    "1": [(1, 4)],
    "2": [(2, 3), (5, 6)],
    "3": [(3, 2), (4, 5), (6, 5)],
    "4": [(3, 7), (4, 7), (6, 7)],
    "5": [(1, 2)],
    "6": [(2, 7), (5, 7)],
}


def wall_row_language() -> WordAutomaton:
    """
    The boolean DFA of the words seen on top of a brick row of width at least 2.
    """
    semiring = sr.BOOLEAN
    transitions = {}
    for letter, steps in _ROW_STEPS.items():
        matrix = [[False] * 7 for _ in range(7)]
        for p, q in steps:
            matrix[p - 1][q - 1] = True
        transitions[letter] = matrix
    return WordAutomaton(semiring, [True] + [False] * 6, transitions,
                         [False] * 6 + [True])


def wall_automaton() -> ProAutomaton:
    """
    Accepts the brick walls of width at least 2 built from half bricks s and bricks d.
    """
    semiring = sr.BOOLEAN
    signature = cir.Signature([HALF_BRICK, BRICK])
    half = semiring.full((6, 6), False)
    for p, q in _HALF_BRICK_MOVES.items():
        half[q - 1, p - 1] = True
    brick = semiring.full((6, 6, 6, 6), False)
    for (p1, p2), (q1, q2) in _BRICK_MOVES.items():
        brick[q1 - 1, q2 - 1, p1 - 1, p2 - 1] = True
    mu = rep.Representation(
        6, semiring, signature, {
            HALF_BRICK.name: hm.Hypermatrix(semiring, 6, 1, 1, half),
            BRICK.name: hm.Hypermatrix(semiring, 6, 2, 2, brick),
        })
    rows = wall_row_language()
    return ProAutomaton(mu, rows, rows)


def wall_row(parity: int, width: int) -> cir.CircuitTerm:
    """
    Row L_parity(width): parity 0 starts with a half brick, parity 1 with a brick.
    """
    if parity == 0 and width >= 1:
        bricks, rest = divmod(width - 1, 2)
        chips = [HALF_BRICK] + [BRICK] * bricks + [HALF_BRICK] * rest
    elif parity == 1 and width >= 2:
        bricks, rest = divmod(width, 2)
        chips = [BRICK] * bricks + [HALF_BRICK] * rest
    else:
        raise err.SemanticError(f"There is no row L{parity}({width}).")
    return cir.hcomp(*(cir.Chip(decl) for decl in chips))


def wall(width: int, height: int, top_parity: int = 1) -> cir.CircuitTerm:
    """
    height alternating rows, the top one of parity top_parity.
    """
    if height < 1:
        raise err.SemanticError("A wall needs at least one row.")
    rows = [wall_row((top_parity + r) % 2, width) for r in range(height)]
    return cir.vcomp(*rows)
