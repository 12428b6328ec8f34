"""
Free PRO terms over a chip signature.

Terms are immutable syntax trees built from the empty circuit, the wire, chips and the two
compositions. The smart constructors hcomp and vcomp absorb units eagerly. Equality of
circuits is decided on port graphs through canonical_key.

Terms with 0-legged chips are accepted everywhere, but their port-graph equality is coarser
than equality in the free PRO: it forgets where a floating component sits relative to the
others.
"""

import collections
import dataclasses
import functools
import json
import typing

import networkx as nx
import numpy as np

import prokit.error as err
import prokit.lib as l


@dataclasses.dataclass(frozen=True)
class ChipDecl:
    """
    A generator with out_arity outputs and in_arity inputs.
    """

    name: str
    out_arity: int
    in_arity: int

    @property
    def pluggable(self) -> bool:
        """
        True if the chip has at least one input and one output.
        """
        return self.out_arity >= 1 and self.in_arity >= 1

    def to_json(self) -> dict[str, typing.Any]:
        """
        The signature-file form of the declaration.
        """
        return {"name": self.name, "out": self.out_arity, "in": self.in_arity}


class Signature:
    """
    An ordered set of chip declarations with unique names.
    """

    def __init__(self, chips: typing.Iterable[ChipDecl]):
        self._chips: dict[str, ChipDecl] = {}
        for decl in chips:
            if decl.name in self._chips:
                raise err.SemanticError(
                    f"Chip '{decl.name}' is declared twice.")
            self._chips[decl.name] = decl

    def __getitem__(self, name: str) -> ChipDecl:
        try:
            return self._chips[name]
        except KeyError as e:
            raise err.SemanticError(
                f"Chip '{name}' isn't part of the signature.") from e

    def __contains__(self, name: str) -> bool:
        return name in self._chips

    def __iter__(self) -> typing.Iterator[ChipDecl]:
        return iter(self._chips.values())

    def __len__(self) -> int:
        return len(self._chips)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self._chips == other._chips

    def __repr__(self) -> str:
        return f"Signature({list(self._chips.values())})"

    def names(self) -> list[str]:
        """
        Chip names in declaration order.
        """
        return list(self._chips)

    @property
    def pluggable(self) -> bool:
        """
        True if every chip is pluggable.
        """
        return all(decl.pluggable for decl in self)

    def to_json(self) -> dict[str, typing.Any]:
        """
        The signature-file form.
        """
        return {"chips": [decl.to_json() for decl in self]}

    @staticmethod
    def from_json(data: typing.Any) -> "Signature":
        """
        Reads a signature file.
        """
        l.require_keys(data, ["chips"], "signature")
        decls = []
        for item in data["chips"]:
            l.require_keys(item, ["name", "out", "in"], "chip declaration")
            if not isinstance(item["name"], str):
                raise err.ParseError(
                    f"Chip names must be strings, got {item['name']!r}.")
            decls.append(
                ChipDecl(item["name"], l.require_int(item["out"], "out"),
                         l.require_int(item["in"], "in")))
        return Signature(decls)


class CircuitTerm:
    """
    Base class of circuit terms. Subclasses provide out_arity and in_arity.
    """

    __slots__ = ()

    out_arity: int
    in_arity: int

    @property
    def arity(self) -> tuple[int, int]:
        """
        The pair (outputs, inputs).
        """
        return (self.out_arity, self.in_arity)


@dataclasses.dataclass(frozen=True)
class Empty(CircuitTerm):
    """
    The empty circuit, arity (0, 0).
    """

    @property
    def out_arity(self) -> int:  # type: ignore[override]
        return 0

    @property
    def in_arity(self) -> int:  # type: ignore[override]
        return 0


@dataclasses.dataclass(frozen=True)
class Wire(CircuitTerm):
    """
    A single wire, arity (1, 1).
    """

    @property
    def out_arity(self) -> int:  # type: ignore[override]
        return 1

    @property
    def in_arity(self) -> int:  # type: ignore[override]
        return 1


@dataclasses.dataclass(frozen=True)
class Chip(CircuitTerm):
    """
    One occurrence of a chip.
    """

    decl: ChipDecl

    @property
    def out_arity(self) -> int:  # type: ignore[override]
        return self.decl.out_arity

    @property
    def in_arity(self) -> int:  # type: ignore[override]
        return self.decl.in_arity


@dataclasses.dataclass(frozen=True)
class HComp(CircuitTerm):
    """
    Juxtaposition, left before right.
    """

    left: CircuitTerm
    right: CircuitTerm
    _arity: tuple[int, int] = dataclasses.field(init=False,
                                                 repr=False,
                                                 compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_arity",
                           (self.left.out_arity + self.right.out_arity,
                            self.left.in_arity + self.right.in_arity))

    @property
    def out_arity(self) -> int:  # type: ignore[override]
        return self._arity[0]

    @property
    def in_arity(self) -> int:  # type: ignore[override]
        return self._arity[1]


@dataclasses.dataclass(frozen=True)
class VComp(CircuitTerm):
    """
    Connection of the outputs of bottom to the inputs of top.
    """

    top: CircuitTerm
    bottom: CircuitTerm

    def __post_init__(self):
        if self.top.in_arity != self.bottom.out_arity:
            raise err.ShapeError(
                f"Can't plug a circuit with {self.bottom.out_arity} outputs into one with {self.top.in_arity} inputs."
            )

    @property
    def out_arity(self) -> int:  # type: ignore[override]
        return self.top.out_arity

    @property
    def in_arity(self) -> int:  # type: ignore[override]
        return self.bottom.in_arity


EMPTY = Empty()
WIRE = Wire()


def is_identity(term: CircuitTerm) -> bool:
    """
    True if the term is built from wires and empty circuits only.
    """
    if isinstance(term, (Empty, Wire)):
        return True
    if isinstance(term, HComp):
        return is_identity(term.left) and is_identity(term.right)
    if isinstance(term, VComp):
        return is_identity(term.top) and is_identity(term.bottom)
    return False


def hcomp(*terms: CircuitTerm) -> CircuitTerm:
    """
    Juxtaposes terms from left to right, dropping empty circuits.
    """
    parts = [t for t in terms if not isinstance(t, Empty)]
    if not parts:
        return EMPTY
    return functools.reduce(HComp, parts)


def vcomp(*terms: CircuitTerm) -> CircuitTerm:
    """
    Stacks terms, the first one on top, dropping wire stacks.
    """
    if not terms:
        raise err.ShapeError("Nothing to stack.")
    for upper, lower in zip(terms, terms[1:]):
        if upper.in_arity != lower.out_arity:
            raise err.ShapeError(
                f"Can't stack a circuit of arity {upper.arity} on top of one of arity {lower.arity}."
            )
    parts = [t for t in terms if not is_identity(t)]
    if not parts:
        return terms[0]
    return functools.reduce(VComp, parts)


def wires(count: int) -> CircuitTerm:
    """
    count parallel wires; the empty circuit for 0.
    """
    return hcomp(*([WIRE] * count))


def chip(decl: ChipDecl) -> CircuitTerm:
    """
    A single chip occurrence.
    """
    return Chip(decl)


def chips_of(term: CircuitTerm) -> list[ChipDecl]:
    """
    Chip occurrences left to right, top to bottom.
    """
    if isinstance(term, Chip):
        return [term.decl]
    if isinstance(term, HComp):
        return chips_of(term.left) + chips_of(term.right)
    if isinstance(term, VComp):
        return chips_of(term.top) + chips_of(term.bottom)
    return []


def size(term: CircuitTerm) -> int:
    """
    Number of chip occurrences.
    """
    return len(chips_of(term))


def signature_of(term: CircuitTerm) -> Signature:
    """
    The chips a term uses, in order of first occurrence.
    """
    seen: dict[str, ChipDecl] = {}
    for decl in chips_of(term):
        seen.setdefault(decl.name, decl)
    return Signature(seen.values())


def parse_term(data: typing.Any, signature: Signature) -> CircuitTerm:
    """
    Reads the JSON term syntax.
    """
    if data == "wire":
        return WIRE
    if data == "empty":
        return EMPTY
    if isinstance(data, dict) and len(data) == 1:
        key, value = next(iter(data.items()))
        if key == "chip":
            if not isinstance(value, str):
                raise err.ParseError(f"Chip names must be strings, got {value!r}.")
            return Chip(signature[value])
        if key in ("h", "v"):
            if not isinstance(value, list):
                raise err.ParseError(f"'{key}' expects a list of terms.")
            parts = [parse_term(item, signature) for item in value]
            if key == "h":
                return hcomp(*parts)
            if not parts:
                raise err.ParseError("'v' needs at least one term.")
            return vcomp(*parts)
    raise err.ParseError(f"Can't read {data!r} as a circuit term.")


def _flatten(term: CircuitTerm, kind: type) -> list[CircuitTerm]:
    if isinstance(term, kind):
        if kind is HComp:
            return _flatten(term.left, kind) + _flatten(term.right, kind)
        return _flatten(term.top, kind) + _flatten(term.bottom, kind)
    return [term]


def term_to_json(term: CircuitTerm) -> typing.Any:
    """
    Writes the JSON term syntax.
    """
    if isinstance(term, Empty):
        return "empty"
    if isinstance(term, Wire):
        return "wire"
    if isinstance(term, Chip):
        return {"chip": term.decl.name}
    if isinstance(term, HComp):
        return {"h": [term_to_json(t) for t in _flatten(term, HComp)]}
    if isinstance(term, VComp):
        return {"v": [term_to_json(t) for t in _flatten(term, VComp)]}
    raise TypeError(f"Not a circuit term: {term!r}")


# Ports: ("out", i) and ("in", j) on the interface, ("o", c, k) and ("i", c, k) on chip c.
Port = tuple


class PortGraph:
    """
    The wiring diagram of a circuit.

    Every wire runs upward from a source port (an interface input or a chip output) to a
    sink port (an interface output or a chip input); feeds maps each sink to its source.
    """

    def __init__(self, out_arity: int, in_arity: int, chips: list[ChipDecl],
                 feeds: dict[Port, Port]):
        self.out_arity = out_arity
        self.in_arity = in_arity
        self.chips = chips
        self.feeds = feeds
        self.consumers = {source: sink for sink, source in feeds.items()}

    @property
    def arity(self) -> tuple[int, int]:
        """
        The pair (outputs, inputs).
        """
        return (self.out_arity, self.in_arity)

    def sinks(self) -> list[Port]:
        """
        All sink ports: interface outputs, then chip inputs chip by chip.
        """
        ports: list[Port] = [("out", i) for i in range(self.out_arity)]
        for c, decl in enumerate(self.chips):
            ports.extend(("i", c, k) for k in range(decl.in_arity))
        return ports

    def graph(self) -> nx.MultiDiGraph:
        """
        The diagram as a networkx multigraph on interface ports and chip instances.
        """
        g = nx.MultiDiGraph()
        g.add_nodes_from(("out", i) for i in range(self.out_arity))
        g.add_nodes_from(("in", j) for j in range(self.in_arity))
        for c, decl in enumerate(self.chips):
            g.add_node(("chip", c), name=decl.name)
        for sink, source in self.feeds.items():
            g.add_edge(_port_node(source),
                       _port_node(sink),
                       source=source,
                       sink=sink)
        return g

    def component_count(self) -> int:
        """
        Number of connected pieces of the diagram, floating ones included.
        """
        return nx.number_weakly_connected_components(self.graph())


def _port_node(port: Port) -> tuple:
    if port[0] in ("o", "i"):
        return ("chip", port[1])
    return port


def _wire_up(term: CircuitTerm, chips: list[ChipDecl],
             edges: list[tuple[Port, Port]]) -> tuple[list[Port], list[Port]]:
    # Returns the source feeding every output and the sink fed by every input. An entry
    # ("pass", x) stands for a straight connection to input (resp. output) x of the term.
    if isinstance(term, Empty):
        return [], []
    if isinstance(term, Wire):
        return [("pass", 0)], [("pass", 0)]
    if isinstance(term, Chip):
        c = len(chips)
        chips.append(term.decl)
        return ([("o", c, k) for k in range(term.out_arity)],
                [("i", c, k) for k in range(term.in_arity)])
    if isinstance(term, HComp):
        ltop, lbottom = _wire_up(term.left, chips, edges)
        rtop, rbottom = _wire_up(term.right, chips, edges)
        rtop = [("pass", p[1] + term.left.in_arity) if p[0] == "pass" else p
                for p in rtop]
        rbottom = [("pass", p[1] + term.left.out_arity) if p[0] == "pass" else p
                   for p in rbottom]
        return ltop + rtop, lbottom + rbottom
    if isinstance(term, VComp):
        ttop, tbottom = _wire_up(term.top, chips, edges)
        btop, bbottom = _wire_up(term.bottom, chips, edges)
        for source, sink in zip(btop, tbottom):
            if source[0] == "o" and sink[0] == "i":
                edges.append((source, sink))
        top = [btop[p[1]] if p[0] == "pass" else p for p in ttop]
        bottom = [tbottom[p[1]] if p[0] == "pass" else p for p in bbottom]
        return top, bottom
    raise TypeError(f"Not a circuit term: {term!r}")


def to_port_graph(term: CircuitTerm) -> PortGraph:
    """
    The wiring diagram of a term, chip instances numbered in term order.
    """
    chips: list[ChipDecl] = []
    edges: list[tuple[Port, Port]] = []
    top, bottom = _wire_up(term, chips, edges)

    feeds: dict[Port, Port] = {sink: source for source, sink in edges}
    for i, source in enumerate(top):
        feeds[("out", i)] = ("in", source[1]) if source[0] == "pass" else source
    for j, sink in enumerate(bottom):
        if sink[0] == "i":
            feeds[sink] = ("in", j)
    return PortGraph(term.out_arity, term.in_arity, chips, feeds)


def _explore(graph: PortGraph, start: int, order: dict[int, int]):
    # Breadth-first numbering: in-ports in order, then out-ports in order.
    order[start] = len(order)
    queue = collections.deque([start])
    while queue:
        c = queue.popleft()
        decl = graph.chips[c]
        neighbours = [graph.feeds[("i", c, k)] for k in range(decl.in_arity)]
        neighbours += [
            graph.consumers[("o", c, k)] for k in range(decl.out_arity)
        ]
        for port in neighbours:
            if port[0] in ("o", "i") and port[1] not in order:
                order[port[1]] = len(order)
                queue.append(port[1])


def _describe(graph: PortGraph, order: dict[int, int]) -> list:

    def source_name(port: Port) -> list:
        if port[0] == "in":
            return ["in", port[1]]
        return [order[port[1]], port[2]]

    ranked = sorted(order, key=order.__getitem__)
    return [
        [[graph.chips[c].name, graph.chips[c].out_arity, graph.chips[c].in_arity]
         for c in ranked],
        [[source_name(graph.feeds[("i", c, k)])
          for k in range(graph.chips[c].in_arity)] for c in ranked],
    ]


def canonical_key(graph: PortGraph) -> bytes:
    """
    A byte string that is equal for two port graphs exactly when they are isomorphic
    respecting the interface order and the port order of every chip.
    """
    order: dict[int, int] = {}
    for i in range(graph.out_arity):
        source = graph.feeds[("out", i)]
        if source[0] == "o" and source[1] not in order:
            _explore(graph, source[1], order)
    for j in range(graph.in_arity):
        sink = graph.consumers[("in", j)]
        if sink[0] == "i" and sink[1] not in order:
            _explore(graph, sink[1], order)

    # Components without interface ports float; each gets its smallest description.
    floating = []
    unvisited = [c for c in range(len(graph.chips)) if c not in order]
    while unvisited:
        component: dict[int, int] = {}
        _explore(graph, unvisited[0], component)
        candidates = []
        for start in component:
            local: dict[int, int] = {}
            _explore(graph, start, local)
            candidates.append(json.dumps(_describe(graph, local)))
        floating.append(min(candidates))
        unvisited = [c for c in unvisited if c not in component]

    chips, wiring = _describe(graph, order)
    outputs = []
    for i in range(graph.out_arity):
        source = graph.feeds[("out", i)]
        outputs.append(["in", source[1]] if source[0] == "in" else
                       [order[source[1]], source[2]])
    key = {
        "arity": [graph.out_arity, graph.in_arity],
        "chips": chips,
        "wiring": wiring,
        "outputs": outputs,
        "floating": sorted(floating),
    }
    return json.dumps(key, separators=(",", ":"), sort_keys=True).encode()


def term_key(term: CircuitTerm) -> bytes:
    """
    canonical_key of the port graph of a term.
    """
    return canonical_key(to_port_graph(term))


def connected_components(term: CircuitTerm) -> list[CircuitTerm]:
    """
    The maximal decomposition term = p1 <-> ... <-> pk into non-empty factors.
    """
    if isinstance(term, Empty):
        return []
    if isinstance(term, (Wire, Chip)):
        return [term]
    if isinstance(term, HComp):
        return connected_components(term.left) + connected_components(
            term.right)
    if isinstance(term, VComp):
        return _merge_at_cuts(connected_components(term.top),
                              connected_components(term.bottom))
    raise TypeError(f"Not a circuit term: {term!r}")


def _merge_at_cuts(upper: list[CircuitTerm],
                   lower: list[CircuitTerm]) -> list[CircuitTerm]:
    # The factors of upper consume the middle wires left to right, the factors of lower
    # produce them. A cut is a pair of factor counts whose middle widths agree.
    upper_prefix = [0]
    for part in upper:
        upper_prefix.append(upper_prefix[-1] + part.in_arity)
    lower_prefix = [0]
    for part in lower:
        lower_prefix.append(lower_prefix[-1] + part.out_arity)

    result = []
    i = j = 0
    while i < len(upper) or j < len(lower):
        if i < len(upper) and upper[i].in_arity == 0:
            result.append(upper[i])
            i += 1
            continue
        if j < len(lower) and lower[j].out_arity == 0:
            result.append(lower[j])
            j += 1
            continue
        next_i, next_j = i + 1, j + 1
        while upper_prefix[next_i] != lower_prefix[next_j]:
            if upper_prefix[next_i] < lower_prefix[next_j]:
                next_i += 1
            else:
                next_j += 1
        result.append(
            vcomp(hcomp(*upper[i:next_i]), hcomp(*lower[j:next_j])))
        i, j = next_i, next_j
    return result


def is_connected(term: CircuitTerm) -> bool:
    """
    True if the term has exactly one connected component.
    """
    return len(connected_components(term)) == 1


def enumerate_circuits(signature: Signature, max_chips: int, out_arity: int,
                       in_arity: int) -> typing.Iterator[CircuitTerm]:
    """
    Yields one term per isomorphism class of circuits of the given arity with at most
    max_chips chips, by increasing chip count.

    Circuits are grown by stacking slices wires <-> chip <-> wires on top of a stack.
    """
    decls = list(signature)
    grow = max([decl.out_arity - decl.in_arity for decl in decls] + [0])
    shrink = max([decl.in_arity - decl.out_arity for decl in decls] + [0])

    def reachable(width: int, remaining: int) -> bool:
        if width < out_arity:
            return out_arity - width <= remaining * grow
        return width - out_arity <= remaining * shrink

    level = [wires(in_arity)]
    if in_arity == out_arity:
        yield level[0]

    for count in range(1, max_chips + 1):
        found: dict[bytes, CircuitTerm] = {}
        for term in level:
            width = term.out_arity
            for decl in decls:
                for left in range(width - decl.in_arity + 1):
                    right = width - decl.in_arity - left
                    grown = vcomp(hcomp(wires(left), Chip(decl), wires(right)),
                                  term)
                    if not reachable(grown.out_arity, max_chips - count):
                        continue
                    key = term_key(grown)
                    if key not in found:
                        found[key] = grown
        l.print_debug(
            f"{len(found)} circuits with {count} chips above {in_arity} inputs.")
        for term in found.values():
            if term.out_arity == out_arity:
                yield term
        level = list(found.values())


def _raw_wires(count: int) -> CircuitTerm:
    if count == 0:
        return EMPTY
    return functools.reduce(HComp, [WIRE] * count)


def _root_moves(term: CircuitTerm) -> list[CircuitTerm]:
    # Every PRO axiom applicable at the root, in both directions.
    moves: list[CircuitTerm] = [
        VComp(_raw_wires(term.out_arity), term),
        VComp(term, _raw_wires(term.in_arity)),
        HComp(EMPTY, term),
        HComp(term, EMPTY),
    ]
    if isinstance(term, HComp):
        left, right = term.left, term.right
        if isinstance(left, HComp):
            moves.append(HComp(left.left, HComp(left.right, right)))
        if isinstance(right, HComp):
            moves.append(HComp(HComp(left, right.left), right.right))
        if isinstance(left, VComp) and isinstance(right, VComp):
            moves.append(
                VComp(HComp(left.top, right.top),
                      HComp(left.bottom, right.bottom)))
        if isinstance(left, Empty):
            moves.append(right)
        if isinstance(right, Empty):
            moves.append(left)
    if isinstance(term, VComp):
        top, bottom = term.top, term.bottom
        if isinstance(top, VComp):
            moves.append(VComp(top.top, VComp(top.bottom, bottom)))
        if isinstance(bottom, VComp):
            moves.append(VComp(VComp(top, bottom.top), bottom.bottom))
        if isinstance(top, HComp) and isinstance(bottom, HComp) \
                and top.left.in_arity == bottom.left.out_arity:
            moves.append(
                HComp(VComp(top.left, bottom.left),
                      VComp(top.right, bottom.right)))
        if is_identity(top):
            moves.append(bottom)
        if is_identity(bottom):
            moves.append(top)
    return moves


def _subterm_paths(term: CircuitTerm,
                   path: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    paths = [path]
    if isinstance(term, HComp):
        paths += _subterm_paths(term.left, path + (0, ))
        paths += _subterm_paths(term.right, path + (1, ))
    elif isinstance(term, VComp):
        paths += _subterm_paths(term.top, path + (0, ))
        paths += _subterm_paths(term.bottom, path + (1, ))
    return paths


def _at(term: CircuitTerm, path: tuple[int, ...]) -> CircuitTerm:
    for step in path:
        if isinstance(term, HComp):
            term = term.left if step == 0 else term.right
        else:
            assert isinstance(term, VComp)
            term = term.top if step == 0 else term.bottom
    return term


def _replace(term: CircuitTerm, path: tuple[int, ...],
             new: CircuitTerm) -> CircuitTerm:
    if not path:
        return new
    head, rest = path[0], path[1:]
    if isinstance(term, HComp):
        if head == 0:
            return HComp(_replace(term.left, rest, new), term.right)
        return HComp(term.left, _replace(term.right, rest, new))
    assert isinstance(term, VComp)
    if head == 0:
        return VComp(_replace(term.top, rest, new), term.bottom)
    return VComp(term.top, _replace(term.bottom, rest, new))


def rewrite(term: CircuitTerm, rng: np.random.Generator,
            steps: int = 10) -> CircuitTerm:
    """
    Applies steps randomly chosen PRO axioms (associativity, interchange, units) at random
    positions. The result denotes the same circuit.
    """
    for _ in range(steps):
        paths = _subterm_paths(term)
        path = paths[int(rng.integers(len(paths)))]
        moves = _root_moves(_at(term, path))
        term = _replace(term, path, moves[int(rng.integers(len(moves)))])
    return term


def random_term(signature: Signature,
                rng: np.random.Generator,
                n_chips: int,
                in_arity: typing.Optional[int] = None) -> CircuitTerm:
    """
    A random term with n_chips chips, built slice by slice and then rewritten.
    """
    decls = list(signature)
    if not decls:
        raise err.SemanticError("Can't build circuits over an empty signature.")
    if in_arity is None:
        in_arity = max(decl.in_arity for decl in decls)
    term = wires(in_arity)
    for _ in range(n_chips):
        fitting = [decl for decl in decls if decl.in_arity <= term.out_arity]
        if not fitting:
            extra = min(decl.in_arity for decl in decls) - term.out_arity
            term = hcomp(term, wires(extra))
            fitting = [decl for decl in decls if decl.in_arity <= term.out_arity]
        decl = fitting[int(rng.integers(len(fitting)))]
        left = int(rng.integers(term.out_arity - decl.in_arity + 1))
        right = term.out_arity - decl.in_arity - left
        term = vcomp(hcomp(wires(left), Chip(decl), wires(right)), term)
    return rewrite(term, rng, steps=2 * n_chips)
