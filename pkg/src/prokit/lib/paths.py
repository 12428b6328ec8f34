"""
Colored paths: circuits whose wires carry colors in [N].

A labeling colors the wires of the port graph, not the term syntax, so terms equal under the
PRO axioms have the same labelings. A wire is named by its sink port, which it has exactly one of.
"""

import itertools
import typing

import prokit.error as err
from prokit.lib import circuit as cir

if typing.TYPE_CHECKING:
    from prokit.lib.represent import Representation

Coloring = dict[cir.Port, int]


def _require_pluggable(term: cir.CircuitTerm):
    for decl in cir.chips_of(term):
        if not decl.pluggable:
            raise err.SemanticError(
                f"Paths need pluggable chips, but '{decl.name}' has arity ({decl.out_arity},{decl.in_arity})."
            )


def wire_id(port: cir.Port) -> str:
    """
    The JSON name of the wire ending at a sink port.
    """
    if port[0] == "out":
        return f"out:{port[1]}"
    return f"chip:{port[1]}:in:{port[2]}"


def _parse_wire_id(text: str) -> cir.Port:
    parts = text.split(":")
    try:
        if len(parts) == 2 and parts[0] == "out":
            return ("out", int(parts[1]))
        if len(parts) == 4 and parts[0] == "chip" and parts[2] == "in":
            return ("i", int(parts[1]), int(parts[3]))
    except ValueError as e:
        raise err.ParseError(f"Bad wire id '{text}'.") from e
    raise err.ParseError(f"Bad wire id '{text}'.")


class LabeledCircuit:
    """
    A circuit together with a color in 1..N on every wire.
    """

    def __init__(self,
                 base: cir.CircuitTerm,
                 base_dim: int,
                 colors: Coloring,
                 graph: typing.Optional[cir.PortGraph] = None):
        if graph is None:
            graph = cir.to_port_graph(base)
        sinks = graph.sinks()
        if set(colors) != set(sinks):
            raise err.ShapeError("A labeling must color every wire exactly once.")
        for port, color in colors.items():
            if not 1 <= color <= base_dim:
                raise err.ShapeError(
                    f"Wire {wire_id(port)} has color {color} outside 1..{base_dim}."
                )
        self.base = base
        self.base_dim = base_dim
        self.graph = graph
        self.colors = dict(colors)

    def _source_color(self, source: cir.Port) -> int:
        return self.colors[self.graph.consumers[source]]

    @property
    def out_colors(self) -> tuple[int, ...]:
        """
        Out(q): colors of the output interface, left to right.
        """
        return tuple(self.colors[("out", i)]
                     for i in range(self.graph.out_arity))

    @property
    def in_colors(self) -> tuple[int, ...]:
        """
        In(q): colors of the input interface, left to right.
        """
        return tuple(
            self._source_color(("in", j)) for j in range(self.graph.in_arity))

    def chip_colors(self, c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """
        Colors on the output ports and on the input ports of chip instance c.
        """
        decl = self.graph.chips[c]
        outs = tuple(
            self._source_color(("o", c, k)) for k in range(decl.out_arity))
        ins = tuple(self.colors[("i", c, k)] for k in range(decl.in_arity))
        return outs, ins

    def all_chip_colors(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """
        chip_colors for every chip instance in term order.
        """
        return [self.chip_colors(c) for c in range(len(self.graph.chips))]

    @staticmethod
    def from_port_colors(
        base: cir.CircuitTerm, base_dim: int, out_colors: typing.Sequence[int],
        in_colors: typing.Sequence[int],
        chip_colors: typing.Sequence[tuple[typing.Sequence[int],
                                           typing.Sequence[int]]]
    ) -> "LabeledCircuit":
        """
        Builds a labeling from colors given on ports. Both ends of every wire must agree.
        """
        graph = cir.to_port_graph(base)
        if len(out_colors) != graph.out_arity or len(in_colors) != graph.in_arity:
            raise err.ShapeError("Boundary colors don't match the circuit arity.")
        if len(chip_colors) != len(graph.chips):
            raise err.ShapeError(
                f"Expected colors for {len(graph.chips)} chips, got {len(chip_colors)}."
            )

        def port_color(port: cir.Port) -> int:
            if port[0] == "out":
                return out_colors[port[1]]
            if port[0] == "in":
                return in_colors[port[1]]
            outs, ins = chip_colors[port[1]]
            return outs[port[2]] if port[0] == "o" else ins[port[2]]

        colors = {}
        for sink, source in graph.feeds.items():
            if port_color(sink) != port_color(source):
                raise err.SemanticError(
                    f"Wire {wire_id(sink)} has different colors at its two ends.")
            colors[sink] = port_color(sink)
        return LabeledCircuit(base, base_dim, colors, graph)

    def to_json(self) -> dict[str, typing.Any]:
        """
        The annotated-diagram form {"term":.., "colors":{wire_id: color}}.
        """
        return {
            "term": cir.term_to_json(self.base),
            "N": self.base_dim,
            "colors": {wire_id(port): color
                       for port, color in self.colors.items()},
        }

    @staticmethod
    def from_json(data: typing.Any,
                  signature: cir.Signature) -> "LabeledCircuit":
        """
        Reads a labeling written by to_json.
        """
        if not isinstance(data, dict) or "term" not in data or "colors" not in data \
                or "N" not in data:
            raise err.ParseError("A labeling needs 'term', 'N' and 'colors'.")
        base = cir.parse_term(data["term"], signature)
        colors = {
            _parse_wire_id(key): int(value)
            for key, value in data["colors"].items()
        }
        return LabeledCircuit(base, int(data["N"]), colors)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, LabeledCircuit):
            return NotImplemented
        return (self.base == other.base and self.base_dim == other.base_dim
                and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.base, self.base_dim, frozenset(self.colors.items())))

    def __repr__(self) -> str:
        return f"LabeledCircuit({self.out_colors} / {self.in_colors}, {len(self.graph.chips)} chips)"


def enumerate_labelings(
        term: cir.CircuitTerm,
        base_dim: int,
        out_colors: typing.Optional[typing.Sequence[int]] = None,
        in_colors: typing.Optional[typing.Sequence[int]] = None
) -> typing.Iterator[LabeledCircuit]:
    """
    Yields every coloring of the wires of term that agrees with the given boundary colors,
    lexicographically over the wires in port-graph order.
    """
    _require_pluggable(term)
    graph = cir.to_port_graph(term)
    if out_colors is not None and len(out_colors) != graph.out_arity:
        raise err.ShapeError(
            f"Expected {graph.out_arity} output colors, got {len(out_colors)}.")
    if in_colors is not None and len(in_colors) != graph.in_arity:
        raise err.ShapeError(
            f"Expected {graph.in_arity} input colors, got {len(in_colors)}.")

    fixed: Coloring = {}
    if out_colors is not None:
        for i, color in enumerate(out_colors):
            fixed[("out", i)] = int(color)
    if in_colors is not None:
        for j, color in enumerate(in_colors):
            sink = graph.consumers[("in", j)]
            if fixed.get(sink, color) != color:
                # A straight wire constrained to two colors has no labeling.
                return
            fixed[sink] = int(color)
    for port, color in fixed.items():
        if not 1 <= color <= base_dim:
            raise err.ShapeError(
                f"Boundary color {color} is outside 1..{base_dim}.")

    free = [port for port in graph.sinks() if port not in fixed]
    for choice in itertools.product(range(1, base_dim + 1), repeat=len(free)):
        colors = dict(fixed)
        colors.update(zip(free, choice))
        yield LabeledCircuit(term, base_dim, colors, graph)


def unlabel(labeled: LabeledCircuit) -> cir.CircuitTerm:
    """
    Forgets the colors.
    """
    return labeled.base


def compose_h(left: LabeledCircuit, right: LabeledCircuit) -> LabeledCircuit:
    """
    Juxtaposition of two labeled circuits.
    """
    if left.base_dim != right.base_dim:
        raise err.ShapeError("Labelings use different color sets.")
    return LabeledCircuit.from_port_colors(
        cir.hcomp(left.base, right.base), left.base_dim,
        left.out_colors + right.out_colors, left.in_colors + right.in_colors,
        left.all_chip_colors() + right.all_chip_colors())


def compose_v(top: LabeledCircuit, bottom: LabeledCircuit) -> LabeledCircuit:
    """
    Connection of two labeled circuits, which must agree on the colors of the cut.
    """
    if top.base_dim != bottom.base_dim:
        raise err.ShapeError("Labelings use different color sets.")
    if top.in_colors != bottom.out_colors:
        raise err.SemanticError(
            f"Colors {list(bottom.out_colors)} below the cut don't match {list(top.in_colors)} above it."
        )
    return LabeledCircuit.from_port_colors(
        cir.vcomp(top.base, bottom.base), top.base_dim, top.out_colors,
        bottom.in_colors,
        top.all_chip_colors() + bottom.all_chip_colors())


def weight(labeled: LabeledCircuit, mu: "Representation") -> typing.Any:
    """
    Product over the chips of the entry of their hypermatrix picked by the colors.
    """
    if mu.base_dim != labeled.base_dim:
        raise err.ShapeError(
            f"Colors range over 1..{labeled.base_dim} but the representation has N={mu.base_dim}."
        )
    semiring = mu.semiring
    factors = []
    for c, decl in enumerate(labeled.graph.chips):
        outs, ins = labeled.chip_colors(c)
        array = mu[decl.name].array
        factors.append(semiring.scalar(array[tuple(i - 1 for i in outs + ins)]))
    return semiring.product(factors)


def path_sum_oracle(term: cir.CircuitTerm, mu: "Representation",
                    out_index: typing.Sequence[int],
                    in_index: typing.Sequence[int]) -> typing.Any:
    """
    Sum of the weights of all paths from in_index to out_index. Equals the entry
    (out_index, in_index) of the evaluated circuit.
    """
    return mu.semiring.sum(
        weight(q, mu)
        for q in enumerate_labelings(term, mu.base_dim, out_index, in_index))


def path_sum_table(term: cir.CircuitTerm,
                   mu: "Representation") -> dict[tuple[tuple[int, ...],
                                                       tuple[int, ...]], typing.Any]:
    """
    path_sum_oracle for every boundary pair at once, from a single pass over all paths.
    Pairs without a path of non-zero weight are left out.
    """
    semiring = mu.semiring
    table: dict[tuple[tuple[int, ...], tuple[int, ...]], typing.Any] = {}
    for q in enumerate_labelings(term, mu.base_dim):
        value = weight(q, mu)
        if semiring.is_zero(value):
            continue
        key = (q.out_colors, q.in_colors)
        table[key] = semiring.add(table.get(key, semiring.zero), value)
    return table


def count_labelings(term: cir.CircuitTerm, base_dim: int) -> int:
    """
    Number of labelings without boundary constraints, N to the number of wires.
    """
    return base_dim**len(cir.to_port_graph(term).sinks())
