"""
Temperley-Lieb diagrams and the cup/cap circuits reducing to them.

A diagram is a planar perfect matching of its boundary points plus a count of closed loops.
Boundary points are numbered bottom 0..nb-1 left to right, then top nb..nb+nt-1 left to
right. Loops stay an integer here; the factor d^loops only appears in representations.
"""

import dataclasses
import itertools
import typing

import networkx as nx

import prokit.error as err
import prokit.lib as l
from prokit.lib import circuit as cir
from prokit.lib import hypermat as hm
from prokit.lib import represent as rep
from prokit.lib import semiring as sr

CUP = cir.ChipDecl("cup", 2, 0)
CAP = cir.ChipDecl("cap", 0, 2)
SIGNATURE = cir.Signature([CUP, CAP])

Matching = frozenset[tuple[int, int]]


@dataclasses.dataclass(frozen=True)
class TlDiagram:
    """
    A crossingless perfect matching between n_bottom and n_top points, with loops.
    """

    n_bottom: int
    n_top: int
    matching: Matching
    loops: int = 0

    def __post_init__(self):
        pairs = frozenset(tuple(sorted(pair)) for pair in self.matching)
        object.__setattr__(self, "matching", pairs)

        total = self.n_bottom + self.n_top
        covered = [p for pair in pairs for p in pair]
        if sorted(covered) != list(range(total)):
            raise err.ShapeError(
                f"Not a perfect matching of {total} boundary points.")
        if self.loops < 0:
            raise err.ShapeError("The loop count can't be negative.")
        if not _is_planar(pairs, self.n_bottom, self.n_top):
            raise err.SemanticError("The matching has crossing strands.")

    def partner(self, point: int) -> int:
        """
        The point matched with point.
        """
        for p, q in self.matching:
            if p == point:
                return q
            if q == point:
                return p
        raise err.ShapeError(f"Point {point} isn't on the boundary.")

    def to_json(self) -> dict[str, typing.Any]:
        """
        {"n_bottom", "n_top", "pairs", "loops"}.
        """
        return {
            "n_bottom": self.n_bottom,
            "n_top": self.n_top,
            "pairs": sorted([list(pair) for pair in self.matching]),
            "loops": self.loops,
        }


def _is_planar(pairs: Matching, n_bottom: int, n_top: int) -> bool:
    # Walk the boundary circle: bottom left to right, then top right to left.
    position = {p: p for p in range(n_bottom)}
    for j in range(n_top):
        position[n_bottom + j] = n_bottom + n_top - 1 - j
    arcs = {}
    for p, q in pairs:
        a, b = sorted((position[p], position[q]))
        arcs[a] = b
        arcs[b] = a
    stack: list[int] = []
    for point in range(n_bottom + n_top):
        if arcs[point] > point:
            stack.append(point)
        elif not stack or stack.pop() != arcs[point]:
            return False
    return True


def identity_diagram(n: int) -> TlDiagram:
    """
    n vertical strands.
    """
    return TlDiagram(n, n, frozenset((j, n + j) for j in range(n)))


def u_generator(n: int, i: int) -> TlDiagram:
    """
    U_i on n strands: a cap on bottom points i, i+1 and a cup on top points i, i+1
    (1-based), vertical strands elsewhere.
    """
    if not 1 <= i < n:
        raise err.ShapeError(f"U_{i} needs 1 <= i < n, got n={n}.")
    pairs = {(j, n + j) for j in range(n) if j not in (i - 1, i)}
    pairs |= {(i - 1, i), (n + i - 1, n + i)}
    return TlDiagram(n, n, frozenset(pairs))


def _components(graph: nx.Graph,
                boundary: typing.Mapping[typing.Any, int]) -> tuple[Matching, int]:
    pairs = set()
    loops = 0
    for component in nx.connected_components(graph):
        ends = [boundary[node] for node in component if node in boundary]
        if not ends:
            loops += 1
        elif len(ends) == 2:
            pairs.add(tuple(sorted(ends)))
        else:
            raise err.SemanticError(
                f"A strand touches {len(ends)} boundary points.")
    return frozenset(pairs), loops


def tl_compose(a: TlDiagram, b: TlDiagram) -> TlDiagram:
    """
    a stacked on top of b.
    """
    if a.n_bottom != b.n_top:
        raise err.ShapeError(
            f"Can't stack a diagram with {a.n_bottom} bottom points on one with {b.n_top} top points."
        )
    graph = nx.Graph()
    graph.add_nodes_from(("a", p) for p in range(a.n_bottom + a.n_top))
    graph.add_nodes_from(("b", p) for p in range(b.n_bottom + b.n_top))
    graph.add_edges_from((("a", p), ("a", q)) for p, q in a.matching)
    graph.add_edges_from((("b", p), ("b", q)) for p, q in b.matching)
    graph.add_edges_from(
        (("a", i), ("b", b.n_bottom + i)) for i in range(a.n_bottom))

    boundary = {("b", j): j for j in range(b.n_bottom)}
    boundary.update({("a", a.n_bottom + i): b.n_bottom + i
                     for i in range(a.n_top)})
    pairs, loops = _components(graph, boundary)
    return TlDiagram(b.n_bottom, a.n_top, pairs, a.loops + b.loops + loops)


def tl_tensor(a: TlDiagram, b: TlDiagram) -> TlDiagram:
    """
    a to the left of b.
    """
    n_bottom = a.n_bottom + b.n_bottom

    def from_a(p: int) -> int:
        return p if p < a.n_bottom else n_bottom + (p - a.n_bottom)

    def from_b(p: int) -> int:
        if p < b.n_bottom:
            return a.n_bottom + p
        return n_bottom + a.n_top + (p - b.n_bottom)

    pairs = {(from_a(p), from_a(q)) for p, q in a.matching}
    pairs |= {(from_b(p), from_b(q)) for p, q in b.matching}
    return TlDiagram(n_bottom, a.n_top + b.n_top, frozenset(pairs),
                     a.loops + b.loops)


def word_diagram(n: int, word: typing.Sequence[int]) -> TlDiagram:
    """
    The product U_{i_1} U_{i_2} ... U_{i_k}, U_{i_1} on top.
    """
    diagram = identity_diagram(n)
    for i in word:
        diagram = tl_compose(diagram, u_generator(n, i))
    return diagram


def reduce_term(term: cir.CircuitTerm) -> TlDiagram:
    """
    Traces the strands of a cup/cap circuit.
    """
    graph = cir.to_port_graph(term)
    strands = nx.Graph()
    strands.add_nodes_from(("out", i) for i in range(graph.out_arity))
    strands.add_nodes_from(("in", j) for j in range(graph.in_arity))
    for sink, source in graph.feeds.items():
        strands.add_edge(sink, source)
    for c, decl in enumerate(graph.chips):
        if decl == CUP:
            strands.add_edge(("o", c, 0), ("o", c, 1))
        elif decl == CAP:
            strands.add_edge(("i", c, 0), ("i", c, 1))
        else:
            raise err.SemanticError(
                f"Chip '{decl.name}' isn't a cup or a cap.")

    boundary = {("in", j): j for j in range(graph.in_arity)}
    boundary.update({("out", i): graph.in_arity + i
                     for i in range(graph.out_arity)})
    pairs, loops = _components(strands, boundary)
    return TlDiagram(graph.in_arity, graph.out_arity, pairs, loops)


def loop_term() -> cir.CircuitTerm:
    """
    A cap on top of a cup: one closed loop.
    """
    return cir.vcomp(cir.Chip(CAP), cir.Chip(CUP))


def snake_terms() -> tuple[cir.CircuitTerm, cir.CircuitTerm]:
    """
    The two zigzags that straighten to a wire.
    """
    left = cir.vcomp(cir.hcomp(cir.Chip(CAP), cir.WIRE),
                     cir.hcomp(cir.WIRE, cir.Chip(CUP)))
    right = cir.vcomp(cir.hcomp(cir.WIRE, cir.Chip(CAP)),
                      cir.hcomp(cir.Chip(CUP), cir.WIRE))
    return left, right


def u_term(n: int, i: int) -> cir.CircuitTerm:
    """
    The circuit of U_i on n strands.
    """
    if not 1 <= i < n:
        raise err.ShapeError(f"U_{i} needs 1 <= i < n, got n={n}.")
    return cir.hcomp(cir.wires(i - 1), cir.vcomp(cir.Chip(CUP), cir.Chip(CAP)),
                     cir.wires(n - i - 1))


def word_term(n: int, word: typing.Sequence[int]) -> cir.CircuitTerm:
    """
    The circuit of U_{i_1} ... U_{i_k}, U_{i_1} on top.
    """
    if not word:
        return cir.wires(n)
    return cir.vcomp(*(u_term(n, i) for i in word))


def _side_layer(points: list[int], partners: dict[int, int],
                closing: cir.ChipDecl) -> cir.CircuitTerm:
    # points run left to right; partners holds the arcs among them.
    index = {p: k for k, p in enumerate(points)}

    def build(start: int, stop: int) -> list[cir.CircuitTerm]:
        parts = []
        k = start
        while k < stop:
            point = points[k]
            if point not in partners:
                parts.append(cir.WIRE)
                k += 1
                continue
            end = index[partners[point]]
            inner = cir.hcomp(cir.WIRE, *build(k + 1, end), cir.WIRE)
            if closing == CAP:
                parts.append(cir.vcomp(cir.Chip(CAP), inner))
            else:
                parts.append(cir.vcomp(inner, cir.Chip(CUP)))
            k = end + 1
        return parts

    return cir.hcomp(*build(0, len(points)))


def diagram_term(diagram: TlDiagram) -> cir.CircuitTerm:
    """
    A cup/cap circuit whose reduction is diagram: caps close the bottom arcs, cups open the
    top arcs, through strands run between, and every loop is a separate cap on cup.
    """
    nb, nt = diagram.n_bottom, diagram.n_top
    bottom_arcs: dict[int, int] = {}
    top_arcs: dict[int, int] = {}
    for p, q in diagram.matching:
        if q < nb:
            bottom_arcs[p], bottom_arcs[q] = q, p
        elif p >= nb:
            top_arcs[p], top_arcs[q] = q, p
    upper = _side_layer(list(range(nb, nb + nt)), top_arcs, CUP)
    lower = _side_layer(list(range(nb)), bottom_arcs, CAP)
    term = cir.vcomp(upper, lower)
    return cir.hcomp(term, *([loop_term()] * diagram.loops))


def standard_rep() -> rep.Representation:
    """
    The 2-dimensional representation over rational functions in d.
    """
    semiring = sr.RATFUNC
    d = sr.RationalFunction.variable()
    cap = hm.from_entries(semiring, 2, 0, 2, [2 - d, 0, d - 2, 1])
    cup = hm.from_entries(semiring, 2, 2, 0, [1 / (2 - d), 0, 1, 1])
    return rep.Representation(2, semiring, SIGNATURE, {
        CUP.name: cup,
        CAP.name: cap
    })


def check_relations(mu: rep.Representation) -> typing.Any:
    """
    Verifies that both snakes evaluate to the identity and returns the loop value d.
    """
    unit = hm.identity(mu.semiring, mu.base_dim, 1)
    for snake in snake_terms():
        if mu.evaluate(snake) != unit:
            raise err.SemanticError(
                "The representation doesn't straighten the snake relation.")
    return mu.evaluate(loop_term()).entry((), ())


def cycle_close(term: cir.CircuitTerm) -> tuple[int, int]:
    """
    Connects output i to input i and returns (ntriv, triv): closed components with at least
    one generator, and closed components made of wires only.
    """
    if term.out_arity != term.in_arity:
        raise err.ShapeError(
            f"Only (n,n) circuits can be closed, got {term.arity}.")
    graph = cir.to_port_graph(term)
    closure = graph.graph().to_undirected()
    closure.add_edges_from(
        (("out", i), ("in", i)) for i in range(graph.out_arity))
    ntriv = triv = 0
    for component in nx.connected_components(closure):
        if any(node[0] == "chip" for node in component):
            ntriv += 1
        else:
            triv += 1
    return ntriv, triv


def _expected_trace(mu: rep.Representation, loop_value: typing.Any, ntriv: int,
                    triv: int) -> typing.Any:
    semiring = mu.semiring
    factors = [semiring.from_int(mu.base_dim)] * triv + [loop_value] * ntriv
    return semiring.product(factors)


def conjecture_check(
        term: cir.CircuitTerm,
        mu: rep.Representation) -> tuple[typing.Any, typing.Any, bool]:
    """
    Compares tr(mu(term)) with N^triv * d^ntriv.
    """
    loop_value = check_relations(mu)
    lhs = mu.evaluate(term).trace()
    ntriv, triv = cycle_close(term)
    rhs = _expected_trace(mu, loop_value, ntriv, triv)
    return lhs, rhs, mu.semiring.eq(lhs, rhs)


def conjecture_experiment(max_gens: int, max_n: int,
                          mu: typing.Optional[rep.Representation] = None
                          ) -> dict[str, typing.Any]:
    """
    Runs conjecture_check over every word in U_1..U_{n-1} with at most max_gens letters,
    2 <= n <= max_n, and groups the outcome by (n, reduced diagram, triv, ntriv).
    """
    if mu is None:
        mu = standard_rep()
    semiring = mu.semiring
    loop_value = check_relations(mu)

    diagram_traces: dict[tuple[int, Matching], typing.Any] = {}
    groups: dict[tuple, dict[str, typing.Any]] = {}
    terms = agreeing = 0

    for n in range(2, max_n + 1):
        # Words grow one letter at a time so every diagram is one composition away.
        level: list[tuple[tuple[int, ...], TlDiagram]] = [((),
                                                           identity_diagram(n))]
        for length in range(max_gens + 1):
            if length > 0:
                level = [(word + (i, ), tl_compose(diagram, u_generator(n, i)))
                         for word, diagram in level for i in range(1, n)]
            for word, diagram in level:
                key = (n, diagram.matching)
                if key not in diagram_traces:
                    diagram_traces[key] = mu.evaluate(
                        diagram_term(TlDiagram(n, n, diagram.matching))).trace()
                lhs = semiring.product([diagram_traces[key]] +
                                       [loop_value] * diagram.loops)
                ntriv, triv = cycle_close(word_term(n, word))
                rhs = _expected_trace(mu, loop_value, ntriv, triv)
                equal = semiring.eq(lhs, rhs)

                terms += 1
                agreeing += int(equal)
                group_key = (n, diagram.matching, diagram.loops, triv, ntriv)
                if group_key not in groups:
                    groups[group_key] = {
                        "n": n,
                        "diagram": sorted([list(p) for p in diagram.matching]),
                        "loops": diagram.loops,
                        "triv": triv,
                        "ntriv": ntriv,
                        "lhs": semiring.encode(lhs),
                        "rhs": semiring.encode(rhs),
                        "equal": equal,
                        "terms": 0,
                        "witness": list(word),
                    }
                    if not equal:
                        l.print_info(
                            f"n={n}, U-word {list(word)}: trace {lhs} but N^{triv} d^{ntriv} = {rhs}."
                        )
                groups[group_key]["terms"] += 1
        l.print_debug(f"Finished n={n}: {terms} terms so far.")

    rows = list(groups.values())
    failures = [row for row in rows if not row["equal"]]
    rate = agreeing / terms if terms else 1.0
    l.print_summary(
        f"{agreeing} of {terms} terms agree with the trace formula ({rate:.1%}).")
    if failures:
        l.print_warning(
            f"{len(failures)} groups disagree, e.g. U-word {failures[0]['witness']} on n={failures[0]['n']}."
        )
    return {
        "max_gens": max_gens,
        "max_n": max_n,
        "terms": terms,
        "agreeing": agreeing,
        "agreement_rate": rate,
        "rows": rows,
        "counterexamples": [{
            "n": row["n"],
            "word": row["witness"],
            "term": cir.term_to_json(word_term(row["n"], row["witness"])),
        } for row in failures],
    }


def u_words(n: int, max_len: int) -> typing.Iterator[tuple[int, ...]]:
    """
    All words in 1..n-1 of length at most max_len.
    """
    for length in range(max_len + 1):
        yield from itertools.product(range(1, n), repeat=length)
