"""
Module containing the CLI Application.
"""

import argparse
import sys
import traceback
import typing

import prokit.config as conf
import prokit.error as err
import prokit.lib as l
from prokit.lib import automata as aut
from prokit.lib import checks
from prokit.lib import circuit as cir
from prokit.lib import quantum_gates as qg
from prokit.lib import represent as rep
from prokit.lib import temperley_lieb as tl

EXIT_REJECTED = 1


def main(argv: typing.Optional[list[str]] = None):
    """
    Main entry for the CLI app
    """

    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.debug:
        conf.debug_output = True
    if args.quiet:
        conf.quiet_output = True
    if args.seed is not None:
        conf.seed = args.seed
    if args.tolerance is not None:
        conf.tolerance = args.tolerance
    if args.format is not None:
        conf.output_format = args.format

    try:
        conf.WorkspaceConfig.current().validate()
        exit_code = args.command(args)
    except err.UserFacingError as error:
        l.print_error(error.user_facing_msg)
        for line in traceback.format_exc().splitlines():
            l.print_debug(line)
        sys.exit(error.exit_code)

    if exit_code:
        sys.exit(exit_code)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prokit",
        description=
        "Hypermatrix PROs, circuit representations and PRO automata over semirings")

    parser.add_argument("--seed",
                        type=int,
                        help="seed of every randomized computation")
    parser.add_argument("--tolerance",
                        type=float,
                        help="absolute tolerance of complex equality")
    parser.add_argument("--format",
                        choices=conf.valid_output_formats,
                        help="output format of results")
    parser.add_argument("--quiet",
                        action="store_true",
                        default=False,
                        help="hide info messages")
    parser.add_argument("--debug",
                        action="store_true",
                        default=False,
                        help="show debug output")

    commands = parser.add_subparsers(dest="name", required=True)

    evaluate = commands.add_parser("eval",
                                   help="evaluate a circuit under a representation")
    evaluate.add_argument("--rep", required=True, help="representation file")
    evaluate.add_argument("--circuit", required=True, help="circuit file")
    evaluate.add_argument("--out",
                          dest="out_index",
                          help="output multi-index of a single entry, e.g. 1,2")
    evaluate.add_argument("--in",
                          dest="in_index",
                          help="input multi-index of a single entry, e.g. 2,1")
    evaluate.add_argument("--sparse",
                          action="store_true",
                          default=False,
                          help="list only the non-zero entries")
    evaluate.set_defaults(command=_cmd_eval)

    check = commands.add_parser("check", help="run an invariant suite")
    check.add_argument("suite", help=f"one of {', '.join(checks.suite_names())}")
    check.add_argument("--trials",
                       type=int,
                       help="random instances per law")
    check.set_defaults(command=_cmd_check)

    accept = commands.add_parser("accept",
                                 help="decide whether an automaton accepts")
    accept.add_argument("--automaton",
                        required=True,
                        help="PRO automaton or tree automaton file")
    accept.add_argument("--circuit",
                        required=True,
                        help="circuit file, or tree file for a tree automaton")
    accept.set_defaults(command=_cmd_accept)

    behavior = commands.add_parser(
        "behavior", help="coefficient of a word in a word automaton")
    behavior.add_argument("--automaton",
                          required=True,
                          help="word automaton file")
    behavior.add_argument(
        "--word",
        required=True,
        help="the word, one letter per character or comma separated")
    behavior.set_defaults(command=_cmd_behavior)

    lang = commands.add_parser("lang",
                               help="combine two PRO automata")
    lang.add_argument("--op", required=True, choices=["union", "intersect"])
    lang.add_argument("first", help="first PRO automaton file")
    lang.add_argument("second", help="second PRO automaton file")
    lang.add_argument("-o",
                      "--output",
                      help="write the automaton to this file instead of stdout")
    lang.set_defaults(command=_cmd_lang)

    conjecture = commands.add_parser(
        "tl-conjecture",
        help="compare traces of Temperley-Lieb words with loop counts")
    conjecture.add_argument("--max-gens", type=int, default=6)
    conjecture.add_argument("--max-n", type=int, default=5)
    conjecture.set_defaults(command=_cmd_tl_conjecture)

    quantum = commands.add_parser("quantum-demo",
                                  help="evaluate the CNOT network")
    quantum.set_defaults(command=_cmd_quantum_demo)

    enumerate_ = commands.add_parser(
        "enumerate", help="list circuits up to isomorphism")
    enumerate_.add_argument("--signature",
                            required=True,
                            help="signature file")
    enumerate_.add_argument("--max-chips", type=int, required=True)
    enumerate_.add_argument("--arity",
                            type=int,
                            nargs=2,
                            required=True,
                            metavar=("M", "N"))
    enumerate_.set_defaults(command=_cmd_enumerate)

    return parser


def _emit_result(data: typing.Any):
    print(l.dump_result(data))


def _report(data: dict[str, typing.Any]) -> dict[str, typing.Any]:
    return {"config": conf.WorkspaceConfig.current().as_dict(), **data}


def _parse_index(text: typing.Optional[str], what: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise err.ParseError(
            f"The {what} index must be comma separated integers, got '{text}'."
        ) from e


def _read_term(path: str, signature: cir.Signature) -> cir.CircuitTerm:
    data = l.read_json_file(path)
    if isinstance(data, dict) and "term" in data:
        data = data["term"]
    return cir.parse_term(data, signature)


def _cmd_eval(args) -> int:
    mu = rep.Representation.from_json(l.read_json_file(args.rep))
    term = _read_term(args.circuit, mu.signature)
    value = mu.evaluate(term)
    l.print_info(
        f"Evaluated a circuit of arity {term.arity} with {cir.size(term)} chips.")

    if args.out_index is not None or args.in_index is not None:
        out_index = _parse_index(args.out_index, "output")
        in_index = _parse_index(args.in_index, "input")
        _emit_result({
            "out": out_index,
            "in": in_index,
            "value": mu.semiring.encode(value.entry(out_index, in_index)),
        })
        return 0

    if conf.output_format == "pretty":
        encode = mu.semiring.encode
        _emit_result([[encode(v) for v in row] for row in value.to_matrix()])
    else:
        _emit_result(value.to_json(args.sparse))
    return 0


def _cmd_check(args) -> int:
    if args.trials is not None:
        conf.check_trials = l.require_int(args.trials, "--trials", 1)
    report = checks.run_checks(args.suite)
    passed = all(r.passed for results in report.values() for r in results)
    _emit_result(
        _report({
            "passed": passed,
            "suites": {
                name: [r.to_json() for r in results]
                for name, results in report.items()
            },
        }))
    if not passed:
        return EXIT_REJECTED
    return 0


def _cmd_accept(args) -> int:
    data = l.read_json_file(args.automaton)
    if isinstance(data, dict) and "arities" in data:
        trees = aut.TreeAutomaton.from_json(data)
        tree_data = l.read_json_file(args.circuit)
        if isinstance(tree_data, dict) and "tree" in tree_data:
            tree_data = tree_data["tree"]
        tree = aut.Tree.from_json(tree_data)
        accepted = aut.tree_accepts(trees, tree)
        _, mu = aut.tree_rep(trees)
        weight = aut.scalar_value(mu.evaluate(aut.tree_to_circuit(tree)))
        l.print_info(f"Read the tree {tree}.")
        _emit_result({"accepted": accepted, "weight": mu.semiring.encode(weight)})
    else:
        automaton = aut.ProAutomaton.from_json(data)
        term = _read_term(args.circuit, automaton.signature)
        weight = automaton.weighted_accept(term)
        accepted = not automaton.semiring.is_zero(weight)
        _emit_result({
            "accepted": accepted,
            "weight": automaton.semiring.encode(weight),
        })

    if accepted:
        l.print_summary("Accepted.")
        return 0
    l.print_summary("Rejected.")
    return EXIT_REJECTED


def _split_word(text: str) -> list[str]:
    if "," in text:
        return [letter for letter in text.split(",") if letter]
    return list(text)


def _cmd_behavior(args) -> int:
    automaton = aut.WordAutomaton.from_json(l.read_json_file(args.automaton))
    word = _split_word(args.word)
    value = automaton.behavior_coeff(word)
    _emit_result({
        "word": word,
        "semiring": automaton.semiring.name,
        "coefficient": automaton.semiring.encode(value),
    })
    return 0


def _cmd_lang(args) -> int:
    first = aut.ProAutomaton.from_json(l.read_json_file(args.first))
    second = aut.ProAutomaton.from_json(l.read_json_file(args.second))
    if args.op == "union":
        combined = aut.union(first, second)
    else:
        combined = aut.intersect(first, second)
    l.print_info(
        f"Built the {args.op} automaton with {combined.base_dim} states.")

    if args.output is not None:
        l.write_json_file(args.output, combined.to_json())
        l.print_summary(f"Wrote '{args.output}'.")
    else:
        _emit_result(combined.to_json())
    return 0


def _cmd_tl_conjecture(args) -> int:
    max_gens = l.require_int(args.max_gens, "--max-gens")
    max_n = l.require_int(args.max_n, "--max-n", 2)
    _emit_result(_report(tl.conjecture_experiment(max_gens, max_n)))
    return 0


def _cmd_quantum_demo(args) -> int:
    del args
    _emit_result(_report(qg.bell_state_demo()))
    return 0


def _cmd_enumerate(args) -> int:
    signature = cir.Signature.from_json(l.read_json_file(args.signature))
    max_chips = l.require_int(args.max_chips, "--max-chips")
    out_arity, in_arity = args.arity
    count = 0
    for term in cir.enumerate_circuits(signature, max_chips,
                                       l.require_int(out_arity, "M"),
                                       l.require_int(in_arity, "N")):
        _emit_result(cir.term_to_json(term))
        count += 1
    l.print_summary(
        f"{count} circuits of arity ({out_arity},{in_arity}) with at most {max_chips} chips."
    )
    return 0

