# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring

import contextlib
import io
import json
import os
import runpy
import tempfile
import unittest

import prokit.config as conf
from prokit import app
from prokit.lib import automata as aut
from prokit.lib import checks
from prokit.lib import circuit as cir

EXAMPLE = os.path.join(os.path.dirname(__file__), os.pardir, "example")

BUBBLE = {"v": [{"chip": "m"}, {"chip": "s"}]}


class TestCommands(unittest.TestCase):

    def setUp(self):
        self.saved = (conf.debug_output, conf.quiet_output, conf.seed, conf.tolerance,
                      conf.output_format, conf.check_trials)
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        (conf.debug_output, conf.quiet_output, conf.seed, conf.tolerance,
         conf.output_format, conf.check_trials) = self.saved
        self.tmp.cleanup()

    def write(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, "wt", encoding="utf-8") as file:
            json.dump(data, file)
        return path

    def run_app(self, *argv):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(io.StringIO()):
            app.main(["--quiet", *argv])
        return stdout.getvalue()

    def example(self, name):
        return os.path.join(EXAMPLE, "files", name)

    def exit_code(self, *argv):
        with self.assertRaises(SystemExit) as raised:
            self.run_app(*argv)
        return raised.exception.code

    def test_eval_entry(self):
        rep_file = self.example("merge_split.json")
        circuit = self.example("bubble.json")
        output = self.run_app("eval", "--rep", rep_file, "--circuit", circuit, "--out",
                              "1", "--in", "1")
        self.assertEqual(json.loads(output), {"out": [1], "in": [1], "value": "2"})

    def test_eval_whole_hypermatrix(self):
        rep_file = self.example("merge_split.json")
        circuit = self.write("circuit.json", BUBBLE)
        result = json.loads(self.run_app("eval", "--rep", rep_file, "--circuit", circuit))
        self.assertEqual(result["entries"], ["2", "0", "0", "2"])
        pretty = json.loads(
            self.run_app("--format", "pretty", "eval", "--rep", rep_file, "--circuit",
                         circuit))
        self.assertEqual(pretty, [["2", "0"], ["0", "2"]])

    def test_eval_errors(self):
        rep_file = self.example("merge_split.json")
        circuit = self.write("circuit.json", BUBBLE)
        missing = os.path.join(self.tmp.name, "missing.json")
        self.assertEqual(self.exit_code("eval", "--rep", missing, "--circuit", circuit), 2)
        self.assertEqual(
            self.exit_code("eval", "--rep", rep_file, "--circuit", circuit, "--out", "3",
                           "--in", "1"), 3)
        bad = self.write("bad.json", {"v": [{"chip": "m"}, "wire"]})
        self.assertEqual(self.exit_code("eval", "--rep", rep_file, "--circuit", bad), 3)

    def test_behavior(self):
        automaton = self.example("counter.json")
        result = json.loads(self.run_app("behavior", "--automaton", automaton, "--word",
                                         "abab"))
        self.assertEqual(result["coefficient"], "2")
        self.assertEqual(result["word"], ["a", "b", "a", "b"])
        result = json.loads(self.run_app("behavior", "--automaton", automaton, "--word",
                                         "a,a,a"))
        self.assertEqual(result["coefficient"], "3")

    def test_accept_tree(self):
        automaton = self.example("trees.json")
        good = self.example("tree.json")
        bad = self.write("bad.json", {"letter": "c"})
        result = json.loads(self.run_app("accept", "--automaton", automaton, "--circuit",
                                         good))
        self.assertEqual(result, {"accepted": True, "weight": True})
        self.assertEqual(
            self.exit_code("accept", "--automaton", automaton, "--circuit", bad),
            app.EXIT_REJECTED)

    def test_accept_walls(self):
        automaton = self.write("walls.json", aut.wall_automaton().to_json())
        wall = self.write("wall.json", cir.term_to_json(aut.wall(3, 2)))
        aligned = self.write(
            "aligned.json",
            cir.term_to_json(cir.vcomp(aut.wall_row(1, 3), aut.wall_row(1, 3))))
        result = json.loads(self.run_app("accept", "--automaton", automaton, "--circuit",
                                         wall))
        self.assertTrue(result["accepted"])
        self.assertEqual(
            self.exit_code("accept", "--automaton", automaton, "--circuit", aligned),
            app.EXIT_REJECTED)

    def test_lang(self):
        everything = aut.all_accepting(checks.SMALL_SIGNATURE)
        first = self.write("first.json", everything.to_json())
        second = self.write("second.json", everything.to_json())
        output = os.path.join(self.tmp.name, "union.json")
        self.assertEqual(
            self.run_app("lang", "--op", "union", first, second, "-o", output), "")
        with open(output, "rt", encoding="utf-8") as file:
            union = aut.ProAutomaton.from_json(json.load(file))
        self.assertEqual(union.base_dim, 2)
        self.assertTrue(union.accepts(cir.vcomp(cir.Chip(checks.MERGE),
                                                cir.Chip(checks.SPLIT))))

        both = json.loads(self.run_app("lang", "--op", "intersect", first, second))
        self.assertEqual(both["N"], 1)

    def test_check(self):
        result = json.loads(self.run_app("--seed", "7", "check", "quantum"))
        self.assertTrue(result["passed"])
        self.assertEqual(result["config"]["seed"], 7)
        self.assertEqual([r["name"] for r in result["suites"]["quantum"]],
                         ["cnot-formula", "unitarity", "explicit-contraction", "cnot-on-state"])
        self.assertEqual(self.exit_code("check", "nothing"), 2)

    def test_bad_configuration(self):
        self.assertEqual(self.exit_code("--tolerance", "-1", "quantum-demo"), 2)

    def test_quantum_demo(self):
        result = json.loads(self.run_app("quantum-demo"))
        self.assertTrue(result["bell"]["entangled_after"])
        self.assertIn("config", result)

    def test_tl_conjecture(self):
        result = json.loads(self.run_app("tl-conjecture", "--max-gens", "2", "--max-n", "3"))
        self.assertEqual(result["terms"], 10)
        self.assertEqual(len(result["counterexamples"]), 2)

    def test_enumerate(self):
        signature = self.example("signature.json")
        output = self.run_app("enumerate", "--signature", signature, "--max-chips", "2",
                              "--arity", "1", "1")
        terms = [json.loads(line) for line in output.splitlines()]
        self.assertEqual(terms[0], "wire")
        self.assertEqual(len(terms), 2)


class TestTour(unittest.TestCase):

    def setUp(self):
        self.saved_tolerance = conf.tolerance

    def tearDown(self):
        conf.tolerance = self.saved_tolerance

    def test_tour_runs(self):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            runpy.run_path(os.path.join(EXAMPLE, "tour.py"), run_name="__main__")
        lines = stdout.getvalue().splitlines()
        self.assertIn("8 x 4 wall accepted: True", lines)
        self.assertIn("aligned rows accepted: False", lines)
        self.assertTrue(lines[-1].startswith("error:"))


if __name__ == "__main__":
    unittest.main()
