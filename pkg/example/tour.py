# This example walks through the parts of prokit most scripts need.
# Run it with `python example/tour.py` from a checkout with prokit installed.

# Note: Do NOT use from imports for configuration globals
# BAD: from prokit.config import seed
import prokit
import prokit.config

# This is fine since the things being imported are classes and functions.
from prokit import ChipDecl, Representation, Signature, chip, hcomp, vcomp
from prokit.lib import automata, hypermat

# Configuration is plain module globals. Set them before calling into prokit.
prokit.config.tolerance = 1e-9

# A signature declares chips by name and arity (outputs, inputs).
merge = ChipDecl("m", 1, 2)
split = ChipDecl("s", 2, 1)
signature = Signature([merge, split])

# Circuits are built with hcomp (side by side) and vcomp (the first argument on top).
bubble = vcomp(chip(merge), chip(split))
ladder = vcomp(chip(merge), hcomp(prokit.WIRE, chip(merge)), hcomp(chip(split), prokit.WIRE),
               chip(split))

# A representation assigns every chip a hypermatrix of its arity over one semiring.
# Entries are listed row-major, the output index first.
mu = Representation(
    2, prokit.NATURAL, signature, {
        "m": hypermat.from_entries(prokit.NATURAL, 2, 1, 2, [1, 0, 0, 1, 0, 1, 1, 0]),
        "s": hypermat.from_entries(prokit.NATURAL, 2, 2, 1, [1, 0, 0, 1, 0, 1, 1, 0]),
    })

# Evaluating a circuit gives the sum over all colorings of its wires.
print("bubble:", prokit.evaluate(mu, bubble).to_matrix())
print("ladder:", prokit.evaluate(mu, ladder).to_matrix())

# The same entry by summing the colored paths one by one.
print("paths from 1 to 1:", prokit.path_sum_oracle(bubble, mu, [1], [1]))

# Circuits are equal up to the PRO axioms. Enumeration lists each one once.
print("circuits of arity (1,1) with at most 4 chips:",
      len(list(prokit.enumerate_circuits(signature, 4, 1, 1))))

# PRO automata read circuits. This one accepts brick walls.
walls = automata.wall_automaton()
print("8 x 4 wall accepted:", walls.accepts(automata.wall(8, 4)))
print("aligned rows accepted:",
      walls.accepts(vcomp(automata.wall_row(1, 4), automata.wall_row(1, 4))))

# Errors raised by prokit carry a message meant for users.
try:
    vcomp(chip(merge), prokit.WIRE)
except prokit.ShapeError as error:
    print("error:", error.user_facing_msg)
