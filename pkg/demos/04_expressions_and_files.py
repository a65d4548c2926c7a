"""Expressions, canonical printing, problem files, and the CLI.

Everything the command-line tool does is one library call away.  This demo
parses elements from text, shows that printing round-trips, loads the
bundled problem files, and drives the CLI in-process.
"""

import io
import pathlib
import sys

from coulombalg import (
    ambient_table,
    format_element,
    load_problem,
    parse_expression,
)
from coulombalg.cli import main as cli_main

HERE = pathlib.Path(__file__).parent

print("== parsing and printing ==")
problem_file = load_problem(HERE / "problems" / "u1_pair.prob")
ring = ambient_table(problem_file.problem())
for text in ["z*(mu - tau)", "(z - 1)/tau^2", "(mu - tau)^-1 * (mu^2 - tau^2)"]:
    element = parse_expression(text, ring.factors)
    printed = format_element(element)
    again = parse_expression(printed, ring.factors)
    print(f"{text!r:45} -> {printed!r:30} round-trips: {again == element}")

print()
print("== the problem file ==")
print("rank:", problem_file.torus_rank, "| blocks:", problem_file.su2_blocks)
print("weights:", [list(w) for w in problem_file.weights])

print()
print("== driving the CLI in-process ==")
for argv in [
    ["membership", "--problem", str(HERE / "problems" / "u1_pair.prob"), "--expr", "z*(mu-tau)"],
    ["presentation", "--problem", str(HERE / "problems" / "u1_pair.prob")],
    ["verify-diagram", "--problem", str(HERE / "problems" / "su2_standard.prob")],
]:
    print(f"$ coulombalg {' '.join(argv)}")
    buffer = io.StringIO()
    stdout, sys.stdout = sys.stdout, buffer
    try:
        code = cli_main(argv)
    finally:
        sys.stdout = stdout
    for line in buffer.getvalue().splitlines():
        print("  " + line)
    print("  (exit code", code, ")")
