"""
A small benchmark run
=====================

Run every instance in ``data/bench`` under every heuristic on seeded shuffles
and print the CSV. ``class.map`` sorts the instances into classes; the
``#class`` rows average within a class and the ``#overall`` rows weigh every
class equally.
"""
from pathlib import Path

from cdnl.bench import run_suite

here = Path(__file__).parent / "data" / "bench"

###############################################################################
# Timing is switched off, so two runs with the same seed print the same bytes.

text, records = run_suite(here, shuffles=3, seed=1, timing=False)
print(text)

again, _ = run_suite(here, shuffles=3, seed=1, timing=False)
print("byte-identical rerun:", text == again)

###############################################################################
# With a time limit, the penalized rows charge the limit for each timeout.

text, _ = run_suite(here, ["lex", "short"], shuffles=1, time_limit=10.0)
print("\n".join(line for line in text.splitlines() if line.startswith("#penalized")))
