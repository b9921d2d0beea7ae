"""Command-line front end.

Exit codes: 10 satisfiable, 20 unsatisfiable, 30 limit reached, 0 informational
commands, 1 usage or input errors, 2 oracle mismatch.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle
from .analyze import export_conflict_graph
from .bench import run_suite
from .heuristics import HEURISTICS
from .nogood_file import parse_literals, parse_nogood_file
from .nogoods import completion_nogoods, lit_str
from .program import ParseError, parse_program
from .solve import SAT, UNSAT, ScriptError, Solver, SolverConfig, SolverMonitor

EXIT = {SAT: 10, UNSAT: 20}
EXIT_UNKNOWN = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _restarts(value: str):
    if value == "off":
        return None
    if value.startswith("geom:"):
        try:
            base, factor = value[5:].split(",")
            return int(base), float(factor)
        except ValueError:
            pass
    raise argparse.ArgumentTypeError("expected off or geom:BASE,FACTOR")


def _deletion(value: str):
    if value == "off":
        return None
    if value.startswith("cap:") and value[4:].isdigit():
        return int(value[4:])
    raise argparse.ArgumentTypeError("expected off or cap:N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cdnl", description="Conflict-driven nogood learning for ground normal programs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("file")
    s.add_argument("--heuristic", choices=HEURISTICS, default="first")
    s.add_argument("--mode", choices=("program", "nogoods"), default="program")
    s.add_argument("--script", help='decision literals, e.g. "F p, T q"')
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--stats", action="store_true")
    s.add_argument("--trace", action="store_true", help="one line per conflict")
    s.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    s.add_argument("--restarts", type=_restarts, default=None, metavar="off|geom:BASE,FACTOR")
    s.add_argument("--deletion", type=_deletion, default=None, metavar="off|cap:N")
    s.add_argument("--max-conflicts", type=int)
    s.add_argument("--time-limit", type=float)
    s.add_argument("--dump-graph", metavar="FILE", help="conflict graph of the first conflict")
    s.add_argument("--dump-nogoods", action="store_true", help="print the static nogoods and exit")

    b = sub.add_parser("bench", help="run a directory of instances")
    b.add_argument("directory")
    b.add_argument("--heuristics", default=",".join(HEURISTICS))
    b.add_argument("--shuffles", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--time-limit", type=float)
    b.add_argument("--max-conflicts", type=int)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-timing", action="store_true", help="leave time_s empty")
    b.add_argument("--out", help="write CSV here instead of stdout")
    return parser


class _Tracer(SolverMonitor):
    def __init__(self, out, trace: bool, graph_path: str | None):
        self.out = out
        self.trace = trace
        self.graph_path = graph_path
        self.count = 0

    def on_conflict(self, solver, result, level):
        self.count += 1
        if self.trace:
            lits = ", ".join(solver.lit_name(lit) for lit in result.nogood)
            print(f"conflict {self.count}: nogood={{{lits}}} k={result.backjump_level} "
                  f"steps={result.resolution_steps}", file=self.out)
        if self.graph_path and self.count == 1:
            Path(self.graph_path).write_text(
                export_conflict_graph(result, solver.store, solver.trail, solver.names))


def _solve(args, out) -> int:
    text = Path(args.file).read_text()
    cfg = SolverConfig(heuristic=args.heuristic, seed=args.seed, restarts=args.restarts,
                       max_recorded=args.deletion, max_conflicts=args.max_conflicts,
                       time_limit=args.time_limit)
    tracer = _Tracer(out, args.trace, args.dump_graph)
    program = nf = None
    if args.mode == "nogoods":
        nf = parse_nogood_file(text)
        names, nogoods = nf.names, nf.nogoods
        index = {n: i for i, n in enumerate(names)}
        cfg.scripted_decisions = parse_literals(args.script, index) if args.script else nf.decisions
        if args.dump_nogoods:
            out.write(nf.to_text())
            return 0
        solver = Solver(nf.num_vars, nogoods, names, cfg, labels=nf.labels, monitor=tracer)
    else:
        program = parse_program(text)
        names = [program.var_name(v) for v in range(program.num_vars)]
        if args.script:
            index = {program.atoms[a].name: a for a in range(program.num_atoms)}
            cfg.scripted_decisions = parse_literals(args.script, index)
        if args.dump_nogoods:
            for lits in completion_nogoods(program):
                print("nogood: " + ", ".join(lit_str(lit, names) for lit in lits), file=out)
            return 0
        solver = Solver.from_program(program, cfg, monitor=tracer)

    outcome = solver.solve()
    if outcome.status == SAT:
        print("ANSWER: " + " ".join(outcome.answer_names()), file=out)
    elif outcome.status == UNSAT:
        print("UNSATISFIABLE", file=out)
    else:
        print("UNKNOWN", file=out)
    if args.stats:
        for line in outcome.stats.lines():
            print(line, file=out)
    if args.oracle and outcome.status in (SAT, UNSAT):
        if not _oracle_agrees(outcome, program, nf):
            print("ORACLE: mismatch", file=out)
            return 2
        print("ORACLE: ok", file=out)
    return EXIT.get(outcome.status, EXIT_UNKNOWN)


def _oracle_agrees(outcome, program, nf) -> bool:
    if program is not None:
        answers = oracle.answer_sets(program)
        if outcome.status == UNSAT:
            return not answers
        return outcome.answer in answers
    solutions = oracle.nogood_solutions(nf.num_vars, nf.nogoods)
    if outcome.status == UNSAT:
        return len(solutions) == 0
    mask = sum(1 << v for v in outcome.answer)
    return bool((solutions == mask).any())


def _bench(args, out) -> int:
    heuristics = [h for h in args.heuristics.split(",") if h]
    bad = [h for h in heuristics if h not in HEURISTICS]
    if bad:
        raise UsageError(f"unknown heuristic(s): {', '.join(bad)}")
    text, _ = run_suite(args.directory, heuristics, args.shuffles, args.seed,
                        args.time_limit, args.max_conflicts, not args.no_timing, args.jobs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "solve":
            return _solve(args, out)
        return _bench(args, out)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    except (UsageError, argparse.ArgumentTypeError) as exc:
        print(f"cdnl: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ParseError, ScriptError, oracle.OracleBoundError) as exc:
        print(f"cdnl: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
