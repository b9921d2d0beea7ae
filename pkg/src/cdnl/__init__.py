"""Conflict-driven nogood learning for ground normal logic programs, with
selectable antecedent heuristics for First-UIP conflict analysis."""
from .analyze import ConflictResult, analyze, antecedents, export_conflict_graph
from .heuristics import HEURISTICS, Heuristic, levels_list, select
from .nogood_file import NogoodFile, parse_nogood_file
from .nogoods import F, T, NogoodStore, Origin, completion_nogoods, external_bodies, loop_nogood
from .program import ParseError, Program, is_tight, parse_program
from .solve import SAT, UNKNOWN, UNSAT, SolveOutcome, Solver, SolverConfig, SolverMonitor, solve
from .stats import ConflictStats
from .trail import Trail

__all__ = [
    "ConflictResult", "ConflictStats", "F", "HEURISTICS", "Heuristic", "NogoodFile",
    "NogoodStore", "Origin", "ParseError", "Program", "SAT", "SolveOutcome", "Solver",
    "SolverConfig", "SolverMonitor", "T", "Trail", "UNKNOWN", "UNSAT", "analyze",
    "antecedents", "completion_nogoods", "export_conflict_graph", "external_bodies",
    "is_tight", "levels_list", "loop_nogood", "parse_nogood_file", "parse_program",
    "select", "solve",
]
