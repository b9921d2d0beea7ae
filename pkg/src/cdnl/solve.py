"""The conflict-driven nogood learning loop."""
from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from .analyze import ConflictResult, analyze
from .heuristics import Heuristic
from .nogoods import NogoodStore, Origin, completion_nogoods
from .program import Program
from .propagate import UNRESOLVED, VIOLATED, propagate, unit_literal
from .stats import ConflictStats, record_conflict
from .trail import DECISION, Trail
from .ufs import SourceState, unfounded_set

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"


class ScriptError(ValueError):
    pass


@dataclass
class SolverConfig:
    heuristic: Heuristic | str = Heuristic.FIRST
    seed: int = 0
    # None or (base, factor): restart after base, base*factor, ... conflicts
    restarts: tuple[int, float] | None = None
    # None or the number of recorded nogoods that triggers a deletion round
    max_recorded: int | None = None
    max_conflicts: int | None = None
    time_limit: float | None = None
    scripted_decisions: Sequence[int] = ()
    decay: float = 0.95
    debug: bool = False


@dataclass
class SolveOutcome:
    status: str
    answer: frozenset[int] | None = None   # true visible atoms (or variables)
    stats: ConflictStats = field(default_factory=ConflictStats)
    names: Sequence[str] = ()

    def answer_names(self) -> list[str]:
        if self.answer is None:
            return []
        return [self.names[v] for v in sorted(self.answer)]


class SolverMonitor:
    """Hooks for tracing and instrumentation; every method is a no-op here."""

    def on_select(self, h, sigma, antecedents, chosen, store, trail, level):
        pass

    def on_conflict(self, solver: "Solver", result: ConflictResult, level: int):
        """Called after analysis, before recording and backjumping."""

    def on_learned(self, solver: "Solver", nogood_id: int, result: ConflictResult):
        """Called once the derived nogood is recorded and the solver has backjumped."""

    def on_fixpoint(self, solver: "Solver"):
        pass


class Solver:
    """Search over a fixed variable set constrained by static nogoods.

    With a ``program`` the variables are its atoms followed by its bodies, the
    static nogoods are its completion, and unfounded sets are checked whenever the
    program is not tight.
    """

    def __init__(self, num_vars: int, static_nogoods, names: Sequence[str],
                 config: SolverConfig | None = None, program: Program | None = None,
                 labels: Sequence[str | None] | None = None,
                 visible: Sequence[int] | None = None,
                 monitor: SolverMonitor | None = None):
        self.config = config or SolverConfig()
        self.heuristic = Heuristic(self.config.heuristic)
        self.program = program
        self.names = list(names)
        self.visible = list(range(num_vars)) if visible is None else list(visible)
        self.monitor = monitor or SolverMonitor()
        self.stats = ConflictStats()
        self.store = NogoodStore(num_vars)
        self.trail = Trail(num_vars)
        self._units: list[int] = []
        for j, lits in enumerate(static_nogoods):
            label = labels[j] if labels else None
            i = self.store.record(lits, Origin.STATIC, label=label)
            if len(self.store[i]) == 1:
                self._units.append(i)
        self.ufs = None
        if program is not None and not program.tight:
            self.ufs = SourceState(program)
        self._pending: list[int] = []
        self._script = list(self.config.scripted_decisions)
        for lit in self._script:
            if not 0 <= lit >> 1 < num_vars:
                raise ScriptError(f"scripted literal {lit} outside the vocabulary")
        rng = random.Random(self.config.seed)
        self.var_activity = [0.0] * num_vars
        if self.config.seed:
            self.var_activity = [rng.random() * 1e-6 for _ in range(num_vars)]
        self._var_inc = 1.0
        self._heap = [(-a, v) for v, a in enumerate(self.var_activity)]
        heapq.heapify(self._heap)
        self._next_restart = self.config.restarts[0] if self.config.restarts else None
        self._since_restart = 0

    @classmethod
    def from_program(cls, program: Program, config: SolverConfig | None = None,
                     monitor: SolverMonitor | None = None) -> "Solver":
        names = [program.var_name(v) for v in range(program.num_vars)]
        return cls(program.num_vars, completion_nogoods(program), names, config,
                   program=program, visible=program.visible_atoms(), monitor=monitor)

    # -- decisions

    def _bump_var(self, v: int):
        self.var_activity[v] += self._var_inc
        if self.var_activity[v] > 1e100:
            self.var_activity = [a / 1e100 for a in self.var_activity]
            self._var_inc /= 1e100
            self._heap = [(-a, u) for u, a in enumerate(self.var_activity)
                          if self.trail.value[u] == -1]
            heapq.heapify(self._heap)
        elif self.trail.value[v] == -1:
            heapq.heappush(self._heap, (-self.var_activity[v], v))

    def decide(self) -> int:
        """Next scripted literal, else ``F v`` for the most active unassigned ``v``
        (smallest id on ties)."""
        t = self.trail
        if self._script:
            lit = self._script.pop(0)
            if t.value[lit >> 1] != -1:
                raise ScriptError(f"scripted literal {self.lit_name(lit)} is already assigned")
            return lit
        heap = self._heap
        while heap:
            a, v = heap[0]
            if t.value[v] != -1 or -a != self.var_activity[v]:
                heapq.heappop(heap)
                continue
            return (v << 1) | 1
        for v in range(t.num_vars):  # heap ran dry; should not happen
            if t.value[v] == -1:
                return (v << 1) | 1
        raise RuntimeError("decide called on a total assignment")

    def lit_name(self, lit: int) -> str:
        return ("F " if lit & 1 else "T ") + self.names[lit >> 1]

    # -- main loop

    def _backjump(self, k: int):
        removed = self.trail.backjump(k)
        reason = self.trail.reason
        store = self.store
        for lit in removed:
            v = lit >> 1
            r = reason[v]
            if r >= 0 and store.nogoods[r].origin is not Origin.STATIC:
                self._pending.append(r)
            heapq.heappush(self._heap, (-self.var_activity[v], v))

    def _init_units(self) -> int | None:
        t = self.trail
        for i in self._units:
            lit = self.store[i].lits[0]
            if t.is_true(lit):
                return i
            if t.value[lit >> 1] == -1:
                t.assign(lit ^ 1, i)
                self.store[i].min_implied_level = 0
        return None

    def solve(self) -> SolveOutcome:
        cfg = self.config
        start = time.perf_counter()
        deadline = None if cfg.time_limit is None else start + cfg.time_limit
        try:
            if self.store.has_empty or self._init_units() is not None:
                return self._outcome(UNSAT)
            while True:
                violated = propagate(self.program, self.store, self.trail, self.ufs,
                                     self.stats, self._pending)
                if violated is not None:
                    if self._conflict_level(violated) == 0:
                        return self._outcome(UNSAT)
                    self._on_conflict(violated)
                    if cfg.max_conflicts is not None and self.stats.conflicts >= cfg.max_conflicts:
                        return self._outcome(UNKNOWN)
                    if deadline is not None and time.perf_counter() >= deadline:
                        return self._outcome(UNKNOWN)
                    continue
                if cfg.debug:
                    self._check_fixpoint()
                self.monitor.on_fixpoint(self)
                if self.trail.is_total():
                    if cfg.debug:
                        assert check_model(self.program, self.store, self.trail)
                    t = self.trail
                    answer = frozenset(v for v in self.visible if t.value[v] == 1)
                    return self._outcome(SAT, answer)
                lit = self.decide()
                self.stats.decisions += 1
                self.trail.decide(lit)
        finally:
            self.stats.elapsed = time.perf_counter() - start

    def _outcome(self, status: str, answer=None) -> SolveOutcome:
        return SolveOutcome(status, answer, self.stats, self.names)

    def _conflict_level(self, violated: int) -> int:
        level = self.trail.level
        return max((level[lit >> 1] for lit in self.store[violated].lits), default=0)

    def _on_conflict(self, violated: int):
        cfg, store, t = self.config, self.store, self.trail
        dl = t.current_level
        result = analyze(violated, store, t, self.heuristic, self.monitor)
        record_conflict(self.stats, result, dl)
        self.monitor.on_conflict(self, result, dl)
        for lit in result.nogood:
            self._bump_var(lit >> 1)
        self._var_inc /= cfg.decay

        self._backjump(result.backjump_level)
        i = store.record(result.nogood, Origin.CONFLICT, trail=t)
        store.bump_activity(i)
        store.decay_activities(cfg.decay)
        self._pending.append(i)
        self.monitor.on_learned(self, i, result)

        self._since_restart += 1
        if self._next_restart is not None and self._since_restart >= self._next_restart:
            self._since_restart = 0
            self._next_restart = max(1, int(round(self._next_restart * cfg.restarts[1])))
            self.stats.restarts += 1
            self._backjump(0)
        if cfg.max_recorded is not None:
            self._reduce()

    def _reduce(self):
        store, t = self.store, self.trail
        recorded = [n for n in store.recorded() if len(n.lits) > 1]
        if len(recorded) <= self.config.max_recorded:
            return
        locked = {t.reason[lit >> 1] for lit in t.seq}
        victims = sorted((n for n in recorded if n.reg_index not in locked),
                         key=lambda n: (n.activity, n.reg_index))
        dead = [n.reg_index for n in victims[: len(recorded) // 2]]
        store.delete(dead)
        self.stats.deleted += len(dead)

    def _check_fixpoint(self):
        t = self.trail
        for ng in self.store:
            status, _ = unit_literal(ng.lits, t)
            assert status == UNRESOLVED, f"nogood {ng.name} is {status} at a fixpoint"
        if self.program is not None and not self.program.tight:
            assert not unfounded_set(self.program, t, SourceState(self.program))


def check_model(program: Program | None, store: NogoodStore, t: Trail) -> bool:
    """A total assignment is a solution if it violates no stored nogood and, for a
    non-tight program, leaves no non-empty unfounded set."""
    if not t.is_total():
        return False
    for ng in store:
        if unit_literal(ng.lits, t)[0] == VIOLATED:
            return False
    if program is not None and not program.tight:
        return not unfounded_set(program, t, SourceState(program))
    return True


def solve(program: Program, config: SolverConfig | None = None,
          monitor: SolverMonitor | None = None) -> SolveOutcome:
    return Solver.from_program(program, config, monitor).solve()
