"""Per-conflict metrics and table-style aggregation over benchmark runs."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


@dataclass
class ConflictStats:
    conflicts: int = 0
    sum_nogood_len: int = 0
    sum_backjump_len: int = 0
    sum_resolution_steps: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    loop_nogoods: int = 0
    deleted: int = 0
    elapsed: float = 0.0

    def _avg(self, total: int) -> Fraction | None:
        return Fraction(total, self.conflicts) if self.conflicts else None

    @property
    def avg_nogood_len(self) -> Fraction | None:
        return self._avg(self.sum_nogood_len)

    @property
    def avg_backjump_len(self) -> Fraction | None:
        return self._avg(self.sum_backjump_len)

    @property
    def avg_resolution_steps(self) -> Fraction | None:
        return self._avg(self.sum_resolution_steps)

    def lines(self) -> list[str]:
        out = [
            f"stat conflicts={self.conflicts}",
            f"stat decisions={self.decisions}",
            f"stat propagations={self.propagations}",
            f"stat restarts={self.restarts}",
            f"stat loop_nogoods={self.loop_nogoods}",
            f"stat avg_nogood_len={fmt(self.avg_nogood_len)}",
            f"stat avg_backjump_len={fmt(self.avg_backjump_len)}",
            f"stat avg_resolution_steps={fmt(self.avg_resolution_steps)}",
        ]
        return out


def fmt(x) -> str:
    """Two decimals, ``NA`` for undefined values."""
    if x is None:
        return "NA"
    return f"{float(x):.2f}"


def record_conflict(s: ConflictStats, result, conflict_level: int):
    """Count one analysed conflict; ``conflict_level`` is the decision level the
    solver was at, so the backjump length is the number of levels undone."""
    s.conflicts += 1
    s.sum_nogood_len += len(result.nogood)
    s.sum_backjump_len += conflict_level - result.backjump_level
    s.sum_resolution_steps += result.resolution_steps


@dataclass
class RunRecord:
    instance: str
    cls: str
    heuristic: str
    shuffle: int
    status: str              # SAT, UNSAT, UNKNOWN or ERROR
    time_s: float | None
    stats: ConflictStats = field(default_factory=ConflictStats)

    @property
    def completed(self) -> bool:
        return self.status in ("SAT", "UNSAT")


@dataclass
class SummaryRow:
    kind: str                # "class" or "overall"
    cls: str
    heuristic: str
    runs: int
    timeouts: int
    mean_time: Fraction | None
    mean_conflicts: Fraction | None
    mean_nogood_len: Fraction | None
    mean_backjump: Fraction | None
    mean_res_steps: Fraction | None
    penalized_time: Fraction | None


def _mean(xs) -> Fraction | None:
    xs = [Fraction(x) for x in xs if x is not None]
    return sum(xs, Fraction(0)) / len(xs) if xs else None


def summarize(runs: Sequence[RunRecord], time_limit: float | None = None) -> list[SummaryRow]:
    """Per-class means for each heuristic, then an overall row per heuristic that
    averages the class means with equal weight.

    Nogood length, backjump length and resolution steps only count instances that
    every heuristic completed in every run; conflicts and times count the runs a
    heuristic completed; the penalized time charges ``time_limit`` per timeout.
    """
    if not runs:
        return []
    heuristics = list(dict.fromkeys(r.heuristic for r in runs))
    classes = list(dict.fromkeys(r.cls for r in runs))
    by_instance = defaultdict(list)
    for r in runs:
        by_instance[r.instance].append(r)
    common = {i for i, rs in by_instance.items()
              if all(r.completed for r in rs)
              and {r.heuristic for r in rs} == set(heuristics)}

    rows: list[SummaryRow] = []
    for h in heuristics:
        class_rows = []
        for c in classes:
            rs = [r for r in runs if r.heuristic == h and r.cls == c]
            if not rs:
                continue
            done = [r for r in rs if r.completed]
            shared = [r for r in done if r.instance in common]
            timeouts = sum(1 for r in rs if r.status == "UNKNOWN")
            penalized = None
            if time_limit is not None:
                penalized = _mean(
                    time_limit if r.status == "UNKNOWN" else r.time_s
                    for r in rs if r.status != "ERROR")
            row = SummaryRow(
                "class", c, h, len(rs), timeouts,
                _mean(r.time_s for r in done),
                _mean(r.stats.conflicts for r in done),
                _mean(r.stats.avg_nogood_len for r in shared),
                _mean(r.stats.avg_backjump_len for r in shared),
                _mean(r.stats.avg_resolution_steps for r in shared),
                penalized,
            )
            class_rows.append(row)
        rows.extend(class_rows)
        rows.append(SummaryRow(
            "overall", "", h,
            sum(r.runs for r in class_rows),
            sum(r.timeouts for r in class_rows),
            _mean(r.mean_time for r in class_rows),
            _mean(r.mean_conflicts for r in class_rows),
            _mean(r.mean_nogood_len for r in class_rows),
            _mean(r.mean_backjump for r in class_rows),
            _mean(r.mean_res_steps for r in class_rows),
            _mean(r.penalized_time for r in class_rows),
        ))
    return rows

