"""Benchmark harness: every instance under every heuristic on seeded shuffles."""
from __future__ import annotations

import csv
import io
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .heuristics import HEURISTICS
from .nogood_file import parse_nogood_file, shuffle_nogood_file
from .program import Program, parse_program
from .solve import Solver, SolverConfig
from .stats import RunRecord, fmt, summarize

log = logging.getLogger(__name__)

HEADER = ["instance", "class", "heuristic", "shuffle", "status", "time_s",
          "conflicts", "avg_nogood_len", "avg_backjump", "avg_res_steps"]


def shuffle_instance(p: Program, seed: int) -> Program:
    """Same rules, permuted rule order and body-literal order, reparsed so that
    atom/body ids and nogood registration order follow the new text."""
    rng = random.Random(seed)
    rules = list(p.rules)
    rng.shuffle(rules)
    shuffled = []
    for r in rules:
        lits = list(r.lits)
        rng.shuffle(lits)
        shuffled.append(type(r)(r.head, r.body, tuple(lits), r.constraint))
    return parse_program(Program(p.atoms, p.bodies, shuffled).to_text())


def run_seed(seed: int, instance: str, shuffle: int) -> int:
    return random.Random(f"{seed}/{instance}/{shuffle}").getrandbits(63)


@dataclass
class _Task:
    instance: str
    cls: str
    text: str
    mode: str
    heuristic: str
    shuffle: int
    seed: int
    time_limit: float | None
    max_conflicts: int | None


def _run(task: _Task) -> RunRecord:
    cfg = SolverConfig(heuristic=task.heuristic, seed=task.seed,
                       time_limit=task.time_limit, max_conflicts=task.max_conflicts)
    if task.mode == "nogoods":
        nf = shuffle_nogood_file(parse_nogood_file(task.text), task.seed)
        solver = Solver(nf.num_vars, nf.nogoods, nf.names, cfg, labels=nf.labels)
    else:
        solver = Solver.from_program(shuffle_instance(parse_program(task.text), task.seed), cfg)
    start = time.perf_counter()
    out = solver.solve()
    elapsed = time.perf_counter() - start
    return RunRecord(task.instance, task.cls, task.heuristic, task.shuffle,
                     out.status, elapsed, out.stats)


def load_class_map(directory: Path) -> dict[str, str]:
    path = directory / "class.map"
    if not path.exists():
        return {}
    out = {}
    for line in path.read_text().splitlines():
        line = line.split("%", 1)[0].split("#", 1)[0].strip()
        if line:
            name, cls = line.split()
            out[name] = cls
    return out


def run_suite(directory, heuristics: Sequence[str] = HEURISTICS, shuffles: int = 5,
              seed: int = 0, time_limit: float | None = None,
              max_conflicts: int | None = None, timing: bool = True,
              jobs: int = 1) -> tuple[str, list[RunRecord]]:
    """Run every ``.lp``/``.ng`` file in ``directory``; return the CSV text and the
    per-run records.

    With ``timing=False`` the ``time_s`` column stays empty, which makes the CSV a
    pure function of the directory contents and ``seed``.
    """
    directory = Path(directory)
    classes = load_class_map(directory)
    files = sorted(p for p in directory.iterdir() if p.suffix in (".lp", ".ng"))
    tasks, errors = [], []
    for path in files:
        cls = classes.get(path.name, "all")
        try:
            text = path.read_text()
            mode = "nogoods" if path.suffix == ".ng" else "program"
            (parse_nogood_file if mode == "nogoods" else parse_program)(text)
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            log.warning("skipping %s: %s", path.name, exc)
            errors.append(RunRecord(path.name, cls, "", 0, "ERROR", None))
            continue
        for s in range(shuffles):
            rs = run_seed(seed, path.name, s)
            for h in heuristics:
                tasks.append(_Task(path.name, cls, text, mode, h, s, rs,
                                   time_limit, max_conflicts))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(_run, tasks))
    else:
        records = [_run(t) for t in tasks]
    if not timing:
        for r in records:
            r.time_s = None
    return to_csv(records + errors, time_limit), records + errors


def to_csv(records: Sequence[RunRecord], time_limit: float | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in records:
        if r.status == "ERROR":
            w.writerow([r.instance, r.cls, "", "", "ERROR", "", "", "", "", ""])
            continue
        w.writerow([r.instance, r.cls, r.heuristic, r.shuffle, r.status,
                    "" if r.time_s is None else f"{r.time_s:.4f}",
                    r.stats.conflicts, fmt(r.stats.avg_nogood_len),
                    fmt(r.stats.avg_backjump_len), fmt(r.stats.avg_resolution_steps)])
    rows = summarize([r for r in records if r.status != "ERROR"], time_limit)
    for row in rows:
        tag = "#class" if row.kind == "class" else "#overall"
        w.writerow([tag, row.cls, row.heuristic, row.runs, row.timeouts,
                    fmt(row.mean_time), fmt(row.mean_conflicts), fmt(row.mean_nogood_len),
                    fmt(row.mean_backjump), fmt(row.mean_res_steps)])
    if time_limit is not None:
        for row in rows:
            w.writerow(["#penalized", row.cls, row.heuristic, "", "",
                        fmt(row.penalized_time), "", "", "", ""])
    return buf.getvalue()
