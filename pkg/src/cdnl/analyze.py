"""First-UIP conflict analysis by resolution, with pluggable antecedent choice."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .heuristics import Heuristic, select
from .nogoods import NogoodStore, lit_str
from .trail import DECISION, Trail


@dataclass
class ConflictResult:
    nogood: tuple[int, ...]     # ordered by trail position
    backjump_level: int
    resolution_steps: int
    uip: int                    # the unique conflict-level literal of ``nogood``
    conflict_level: int
    violated: int
    # (resolved literal, chosen antecedent id, candidate ids) per resolution step
    choices: list[tuple[int, int, list[int]]] = field(default_factory=list)

    @property
    def level_aware(self) -> bool:
        return self.resolution_steps > 0


def antecedents(sigma: int, store: NogoodStore, t: Trail) -> list[int]:
    """Nogoods containing the complement of ``sigma`` whose other literals were all
    assigned before ``sigma``, in registration order."""
    comp = sigma ^ 1
    value, pos = t.value, t.pos
    here = pos[sigma >> 1]
    out = []
    for i in store.occur[comp]:
        for lit in store.nogoods[i].lits:
            if lit == comp:
                continue
            v = lit >> 1
            if value[v] != 1 - (lit & 1) or pos[v] >= here:
                break
        else:
            out.append(i)
    return out


def analyze(violated: int, store: NogoodStore, t: Trail, h: Heuristic = Heuristic.FIRST,
            monitor=None) -> ConflictResult:
    """Resolve the violated nogood backwards along the trail until its last literal
    is the only one of its decision level (the first UIP)."""
    h = Heuristic(h)
    pos, level = t.pos, t.level
    delta = set(store.nogoods[violated].lits)
    steps = 0
    choices = []
    conflict_level = max((level[lit >> 1] for lit in delta), default=0)
    while True:
        sigma = max(delta, key=lambda lit: pos[lit >> 1])
        dl = level[sigma >> 1]
        k = max((level[r >> 1] for r in delta if r != sigma), default=0)
        if k != dl:
            break
        if t.reason[sigma >> 1] == DECISION:
            raise AssertionError("resolution reached a decision literal")
        cands = antecedents(sigma, store, t)
        if not cands:
            raise AssertionError("implied literal without antecedent")
        eps = select(h, sigma, cands, t, store, dl)
        if monitor is not None:
            monitor.on_select(h, sigma, cands, eps, store, t, dl)
        store.bump_activity(eps)
        choices.append((sigma, eps, cands))
        delta.discard(sigma)
        delta.update(lit for lit in store.nogoods[eps].lits if lit != sigma ^ 1)
        steps += 1
    nogood = tuple(sorted(delta, key=lambda lit: pos[lit >> 1]))
    return ConflictResult(nogood, k, steps, sigma, conflict_level, violated, choices)


def export_conflict_graph(result: ConflictResult, store: NogoodStore, t: Trail,
                          names: Sequence[str]) -> str:
    """Render the conflict graph traced by ``analyze`` as text.

    Format, one item per line::

        # conflict graph
        node <LIT> level=<k> <decision|implied> <reason|conflict>
        edge <LIT> -> <LIT> [<nogood>]
        conflict <LIT> / <LIT> [<violated nogood>]
        uip <LIT>
        cut <LIT>, <LIT>, ...

    ``node`` lines carry the side of the First-UIP cut; the ``conflict`` line names
    the conflicting pair, whose second member is the complement of the last
    violated literal (it is not on the trail and has no ``node`` line).
    """
    show = lambda lit: lit_str(lit, names)
    viol = store.nogoods[result.violated]
    last = max(viol.lits, key=lambda lit: t.pos[lit >> 1])
    conflict_side = {sigma for sigma, _, _ in result.choices}
    edges = [(r, last ^ 1, viol.name) for r in viol.lits if r != last]
    for sigma, eps, _ in result.choices:
        edges.extend((r, sigma, store.nogoods[eps].name)
                     for r in store.nogoods[eps].lits if r != sigma ^ 1)
    nodes = set(viol.lits)
    for src, dst, _ in edges:
        nodes.add(src)
        if dst != last ^ 1:
            nodes.add(dst)
    lines = ["# conflict graph"]
    for lit in sorted(nodes, key=lambda x: t.pos[x >> 1]):
        kind = "decision" if t.reason[lit >> 1] == DECISION else "implied"
        side = "conflict" if lit in conflict_side else "reason"
        lines.append(f"node {show(lit)} level={t.level[lit >> 1]} {kind} {side}")
    for src, dst, label in edges:
        lines.append(f"edge {show(src)} -> {show(dst)} [{label}]")
    lines.append(f"conflict {show(last)} / {show(last ^ 1)} [{viol.name}]")
    lines.append(f"uip {show(result.uip)}")
    lines.append("cut " + ", ".join(show(lit) for lit in result.nogood))
    return "\n".join(lines) + "\n"
