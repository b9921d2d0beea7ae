"""Unfounded-set detection with source pointers over non-trivial SCCs."""
from __future__ import annotations

from collections import deque

from .program import Program
from .trail import Trail


class SourceState:
    """Per-atom source bodies for atoms in non-trivial SCCs of the positive
    dependency graph. A sourced atom's source body was non-false when chosen, and
    the in-SCC positive atoms of that body were sourced earlier, so following
    sources never cycles. Sources survive backjumping unchanged.
    """

    def __init__(self, program: Program):
        self.program = program
        self.source: list[int | None] = [None] * program.num_atoms
        self.atoms = [a for a in range(program.num_atoms) if program.nontrivial_scc(a)]
        self.calls = 0

    def sourced_by(self, body: int) -> list[int]:
        return [a for a in self.program.heads_of(body) if self.source[a] == body]


def invalidate_sources(s: SourceState, newly_false_bodies) -> set[int]:
    """Drop sources on falsified bodies and, transitively inside each SCC, on
    bodies that positively rely on an atom that lost its source."""
    p = s.program
    lost: set[int] = set()
    queue = deque()
    for b in newly_false_bodies:
        for a in s.sourced_by(b):
            s.source[a] = None
            lost.add(a)
            queue.append(a)
    while queue:
        q = queue.popleft()
        for b in p.bodies_with_pos(q):
            for a in s.sourced_by(b):
                if p.scc_of[a] == p.scc_of[q]:
                    s.source[a] = None
                    lost.add(a)
                    queue.append(a)
    return lost


def _usable(p: Program, t: Trail, s: SourceState, a: int, b: int) -> bool:
    if t.value[p.body_var(b)] == 0:
        return False
    scc = p.scc_of[a]
    for q in p.bodies[b].pos:
        if p.scc_of[q] == scc and (s.source[q] is None or t.value[q] == 0):
            return False
    return True


def _try_source(p: Program, t: Trail, s: SourceState, a: int) -> bool:
    for b in p.body_of[a]:
        if _usable(p, t, s, a, b):
            s.source[a] = b
            return True
    return False


def unfounded_set(p: Program, t: Trail, s: SourceState) -> list[int]:
    """Return a non-empty unfounded set inside one SCC, or ``[]``.

    Assumes unit propagation reached its fixpoint: a body with a false positive
    atom is then false itself, which is what makes the leftovers unfounded.
    """
    s.calls += 1
    stale = {s.source[a] for a in s.atoms
             if s.source[a] is not None and t.value[p.body_var(s.source[a])] == 0}
    invalidate_sources(s, sorted(stale))

    queue = deque()
    for a in s.atoms:
        if s.source[a] is None and t.value[a] != 0 and _try_source(p, t, s, a):
            queue.append(a)
    while queue:
        q = queue.popleft()
        for b in p.bodies_with_pos(q):
            for a in p.heads_of(b):
                if (s.source[a] is None and t.value[a] != 0
                        and p.scc_of[a] == p.scc_of[q] and _try_source(p, t, s, a)):
                    queue.append(a)

    left = [a for a in s.atoms if s.source[a] is None and t.value[a] != 0]
    if not left:
        return []
    scc = p.scc_of[left[0]]
    return [a for a in left if p.scc_of[a] == scc]
