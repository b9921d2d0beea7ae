"""Unit propagation on watched nogoods, interleaved with loop-nogood recording."""
from __future__ import annotations

from typing import Iterable

from .nogoods import NogoodStore, Origin, loop_nogood
from .program import Program
from .trail import Trail
from .ufs import SourceState, unfounded_set

UNIT = "unit"
VIOLATED = "violated"
UNRESOLVED = "unresolved"


def unit_literal(lits: Iterable[int], t: Trail) -> tuple[str, int | None]:
    """Classify a nogood against the trail.

    ``(UNIT, lit)`` means every other literal is true and ``lit`` is unassigned, so
    the complement of ``lit`` is implied.
    """
    open_lit = None
    for lit in lits:
        val = t.value[lit >> 1]
        if val == -1:
            if open_lit is not None:
                return UNRESOLVED, None
            open_lit = lit
        elif val != 1 - (lit & 1):
            return UNRESOLVED, None
    if open_lit is None:
        return VIOLATED, None
    return UNIT, open_lit


def _imply(store: NogoodStore, t: Trail, lit: int, i: int):
    t.assign(lit, i)
    ng = store.nogoods[i]
    if t.current_level < ng.min_implied_level:
        ng.min_implied_level = t.current_level


def assert_nogood(store: NogoodStore, t: Trail, i: int) -> int | None:
    """Fire nogood ``i`` if it is unit; return ``i`` if it is violated."""
    status, lit = unit_literal(store.nogoods[i].lits, t)
    if status == VIOLATED:
        return i
    if status == UNIT:
        _imply(store, t, lit ^ 1, i)
    return None


def unit_propagate(store: NogoodStore, t: Trail) -> int | None:
    """Watched-literal propagation from ``t.qhead``; stops at the first violation."""
    nogoods = store.nogoods
    watches = store.watches
    value = t.value
    seq = t.seq
    while t.qhead < len(seq):
        lit = seq[t.qhead]
        t.qhead += 1
        wl = watches[lit]
        keep = []
        conflict = None
        idx = 0
        while idx < len(wl):
            i = wl[idx]
            idx += 1
            w = store.watch[i]
            other = w[1] if w[0] == lit else w[0]
            oval = value[other >> 1]
            if oval == (other & 1):  # other watch false: nogood satisfied
                keep.append(i)
                continue
            moved = False
            for r in nogoods[i].lits:
                if r == lit or r == other:
                    continue
                if value[r >> 1] != 1 - (r & 1):
                    w[0], w[1] = other, r
                    watches[r].append(i)
                    moved = True
                    break
            if moved:
                continue
            keep.append(i)
            if oval == -1:
                _imply(store, t, other ^ 1, i)
            else:
                conflict = i
                break
        if conflict is not None:
            keep.extend(wl[idx:])
            store.watches[lit] = keep
            return conflict
        store.watches[lit] = keep
    return None


def propagate(p: Program | None, store: NogoodStore, t: Trail,
              ufs_state: SourceState | None = None, stats=None,
              pending: list[int] | None = None) -> int | None:
    """Propagate to a fixpoint; return the id of a violated nogood or ``None``.

    ``pending`` lists recorded nogoods whose implied literal was undone by a
    backjump while the rest of the nogood may still hold; they get re-checked first.
    For non-tight programs, unfounded sets found at the unit fixpoint are refuted
    one loop nogood at a time.
    """
    start = len(t)
    try:
        if pending:
            while pending:
                i = pending.pop()
                if store.nogoods[i].deleted:
                    continue
                violated = assert_nogood(store, t, i)
                if violated is not None:
                    pending.clear()
                    return violated
        u: list[int] = []
        while True:
            violated = unit_propagate(store, t)
            if violated is not None:
                return violated
            if p is None or p.tight or ufs_state is None:
                return None
            u = [a for a in u if t.value[a] != 0]
            if not u:
                u = unfounded_set(p, t, ufs_state)
            if not u:
                return None
            target = min(u)
            i = store.record(loop_nogood(u, p, target), Origin.LOOP, trail=t)
            if stats is not None:
                stats.loop_nogoods += 1
            violated = assert_nogood(store, t, i)
            if violated is not None:
                return violated
    finally:
        if stats is not None:
            stats.propagations += len(t) - start
