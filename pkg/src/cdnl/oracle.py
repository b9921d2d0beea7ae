"""Brute-force reference semantics for small programs.

Answer sets come from reducts and naive least-model iteration; solutions of
nogood sets come from enumerating every total assignment.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .nogoods import F, T, completion_nogoods, external_bodies, loop_nogood
from .program import Program

MAX_ATOMS = 20
MAX_VARS = 24


class OracleBoundError(ValueError):
    pass


def _least_model(p: Program, x: int) -> int:
    """Least model of the reduct of ``p`` wrt the atom bitmask ``x``."""
    rules = []
    for r in p.rules:
        b = p.bodies[r.body]
        if any(x >> a & 1 for a in b.neg):
            continue
        rules.append((r.head, sum(1 << a for a in b.pos)))
    model = 0
    changed = True
    while changed:
        changed = False
        for head, need in rules:
            if model & need == need and not model >> head & 1:
                model |= 1 << head
                changed = True
    return model


def answer_sets(p: Program, bound: int = MAX_ATOMS) -> list[frozenset[int]]:
    """Every atom set that equals the least model of its own reduct."""
    n = p.num_atoms
    if n > bound:
        raise OracleBoundError(f"{n} atoms exceed the oracle bound {bound}")
    out = []
    for x in range(1 << n):
        if _least_model(p, x) == x:
            out.append(frozenset(a for a in range(n) if x >> a & 1))
    return out


def induced_solution(p: Program, x: Iterable[int]) -> frozenset[int]:
    """The total assignment (as a literal set) that an atom set induces on atoms
    and bodies."""
    x = set(x)
    lits = [T(a) if a in x else F(a) for a in range(p.num_atoms)]
    for b in p.bodies:
        true = b.pos <= x and not (b.neg & x)
        lits.append(T(p.body_var(b.id)) if true else F(p.body_var(b.id)))
    return frozenset(lits)


def entails(p: Program, nogood: Iterable[int], bound: int = MAX_ATOMS,
            answers: Sequence[frozenset[int]] | None = None) -> bool:
    """No answer set's induced assignment contains the whole nogood."""
    nogood = set(nogood)
    if answers is None:
        answers = answer_sets(p, bound)
    return all(not nogood <= induced_solution(p, x) for x in answers)


def nogood_solutions(num_vars: int, nogoods: Iterable[Sequence[int]],
                     bound: int = MAX_VARS) -> np.ndarray:
    """Bitmasks (bit ``v`` = value of variable ``v``) of all total assignments that
    violate none of ``nogoods``."""
    if num_vars > bound:
        raise OracleBoundError(f"{num_vars} variables exceed the oracle bound {bound}")
    idx = np.arange(1 << num_vars, dtype=np.int64)
    ok = np.ones(idx.shape, dtype=bool)
    for lits in nogoods:
        tmask = fmask = 0
        for lit in lits:
            if lit & 1:
                fmask |= 1 << (lit >> 1)
            else:
                tmask |= 1 << (lit >> 1)
        if tmask & fmask:
            continue
        ok &= ~(((idx & tmask) == tmask) & ((idx & fmask) == 0))
    return idx[ok]


def all_loop_nogoods(p: Program) -> list[tuple[int, ...]]:
    """Every loop nogood of every non-empty atom subset."""
    out = []
    atoms = range(p.num_atoms)
    for size in range(1, p.num_atoms + 1):
        for u in combinations(atoms, size):
            out.extend(loop_nogood(u, p, target) for target in u)
    return out


def _project(p: Program, masks: np.ndarray) -> list[frozenset[int]]:
    atom_mask = (1 << p.num_atoms) - 1
    return [frozenset(a for a in range(p.num_atoms) if int(m) >> a & 1)
            for m in masks & atom_mask]


def completion_models(p: Program) -> list[frozenset[int]]:
    """Atom projections of all solutions of the completion nogoods."""
    return _project(p, nogood_solutions(p.num_vars, completion_nogoods(p)))


def loop_complete_models(p: Program) -> list[frozenset[int]]:
    """Atom projections of all solutions of completion plus all loop nogoods."""
    nogoods = completion_nogoods(p) + all_loop_nogoods(p)
    return _project(p, nogood_solutions(p.num_vars, nogoods))


def unfounded_sets(p: Program, false_atoms: Iterable[int],
                   false_bodies: Iterable[int]) -> list[frozenset[int]]:
    """Every non-empty unfounded set avoiding ``false_atoms`` given the false bodies."""
    fa, fb = set(false_atoms), set(false_bodies)
    free = [a for a in range(p.num_atoms) if a not in fa]
    out = []
    for size in range(1, len(free) + 1):
        for u in combinations(free, size):
            if set(external_bodies(u, p)) <= fb:
                out.append(frozenset(u))
    return out
