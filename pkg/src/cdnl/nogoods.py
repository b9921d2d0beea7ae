"""Literals, nogoods, and the nogood store.

A literal is a plain int: ``2*v`` stands for ``T v`` and ``2*v + 1`` for ``F v``,
so the complement is ``lit ^ 1``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .program import Program

UNSET = math.inf  # sentinel for Nogood.min_implied_level


def T(v: int) -> int:
    return v << 1


def F(v: int) -> int:
    return (v << 1) | 1


def var(lit: int) -> int:
    return lit >> 1


def is_true_lit(lit: int) -> bool:
    """True for ``T v`` literals."""
    return not lit & 1


def neg(lit: int) -> int:
    return lit ^ 1


def lit_str(lit: int, names: Sequence[str]) -> str:
    return ("F " if lit & 1 else "T ") + names[lit >> 1]


class Origin(enum.Enum):
    STATIC = "static"
    CONFLICT = "conflict"
    LOOP = "loop"


@dataclass(eq=False)
class Nogood:
    lits: tuple[int, ...]
    origin: Origin
    reg_index: int
    activity: float = 0.0
    min_implied_level: float = UNSET
    label: str | None = None
    deleted: bool = False

    def __len__(self) -> int:
        return len(self.lits)

    def __contains__(self, lit: int) -> bool:
        return lit in self.lits

    @property
    def name(self) -> str:
        return self.label if self.label is not None else f"#{self.reg_index}"


class NogoodStore:
    """Pool of nogoods with occurrence lists and two watched literals per nogood.

    Nogood ids coincide with registration indices. Watch lists are keyed by the
    literal whose becoming true triggers a visit.
    """

    ACTIVITY_LIMIT = 1e100

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.nogoods: list[Nogood] = []
        self.occur: list[list[int]] = [[] for _ in range(2 * num_vars)]
        self.watches: list[list[int]] = [[] for _ in range(2 * num_vars)]
        self.watch: dict[int, list[int]] = {}
        self.has_empty = False
        self._inc = 1.0

    def __len__(self) -> int:
        return len(self.nogoods)

    def __getitem__(self, i: int) -> Nogood:
        return self.nogoods[i]

    def __iter__(self):
        return (n for n in self.nogoods if not n.deleted)

    def add(self, lits: Iterable[int], origin: Origin = Origin.STATIC,
            label: str | None = None) -> int:
        """Register a nogood; watches are left to the caller (see ``set_watches``)."""
        uniq = tuple(dict.fromkeys(lits))
        for lit in uniq:
            if not 0 <= lit >> 1 < self.num_vars:
                raise ValueError(f"literal {lit} outside the variable range")
        i = len(self.nogoods)
        self.nogoods.append(Nogood(uniq, origin, i, label=label))
        for lit in uniq:
            self.occur[lit].append(i)
        if not uniq:
            self.has_empty = True
        return i

    def record(self, lits: Iterable[int], origin: Origin = Origin.STATIC,
               trail=None, label: str | None = None) -> int:
        """Register a nogood and watch two of its literals.

        Without a trail the first two literals are watched. With one, literals that
        are not true come first, then true ones latest-assigned first, so that the
        watches stay sound for nogoods recorded in the middle of search.
        """
        i = self.add(lits, origin, label)
        ng = self.nogoods[i]
        if len(ng.lits) >= 2:
            if trail is None:
                w0, w1 = ng.lits[0], ng.lits[1]
            else:
                def rank(lit):
                    if not trail.is_true(lit):
                        return (0, 0)
                    return (1, -trail.pos[lit >> 1])
                w0, w1 = sorted(ng.lits, key=rank)[:2]
            self.set_watches(i, w0, w1)
        return i

    def set_watches(self, i: int, w0: int, w1: int):
        old = self.watch.get(i)
        if old is not None:
            for w in old:
                self.watches[w].remove(i)
        self.watch[i] = [w0, w1]
        self.watches[w0].append(i)
        self.watches[w1].append(i)

    def delete(self, ids: Iterable[int]):
        dead = set(ids)
        if not dead:
            return
        for i in dead:
            ng = self.nogoods[i]
            ng.deleted = True
            for lit in ng.lits:
                self.occur[lit] = [j for j in self.occur[lit] if j != i]
            w = self.watch.pop(i, None)
            if w is not None:
                for lit in w:
                    self.watches[lit] = [j for j in self.watches[lit] if j != i]

    def recorded(self) -> list[Nogood]:
        return [n for n in self if n.origin is not Origin.STATIC]

    # -- activity: bump adds amount*inc; decay grows inc; rescale keeps raw values finite

    def bump_activity(self, i: int, amount: float = 1.0):
        ng = self.nogoods[i]
        ng.activity += amount * self._inc
        if ng.activity > self.ACTIVITY_LIMIT:
            self._rescale()

    def decay_activities(self, factor: float = 0.95):
        self._inc /= factor
        if self._inc > self.ACTIVITY_LIMIT:
            self._rescale()

    def activity(self, i: int) -> float:
        """Activity in bump units; raw ``Nogood.activity`` values rank identically."""
        return self.nogoods[i].activity / self._inc

    def _rescale(self):
        for ng in self.nogoods:
            ng.activity /= self.ACTIVITY_LIMIT
        self._inc /= self.ACTIVITY_LIMIT


def completion_nogoods(p: Program) -> list[tuple[int, ...]]:
    """Body nogoods for every body (in id order), then atom nogoods for every atom."""
    out: list[tuple[int, ...]] = []
    for b in p.bodies:
        bv = p.body_var(b.id)
        pos, negs = sorted(b.pos), sorted(b.neg)
        out.append(tuple(T(a) for a in pos) + tuple(F(a) for a in negs) + (F(bv),))
        out.extend((F(a), T(bv)) for a in pos)
        out.extend((T(a), T(bv)) for a in negs)
    for a in range(p.num_atoms):
        bodies = p.body_of[a]
        out.append(tuple(F(p.body_var(b)) for b in bodies) + (T(a),))
        out.extend((T(p.body_var(b)), F(a)) for b in bodies)
    return out


def external_bodies(u: Iterable[int], p: Program) -> list[int]:
    """Bodies of rules with head in ``u`` whose positive part avoids ``u``, in id order."""
    u = set(u)
    eb = set()
    for r in p.rules:
        if r.head in u and not (p.bodies[r.body].pos & u):
            eb.add(r.body)
    return sorted(eb)


def loop_nogood(u: Iterable[int], p: Program, target: int) -> tuple[int, ...]:
    u = set(u)
    if target not in u:
        raise ValueError("target atom must belong to the unfounded set")
    return tuple(F(p.body_var(b)) for b in external_bodies(u, p)) + (T(target),)
