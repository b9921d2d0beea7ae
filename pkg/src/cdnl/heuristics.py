"""Antecedent selection for conflict resolution.

Every heuristic ranks the antecedents of a literal by a score and takes the best
one; ties go to the smallest registration index.
"""
from __future__ import annotations

import enum
from fractions import Fraction

from .nogoods import NogoodStore
from .trail import Trail


class Heuristic(str, enum.Enum):
    FIRST = "first"    # whatever propagation stored (unmodified solver behaviour)
    SHORT = "short"    # fewest literals
    LEX = "lex"        # lexicographically smallest descending level list
    AVG = "avg"        # smallest mean level
    RES = "res"        # fewest reason literals at the conflict level
    ACTIVE = "active"  # highest nogood activity
    PROP = "prop"      # smallest level the nogood was ever unit at


HEURISTICS = tuple(h.value for h in Heuristic)


def levels_list(lits, sigma: int, t: Trail) -> tuple[int, ...]:
    """Decision levels of the reason ``lits - {complement(sigma)}``, descending."""
    comp = sigma ^ 1
    return tuple(sorted((t.level[lit >> 1] for lit in lits if lit != comp), reverse=True))


def score(h: Heuristic, i: int, sigma: int, store: NogoodStore, t: Trail, level: int):
    """Sort key of antecedent ``i`` under ``h``; smaller is better."""
    ng = store.nogoods[i]
    if h is Heuristic.SHORT:
        return len(ng.lits)
    if h is Heuristic.LEX:
        return levels_list(ng.lits, sigma, t)
    if h is Heuristic.AVG:
        lv = levels_list(ng.lits, sigma, t)
        return Fraction(sum(lv), len(lv)) if lv else Fraction(0)
    if h is Heuristic.RES:
        comp = sigma ^ 1
        return sum(1 for lit in ng.lits if lit != comp and t.level[lit >> 1] == level)
    if h is Heuristic.ACTIVE:
        return -ng.activity
    if h is Heuristic.PROP:
        return ng.min_implied_level
    if h is Heuristic.FIRST:
        return 0 if t.reason[sigma >> 1] == i else 1
    raise ValueError(f"unknown heuristic {h!r}")


def select(h: Heuristic, sigma: int, antecedents: list[int], t: Trail,
           store: NogoodStore, level: int) -> int:
    """Pick one of ``antecedents`` (ordered by registration index) for ``sigma``."""
    if not antecedents:
        raise ValueError("no antecedent to choose from")
    h = Heuristic(h)
    if h is Heuristic.FIRST:
        stored = t.reason[sigma >> 1]
        return stored if stored in antecedents else antecedents[0]
    best, best_key = antecedents[0], score(h, antecedents[0], sigma, store, t, level)
    for i in antecedents[1:]:
        key = score(h, i, sigma, store, t, level)
        if key < best_key:
            best, best_key = i, key
    return best
