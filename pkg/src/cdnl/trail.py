"""The assignment as an ordered trail with decision levels and antecedents."""
from __future__ import annotations

DECISION = -1
TOP_LEVEL = -2  # level-0 assignment without a stored nogood


class Trail:
    """Ordered assignment over variables ``0..num_vars-1``.

    ``value[v]`` is 1 (true), 0 (false) or -1 (unassigned); ``pos``, ``level`` and
    ``reason`` are only meaningful for assigned variables. ``qhead`` marks the first
    literal whose consequences have not been propagated yet.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.seq: list[int] = []
        self.value = [-1] * num_vars
        self.pos = [-1] * num_vars
        self.level = [-1] * num_vars
        self.reason = [TOP_LEVEL] * num_vars
        self.level_starts: list[int] = []
        self.qhead = 0

    def __len__(self) -> int:
        return len(self.seq)

    def __contains__(self, lit: int) -> bool:
        return self.is_true(lit)

    @property
    def current_level(self) -> int:
        return len(self.level_starts)

    def is_true(self, lit: int) -> bool:
        return self.value[lit >> 1] == 1 - (lit & 1)

    def is_false(self, lit: int) -> bool:
        return self.value[lit >> 1] == (lit & 1)

    def is_assigned(self, v: int) -> bool:
        return self.value[v] != -1

    def is_total(self) -> bool:
        return len(self.seq) == self.num_vars

    def lit_level(self, lit: int) -> int:
        return self.level[lit >> 1]

    def lit_pos(self, lit: int) -> int:
        return self.pos[lit >> 1]

    def assign(self, lit: int, reason: int):
        v = lit >> 1
        assert self.value[v] == -1, f"variable {v} already assigned"
        if reason == DECISION:
            self.level_starts.append(len(self.seq))
        self.value[v] = 1 - (lit & 1)
        self.pos[v] = len(self.seq)
        self.level[v] = len(self.level_starts)
        self.reason[v] = reason
        self.seq.append(lit)

    def decide(self, lit: int):
        self.assign(lit, DECISION)

    def backjump(self, k: int) -> list[int]:
        """Drop every literal above level ``k``; return the removed literals."""
        assert 0 <= k <= self.current_level
        if k == self.current_level:
            return []
        cut = self.level_starts[k]
        removed = self.seq[cut:]
        for lit in removed:
            v = lit >> 1
            self.value[v] = -1
            self.pos[v] = -1
            self.level[v] = -1
        del self.seq[cut:]
        del self.level_starts[k:]
        self.qhead = min(self.qhead, cut)
        return removed

    def precedes(self, a: int, b: int) -> bool:
        assert self.is_true(a) and self.is_true(b), "both literals must be assigned"
        return self.pos[a >> 1] < self.pos[b >> 1]

    def prefix(self, lit: int) -> list[int]:
        """Literals assigned strictly before ``lit``; the whole trail if ``lit`` is not true."""
        if not self.is_true(lit):
            return list(self.seq)
        return self.seq[: self.pos[lit >> 1]]

    def decisions(self) -> list[int]:
        return [self.seq[i] for i in self.level_starts]
