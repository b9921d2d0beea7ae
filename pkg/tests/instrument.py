"""Independent run-time checks hooked into the solver through SolverMonitor.

Nothing here calls the solver's own scoring or analysis helpers: scores, unit
status and conflict-level counts are recomputed from the raw trail arrays.
"""
from cdnl import SolverMonitor


def _true(t, lit):
    return t.value[lit >> 1] == 1 - (lit & 1)


def _reason_levels(ng, sigma, t):
    return sorted((t.level[lit >> 1] for lit in ng.lits if lit != sigma ^ 1), reverse=True)


def _better(kind, a, b, sigma, store, t, level):
    """True if antecedent ``a`` scores strictly better than ``b``."""
    na, nb = store[a], store[b]
    if kind == "short":
        return len(na.lits) < len(nb.lits)
    if kind == "lex":
        return _reason_levels(na, sigma, t) < _reason_levels(nb, sigma, t)
    if kind == "avg":
        la, lb = _reason_levels(na, sigma, t), _reason_levels(nb, sigma, t)
        # mean(la) < mean(lb) without division; empty lists have mean 0
        sa, ca = sum(la), len(la) or 1
        sb, cb = sum(lb), len(lb) or 1
        return sa * cb < sb * ca
    if kind == "res":
        level = t.level[sigma >> 1]
        count = lambda ng: sum(1 for lit in ng.lits
                               if lit != sigma ^ 1 and t.level[lit >> 1] == level)
        return count(na) < count(nb)
    if kind == "active":
        return na.activity > nb.activity
    if kind == "prop":
        return na.min_implied_level < nb.min_implied_level
    raise AssertionError(kind)


class Instrument(SolverMonitor):
    def __init__(self):
        self.selections = 0
        self.multi_selections = 0
        self.argmin_violations = []
        self.uip_violations = []
        self.events = []          # (nogood length, backjump length, steps)
        self._pending = None
        self.run = None           # per-run counters, see attach()

    # -- heuristic argmin soundness
    def on_select(self, h, sigma, cands, chosen, store, t, level):
        self.selections += 1
        self.multi_selections += len(cands) > 1
        kind = h.value
        if chosen not in cands:
            self.argmin_violations.append(("not a candidate", kind, chosen, cands))
            return
        # every candidate must really be an antecedent of sigma
        for i in cands:
            ng = store[i]
            ok = sigma ^ 1 in ng.lits and all(
                _true(t, lit) and t.pos[lit >> 1] < t.pos[sigma >> 1]
                for lit in ng.lits if lit != sigma ^ 1)
            if not ok:
                self.argmin_violations.append(("bad candidate", kind, i))
        if kind == "first":
            if chosen != t.reason[sigma >> 1]:
                self.argmin_violations.append(("first", chosen, t.reason[sigma >> 1]))
            return
        for other in cands:
            if other != chosen and _better(kind, other, chosen, sigma, store, t, level):
                self.argmin_violations.append((kind, chosen, other))

    # -- First-UIP invariants
    def on_conflict(self, solver, result, level):
        t = solver.trail
        lits = result.nogood
        event = (len(lits), level - result.backjump_level, result.resolution_steps)
        self.events.append(event)
        if self.run is not None:
            self.run["events"].append(event)
        if not all(_true(t, lit) for lit in lits):
            self.uip_violations.append(("derived nogood not contained in A", lits))
        cl = max(t.level[lit >> 1] for lit in solver.store[result.violated].lits)
        at_level = [lit for lit in lits if t.level[lit >> 1] == cl]
        if len(at_level) != 1 or at_level[0] != result.uip:
            self.uip_violations.append(("conflict-level literals", at_level))
        k = max((t.level[lit >> 1] for lit in lits if lit != result.uip), default=0)
        if k != result.backjump_level:
            self.uip_violations.append(("backjump level", k, result.backjump_level))
        on_level = sum(1 for lit in t.seq if t.level[lit >> 1] == cl)
        if result.resolution_steps > on_level:
            self.uip_violations.append(("steps", result.resolution_steps, on_level))
        self._pending = result.uip

    def on_learned(self, solver, i, result):
        t = solver.trail
        uip = self._pending
        lits = solver.store[i].lits
        others_true = all(_true(t, lit) for lit in lits if lit != uip)
        if not (others_true and t.value[uip >> 1] == -1):
            self.uip_violations.append(("not asserting after backjump", lits))

    # -- independent statistics tally
    def attach(self, solver):
        """Count trail operations of one run by wrapping the solver's trail."""
        t, store = solver.trail, solver.store
        self.run = {"implied": 0, "backjumps": 0, "fixpoints": 0, "events": []}
        assign, backjump = t.assign, t.backjump

        def counted_assign(lit, reason):
            if reason >= 0 and not (len(store[reason].lits) == 1
                                    and store[reason].origin.name == "STATIC"):
                self.run["implied"] += 1
            assign(lit, reason)

        def counted_backjump(k):
            self.run["backjumps"] += 1
            return backjump(k)

        t.assign, t.backjump = counted_assign, counted_backjump
        solver.monitor = self
        return solver

    def on_fixpoint(self, solver):
        if self.run is not None:
            self.run["fixpoints"] += 1

    def tally(self, solver, outcome):
        """Recount every statistic from the run's own observations; return the
        names that disagree with ``outcome.stats``."""
        s, run = outcome.stats, self.run
        ev = run["events"]
        expected = {
            "conflicts": len(ev),
            "sum_nogood_len": sum(e[0] for e in ev),
            "sum_backjump_len": sum(e[1] for e in ev),
            "sum_resolution_steps": sum(e[2] for e in ev),
            "decisions": run["fixpoints"] - (outcome.status == "SAT"),
            "propagations": run["implied"],
            "restarts": run["backjumps"] - len(ev),
            "loop_nogoods": sum(1 for n in solver.store.nogoods if n.origin.name == "LOOP"),
        }
        return [k for k, v in expected.items() if getattr(s, k) != v]
