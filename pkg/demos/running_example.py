"""
One conflict, three First-UIP cuts
==================================

A small constraint-mode instance over eleven variables is driven into a
conflict by three scripted decisions. The same conflict is then analysed with
different antecedent heuristics, and each one lands on a different cut.
"""
from pathlib import Path

from cdnl import Heuristic, NogoodStore, Origin, Trail, analyze, antecedents, parse_nogood_file
from cdnl import export_conflict_graph
from cdnl.nogood_file import parse_literals
from cdnl.nogoods import lit_str
from cdnl.propagate import propagate

nf = parse_nogood_file((Path(__file__).parent / "data" / "running.ng").read_text())
show = lambda lits: "{" + ", ".join(lit_str(x, nf.names) for x in lits) + "}"
lit = lambda text: parse_literals(text, {n: i for i, n in enumerate(nf.names)})[0]


def conflict_state():
    store = NogoodStore(nf.num_vars)
    for lits, label in zip(nf.nogoods, nf.labels):
        store.record(lits, Origin.STATIC, label=label)
    t = Trail(nf.num_vars)
    t.assign(lit("F a"), 0)      # the unary nogood {T a}, fixed at level 0
    propagate(None, store, t)
    violated = None
    for d in nf.decisions:
        t.decide(d)
        violated = propagate(None, store, t)
    return store, t, violated


###############################################################################
# Propagating
# -----------
# Level 0 fixes a and b, the decisions F p, T q, T r open levels 1 to 3, and
# level 3 runs into n9.

store, t, violated = conflict_state()
for x in t.seq:
    kind = "decision" if t.reason[x >> 1] < 0 and t.level[x >> 1] > 0 else store[t.reason[x >> 1]].name
    print(f"  level {t.level[x >> 1]}  {lit_str(x, nf.names):4}  {kind}")
print("violated:", store[violated].name, show(store[violated].lits))

###############################################################################
# Where the heuristics get a say
# ------------------------------
# Two literals on the path back from the conflict have two antecedents each.

for name in ("T x", "F w"):
    cands = antecedents(lit(name), store, t)
    print(f"antecedents({name}) =", [store[i].name for i in cands])

###############################################################################
# Three cuts
# ----------
# Each heuristic starts from a fresh copy of the conflict so that activity
# bumps from one analysis do not leak into the next.

for h in (Heuristic.LEX, Heuristic.AVG, Heuristic.SHORT, Heuristic.FIRST):
    store, t, violated = conflict_state()
    r = analyze(violated, store, t, h)
    picks = ", ".join(f"{lit_str(s, nf.names)}<-{store[e].name}" for s, e, _ in r.choices)
    print(f"{h.value:6} {show(r.nogood):18} k={r.backjump_level} steps={r.resolution_steps}  [{picks}]")

###############################################################################
# The conflict graph behind the lex cut

store, t, violated = conflict_state()
print(export_conflict_graph(analyze(violated, store, t, "lex"), store, t, nf.names))
