"""
Checking the solver against brute force
=======================================

For programs with a handful of atoms every candidate answer set can be
enumerated directly. This demo uses a program with a positive loop: its
completion admits a model that is not an answer set, and loop nogoods take it
away again.
"""
from cdnl import Solver, SolverConfig, loop_nogood, parse_program
from cdnl import oracle
from cdnl.nogoods import lit_str

src = """\
a :- b.
b :- a.
c :- not a.
d :- not c.
"""
p = parse_program(src)
names = [p.var_name(v) for v in range(p.num_vars)]
show_sets = lambda xs: sorted(sorted(p.atoms[a].name for a in x) for x in xs)
show = lambda lits: "{" + ", ".join(lit_str(x, names) for x in lits) + "}"

###############################################################################
# Three views of the same program
# -------------------------------
# Answer sets via reducts, models of the completion, and models of the
# completion together with every loop nogood.

print("tight:", p.tight)
print("answer sets        ", show_sets(oracle.answer_sets(p)))
print("completion models  ", show_sets(oracle.completion_models(p)))
print("with loop nogoods  ", show_sets(oracle.loop_complete_models(p)))

###############################################################################
# The loop nogood that does the work
# ----------------------------------
# {a, b} only supports itself: it has no external bodies, so each loop nogood
# is a single literal.

for target in (0, 1):
    print("loop nogood for", names[target], show(loop_nogood({0, 1}, p, target)))

###############################################################################
# The solver records such nogoods on demand. Here the unfounded-set check
# refutes the loop before the first decision, and propagation alone then
# settles every variable.

solver = Solver.from_program(p, SolverConfig(heuristic="lex"))
out = solver.solve()
print("answer:", out.answer_names(), "| decisions:", out.stats.decisions,
      "| loop nogoods:", out.stats.loop_nogoods)

###############################################################################
# Every nogood recorded along the way must hold in every answer set.

answers = oracle.answer_sets(p)
for ng in solver.store.nogoods:
    if ng.origin.name != "STATIC":
        verdict = "entailed" if oracle.entails(p, ng.lits, answers=answers) else "NOT entailed"
        print(f"{ng.origin.name.lower():8} {show(ng.lits):12} {verdict}")
