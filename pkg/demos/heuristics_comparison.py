"""
Heuristics side by side
=======================

Antecedent heuristics only matter when a literal has more than one
antecedent. In program mode that is rare on small programs, because body
variables sit between most literals, so this demo uses random constraint-mode
instances instead: 3-literal nogoods at about 4.2 nogoods per variable, where
random instances are hardest.
"""
import random

import numpy as np

from cdnl import HEURISTICS, Solver, SolverConfig

rng = random.Random(7)
N_VARS, N_INSTANCES = 40, 60


def instance():
    nogoods = []
    for _ in range(round(4.2 * N_VARS)):
        chosen = rng.sample(range(N_VARS), 3)
        nogoods.append(tuple((v << 1) | rng.getrandbits(1) for v in chosen))
    return nogoods


names = [f"v{i}" for i in range(N_VARS)]
instances = [instance() for _ in range(N_INSTANCES)]

###############################################################################
# Collect conflict statistics
# ---------------------------
# One row per instance, one column per heuristic.

conflicts = np.zeros((N_INSTANCES, len(HEURISTICS)))
length = np.full_like(conflicts, np.nan)
backjump = np.full_like(conflicts, np.nan)
steps = np.full_like(conflicts, np.nan)
for i, nogoods in enumerate(instances):
    for j, h in enumerate(HEURISTICS):
        s = Solver(N_VARS, nogoods, names, SolverConfig(heuristic=h)).solve().stats
        conflicts[i, j] = s.conflicts
        if s.conflicts:
            length[i, j] = float(s.avg_nogood_len)
            backjump[i, j] = float(s.avg_backjump_len)
            steps[i, j] = float(s.avg_resolution_steps)

###############################################################################
# Averages
# --------
# Per-conflict averages are first taken per instance, then across instances.

print(f"{'heuristic':10} {'conflicts':>10} {'nogood len':>11} {'backjump':>9} {'res steps':>10}")
for j, h in enumerate(HEURISTICS):
    print(f"{h:10} {conflicts[:, j].mean():10.2f} {np.nanmean(length[:, j]):11.2f} "
          f"{np.nanmean(backjump[:, j]):9.2f} {np.nanmean(steps[:, j]):10.2f}")

###############################################################################
# Rank each heuristic per instance by conflict count (1 = fewest, ties share
# the lower rank) and average the ranks.

ranks = (conflicts[:, :, None] > conflicts[:, None, :]).sum(axis=2) + 1
order = np.argsort(ranks.mean(axis=0))
print("\nmean rank:", ", ".join(f"{HEURISTICS[j]} {ranks[:, j].mean():.2f}" for j in order))
