import random

import pytest

from cdnl import Solver, SolverConfig, parse_nogood_file
from cdnl.generate import random_program

RUNNING = """\
vars: a b p q r s t u v w x
nogood: T a
nogood n0: F a, T b
nogood n1: T r, F s
nogood n2: T s, F t
nogood n3: T s, T u
nogood n4: T s, T w
nogood n5: T r, T v
nogood n6: T q, F v, T w
nogood n7: T t, F u, F x
nogood n8: F p, T t, F x
nogood n9: F w, T x
decide: F p, T q, T r
"""

# structured hand cases: (program text, expected answer sets as sorted name tuples)
HAND_CASES = [
    ("a :- not b.\nb :- not a.\n", [("a",), ("b",)]),
    ("a :- b.\nb :- a.\n", [()]),
    ("a :- b.\nb :- a.\na :- not c.\nc :- not a.\n", [("a", "b"), ("c",)]),
    ("a :- not a.\n", []),
    ("a.\n", [("a",)]),
    ("a :- a.\n", [()]),
    ("a.\n:- a.\n", []),
    ("a :- not b.\nb :- not a.\n:- a.\n", [("b",)]),
    ("a :- not b.\nb :- not c.\nc :- not a.\n", []),
    ("a :- b.\nb :- c.\nc :- a.\na :- not d.\nd :- not a.\n", [("a", "b", "c"), ("d",)]),
    ("p :- q.\nq :- p.\np :- r.\nr.\n", [("p", "q", "r")]),
    ("p :- q.\nq :- p.\np :- r.\nr :- not s.\ns :- not r.\n", [("p", "q", "r"), ("s",)]),
    ("a :- b, not c.\nb.\n", [("a", "b")]),
    ("a :- b, not b.\n", [()]),
    ("a :- not b.\nb :- not a.\nc :- a.\nc :- b.\n:- not c.\n", [("a", "c"), ("b", "c")]),
    ("a :- b.\nb :- a.\nc :- not a.\n:- c.\n", []),
    ("a :- b, c.\nb :- a.\nc :- a.\nb :- not d.\nd :- not b.\n", [("b",), ("d",)]),
    ("x :- y.\ny :- x.\ny :- z.\nz :- x.\nz :- not w.\nw :- not z.\n",
     [("w",), ("x", "y", "z")]),
    ("a :- not b.\nb :- not c.\nc :- not d.\nd :- not a.\n", [("a", "c"), ("b", "d")]),
    ("a.\nb :- a.\nc :- b, not d.\nd :- c.\n", []),
    ("a :- not b.\nb :- not a.\nc :- a, not d.\nd :- b.\nd :- c.\n", [("b", "d")]),
    ("p :- p.\nq :- not p.\n", [("q",)]),
    ("", [()]),
]


def corpus_programs(n=3000, seed=2024):
    """Half default random programs, half negation-heavy ones; at most 6 atoms
    and 8 rules each."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        if i % 2:
            out.append(random_program(rng, neg_prob=0.6, min_atoms=3, min_rules=4))
        else:
            out.append(random_program(rng))
    return out


def running_solver(heuristic="first", monitor=None, script=True):
    nf = parse_nogood_file(RUNNING)
    cfg = SolverConfig(heuristic=heuristic, scripted_decisions=nf.decisions if script else ())
    return Solver(nf.num_vars, nf.nogoods, nf.names, cfg, labels=nf.labels, monitor=monitor), nf


@pytest.fixture
def running():
    return parse_nogood_file(RUNNING)


def running_conflict():
    """Store and trail of the running example right at the n9 conflict."""
    from cdnl import NogoodStore, Origin, Trail
    from cdnl.propagate import propagate
    nf = parse_nogood_file(RUNNING)
    store = NogoodStore(nf.num_vars)
    for lits, label in zip(nf.nogoods, nf.labels):
        store.record(lits, Origin.STATIC, label=label)
    t = Trail(nf.num_vars)
    t.assign(nf.nogoods[0][0] ^ 1, 0)
    propagate(None, store, t)
    violated = None
    for lit in nf.decisions:
        t.decide(lit)
        violated = propagate(None, store, t)
    return nf, store, t, violated


def lits(nf, text):
    from cdnl.nogood_file import parse_literals
    return parse_literals(text, {n: i for i, n in enumerate(nf.names)})


def label_ids(store, *labels):
    by = {n.label: n.reg_index for n in store}
    return [by[x] for x in labels]
