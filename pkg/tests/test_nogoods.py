import random

import pytest

from cdnl import F, T, NogoodStore, Origin, completion_nogoods, external_bodies, loop_nogood, parse_program
from cdnl.generate import random_program
from cdnl.nogoods import lit_str, neg, var


def named(p, lits):
    names = [p.var_name(v) for v in range(p.num_vars)]
    return {lit_str(lit, names) for lit in lits}


def test_literal_encoding():
    assert neg(neg(T(3))) == T(3)
    assert neg(T(3)) == F(3) and T(3) != F(3)
    assert var(F(5)) == var(T(5)) == 5


def test_body_nogoods():
    p = parse_program("a :- b, not c.")
    ngs = [named(p, n) for n in completion_nogoods(p)]
    beta = "{b, not c}"
    assert ngs[:3] == [{"T b", "F c", f"F {beta}"}, {"F b", f"T {beta}"}, {"T c", f"T {beta}"}]


def test_atom_nogoods():
    p = parse_program("a :- b, not c.")
    ngs = [named(p, n) for n in completion_nogoods(p)]
    beta = "{b, not c}"
    assert {f"F {beta}", "T a"} in ngs and {f"T {beta}", "F a"} in ngs
    # b and c have no rules: each gets the unary nogood forcing it false
    assert {"T b"} in ngs and {"T c"} in ngs


def test_fact_body():
    p = parse_program("b.")
    ngs = [named(p, n) for n in completion_nogoods(p)]
    assert ngs == [{"F {}"}, {"F {}", "T b"}, {"T {}", "F b"}]


def test_completion_size_formula():
    rng = random.Random(5)
    for _ in range(300):
        p = parse_program(random_program(rng))
        expected = sum(1 + len(b) for b in p.bodies) + sum(1 + len(p.body_of[a]) for a in range(p.num_atoms))
        assert len(completion_nogoods(p)) == expected


LOOP = "a :- b.\nb :- a.\na :- not c."


def test_external_bodies():
    p = parse_program("a :- b.\nb :- a.")
    assert external_bodies({0, 1}, p) == []
    q = parse_program(LOOP)
    assert [q.body_name(b) for b in external_bodies({0, 1}, q)] == ["{not c}"]
    assert external_bodies(set(), q) == []


def _eb_brute(u, p):
    out = set()
    for r in p.rules:
        body = p.bodies[r.body]
        if r.head in u and all(a not in u for a in body.pos):
            out.add(r.body)
    return sorted(out)


def test_external_bodies_brute_force():
    rng = random.Random(9)
    for _ in range(200):
        p = parse_program(random_program(rng))
        for mask in range(1, 1 << p.num_atoms):
            u = {a for a in range(p.num_atoms) if mask >> a & 1}
            assert external_bodies(u, p) == _eb_brute(u, p)


def test_loop_nogood():
    p = parse_program("a :- b.\nb :- a.")
    assert named(p, loop_nogood({0, 1}, p, 0)) == {"T a"}
    q = parse_program(LOOP)
    assert named(q, loop_nogood({0, 1}, q, 1)) == {"F {not c}", "T b"}
    assert len({loop_nogood({0, 1}, q, t) for t in (0, 1)}) == 2
    with pytest.raises(ValueError):
        loop_nogood({0}, q, 1)


def test_record_and_occurrences():
    store = NogoodStore(3)
    i = store.record([T(2)], Origin.CONFLICT)
    assert i in store.occur[T(2)]
    j = store.record([T(2)], Origin.CONFLICT)
    assert i != j and store[j].reg_index == j
    k = store.record([], Origin.CONFLICT)
    assert store.has_empty and len(store[k]) == 0
    m = store.record([T(0), F(1), T(2)])
    assert store.watch[m] == [T(0), F(1)]
    assert m in store.watches[T(0)] and m in store.watches[F(1)]


def test_activity():
    store = NogoodStore(1)
    i = store.record([T(0)])
    assert store.activity(i) == 0.0
    store.bump_activity(i, 1.0)
    store.bump_activity(i, 1.0)
    assert store.activity(i) == pytest.approx(2.0)
    store.decay_activities(0.95)
    assert store.activity(i) == pytest.approx(1.9)


def test_activity_rescale_keeps_order():
    store = NogoodStore(2)
    a, b = store.record([T(0)]), store.record([T(1)])
    for _ in range(6000):
        store.bump_activity(a)
        store.decay_activities(0.95)
    store.bump_activity(b)
    assert store[a].activity < 1e100 and store[b].activity < 1e100
    assert store.activity(a) > store.activity(b) > 0


def test_delete_cleans_indices():
    store = NogoodStore(3)
    i = store.record([T(0), T(1)], Origin.CONFLICT)
    store.delete([i])
    assert store[i].deleted
    assert i not in store.occur[T(0)] and i not in store.watches[T(1)]
    assert list(store) == []
