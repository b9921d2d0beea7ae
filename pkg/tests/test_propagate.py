from cdnl import F, T, NogoodStore, Origin, Trail, parse_nogood_file, parse_program
from cdnl.propagate import UNIT, UNRESOLVED, VIOLATED, propagate, unit_literal
from cdnl.solve import Solver
from cdnl.ufs import SourceState

from conftest import RUNNING


def running_state():
    nf = parse_nogood_file(RUNNING)
    store = NogoodStore(nf.num_vars)
    for lits, label in zip(nf.nogoods, nf.labels):
        store.record(lits, Origin.STATIC, label=label)
    t = Trail(nf.num_vars)
    t.assign(F(0), 0)  # the unary nogood {T a}
    return nf, store, t


def show(nf, lits):
    return [("F " if lit & 1 else "T ") + nf.names[lit >> 1] for lit in lits]


def test_running_example_propagation():
    nf, store, t = running_state()
    assert propagate(None, store, t) is None
    assert show(nf, t.seq) == ["F a", "F b"]
    assert t.level[1] == 0
    violated = None
    for lit in nf.decisions:
        t.decide(lit)
        violated = propagate(None, store, t)
    assert show(nf, t.seq) == ["F a", "F b", "F p", "T q", "T r",
                               "T s", "F v", "T t", "F u", "F w", "T x"]
    assert all(t.level[lit >> 1] == 3 for lit in t.seq[5:])
    assert store[violated].label == "n9"


def test_reasons_are_unit_before_assignment():
    nf, store, t = running_state()
    propagate(None, store, t)
    for lit in nf.decisions:
        t.decide(lit)
        propagate(None, store, t)
    for lit in t.seq[1:]:
        r = t.reason[lit >> 1]
        if r < 0:
            continue
        assert lit ^ 1 in store[r].lits
        assert all(t.pos[q >> 1] < t.pos[lit >> 1] for q in store[r].lits if q != lit ^ 1)


def test_unit_literal():
    t = Trail(3)
    t.assign(T(0), 0)
    assert unit_literal([T(0), F(1)], t) == (UNIT, F(1))
    assert unit_literal([T(0), F(1), T(2)], t)[0] == UNRESOLVED
    assert unit_literal([F(0), F(1)], t)[0] == UNRESOLVED
    assert unit_literal([T(0)], t)[0] == VIOLATED
    assert unit_literal([], t)[0] == VIOLATED


def test_positive_loop_records_loop_nogood():
    p = parse_program("a :- b.\nb :- a.")
    s = Solver.from_program(p)
    assert s._init_units() is None
    violated = propagate(p, s.store, s.trail, s.ufs, s.stats)
    assert violated is None
    loops = [n for n in s.store if n.origin is Origin.LOOP]
    assert [n.lits for n in loops] == [(T(0),)]
    assert s.trail.is_false(T(0)) and s.trail.is_false(T(1))
    assert s.stats.loop_nogoods == 1


def test_tight_program_skips_unfounded_check(monkeypatch):
    import cdnl.propagate as prop
    calls = []
    monkeypatch.setattr(prop, "unfounded_set", lambda *a: calls.append(a) or [])
    p = parse_program("a :- not b.\nb :- not a.\nc :- a.")
    s = Solver.from_program(p)
    assert s.ufs is None
    s.solve()
    assert calls == []
    # even when a state is supplied, tight programs never reach the check
    propagate(p, s.store, s.trail, SourceState(p))
    assert calls == []


def test_pending_nogood_is_reasserted():
    store = NogoodStore(2)
    i = store.record([T(0), T(1)], Origin.CONFLICT)
    t = Trail(2)
    t.assign(T(0), 0)
    assert propagate(None, store, t, pending=[i]) is None
    assert t.is_true(F(1)) and t.reason[1] == i
