import pytest

from cdnl import HEURISTICS, SAT, UNKNOWN, UNSAT, Solver, SolverConfig, parse_program, solve
from cdnl import oracle
from cdnl.solve import ScriptError, check_model

from conftest import HAND_CASES, corpus_programs, running_solver


def answer(p, outcome):
    return tuple(p.atoms[a].name for a in sorted(outcome.answer))


@pytest.mark.parametrize("h", HEURISTICS)
@pytest.mark.parametrize("src,expected", HAND_CASES)
def test_hand_cases(src, expected, h):
    p = parse_program(src)
    out = solve(p, SolverConfig(heuristic=h, debug=True))
    if expected:
        assert out.status == SAT
        assert tuple(sorted(answer(p, out))) in expected
    else:
        assert out.status == UNSAT


def test_running_example_with_script():
    for h in HEURISTICS:
        s, _ = running_solver(h)
        out = s.solve()
        assert out.status == SAT
        assert s.stats.conflicts >= 1


def test_decisions_default_to_false_smallest_id():
    p = parse_program("a :- not b.\nb :- not a.")
    s = Solver.from_program(p)
    out = s.solve()
    # F a is decided first, so b comes out true
    assert out.answer_names() == ["b"]


def test_script_errors():
    p = parse_program("a :- not b.\nb :- not a.")
    with pytest.raises(ScriptError):
        Solver.from_program(p, SolverConfig(scripted_decisions=[99])).solve()
    # a scripted literal that propagation already assigned
    s, nf = running_solver(script=False)
    s._script = [nf.nogoods[0][0] ^ 1]  # F a is fixed at level 0
    with pytest.raises(ScriptError):
        s.solve()


def test_check_model():
    p = parse_program("a :- b.\nb :- a.")
    s = Solver.from_program(p)
    assert s.solve().status == SAT
    assert check_model(p, s.store, s.trail)
    # flipping to the unsupported loop breaks the model
    from cdnl import Trail, T
    t = Trail(p.num_vars)
    for v in range(p.num_vars):
        t.decide(T(v))
    assert not check_model(p, s.store, t)


def test_max_conflicts_gives_unknown():
    src = "\n".join(f"p{i} :- not q{i}.\nq{i} :- not p{i}." for i in range(6))
    src += "\n:- " + ", ".join(f"q{i}" for i in range(6)) + "."
    src += "\n" + "\n".join(f":- p{i}, p{i + 1}." for i in range(5))
    p = parse_program(src)
    out = solve(p, SolverConfig(max_conflicts=1))
    assert out.status == UNKNOWN and out.stats.conflicts == 1
    assert solve(p).status == SAT


@pytest.mark.parametrize("h", HEURISTICS)
def test_restarts_and_deletion_stay_correct(h):
    cfg = dict(heuristic=h, restarts=(2, 1.5), max_recorded=4, debug=True)
    for src in corpus_programs(150, seed=77):
        p = parse_program(src)
        answers = oracle.answer_sets(p)
        out = solve(p, SolverConfig(**cfg))
        if answers:
            assert out.status == SAT and out.answer in answers
        else:
            assert out.status == UNSAT


def test_deterministic():
    p = parse_program(corpus_programs(7, seed=3)[-1])
    runs = [solve(p, SolverConfig(heuristic="lex", seed=5)) for _ in range(2)]
    for r in runs:
        r.stats.elapsed = 0.0
    assert runs[0].answer == runs[1].answer
    assert runs[0].stats == runs[1].stats


def test_hidden_constraint_atoms_not_reported():
    p = parse_program("a :- not b.\nb :- not a.\n:- b.")
    out = solve(p)
    assert out.answer_names() == ["a"]
