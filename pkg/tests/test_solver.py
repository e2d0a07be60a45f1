import random

import pytest

from conftest import F, tt_backbones, tt_entails, tt_satisfiable
from satbones import (
    UnsatFormulaError,
    entails,
    enumerate_models,
    full_backbones,
    solve,
    unit_propagate,
)
from satbones.generators import implication_cycle, random_formula


def test_solve_contradiction():
    assert solve(F([1], [-1])) is None


def test_solve_empty_formula():
    assert solve(F()) == {}


def test_solve_forced_variable():
    model = solve(F([1, 2], [-1, 2]))
    assert model is not None
    assert model[2] is True


def test_solve_model_is_total_and_satisfying():
    f = F([1, 2, 3], [-2, 4])
    model = solve(f)
    assert set(model) == f.variables
    assert f.satisfied_by(model)


def test_solve_agrees_with_truth_table_small():
    rng = random.Random(11)
    for trial in range(120):
        m = rng.randint(1, 5)
        clauses = []
        for _ in range(m):
            width = rng.randint(1, 3)
            vs = rng.sample(range(1, 5), min(width, 4))
            clauses.append([v if rng.random() < 0.5 else -v for v in vs])
        f = F(*clauses)
        assert (solve(f) is not None) == tt_satisfiable(f)


def test_solve_agrees_with_truth_table_sampled_larger():
    for seed in range(40):
        f = random_formula("3cnf", 12, 30, seed)
        assert (solve(f) is not None) == tt_satisfiable(f)


def test_unit_propagate_chain():
    result = unit_propagate(F([1], [-1, 2]))
    assert set(result.forced) == {1, 2}
    assert len(result.residual) == 0
    assert not result.conflict


def test_unit_propagate_conflict():
    result = unit_propagate(F([1], [-1]))
    assert result.conflict
    assert result.residual.has_empty_clause()


def test_unit_propagate_no_units():
    result = unit_propagate(F([1, 2]))
    assert result.forced == ()
    assert not result.conflict


def test_unit_propagate_idempotent():
    for seed in range(30):
        f = random_formula("horn", 8, 10, seed)
        result = unit_propagate(f)
        again = unit_propagate(result.residual)
        assert again.forced == ()
        assert again.residual == result.residual


def test_unit_propagate_residual_is_reduct():
    for seed in range(30):
        f = random_formula("krom", 8, 10, seed)
        result = unit_propagate(f)
        if not result.conflict:
            assert result.residual == f.reduct(result.forced)


def test_entails_unit():
    assert entails(F([1]), 1)
    assert not entails(F([1]), -1)


def test_entails_nothing_from_empty():
    assert not entails(F(), 1)


def test_entails_case_split():
    assert entails(F([1, 2], [1, -2]), 1)


def test_entails_matches_truth_table():
    rng = random.Random(3)
    for seed in range(60):
        f = random_formula("3cnf", 6, 8, seed)
        v = rng.choice(sorted(f.variables))
        assert entails(f, v) == tt_entails(f, v)
        assert entails(f, -v) == tt_entails(f, -v)


def test_full_backbones_chain():
    assert full_backbones(F([1], [-1, 2])) == {1: True, 2: True}


def test_full_backbones_none():
    assert full_backbones(F([1, 2])) == {}


def test_full_backbones_cycle_by_enumeration():
    f = implication_cycle(6)
    assert full_backbones(f) == {1: False}
    assert tt_backbones(f) == {1: False}


def test_full_backbones_unsat_input_raises():
    with pytest.raises(UnsatFormulaError):
        full_backbones(F([1], [-1]))


def test_full_backbones_matches_enumeration_random():
    checked = 0
    for seed in range(60):
        f = random_formula("3cnf", 7, 18, seed)
        if solve(f) is None:
            continue
        checked += 1
        assert full_backbones(f) == tt_backbones(f)
    assert checked >= 20


def test_enumerate_models_guard():
    f = F(*[[v] for v in range(1, 25)])
    with pytest.raises(ValueError):
        list(enumerate_models(f, max_vars=20))
