import random

import pytest

from conftest import F
from satbones import (
    CnfFormula,
    ComplementaryLiteralsError,
    TautologicalClauseError,
    classify,
)
from satbones.generators import random_formula


def test_clause_rejects_complementary_pair():
    with pytest.raises(TautologicalClauseError):
        F([1, -1])


def test_duplicate_literals_collapse():
    f = F([1, 1, 2])
    assert f.clause(1) == frozenset({1, 2})


def test_duplicate_clauses_collapse_first_id_wins():
    f = CnfFormula({1: [1, 2], 2: [2, 1], 3: [-1]})
    assert f.clause_ids() == (1, 3)
    assert len(f) == 2


def test_counts_and_length():
    f = F([1, 2, 3], [-1, 2], [3])
    assert len(f) == 3
    assert f.length == 6


def test_literals_include_both_polarities():
    f = F([1, 2])
    assert f.literals == frozenset({1, -1, 2, -2})


def test_empty_clause_allowed():
    f = F([])
    assert f.has_empty_clause()
    assert f.empty_clause_id() == 1
    assert f.variables == frozenset()


def test_reduct_unit_propagation_step():
    f = F([1], [-1, 2])
    assert f.reduct([1]) == CnfFormula({2: [2]})


def test_reduct_occurrence_removal():
    f = F([1, 2])
    assert f.reduct([-2]) == CnfFormula({1: [1]})


def test_reduct_produces_empty_clause():
    f = F([-1])
    reduced = f.reduct([1])
    assert reduced.has_empty_clause()
    assert reduced.clause_ids() == (1,)


def test_reduct_rejects_complementary_assertions():
    with pytest.raises(ComplementaryLiteralsError):
        F([1, 2]).reduct([1, -1])


def test_reduct_preserves_clause_ids():
    f = F([1, 2], [3, 4], [-1, 3])
    reduced = f.reduct([-1])
    assert reduced.clause_ids() == (1, 2)
    assert reduced.clause(1) == frozenset({2})
    assert reduced.clause(2) == frozenset({3, 4})


def test_reduct_variable_shrinkage_random():
    rng = random.Random(7)
    for trial in range(50):
        f = random_formula("3cnf", 6, 8, trial)
        lits = [v if rng.random() < 0.5 else -v for v in sorted(f.variables)]
        asserted = rng.sample(lits, 2)
        reduced = f.reduct(asserted)
        assert reduced.variables <= f.variables - {abs(l) for l in asserted}


@pytest.mark.parametrize(
    "family,kwargs,flag",
    [
        ("horn", {}, "is_horn"),
        ("krom", {}, "is_krom"),
        ("definite_horn", {}, "is_definite_horn"),
    ],
)
def test_class_closure_under_instantiation(family, kwargs, flag):
    for seed in range(30):
        f = random_formula(family, 8, 8, seed, **kwargs)
        lit = min(f.literals, key=abs)
        assert getattr(classify(f.reduct([lit])), flag)


def test_vo_closure_under_instantiation():
    for seed in range(30):
        f = random_formula("vo", 14, 8, seed, d=3)
        d = classify(f).max_occurrence
        lit = min(f.literals, key=abs)
        assert classify(f.reduct([lit])).max_occurrence <= d


def test_classify_horn_example():
    flags = classify(F([-1, -2, 3]))
    assert flags.is_horn and flags.is_definite_horn
    assert flags.max_clause_width == 3
    assert flags.max_occurrence == 1
    assert not flags.is_krom


def test_classify_two_positive_literals():
    flags = classify(F([1, 2]))
    assert flags.is_krom
    assert not flags.is_horn
    assert not flags.is_nuhorn


def test_classify_negative_binary_clause():
    flags = classify(F([-1, -2]))
    assert flags.is_horn and flags.is_nuhorn and flags.is_krom
    assert not flags.is_definite_horn


def test_satisfied_by_requires_total_assignment():
    f = F([1, 2])
    assert f.satisfied_by({1: True, 2: False})
    assert not f.satisfied_by({1: False, 2: False})
    with pytest.raises(ValueError):
        f.satisfied_by({1: True})


def test_formula_equality_and_hash():
    a = F([1, 2], [-1])
    b = CnfFormula({1: [2, 1], 2: [-1]})
    assert a == b
    assert hash(a) == hash(b)
    assert a != F([1, 2])
