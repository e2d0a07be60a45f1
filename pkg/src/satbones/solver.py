"""A small complete satisfiability engine: splitting plus unit propagation.

Deliberately plain (no clause learning, static lowest-variable branching) so
it can double as the trusted oracle behind every entailment and
unsatisfiable-subset check in this package.  Desk-scale instances only.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Optional

from .formula import CnfFormula

Assignment = dict[int, bool]


class UnsatFormulaError(Exception):
    """Raised where a satisfiable formula is required."""


class Propagation(NamedTuple):
    forced: tuple[int, ...]
    residual: CnfFormula
    conflict: bool


def _dpll(clauses: list[frozenset[int]]) -> Optional[Assignment]:
    assign: Assignment = {}
    while True:
        unit = 0
        for c in clauses:
            if not c:
                return None
            if len(c) == 1:
                (unit,) = c
                break
        if not unit:
            break
        assign[abs(unit)] = unit > 0
        clauses = [
            c - {-unit} if -unit in c else c for c in clauses if unit not in c
        ]
    if not clauses:
        return assign
    v = min(min(abs(l) for l in c) for c in clauses)
    for lit in (v, -v):
        sub = _dpll(
            [c - {-lit} if -lit in c else c for c in clauses if lit not in c]
        )
        if sub is not None:
            sub.update(assign)
            sub[v] = lit > 0
            return sub
    return None


def solve_sets(clause_sets: Iterable[frozenset[int]]) -> Optional[Assignment]:
    """SAT check on bare literal sets; returns a (partial) model or None."""
    return _dpll(list(clause_sets))


def solve(formula: CnfFormula) -> Optional[Assignment]:
    """Complete SAT/UNSAT decision; on SAT the model is total on Var(formula).

    Unconstrained variables default to False so the result is reproducible.
    """
    model = _dpll(list(formula.literal_sets()))
    if model is None:
        return None
    for v in formula.variables:
        model.setdefault(v, False)
    return model


def unit_propagate(formula: CnfFormula) -> Propagation:
    """Close the formula under unit-clause consequences.

    Unit clauses fire in ascending clause-id order.  ``conflict`` is set as
    soon as an empty clause appears; ``residual`` is the reduct of the input
    by the forced literals.
    """
    forced: list[int] = []
    current = formula
    while True:
        if current.has_empty_clause():
            return Propagation(tuple(forced), current, True)
        unit = 0
        for _, c in current.clauses():
            if len(c) == 1:
                (unit,) = c
                break
        if not unit:
            return Propagation(tuple(forced), current, False)
        forced.append(unit)
        current = current.reduct((unit,))


def entails(formula: CnfFormula, literal: int) -> bool:
    """Whether every model of the formula makes the literal true."""
    return solve_sets(formula.literal_sets() + (frozenset((-literal,)),)) is None


def full_backbones(formula: CnfFormula) -> dict[int, bool]:
    """All variables with one truth value across all models, with that value.

    Raises UnsatFormulaError on unsatisfiable input: under the subset-based
    definition every variable of an unsatisfiable formula would qualify, and
    we surface that degenerate case instead of reporting it.
    """
    model = solve(formula)
    if model is None:
        raise UnsatFormulaError("formula is unsatisfiable; backbones undefined")
    result: dict[int, bool] = {}
    candidates = dict(model)
    for v in sorted(formula.variables):
        if v not in candidates:
            continue
        lit = v if candidates[v] else -v
        counter = solve_sets(formula.literal_sets() + (frozenset((-lit,)),))
        if counter is None:
            result[v] = lit > 0
        else:
            # counterexample model also rules out other candidates it flips
            for u in list(candidates):
                if u in counter and counter[u] != candidates[u]:
                    del candidates[u]
    return result


def enumerate_models(
    formula: CnfFormula, max_vars: int = 20
) -> Iterator[Assignment]:
    """Yield every total satisfying assignment; brute-force test oracle."""
    variables = sorted(formula.variables)
    if len(variables) > max_vars:
        raise ValueError(f"refusing to enumerate over {len(variables)} variables")
    sets = formula.literal_sets()
    for bits in itertools.product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, bits))
        if all(any(assignment[abs(l)] == (l > 0) for l in c) for c in sets):
            yield assignment
