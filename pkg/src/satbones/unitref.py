"""Levelled generalized unit propagation.

Level 0 collapses a formula to the single empty clause when it contains one
and leaves it alone otherwise.  At level k > 0, while asserting the
complement of some literal collapses at level k-1, that literal is forced
and asserted; the fixpoint is returned.  Level 1 is exactly unit
propagation.  The forced-literal sets grow with k and always over-approximate
the literal sets found by iterative k-backbone computation (strictly so on
some families).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional

from .formula import CnfFormula


class LevelReduction(NamedTuple):
    residual: CnfFormula
    forced: frozenset[int]
    contradiction: bool


def _collapse(formula: CnfFormula) -> CnfFormula:
    return formula.subset((formula.empty_clause_id(),))


def _scan_order(formula: CnfFormula) -> list[int]:
    return sorted(formula.literals, key=lambda l: (abs(l), l < 0))


@lru_cache(maxsize=None)
def _level(
    formula: CnfFormula, k: int, scan: Optional[tuple[int, ...]]
) -> LevelReduction:
    if k == 0:
        if formula.has_empty_clause():
            return LevelReduction(_collapse(formula), frozenset(), True)
        return LevelReduction(formula, frozenset(), False)
    current = formula
    forced: set[int] = set()
    progress = True
    while progress:
        progress = False
        order = [l for l in scan if l in current.literals] if scan else _scan_order(current)
        for lit in order:
            if _level(current.reduct((-lit,)), k - 1, scan).contradiction:
                forced.add(lit)
                current = current.reduct((lit,))
                progress = True
                break
    return LevelReduction(
        current, frozenset(forced), current.has_empty_clause()
    )


def level_reduce(formula: CnfFormula, k: int) -> LevelReduction:
    """Apply the level-k forced assignments to the formula.

    For k >= 1 the residual equals the reduct of the input by the forced
    literals; the contradiction flag marks the empty-clause collapse.
    Results are memoized (the recursion revisits the same reducts heavily);
    the fixpoint is independent of the literal scan order.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    return _level(formula, k, None)


def forced_at_level(formula: CnfFormula, k: int) -> frozenset[int]:
    """The forced-literal set of level_reduce."""
    return level_reduce(formula, k).forced
