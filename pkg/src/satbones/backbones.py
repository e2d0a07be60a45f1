"""k-backbones, backbone order, and the iterative variants.

The decision "is x forced by some subset of at most k clauses?" is answered
by splitting the formula into its two reducts on x (disjoint variable
copies) and searching the union for a small unsatisfiable subset: a witness
inside the copy where ``-x`` was asserted certifies that the matching
original clauses entail ``x``, and vice versa.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .formula import CnfFormula
from .unsat_subsets import WitnessSubset, sus_search


class UnsatDetected(Exception):
    """Iterative analysis found the input unsatisfiable at the given level."""


class IterativeResult(NamedTuple):
    forced: tuple[int, ...]
    variables: frozenset[int]


def backbone_split(
    formula: CnfFormula, var: int
) -> tuple[CnfFormula, dict[int, tuple[int, int]]]:
    """Union of the two reducts of the formula on var, variable-disjoint.

    Returns the combined formula plus an origin map: new clause id ->
    (original clause id, literal certified by a witness containing it).
    The formula has an unsatisfiable subset of size <= k exactly when var is
    a k-backbone.
    """
    if var not in formula.variables:
        raise ValueError(f"variable {var} not in formula")
    offset = formula.max_var
    combined: dict[int, frozenset[int]] = {}
    origin: dict[int, tuple[int, int]] = {}
    new_id = 1
    for cid, c in formula.reduct((var,)).clauses():
        combined[new_id] = c
        origin[new_id] = (cid, -var)
        new_id += 1
    for cid, c in formula.reduct((-var,)).clauses():
        shifted = frozenset(l + offset if l > 0 else l - offset for l in c)
        combined[new_id] = shifted
        origin[new_id] = (cid, var)
        new_id += 1
    return CnfFormula(combined), origin


def is_k_backbone(
    formula: CnfFormula, var: int, k: int
) -> tuple[bool, Optional[bool], Optional[WitnessSubset]]:
    """Decide whether var is forced by some subset of at most k clauses.

    Returns (verdict, forced polarity, witness over original clause ids).
    """
    split, origin = backbone_split(formula, var)
    found = sus_search(split, k)
    if found is None:
        return False, None, None
    certified = {origin[cid][1] for cid in found.clause_ids}
    # the split halves share no variables, so a connected witness stays in one
    assert len(certified) == 1
    literal = certified.pop()
    witness = WitnessSubset(
        frozenset(origin[cid][0] for cid in found.clause_ids),
        kind="entails",
        literal=literal,
    )
    return True, literal > 0, witness


def backbone_order(formula: CnfFormula, var: int, kmax: int) -> Optional[int]:
    """Size of a smallest subset forcing var, or None if it exceeds kmax."""
    order, _, _ = order_with_witness(formula, var, kmax)
    return order


def order_with_witness(
    formula: CnfFormula, var: int, kmax: int
) -> tuple[Optional[int], Optional[bool], Optional[WitnessSubset]]:
    """backbone_order plus the certifying minimum witness and polarity."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    split, origin = backbone_split(formula, var)
    found = sus_search(split, kmax, minimum=True)
    if found is None:
        return None, None, None
    certified = {origin[cid][1] for cid in found.clause_ids}
    assert len(certified) == 1
    literal = certified.pop()
    witness = WitnessSubset(
        frozenset(origin[cid][0] for cid in found.clause_ids),
        kind="entails",
        literal=literal,
    )
    return len(found.clause_ids), literal > 0, witness


def local_backbones(formula: CnfFormula, k: int) -> dict[int, bool]:
    """All k-backbone variables with the polarity their witnesses certify."""
    if k < 1:
        raise ValueError("k must be >= 1")
    result: dict[int, bool] = {}
    for v in sorted(formula.variables):
        verdict, polarity, _ = is_k_backbone(formula, v, k)
        if verdict:
            result[v] = polarity
    return result


def iterative_k_backbones(formula: CnfFormula, k: int) -> IterativeResult:
    """Repeatedly assert k-forced literals and reduce, until fixpoint.

    One round scans every literal of the current formula (ascending variable,
    positive polarity first) and tests whether asserting its complement
    leaves an unsatisfiable subset of at most k clauses; the consequences are
    applied between rounds.  Raises UnsatDetected if a contradiction surfaces
    (an empty clause, or both polarities of a variable forced).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    current = formula
    forced: list[int] = []
    forced_set: set[int] = set()
    for _ in range(len(formula.literals)):
        if current.has_empty_clause():
            raise UnsatDetected("empty clause reached")
        new_literals: list[int] = []
        for lit in sorted(current.literals, key=lambda l: (abs(l), l < 0)):
            if sus_search(current.reduct((-lit,)), k) is not None:
                new_literals.append(lit)
        if not new_literals:
            break
        for lit in new_literals:
            if -lit in forced_set or -lit in new_literals:
                raise UnsatDetected(
                    f"both polarities of variable {abs(lit)} are forced"
                )
            forced.append(lit)
            forced_set.add(lit)
        current = current.reduct(new_literals)
    else:
        if current.has_empty_clause():
            raise UnsatDetected("empty clause reached")
    return IterativeResult(tuple(forced), frozenset(abs(l) for l in forced))


def iterative_order(formula: CnfFormula, var: int, kmax: int) -> Optional[int]:
    """Smallest k <= kmax at which var joins the iterative k-backbones."""
    if var not in formula.variables:
        raise ValueError(f"variable {var} not in formula")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    for k in range(1, kmax + 1):
        if var in iterative_k_backbones(formula, k).variables:
            return k
    return None
