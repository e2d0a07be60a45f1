"""Finding small unsatisfiable subsets of CNF formulas.

Three routes with identical verdicts:

* ``sus_bruteforce`` -- reference oracle, plain enumeration by subset size;
* ``sus_search`` -- bounded search over connected sub-formulas of the
  incidence graph, restricted to clauses shorter than k (a subset-minimal
  unsatisfiable formula has more clauses than variables, so none of its
  clauses can reach size k);
* ``sus_vo_search`` -- branching search for bounded-occurrence formulas that
  grows a candidate set one variable at a time.

All searches are deterministic: seeds in ascending clause-id order,
extensions in ascending id order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .formula import CnfFormula
from .solver import solve_sets


@dataclass(frozen=True)
class WitnessSubset:
    """Clause ids certifying unsatisfiability or entailment of a literal."""

    clause_ids: frozenset[int]
    kind: str = "unsat"  # "unsat" | "entails"
    literal: Optional[int] = None

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.clause_ids))


def _is_unsat(clause_sets) -> bool:
    return solve_sets(clause_sets) is None


def sus_bruteforce(formula: CnfFormula, k: int) -> Optional[WitnessSubset]:
    """Minimum-cardinality unsatisfiable subset of size <= k, by enumeration.

    Reference oracle: no pruning beyond bailing out early when the whole
    formula is satisfiable.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if solve_sets(formula.literal_sets()) is not None:
        return None
    ids = formula.clause_ids()
    for size in range(1, min(k, len(ids)) + 1):
        for combo in itertools.combinations(ids, size):
            if _is_unsat([formula.clause(cid) for cid in combo]):
                return WitnessSubset(frozenset(combo))
    return None


def _short_clauses(formula: CnfFormula, k: int) -> dict[int, frozenset[int]]:
    return {cid: c for cid, c in formula.clauses() if len(c) < k}


def _neighbors(star: dict[int, frozenset[int]]) -> dict[int, tuple[int, ...]]:
    by_var: dict[int, list[int]] = {}
    for cid, c in star.items():
        for l in c:
            by_var.setdefault(abs(l), []).append(cid)
    adjacent: dict[int, set[int]] = {cid: set() for cid in star}
    for ids in by_var.values():
        for cid in ids:
            adjacent[cid].update(ids)
    return {
        cid: tuple(sorted(peers - {cid})) for cid, peers in adjacent.items()
    }


def sus_search(
    formula: CnfFormula, k: int, minimum: bool = False
) -> Optional[WitnessSubset]:
    """Bounded search for an unsatisfiable subset of at most k clauses.

    Enumerates connected sub-formulas of the incidence graph, each exactly
    once (from the seed with the smallest clause id).  With ``minimum=True``
    the subset size is iteratively deepened, so the returned witness has
    minimum cardinality; otherwise the first witness found is returned.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    star = _short_clauses(formula, k)
    for cid, c in star.items():
        if not c:
            return WitnessSubset(frozenset((cid,)))
    if solve_sets(star.values()) is not None:
        return None
    neighbors = _neighbors(star)

    def extend(
        sub: list[int], banned: set[int], seed: int, target: Optional[int]
    ) -> Optional[frozenset[int]]:
        if target is None or len(sub) == target:
            if _is_unsat([star[i] for i in sub]):
                return frozenset(sub)
            if target is not None:
                return None
        if len(sub) == (target if target is not None else k):
            return None
        frontier = set()
        for member in sub:
            frontier.update(neighbors[member])
        candidates = sorted(
            x for x in frontier if x > seed and x not in banned and x not in sub
        )
        blocked = set(banned)
        for x in candidates:
            found = extend(sub + [x], blocked, seed, target)
            if found is not None:
                return found
            blocked.add(x)
        return None

    seeds = sorted(star)
    if minimum:
        for target in range(1, min(k, len(star)) + 1):
            for seed in seeds:
                found = extend([seed], set(), seed, target)
                if found is not None:
                    return WitnessSubset(found)
        return None
    for seed in seeds:
        found = extend([seed], set(), seed, None)
        if found is not None:
            return WitnessSubset(found)
    return None


def sus_vo_search(formula: CnfFormula, k: int, d: int) -> Optional[WitnessSubset]:
    """Branching search for formulas whose variables occur at most d times.

    From each seed clause, grow a candidate set: pick the lowest unmarked
    variable of the current set, branch over every subset of the other short
    clauses through that variable (the empty subset simulates skipping it),
    mark the variable, and test satisfiability at every step.  Branches die
    when they exceed k clauses or run out of unmarked variables while
    satisfiable.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    occurrence: dict[int, int] = {}
    for _, c in formula.clauses():
        for l in c:
            occurrence[abs(l)] = occurrence.get(abs(l), 0) + 1
    offending = [v for v, n in occurrence.items() if n > d]
    if offending:
        raise ValueError(
            f"variable {min(offending)} occurs more than {d} times"
        )
    star = _short_clauses(formula, k)
    if solve_sets(star.values()) is not None:
        return None
    by_var: dict[int, list[int]] = {}
    for cid, c in star.items():
        for l in c:
            by_var.setdefault(abs(l), []).append(cid)

    def branch(sub: frozenset[int], marked: frozenset[int]) -> Optional[frozenset[int]]:
        if len(sub) > k:
            return None
        if _is_unsat([star[i] for i in sub]):
            return sub
        unmarked = sorted(
            v
            for v in {abs(l) for i in sub for l in star[i]}
            if v not in marked
        )
        if not unmarked:
            return None
        z = unmarked[0]
        through_z = sorted(set(by_var.get(z, ())) - sub)
        for bits in range(1 << len(through_z)):
            extra = frozenset(
                through_z[i] for i in range(len(through_z)) if bits >> i & 1
            )
            found = branch(sub | extra, marked | {z})
            if found is not None:
                return found
        return None

    for seed in sorted(star):
        found = branch(frozenset((seed,)), frozenset())
        if found is not None:
            return WitnessSubset(found)
    return None


def minimize_witness(formula: CnfFormula, witness: WitnessSubset) -> WitnessSubset:
    """Shrink an unsatisfiability witness to a subset-minimal one.

    Deletion test in ascending id order; the result satisfies the
    more-clauses-than-variables inequality of minimal unsatisfiable formulas.
    """
    if witness.kind != "unsat":
        raise ValueError("can only minimize unsatisfiability witnesses")
    kept = sorted(witness.clause_ids)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1 :]
        if _is_unsat([formula.clause(cid) for cid in trial]):
            kept = trial
        else:
            i += 1
    return WitnessSubset(frozenset(kept))
