"""Krom (2-CNF) reasoning over the implication graph.

Each binary clause {a, b} contributes the edges -a -> b and -b -> a; a unit
clause {a} contributes the self-loop-like edge -a -> a.  A path from a
literal to its own complement forces that complement, and iterating this
rule computes the iterative k-backbones of a Krom formula when paths are
capped at k edges.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .backbones import IterativeResult, UnsatDetected
from .formula import CnfFormula, FormulaClassError, classify


class ImplicationGraph:
    """Directed graph on the literals of a Krom formula, edges labelled by
    the clause that induced them."""

    def __init__(self, formula: CnfFormula):
        if not classify(formula).is_krom:
            raise FormulaClassError("formula is not Krom")
        self.edges: dict[int, list[tuple[int, int]]] = {}
        for v in formula.variables:
            self.edges[v] = []
            self.edges[-v] = []
        for cid, c in formula.clauses():
            if len(c) == 1:
                (a,) = c
                self.edges[-a].append((a, cid))
            elif len(c) == 2:
                a, b = sorted(c)
                self.edges[-a].append((b, cid))
                self.edges[-b].append((a, cid))

    def edge_count(self) -> int:
        return sum(len(targets) for targets in self.edges.values())

    def distance(self, source: int, goal: int, max_edges: int) -> Optional[int]:
        """Fewest edges on a path source -> goal, None beyond max_edges."""
        if source not in self.edges:
            return None
        seen = {source: 0}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            dist = seen[node]
            if dist == max_edges:
                continue
            for target, _ in self.edges[node]:
                if target not in seen:
                    seen[target] = dist + 1
                    if target == goal:
                        return dist + 1
                    queue.append(target)
        return seen.get(goal)

    def to_dot(self) -> str:
        """One edge per line, clause id as the label."""
        lines = ["digraph implications {"]
        for source in sorted(self.edges):
            for target, cid in sorted(self.edges[source]):
                lines.append(f'  "{source}" -> "{target}" [label="{cid}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def krom_iterative_backbones(formula: CnfFormula, k: int) -> IterativeResult:
    """Iterative k-backbones of a Krom formula via bounded implication paths.

    While some literal l reaches its complement within k edges, the
    complement is forced and asserted (lowest variable first, positive
    polarity first).  Raises UnsatDetected when a contradiction surfaces.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not classify(formula).is_krom:
        raise FormulaClassError("formula is not Krom")
    current = formula
    forced: list[int] = []
    forced_set: set[int] = set()
    while True:
        if current.has_empty_clause():
            raise UnsatDetected("empty clause reached")
        graph = ImplicationGraph(current)
        fired = 0
        for lit in sorted(current.literals, key=lambda l: (abs(l), l < 0)):
            if graph.distance(lit, -lit, k) is not None:
                fired = -lit
                break
        if not fired:
            return IterativeResult(
                tuple(forced), frozenset(abs(l) for l in forced)
            )
        if -fired in forced_set:
            raise UnsatDetected(
                f"both polarities of variable {abs(fired)} are forced"
            )
        forced.append(fired)
        forced_set.add(fired)
        current = current.reduct((fired,))


def krom_order_upper_bound(formula: CnfFormula, var: int) -> Optional[int]:
    """Edge count of a shortest complement-to-literal path, either polarity.

    A path of e edges uses at most e distinct clauses, each such clause set
    entailing the path's endpoint, so this bounds the backbone order of var
    from above.  None when neither polarity is reachable.
    """
    if not classify(formula).is_krom:
        raise FormulaClassError("formula is not Krom")
    graph = ImplicationGraph(formula)
    bound = 2 * len(formula.variables) + 1  # no simple path is longer
    best = None
    for lit in (var, -var):
        dist = graph.distance(-lit, lit, bound)
        if dist is not None and (best is None or dist < best):
            best = dist
    return best
