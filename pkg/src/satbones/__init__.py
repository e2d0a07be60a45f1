"""Backbone, local-backbone and small-unsatisfiable-subset analysis of CNF
formulas, with class-specialized polynomial algorithms, planted-instance
generators and a reporting CLI."""

from .backbones import (
    IterativeResult,
    UnsatDetected,
    backbone_order,
    backbone_split,
    is_k_backbone,
    iterative_k_backbones,
    iterative_order,
    local_backbones,
)
from .dimacs import DimacsError, emit_dimacs, parse_dimacs
from .formula import (
    CnfFormula,
    ComplementaryLiteralsError,
    FormulaClass,
    FormulaClassError,
    TautologicalClauseError,
    classify,
)
from .horn import definite_horn_iterative_backbones, horn_consequences
from .krom import (
    ImplicationGraph,
    krom_iterative_backbones,
    krom_order_upper_bound,
)
from .report import BackboneRecord, OrderDistribution, build_report
from .solver import (
    Propagation,
    UnsatFormulaError,
    entails,
    enumerate_models,
    full_backbones,
    solve,
    unit_propagate,
)
from .unitref import LevelReduction, forced_at_level, level_reduce
from .unsat_subsets import (
    WitnessSubset,
    minimize_witness,
    sus_bruteforce,
    sus_search,
    sus_vo_search,
)

__version__ = "0.1.0"

__all__ = [
    "BackboneRecord",
    "CnfFormula",
    "ComplementaryLiteralsError",
    "DimacsError",
    "FormulaClass",
    "FormulaClassError",
    "ImplicationGraph",
    "IterativeResult",
    "LevelReduction",
    "OrderDistribution",
    "Propagation",
    "TautologicalClauseError",
    "UnsatDetected",
    "UnsatFormulaError",
    "WitnessSubset",
    "backbone_order",
    "backbone_split",
    "build_report",
    "classify",
    "definite_horn_iterative_backbones",
    "emit_dimacs",
    "entails",
    "enumerate_models",
    "forced_at_level",
    "full_backbones",
    "horn_consequences",
    "is_k_backbone",
    "iterative_k_backbones",
    "iterative_order",
    "krom_iterative_backbones",
    "krom_order_upper_bound",
    "level_reduce",
    "local_backbones",
    "minimize_witness",
    "parse_dimacs",
    "solve",
    "sus_bruteforce",
    "sus_search",
    "sus_vo_search",
    "unit_propagate",
]
