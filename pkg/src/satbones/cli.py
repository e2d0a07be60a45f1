"""Command-line front end.

Subcommands: classify, solve, backbones, sus, local, iterative, uc,
generate, report.  Exit codes: 0 ok / answer yes, 1 answer no (decision
subcommands), 2 input error, 3 unsatisfiable input where satisfiability is
required.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .backbones import (
    UnsatDetected,
    is_k_backbone,
    iterative_k_backbones,
    local_backbones,
)
from .dimacs import DimacsError, emit_dimacs, parse_dimacs
from .formula import CnfFormula, FormulaClassError, classify
from .generators import InfeasibleParameters, implication_cycle, random_formula
from .report import build_report
from .solver import UnsatFormulaError, full_backbones, solve
from .unitref import level_reduce
from .unsat_subsets import sus_search

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_UNSAT = 3


def _read_formula(args) -> CnfFormula:
    with open(args.path, "rb") as handle:
        data = handle.read()
    return parse_dimacs(
        data,
        strict=not args.drop_tautologies,
        warn=lambda msg: print(f"warning: {msg}", file=sys.stderr),
    )


def _write_output(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _excerpt(formula: CnfFormula, clause_ids) -> str:
    lines = []
    for cid in sorted(clause_ids):
        lits = sorted(formula.clause(cid), key=lambda l: (abs(l), l < 0))
        lines.append(f"  {cid}: {' '.join(map(str, lits))} 0")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    formula = _read_formula(args)
    flags = classify(formula)
    info = {
        "n_vars": len(formula.variables),
        "n_clauses": len(formula),
        "length": formula.length,
    }
    info.update(flags.as_dict())
    if args.format == "json":
        _write_output(json.dumps(info, indent=2, sort_keys=True) + "\n", args.output)
    else:
        text = "\n".join(
            f"{key}: {str(value).lower() if isinstance(value, bool) else value}"
            for key, value in info.items()
        )
        _write_output(text + "\n", args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    formula = _read_formula(args)
    model = solve(formula)
    if model is None:
        print("UNSATISFIABLE")
        return EXIT_NO
    lits = [v if model[v] else -v for v in sorted(model)]
    print("SATISFIABLE")
    print("v " + " ".join(map(str, lits)) + " 0")
    return EXIT_OK


def cmd_backbones(args) -> int:
    formula = _read_formula(args)
    found = full_backbones(formula)
    for v in sorted(found):
        print(f"{'' if found[v] else '-'}{v}")
    print(f"total: {len(found)}")
    return EXIT_OK


def cmd_sus(args) -> int:
    formula = _read_formula(args)
    witness = sus_search(formula, args.k, minimum=args.minimum)
    if witness is None:
        print(f"no unsatisfiable subset of at most {args.k} clauses")
        return EXIT_NO
    ids = witness.sorted_ids()
    print(f"unsatisfiable subset of {len(ids)} clauses: {' '.join(map(str, ids))}")
    print(_excerpt(formula, ids))
    return EXIT_OK


def cmd_local(args) -> int:
    formula = _read_formula(args)
    if args.var is not None:
        verdict, polarity, witness = is_k_backbone(formula, args.var, args.k)
        if not verdict:
            print(f"variable {args.var} is not a {args.k}-backbone")
            return EXIT_NO
        print(
            f"variable {args.var} is a {args.k}-backbone, "
            f"polarity {'+' if polarity else '-'}"
        )
        print(_excerpt(formula, witness.clause_ids))
        return EXIT_OK
    found = local_backbones(formula, args.k)
    for v in sorted(found):
        print(f"{'' if found[v] else '-'}{v}")
    print(f"total: {len(found)}")
    return EXIT_OK


def cmd_iterative(args) -> int:
    formula = _read_formula(args)
    result = iterative_k_backbones(formula, args.k)
    if args.var is not None:
        if args.var in result.variables:
            lit = args.var if args.var in result.forced else -args.var
            print(
                f"variable {args.var} is an iterative {args.k}-backbone, "
                f"polarity {'+' if lit > 0 else '-'}"
            )
            return EXIT_OK
        print(f"variable {args.var} is not an iterative {args.k}-backbone")
        return EXIT_NO
    for lit in result.forced:
        print(lit)
    print(f"total: {len(result.forced)}")
    return EXIT_OK


def cmd_uc(args) -> int:
    formula = _read_formula(args)
    result = level_reduce(formula, args.k)
    for lit in sorted(result.forced, key=lambda l: (abs(l), l < 0)):
        print(lit)
    print(f"total: {len(result.forced)}")
    print(f"residual clauses: {len(result.residual)}")
    print(f"contradiction: {str(result.contradiction).lower()}")
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family == "cycle":
        formula = implication_cycle(args.n)
        planted = {
            "backbone_variable": 1,
            "polarity": "-",
            "order": args.n,
            "iterative_order": args.n,
        }
        params = {"n": args.n}
    else:
        formula = random_formula(
            args.family,
            args.n,
            args.m,
            args.seed,
            d=args.occ,
            min_width=args.min_width,
        )
        planted = None
        params = {
            "n": args.n,
            "m": args.m,
            "seed": args.seed,
            "d": args.occ,
            "min_width": args.min_width,
        }
    text = emit_dimacs(formula)
    if not args.output:
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.output, "w") as handle:
        handle.write(text)
    sidecar = {
        "construction": args.family,
        "params": params,
        "planted": planted,
    }
    base, _ = os.path.splitext(args.output)
    with open(base + ".json", "w") as handle:
        json.dump(sidecar, handle, indent=2, sort_keys=True)
        handle.write("\n")
    print(f"wrote {args.output} and {base}.json")
    return EXIT_OK


def cmd_report(args) -> int:
    formula = _read_formula(args)
    name = os.path.basename(args.path)
    result = build_report(formula, args.kmax, instance=name, jobs=args.jobs)
    text = result.to_csv() if args.format == "csv" else result.to_json()
    _write_output(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satbones",
        description="Backbone and small-unsatisfiable-subset analysis of CNF formulas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("path", help="DIMACS CNF file")
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--strict-tautologies",
            action="store_true",
            default=True,
            help="reject tautological clauses (default)",
        )
        group.add_argument(
            "--drop-tautologies",
            action="store_true",
            help="drop tautological clauses with a diagnostic",
        )

    p = sub.add_parser("classify", help="formula class flags and counts")
    add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("solve", help="SAT/UNSAT with a model")
    add_input(p)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("backbones", help="all backbone variables")
    add_input(p)
    p.set_defaults(handler=cmd_backbones)

    p = sub.add_parser("sus", help="small unsatisfiable subset")
    add_input(p)
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--min", dest="minimum", action="store_true",
                   help="minimum-cardinality witness")
    p.set_defaults(handler=cmd_sus)

    p = sub.add_parser("local", help="k-backbones")
    add_input(p)
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--var", type=int)
    p.set_defaults(handler=cmd_local)

    p = sub.add_parser("iterative", help="iterative k-backbones")
    add_input(p)
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--var", type=int)
    p.set_defaults(handler=cmd_iterative)

    p = sub.add_parser("uc", help="level-k generalized unit propagation")
    add_input(p)
    p.add_argument("-k", "--k", type=int, required=True)
    p.set_defaults(handler=cmd_uc)

    p = sub.add_parser("generate", help="write instance plus JSON sidecar")
    p.add_argument(
        "--family",
        required=True,
        choices=("3cnf", "krom", "horn", "definite_horn", "vo", "cycle"),
    )
    p.add_argument("-n", type=int, required=True, help="variables (cycle: length)")
    p.add_argument("-m", type=int, default=1, help="clauses")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--occ", type=int, help="occurrence bound for family vo")
    p.add_argument("--min-width", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("report", help="backbone order distribution")
    add_input(p)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except DimacsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UnsatFormulaError, UnsatDetected) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSAT
    except (InfeasibleParameters, FormulaClassError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
