"""Command line interface: solve, verify, dual, and bound subcommands.

Problem files are JSON objects with a ``kind`` of "explicit", "knapsack01"
or "ideal". Numeric literals may be integers, decimal numbers or strings
such as "3/4"; they are parsed to exact rationals. The tokens "inf" and
"-inf" appear only in output documents, never in problem inputs.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 iteration
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bounds import upper_bound
from .bruteforce import cross_check
from .cones import irreducible_components
from .core import Infinity, as_scalar
from .scalarize import ExplicitSetOracle, Knapsack01Oracle
from .solver import IterationLimitError, solve

__all__ = ["main", "load_problem", "ProblemFormatError"]


class ProblemFormatError(ValueError):
    pass


def _scalar_from_json(value):
    if isinstance(value, str) and value.strip() in ("inf", "-inf"):
        raise ProblemFormatError("infinite values are not allowed in problem inputs")
    try:
        return as_scalar(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ProblemFormatError(f"bad numeric literal {value!r}: {exc}") from exc


def _scalar_to_json(value):
    if isinstance(value, Infinity):
        return "inf" if value.sign > 0 else "-inf"
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value


def _vector_list(raw, length, what):
    if not isinstance(raw, list):
        raise ProblemFormatError(f"{what} must be a list of vectors")
    vectors = []
    for row in raw:
        if not isinstance(row, list) or (length is not None and len(row) != length):
            raise ProblemFormatError(f"{what} contains a malformed vector: {row!r}")
        vectors.append(tuple(_scalar_from_json(v) for v in row))
    return vectors


@dataclass(frozen=True)
class ProblemDocument:
    kind: str
    dim: int
    points: tuple = ()
    profits: tuple = ()
    weights: tuple = ()
    capacities: tuple = ()
    translate: tuple = None
    generators: tuple = ()


def load_problem(path) -> ProblemDocument:
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle, parse_float=Fraction)
    except OSError as exc:
        raise ProblemFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ProblemFormatError("problem document must be a JSON object")
    kind = raw.get("kind")
    dim = raw.get("d")
    if kind not in ("explicit", "knapsack01", "ideal"):
        raise ProblemFormatError(f"unknown problem kind {kind!r}")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ProblemFormatError("field 'd' must be a positive integer")

    if kind == "explicit":
        points = _vector_list(raw.get("points", []), dim, "points")
        return ProblemDocument(kind=kind, dim=dim, points=tuple(points))

    if kind == "knapsack01":
        profits = _vector_list(raw.get("P"), None, "P")
        if len(profits) != dim:
            raise ProblemFormatError("P must have one row per objective")
        items = len(profits[0]) if profits else 0
        if any(len(row) != items for row in profits):
            raise ProblemFormatError("P rows have mixed lengths")
        weights = _vector_list(raw.get("W"), items, "W")
        raw_c = raw.get("c")
        if not isinstance(raw_c, list) or len(raw_c) != len(weights):
            raise ProblemFormatError("c must list one capacity per constraint row")
        capacities = tuple(_scalar_from_json(v) for v in raw_c)
        translate = None
        if raw.get("translate") is not None:
            translate = _vector_list([raw["translate"]], dim, "translate")[0]
        return ProblemDocument(
            kind=kind,
            dim=dim,
            profits=tuple(profits),
            weights=tuple(weights),
            capacities=capacities,
            translate=translate,
        )

    generators = _vector_list(raw.get("generators", []), dim, "generators")
    for g in generators:
        for v in g:
            if not isinstance(v, int) or v < 0:
                raise ProblemFormatError(
                    f"ideal generators need nonnegative integer exponents, got {v!r}"
                )
    return ProblemDocument(kind=kind, dim=dim, generators=tuple(generators))


def _build_oracle(doc: ProblemDocument, apply_translate=True):
    if doc.kind == "explicit":
        return ExplicitSetOracle(doc.points, dim=doc.dim)
    if doc.kind == "knapsack01":
        translate = doc.translate if apply_translate else None
        return Knapsack01Oracle(doc.profits, doc.weights, doc.capacities, translate)
    raise ProblemFormatError(f"a problem of kind {doc.kind!r} cannot be solved")


def _result_document(result) -> dict:
    return {
        "nondominated": [[_scalar_to_json(v) for v in z] for z in result.nondominated],
        "local_upper_bounds": [[_scalar_to_json(v) for v in a] for a in result.bounds],
        "stats": {
            "n": result.stats.n,
            "m": result.stats.m,
            "scalarizations": result.stats.scalarization_calls,
            "upper_bound_U": result.stats.upper_bound,
        },
    }


def _emit_result(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
        return
    for z in doc["nondominated"]:
        print("\t".join(["nondominated"] + [str(v) for v in z]))
    for a in doc["local_upper_bounds"]:
        print("\t".join(["local_upper_bound"] + [str(v) for v in a]))
    for key, value in doc["stats"].items():
        print(f"stat\t{key}\t{value}")


def _queue_args(value):
    if value in ("fifo", "lifo"):
        return value, None
    if value.startswith("random:"):
        try:
            return "random", int(value.split(":", 1)[1])
        except ValueError:
            pass
    elif value == "random":
        return "random", None
    raise argparse.ArgumentTypeError(
        f"queue must be fifo, lifo or random:<seed>, not {value!r}"
    )


def cmd_solve(args) -> int:
    doc = load_problem(args.problem)
    oracle = _build_oracle(doc, apply_translate=not args.no_translate)
    queue, seed = args.queue
    result = solve(oracle, queue=queue, seed=seed, max_iter=args.max_iter)
    _emit_result(_result_document(result), args.format)
    return 0


def cmd_verify(args) -> int:
    doc = load_problem(args.problem)
    oracle = _build_oracle(doc, apply_translate=not args.no_translate)
    report = cross_check(oracle.outcomes, dim=oracle.dim)
    verdict = {
        "passed": report.passed,
        "cloud_size": report.cloud_size,
        "scalarizations": report.scalarizations,
        "expected_scalarizations": report.expected_calls,
        "missing_nondominated": [[_scalar_to_json(v) for v in z] for z in report.missing_nondominated],
        "extra_nondominated": [[_scalar_to_json(v) for v in z] for z in report.extra_nondominated],
        "missing_bounds": [[_scalar_to_json(v) for v in a] for a in report.missing_bounds],
        "extra_bounds": [[_scalar_to_json(v) for v in a] for a in report.extra_bounds],
    }
    if args.expect is not None:
        try:
            with open(args.expect, encoding="utf-8") as handle:
                expected_doc = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise ProblemFormatError(f"cannot read expected document: {exc}") from exc
        result = solve(oracle)
        actual_doc = json.loads(json.dumps(_result_document(result)))
        mismatched = sorted(
            key
            for key in set(expected_doc) | set(actual_doc)
            if expected_doc.get(key) != actual_doc.get(key)
        )
        verdict["expected_document_mismatches"] = mismatched
        verdict["passed"] = verdict["passed"] and not mismatched
    print(json.dumps(verdict, indent=2))
    return 0 if verdict["passed"] else 1


def cmd_dual(args) -> int:
    doc = load_problem(args.problem)
    if doc.kind != "ideal":
        raise ProblemFormatError("the dual subcommand needs a problem of kind 'ideal'")
    if not doc.generators:
        raise ProblemFormatError("the zero ideal has no irreducible decomposition here")
    components = sorted(irreducible_components(doc.generators))
    print(json.dumps([[_scalar_to_json(v) for v in comp] for comp in components]))
    return 0


def cmd_bound(args) -> int:
    if args.n < 0 or args.d < 0:
        raise ProblemFormatError("n and d must be nonnegative")
    print(upper_bound(args.n + args.d, args.d))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropfront",
        description="Exact nondominated sets via monomial tropical cones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute the nondominated set of a problem file")
    p_solve.add_argument("problem")
    p_solve.add_argument("--format", choices=("json", "tsv"), default="json")
    p_solve.add_argument("--max-iter", type=int, default=None)
    p_solve.add_argument("--queue", type=_queue_args, default=("fifo", None))
    p_solve.add_argument("--no-translate", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="cross-check the solver against brute force")
    p_verify.add_argument("problem")
    p_verify.add_argument("--no-translate", action="store_true")
    p_verify.add_argument("--expect", default=None, help="result document to compare against")
    p_verify.set_defaults(func=cmd_verify)

    p_dual = sub.add_parser("dual", help="irreducible components of a monomial ideal")
    p_dual.add_argument("problem")
    p_dual.set_defaults(func=cmd_dual)

    p_bound = sub.add_parser("bound", help="print the worst-case bound U(n+d, d)")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("d", type=int)
    p_bound.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IterationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
