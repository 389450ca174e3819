"""Command-line interface.

Subcommands: learn (fit a capacity to training data), eval (Sugeno integral
of an object under a stored capacity), check (capacity axioms and
q-properties), distance (Chebyshev distance of the induced system), oracle
(formula-versus-brute-force comparisons).

Exit codes: 0 success, 1 input error, 2 condition failure (data is valid
but the requested property does not hold), 3 enumeration budget refusal.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from .capacity import capacity_violations, is_q_maxitive, is_q_minitive
from .chebyshev import chebyshev_distance, lower_bound_rhs, upper_bound_rhs
from .errors import BudgetError, CaplearnError, DomainError
from .io import (
    dumps_json,
    load_capacity,
    load_training_set,
    report_to_json,
    save_capacity,
    system_from_json,
    _read_json,
)
from .learning import LearnMode, build_maxmin_system, build_minmax_system, learn, validate_data
from .oracle import GridSpec, enumerate_solutions, grid_chebyshev, min_learning_error
from .relational import SystemKind, apply_system, potential_greatest, potential_lowest
from .scale import ScaleKind
from .subsets import subset_label
from .sugeno import sugeno_maxmin, sugeno_minmax

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONDITION = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors (exit 1), not argparse's default exit 2,
    # which this tool reserves for condition failures
    def error(self, message):
        raise DomainError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="caplearn",
        description="Learn and evaluate capacities for Sugeno integrals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    learn_p = sub.add_parser("learn", help="fit a capacity to training data")
    learn_p.add_argument("--data", required=True, help="training CSV or JSON file")
    learn_p.add_argument(
        "--mode", required=True, choices=["greatest", "lowest", "qmax", "qmin"]
    )
    learn_p.add_argument("--q", type=int, help="cardinality bound for qmax/qmin")
    learn_p.add_argument(
        "--approx", action="store_true", help="tolerate inconsistency (qmax/qmin only)"
    )
    learn_p.add_argument("--capacity", help="where to write the learned capacity JSON")
    learn_p.add_argument("--out", help="where to write the report (default stdout)")
    _common_flags(learn_p)

    eval_p = sub.add_parser("eval", help="evaluate the Sugeno integral of objects")
    eval_p.add_argument("--capacity", required=True, help="capacity JSON file")
    eval_p.add_argument("--object", help="comma-separated coordinates, e.g. 0.2,0.5,0.3")
    eval_p.add_argument("--data", help="training file; evaluates every row")
    eval_p.add_argument("--out")
    _common_flags(eval_p)

    check_p = sub.add_parser("check", help="verify capacity axioms and q-properties")
    check_p.add_argument("--capacity", required=True)
    check_p.add_argument("--q", type=int)
    check_p.add_argument("--out")
    _common_flags(check_p)

    dist_p = sub.add_parser("distance", help="Chebyshev distance of the induced system")
    dist_p.add_argument("--data", required=True, help="training file or system JSON")
    dist_p.add_argument("--type", choices=["maxmin", "minmax"], default="maxmin")
    dist_p.add_argument("--q", type=int)
    dist_p.add_argument("--out")
    _common_flags(dist_p)

    oracle_p = sub.add_parser("oracle", help="compare formulas against brute force")
    oracle_p.add_argument("--data", required=True, help="training file or system JSON")
    oracle_p.add_argument("--type", choices=["maxmin", "minmax"], default="maxmin")
    oracle_p.add_argument("--mode", choices=["qmax", "qmin"], default="qmax")
    oracle_p.add_argument("--q", type=int)
    oracle_p.add_argument("--grid-step", type=float, default=0.05)
    oracle_p.add_argument("--budget", type=int, default=10_000_000)
    oracle_p.add_argument("--out")
    _common_flags(oracle_p)

    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--tolerance", type=float, help="override the scale tolerance")


def _table_lines(payload: Any, prefix: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_table_lines(value, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {_table_scalar(value)}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                lines.append(f"{prefix}-")
                lines.extend(_table_lines(value, prefix + "  "))
            else:
                lines.append(f"{prefix}- {_table_scalar(value)}")
    else:
        lines.append(f"{prefix}{_table_scalar(payload)}")
    return lines


def _table_scalar(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _emit(payload: Any, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = dumps_json(payload)
    else:
        text = "\n".join(_table_lines(payload)) + "\n"
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str, code: int) -> int:
    print(f"caplearn: {message}", file=sys.stderr)
    return code


def _cmd_learn(args) -> int:
    ts = load_training_set(args.data, tol=args.tolerance)
    if args.mode in ("qmax", "qmin"):
        if args.q is None:
            raise DomainError(f"--mode {args.mode} requires --q")
        mode = LearnMode(args.mode + ("_approx" if args.approx else ""))
        report = learn(ts, mode, args.q)
    else:
        if args.approx:
            raise DomainError("--approx applies to qmax/qmin modes only")
        if args.q is not None:
            raise DomainError(f"--mode {args.mode} does not take --q")
        report = learn(ts, LearnMode(args.mode))
    payload = report_to_json(report)
    data_problems = validate_data(ts)
    if data_problems:
        payload["data_warnings"] = [v.message for v in data_problems]
    _emit(payload, args.format, args.out)
    if report.capacity is None:
        return EXIT_CONDITION
    if args.capacity:
        save_capacity(report.capacity, args.capacity)
    return EXIT_OK


def _cmd_eval(args) -> int:
    mu = load_capacity(args.capacity, tol=args.tolerance)
    problems = capacity_violations(mu.values, mu.n, mu.scale)
    if problems:
        for msg in problems:
            print(f"caplearn: {msg}", file=sys.stderr)
        return EXIT_INPUT
    if (args.object is None) == (args.data is None):
        raise DomainError("eval needs exactly one of --object or --data")
    results = []
    if args.object is not None:
        coords = _parse_object(args.object)
        results.append(_eval_one(mu, coords, None))
    else:
        ts = load_training_set(args.data, tol=args.tolerance)
        for item in ts.items:
            results.append(_eval_one(mu, item.x, item.alpha))
    payload = results[0] if args.object is not None else {"evaluations": results}
    _emit(payload, args.format, args.out)
    return EXIT_OK


def _parse_object(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse object {text!r}: {exc}") from exc


def _eval_one(mu, coords, alpha) -> dict:
    lo = sugeno_maxmin(mu, coords)
    hi = sugeno_minmax(mu, coords)
    assert lo == hi, "the two integral formulas disagree; this is a bug"
    out = {"x": list(coords), "maxmin": lo, "minmax": hi, "value": lo}
    if alpha is not None:
        out["alpha"] = alpha
        out["residual"] = lo - alpha
    return out


def _cmd_check(args) -> int:
    mu = load_capacity(args.capacity, tol=args.tolerance)
    problems = capacity_violations(mu.values, mu.n, mu.scale)
    payload: dict[str, Any] = {
        "n": mu.n,
        "is_capacity": not problems,
        "violations": problems,
    }
    if args.q is not None and not problems:
        payload["q"] = args.q
        payload["q_maxitive"] = is_q_maxitive(mu, args.q)
        payload["q_minitive"] = is_q_minitive(mu, args.q)
    _emit(payload, args.format, args.out)
    return EXIT_OK if not problems else EXIT_CONDITION


def _load_system_or_build(args, kind: str):
    """Accept either a system JSON or a training file to build one from."""
    if not str(args.data).lower().endswith(".csv"):
        doc = _read_json(args.data)
        if isinstance(doc, dict) and "matrix" in doc:
            return system_from_json(doc, args.tolerance)
    ts = load_training_set(args.data, tol=args.tolerance)
    q = args.q if args.q is not None else ts.n
    builder = build_maxmin_system if kind == "maxmin" else build_minmax_system
    return builder(ts, q)


def _cmd_distance(args) -> int:
    sys_ = _load_system_or_build(args, args.type)
    report = chebyshev_distance(sys_)
    if sys_.kind is SystemKind.MAX_MIN:
        bounded = upper_bound_rhs(sys_.rhs, report.distance)
    else:
        bounded = lower_bound_rhs(sys_.rhs, report.distance)
    payload: dict[str, Any] = {
        "kind": sys_.kind.value,
        "distance": report.distance,
        "per_row": list(report.per_row),
        "bounded_rhs": list(bounded),
        "consistent": report.distance == 0.0,
        "columns": [
            subset_label(lbl) if isinstance(lbl, int) else str(lbl)
            for lbl in sys_.column_labels
        ],
    }
    if sys_.scale.kind is ScaleKind.FINITE_CHAIN:
        payload["warning"] = (
            "finite-chain values were embedded in [0, 1]; distances and"
            " approximate solutions may fall between chain levels"
        )
    _emit(payload, args.format, args.out)
    return EXIT_OK


def _grid_levels(step: float) -> tuple[float, ...]:
    if not 0.0 < step <= 1.0:
        raise DomainError(f"grid step must be in (0, 1], got {step}")
    count = round(1.0 / step)
    return tuple(i / count for i in range(count + 1))


def _cmd_oracle(args) -> int:
    checks: list[dict[str, Any]] = []
    levels = _grid_levels(args.grid_step)
    if not str(args.data).lower().endswith(".csv"):
        doc = _read_json(args.data)
        if isinstance(doc, dict) and "matrix" in doc:
            sys_ = system_from_json(doc, args.tolerance)
            checks.extend(_system_checks(sys_, levels, args))
            return _finish_oracle(checks, args)
    ts = load_training_set(args.data, tol=args.tolerance)
    q = args.q if args.q is not None else ts.n
    builder = build_maxmin_system if args.mode == "qmax" else build_minmax_system
    sys_ = builder(ts, q)
    checks.extend(_system_checks(sys_, levels, args))
    checks.append(_learning_check(ts, q, args))
    return _finish_oracle(checks, args)


def _system_checks(sys_, levels, args) -> list[dict[str, Any]]:
    formula = chebyshev_distance(sys_).distance
    step = args.grid_step
    spec = GridSpec(levels, 1, budget=args.budget)
    grid = grid_chebyshev(sys_, spec)
    tol = sys_.scale.tol
    checks = [
        {
            "check": "chebyshev distance formula vs grid search",
            "formula": formula,
            "grid": grid,
            "ok": grid >= formula - tol and abs(formula - grid) <= step + tol,
        }
    ]
    # solution candidates only need the system's own values plus the bounds;
    # a finer grid multiplies the search without new lattice behavior
    enum_levels = tuple(
        sorted({0.0, 1.0} | {v for row in sys_.matrix for v in row} | set(sys_.rhs))
    )
    enum_spec = GridSpec(enum_levels, 1, budget=args.budget)
    if sys_.kind is SystemKind.MAX_MIN:
        extremal = potential_greatest(sys_).values
        ok = all(
            all(v <= e for v, e in zip(sol.values, extremal))
            for sol in enumerate_solutions(sys_, enum_spec)
        )
        name = "every enumerated solution below the greatest vector"
    else:
        extremal = potential_lowest(sys_).values
        ok = all(
            all(v >= f for v, f in zip(sol.values, extremal))
            for sol in enumerate_solutions(sys_, enum_spec)
        )
        name = "every enumerated solution above the lowest vector"
    checks.append({"check": name, "ok": ok})
    solves = apply_system(sys_, extremal) == sys_.rhs
    checks.append(
        {
            "check": "distance is zero exactly on consistent systems",
            "ok": (formula == 0.0) == solves,
        }
    )
    return checks


def _learning_check(ts, q, args) -> dict[str, Any]:
    mode = "qmax" if args.mode == "qmax" else "qmin"
    builder = build_maxmin_system if mode == "qmax" else build_minmax_system
    formula = chebyshev_distance(builder(ts, q)).distance
    # capacity values beyond the data's own levels cannot improve the fit,
    # so the exhaustive search enumerates over exactly those
    levels = tuple(
        sorted({0.0, 1.0} | {v for item in ts.items for v in item.x} | set(ts.targets()))
    )
    spec = GridSpec(levels, ts.n, q_mode=mode, q=q, budget=args.budget)
    err, _ = min_learning_error(ts, spec)
    tol = ts.scale.tol
    learner = learn(ts, LearnMode(mode + "_approx"), q)
    resolution = max(b - a for a, b in zip(levels, levels[1:]))
    ok = err >= formula - tol
    if learner.boundary_ok:
        # the formula is attainable, so the grid optimum lands within one gap
        ok = ok and err <= formula + resolution + tol
    return {
        "check": f"minimal {mode} learning error vs exhaustive grid search",
        "formula": formula,
        "grid": err,
        "ok": ok,
    }


def _finish_oracle(checks, args) -> int:
    ok = all(c["ok"] for c in checks)
    _emit({"ok": ok, "checks": checks}, args.format, args.out)
    return EXIT_OK if ok else EXIT_CONDITION


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    handlers = {
        "learn": _cmd_learn,
        "eval": _cmd_eval,
        "check": _cmd_check,
        "distance": _cmd_distance,
        "oracle": _cmd_oracle,
    }
    try:
        args = parser.parse_args(argv)
        return handlers[args.command](args)
    except BudgetError as exc:
        return _fail(str(exc), EXIT_BUDGET)
    except CaplearnError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    raise SystemExit(main())
