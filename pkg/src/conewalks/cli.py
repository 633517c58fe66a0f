"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when one fails, 2 on usage
errors (unknown model, selector or malformed argument).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, funceq, harmonics, invariants as inv, theorems
from .enumeration import REGIONS, assemble_series, count_walks
from .models import CATALOG, ModelError, get_model, model_info
from .solve import NAMED_SERIES, named_series


class UsageError(Exception):
    pass


def _model(name):
    try:
        return get_model(name)
    except ModelError:
        raise UsageError(f"unknown model {name!r}; valid choices: {', '.join(CATALOG)}") from None


def _point(text):
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected a point i,j, got {text!r}") from None
    return i, j


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True)
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _status(reports) -> int:
    return 0 if all(r.ok for r in reports) else 1


def cmd_models(args) -> int:
    if args.action != "list":
        raise UsageError("valid choices: models list")
    if args.format == "json":
        _emit(args, [model_info(n) for n in CATALOG])
    else:
        _emit(args, "\n".join(CATALOG))
    return 0


def cmd_enumerate(args) -> int:
    m = _model(args.model)
    if args.end is not None:
        end = _point(args.end)
        table = count_walks(m, args.region, args.n, keep_layers=False, targets=[end])
        _emit(args, str(table.count(args.n, *end)))
        return 0
    table = count_walks(m, args.region, args.n)
    _emit(args, table.to_csv() if args.format == "csv" else table.to_json())
    return 0


def cmd_series(args) -> int:
    if args.named:
        if args.named not in NAMED_SERIES:
            raise UsageError(f"unknown series {args.named!r}; valid choices: {', '.join(NAMED_SERIES)}")
        _emit(args, named_series(args.named, args.order + 1).truncate_t(args.order + 1).to_json())
        return 0
    m = _model(args.model)
    table = count_walks(m, args.region, args.order)
    _emit(args, assemble_series(table).to_json())
    return 0


def cmd_check(args) -> int:
    what = args.what
    if what == "theorem":
        if args.id not in theorems.THEOREM_IDS:
            raise UsageError(f"unknown theorem id {args.id!r}; valid choices: {', '.join(theorems.THEOREM_IDS)}")
        checks = theorems.check_theorem(args.id, args.order)
        _emit(args, [c.to_json() for c in checks])
        return _status(checks)
    m = _model(args.model)
    if what == "funceq":
        reports = funceq.funceq_checks(m, args.order)
    elif what == "decoupling":
        if m.name not in inv.DECOUPLING_MODELS:
            raise UsageError(f"no decoupling for {m.name}; valid choices: {', '.join(inv.DECOUPLING_MODELS)}")
        reports = inv.decoupling_checks(m, args.order, tuple(args.pole_bound))
    else:
        reports = []
        bound = tuple(args.pole_bound)
        if "I0" in inv.known_invariants(m):
            p = inv.rational_pair(m)
            p.pole_bound = bound
            reports += p.check(args.order)
        p = inv.build_I1J1(m, args.order)
        p.pole_bound = bound
        reports += p.check(args.order)
        if m.name in inv.DECOUPLING_MODELS:
            reports += inv.build_three_quadrant_pair(m, args.order, bound).pair.check(args.order)
    _emit(args, [r.to_json() for r in reports])
    return _status(reports)


def cmd_harmonic(args) -> int:
    m = _model(args.model)
    if m.name not in harmonics.HARMONIC_MODELS:
        raise UsageError(f"no harmonic data for {m.name}; valid choices: {', '.join(harmonics.HARMONIC_MODELS)}")
    try:
        grid = (harmonics.quadrant_grid if args.region == "quadrant" else harmonics.harmonic_grid)(
            m.name, args.imax, args.prec)
    except harmonics.HarmonicError as exc:
        _emit(args, {"model": m.name, "status": "fail", "error": str(exc)})
        return 1
    _emit(args, grid.to_json())
    return 0 if all(grid.checks.values()) else 1


def cmd_asymptotics(args) -> int:
    m = _model(args.model)
    if m.name == "m6":
        _emit(args, harmonics.da_predictions(args.n, args.prec))
        return 0
    if m.name not in harmonics.HARMONIC_MODELS:
        raise UsageError(f"no asymptotic data for {m.name}; valid choices: "
                         f"{', '.join(harmonics.HARMONIC_MODELS)}, m6")
    target = None if args.target == "total" else _point(args.target)
    try:
        report = harmonics.asymptotics(m.name, target, args.n, beta=args.beta)
    except harmonics.HarmonicError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, report)
    return 0


def cmd_suite(args) -> int:
    numbers = None
    if args.criteria:
        try:
            numbers = sorted({int(v) for v in args.criteria.split(",")})
        except ValueError:
            raise UsageError("--criteria takes a comma-separated list of integers") from None
        bad = [n for n in numbers if n not in acceptance.CRITERIA]
        if bad:
            raise UsageError(f"unknown criteria {bad}; valid choices: 1..{len(acceptance.CRITERIA)}")
    results = acceptance.run_all(numbers)
    if args.format == "json":
        payload = [r.to_json() for r in results]
        if not args.timings:
            for item in payload:
                item.pop("seconds")
        _emit(args, payload)
    else:
        _emit(args, "\n".join(r.line() for r in results))
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conewalks", description="Lattice walks in the three-quadrant cone.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("json",)):
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("models", help="list catalog models")
    sp.add_argument("action", choices=["list"])
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_models)

    sp = sub.add_parser("enumerate", help="count walks by length and endpoint")
    sp.add_argument("--model", required=True)
    sp.add_argument("--region", choices=REGIONS, default="three-quadrant")
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--end", help="print only the count at this endpoint, i,j")
    common(sp, ("json", "csv"))
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("series", help="generating series, or a named algebraic series")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--model")
    g.add_argument("--named")
    sp.add_argument("--region", choices=REGIONS, default="three-quadrant")
    sp.add_argument("--order", type=int, default=18)
    common(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("check", help="exact identity checks")
    sp.add_argument("what", choices=["funceq", "decoupling", "invariants", "theorem"])
    sp.add_argument("--model")
    sp.add_argument("--id")
    sp.add_argument("--order", type=int)
    sp.add_argument("--pole-bound", type=int, nargs=2, default=(2, 2), metavar=("BX", "BY"))
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("harmonic", help="harmonic function grid")
    sp.add_argument("--model", required=True)
    sp.add_argument("--imax", type=int, default=20)
    sp.add_argument("--prec", type=int, default=50)
    sp.add_argument("--region", choices=["three-quadrant", "quadrant"], default="three-quadrant")
    common(sp)
    sp.set_defaults(func=cmd_harmonic)

    sp = sub.add_parser("asymptotics", help="asymptotic constant from counts")
    sp.add_argument("--model", required=True)
    sp.add_argument("--target", default="0,0", help="i,j or 'total'")
    sp.add_argument("--n", type=int, default=150)
    sp.add_argument("--prec", type=int, default=50)
    sp.add_argument("--beta", type=float, default=0.25, help="exponent of the correction term")
    common(sp)
    sp.set_defaults(func=cmd_asymptotics)

    sp = sub.add_parser("suite", help="run the acceptance battery")
    sp.add_argument("--criteria", help="comma-separated subset, default all")
    sp.add_argument("--timings", action="store_true", help="include run times (not deterministic)")
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "check":
        if args.what == "theorem" and not args.id:
            print("check theorem needs --id", file=sys.stderr)
            return 2
        if args.what != "theorem" and not args.model:
            print(f"check {args.what} needs --model", file=sys.stderr)
            return 2
        if args.order is None:
            args.order = None if args.what == "theorem" else 18
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
