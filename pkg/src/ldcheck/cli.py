"""ldcheck: batch driver for checking .ld files and running the mutation suite."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .env import Environment
from .errors import LDError, ParseError
from .loader import load_paths
from .mutate import load_mutation_spec, run_mutations, verify_killed
from .reduce import DEFAULT_FUEL, Fuel, normalize
from .surface.pretty import pretty_term
from .typecheck import CheckReport, check_environment


def _default_fuel() -> int:
    raw = os.environ.get("LDCHECK_FUEL")
    if raw:
        try:
            return int(raw)
        except ValueError:
            print(f"ldcheck: ignoring bad LDCHECK_FUEL={raw!r}", file=sys.stderr)
    return DEFAULT_FUEL


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ldcheck")
    sub = ap.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="parse and type-check .ld files")
    check.add_argument("paths", nargs="+", help=".ld files or directories")
    check.add_argument("--fuel", type=int, default=None, help="step budget per definition")
    check.add_argument("--keep-going", action="store_true", help="report all failures")
    check.add_argument("--json", action="store_true", help="machine-readable report")
    check.add_argument("--trace", metavar="NAME", default=None, help="print beta/delta trace for one definition")
    check.add_argument("--freeze", metavar="NAMES", default="", help="comma-separated constants the trace will not unfold")

    mutate = sub.add_parser("mutate", help="run a mutation spec against a corpus")
    mutate.add_argument("corpus", nargs="+", help=".ld files or directories (baseline)")
    mutate.add_argument("spec", help="JSON mutation spec")
    mutate.add_argument("--fuel", type=int, default=None)
    return ap


def _report_json(report: CheckReport) -> str:
    definitions = []
    for e in report.entries:
        entry: dict = {"name": e.name, "verdict": "ok" if e.ok else "error"}
        if not e.ok:
            entry["error"] = {
                "kind": e.error_kind,
                "span": list(e.span) if e.span else None,
                "message": e.error_message,
            }
        entry["stats"] = {
            "betaSteps": e.beta_steps,
            "deltaSteps": e.delta_steps,
            "fuelUsed": e.fuel_used,
        }
        definitions.append(entry)
    payload = {
        "definitions": definitions,
        "summary": report.totals(),
        "elapsed": report.elapsed,
    }
    return json.dumps(payload, indent=2)


def _report_human(report: CheckReport) -> str:
    lines = []
    for e in report.entries:
        if e.ok:
            lines.append(f"ok    {e.name}  (beta {e.beta_steps}, delta {e.delta_steps})")
        else:
            lines.append(f"FAIL  {e.name}  [{e.error_kind}] {e.error_message}")
    totals = report.totals()
    lines.append(
        f"checked {totals['definitions']} definition(s): "
        f"{totals['accepted']} ok, {totals['rejected']} rejected "
        f"({report.elapsed:.2f}s)"
    )
    return "\n".join(lines)


def cmd_check(args: argparse.Namespace) -> int:
    fuel = args.fuel if args.fuel is not None else _default_fuel()
    started = time.monotonic()
    try:
        loaded = load_paths(args.paths)
    except ParseError as err:
        print(f"ldcheck: syntax error at {err.span}: {err.message}", file=sys.stderr)
        return 1
    except LDError as err:
        print(f"ldcheck: {err.message}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"ldcheck: {err}", file=sys.stderr)
        return 2
    env, report = check_environment(
        loaded.defs, fuel_limit=fuel, keep_going=args.keep_going, spans=loaded.spans
    )
    report.elapsed = time.monotonic() - started
    print(_report_json(report) if args.json else _report_human(report))
    if args.trace:
        _print_trace(env, args.trace, fuel, frozenset(filter(None, args.freeze.split(","))))
    return 0 if report.ok else 1


def _print_trace(env: Environment, name: str, fuel_limit: int, frozen: frozenset[str]) -> None:
    if name not in env:
        print(f"trace: {name!r} was not accepted; nothing to trace", file=sys.stderr)
        return
    d = env.lookup(name)
    steps: list[str] = []

    def trace(kind: str, at) -> None:
        head = at.name if hasattr(at, "name") else type(at).__name__
        steps.append(f"{len(steps) + 1:4d}  {kind:5s} {head}")

    fuel = Fuel(limit=fuel_limit, trace=trace)
    target = d.body if d.body is not None else d.declared_type
    nf = normalize(env, target, fuel, frozen=frozen)
    print(f"trace {name}: {fuel.beta_steps} beta, {fuel.delta_steps} delta step(s)")
    print("\n".join(steps))
    print(f"normal form: {pretty_term(nf, [h for h, _ in d.params])}")


def cmd_mutate(args: argparse.Namespace) -> int:
    fuel = args.fuel if args.fuel is not None else _default_fuel()
    try:
        loaded = load_paths(args.corpus)
        mutations = load_mutation_spec(args.spec)
    except LDError as err:
        print(f"ldcheck: {err.message}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"ldcheck: {err}", file=sys.stderr)
        return 2
    report = run_mutations(loaded.defs, mutations, fuel=fuel)
    for o in report.outcomes:
        if o.non_mutant:
            verdict = "NON-MUTANT (no change)"
        elif o.rejected:
            verdict = f"killed [{o.error_kind}] at {', '.join(o.failed_defs)}"
        else:
            verdict = "SURVIVED"
        print(f"{o.mutation.name}: {verdict}")
    try:
        verify_killed(report)
    except LDError as err:
        print(f"ldcheck: {err.message}", file=sys.stderr)
        return 1
    print(f"{sum(1 for o in report.outcomes if not o.non_mutant)} mutant(s), all killed")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "mutate":
        return cmd_mutate(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
