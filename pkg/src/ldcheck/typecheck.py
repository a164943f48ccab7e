"""The typing judgment: type inference and checking for terms and definitions.

Two sorts * and # (the box), with the full set of product rules, plus
parameterized definitions. Definition parameters declared at type * are
sort-schematic: they also accept kind-level arguments such as ps(S). This
matches how the source material freely forms groups whose carrier is a
power set; see the corpus for the uses that require it.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

from .env import Definition, Environment, Telescope
from .errors import (
    ArityMismatch,
    DuplicateName,
    FuelExhausted,
    LDError,
    NotAFunction,
    SortError,
    TypeMismatch,
    UnboundVariable,
)
from .reduce import DEFAULT_FUEL, Fuel, convertible, whnf
from .terms import (
    BOX,
    App,
    Const,
    Lam,
    Pi,
    Sort,
    SortRef,
    STAR,
    Term,
    Var,
    shift,
    subst,
    subst_many,
)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


def infer_type(env: Environment, ctx: Telescope, term: Term, fuel: Fuel) -> Term:
    """Return T with ctx |- term : T, or raise a typing error."""
    match term:
        case SortRef(s):
            if s is Sort.STAR:
                return BOX
            raise SortError("the box has no type")
        case Var(k, hint):
            if k < 0 or k >= len(ctx):
                raise UnboundVariable(f"variable index {k} ({hint!r}) out of scope")
            # ctx stores each type in the context it was declared in.
            return shift(ctx[len(ctx) - 1 - k][1], 0, k + 1)
        case Pi(a, b, hint):
            _infer_sort(env, ctx, a, fuel, what="binder type")
            sb = _infer_sort(env, ctx + ((hint, a),), b, fuel, what="product body")
            return SortRef(sb)
        case Lam(a, m, hint):
            _infer_sort(env, ctx, a, fuel, what="binder type")
            tb = infer_type(env, ctx + ((hint, a),), m, fuel)
            if isinstance(tb, SortRef) and tb.sort is Sort.BOX:
                raise SortError("abstraction body is a kind; the box has no type")
            return Pi(a, tb, hint)
        case App(f, a):
            tf = whnf(env, infer_type(env, ctx, f, fuel), fuel)
            if not isinstance(tf, Pi):
                raise NotAFunction(
                    f"application head has non-product type {_show(env, ctx, tf, fuel)}"
                )
            ta = infer_type(env, ctx, a, fuel)
            if not convertible(env, ta, tf.binder_type, fuel):
                raise TypeMismatch(
                    "argument type does not match the product domain\n"
                    f"  argument : {_show(env, ctx, ta, fuel)}\n"
                    f"  domain   : {_show(env, ctx, tf.binder_type, fuel)}"
                )
            return subst(tf.body, 0, a)
        case Const(name, args):
            d = env.lookup(name)
            if len(args) != d.arity:
                raise ArityMismatch(
                    f"{name} expects {d.arity} argument(s), got {len(args)}"
                )
            for i, ((_, ptype), arg) in enumerate(zip(d.params, args)):
                expected = subst_many(ptype, tuple(args[:i]))
                targ = infer_type(env, ctx, arg, fuel)
                if _is_star(env, expected, fuel):
                    # Sort-schematic parameter: any well-formed type or kind.
                    ta = whnf(env, targ, fuel)
                    if not isinstance(ta, SortRef):
                        raise TypeMismatch(
                            f"argument {i + 1} of {name} must be a type or kind"
                        )
                elif not convertible(env, targ, expected, fuel):
                    raise TypeMismatch(
                        f"argument {i + 1} of {name} has the wrong type\n"
                        f"  argument : {_show(env, ctx, targ, fuel)}\n"
                        f"  expected : {_show(env, ctx, expected, fuel)}"
                    )
            return subst_many(d.declared_type, tuple(args))
    raise TypeError(f"not a term: {term!r}")


def _show(env: Environment, ctx: Telescope, t: Term, fuel: Fuel, limit: int = 400) -> str:
    from .surface.pretty import pretty_term

    names = [hint for hint, _ in ctx]
    try:
        probe = Fuel(limit=min(200_000, fuel.limit))
        rendered = pretty_term(whnf(env, t, probe), names)
    except LDError:
        rendered = pretty_term(t, names)
    return rendered if len(rendered) <= limit else rendered[: limit - 3] + "..."


def _is_star(env: Environment, expected: Term, fuel: Fuel) -> bool:
    if isinstance(expected, SortRef):
        return expected.sort is Sort.STAR
    if isinstance(expected, (Var, Pi, Lam, App)):
        return False
    reduced = whnf(env, expected, fuel)
    return isinstance(reduced, SortRef) and reduced.sort is Sort.STAR


def _infer_sort(env: Environment, ctx: Telescope, term: Term, fuel: Fuel, what: str) -> Sort:
    t = whnf(env, infer_type(env, ctx, term, fuel), fuel)
    if not isinstance(t, SortRef):
        raise SortError(f"{what} is not a type or kind")
    return t.sort


def check_type(env: Environment, ctx: Telescope, term: Term, expected: Term, fuel: Fuel) -> None:
    actual = infer_type(env, ctx, term, fuel)
    if not convertible(env, actual, expected, fuel):
        raise TypeMismatch(
            "term does not have the stated type\n"
            f"  inferred : {_show(env, ctx, actual, fuel)}\n"
            f"  declared : {_show(env, ctx, expected, fuel)}"
        )


def check_telescope(env: Environment, params: Telescope, fuel: Fuel) -> None:
    ctx: Telescope = ()
    for hint, ptype in params:
        _infer_sort(env, ctx, ptype, fuel, what=f"type of parameter {hint!r}")
        ctx = ctx + ((hint, ptype),)


@dataclass
class EntryReport:
    name: str
    ok: bool
    error_kind: Optional[str] = None
    error_message: Optional[str] = None
    span: Optional[tuple[int, int]] = None
    beta_steps: int = 0
    delta_steps: int = 0

    @property
    def fuel_used(self) -> int:
        return self.beta_steps + self.delta_steps


@dataclass
class CheckReport:
    entries: list[EntryReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[EntryReport]:
        return [e for e in self.entries if not e.ok]

    def totals(self) -> dict[str, int]:
        return {
            "definitions": len(self.entries),
            "accepted": sum(e.ok for e in self.entries),
            "rejected": sum(not e.ok for e in self.entries),
            "betaSteps": sum(e.beta_steps for e in self.entries),
            "deltaSteps": sum(e.delta_steps for e in self.entries),
            "fuelUsed": sum(e.fuel_used for e in self.entries),
        }


def check_definition(
    env: Environment,
    d: Definition,
    fuel_limit: int = DEFAULT_FUEL,
    span: Optional[tuple[int, int]] = None,
    trace=None,
) -> EntryReport:
    """Check one definition against the environment prefix."""
    fuel = Fuel(limit=fuel_limit, trace=trace)
    report = EntryReport(name=d.name, ok=True, span=span)
    try:
        if d.name in env:
            raise DuplicateName(f"duplicate definition {d.name!r}")
        check_telescope(env, d.params, fuel)
        if d.is_primitive:
            # Axioms must postulate inhabitants of types, not new kinds.
            _infer_sort(env, d.params, d.declared_type, fuel, what="primitive type")
        elif isinstance(d.declared_type, SortRef) and d.declared_type.sort is Sort.BOX:
            actual = infer_type(env, d.params, d.body, fuel)
            if not convertible(env, actual, BOX, fuel):
                raise TypeMismatch(f"{d.name}: body is not a kind")
        else:
            _infer_sort(env, d.params, d.declared_type, fuel, what="declared type")
            check_type(env, d.params, d.body, d.declared_type, fuel)
    except LDError as err:
        report.ok = False
        report.error_kind = err.kind
        report.error_message = f"{d.name}: {err.message}"
        if err.span is not None:
            report.span = err.span
    report.beta_steps = fuel.beta_steps
    report.delta_steps = fuel.delta_steps
    return report


def check_environment(
    defs: list[Definition],
    fuel_limit: int = DEFAULT_FUEL,
    keep_going: bool = False,
    spans: Optional[dict[str, tuple[int, int]]] = None,
    base: Optional[Environment] = None,
) -> tuple[Environment, CheckReport]:
    """Fold check_definition over the list, left to right.

    Rejected entries are *not* added to the environment; with keep_going the
    remaining entries are still checked against the accepted prefix.
    """
    env = base if base is not None else Environment()
    report = CheckReport()
    for d in defs:
        span = spans.get(d.name) if spans else None
        entry = check_definition(env, d, fuel_limit=fuel_limit, span=span)
        report.entries.append(entry)
        if entry.ok:
            env.add(d)
        elif not keep_going:
            break
    return env, report
