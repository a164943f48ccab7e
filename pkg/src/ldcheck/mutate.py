"""Negative-testing harness: apply corpus mutations, assert each is rejected."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .env import Definition, Environment
from .errors import TYPE_LEVEL_KINDS, AcceptedMutant, LDError
from .reduce import DEFAULT_FUEL
from .terms import App, Const, Lam, Pi, SortRef, Term, Var
from .typecheck import check_definition


@dataclass(frozen=True)
class Mutation:
    name: str
    kind: str  # swap_args | swap_const | var_offby1 | delete_primitive | identity
    target: str
    const: Optional[str] = None
    replacement: Optional[str] = None
    occurrence: int = 0
    positions: tuple[int, int] = (0, 1)


@dataclass
class MutationOutcome:
    mutation: Mutation
    rejected: bool
    error_kind: Optional[str]
    failed_defs: list[str] = field(default_factory=list)
    non_mutant: bool = False  # mutated term identical to the original


@dataclass
class MutationReport:
    outcomes: list[MutationOutcome] = field(default_factory=list)

    @property
    def survivors(self) -> list[MutationOutcome]:
        return [o for o in self.outcomes if not o.rejected and not o.non_mutant]

    @property
    def ok(self) -> bool:
        return not self.survivors


class _Counter:
    def __init__(self, target: int):
        self.target = target
        self.seen = -1

    def hit(self) -> bool:
        self.seen += 1
        return self.seen == self.target


def _map_consts(term: Term, fn) -> Term:
    match term:
        case SortRef() | Var():
            return term
        case Pi(a, b, hint):
            return Pi(_map_consts(a, fn), _map_consts(b, fn), hint)
        case Lam(a, b, hint):
            return Lam(_map_consts(a, fn), _map_consts(b, fn), hint)
        case App(f, a):
            return App(_map_consts(f, fn), _map_consts(a, fn))
        case Const(name, args):
            mapped = Const(name, tuple(_map_consts(a, fn) for a in args))
            return fn(mapped)
    raise TypeError(f"not a term: {term!r}")


def _mutate_term(term: Term, m: Mutation) -> Term:
    if m.kind == "identity":
        return term
    if m.kind == "swap_args":
        counter = _Counter(m.occurrence)

        def swap(c: Const) -> Const:
            if c.name == m.const and counter.hit():
                i, j = m.positions
                args = list(c.args)
                args[i], args[j] = args[j], args[i]
                return Const(c.name, tuple(args))
            return c

        return _map_consts(term, swap)
    if m.kind == "swap_const":
        counter = _Counter(m.occurrence)

        def rename(c: Const) -> Const:
            if c.name == m.const and counter.hit():
                return Const(m.replacement, c.args)
            return c

        return _map_consts(term, rename)
    if m.kind == "var_offby1":
        counter = _Counter(m.occurrence)

        def bump(t: Term) -> Term:
            nonlocal_done = getattr(bump, "done", False)
            match t:
                case Var(k, hint):
                    if not nonlocal_done and counter.hit():
                        bump.done = True  # type: ignore[attr-defined]
                        return Var(k + 1, hint)
                    return t
                case SortRef():
                    return t
                case Pi(a, b, hint):
                    return Pi(bump(a), bump(b), hint)
                case Lam(a, b, hint):
                    return Lam(bump(a), bump(b), hint)
                case App(f, a):
                    return App(bump(f), bump(a))
                case Const(name, args):
                    return Const(name, tuple(bump(a) for a in args))
            raise TypeError(f"not a term: {t!r}")

        return bump(term)
    raise LDError(f"unknown mutation kind {m.kind!r}")


def run_mutations(
    defs: list[Definition],
    mutations: list[Mutation],
    fuel: int = DEFAULT_FUEL,
) -> MutationReport:
    """Apply each mutation to the (assumed green) baseline and re-check.

    A mutant counts as killed only when rejected with a type-level error;
    FuelExhausted or acceptance means the harness failed.
    """
    by_name = {d.name: i for i, d in enumerate(defs)}
    report = MutationReport()
    for m in mutations:
        if m.target not in by_name:
            raise LDError(f"mutation {m.name}: unknown target {m.target!r}")
        pos = by_name[m.target]
        if m.kind == "delete_primitive":
            outcome = _run_deletion(defs, pos, m, fuel)
        else:
            original = defs[pos]
            mutated_body = (
                _mutate_term(original.body, m) if original.body is not None else None
            )
            mutated = Definition(
                original.name, original.params, original.declared_type, mutated_body
            )
            prefix = Environment()
            for d in defs[:pos]:
                prefix.add(d)
            entry = check_definition(prefix, mutated, fuel_limit=fuel)
            non_mutant = mutated_body == original.body
            outcome = MutationOutcome(
                mutation=m,
                rejected=not entry.ok,
                error_kind=entry.error_kind,
                failed_defs=[m.target] if not entry.ok else [],
                non_mutant=non_mutant,
            )
        report.outcomes.append(outcome)
    return report


def _run_deletion(defs: list[Definition], pos: int, m: Mutation, fuel: int) -> MutationOutcome:
    env = Environment()
    for d in defs[:pos]:
        env.add(d)
    failed: list[str] = []
    kind: Optional[str] = None
    for d in defs[pos + 1 :]:
        entry = check_definition(env, d, fuel_limit=fuel)
        if entry.ok:
            env.add(d)
        else:
            failed.append(d.name)
            kind = kind or entry.error_kind
    return MutationOutcome(
        mutation=m, rejected=bool(failed), error_kind=kind, failed_defs=failed
    )


def load_mutation_spec(path: str) -> list[Mutation]:
    data = json.loads(open(path, encoding="utf-8").read())
    mutations = []
    for e in data["mutations"]:
        mutations.append(
            Mutation(
                name=e["name"],
                kind=e["kind"],
                target=e["target"],
                const=e.get("const"),
                replacement=e.get("replacement"),
                occurrence=e.get("occurrence", 0),
                positions=tuple(e.get("positions", (0, 1))),
            )
        )
    return mutations


def verify_killed(report: MutationReport) -> None:
    """Raise AcceptedMutant when any real mutant survived or only ran out of fuel."""
    for o in report.outcomes:
        if o.non_mutant:
            continue
        if not o.rejected:
            raise AcceptedMutant(f"mutant {o.mutation.name} was accepted")
        if o.error_kind is not None and o.error_kind not in TYPE_LEVEL_KINDS:
            raise AcceptedMutant(
                f"mutant {o.mutation.name} died of {o.error_kind}, not a type-level error"
            )
