"""Elaboration: scope resolution, flag linearization, constant saturation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..env import Definition, Environment
from ..errors import ArityMismatch, UnboundName
from ..terms import App, BOX, Const, Lam, Pi, STAR, Term, Var
from .cst import (
    BinderGroup,
    ItemDef,
    ItemFlag,
    ItemImport,
    ItemNotation,
    SApp,
    SArrow,
    SCall,
    SLam,
    SName,
    SPi,
    SSort,
    STerm,
    SourceModule,
)


@dataclass
class Scope:
    """Binder names (innermost last) plus arities of the constants in reach."""

    arities: dict[str, int]
    binders: list[str] = field(default_factory=list)
    flag_params: tuple[tuple[str, Term], ...] = ()

    def lookup_var(self, name: str) -> int | None:
        for depth, binder in enumerate(reversed(self.binders)):
            if binder == name:
                return depth
        return None


def elaborate_term(t: STerm, scope: Scope) -> Term:
    match t:
        case SSort(star, _):
            return STAR if star else BOX
        case SName(name, span):
            idx = scope.lookup_var(name)
            if idx is not None:
                return Var(idx, name)
            arity = scope.arities.get(name)
            if arity is None:
                raise UnboundName(f"unbound name {name!r}", span)
            if arity != 0:
                raise ArityMismatch(
                    f"{name} expects {arity} argument(s); constants are applied in full",
                    span,
                )
            return Const(name, ())
        case SCall(name, args, span):
            idx = scope.lookup_var(name)
            elaborated = tuple(elaborate_term(a, scope) for a in args)
            if idx is not None:
                term: Term = Var(idx, name)
                for a in elaborated:
                    term = App(term, a)
                return term
            arity = scope.arities.get(name)
            if arity is None:
                raise UnboundName(f"unbound name {name!r}", span)
            if arity != len(args):
                raise ArityMismatch(
                    f"{name} expects {arity} argument(s), got {len(args)}", span
                )
            return Const(name, elaborated)
        case SApp(f, a, _):
            return App(elaborate_term(f, scope), elaborate_term(a, scope))
        case SArrow(lhs, rhs, _):
            dom = elaborate_term(lhs, scope)
            scope.binders.append("_")
            try:
                cod = elaborate_term(rhs, scope)
            finally:
                scope.binders.pop()
            return Pi(dom, cod, "_")
        case SPi(groups, body, _):
            return _elaborate_binders(groups, body, scope, Pi)
        case SLam(groups, body, _):
            return _elaborate_binders(groups, body, scope, Lam)
    raise TypeError(f"not a surface term: {t!r}")


def _elaborate_binders(groups, body: STerm, scope: Scope, node) -> Term:
    flat = [(name, ty) for names, ty in groups for name in names]
    types: list[Term] = []
    for name, ty in flat:
        types.append(elaborate_term(ty, scope))
        scope.binders.append(name)
    try:
        result = elaborate_term(body, scope)
    finally:
        del scope.binders[len(scope.binders) - len(flat) :]
    for (name, _), ty in zip(reversed(flat), reversed(types)):
        result = node(ty, result, name)
    return result


def _elaborate_params(
    groups: tuple[BinderGroup, ...], scope: Scope
) -> tuple[tuple[str, Term], ...]:
    params: list[tuple[str, Term]] = []
    for names, ty in groups:
        for name in names:
            params.append((name, elaborate_term(ty, scope)))
            scope.binders.append(name)
    return tuple(params)


def elaborate(
    module: SourceModule, env: Environment
) -> tuple[list[Definition], dict[str, tuple[int, int]]]:
    """Turn parsed items into kernel Definitions, flags linearized to params.

    ``env`` supplies the names already elaborated from imports; items may
    reference earlier items of the same module, never later ones.
    """
    arities = {d.name: d.arity for d in env}
    defs: list[Definition] = []
    spans: dict[str, tuple[int, int]] = {}

    def walk(items, scope: Scope) -> None:
        for item in items:
            match item:
                case ItemImport() | ItemNotation():
                    continue
                case ItemFlag(groups, inner, _):
                    inner_scope = Scope(arities, list(scope.binders), scope.flag_params)
                    inner_scope.flag_params = scope.flag_params + _elaborate_params(
                        groups, inner_scope
                    )
                    walk(inner, inner_scope)
                case ItemDef(name, params, declared, body, span):
                    if name in arities:
                        raise UnboundName(f"duplicate name {name!r}", span)
                    local = Scope(arities, list(scope.binders))
                    own = _elaborate_params(params, local)
                    dtype = elaborate_term(declared, local)
                    dbody = elaborate_term(body, local) if body is not None else None
                    d = Definition(name, scope.flag_params + own, dtype, dbody)
                    defs.append(d)
                    spans[name] = span
                    arities[name] = d.arity

    walk(module.items, Scope(arities))
    return defs, spans
