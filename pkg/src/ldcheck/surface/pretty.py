"""Pretty-printing kernel terms and definitions back to parseable source."""

from __future__ import annotations

from ..env import Definition
from ..terms import App, Const, Lam, Pi, Sort, SortRef, Term, Var, shift
from .cst import Notation, PREC_APP, PREC_ARROW

ATOM = 100


def _fresh(hint: str, taken: list[str]) -> str:
    name = hint if hint and hint != "_" else "x"
    while name in taken:
        name += "'"
    return name


def _uses_var0(body: Term) -> bool:
    def go(t: Term, depth: int) -> bool:
        match t:
            case Var(k, _):
                return k == depth
            case SortRef():
                return False
            case Pi(a, b, _) | Lam(a, b, _):
                return go(a, depth) or go(b, depth + 1)
            case App(f, a):
                return go(f, depth) or go(a, depth)
            case Const(_, args):
                return any(go(a, depth) for a in args)
        raise TypeError(f"not a term: {t!r}")

    return go(body, 0)


def pretty_term(
    term: Term,
    names: list[str] | None = None,
    notations: tuple[Notation, ...] = (),
) -> str:
    """Render a term; with notations, matching constants print as operators."""
    infix = {n.target: n for n in notations if n.fixity == "infixr"}
    prefix = {n.target: n for n in notations if n.fixity == "prefix"}

    def go(t: Term, names: list[str], prec: int) -> str:
        match t:
            case SortRef(s):
                return "*" if s is Sort.STAR else "#"
            case Var(k, hint):
                if 0 <= k < len(names):
                    return names[len(names) - 1 - k]
                return f"{hint}@{k}"
            case Pi(a, b, hint):
                if not _uses_var0(b):
                    dom = go(a, names, PREC_ARROW + 1)
                    cod = go(shift(b, 1, -1), names, PREC_ARROW)
                    s = f"{dom} -> {cod}"
                else:
                    name = _fresh(hint, names)
                    dom = go(a, names, 0)
                    cod = go(b, names + [name], PREC_ARROW)
                    s = f"({name} : {dom}) -> {cod}"
                return _wrap(s, prec, PREC_ARROW)
            case Lam(a, b, hint):
                name = _fresh(hint, names)
                dom = go(a, names, 0)
                body = go(b, names + [name], 0)
                return _wrap(f"\\({name} : {dom}) => {body}", prec, 1)
            case App():
                parts = []
                head = t
                while isinstance(head, App):
                    parts.append(go(head.arg, names, PREC_APP + 1))
                    head = head.fn
                parts.append(go(head, names, PREC_APP))
                return _wrap(" ".join(reversed(parts)), prec, PREC_APP)
            case Const(name, args):
                if name in infix and len(args) == 2:
                    n = infix[name]
                    lhs = go(args[0], names, n.precedence + 1)
                    rhs = go(args[1], names, n.precedence)
                    return _wrap(f"{lhs} {n.symbol} {rhs}", prec, n.precedence)
                if name in prefix and len(args) == 1:
                    n = prefix[name]
                    return _wrap(
                        f"{n.symbol}{go(args[0], names, n.precedence)}", prec, n.precedence
                    )
                if not args:
                    return name
                inner = ", ".join(go(a, names, 0) for a in args)
                return f"{name}({inner})"
        raise TypeError(f"not a term: {t!r}")

    return go(term, list(names or []), 0)


def _wrap(s: str, outer: int, inner: int) -> str:
    return f"({s})" if inner < outer else s


def pretty_definition(d: Definition, notations: tuple[Notation, ...] = ()) -> str:
    """Print a definition as a parseable item (flags flattened into params)."""
    names: list[str] = []
    parts: list[str] = []
    for hint, ptype in d.params:
        name = _fresh(hint, names)
        parts.append(f"{name} : {pretty_term(ptype, names, notations)}")
        names.append(name)
    params = f" ({', '.join(parts)})" if parts else ""
    dtype = pretty_term(d.declared_type, names, notations)
    if d.is_primitive:
        return f"prim {d.name}{params} : {dtype};"
    body = pretty_term(d.body, names, notations)
    return f"def {d.name}{params} : {dtype} := {body};"
