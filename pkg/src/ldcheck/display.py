"""One-way display rendering for theorem statements (index/reporting only).

This is presentation sugar: it drops carrier arguments and prints the usual
infix symbols. It is intentionally not re-parseable; the canonical printer
in surface.pretty is the one that round-trips.
"""

from __future__ import annotations

from .terms import App, Const, Lam, Pi, Sort, SortRef, Term, Var, shift
from .surface.pretty import _fresh, _uses_var0

# name -> (fixity, symbol, arg positions used for display)
INFIX = {
    "eq": ("=", (1, 2)),
    "ext_eq": ("=ext", (1, 2)),
    "element": ("eps", (1, 2)),
    "subseteq": ("<=", (1, 2)),
    "cap": ("/^\\", (1, 2)),
    "cup": ("\\v/", (1, 2)),
    "and": ("/\\", (0, 1)),
    "or": ("\\/", (0, 1)),
    "iff": ("<=>", (0, 1)),
    "mt_1": ("*.", (3, 2)),
    "mt_2": (".*", (2, 3)),
    "Mt_1": ("**", (2, 3)),
    "Subgroup": ("=<", (5, 1)),
    "Normal_subgroup": ("<|", (5, 1)),
}

PREFIX = {"not": "~"}

POSTFIX = {"Iv": ("^-1", 2)}

BINDER = {"all": "forall", "ex": "exists", "ex1": "exists1"}


def display_term(term: Term, names: list[str] | None = None) -> str:
    names = list(names or [])

    def go(t: Term, names: list[str], atomic: bool) -> str:
        s = _go(t, names)
        if atomic and (" " in s) and not (s.startswith("(") and s.endswith(")")):
            return f"({s})"
        return s

    def _go(t: Term, names: list[str]) -> str:
        match t:
            case SortRef(s):
                return "*" if s is Sort.STAR else "#"
            case Var(k, hint):
                if 0 <= k < len(names):
                    return names[len(names) - 1 - k]
                return hint
            case Pi(a, b, hint):
                if not _uses_var0(b):
                    return f"{go(a, names, True)} -> {_go(shift(b, 1, -1), names)}"
                n = _fresh(hint, names)
                return f"({n} : {_go(a, names)}) -> {_go(b, names + [n])}"
            case Lam(a, b, hint):
                n = _fresh(hint, names)
                return f"\\{n}. {_go(b, names + [n])}"
            case App(f, a):
                return f"{go(f, names, True)} {go(a, names, True)}"
            case Const(name, args):
                if name in INFIX and args:
                    sym, (i, j) = INFIX[name]
                    return f"{go(args[i], names, True)} {sym} {go(args[j], names, True)}"
                if name in PREFIX and len(args) == 1:
                    return f"{PREFIX[name]}{go(args[0], names, True)}"
                if name in POSTFIX:
                    sym, i = POSTFIX[name]
                    return f"{go(args[i], names, True)}{sym}"
                if name in BINDER and len(args) == 2 and isinstance(args[1], Lam):
                    lam = args[1]
                    n = _fresh(lam.hint, names)
                    return f"{BINDER[name]} {n} : {go(args[0], names, True)}. {_go(lam.body, names + [n])}"
                if not args:
                    return name
                inner = ", ".join(_go(a, names) for a in args)
                return f"{name}({inner})"
        raise TypeError(f"not a term: {t!r}")

    return _go(term, names)
