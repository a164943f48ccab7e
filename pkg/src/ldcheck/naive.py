"""A deliberately naive reference checker.

Used as the oracle against the optimized kernel: it fully normalizes before
every comparison, unfolds every descriptive constant it meets, and shares
nothing. Slow on purpose; it must only be simple enough to trust.
"""

from __future__ import annotations

from .env import Environment
from .errors import (
    ArityMismatch,
    NotAFunction,
    SortError,
    TypeMismatch,
    UnboundVariable,
)
from .reduce import Fuel
from .terms import (
    App,
    BOX,
    Const,
    Lam,
    Pi,
    Sort,
    SortRef,
    Term,
    Var,
    alpha_eq,
    shift,
    subst,
    subst_many,
)


def naive_normalize(env: Environment, term: Term, fuel: Fuel) -> Term:
    """Leftmost-outermost full beta/delta normalization."""
    match term:
        case SortRef() | Var():
            return term
        case Const(name, args):
            d = env.lookup(name)
            if len(args) != d.arity:
                raise ArityMismatch(f"{name}: arity {d.arity} != {len(args)}")
            if d.is_primitive:
                return Const(name, tuple(naive_normalize(env, a, fuel) for a in args))
            fuel.spend_delta(term)
            return naive_normalize(env, subst_many(d.body, args), fuel)
        case Pi(a, b, hint):
            return Pi(naive_normalize(env, a, fuel), naive_normalize(env, b, fuel), hint)
        case Lam(a, b, hint):
            return Lam(naive_normalize(env, a, fuel), naive_normalize(env, b, fuel), hint)
        case App(f, a):
            fn = naive_normalize(env, f, fuel)
            if isinstance(fn, Lam):
                fuel.spend_beta(term)
                return naive_normalize(env, subst(fn.body, 0, a), fuel)
            return App(fn, naive_normalize(env, a, fuel))
    raise TypeError(f"not a term: {term!r}")


def naive_convertible(env: Environment, a: Term, b: Term, fuel: Fuel) -> bool:
    return alpha_eq(naive_normalize(env, a, fuel), naive_normalize(env, b, fuel))


def naive_infer(env: Environment, ctx: tuple, term: Term, fuel: Fuel) -> Term:
    match term:
        case SortRef(s):
            if s is Sort.STAR:
                return BOX
            raise SortError("the box has no type")
        case Var(k, hint):
            if k < 0 or k >= len(ctx):
                raise UnboundVariable(f"index {k} ({hint!r}) out of scope")
            return shift(ctx[len(ctx) - 1 - k][1], 0, k + 1)
        case Pi(a, b, hint):
            _naive_sort(env, ctx, a, fuel)
            sb = _naive_sort(env, ctx + ((hint, a),), b, fuel)
            return SortRef(sb)
        case Lam(a, m, hint):
            _naive_sort(env, ctx, a, fuel)
            tb = naive_infer(env, ctx + ((hint, a),), m, fuel)
            if isinstance(tb, SortRef) and tb.sort is Sort.BOX:
                raise SortError("abstraction body is a kind")
            return Pi(a, tb, hint)
        case App(f, a):
            tf = naive_normalize(env, naive_infer(env, ctx, f, fuel), fuel)
            if not isinstance(tf, Pi):
                raise NotAFunction("application of a non-function")
            ta = naive_infer(env, ctx, a, fuel)
            if not naive_convertible(env, ta, tf.binder_type, fuel):
                raise TypeMismatch("argument/domain mismatch")
            return subst(tf.body, 0, a)
        case Const(name, args):
            d = env.lookup(name)
            if len(args) != d.arity:
                raise ArityMismatch(f"{name}: expected {d.arity} args")
            for i, ((_, ptype), arg) in enumerate(zip(d.params, args)):
                expected = naive_normalize(env, subst_many(ptype, tuple(args[:i])), fuel)
                targ = naive_infer(env, ctx, arg, fuel)
                if isinstance(expected, SortRef) and expected.sort is Sort.STAR:
                    ta = naive_normalize(env, targ, fuel)
                    if not isinstance(ta, SortRef):
                        raise TypeMismatch(f"argument {i + 1} of {name}: not a type")
                elif not naive_convertible(env, targ, expected, fuel):
                    raise TypeMismatch(f"argument {i + 1} of {name}")
            return subst_many(d.declared_type, tuple(args))
    raise TypeError(f"not a term: {term!r}")


def _naive_sort(env: Environment, ctx: tuple, term: Term, fuel: Fuel) -> Sort:
    t = naive_normalize(env, naive_infer(env, ctx, term, fuel), fuel)
    if not isinstance(t, SortRef):
        raise SortError("expected a type or kind")
    return t.sort


def naive_check_definition(env: Environment, d, fuel_limit: int) -> tuple[bool, str]:
    """Accept/reject one definition; returns (ok, error-kind-or-empty)."""
    fuel = Fuel(limit=fuel_limit)
    try:
        ctx: tuple = ()
        for hint, ptype in d.params:
            _naive_sort(env, ctx, ptype, fuel)
            ctx = ctx + ((hint, ptype),)
        if d.is_primitive:
            _naive_sort(env, ctx, d.declared_type, fuel)
        elif isinstance(d.declared_type, SortRef) and d.declared_type.sort is Sort.BOX:
            actual = naive_infer(env, ctx, d.body, fuel)
            if not naive_convertible(env, actual, BOX, fuel):
                raise TypeMismatch("body is not a kind")
        else:
            _naive_sort(env, ctx, d.declared_type, fuel)
            actual = naive_infer(env, ctx, d.body, fuel)
            if not naive_convertible(env, actual, d.declared_type, fuel):
                raise TypeMismatch("body/declared type mismatch")
        return True, ""
    except Exception as exc:  # noqa: BLE001 - verdicts, not diagnostics
        return False, type(exc).__name__
