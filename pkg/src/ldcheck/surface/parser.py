"""Recursive-descent parser for .ld modules."""

from __future__ import annotations

from ..errors import ParseError
from .cst import (
    BUILTIN_NOTATIONS,
    BinderGroup,
    Item,
    ItemDef,
    ItemFlag,
    ItemImport,
    ItemNotation,
    Notation,
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
from .lexer import Token, tokenize

OP_TOKENS = {"/\\", "\\/", "<=>", "~"}


class Parser:
    def __init__(self, src: str, path: str = "<string>"):
        self.toks = tokenize(src)
        self.pos = 0
        self.path = path
        self.notations: dict[str, Notation] = {n.symbol: n for n in BUILTIN_NOTATIONS}

    # -- token utilities ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.peek()
        if not self.at(kind, text):
            want = text or kind
            raise ParseError(
                f"expected {want!r}, found {t.text or t.kind!r}",
                (t.start, t.end),
                expected=frozenset({want}),
            )
        return self.next()

    # -- modules and items --------------------------------------------------

    def parse_module(self) -> SourceModule:
        module = SourceModule(path=self.path)
        seen_def = False
        while not self.at("eof"):
            item = self.parse_item()
            if isinstance(item, ItemImport):
                if seen_def:
                    raise ParseError("imports must precede definitions", item.span)
            else:
                seen_def = True
            if isinstance(item, ItemNotation):
                module.notations.append(item.notation)
            module.items.append(item)
        module.notations = list(self.notations.values())
        return module

    def parse_item(self) -> Item:
        t = self.peek()
        if self.at("keyword", "import"):
            start = self.next().start
            path = self.expect("string")
            end = self.expect(";").end
            return ItemImport(path.text, (start, end))
        if self.at("keyword", "def"):
            return self.parse_def(primitive=False)
        if self.at("keyword", "prim"):
            return self.parse_def(primitive=True)
        if self.at("keyword", "flag"):
            return self.parse_flag()
        if self.at("keyword", "notation"):
            return self.parse_notation()
        raise ParseError(
            f"expected an item, found {t.text or t.kind!r}",
            (t.start, t.end),
            expected=frozenset({"def", "prim", "flag", "import", "notation"}),
        )

    def parse_def(self, primitive: bool) -> ItemDef:
        start = self.next().start
        name = self.expect("ident")
        params: tuple[BinderGroup, ...] = ()
        if self.at("("):
            params = self.parse_param_list()
        self.expect(":")
        declared = self.parse_term()
        body = None
        if not primitive:
            self.expect(":=")
            body = self.parse_term()
        end = self.expect(";").end
        return ItemDef(name.text, params, declared, body, (start, end))

    def parse_param_list(self) -> tuple[BinderGroup, ...]:
        self.expect("(")
        groups: list[BinderGroup] = []
        while True:
            names = [self.expect("ident").text]
            while self.at("ident"):
                names.append(self.next().text)
            self.expect(":")
            ty = self.parse_term()
            groups.append((tuple(names), ty))
            if self.at(","):
                self.next()
                continue
            break
        self.expect(")")
        return tuple(groups)

    def parse_flag(self) -> ItemFlag:
        start = self.next().start
        groups: list[BinderGroup] = []
        while self.at("("):
            groups.extend(self.parse_param_list())
        if not groups:
            t = self.peek()
            raise ParseError("flag needs at least one binder", (t.start, t.end))
        self.expect("{")
        items: list[Item] = []
        while not self.at("}"):
            if self.at("eof"):
                t = self.peek()
                raise ParseError("unterminated flag block", (t.start, t.end))
            item = self.parse_item()
            if isinstance(item, ItemImport):
                raise ParseError("imports are not allowed inside flags", item.span)
            items.append(item)
        end = self.expect("}").end
        return ItemFlag(tuple(groups), tuple(items), (start, end))

    def parse_notation(self) -> ItemNotation:
        start = self.next().start
        symbol = self.expect("string")
        if symbol.text not in OP_TOKENS:
            raise ParseError(
                f"notation symbol must be one of {sorted(OP_TOKENS)}",
                (symbol.start, symbol.end),
            )
        self.expect("keyword", "for")
        target = self.expect("ident")
        end = self.expect(";").end
        old = self.notations[symbol.text]
        notation = Notation(symbol.text, target.text, old.fixity, old.precedence)
        self.notations[symbol.text] = notation
        return ItemNotation(notation, (start, end))

    # -- terms ---------------------------------------------------------------

    def parse_term(self) -> STerm:
        if self.at("\\"):
            return self.parse_lambda()
        return self.parse_iff()

    def parse_lambda(self) -> SLam:
        start = self.next().start
        groups: list[BinderGroup] = []
        while self.at("("):
            groups.extend(self.parse_param_list())
        if not groups:
            t = self.peek()
            raise ParseError("lambda needs at least one binder", (t.start, t.end))
        self.expect("=>")
        body = self.parse_term()
        return SLam(tuple(groups), body, (start, self._last_end()))

    def parse_iff(self) -> STerm:
        lhs = self.parse_arrow()
        if self.at("<=>"):
            op = self.next()
            rhs = self.parse_iff()
            return self._binop("<=>", lhs, rhs, op)
        return lhs

    def parse_arrow(self) -> STerm:
        if self._at_binder_group():
            start = self.peek().start
            groups: list[BinderGroup] = []
            while self._at_binder_group():
                groups.extend(self.parse_param_list())
            self.expect("->")
            body = self.parse_arrow()
            return SPi(tuple(groups), body, (start, self._last_end()))
        lhs = self.parse_or()
        if self.at("->"):
            self.next()
            rhs = self.parse_arrow()
            return SArrow(lhs, rhs, (_span_of(lhs)[0], self._last_end()))
        return lhs

    def _at_binder_group(self) -> bool:
        if not self.at("("):
            return False
        k = 1
        if self.peek(k).kind != "ident":
            return False
        while self.peek(k).kind == "ident":
            k += 1
        return self.peek(k).kind == ":"

    def parse_or(self) -> STerm:
        lhs = self.parse_and()
        if self.at("\\/"):
            op = self.next()
            rhs = self.parse_or()
            return self._binop("\\/", lhs, rhs, op)
        return lhs

    def parse_and(self) -> STerm:
        lhs = self.parse_prefix()
        if self.at("/\\"):
            op = self.next()
            rhs = self.parse_and()
            return self._binop("/\\", lhs, rhs, op)
        return lhs

    def parse_prefix(self) -> STerm:
        if self.at("~"):
            op = self.next()
            arg = self.parse_prefix()
            target = self.notations["~"].target
            return SCall(target, (arg,), (op.start, _span_of(arg)[1]))
        return self.parse_app()

    def parse_app(self) -> STerm:
        head = self.parse_atom()
        while self._at_atom():
            arg = self.parse_atom()
            head = SApp(head, arg, (_span_of(head)[0], _span_of(arg)[1]))
        return head

    def _at_atom(self) -> bool:
        if self.at("(") and not self._at_binder_group():
            return True
        return self.peek().kind in ("ident",) or self.at("*") or self.at("#")

    def parse_atom(self) -> STerm:
        t = self.peek()
        if self.at("*"):
            self.next()
            return SSort(True, (t.start, t.end))
        if self.at("#"):
            self.next()
            return SSort(False, (t.start, t.end))
        if t.kind == "ident":
            self.next()
            # A call needs its '(' flush against the name; a spaced '('
            # starts an ordinary grouped argument instead.
            if self.at("(") and self.peek().start == t.end:
                self.next()
                args: list[STerm] = []
                if not self.at(")"):
                    args.append(self.parse_term())
                    while self.at(","):
                        self.next()
                        args.append(self.parse_term())
                end = self.expect(")").end
                return SCall(t.text, tuple(args), (t.start, end))
            return SName(t.text, (t.start, t.end))
        if self.at("("):
            self.next()
            if self.at("\\"):
                inner: STerm = self.parse_lambda()
            else:
                inner = self.parse_term()
            self.expect(")")
            return inner
        raise ParseError(
            f"expected a term, found {t.text or t.kind!r}",
            (t.start, t.end),
            expected=frozenset({"term"}),
        )

    def _binop(self, symbol: str, lhs: STerm, rhs: STerm, op: Token) -> SCall:
        target = self.notations[symbol].target
        return SCall(target, (lhs, rhs), (_span_of(lhs)[0], _span_of(rhs)[1]))

    def _last_end(self) -> int:
        return self.toks[max(self.pos - 1, 0)].end


def _span_of(t: STerm) -> tuple[int, int]:
    return t.span


def parse_module(text: str, path: str = "<string>") -> SourceModule:
    """Parse one .ld module; raises ParseError with a span on bad input."""
    return Parser(text, path).parse_module()
