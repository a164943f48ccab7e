"""Tokenizer for .ld source files (ASCII core with a few unicode aliases)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import ParseError

KEYWORDS = {"def", "prim", "flag", "import", "notation", "for", "infixl", "infixr", "prefix"}

PUNCT = [
    # longest first
    "<=>",
    ":=",
    "->",
    "=>",
    "/\\",
    "\\/",
    "(",
    ")",
    "{",
    "}",
    ",",
    ";",
    ":",
    "*",
    "#",
    "\\",
    "~",
]

ALIASES = {
    "→": "->",  # arrow
    "⇒": "->",  # double arrow, implication is the arrow type
    "∧": "/\\",
    "∨": "\\/",
    "¬": "~",
    "λ": "\\",
}


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'keyword' | 'string' | 'nat' | punctuation itself | 'eof'
    text: str
    start: int
    end: int


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch in "_'"


def tokenize(src: str) -> list[Token]:
    toks: list[Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if src.startswith("--", i):
            j = src.find("\n", i)
            i = n if j < 0 else j + 1
            continue
        if src.startswith("{-", i):
            depth, j = 1, i + 2
            while j < n and depth:
                if src.startswith("{-", j):
                    depth, j = depth + 1, j + 2
                elif src.startswith("-}", j):
                    depth, j = depth - 1, j + 2
                else:
                    j += 1
            if depth:
                raise ParseError("unterminated block comment", (i, n))
            i = j
            continue
        if ch in ALIASES:
            alias = ALIASES[ch]
            toks.append(Token(alias, alias, i, i + 1))
            i += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and src[j] != '"':
                j += 1
            if j >= n:
                raise ParseError("unterminated string literal", (i, n))
            toks.append(Token("string", src[i + 1 : j], i, j + 1))
            i = j + 1
            continue
        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_char(src[j]):
                j += 1
            text = src[i:j]
            kind = "keyword" if text in KEYWORDS else "ident"
            toks.append(Token(kind, text, i, j))
            i = j
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            toks.append(Token("nat", src[i:j], i, j))
            i = j
            continue
        for p in PUNCT:
            if src.startswith(p, i):
                toks.append(Token(p, p, i, i + len(p)))
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", (i, i + 1))
    toks.append(Token("eof", "", n, n))
    return toks


def iter_tokens(src: str) -> Iterator[Token]:
    yield from tokenize(src)
