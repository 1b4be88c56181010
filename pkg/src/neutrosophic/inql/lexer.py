"""Tokenizer shared by the SQL dialect, algebra expressions and calculus queries."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError

KEYWORDS = frozenset({
    "select", "from", "where", "union", "not", "and", "or", "exists", "in",
    "any", "all", "as", "true", "false", "of", "forall",
})

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>--[^\n]*)
  | (?P<number>-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?)
  | (?P<string>'(?:[^']|'')*')
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z0-9_]+)*)
  | (?P<op>:=|!=|<>|<=|>=|[=<>(),.*{}|:;])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str          # ident, kw, number, string, op, eof
    text: str
    value: object
    line: int
    col: int

    def is_(self, kind, text=None) -> bool:
        return self.kind == kind and (text is None or self.text == text)


def tokenize(src: str, source: str | None = None, line0: int = 1) -> list[Token]:
    out = []
    pos, line, line_start = 0, line0, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            bad = src[pos]
            if bad == "'":
                raise ParseError("unterminated string literal", line, pos - line_start + 1, source)
            raise ParseError(f"unexpected character {bad!r}", line, pos - line_start + 1, source)
        kind, text = m.lastgroup, m.group()
        col = pos - line_start + 1
        if kind == "number":
            value = float(text) if any(c in text for c in ".eE") else int(text)
            out.append(Token("number", text, value, line, col))
        elif kind == "string":
            out.append(Token("string", text, text[1:-1].replace("''", "'"), line, col))
        elif kind == "ident":
            low = text.lower()
            if low in KEYWORDS:
                out.append(Token("kw", low, low, line, col))
            else:
                out.append(Token("ident", text, text, line, col))
        elif kind == "op":
            t = "!=" if text == "<>" else text
            out.append(Token("op", t, t, line, col))
        nl = text.count("\n")
        if nl:
            line += nl
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", None, line, pos - line_start + 1))
    return out
