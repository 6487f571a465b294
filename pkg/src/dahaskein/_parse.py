"""Tiny expression parser shared by the text formats.

Grammar (juxtaposition is multiplication, so ``s1 y1 s1`` is a product)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := power (('*' | '/')? power)*
    power   := atom ('^' ['-'] INT)?
    atom    := NUMBER | NAME | '(' expr ')'

Names are resolved through a caller-supplied table; the values only need to
support ``+ - * /`` and integer powers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, List, Mapping, Tuple

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_]*\d*)|(\S))")


class ParseError(ValueError):
    pass


def tokenize(text: str) -> List[Tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


def parse(text: str, names: Mapping[str, Any] | Callable[[str], Any], one: Any) -> Any:
    lookup = names if callable(names) else names.__getitem__
    toks = tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else ("end", "")

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        neg = False
        if peek() == ("op", "-"):
            take()
            neg = True
        val = term()
        if neg:
            val = -val
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def starts_atom(tok):
        return tok[0] in ("num", "name") or tok == ("op", "(")

    def term():
        val = power()
        while True:
            tok = peek()
            if tok == ("op", "*"):
                take()
                val = val * power()
            elif tok == ("op", "/"):
                take()
                val = val / power()
            elif starts_atom(tok):
                val = val * power()
            else:
                return val

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            kind, v = take()
            if kind != "num" or "/" in v:
                raise ParseError(f"expected integer exponent, got {v!r}")
            return base ** (sign * int(v))
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return one * Fraction(v)
        if kind == "name":
            try:
                return lookup(v)
            except (KeyError, ValueError) as exc:
                raise ParseError(f"unknown symbol {v!r}") from exc
        if (kind, v) == ("op", "("):
            val = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parenthesis")
            return val
        raise ParseError(f"unexpected token {v!r}")

    val = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input at token {toks[pos][1]!r}")
    return val
