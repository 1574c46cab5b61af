"""Text forms of terms.

Iterated-function terms::

    aterm := "0" | "1" | "A[" pair ("," pair)* "]"
    pair  := "(" elem ";" aterm ")"          innermost pair first
    elem  := int | "(" int "," int ")"

Veblen terms::

    vterm := "0" | vprin ("+" vprin)*
    vprin := "p[" int "](" vterm ")"

Whitespace is ignored.  Parsing is purely syntactic; validity against an
order is checked separately.
"""
from __future__ import annotations

import re

from .ahat import ONE, ZERO, Comp, Zero
from .errors import TermSyntaxError
from .veblen import VZERO, Phi, Sum, VZero

_INT = re.compile(r"-?\d+")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.s = re.sub(r"\s+", "", text)
        self.pos = 0

    def fail(self, msg):
        raise TermSyntaxError(msg, self.s, self.pos)

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.pos)

    def take(self, lit: str):
        if not self.peek(lit):
            self.fail(f"expected {lit!r}")
        self.pos += len(lit)

    def int(self) -> int:
        m = _INT.match(self.s, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def done(self):
        if self.pos != len(self.s):
            self.fail("unexpected trailing input")


def _elem(r: _Reader):
    if r.peek("("):
        r.take("(")
        a = r.int()
        r.take(",")
        b = r.int()
        r.take(")")
        return (a, b)
    return r.int()


def _aterm(r: _Reader):
    if r.peek("A["):
        r.take("A[")
        pairs = []
        while True:
            r.take("(")
            x = _elem(r)
            r.take(";")
            e = _aterm(r)
            r.take(")")
            pairs.append((x, e))
            if r.peek(","):
                r.take(",")
                continue
            r.take("]")
            return Comp(tuple(pairs))
    if r.peek("0"):
        r.take("0")
        return ZERO
    if r.peek("1"):
        r.take("1")
        return ONE
    r.fail("expected '0', '1' or 'A['")


def parse_aterm(text: str):
    r = _Reader(text)
    t = _aterm(r)
    r.done()
    return t


def format_elem(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(format_elem(y) for y in x) + ")"
    return str(x)


def format_aterm(t) -> str:
    if isinstance(t, Zero):
        return "0"
    if not t.pairs:
        return "1"
    return "A[" + ",".join(f"({format_elem(x)};{format_aterm(e)})" for x, e in t.pairs) + "]"


def _vprin(r: _Reader):
    r.take("p[")
    x = r.int()
    r.take("](")
    arg = _vterm(r)
    r.take(")")
    return Phi(x, arg)


def _vterm(r: _Reader):
    if not r.peek("p["):
        r.take("0")
        return VZERO
    ps = [_vprin(r)]
    while r.peek("+"):
        r.take("+")
        ps.append(_vprin(r))
    return ps[0] if len(ps) == 1 else Sum(tuple(ps))


def parse_vterm(text: str):
    r = _Reader(text)
    t = _vterm(r)
    r.done()
    return t


def format_vterm(t) -> str:
    if isinstance(t, VZero):
        return "0"
    if isinstance(t, Phi):
        return f"p[{format_elem(t.index)}]({format_vterm(t.arg)})"
    return "+".join(format_vterm(p) for p in t.summands)
