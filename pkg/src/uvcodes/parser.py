"""Recursive-descent parser for ring and polynomial expressions.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (['*'] power)*          juxtaposition multiplies
    power  := atom ['^' INT]
    atom   := INT | 'u' | 'v' | 'x' | '(' expr ')'

Results are reduced modulo x^n - 1 as they are built, so large powers of x
stay cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .poly import FpPoly, RingPoly
from .ring import RingElement, RingParams

MAX_EXPONENT = 1 << 31

_TOKEN = re.compile(r"\s*(?:(\d+)|([uvx])|([-+*^()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str   # "int", "var", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            toks.append(_Tok("var", m.group(2), start))
        else:
            toks.append(_Tok("op", m.group(3), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, params: RingParams, n: int | None):
        self.params = params
        self.n = n
        self.toks = tokenize(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def reduce(self, f: RingPoly) -> RingPoly:
        return f.reduce_cyclic(self.n) if self.n is not None else f

    def parse(self) -> RingPoly:
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        f = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        return f

    def expr(self) -> RingPoly:
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            sign = -1 if t.text == "-" else 1
        f = self.term() * sign
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                g = self.term()
                f = f + g if t.text == "+" else f - g
            else:
                return f

    def starts_atom(self, t: _Tok) -> bool:
        return t.kind in ("int", "var") or (t.kind == "op" and t.text == "(")

    def term(self) -> RingPoly:
        f = self.power()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                f = self.reduce(f * self.power())
            elif self.starts_atom(t):
                f = self.reduce(f * self.power())
            else:
                return f

    def power(self) -> RingPoly:
        base_tok = self.peek()
        f = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e_tok = self.take()
            if e_tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer", e_tok.pos)
            e = int(e_tok.text)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", e_tok.pos)
            if base_tok.kind == "var" and base_tok.text == "x" and self.n is not None:
                return RingPoly.x_power(self.params, e % self.n)
            return self._pow(f, e)
        return f

    def _pow(self, f: RingPoly, e: int) -> RingPoly:
        result = RingPoly.constant(self.params.one())
        while e:
            if e & 1:
                result = self.reduce(result * f)
            e >>= 1
            if e:
                f = self.reduce(f * f)
        return result

    def atom(self) -> RingPoly:
        t = self.take()
        P = self.params
        if t.kind == "int":
            return RingPoly.constant(P.scalar(int(t.text) % P.p))
        if t.kind == "var":
            if t.text == "u":
                return RingPoly.constant(P.u)
            if t.text == "v":
                return RingPoly.constant(P.v)
            if self.n is None:
                raise ParseError("'x' is not allowed in a ring element", t.pos)
            return self.reduce(RingPoly.x_power(P, 1))
        if t.kind == "op" and t.text == "(":
            f = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                raise ParseError("expected ')'", close.pos)
            return f
        if t.kind == "end":
            raise ParseError("unexpected end of expression", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def parse_poly_expr(src: str, params: RingParams, n: int) -> RingPoly:
    """Evaluate ``src`` in R[x]/<x^n - 1>."""
    if n < 1:
        raise ParseError(f"length must be positive, got {n}")
    return _Parser(src, params, n).parse().reduce_cyclic(n)


def parse_ring_expr(src: str, params: RingParams) -> RingElement:
    """Evaluate an x-free expression in R."""
    return _Parser(src, params, None).parse().coeff(0)


_HEADER = re.compile(r"^\s*ring\s+(.*)$")


def parse_header(line: str) -> tuple[int, int, int]:
    m = _HEADER.match(line)
    if not m:
        raise ParseError("code file must start with 'ring p=<p> k=<k> n=<n>'", 0)
    fields = {}
    for part in m.group(1).split():
        key, sep, val = part.partition("=")
        if not sep or not val.isdigit():
            raise ParseError(f"bad header field {part!r}", line.find(part))
        fields[key] = int(val)
    missing = {"p", "k", "n"} - set(fields)
    if missing:
        raise ParseError(f"header is missing {', '.join(sorted(missing))}")
    return fields["p"], fields["k"], fields["n"]


def parse_code_file(text: str):
    """(params, n, generator expressions) from a code description file.

    Blank lines and lines starting with '#' are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty code file", 0)
    p, k, n = parse_header(lines[0])
    return RingParams(p, k), n, lines[1:]
