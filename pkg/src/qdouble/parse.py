"""Text grammar for algebra elements.

Accepted tokens: generators ``E F K Kt`` (and the spellings ``Kinv``,
``Ktinv``), the parameter ``v`` (alias ``q``), ``z`` for the primitive root in
cyclotomic mode, integers, ``+ - * / ^`` and parentheses.  Juxtaposition
multiplies, so ``E F`` equals ``E*F``.  Generators may only be divided away in
the form of negative powers of ``K`` and ``Kt``.
"""

from __future__ import annotations

import re

from .pbw import DQ, INVERSE_SYMBOL, UQ, WordExpr, normalize
from .scalars import SYMBOLIC, CyclotomicQ, FieldMode

_TOKEN = re.compile(r"\s*(?:(\d+)|(Ktinv|Kinv|Kt|K|E|F|v|q|z)|(\^|\*|\+|-|/|\(|\)))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        # a letter run like "KE" must not glue into an unknown identifier
        out.append(tok)
        pos = m.end()
        nxt = _TOKEN.match(text, pos) if pos < len(text) else None
        if m.group(2) and pos < len(text) and text[pos].isalnum() and not (nxt and nxt.group(2)):
            raise ParseError(f"unknown identifier near offset {m.start(2)}")
    return out


class _Parser:
    def __init__(self, text: str, field: FieldMode):
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> WordExpr:
        if not self.toks:
            raise ParseError("empty expression")
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()!r}")
        return out

    def expr(self) -> WordExpr:
        if self.peek() == "-":
            self.take()
            out = -self.term()
        else:
            if self.peek() == "+":
                self.take()
            out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def _starts_factor(self, tok) -> bool:
        return tok is not None and (tok == "(" or tok[0].isalnum())

    def term(self) -> WordExpr:
        out = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                out = out * self.power()
            elif tok == "/":
                self.take()
                d = self.power()
                if not d.is_scalar():
                    raise ParseError("can only divide by scalars")
                val = d.scalar_value(self.field)
                if not val:
                    raise ParseError("division by zero")
                out = out * (self.field.one / val)
            elif self._starts_factor(tok):
                out = out * self.power()
            else:
                return out

    def _exponent(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        if self.peek() == "(":
            self.take()
            n = self._exponent()
            self.take(")")
            return sign * n
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"exponent must be an integer, got {tok!r}")
        return sign * int(tok)

    def power(self) -> WordExpr:
        base, letter = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        n = self._exponent()
        if n >= 0:
            out = WordExpr.scalar(self.field.one)
            for _ in range(n):
                out = out * base
            return out
        if letter is not None:
            inv = INVERSE_SYMBOL.get(letter)
            if inv is None:
                raise ParseError(f"{letter} is not invertible")
            return WordExpr.word([inv] * (-n))
        if base.is_scalar():
            val = base.scalar_value(self.field)
            if not val:
                raise ParseError("zero to a negative power")
            return WordExpr.scalar(val ** n)
        raise ParseError("negative powers apply only to scalars, K and Kt")

    def atom(self):
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner, None
        if tok.isdigit():
            return WordExpr.scalar(self.field.coerce(int(tok))), None
        if tok in ("v", "q"):
            return WordExpr.scalar(self.field.q), None
        if tok == "z":
            if not isinstance(self.field, CyclotomicQ):
                raise ParseError("z is only available in cyclotomic mode")
            return WordExpr.scalar(self.field.zeta(1)), None
        if tok in ("E", "F", "K", "Kt", "Kinv", "Ktinv"):
            return WordExpr.word([tok]), tok
        raise ParseError(f"unexpected token {tok!r}")


def parse_expr(text: str, field: FieldMode = SYMBOLIC) -> WordExpr:
    """Parse text into a free word expression."""
    return _Parser(text, field).parse()


def parse_element(text: str, algebra: str = DQ, field: FieldMode = SYMBOLIC):
    """Parse and normalize in one step."""
    if algebra not in (DQ, UQ):
        raise ParseError(f"unknown algebra {algebra!r}")
    w = parse_expr(text, field)
    if algebra == UQ and any(s in ("Kt", "Ktinv") for _, word in w.terms for s in word):
        raise ParseError("Kt does not exist in U_q")
    return normalize(w, algebra, field)


def parse_scalar(text: str, field: FieldMode = SYMBOLIC):
    w = parse_expr(text, field)
    if not w.is_scalar():
        raise ParseError(f"{text!r} is not a scalar")
    return w.scalar_value(field)
