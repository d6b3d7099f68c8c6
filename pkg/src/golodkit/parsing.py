"""Text form of monomial ideals: ``(x^2*y, z)`` style, parse and print.

Grammar:
    ideal  := "(" [mono {"," mono}] ")"
    mono   := "1" | factor {"*" factor}
    factor := varname ["^" posint]

Variable names match [A-Za-z_][A-Za-z0-9_]* and must be declared in the
context; repeated variables in one monomial multiply.  Whitespace is
ignored everywhere.  In a four-variable context that does not itself
declare ``t``, the name ``t`` is accepted as an alias for the fourth
variable.
"""

from __future__ import annotations

import re

from .rings import Monomial, MonomialIdeal, RingContext, minimalize

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DIGITS = re.compile(r"[0-9]+")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str, context: RingContext):
        self.text = text
        self.context = context
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def variable_index(self) -> int:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if m is None:
            raise ParseError("expected a variable name", self.pos)
        name = m.group()
        start = self.pos
        self.pos = m.end()
        names = self.context.names
        if name in names:
            return names.index(name)
        if name == "t" and self.context.n == 4:
            return 3
        raise ParseError(f"undeclared variable {name!r}", start)

    def exponent(self) -> int:
        self.skip_ws()
        m = _DIGITS.match(self.text, self.pos)
        if m is None:
            raise ParseError("expected an exponent", self.pos)
        value = int(m.group())
        if value == 0:
            raise ParseError("exponent must be positive", self.pos)
        self.pos = m.end()
        return value

    def monomial(self) -> Monomial:
        if self.peek() == "1":
            self.pos += 1
            return self.context.one()
        exps = [0] * self.context.n
        while True:
            i = self.variable_index()
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self.exponent()
            exps[i] += e
            if self.peek() == "*":
                self.pos += 1
                continue
            return Monomial(tuple(exps))


def parse_ideal(text: str, context: RingContext) -> MonomialIdeal:
    """Parse an ideal expression into canonical (minimalized) form."""
    s = _Scanner(text, context)
    s.expect("(")
    gens = []
    if s.peek() != ")":
        gens.append(s.monomial())
        while s.peek() == ",":
            s.pos += 1
            gens.append(s.monomial())
    s.expect(")")
    s.skip_ws()
    if s.pos != len(text):
        raise ParseError("unexpected trailing text", s.pos)
    return minimalize(gens, context)


def format_monomial(m: Monomial, context: RingContext) -> str:
    if m.is_one():
        return "1"
    parts = []
    for name, e in zip(context.names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_ideal(ideal: MonomialIdeal, context: RingContext | None = None) -> str:
    """Render with generators in descending lexicographic order."""
    ctx = context if context is not None else ideal.context
    gens = sorted(ideal.gens, key=lambda g: g.exponents, reverse=True)
    return "(" + ", ".join(format_monomial(g, ctx) for g in gens) + ")"
