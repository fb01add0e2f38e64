"""Parser for the text form of scalars and noncommutative polynomials.

Grammar (whitespace is ignored)::

    expr   := sign? term (("+" | "-") term)*
    term   := power ("*" power)*
    power  := atom ("^" "-"? INT)?
    atom   := INT | "w" | NAME "[" STATE "]" | "(" expr ")"

``STATE`` is one of ``pp pm mp mm``.  Products are left-associative and the
left factor is the upper one.  Negative exponents are only accepted on
scalar units such as ``w`` or ``-w^3``.
"""

import re

from .errors import ParseError
from .laurent import ONE, Laurent
from .ncpoly import STATE_LETTERS, NCPolynomial, StatedGenerator

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()\[\]]))")
_STATES = ("pp", "pm", "mp", "mm")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}",
                             {"position": bad, "text": text})
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0
        self.alphabet = alphabet

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise ParseError(msg, {"position": pos, "text": self.text})

    def peek(self, ahead=0):
        return self.toks[min(self.k + ahead, len(self.toks) - 1)]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, value):
        tok = self.peek()
        if tok[1] != value or tok[0] not in ("op",):
            self.error(f"expected {value!r}")
        return self.take()

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return out

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.power()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.power()
        return acc

    def power(self):
        base_pos = self.peek()[2]
        base = self.atom()
        if not (self.peek()[0] == "op" and self.peek()[1] == "^"):
            return base
        self.take()
        neg = False
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            neg = True
        kind, val, pos = self.peek()
        if kind != "int":
            self.error("exponent must be an integer")
        self.take()
        e = int(val)
        if not neg:
            return base ** e
        unit = _scalar_unit(base)
        if unit is None:
            self.error("negative powers need a scalar unit base", base_pos)
        return NCPolynomial.scalar(unit ** (-e))

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return NCPolynomial.scalar(Laurent.coerce(int(val)))
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            nxt = self.peek(1)
            if nxt[0] == "op" and nxt[1] == "[":
                return self.generator()
            if val == "w":
                self.take()
                return NCPolynomial.scalar(Laurent.monomial(1))
            self.error(f"unknown symbol {val!r}")
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected token {val!r}")

    def generator(self):
        _, name, pos = self.take()
        self.take()  # "["
        kind, val, spos = self.peek()
        if kind != "name" or val not in _STATES:
            self.error("state must be one of pp, pm, mp, mm", spos)
        self.take()
        self.expect("]")
        g = StatedGenerator(name, STATE_LETTERS.index(val[0]), STATE_LETTERS.index(val[1]))
        if self.alphabet is not None and name not in self.alphabet:
            self.error(f"unknown generator {name!r}", pos)
        return NCPolynomial.letter(g)


def _scalar_unit(p):
    items = list(p.items())
    if len(items) != 1:
        return None
    w, c = items[0]
    if w or not isinstance(c, Laurent) or not c.is_unit():
        return None
    return c


def _arc_ids(alphabet):
    if alphabet is None:
        return None
    out = set()
    for g in alphabet:
        out.add(g.arc if isinstance(g, StatedGenerator) else str(g))
    return out


def parse_expression(text, alphabet=None):
    """Parse ``text`` into an NCPolynomial.

    ``alphabet`` may be a collection of arc ids or stated generators; when
    given, any other generator name is rejected.
    """
    if not isinstance(text, str):
        raise ParseError("expression must be a string", {"type": type(text).__name__})
    return _Parser(text, _arc_ids(alphabet)).parse()


def parse_scalar(text):
    """Parse a Laurent scalar such as ``w^2 - 2 + w^-2``."""
    p = parse_expression(text, alphabet=())
    if not p:
        return ONE - ONE
    if p.degree() > 0:
        raise ParseError("expected a scalar", {"text": text})
    return p.coefficient(())
