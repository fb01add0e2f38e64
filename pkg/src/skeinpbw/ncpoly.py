"""Noncommutative polynomials with Laurent (or rational) coefficients."""

from fractions import Fraction
from numbers import Integral
from typing import NamedTuple

from .laurent import ONE, ZERO, Laurent, format_laurent

STATE_LETTERS = "pm"


class StatedGenerator(NamedTuple):
    """The stated arc ``arc_{ij}``; states are 0 for ``+`` and 1 for ``-``."""

    arc: str
    i: int
    j: int

    @property
    def state(self):
        return STATE_LETTERS[self.i] + STATE_LETTERS[self.j]

    def __str__(self):
        return f"{self.arc}[{self.state}]"


def sg(arc, state):
    """Build a stated generator from a state string such as ``"pm"``."""
    return StatedGenerator(arc, STATE_LETTERS.index(state[0]), STATE_LETTERS.index(state[1]))


def _coerce(c):
    if isinstance(c, (Laurent, Fraction)):
        return c
    if isinstance(c, Integral):
        return Laurent.coerce(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class NCPolynomial:
    """Finite map from words (tuples of letters) to nonzero coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in terms.items():
                c = _coerce(c)
                if c:
                    t[tuple(w)] = c
        self._t = t

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def letter(cls, g, coeff=ONE):
        return cls._raw({(g,): coeff})

    @classmethod
    def word(cls, w, coeff=ONE):
        return cls._raw({tuple(w): coeff}) if coeff else cls._raw({})

    @classmethod
    def scalar(cls, c):
        c = _coerce(c)
        return cls._raw({(): c} if c else {})

    @property
    def terms(self):
        return self._t

    def items(self):
        return self._t.items()

    def words(self):
        return list(self._t)

    def coefficient(self, w):
        return self._t.get(tuple(w), ZERO)

    def letters(self):
        return {g for w in self._t for g in w}

    def degree(self):
        return max((len(w) for w in self._t), default=-1)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def zero_like(self):
        return NCPolynomial._raw({})

    def _as_poly(self, other):
        if isinstance(other, NCPolynomial):
            return other
        if isinstance(other, (Laurent, Fraction, Integral)):
            return NCPolynomial.scalar(other)
        return None

    def __add__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for w, c in other._t.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return NCPolynomial._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial._raw({w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            t = {}
            for w1, c1 in self._t.items():
                for w2, c2 in other._t.items():
                    w = w1 + w2
                    c = c1 * c2
                    v = t.get(w)
                    v = c if v is None else v + c
                    if v:
                        t[w] = v
                    else:
                        t.pop(w, None)
            return NCPolynomial._raw(t)
        if isinstance(other, (Laurent, Fraction, Integral)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Laurent, Fraction, Integral)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, Integral) or n < 0:
            return NotImplemented
        out = NCPolynomial.scalar(ONE)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return NCPolynomial._raw({})
        t = {}
        for w, v in self._t.items():
            x = v * c
            if x:
                t[w] = x
        return NCPolynomial._raw(t)

    def map_coefficients(self, f):
        t = {}
        for w, c in self._t.items():
            x = f(c)
            if x:
                t[w] = x
        return NCPolynomial._raw(t)

    def substitute(self, subst):
        """Replace letters by polynomials (letters missing from ``subst`` stay)."""
        out = NCPolynomial._raw({})
        cache = {}
        for w, c in self._t.items():
            term = NCPolynomial.scalar(c)
            for g in w:
                img = cache.get(g)
                if img is None:
                    img = subst.get(g)
                    img = NCPolynomial.letter(g) if img is None else img
                    cache[g] = img
                term = term * img
            out = out + term
        return out

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self._t == other._t
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def to_text(self, key=None):
        return format_poly(self, key)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"NCPolynomial({format_poly(self)!r})"


def format_coefficient(c):
    if isinstance(c, Laurent):
        return format_laurent(c)
    return str(c)


def _word_text(w):
    return "*".join(str(g) for g in w)


def format_poly(p, key=None):
    """Render as an expression accepted by the parser.

    Terms are sorted by ``key`` (default: degree descending, then the text
    of the word) so the output is deterministic.
    """
    if not p._t:
        return "0"
    if key is None:
        def key(w):
            return (-len(w), _word_text(w))
    parts = []
    for w in sorted(p._t, key=key):
        c = p._t[w]
        ctext = format_coefficient(c)
        neg = False
        if isinstance(c, Laurent) and len(c.terms) == 1:
            (k, v), = c.terms.items()
            if v < 0:
                neg = True
                ctext = format_laurent(-c)
        elif isinstance(c, Fraction) and c < 0:
            neg = True
            ctext = str(-c)
        if not w:
            body = ctext
        else:
            wt = _word_text(w)
            if ctext == "1":
                body = wt
            elif isinstance(c, Laurent) and len(c.terms) > 1:
                body = f"({ctext})*{wt}"
            else:
                body = f"{ctext}*{wt}"
        if isinstance(c, Laurent) and len(c.terms) > 1 and not w:
            body = f"({ctext})"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
