"""Exact Laurent polynomials in one variable ``w`` with integer coefficients.

Every scalar of the package lives in Z[w, w^-1].  The derived constants
``A = w^-2`` and ``q = A^2 = w^-4`` are exposed as module level values.
"""

from fractions import Fraction
from numbers import Integral, Rational

from . import kernels


class Laurent:
    """An element of Z[w^{+-1}] stored as ``{exponent: coefficient}``.

    Instances are immutable and canonical: no stored coefficient is zero.

    >>> w = Laurent.monomial(1)
    >>> str((w - w**-1) ** 2)
    'w^2 - 2 + w^-2'
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, Integral):
            self._t = {0: int(terms)} if terms else {}
        else:
            self._t = {int(k): int(v) for k, v in terms.items() if v}
        self._h = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._t = terms
        obj._h = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Laurent):
            return x
        if isinstance(x, Integral):
            return cls._raw({0: int(x)} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def min_degree(self):
        return min(self._t) if self._t else None

    def max_degree(self):
        return max(self._t) if self._t else None

    def constant(self):
        """Return the value as a Python int if ``self`` is a constant."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    # ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Laurent):
            if isinstance(other, Integral):
                other = Laurent.coerce(other)
            else:
                return NotImplemented
        return Laurent._raw(kernels.add_terms(self._t, other._t, 1))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            if isinstance(other, Integral):
                other = Laurent.coerce(other)
            else:
                return NotImplemented
        return Laurent._raw(kernels.add_terms(self._t, other._t, -1))

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __neg__(self):
        return Laurent._raw({k: -v for k, v in self._t.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            if isinstance(other, Integral):
                if not other:
                    return ZERO
                return Laurent._raw({k: v * other for k, v in self._t.items()})
            return NotImplemented
        return Laurent._raw(kernels.mul_terms(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            if len(self._t) != 1:
                raise ZeroDivisionError("only monomials are invertible in Z[w^+-1]")
            (k, c), = self._t.items()
            if c not in (1, -1):
                raise ZeroDivisionError("only unit monomials are invertible")
            return Laurent._raw({k * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._t == other._t
        if isinstance(other, Integral):
            return self._t == ({0: int(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def is_unit(self):
        return len(self._t) == 1 and next(iter(self._t.values())) in (1, -1)

    def inverse(self):
        return self ** -1

    # involutions and evaluation --------------------------------------
    def bar(self):
        """The ring involution w -> w^-1."""
        return Laurent._raw({-k: v for k, v in self._t.items()})

    def evaluate(self, w0):
        """Evaluate at a nonzero rational number, exactly."""
        w0 = Fraction(w0)
        if w0 == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at w = 0")
        total = Fraction(0)
        for k, v in self._t.items():
            total += v * w0 ** k
        return total

    def divmod_exact(self, other):
        """Exact quotient ``self / other`` in Z[w^+-1], or ``None`` if it does not exist."""
        other = Laurent.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._t:
            return ZERO
        # long division on the shifted polynomials, highest degree first
        rem = dict(self._t)
        dlo, dhi = other.min_degree(), other.max_degree()
        lead = other._t[dhi]
        quot = {}
        lo = min(rem)
        while rem:
            hi = max(rem)
            if hi - dhi < lo - dlo:
                return None
            c, r = divmod(rem[hi], lead)
            if r:
                return None
            shift = hi - dhi
            quot[shift] = c
            for k, v in other._t.items():
                nk = k + shift
                nv = rem.get(nk, 0) - c * v
                if nv:
                    rem[nk] = nv
                else:
                    rem.pop(nk, None)
        return Laurent._raw(quot)

    # text --------------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"Laurent({format_laurent(self)!r})"


def _term_text(k, c):
    if k == 0:
        return str(c)
    mono = "w" if k == 1 else f"w^{k}"
    if c == 1:
        return mono
    return f"{c}*{mono}"


def format_laurent(p):
    """Canonical text, exponents descending: ``w^2 - 2 + w^-2``."""
    items = sorted(p._t.items(), reverse=True)
    if not items:
        return "0"
    out = []
    for idx, (k, c) in enumerate(items):
        body = _term_text(k, abs(c))
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def parse_laurent(text):
    """Parse the canonical text form (or any scalar expression of the grammar)."""
    from .expr import parse_scalar
    return parse_scalar(text)


def as_scalar(x):
    """Coerce ints to Laurent; leave Laurent and Fraction values alone."""
    if isinstance(x, (Laurent, Fraction)):
        return x
    if isinstance(x, Integral):
        return Laurent.coerce(x)
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


ZERO = Laurent._raw({})
ONE = Laurent._raw({0: 1})
W = Laurent._raw({1: 1})
A = Laurent._raw({-2: 1})
q = Laurent._raw({-4: 1})


def w(k=1):
    """The monomial w^k."""
    return Laurent._raw({k: 1})
