"""Quadratic rewriting systems, PBW normal forms and confluence certificates."""

import sys
from fractions import Fraction

from . import kernels
from .errors import NonTerminationError, ValidationError
from .laurent import ONE, Laurent
from .ncpoly import NCPolynomial, format_poly

DEFAULT_GUARD = 10 ** 6


class Relator:
    """A rule ``leading -> lower`` with ``leading`` a word of length two."""

    __slots__ = ("leading", "lower")

    def __init__(self, leading, lower):
        self.leading = tuple(leading)
        self.lower = lower

    def as_polynomial(self):
        """The relator as the element ``leading - lower`` (which vanishes)."""
        one = ONE
        if any(isinstance(c, Fraction) for _, c in self.lower.items()):
            one = Fraction(1)
        return NCPolynomial.word(self.leading, one) - self.lower

    def __repr__(self):
        return f"Relator({self.text()})"

    def text(self):
        lead = "*".join(str(g) for g in self.leading)
        return f"{lead} -> {format_poly(self.lower)}"


class RewriteSystem:
    """Immutable quadratic rewriting system over an ordered alphabet.

    ``alphabet`` lists the stated generators in increasing order; words
    are compared length first, then lexicographically in that order.
    """

    def __init__(self, alphabet, relators, presentation=None, guard=DEFAULT_GUARD,
                 one=ONE):
        self.alphabet = tuple(alphabet)
        self.index = {g: n for n, g in enumerate(self.alphabet)}
        if len(self.index) != len(self.alphabet):
            raise ValidationError("alphabet has repeated letters")
        self.presentation = presentation
        self.guard = guard
        self.one = one
        self.relators = {}
        rules = {}
        for rel in relators:
            if rel.leading in self.relators:
                raise ValidationError("two relators share a leading word",
                                      {"leading": [str(g) for g in rel.leading]})
            key = self.encode(rel.leading)
            rhs = []
            for w, c in rel.lower.items():
                ew = self.encode(w)
                if not word_less(ew, key):
                    raise ValidationError("rule does not decrease the word order",
                                          {"rule": rel.text()})
                rhs.append((ew, c))
            self.relators[rel.leading] = rel
            rules[key] = rhs
        self._rules = rules
        self._memo = {}

    # encoding ------------------------------------------------------------
    def encode(self, word):
        try:
            return tuple(self.index[g] for g in word)
        except KeyError as exc:
            raise ValidationError("unknown stated generator", {"letter": str(exc.args[0])}) from None

    def decode(self, word):
        return tuple(self.alphabet[i] for i in word)

    def relator_list(self):
        return [self.relators[k] for k in sorted(self.relators, key=self.encode)]

    def is_leading(self, pair):
        return tuple(pair) in self.relators

    # reduction -------------------------------------------------------------
    def _reduce_encoded(self, word, budget):
        return kernels.reduce_word(word, self._rules, self._memo, budget, self.one)

    def normal_form_encoded(self, terms):
        """Normal form of an encoded polynomial ``{int word: coeff}``."""
        budget = [self.guard]
        out = {}
        limit = sys.getrecursionlimit()
        if limit < 20000:
            sys.setrecursionlimit(20000)
        try:
            for w, c in terms.items():
                kernels.accumulate(out, self._reduce_encoded(w, budget), c)
        except RecursionError:
            raise NonTerminationError("rewrite guard exceeded",
                                      {"guard": self.guard}) from None
        return out

    def normal_form(self, x):
        if not isinstance(x, NCPolynomial):
            x = NCPolynomial.scalar(x)
        enc = {self.encode(w): c for w, c in x.items()}
        red = self.normal_form_encoded(enc)
        return NCPolynomial._raw({self.decode(w): c for w, c in red.items()})

    def multiply(self, x, y):
        return self.normal_form(x * y)

    def is_normal_word(self, word):
        return not any((word[k], word[k + 1]) in self.relators for k in range(len(word) - 1))

    # confluence ------------------------------------------------------------
    def critical_triples(self):
        by_first = {}
        for (a, b) in self._rules:
            by_first.setdefault(a, []).append(b)
        triples = []
        for (a, b) in sorted(self._rules):
            for c in sorted(by_first.get(b, ())):
                triples.append((a, b, c))
        return triples

    def _one_step(self, word, pos):
        rhs = self._rules[(word[pos], word[pos + 1])]
        out = {}
        for r, c in rhs:
            w = word[:pos] + r + word[pos + 2:]
            kernels.accumulate(out, {w: c}, self.one)
        return out

    def certify_confluence(self):
        """Resolve every overlap ``v1 v2 v3`` both ways; return a report dict."""
        failures = []
        triples = self.critical_triples()
        for t in triples:
            left = self.normal_form_encoded(self._one_step(t, 0))
            right = self.normal_form_encoded(self._one_step(t, 1))
            if left != right:
                failures.append({
                    "triple": [str(g) for g in self.decode(t)],
                    "left": format_poly(NCPolynomial._raw({self.decode(w): c for w, c in left.items()})),
                    "right": format_poly(NCPolynomial._raw({self.decode(w): c for w, c in right.items()})),
                })
        return {
            "generators": len(self.alphabet) // 4 if len(self.alphabet) % 4 == 0 else len(self.alphabet),
            "relators": len(self._rules),
            "critical_triples": len(triples),
            "failures": failures,
        }

    # counting ----------------------------------------------------------------
    def normal_words(self, n):
        """All normal words of length ``n`` (encoded), in increasing order."""
        follow = {}
        size = len(self.alphabet)
        for a in range(size):
            follow[a] = [b for b in range(size) if (a, b) not in self._rules]
        if n == 0:
            return [()]
        words = [(a,) for a in range(size)]
        for _ in range(n - 1):
            words = [w + (b,) for w in words for b in follow[w[-1]]]
        return words

    def graded_dimension(self, n):
        """Number of normal words of length ``n`` (transfer-matrix count)."""
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if n == 0:
            return 1
        size = len(self.alphabet)
        counts = [1] * size
        for _ in range(n - 1):
            new = [0] * size
            for a in range(size):
                if counts[a]:
                    for b in range(size):
                        if (a, b) not in self._rules:
                            new[b] += counts[a]
            counts = new
        return sum(counts)

    # derived systems ---------------------------------------------------------
    def map_coefficients(self, f, one=None):
        """A new system whose relator coefficients are transformed by ``f``."""
        rels = [Relator(r.leading, r.lower.map_coefficients(f)) for r in self.relator_list()]
        return RewriteSystem(self.alphabet, rels, self.presentation, self.guard,
                             one if one is not None else self.one)

    def with_relator(self, relator):
        """Copy with one relator replaced (used for negative controls)."""
        rels = [relator if r.leading == relator.leading else r for r in self.relator_list()]
        return RewriteSystem(self.alphabet, rels, self.presentation, self.guard, self.one)


def word_less(u, v):
    """Length-then-lex comparison of encoded words."""
    if len(u) != len(v):
        return len(u) < len(v)
    return u < v


def specialize(rs, w0):
    """Evaluate all coefficients at the rational point ``w = w0``."""
    w0 = Fraction(w0)
    if w0 == 0:
        raise ValidationError("cannot specialise at w = 0")
    return rs.map_coefficients(lambda c: c.evaluate(w0) if isinstance(c, Laurent) else Fraction(c),
                               one=Fraction(1))


def evaluate_coefficients(x, w0):
    w0 = Fraction(w0)
    return x.map_coefficients(lambda c: c.evaluate(w0) if isinstance(c, Laurent) else Fraction(c))


def convolution_dimensions(count, n):
    """Coefficients of the ``count``-fold product of ``sum (k+1)^2 t^k`` up to ``n``."""
    series = [1] + [0] * n
    single = [(k + 1) ** 2 for k in range(n + 1)]
    for _ in range(count):
        series = [sum(series[i] * single[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return series
