"""The bigon Hopf algebra, the gauge algebra and the gauge coaction.

Elements of ``S (x) O_q[G]`` are stored as :class:`TensorElement`, a map
from ``(base word, (slot word per vertex ...))`` to coefficients.  Every
component is kept in normal form in its own rewriting system.
"""

import itertools
import random
from fractions import Fraction

from .errors import UnsupportedError, ValidationError
from .laurent import ONE, ZERO, q
from .linsolve import kernel, primitive
from .ncpoly import NCPolynomial, StatedGenerator, format_coefficient
from .rewrite import RewriteSystem
from .samearc import same_arc_relators

X = "x"
_STATES = ((0, 0), (0, 1), (1, 0), (1, 1))


def xg(i, j):
    return StatedGenerator(X, i, j)


class BigonAlgebra:
    """``O_q[SL2]``: the one-generator type-a system with letters renamed ``x``."""

    def __init__(self):
        self.alphabet = [xg(i, j) for i, j in _STATES]
        self.rs = RewriteSystem(self.alphabet, same_arc_relators(X, "a"))
        self._nf = {}

    def word_nf(self, word):
        word = tuple(word)
        hit = self._nf.get(word)
        if hit is None:
            hit = self.rs.normal_form(NCPolynomial.word(word))
            self._nf[word] = hit
        return hit

    def normal_form(self, x):
        return self.rs.normal_form(x)

    def matrix(self):
        return [[NCPolynomial.letter(xg(i, j)) for j in (0, 1)] for i in (0, 1)]

    # Hopf structure ------------------------------------------------------
    def counit_letter(self, g):
        return ONE if g.i == g.j else ZERO

    def counit(self, x):
        total = ZERO
        for w, c in x.items():
            v = c
            for g in w:
                v = v * self.counit_letter(g)
            total = total + v
        return total

    def coproduct_letter(self, g):
        """``Delta(x_ij) = sum_k x_ik (x) x_kj`` as a dict of word pairs."""
        return {((xg(g.i, k),), (xg(k, g.j),)): ONE for k in (0, 1)}

    def coproduct(self, x):
        """Algebra morphism ``O -> O (x) O``; result as ``{(w1, w2): coeff}``."""
        out = {}
        for w, c in x.items():
            acc = {((), ()): c}
            for g in w:
                nxt = {}
                for (l1, r1), c1 in acc.items():
                    for (l2, r2), c2 in self.coproduct_letter(g).items():
                        key = (l1 + l2, r1 + r2)
                        nxt[key] = nxt.get(key, ZERO) + c1 * c2
                acc = nxt
            for k, v in acc.items():
                out[k] = out.get(k, ZERO) + v
        return self._normalize_pairs(out)

    def _normalize_pairs(self, d):
        out = {}
        for (w1, w2), c in d.items():
            if not c:
                continue
            for u1, a1 in self.word_nf(w1).items():
                for u2, a2 in self.word_nf(w2).items():
                    key = (u1, u2)
                    out[key] = out.get(key, ZERO) + c * a1 * a2
        return {k: v for k, v in out.items() if v}

    def antipode_letter(self, g):
        table = {
            (0, 0): NCPolynomial.letter(xg(1, 1)),
            (0, 1): NCPolynomial.letter(xg(0, 1), -q),
            (1, 0): NCPolynomial.letter(xg(1, 0), -(q ** -1)),
            (1, 1): NCPolynomial.letter(xg(0, 0)),
        }
        return table[(g.i, g.j)]

    def antipode(self, x):
        """Anti-multiplicative extension of the printed antipode matrix."""
        out = NCPolynomial()
        for w, c in x.items():
            acc = NCPolynomial.scalar(c)
            for g in reversed(w):
                acc = acc * self.antipode_letter(g)
            out = out + acc
        return self.normal_form(out)

    def antipode_matrix(self):
        return [[self.antipode(NCPolynomial.letter(xg(i, j))) for j in (0, 1)] for i in (0, 1)]

    def check_hopf(self):
        """Coassociativity, counit and antipode laws on the four generators."""
        report = {"coassociativity": True, "counit": True, "antipode": True, "failures": []}
        for g in self.alphabet:
            x = NCPolynomial.letter(g)
            d = self.coproduct(x)
            left = _triple_left(self, d)
            right = _triple_right(self, d)
            if left != right:
                report["coassociativity"] = False
                report["failures"].append(("coassociativity", str(g)))
            c1 = NCPolynomial()
            c2 = NCPolynomial()
            for (w1, w2), c in d.items():
                c1 = c1 + NCPolynomial.word(w2, c * self.counit(NCPolynomial.word(w1)))
                c2 = c2 + NCPolynomial.word(w1, c * self.counit(NCPolynomial.word(w2)))
            if c1 != x or c2 != x:
                report["counit"] = False
                report["failures"].append(("counit", str(g)))
            m1 = NCPolynomial()
            m2 = NCPolynomial()
            for (w1, w2), c in d.items():
                m1 = m1 + self.antipode(NCPolynomial.word(w1)) * NCPolynomial.word(w2, c)
                m2 = m2 + NCPolynomial.word(w1, c) * self.antipode(NCPolynomial.word(w2))
            target = NCPolynomial.scalar(self.counit(x))
            if self.normal_form(m1) != target or self.normal_form(m2) != target:
                report["antipode"] = False
                report["failures"].append(("antipode", str(g)))
        return report

    def x_times_sx(self):
        """Entries of ``X S(X) - I`` and ``S(X) X - I`` after reduction."""
        x = self.matrix()
        s = self.antipode_matrix()
        out = []
        for first, second in ((x, s), (s, x)):
            for i in (0, 1):
                for j in (0, 1):
                    e = first[i][0] * second[0][j] + first[i][1] * second[1][j]
                    if i == j:
                        e = e - NCPolynomial.scalar(ONE)
                    out.append(self.normal_form(e))
        return out


def _triple_left(bigon, d):
    """``(Delta (x) id) Delta`` from a reduced coproduct dict."""
    out = {}
    for (w1, w2), c in d.items():
        for (u1, u2), c2 in bigon.coproduct(NCPolynomial.word(w1)).items():
            key = (u1, u2, w2)
            out[key] = out.get(key, ZERO) + c * c2
    return {k: v for k, v in out.items() if v}


def _triple_right(bigon, d):
    out = {}
    for (w1, w2), c in d.items():
        for (u1, u2), c2 in bigon.coproduct(NCPolynomial.word(w2)).items():
            key = (w1, u1, u2)
            out[key] = out.get(key, ZERO) + c * c2
    return {k: v for k, v in out.items() if v}


_BIGON = None


def bigon():
    global _BIGON
    if _BIGON is None:
        _BIGON = BigonAlgebra()
    return _BIGON


class TensorElement:
    """Finite sum of ``coeff * base_word (x) [slot words]``."""

    __slots__ = ("vertices", "terms")

    def __init__(self, vertices, terms=None):
        self.vertices = tuple(vertices)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return TensorElement(self.vertices, t)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c):
        return TensorElement(self.vertices, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def to_lines(self):
        lines = []
        for (w, slots), c in sorted(self.terms.items(), key=lambda kv: _key_text(kv[0])):
            base = "*".join(str(g) for g in w) or "1"
            parts = ", ".join(f"{v}: {'*'.join(str(g) for g in s) or '1'}"
                              for v, s in zip(self.vertices, slots) if s)
            lines.append(f"{format_coefficient(c)} * ({base}) (x) [{parts or '1'}]")
        return lines


def _key_text(key):
    w, slots = key
    return (len(w), [str(g) for g in w], [[str(g) for g in s] for s in slots])


class GaugeCoaction:
    """Right coaction ``S -> S (x) O_q[SL2]^{(x) V}`` of a no-relation presentation.

    On generators ``alpha_ij -> sum_ab alpha_ab (x) x_ai^(t) x_bj^(s)``
    where ``t``, ``s`` are the vertices of the target and the source: the
    row index of ``M(alpha)`` is the state at the target.  In matrix form
    ``M -> tX_t M X_s``.  ``convention="literal"`` uses
    ``x_jb^(s) ... x_ia^(t)`` with the target factor written second, as
    in the usual display; it is kept for comparison only (it is a
    coaction for the opposite coproduct and breaks the morphism law).
    """

    CONVENTIONS = ("standard", "literal")

    def __init__(self, p, rs=None, convention="standard"):
        if convention not in self.CONVENTIONS:
            raise ValidationError("unknown coaction convention", {"convention": convention})
        if p.relations:
            raise UnsupportedError("the coaction is implemented for no-relation presentations")
        for g in p.generators:
            if g.arc_type not in ("a", "d"):
                raise UnsupportedError("gauge coaction needs generators of type a or d",
                                       {"generator": g.id, "type": g.arc_type})
        if rs is None:
            from .relators import build_rewrite_system
            rs = build_rewrite_system(p)
        self.p, self.rs = p, rs
        self.convention = convention
        self.vertices = tuple(p.boundary_arcs)
        self.vindex = {v: k for k, v in enumerate(self.vertices)}
        self.bigon = bigon()
        self._gen = {}
        self._base_nf = {}

    # helpers ---------------------------------------------------------------
    def _empty_slots(self):
        return ((),) * len(self.vertices)

    def _gauge_factors(self, i, j, a, b, vt, vs):
        """``((vertex, letter), (vertex, letter))`` in slot-product order."""
        if self.convention == "standard":
            return (vt, xg(a, i)), (vs, xg(b, j))
        return (vs, xg(j, b)), (vt, xg(i, a))

    def generator_image(self, g):
        hit = self._gen.get(g)
        if hit is not None:
            return hit
        arc = self.p.by_id[g.arc]
        vs, vt = self.vindex[arc.source[0]], self.vindex[arc.target[0]]
        terms = {}
        for a, b in _STATES:
            slots = [list(s) for s in self._empty_slots()]
            for v, letter in self._gauge_factors(g.i, g.j, a, b, vt, vs):
                slots[v].append(letter)
            key = ((StatedGenerator(g.arc, a, b),), tuple(tuple(s) for s in slots))
            terms[key] = ONE
        hit = self.normalize(terms)
        self._gen[g] = hit
        return hit

    def _nf_base(self, w):
        hit = self._base_nf.get(w)
        if hit is None:
            hit = self.rs.normal_form(NCPolynomial.word(w))
            self._base_nf[w] = hit
        return hit

    def normalize(self, terms):
        """Reduce every component; ``terms`` is a raw ``{(w, slots): c}`` dict."""
        out = {}
        for (w, slots), c in terms.items():
            if not c:
                continue
            expansions = [list(self._nf_base(w).items())]
            expansions += [list(self.bigon.word_nf(s).items()) for s in slots]
            for combo in itertools.product(*expansions):
                coeff = c
                for _, a in combo:
                    coeff = coeff * a
                key = (combo[0][0], tuple(u for u, _ in combo[1:]))
                out[key] = out.get(key, ZERO) + coeff
        return TensorElement(self.vertices, out)

    def multiply(self, x, y):
        raw = {}
        for (w1, s1), c1 in x.terms.items():
            for (w2, s2), c2 in y.terms.items():
                key = (w1 + w2, tuple(a + b for a, b in zip(s1, s2)))
                raw[key] = raw.get(key, ZERO) + c1 * c2
        return self.normalize(raw)

    def unit(self, c=ONE):
        return TensorElement(self.vertices, {((), self._empty_slots()): c})

    def embed(self, x):
        """``x (x) 1``."""
        return TensorElement(self.vertices, {(w, self._empty_slots()): c for w, c in x.items()})

    # the coaction ---------------------------------------------------------
    def word_image(self, w):
        acc = self.unit()
        for g in w:
            acc = self.multiply(acc, self.generator_image(g))
        return acc

    def __call__(self, x):
        if not isinstance(x, NCPolynomial):
            x = NCPolynomial.scalar(x)
        out = TensorElement(self.vertices)
        for w, c in x.items():
            out = out + self.word_image(w).scale(c)
        return out

    # checks ---------------------------------------------------------------
    def counit_image(self, t):
        out = NCPolynomial()
        for (w, slots), c in t.terms.items():
            e = c
            for s in slots:
                e = e * self.bigon.counit(NCPolynomial.word(s))
            if e:
                out = out + NCPolynomial.word(w, e)
        return out

    def coassociativity_sides(self, g):
        """``(Delta^G (x) id) Delta^G`` and ``(id (x) Delta_G) Delta^G`` on a generator."""
        d = self.generator_image(g)
        left, right = {}, {}
        for (w, slots), c in d.terms.items():
            inner = self(NCPolynomial.word(w))
            for (w2, s2), c2 in inner.terms.items():
                key = (w2, s2, slots)
                left[key] = left.get(key, ZERO) + c * c2
            # coproduct slot by slot
            per_slot = [list(self.bigon.coproduct(NCPolynomial.word(s)).items()) for s in slots]
            for combo in itertools.product(*per_slot):
                coeff = c
                for _, a in combo:
                    coeff = coeff * a
                key = (w, tuple(u for (u, _), _ in combo), tuple(v for (_, v), _ in combo))
                right[key] = right.get(key, ZERO) + coeff
        clean = lambda d: {k: v for k, v in d.items() if v}  # noqa: E731
        return clean(left), clean(right)

    def check(self):
        """Counit and coassociativity on generators, morphism law on relators."""
        report = {"counit": [], "coassociativity": [], "morphism": [], "relators": 0}
        for g in self.rs.alphabet:
            x = NCPolynomial.letter(g)
            if self.counit_image(self.generator_image(g)) != x:
                report["counit"].append(str(g))
            left, right = self.coassociativity_sides(g)
            if left != right:
                report["coassociativity"].append(str(g))
        for rel in self.rs.relator_list():
            report["relators"] += 1
            if self(rel.as_polynomial()):
                report["morphism"].append(rel.text())
        report["ok"] = not (report["counit"] or report["coassociativity"] or report["morphism"])
        return report

    # coinvariants ----------------------------------------------------------
    def _basis(self, d):
        words = []
        for n in range(d + 1):
            words.extend(self.rs.decode(w) for w in self.rs.normal_words(n))
        return words

    def coinvariant_matrix(self, d):
        """Rows: coordinates of ``Delta^G(w) - w (x) 1`` for each basis word ``w``."""
        basis = self._basis(d)
        cols = []
        keys = {}
        for w in basis:
            diff = self.word_image(w) - self.embed(NCPolynomial.word(w))
            col = {}
            for k, c in diff.terms.items():
                col[keys.setdefault(k, len(keys))] = c
            cols.append(col)
        rows = [[ZERO] * len(basis) for _ in range(len(keys))]
        for j, col in enumerate(cols):
            for i, c in col.items():
                rows[i][j] = c
        return basis, rows

    def coinvariants(self, d):
        """Basis of coinvariant elements of word length at most ``d``."""
        if d < 0:
            raise ValidationError("degree must be nonnegative")
        basis, rows = self.coinvariant_matrix(d)
        if not rows:
            vecs = [[ONE if k == j else ZERO for k in range(len(basis))] for j in range(len(basis))]
        else:
            vecs = kernel(rows, len(basis))
        out = []
        for v in vecs:
            v = primitive(v)
            poly = NCPolynomial()
            for w, c in zip(basis, v):
                if c:
                    poly = poly + NCPolynomial.word(w, c)
            out.append(poly)
        return out

    def is_coinvariant(self, x):
        return (self(x) - self.embed(self.rs.normal_form(x))).is_zero()


def coinvariant_dimension_oracle(coaction, d, samples=2, seed=0):
    """Kernel dimension from exact rational rank at random points ``w0``.

    Independent of the fraction-free Laurent elimination: the coaction
    matrix is specialised entrywise and ranked with sympy over QQ.  The
    maximum rank over the samples equals the generic rank with
    overwhelming probability.
    """
    import sympy

    basis, rows = coaction.coinvariant_matrix(d)
    if not rows:
        return len(basis)
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        w0 = Fraction(rng.randint(2, 97), rng.randint(2, 97))
        if abs(w0) == 1:
            w0 += 1
        m = sympy.Matrix([[sympy.Rational(c.evaluate(w0).numerator, c.evaluate(w0).denominator)
                           for c in row] for row in rows])
        best = max(best, m.rank())
    return len(basis) - best


def trace_element(arc_id):
    """``w^-1 a[pm] - w^3 a[mp]``: the coinvariant q-trace of a type-d loop."""
    from .laurent import w
    return (NCPolynomial.letter(StatedGenerator(arc_id, 0, 1), w(-1))
            - NCPolynomial.letter(StatedGenerator(arc_id, 1, 0), w(3)))


def plain_trace(arc_id):
    """``tr N = w^-1 a[pm] - w^-5 a[mp]`` (not coinvariant; kept for comparison)."""
    from .laurent import w
    return (NCPolynomial.letter(StatedGenerator(arc_id, 0, 1), w(-1))
            - NCPolynomial.letter(StatedGenerator(arc_id, 1, 0), w(-5)))


def gauge_coaction(p, x, rs=None, convention="standard"):
    return GaugeCoaction(p, rs, convention)(x)


def check_comodule(p, rs=None, convention="standard"):
    return GaugeCoaction(p, rs, convention).check()


def coinvariants(p, d, rs=None, convention="standard"):
    return GaugeCoaction(p, rs, convention).coinvariants(d)


