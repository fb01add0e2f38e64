"""Relators of a no-relation presentation: same-arc systems and exchange rules."""

import itertools

from .cutting import cut_exchange_rules
from .errors import DerivationError, UnsupportedError, ValidationError
from .laurent import ONE, q
from .linsolve import solve_fraction_free
from .matrices import TAU
from .ncpoly import NCPolynomial, StatedGenerator
from .presentation import (CIP, CP, I2P, RIP, RP, classify_type, lift,
                           m_matrix, match_configuration, n_matrix, parse_letter)
from .rewrite import Relator, RewriteSystem
from .samearc import same_arc_relators

TAUP = lift(TAU)

# configurations whose rules are derived by cutting the loop
CUT_CASES = ("v",)

_STATES = ((0, 0), (0, 1), (1, 0), (1, 1))


def case_sides(case, nx, ny):
    """Left and right sides of the exchange equation for the given case."""
    if case in ("i", "ii", "iii", "iv"):
        left = nx.kron(ny)
        mid = ny.kron(nx)
        right = {
            "i": lambda: TAUP @ mid @ TAUP,
            "ii": lambda: TAUP @ mid @ RP,
            "iii": lambda: RIP @ mid @ RP,
            "iv": lambda: RP @ mid @ RP,
        }[case]()
        return left, right
    if case in ("v", "vi", "vii"):
        left = nx.kron(ny)
        first = RIP if case != "vii" else RP
        right = first @ ny.kron(I2P) @ RP @ nx.kron(I2P)
        return left, right
    ox, oy = I2P.kron(nx), I2P.kron(ny)
    if case == "viii":
        return ox @ RIP @ oy @ RIP, RP @ oy @ RIP @ ox
    if case == "ix":
        return RIP @ ox @ RP @ oy, oy @ RIP @ ox @ RP
    if case == "x":
        return ox @ RIP @ oy @ RP, RP @ oy @ RIP @ ox
    raise ValueError(case)


def _pair_words(first, second):
    return [(StatedGenerator(first, *s), StatedGenerator(second, *t))
            for s in _STATES for t in _STATES]


class ExchangeDerivation:
    """Everything computed for one ordered pair ``alpha > beta``."""

    def __init__(self, alpha, beta):
        if alpha.id == beta.id:
            raise ValidationError("exchange rules need two distinct generators")
        self.alpha, self.beta = alpha, beta
        self.match = match_configuration(alpha, beta)
        self.leading_words = _pair_words(alpha.id, beta.id)
        self.lower_words = _pair_words(beta.id, alpha.id)
        if self.match.case in CUT_CASES:
            # the tabulated equation is unusable here; the rules come from
            # cutting the loop, which checks its own identity exactly
            self.method = "cut"
            self.equations = []
            self.rules = cut_exchange_rules(alpha, beta)
            return
        self.method = "equation"
        nx, ny = self.match.alpha_role.n(), self.match.beta_role.n()
        left, right = case_sides(self.match.case, nx, ny)
        self.equations = [left.rows[i][j] - right.rows[i][j] for i in range(4) for j in range(4)]
        self.rules = self._solve()

    def _matrices(self):
        lead_ix = {w: k for k, w in enumerate(self.leading_words)}
        low_ix = {w: k for k, w in enumerate(self.lower_words)}
        tl = [[None] * 16 for _ in range(16)]
        tr = [[None] * 16 for _ in range(16)]
        zero = ONE - ONE
        for e, poly in enumerate(self.equations):
            row_l = [zero] * 16
            row_r = [zero] * 16
            for w, c in poly.items():
                if w in lead_ix:
                    row_l[lead_ix[w]] = c
                elif w in low_ix:
                    row_r[low_ix[w]] = -c
                else:
                    raise DerivationError("exchange equation contains an unexpected word",
                                          {"word": [str(g) for g in w]})
            tl[e], tr[e] = row_l, row_r
        return tl, tr

    def _solve(self):
        tl, tr = self._matrices()
        try:
            sol = solve_fraction_free(tl, tr)
        except DerivationError as exc:
            exc.context.update({"alpha": self.alpha.id, "beta": self.beta.id,
                                "case": self.match.case})
            raise
        rules = {}
        for k, w in enumerate(self.leading_words):
            lower = NCPolynomial()
            for j, c in enumerate(sol[k]):
                if c:
                    lower = lower + NCPolynomial.word(self.lower_words[j], c)
            rules[w] = lower
        return rules

    def relators(self):
        return [Relator(w, self.rules[w]) for w in self.leading_words]

    def back_substitution_residuals(self):
        """Substitute the rules into the case equation; all residuals must vanish."""
        out = []
        for poly in self.equations:
            acc = NCPolynomial()
            for w, c in poly.items():
                acc = acc + (self.rules[w].scale(c) if w in self.rules else NCPolynomial.word(w, c))
            out.append(acc)
        return out

    def back_substitution_ok(self):
        return all(not r for r in self.back_substitution_residuals())


def exchange_relators(alpha, beta):
    """Sixteen relators ``alpha_{ab} beta_{cd} -> sum beta_{ij} alpha_{kl}`` for alpha > beta."""
    return ExchangeDerivation(alpha, beta).relators()


def same_generator_relators(arc):
    t = classify_type(arc)
    if t not in ("a", "c", "d"):
        raise UnsupportedError("normalize b/e arcs before building relators",
                               {"generator": arc.id, "type": t})
    return same_arc_relators(arc.id, t)


def qdet_relators(arc):
    """``det_q(N) - 1`` (type a), ``det_{q^2}(N) - 1`` (type d) or ``det_{q^-2}(N) - 1`` (type c).

    Type c is the reflection of type d, which inverts ``q``; with
    ``det_{q^2}`` the type-c expression does not vanish.
    """
    t = classify_type(arc)
    n = n_matrix(arc)
    qq = {"a": q, "d": q ** 2, "c": q ** -2}.get(t)
    if qq is None:
        raise UnsupportedError("normalize b/e arcs before building q-determinants",
                               {"generator": arc.id, "type": t})
    (a, b), (c, d) = n.rows
    return a * d - (b * c).scale(qq ** -1) - NCPolynomial.scalar(ONE)


def trivial_loop_matrix(word, presentation):
    """``C M(b_k) C^-1 M(b_{k-1}) C^-1 ... C^-1 M(b_1)`` for a word listed b_k..b_1."""
    gens = presentation.by_id
    mats = []
    for letter in word:
        name, inv = parse_letter(letter)
        g = gens[name]
        t = classify_type(g)
        if t not in ("a", "d") or (inv and t != "a"):
            raise UnsupportedError("trivial loops need letters of type a (or d, uninverted)",
                                   {"letter": letter, "type": t})
        m = m_matrix(name)
        mats.append(m.T if inv else m)
    out = CP @ mats[0]
    for m in mats[1:]:
        out = out @ CIP @ m
    return out


def build_relators(p):
    """All relators of a no-relation presentation, plus the per-pair derivations."""
    if p.relations:
        raise ValidationError("eliminate relations before building the rewriting system")
    gens = p.ordered()
    rels = []
    derivations = {}
    for g in gens:
        rels.extend(same_generator_relators(g))
    for beta, alpha in itertools.combinations(gens, 2):
        d = ExchangeDerivation(alpha, beta)
        derivations[(alpha.id, beta.id)] = d
        rels.extend(d.relators())
    return rels, derivations


def build_rewrite_system(p, guard=None):
    rels, _ = build_relators(p)
    kw = {} if guard is None else {"guard": guard}
    return RewriteSystem(p.alphabet(), rels, presentation=p, **kw)
