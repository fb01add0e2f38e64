"""Exchange rules obtained by cutting a loop into two arcs.

A type-d loop ``beta`` from position ``p`` to ``q > p`` on a boundary arc is
cut at a new pair of boundary arcs: ``g1`` runs from ``(b, p)`` to the first
new arc and ``g2`` from the second new arc to ``(b, q)``.  Then
``M(beta) = M(g2) M(g1)`` and every other arc meeting ``b`` only sees
type-a neighbours, whose exchange rules are already available.  Exchange
rules between ``beta`` and a type-a arc ``alpha`` are recovered by linear
algebra on normal forms in the cut algebra.  Type-c loops go through the
height-reversal substitution first.
"""

from dataclasses import replace

from .errors import DerivationError, UnsupportedError
from .linsolve import rank, solve_fraction_free
from .ncpoly import NCPolynomial, StatedGenerator
from .presentation import SOURCE_ABOVE, GeneratorArc, Presentation, height_reversed_m, m_matrix

_STATES = ((0, 0), (0, 1), (1, 0), (1, 1))
_CUT = ("__cut1", "__cut2")


def _pair_words(first, second):
    return [(StatedGenerator(first, *s), StatedGenerator(second, *t))
            for s in _STATES for t in _STATES]


def _fresh(name, taken):
    while name in taken:
        name += "_"
    return name


def cut_system(alpha, beta):
    """Rewriting system of ``{alpha, g1, g2}`` and the substitution for ``beta``.

    ``beta`` must be a type-d loop and ``alpha`` a type-a arc.
    """
    from .relators import build_rewrite_system
    if beta.arc_type != "d" or alpha.arc_type != "a":
        raise UnsupportedError("cutting needs a type a arc and a type d loop",
                               {"alpha": alpha.id, "beta": beta.id})
    arcs = {alpha.source[0], alpha.target[0], beta.source[0]}
    u1 = _fresh("__u1", arcs)
    u2 = _fresh("__u2", arcs | {u1})
    ids = {alpha.id, beta.id}
    g1, g2 = (_fresh(n, ids) for n in _CUT)
    gens = [
        GeneratorArc(g1, beta.source, (u1, 0), None, 0),
        GeneratorArc(g2, (u2, 0), beta.target, None, 1),
        replace(alpha, order_index=2),
    ]
    p = Presentation(sorted(arcs | {u1, u2}), gens, [])
    rs = build_rewrite_system(p)
    m1, m2 = m_matrix(g1), m_matrix(g2)
    mb = m2 @ m1
    subst = {StatedGenerator(beta.id, i, j): mb[i, j] for i, j in _STATES}
    return rs, subst


def solve_rules(leading, lower, image):
    """Rules ``leading[k] -> sum X[k][j] lower[j]`` from exact images.

    ``image`` maps a word to its normal form in some faithful model; the
    system must determine ``X`` uniquely and reproduce every image exactly.
    """
    low_img = [image(w) for w in lower]
    words = sorted({w for p in low_img for w in p.words()}, key=str)
    mat = [[p.coefficient(w) for p in low_img] for w in words]
    rows, picked = [], []
    for k, r in enumerate(mat):
        if rank(rows + [r]) > len(rows):
            rows.append(r)
            picked.append(k)
        if len(rows) == len(lower):
            break
    if len(rows) < len(lower):
        raise DerivationError("cut images of the lower words are dependent",
                              {"rank": len(rows)})
    rules = {}
    for lw in leading:
        img = image(lw)
        extra = [w for w in img.words() if w not in set(words)]
        if extra:
            raise DerivationError("leading image leaves the span of the lower words")
        rhs = [[img.coefficient(words[k])] for k in picked]
        sol = solve_fraction_free(rows, rhs)
        lower_poly = NCPolynomial()
        check = img
        for j, w in enumerate(lower):
            c = sol[j][0]
            if c:
                lower_poly = lower_poly + NCPolynomial.word(w, c)
                check = check - low_img[j].scale(c)
        if check:
            raise DerivationError("cut identity is not solvable exactly",
                                  {"leading": [str(g) for g in lw]})
        rules[lw] = lower_poly
    return rules


def cut_exchange_rules(alpha, beta):
    """Rules ``alpha_ab beta_cd -> ...`` (alpha first) for a type-a arc and a loop.

    Either argument may be the loop; the leading words always start with
    ``alpha``.
    """
    loop, arc = (beta, alpha) if beta.same_arc else (alpha, beta)
    if arc.same_arc or not loop.same_arc:
        raise UnsupportedError("cutting needs one loop and one type a arc")
    lead = _pair_words(alpha.id, beta.id)
    low = _pair_words(beta.id, alpha.id)
    t = loop.arc_type
    if t == "d":
        rs, subst = cut_system(arc, loop)
        return solve_rules(lead, low,
                           lambda w: rs.normal_form(NCPolynomial.word(w).substitute(subst)))
    if t != "c":
        raise UnsupportedError("normalize b/e loops before cutting", {"generator": loop.id})
    # M(loop) is the height reversal of the type-d loop on the same endpoints
    loop_d = replace(loop, height=SOURCE_ABOVE)
    hr = height_reversed_m("d", m_matrix(loop.id))
    subst = {StatedGenerator(loop.id, i, j): hr[i, j] for i, j in _STATES}
    first, second = (arc, loop_d) if alpha is arc else (loop_d, arc)
    base = cut_exchange_rules(first, second)
    from .relators import same_generator_relators
    from .rewrite import Relator, RewriteSystem
    rels = same_generator_relators(arc) + same_generator_relators(loop_d)
    rels += [Relator(w, r) for w, r in base.items()]
    letters = [x for g in (second, first) for x in g.letters()]
    rs = RewriteSystem(letters, rels)
    return solve_rules(lead, low,
                       lambda w: rs.normal_form(NCPolynomial.word(w).substitute(subst)))
