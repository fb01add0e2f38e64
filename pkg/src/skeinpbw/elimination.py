"""Trivial-loop checks and removal of generators through relations.

A relation word ``b_k ... b_1`` imposes ``C M(b_k) C^-1 M(b_{k-1}) ... C^-1 M(b_1) = 1``.
Solving it for one letter needs two-sided inverses of the other factors.
For type a letters these come from the antipode, ``M^-1 = C^-1 tM C``;
type d letters have no such formula here, so they may only be the letter
being solved for.
"""

from dataclasses import replace

from .errors import UnsupportedError, ValidationError
from .presentation import CIP, CP, I2P, Presentation, m_matrix, parse_letter
from .relators import build_relators, trivial_loop_matrix
from .rewrite import RewriteSystem


def loop_identity_check(word, presentation, rs):
    """Reduce the entries of ``trivial_loop_matrix(word) - 1``; True when all vanish."""
    residual = trivial_loop_matrix(word, presentation) - I2P
    return all(not rs.normal_form(e) for e in residual.entries())


def loop_residuals(word, presentation, rs, subst=None):
    """Entries of ``trivial_loop_matrix(word) - 1`` in normal form.

    ``subst`` rewrites eliminated generators before reducing in ``rs``.
    """
    residual = trivial_loop_matrix(word, presentation) - I2P
    if subst:
        residual = residual.map(lambda e: e.substitute(subst))
    return [[rs.normal_form(residual[i, j]) for j in range(2)] for i in range(2)]


def _letter_matrix(letter, gens):
    name, inv = parse_letter(letter)
    g = gens[name]
    t = g.arc_type
    if t not in ("a", "d") or (inv and t != "a"):
        raise UnsupportedError("only type a letters (or uninverted type d) can appear",
                               {"letter": letter, "type": t})
    m = m_matrix(name)
    return m.T if inv else m


def _inverse(letter, gens):
    """Two-sided inverse of ``M(letter)``; only available for type a."""
    name, _ = parse_letter(letter)
    if gens[name].arc_type != "a":
        raise UnsupportedError("isolating this generator needs the inverse of a type d matrix",
                               {"letter": letter})
    return CIP @ _letter_matrix(letter, gens).T @ CP


def _product_inverse(factors, gens):
    """Inverse of a product of C, C^-1 and letter matrices."""
    out = I2P
    for f in reversed(factors):
        if f is CP:
            inv = CIP
        elif f is CIP:
            inv = CP
        else:
            inv = _inverse(f, gens)
        out = out @ inv
    return out


def isolate(word, target, gens):
    """Express ``M(target)`` through the other letters of a relation word."""
    names = [parse_letter(x)[0] for x in word]
    if names.count(target) != 1:
        raise UnsupportedError("the eliminated generator must occur exactly once",
                               {"generator": target, "word": list(word)})
    pos = names.index(target)
    # relation: P * M(word[pos]) * Q = 1, so M(word[pos]) = P^-1 Q^-1
    left = [CP]
    for letter in word[:pos]:
        left += [letter, CIP]
    right = []
    for letter in word[pos + 1:]:
        right += [CIP, letter]
    m = _product_inverse(left, gens) @ _product_inverse(right, gens)
    inv = parse_letter(word[pos])[1]
    return m.T if inv else m


def eliminate_generator(p, choice=None):
    """Remove one generator per relation.

    ``choice`` maps a relation index to the id to eliminate (default: the
    last letter).  Returns ``(smaller presentation, substitution)``, the
    substitution sending each stated generator of a removed arc to a
    normal-form polynomial over the remaining alphabet.
    """
    if not p.relations:
        return p, {}
    choice = dict(choice or {})
    gens = p.by_id
    removed = []
    for k, word in enumerate(p.relations):
        target = choice.get(k, parse_letter(word[-1])[0])
        if target not in gens:
            raise ValidationError("unknown generator to eliminate", {"generator": target})
        if target in removed:
            raise UnsupportedError("a generator can be eliminated only once", {"generator": target})
        for other in p.relations[k + 1:]:
            if target in (parse_letter(x)[0] for x in other):
                raise UnsupportedError("eliminated generator occurs in a later relation",
                                       {"generator": target})
        if len({parse_letter(x)[0] for x in word}) < 2:
            raise ValidationError("relation would eliminate its only generator",
                                  {"word": list(word)})
        removed.append(target)
    kept = [g for g in p.ordered() if g.id not in removed]
    if not kept:
        raise ValidationError("elimination would leave no generators")
    kept = [replace(g, order_index=n) for n, g in enumerate(kept)]
    small = Presentation(list(p.boundary_arcs), kept, [])
    rels, _ = build_relators(small)
    rs = RewriteSystem(small.alphabet(), rels, presentation=small)
    subst = {}
    for k, word in enumerate(p.relations):
        target = removed[k]
        m = isolate(word, target, gens)
        for i in range(2):
            for j in range(2):
                e = m[i, j]
                if any(g.arc in removed for g in e.letters()):
                    raise UnsupportedError("substitution refers to another eliminated generator",
                                           {"generator": target})
                subst[m_matrix(target)[i, j].words()[0][0]] = rs.normal_form(e)
    return small, subst


def transported_relators(p, small, subst):
    """Relators of the full generator set that involve an eliminated generator,
    rewritten through ``subst`` and reduced in the system of ``small``."""
    free = Presentation(list(p.boundary_arcs), list(p.generators), [])
    rels, _ = build_relators(free)
    rs_small = RewriteSystem(small.alphabet(), build_relators(small)[0], presentation=small)
    removed = {g.arc for g in subst}
    out = []
    for rel in rels:
        if not any(g.arc in removed for g in rel.leading):
            continue
        image = rel.as_polynomial().substitute(subst)
        out.append((rel, rs_small.normal_form(image)))
    return out
