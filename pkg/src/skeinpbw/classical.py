"""Spin functions, U-generators and the classical point w = 1.

At ``w = 1`` the algebra becomes commutative and its relators are
polynomial functions on tuples of SL2 matrices.  The U-generators absorb
the signs that separate the stated generators from matrix coefficients.
"""

import random
from fractions import Fraction

from .errors import UnsupportedError, ValidationError
from .laurent import ONE, W, Laurent
from .matrices import Matrix
from .ncpoly import NCPolynomial, StatedGenerator
from .presentation import CIP, CP, m_matrix, parse_letter
from .rewrite import evaluate_coefficients, specialize  # noqa: F401  (re-exported)


# spin functions -----------------------------------------------------------

def validate_spin(p, w):
    """Check that every relation word has odd total weight.

    Returns ``(ok, failing relation indices)``.
    """
    missing = [g.id for g in p.generators if g.id not in w]
    if missing:
        raise ValidationError("spin function misses generators", {"generators": missing})
    bad = []
    for k, word in enumerate(p.relations):
        if sum(int(w[parse_letter(x)[0]]) for x in word) % 2 != 1:
            bad.append(k)
    return not bad, bad


def zero_spin(p):
    return {g.id: 0 for g in p.generators}


# U-generators -----------------------------------------------------------------

def _u_scale(arc_type, weight):
    if arc_type not in ("a", "d"):
        raise UnsupportedError("U-generators need arcs of type a or d", {"type": arc_type})
    s = ONE if int(weight) % 2 == 0 else -ONE
    return s * W if arc_type == "a" else s


def u_matrix(arc, weight):
    """``U`` as a matrix of polynomials in the stated generators of ``arc``."""
    c = NCPolynomial.scalar(_u_scale(arc.arc_type, weight))
    return (CIP @ m_matrix(arc.id)).map(lambda e: c * e)


def m_from_u(arc, weight, prefix="U"):
    """``M`` written in U-letters ``StatedGenerator(prefix + id, i, j)``."""
    c = NCPolynomial.scalar(_u_scale(arc.arc_type, weight) ** -1)
    u = Matrix([[NCPolynomial.letter(StatedGenerator(prefix + arc.id, i, j)) for j in range(2)]
                for i in range(2)])
    return (CP @ u).map(lambda e: c * e)


def u_generators(p, w, prefix="U"):
    """Forward and backward substitutions between M-letters and U-letters.

    ``to_u`` sends each stated generator to a linear form in U-letters,
    ``from_u`` sends each U-letter to a linear form in stated generators.
    """
    to_u, from_u = {}, {}
    for g in p.generators:
        mu = m_from_u(g, w[g.id], prefix)
        um = u_matrix(g, w[g.id])
        for i in range(2):
            for j in range(2):
                to_u[StatedGenerator(g.id, i, j)] = mu[i, j]
                from_u[StatedGenerator(prefix + g.id, i, j)] = um[i, j]
    return to_u, from_u


def transport_relators(rs, to_u):
    """The relators of ``rs`` written in U-letters."""
    return [r.as_polynomial().substitute(to_u) for r in rs.relator_list()]


def u_determinant(p, arc_id, w, prefix="U"):
    """``det_q(U)`` (type a) or ``det_{q^2}(U)`` (type d), in U-letters, minus one."""
    from .laurent import q
    g = p.by_id[arc_id]
    u = Matrix([[NCPolynomial.letter(StatedGenerator(prefix + arc_id, i, j)) for j in range(2)]
                for i in range(2)])
    qq = q if g.arc_type == "a" else q ** 2
    (a, b), (c, d) = u.rows
    return a * d - (b * c).scale(qq ** -1) - NCPolynomial.scalar(ONE)


# evaluation at SL2 points -----------------------------------------------------

def _as_fraction_matrix(m):
    try:
        rows = [[Fraction(x) for x in row] for row in m]
    except (TypeError, ValueError) as exc:
        raise ValidationError("point entries must be rationals", {"detail": str(exc)}) from None
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValidationError("point matrices must be 2x2")
    return rows


def check_point(pt):
    out = {}
    for gid, m in pt.items():
        rows = _as_fraction_matrix(m)
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if det != 1:
            raise ValidationError("point matrix must have determinant 1",
                                  {"generator": gid, "det": str(det)})
        out[gid] = rows
    return out


def evaluate_at_point(x, pt, prefix="U"):
    """Evaluate a polynomial in U-letters at an SL2 point (coefficients at w = 1).

    Letters ``prefix + id`` take the entries of ``pt[id]``; the algebra is
    commutative at ``w = 1`` so word order does not matter.
    """
    pt = check_point(pt)
    total = Fraction(0)
    for word, c in x.items():
        c = c.evaluate(1) if isinstance(c, Laurent) else Fraction(c)
        val = c
        for g in word:
            name = g.arc[len(prefix):] if g.arc.startswith(prefix) else None
            if name is None or name not in pt:
                raise ValidationError("no point value for letter", {"letter": str(g)})
            val *= pt[name][g.i][g.j]
        total += val
    return total


def random_sl2(rng, bound=3, shears=4):
    """Product of elementary shears with small integer or half-integer entries."""
    m = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for _ in range(shears):
        t = Fraction(rng.randint(-bound, bound), rng.choice((1, 2, 3)))
        e = [[1, t], [0, 1]] if rng.random() < 0.5 else [[1, 0], [t, 1]]
        m = [[sum(m[i][k] * e[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return m


def random_points(p, count, seed=0):
    rng = random.Random(seed)
    return [{g.id: random_sl2(rng) for g in p.generators} for _ in range(count)]


def relators_vanish(polys, points, prefix="U"):
    """Indices ``(point, relator)`` where evaluation is nonzero."""
    bad = []
    for k, pt in enumerate(points):
        for j, poly in enumerate(polys):
            if evaluate_at_point(poly, pt, prefix):
                bad.append((k, j))
    return bad


def is_commutator(poly):
    """True when ``poly`` is ``c*(xy - yx)`` for letters x, y (after specialisation)."""
    items = list(poly.items())
    if len(items) != 2:
        return False
    (w1, c1), (w2, c2) = items
    return len(w1) == 2 and tuple(reversed(w1)) == w2 and c1 + c2 == 0
