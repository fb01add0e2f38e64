"""Fraction-free linear algebra over Z[w^+-1] (or over Q for specialisations).

The elimination is the Bareiss variant of Gauss-Jordan: after processing
``k`` pivots every entry is a ``k x k`` minor of the input, so the division
by the previous pivot is always exact in the integral domain.
"""

from fractions import Fraction

from .errors import DerivationError
from .laurent import ONE, ZERO, Laurent


def _exact_div(a, b):
    if isinstance(a, Laurent) or isinstance(b, Laurent):
        res = Laurent.coerce(a).divmod_exact(b)
        if res is None:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return res
    return Fraction(a) / b


def _one_like(x):
    return ONE if isinstance(x, Laurent) else Fraction(1)


def row_reduce(rows):
    """Fraction-free reduced echelon form.

    Returns ``(matrix, pivot_columns, last_pivot)`` where ``matrix`` equals
    ``last_pivot`` times the reduced row echelon form of the input.
    """
    a = [list(r) for r in rows]
    if not a:
        return a, [], ONE
    nrows, ncols = len(a), len(a[0])
    prev = _one_like(a[0][0]) if ncols else ONE
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        sel = None
        for i in range(r, nrows):
            if a[i][c]:
                if sel is None or _weight(a[i][c]) < _weight(a[sel][c]):
                    sel = i
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if not f:
                new = [_exact_div(p * x, prev) if x else x for x in row]
            else:
                new = []
                for x, y in zip(row, prow):
                    t = p * x - f * y
                    new.append(_exact_div(t, prev) if t else t)
            a[i] = new
        pivots.append(c)
        prev = p
        r += 1
    # rows above the last pivot were scaled to the last pivot value already;
    # pivot rows themselves carry their own pivot, rescale them to ``prev``.
    for idx, c in enumerate(pivots):
        p = a[idx][c]
        if p != prev:
            a[idx] = [_exact_div(prev * x, p) if x else x for x in a[idx]]
    return a, pivots, prev


def _weight(x):
    if isinstance(x, Laurent):
        return len(x.terms)
    return 0


def rank(rows):
    return len(row_reduce(rows)[1])


def solve_fraction_free(t, b):
    """Solve ``T X = B`` exactly and return ``X`` as a list of rows.

    ``T`` is square.  Raises :class:`DerivationError` when ``T`` is singular
    (the error carries the rank) or when a solution entry is not a Laurent
    polynomial.
    """
    n = len(t)
    m = len(b[0]) if b else 0
    aug = [list(t[i]) + list(b[i]) for i in range(n)]
    red, pivots, d = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        rk = len([c for c in pivots if c < n])
        raise DerivationError("singular system", {"rank": rk, "size": n})
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            x = red[i][n + j]
            if not x:
                row.append(x)
                continue
            try:
                row.append(_exact_div(x, d))
            except ArithmeticError:
                raise DerivationError("solution has a non-Laurent entry",
                                      {"row": i, "column": j, "numerator": str(x),
                                       "denominator": str(d)}) from None
        out.append(row)
    return out


def kernel(rows, ncols=None):
    """Basis of the right kernel ``{x : M x = 0}``.

    Vectors have entries in the coefficient ring and are made primitive
    (entry gcd removed, first nonzero entry with positive leading
    coefficient) when the ring is Z[w^+-1].
    """
    if not rows:
        n = ncols or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    red, pivots, d = row_reduce(rows)
    n = len(red[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO if isinstance(d, Laurent) else Fraction(0)] * n
        v[f] = d
        for idx, c in enumerate(pivots):
            v[c] = -red[idx][f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Divide a Laurent vector by the gcd of its entries and normalise."""
    if not any(isinstance(x, Laurent) and x for x in v):
        nz = [x for x in v if x]
        if not nz:
            return v
        return [x / nz[0] for x in v]
    g = laurent_gcd([x for x in v if x])
    v = [x.divmod_exact(g) if x else x for x in v]
    first = next(x for x in v if x)
    lead = first.terms[first.max_degree()]
    shift = Laurent.monomial(-first.max_degree(), 1 if lead > 0 else -1)
    return [shift * x for x in v]


def laurent_gcd(values):
    """Gcd in Z[w^+-1], computed on shifted integer polynomials."""
    import sympy

    x = sympy.Symbol("w")
    g = None
    for p in values:
        lo = p.min_degree()
        poly = sympy.Poly({(k - lo,): c for k, c in p.terms.items()}, x, domain="ZZ")
        g = poly if g is None else sympy.gcd(g, poly)
        if g.degree() == 0 and abs(g.LC()) == 1:
            return ONE
    terms = {m[0]: int(c) for m, c in g.terms()}
    return Laurent(terms)


def matrix_times_vector(m, v):
    out = []
    for row in m:
        acc = None
        for a, b in zip(row, v):
            if a and b:
                t = a * b
                acc = t if acc is None else acc + t
        out.append(acc if acc is not None else ZERO)
    return out
