"""Small dense matrices over a (possibly noncommutative) coefficient ring.

Entries are multiplied in the order they appear, so products of matrices
whose entries are noncommutative polynomials keep the left factor on the
left.  Index conventions used throughout the package:

* the state index set is ``(+, -)`` mapped to ``(0, 1)``;
* pairs are ordered ``(++, +-, -+, --)``, i.e. ``(i, k) -> 2*i + k``;
* a superscript is a row index and a subscript is a column index.
"""

from .laurent import ONE, ZERO, Laurent, A, W

STATES = ("+", "-")
STATE_NAMES = ("p", "m")
PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


def pair_index(i, k):
    return 2 * i + k


class Matrix:
    """Immutable rectangular matrix with generic entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n, one=ONE, zero=ZERO):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n, m, zero=ZERO):
        return cls([[zero] * m for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def map(self, f):
        return Matrix([[f(x) for x in r] for r in self.rows])

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    T = property(transpose)

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        """Multiply every entry on the left by the scalar ``c``."""
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = None
                for a, b in zip(r, c):
                    if not a or not b:
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                row.append(acc if acc is not None else _zero_like(r[0], c[0]))
            out.append(row)
        return Matrix(out)

    def kron(self, other):
        """Kronecker product ``(X . Y)^{i,k}_{j,l} = X^i_j Y^k_l``."""
        n2, m2 = other.nrows, other.ncols
        out = [[None] * (self.ncols * m2) for _ in range(self.nrows * n2)]
        for i in range(self.nrows):
            for j in range(self.ncols):
                x = self.rows[i][j]
                for k in range(n2):
                    for l in range(m2):
                        out[i * n2 + k][j * m2 + l] = x * other.rows[k][l]
        return Matrix(out)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def entries(self):
        return [x for r in self.rows for x in r]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


def _zero_like(a, b):
    for x in (a, b):
        if hasattr(x, "zero_like"):
            return x.zero_like()
    return ZERO


def kron(x, y):
    return x.kron(y)


def trace_left(x):
    """``tr_L(X)^b_a = sum_i X^{ib}_{ia}`` for a 4x4 matrix."""
    return Matrix([[_sum([x[2 * i + b, 2 * i + a] for i in range(2)]) for a in range(2)]
                   for b in range(2)])


def trace_right(x):
    """``tr_R(X)^b_a = sum_i X^{bi}_{ai}`` for a 4x4 matrix."""
    return Matrix([[_sum([x[2 * b + i, 2 * a + i] for i in range(2)]) for a in range(2)]
                   for b in range(2)])


def _sum(xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = acc + x
    return acc


def det_q(m, qq):
    """``ad - qq^{-1} bc`` for a 2x2 matrix with entries in written order."""
    a, b = m.rows[0]
    c, d = m.rows[1]
    return a * d - (qq ** -1) * (b * c)


# constant matrices ------------------------------------------------------

def _L(d):
    return Laurent(d)


I2 = Matrix.identity(2)
I4 = Matrix.identity(4)

C = Matrix([[ZERO, W], [-(W ** 5), ZERO]])
C_INV = Matrix([[ZERO, -(W ** -5)], [W ** -1, ZERO]])

R = Matrix([
    [A, ZERO, ZERO, ZERO],
    [ZERO, ZERO, A ** -1, ZERO],
    [ZERO, A ** -1, A - A ** -3, ZERO],
    [ZERO, ZERO, ZERO, A],
])
R_INV = Matrix([
    [A ** -1, ZERO, ZERO, ZERO],
    [ZERO, A ** -1 - A ** 3, A, ZERO],
    [ZERO, A, ZERO, ZERO],
    [ZERO, ZERO, ZERO, A ** -1],
])
TAU = Matrix([
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, ZERO, ONE, ZERO],
    [ZERO, ONE, ZERO, ZERO],
    [ZERO, ZERO, ZERO, ONE],
])


def yang_baxter_sides(r=R):
    """Both sides of the braid relation on V^{(x)3} as 8x8 matrices."""
    left = r.kron(I2) @ I2.kron(r) @ r.kron(I2)
    right = I2.kron(r) @ r.kron(I2) @ I2.kron(r)
    return left, right


def r_from_quantum_group(qq=None):
    """Rebuild the braiding as ``tau . q^{H(x)H/2} . (1 + (q - q^-1) E(x)F)``.

    Used as an independent cross-check of the tabulated matrix.  With
    ``q = A^2`` the diagonal factor ``q^{H(x)H/2}`` has entries
    ``q^{+-1/2} = A^{+-1}`` on the basis ``(++, +-, -+, --)``.
    """
    qq = A ** 2 if qq is None else qq
    half = {1: A, -1: A ** -1}
    weights = [1, -1]
    diag = Matrix([[half[weights[i] * weights[k]] if 2 * i + k == c else ZERO
                    for c in range(4)] for i in range(2) for k in range(2)])
    e = Matrix([[ZERO, ONE], [ZERO, ZERO]])
    f = Matrix([[ZERO, ZERO], [ONE, ZERO]])
    ef = e.kron(f).scale(qq - qq ** -1)
    return TAU @ diag @ (I4 + ef)
