"""Exact rational linear algebra on stdlib Fractions.

Matrices are lists of lists of Fraction, row-major, dense.  Subspaces are
stored by their unique reduced row-echelon basis, so subspace equality is
entry-wise basis equality.
"""

from fractions import Fraction
from math import gcd


def frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def mat(rows):
    return [[frac(x) for x in row] for row in rows]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n):
    M = zeros(n, n)
    for i in range(n):
        M[i][i] = Fraction(1)
    return M


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_mul(A, B):
    n, k = len(A), len(B)
    assert all(len(row) == k for row in A), "dimension mismatch"
    cols = len(B[0]) if B else 0
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    s = frac(s)
    return [[s * a for a in row] for row in A]


def mat_eq(A, B):
    return A == B


def is_zero_mat(A):
    return all(x == 0 for row in A for x in row)


def vec_flat(A):
    """Row-major vectorization of a matrix."""
    return [x for row in A for x in row]


def unflatten(v, rows, cols):
    assert len(v) == rows * cols
    return [list(v[i * cols:(i + 1) * cols]) for i in range(rows)]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def row_times_mat(u, A):
    """Covector times matrix: returns a row vector."""
    return [sum(u[i] * A[i][j] for i in range(len(A))) for j in range(len(A[0]))]


def mat_times_col(A, w):
    return [sum(A[i][j] * w[j] for j in range(len(w))) for i in range(len(A))]


def outer(w, u):
    """Column w times row u."""
    return [[wi * uj for uj in u] for wi in w]


def mat_pow(A, k):
    n = len(A)
    R = identity(n)
    for _ in range(k):
        R = mat_mul(R, A)
    return R


def _int_rows(A):
    """Clear denominators row by row; returns integer rows."""
    out = []
    for row in A:
        fr = [frac(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x.numerator * (den // x.denominator)) for x in fr])
    return out


def rref(A):
    """Reduced row-echelon form.

    Returns (R, rank, pivots).  R has the same shape as A (zero rows at the
    bottom) with Fraction entries.  Internally eliminates over the integers
    with gcd reduction to keep entries small, then normalizes pivots.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    R = _int_rows(A)
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if R[i][c]:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        p = R[r][c]
        for i in range(m):
            if i != r and R[i][c]:
                q = R[i][c]
                row = [a * p - b * q for a, b in zip(R[i], R[r])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                R[i] = row
        pivots.append(c)
        r += 1
        if r == m:
            break
    out = []
    for i in range(r):
        p = R[i][pivots[i]]
        out.append([Fraction(x, p) for x in R[i]])
    for _ in range(m - r):
        out.append([Fraction(0)] * n)
    return out, r, pivots


def rank(A):
    return rref(A)[1]


def kernel_basis(A):
    """Basis (list of vectors) of the right kernel of A, from its RREF."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    R, r, pivots = rref(A)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve_coords(basis_rows, v):
    """Express v as a combination of the given (independent) rows.

    Returns the coefficient list or None if v is not in the span.
    """
    if not basis_rows:
        return [] if all(x == 0 for x in v) else None
    aug = transpose(basis_rows)
    for i, row in enumerate(aug):
        row.append(frac(v[i]))
    R, r, pivots = rref(aug)
    k = len(basis_rows)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for i, p in enumerate(pivots):
        coeffs[p] = R[i][k]
    return coeffs


def solve_linear(A, b):
    """One particular solution x of A x = b (free variables set to 0), or None."""
    if not A:
        return None
    n = len(A[0])
    aug = [list(row) + [frac(bi)] for row, bi in zip(A, b)]
    R, r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = R[i][n]
    return x


class Subspace:
    """Linear subspace of Q^n in canonical RREF basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, vectors, ambient=None):
        vectors = list(vectors)
        if ambient is None:
            if not vectors:
                raise ValueError("ambient dimension required for empty span")
            ambient = len(vectors[0])
        if not vectors:
            return cls(ambient, [], [])
        R, r, pivots = rref(vectors)
        return cls(ambient, R[:r], pivots)

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v):
        """Membership solve: coefficients of v against the canonical basis."""
        if len(v) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        v = [frac(x) for x in v]
        coeffs = [v[p] for p in self.pivots]
        residual = list(v)
        for c, row in zip(coeffs, self.basis):
            if c:
                residual = [x - c * y for x, y in zip(residual, row)]
        if any(x != 0 for x in residual):
            return None
        return coeffs

    def contains(self, v):
        return self.coords(v) is not None

    def intersect(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient, [], [])
        # x in both spans iff x = U^t a = V^t b; solve [U^t | -V^t] y = 0
        U = [list(r) for r in self.basis]
        V = [list(r) for r in other.basis]
        M = [list(ur) + [-x for x in vr] for ur, vr in zip(transpose(U), transpose(V))]
        vecs = []
        for y in kernel_basis(M):
            a = y[:len(U)]
            x = [sum(a[i] * U[i][j] for i in range(len(U))) for j in range(self.ambient)]
            vecs.append(x)
        return Subspace.from_vectors(vecs, self.ambient)

    def add(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(list(self.basis) + list(other.basis), self.ambient)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def kernel(A):
    n = len(A[0]) if A else 0
    return Subspace.from_vectors(kernel_basis(A), n)


def solve_membership(v, U):
    return U.coords(v)
