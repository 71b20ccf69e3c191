"""Order-3 tensors over Q: slices, flattenings, conciseness, genericity."""

from dataclasses import dataclass
from fractions import Fraction

from . import polymat
from .linalg import Subspace, frac, rank, vec_flat, zeros

FACTORS = ("A", "B", "C")

# slice conventions, cyclic in the factors:
#   factor A: matrix indexed (rows C, cols B)
#   factor B: matrix indexed (rows A, cols C)
#   factor C: matrix indexed (rows B, cols A)
_SLICE_AXES = {"A": (2, 1), "B": (0, 2), "C": (1, 0)}


class Tensor3:
    """Dense order-3 tensor with Fraction entries, 1-based public indices."""

    __slots__ = ("dims", "data")

    def __init__(self, dims, data):
        self.dims = tuple(dims)
        self.data = data

    @classmethod
    def from_entries(cls, dims, entries):
        """Build from (i, j, k, value) quadruples, 1-based; values at equal
        positions accumulate."""
        a, b, c = dims
        data = [[[Fraction(0)] * c for _ in range(b)] for _ in range(a)]
        for (i, j, k, v) in entries:
            if not (1 <= i <= a and 1 <= j <= b and 1 <= k <= c):
                raise ValueError("index out of range: (%d,%d,%d)" % (i, j, k))
            data[i - 1][j - 1][k - 1] += frac(v)
        return cls((a, b, c), data)

    @classmethod
    def from_a_slices(cls, slices):
        """Build from A-slices (rows C, cols B); slice index runs over A."""
        a = len(slices)
        c = len(slices[0])
        b = len(slices[0][0])
        entries = []
        for i, S in enumerate(slices, start=1):
            for k in range(1, c + 1):
                for j in range(1, b + 1):
                    v = S[k - 1][j - 1]
                    if v:
                        entries.append((i, j, k, v))
        return cls.from_entries((a, b, c), entries)

    def entry(self, i, j, k):
        return self.data[i - 1][j - 1][k - 1]

    def dim_of(self, f):
        return self.dims[FACTORS.index(f)]

    @property
    def m(self):
        a, b, c = self.dims
        if not (a == b == c):
            raise ValueError("tensor is not cubic")
        return a

    def entries(self):
        a, b, c = self.dims
        for i in range(a):
            for j in range(b):
                for k in range(c):
                    v = self.data[i][j][k]
                    if v:
                        yield (i + 1, j + 1, k + 1, v)

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.dims == other.dims
                and self.data == other.data)

    def __hash__(self):
        return hash((self.dims, tuple(tuple(tuple(r) for r in p) for p in self.data)))

    def __repr__(self):
        return "Tensor3(dims=%r)" % (self.dims,)

    def is_zero(self):
        return all(v == 0 for p in self.data for r in p for v in r)


def slice_matrix(T, f, alpha):
    """Contraction T(alpha) for alpha in the dual of factor f.

    Row/column factors follow the cyclic convention above.
    """
    fi = FACTORS.index(f)
    if len(alpha) != T.dims[fi]:
        raise ValueError("functional has wrong dimension")
    ri, ci = _SLICE_AXES[f]
    M = zeros(T.dims[ri], T.dims[ci])
    for (i, j, k, v) in T.entries():
        idx = (i - 1, j - 1, k - 1)
        av = frac(alpha[idx[fi]])
        if av:
            M[idx[ri]][idx[ci]] += av * v
    return M


def slices(T, f):
    """Slices over the dual basis of factor f."""
    n = T.dim_of(f)
    out = []
    for p in range(n):
        alpha = [0] * n
        alpha[p] = 1
        out.append(slice_matrix(T, f, alpha))
    return out


def flattening_space(T, f):
    """Span of the f-slices, vectorized row-major, as a Subspace."""
    ri, ci = _SLICE_AXES[f]
    ambient = T.dims[ri] * T.dims[ci]
    return Subspace.from_vectors([vec_flat(S) for S in slices(T, f)], ambient)


def conciseness(T):
    out = {}
    for f in FACTORS:
        out[f] = flattening_space(T, f).dim == T.dim_of(f)
    return out


def max_slice_rank(mats):
    """Maximal rank over the span of the given matrices.

    Computed as the rank over Q(t) of sum t^(i-1) K_i, then confirmed by a
    rational witness on the moment curve (1, s, s^2, ...) at increasing
    integer s.  Returns (max_rank, witness coefficient vector).
    """
    n = len(mats)
    if n == 0:
        return 0, []
    rows = len(mats[0])
    cols = len(mats[0][0])
    F = [[sum(polymat.t ** i * polymat._sym(mats[i][r][c]) for i in range(n))
          for c in range(cols)] for r in range(rows)]
    target = polymat.generic_rank(F)
    s = 1
    while True:
        alpha = [Fraction(s) ** i for i in range(n)]
        W = [[sum(alpha[i] * mats[i][r][c] for i in range(n))
              for c in range(cols)] for r in range(rows)]
        if rank(W) == target:
            return target, alpha
        s += 1


@dataclass
class GenericityProfile:
    max_rank: dict          # factor -> maximal slice rank
    corank: dict            # factor -> m - max rank
    witness: dict           # factor -> rational functional attaining it
    concise: dict           # factor -> bool
    generic: dict           # factor -> 1_X-genericity
    one_star_generic: bool
    binding: bool
    one_generic: bool
    one_degenerate: bool


def genericity_profile(T):
    m = T.m
    max_rank, witness, generic, concise = {}, {}, {}, {}
    conc = conciseness(T)
    for f in FACTORS:
        r, w = max_slice_rank(slices(T, f))
        max_rank[f] = r
        witness[f] = w
        generic[f] = (r == m)
        concise[f] = conc[f]
    ngen = sum(generic.values())
    return GenericityProfile(
        max_rank=max_rank,
        corank={f: m - max_rank[f] for f in FACTORS},
        witness=witness,
        concise=concise,
        generic=generic,
        one_star_generic=ngen >= 1,
        binding=ngen >= 2,
        one_generic=ngen == 3,
        one_degenerate=ngen == 0,
    )


def act(X, f, T):
    """Contraction action of X on factor f: (X o_A T)[i,j,k] = sum_p X[i][p] T[p,j,k]."""
    fi = FACTORS.index(f)
    n = T.dims[fi]
    if len(X) != n or len(X[0]) != n:
        raise ValueError("endomorphism has wrong size")
    a, b, c = T.dims
    data = [[[Fraction(0)] * c for _ in range(b)] for _ in range(a)]
    for (i, j, k, v) in T.entries():
        idx = [i - 1, j - 1, k - 1]
        p = idx[fi]
        for q in range(n):
            x = X[q][p]
            if x:
                nidx = list(idx)
                nidx[fi] = q
                data[nidx[0]][nidx[1]][nidx[2]] += frac(x) * v
    return Tensor3(T.dims, data)


def permute(T, perm):
    """Reorder factors: perm maps positions to factor names, e.g. ("B","C","A")
    puts the old B factor in the A slot."""
    src = tuple(FACTORS.index(f) for f in perm)
    dims = tuple(T.dims[s] for s in src)
    entries = []
    for key in T.entries():
        idx, v = key[:3], key[3]
        entries.append((idx[src[0]], idx[src[1]], idx[src[2]], v))
    return Tensor3.from_entries(dims, entries)
