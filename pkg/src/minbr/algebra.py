"""The 111-algebra, symmetry Lie algebra dimensions, ADHM modules and
Hilbert functions, and structure tensors of algebras."""

from dataclasses import dataclass
from fractions import Fraction

from . import polymat
from .equations import _commutator_witness, e_alpha
from .linalg import (Subspace, frac, identity, mat_mul, mat_scale, mat_sub,
                     rank, rref, solve_coords, unflatten, vec_flat, zeros)
from .tensor import (FACTORS, Tensor3, act, conciseness, genericity_profile,
                     max_slice_rank)


@dataclass
class TripleEndo:
    X: list
    Y: list
    Z: list
    omega: Tensor3  # the common value of the three actions


@dataclass
class Algebra111:
    dim: int
    basis: list                # TripleEndo, identity triple first
    structure_constants: list  # c[i][j][k]


@dataclass
class SymmetryDims:
    full: int
    ab: int
    bc: int
    ca: int


@dataclass
class AdhmModule:
    dim: int
    action_matrices: list
    locality: str              # local | nonlocal | undetermined
    hilbert_module: tuple
    hilbert_algebra: tuple


def _action_columns(T):
    """Columns of (X,Y,Z) -> (X o_A T, Y o_B T, Z o_C T), one m^2-block per
    factor; each column is the vectorized acted tensor."""
    m = T.m
    n = m ** 3
    cols = []
    for f in FACTORS:
        fi = FACTORS.index(f)
        for p in range(m):
            for q in range(m):
                col = [Fraction(0)] * n
                for (i, j, k, v) in T.entries():
                    idx = [i - 1, j - 1, k - 1]
                    if idx[fi] == q:
                        idx[fi] = p
                        col[(idx[0] * m + idx[1]) * m + idx[2]] += v
                cols.append(col)
    return cols


def _transpose_cols(cols):
    return [list(row) for row in zip(*cols)]


def compute_111_algebra(T):
    """Triples (X,Y,Z) with X o_A T = Y o_B T = Z o_C T, as a unital
    commutative algebra under componentwise composition.

    The basis puts (Id,Id,Id) first; the rest is the canonical echelon basis
    of the trace-zero (in the X component) complement.
    """
    if not all(conciseness(T).values()):
        raise ValueError("111-algebra requires a concise tensor "
                         "(commutativity can fail otherwise)")
    m = T.m
    cols = _action_columns(T)
    n = m ** 3
    # kernel of (X,Y,Z) -> (X o T - Y o T, Y o T - Z o T)
    rows = []
    for r in range(n):
        row = []
        for c in range(m * m):
            row.append(cols[c][r])
        for c in range(m * m):
            row.append(-cols[m * m + c][r])
        for c in range(m * m):
            row.append(Fraction(0))
        rows.append(row)
    for r in range(n):
        row = [Fraction(0)] * (m * m)
        for c in range(m * m):
            row.append(cols[m * m + c][r])
        for c in range(m * m):
            row.append(-cols[2 * m * m + c][r])
        rows.append(row)
    ker = [v for v in _kernel_rows(rows)]
    id_vec = vec_flat(identity(m)) * 3
    id_vec = [frac(x) for x in id_vec]
    traceless = []
    for v in ker:
        tr = sum(v[i * m + i] for i in range(m))
        traceless.append([a - Fraction(tr, m) * b for a, b in zip(v, id_vec)])
    R, r, _ = rref(traceless)
    basis_vecs = [id_vec] + R[:r]
    if len(basis_vecs) != len(ker):
        raise AssertionError("identity triple missing from the kernel")
    triples = []
    for v in basis_vecs:
        X = unflatten(v[:m * m], m, m)
        Y = unflatten(v[m * m:2 * m * m], m, m)
        Z = unflatten(v[2 * m * m:], m, m)
        omega = act(X, "A", T)
        if omega != act(Y, "B", T) or omega != act(Z, "C", T):
            raise AssertionError("incompatible triple in kernel")
        triples.append(TripleEndo(X=X, Y=Y, Z=Z, omega=omega))
    d = len(triples)
    c = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            prod = (vec_flat(mat_mul(triples[i].X, triples[j].X))
                    + vec_flat(mat_mul(triples[i].Y, triples[j].Y))
                    + vec_flat(mat_mul(triples[i].Z, triples[j].Z)))
            coeffs = solve_coords(basis_vecs, prod)
            if coeffs is None:
                raise AssertionError("111-algebra is not closed under products")
            c[i][j] = coeffs
    for i in range(d):
        for j in range(d):
            if c[i][j] != c[j][i]:
                raise AssertionError("111-algebra product is not commutative")
            expected = [Fraction(1) if k == j else Fraction(0) for k in range(d)]
            if c[0][j] != expected:
                raise AssertionError("identity triple does not act as unit")
    return Algebra111(dim=d, basis=triples, structure_constants=c)


def _kernel_rows(rows):
    from .linalg import kernel_basis
    return kernel_basis(rows)


def gorenstein_check(c):
    """An algebra is Gorenstein iff some functional makes the multiplication
    pairing nondegenerate, i.e. the span of the dual slices of the structure
    tensor contains a full-rank matrix."""
    n = len(c)
    mats = []
    for k in range(n):
        mats.append([[frac(c[i][j][k]) for j in range(n)] for i in range(n)])
    r, _ = max_slice_rank(mats)
    return r == n


def symmetry_dims(T):
    """Dimensions of the symmetry Lie algebra (annihilator of T in
    gl(A) x gl(B) x gl(C)) and its two-factor parts."""
    m = T.m
    cols = _action_columns(T)
    rows = _transpose_cols(cols)
    full = 3 * m * m - rank(rows)
    ab = 2 * m * m - rank([r[:2 * m * m] for r in rows])
    bc = 2 * m * m - rank([r[m * m:] for r in rows])
    ca = 2 * m * m - rank([r[:m * m] + r[2 * m * m:] for r in rows])
    return SymmetryDims(full=full, ab=ab, bc=bc, ca=ca)


def _is_nilpotent(X):
    n = len(X)
    P = X
    for _ in range(n - 1):
        P = mat_mul(P, X)
    return all(x == 0 for row in P for x in row)


def _span_dim(vecs):
    return rref(vecs)[1] if vecs else 0


def _chain_module(action, n):
    """Dims of m^k C for the span of the given action matrices."""
    dims = [n]
    cur = identity(n)  # rows span the current space
    while True:
        nxt = []
        for v in cur:
            for X in action:
                nxt.append([sum(X[i][j] * v[j] for j in range(n)) for i in range(n)])
        R, r, _ = rref(nxt) if nxt else ([], 0, [])
        cur = R[:r]
        dims.append(r)
        if r == 0 or dims[-1] == dims[-2]:
            break
    return dims


def _ideal_power_dims(action, n):
    """Dims of the powers of the ideal generated by the action matrices inside
    the unital matrix algebra they generate (nilpotent case)."""
    # products of exactly k matrices, accumulated downward
    exact = []
    cur = [vec_flat(X) for X in action]
    guard = 0
    while _span_dim(cur) > 0 and guard <= n * n:
        exact.append(cur)
        nxt = []
        for v in cur:
            P = unflatten(v, n, n)
            for X in action:
                nxt.append(vec_flat(mat_mul(X, P)))
        cur = nxt
        guard += 1
    dims = []
    tail = []
    for k in range(len(exact), 0, -1):
        tail = exact[k - 1] + tail
        dims.append(_span_dim(tail))
    dims.reverse()  # dims[k-1] = dim of the k-th ideal power
    return dims


def adhm_module(T, f):
    """The module on the row factor of f induced by the traceless parts of
    the endomorphism space; requires that space to be abelian."""
    m = T.m
    E = e_alpha(T, f)
    if _commutator_witness(E.basis) is not None:
        raise ValueError("endomorphism space is not abelian")
    traceless = []
    for X in E.basis:
        tr = sum(X[i][i] for i in range(m))
        traceless.append(vec_flat(mat_sub(X, mat_scale(identity(m), Fraction(tr, m)))))
    R, r, _ = rref(traceless)
    action = [unflatten(v, m, m) for v in R[:r]]
    if all(_is_nilpotent(X) for X in action):
        locality = "local"
    elif any(not _is_nilpotent(X) for X in action):
        locality = "nonlocal"
    else:
        locality = "undetermined"
    hilbert_module = None
    hilbert_algebra = None
    if locality == "local":
        dims = _chain_module(action, m)
        hilbert_module = tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))
        ideal = _ideal_power_dims(action, m)
        hs = [1]
        for k in range(len(ideal)):
            nxt = ideal[k + 1] if k + 1 < len(ideal) else 0
            hs.append(ideal[k] - nxt)
        hilbert_algebra = tuple(h for h in hs)
    return AdhmModule(dim=m, action_matrices=action, locality=locality,
                      hilbert_module=hilbert_module, hilbert_algebra=hilbert_algebra)


def min_generators(mod):
    """Minimal number of module generators (Nakayama): H(0) of the module."""
    if mod.locality != "local":
        raise ValueError("generator count requires a local module")
    return mod.hilbert_module[0]


_DUAL_SLOT = {"A": "B", "B": "C", "C": "A"}


def cyclicity_check(T, f):
    """True iff the module is generated by one element under degree-one
    action; cross-validated against genericity of the dual-slot factor."""
    m = T.m
    prof = genericity_profile(T)
    if not prof.generic[f]:
        raise ValueError("cyclicity requires a full-rank slice in factor %s" % f)
    E = e_alpha(T, f, prof.witness[f])
    if _commutator_witness(E.basis) is not None:
        raise ValueError("endomorphism space is not abelian")
    t = polymat.t
    cvec = [t ** i for i in range(m)]
    rows = []
    for X in E.basis:
        rows.append([sum(polymat._sym(X[i][j]) * cvec[j] for j in range(m))
                     for i in range(m)])
    cyclic = polymat.generic_rank(rows) == m
    expected = prof.generic[_DUAL_SLOT[f]]
    if cyclic != expected:
        raise AssertionError("cyclicity disagrees with the genericity profile")
    return cyclic


def build_t_phi(c, phi):
    """Structure tensor of the trilinear form (r1,r2,r3) -> phi(r1 r2 r3)
    of a commutative unital algebra given by structure constants."""
    n = len(c)
    phi = [frac(x) for x in phi]
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = Fraction(0)
                for p in range(n):
                    cp = frac(c[i][j][p])
                    if cp:
                        v += cp * sum(frac(c[p][k][l]) * phi[l] for l in range(n))
                if v:
                    entries.append((i + 1, j + 1, k + 1, v))
    return Tensor3.from_entries((n, n, n), entries)


def algebra_hilbert(c):
    """Hilbert function of a local algebra from structure constants with the
    identity first: computed on the left-regular representation."""
    n = len(c)
    mats = []
    for i in range(1, n):
        mats.append([[frac(c[i][j][k]) for j in range(n)] for k in range(n)])
    if not all(_is_nilpotent(X) for X in mats):
        raise ValueError("algebra is not local in the given basis")
    ideal = _ideal_power_dims(mats, n)
    hs = [1]
    for k in range(len(ideal)):
        nxt = ideal[k + 1] if k + 1 < len(ideal) else 0
        hs.append(ideal[k] - nxt)
    return tuple(hs)
