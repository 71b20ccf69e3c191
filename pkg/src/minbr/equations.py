"""Equation tests: Strassen, End-closed, p=1 Koszul flattenings, and the
triple intersection (111-equations)."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .linalg import (Subspace, frac, identity, mat_mul, mat_sub, rank, rref,
                     transpose, vec_flat, zeros)
from .tensor import (FACTORS, Tensor3, flattening_space, genericity_profile,
                     permute, slice_matrix, slices)


def mat_inv(A):
    n = len(A)
    aug = [list(row) + list(e) for row, e in zip(A, identity(n))]
    R, r, pivots = rref(aug)
    if r < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R[:n]]


@dataclass
class EndoSpace:
    factor: str
    alpha: list
    basis: list          # matrices K_i * T(alpha)^{-1}; contains the identity
    subspace: Subspace   # their span, vectorized


def e_alpha(T, f, alpha=None):
    """The endomorphism space T(X*) T(alpha)^{-1} for a full-rank alpha."""
    if alpha is None:
        prof = genericity_profile(T)
        if prof.max_rank[f] != T.m:
            raise ValueError("no full-rank slice in factor %s" % f)
        alpha = prof.witness[f]
    Ka = slice_matrix(T, f, alpha)
    Kinv = mat_inv(Ka)
    basis = [mat_mul(K, Kinv) for K in slices(T, f)]
    sub = Subspace.from_vectors([vec_flat(E) for E in basis])
    return EndoSpace(factor=f, alpha=list(alpha), basis=basis, subspace=sub)


def _commutator_witness(mats):
    for i, j in combinations(range(len(mats)), 2):
        C = mat_sub(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i]))
        if any(x != 0 for row in C for x in row):
            return (i, j)
    return None


def _product_witness(mats, sub):
    for i in range(len(mats)):
        for j in range(len(mats)):
            P = mat_mul(mats[i], mats[j])
            if not sub.contains(vec_flat(P)):
                return (i, j)
    return None


def _corank_one_nf(T, f):
    """Attempt the corank-one normal form with factor f in the A slot.

    Returns (nf, None) or (None, reason).
    """
    from . import normalform
    order = {"A": ("A", "B", "C"), "B": ("B", "C", "A"), "C": ("C", "A", "B")}[f]
    Tp = permute(T, order)
    try:
        nf = normalform.atkinson_nf(Tp)
    except normalform.NormalFormError as e:
        return None, str(e)
    return nf, None


def strassen_check(T):
    """Per-factor Strassen test.

    1_X-generic factors: commutativity of the endomorphism space.  Corank-one
    factors: the Friedland conditions via the normal form.  Bounded rank at
    most m-2: trivially satisfied.
    """
    from . import normalform
    m = T.m
    prof = genericity_profile(T)
    out = {}
    for f in FACTORS:
        if prof.max_rank[f] == m:
            E = e_alpha(T, f, prof.witness[f])
            w = _commutator_witness(E.basis)
            out[f] = {"status": "fail" if w else "pass", "witness": w}
        elif prof.max_rank[f] == m - 1:
            if not all(prof.concise.values()):
                out[f] = {"status": "not_concise", "witness": None}
                continue
            nf, reason = _corank_one_nf(T, f)
            if nf is None:
                out[f] = {"status": "fail", "witness": reason}
                continue
            conds = normalform.check_nf_conditions(nf)
            ok = conds[1] and conds[6]
            out[f] = {"status": "pass" if ok else "fail",
                      "witness": None if ok else {k: conds[k] for k in (1, 6)}}
        else:
            out[f] = {"status": "trivial", "witness": None}
    return out


def end_closed_check(T):
    """Per-factor End-closed test (products stay in the span)."""
    from . import normalform
    m = T.m
    prof = genericity_profile(T)
    out = {}
    for f in FACTORS:
        if prof.max_rank[f] == m:
            E = e_alpha(T, f, prof.witness[f])
            w = _product_witness(E.basis, E.subspace)
            out[f] = {"status": "fail" if w else "pass", "witness": w}
        elif prof.max_rank[f] == m - 1:
            if not all(prof.concise.values()):
                out[f] = {"status": "not_concise", "witness": None}
                continue
            nf, reason = _corank_one_nf(T, f)
            if nf is None:
                out[f] = {"status": "fail", "witness": reason}
                continue
            conds = normalform.check_nf_conditions(nf)
            ok = conds[3]
            out[f] = {"status": "pass" if ok else "fail",
                      "witness": None if ok else "rank-one border product not in span"}
        else:
            out[f] = {"status": "trivial", "witness": None}
    return out


def _koszul_matrix(T):
    """The p=1 Koszul flattening A(x)B* -> Lambda^2 A(x)C of a cubic tensor.

    Rows are indexed by (pair i1<i2 of A, k of C) with pairs in lex order,
    columns by (a of A, j of B), both row-major.
    """
    m = T.m
    pairs = list(combinations(range(1, m + 1), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    M = zeros(len(pairs) * m, m * m)
    for (i, j, k, v) in T.entries():
        for a in range(1, m + 1):
            if a == i:
                continue
            sign, pr = (1, (a, i)) if a < i else (-1, (i, a))
            r = pidx[pr] * m + (k - 1)
            c = (a - 1) * m + (j - 1)
            M[r][c] += sign * v
    return M


def koszul_p1(T):
    """All six p=1 Koszul flattening types; minimal border rank needs
    rank <= m(m-1) for each."""
    m = T.m
    bound = m * (m - 1)
    out = {}
    for perm in permutations(FACTORS):
        label = "".join(perm)
        r = rank(_koszul_matrix(permute(T, perm)))
        out[label] = {"rank": r, "bound": bound, "minimal_ok": r <= bound}
    return out


def _space_tensor_block(T, f):
    """T(X*) (x) X as a subspace of Q^(abc), vectorized row-major in (A,B,C)."""
    a, b, c = T.dims
    m = T.dim_of(f)
    basis_mats = []
    R, r, _ = rref([vec_flat(S) for S in slices(T, f)])
    sl_rows = R[:r]
    vecs = []
    for p in range(1, m + 1):
        for N in sl_rows:
            v = [Fraction(0)] * (a * b * c)
            # N is a vectorized slice; re-expand per the slice convention
            if f == "A":
                for k in range(c):
                    for j in range(b):
                        x = N[k * b + j]
                        if x:
                            v[((p - 1) * b + j) * c + k] = x
            elif f == "B":
                for i in range(a):
                    for k in range(c):
                        x = N[i * c + k]
                        if x:
                            v[(i * b + (p - 1)) * c + k] = x
            else:
                for j in range(b):
                    for i in range(a):
                        x = N[j * a + i]
                        if x:
                            v[(i * b + j) * c + (p - 1)] = x
            vecs.append(v)
    return Subspace.from_vectors(vecs, a * b * c), r


@dataclass
class Triple111:
    dim: int
    abundant: bool
    sharp: bool
    map_rank: int
    space: Subspace
    flattening_dims: dict
    direct_map_rank: int = None


def triple_111(T, verify_direct=False):
    """Dimension of (T(A*)(x)A) meet (T(B*)(x)B) meet (T(C*)(x)C) and the
    derived 111-map rank; abundant means dim >= m, sharp means equality."""
    m = T.m
    spaces, dims = {}, {}
    for f in FACTORS:
        spaces[f], dims[f] = _space_tensor_block(T, f)
    inter = spaces["A"].intersect(spaces["B"]).intersect(spaces["C"])
    domain = sum(dims[f] * m for f in FACTORS)
    result = Triple111(
        dim=inter.dim,
        abundant=inter.dim >= m,
        sharp=inter.dim == m,
        map_rank=domain - inter.dim,
        space=inter,
        flattening_dims=dims,
    )
    if verify_direct:
        result.direct_map_rank = _direct_111_rank(T, spaces, dims)
        if result.direct_map_rank != result.map_rank:
            raise AssertionError("direct 111-map rank disagrees with intersection")
    return result


def _direct_111_rank(T, spaces, dims):
    """Rank of the assembled map (T1,T2,T3) -> (T1-T2, T2-T3) on the three
    blocks, columns being the block bases."""
    a, b, c = T.dims
    n = a * b * c
    cols = []
    for fi, f in enumerate(FACTORS):
        for v in spaces[f].basis:
            col = [Fraction(0)] * (2 * n)
            if fi == 0:
                col[:n] = v
            elif fi == 1:
                col[:n] = [-x for x in v]
                col[n:] = v
            else:
                col[n:] = [-x for x in v]
            cols.append(col)
    return rank(transpose(cols))


def implication_audit(T):
    """Consistency cross-check: 111-abundance must imply the classical
    equations, and in the 1_X-generic case must match the algebraic
    characterization of the endomorphism space."""
    m = T.m
    prof = genericity_profile(T)
    if not all(prof.concise.values()):
        raise ValueError("audit requires a concise tensor")
    tri = triple_111(T)
    st = strassen_check(T)
    ec = end_closed_check(T)
    violations = []
    if tri.abundant:
        for f in FACTORS:
            if st[f]["status"] == "fail":
                violations.append("abundant but Strassen fails in %s" % f)
            if ec[f]["status"] == "fail":
                violations.append("abundant but End-closed fails in %s" % f)
        if not tri.sharp and any(prof.generic.values()):
            violations.append("abundant 1_*-generic but not sharp")
    for f in FACTORS:
        if prof.generic[f]:
            E = e_alpha(T, f, prof.witness[f])
            alg = (E.subspace.dim == m
                   and _commutator_witness(E.basis) is None
                   and _product_witness(E.basis, E.subspace) is None)
            if alg != tri.abundant:
                violations.append(
                    "1_%s-generic: abundance and endomorphism algebra disagree" % f)
    return {"consistent": not violations, "violations": violations,
            "dim": tri.dim, "abundant": tri.abundant, "sharp": tri.sharp}
