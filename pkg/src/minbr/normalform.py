"""Normal form for concise corank-one tensors, the associated structural
conditions, gauge normalization of the distinguished slice, and the two-class
dichotomy with classification for m = 5."""

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .linalg import (frac, identity, kernel_basis, mat_add, mat_eq, mat_mul,
                     mat_scale, mat_sub, rank, rref, solve_coords,
                     solve_linear, transpose, vec_flat, zeros)
from .tensor import (Tensor3, conciseness, genericity_profile, permute,
                     slices)


class NormalFormError(ValueError):
    pass


@dataclass
class CorankOneNF:
    m: int
    slices: list        # K_1 = Id, K_2..K_{m-1} bordered, K_m distinguished
    x: list             # x[s] = upper-left (m-1) block of slice s (0-based)
    u: list             # u[s] = last row restricted to the block, as a row
    w: list             # w[s] = last column restricted to the block, as a column
    basis_change: tuple # (P_A, M_C, M_B): K'_i = M_C (sum_j P_A[i][j] K_j) M_B


def _col(vec):
    return [[v] for v in vec]


def _row_of(M, i):
    return list(M[i])


def _col_of(M, j):
    return [M[i][j] for i in range(len(M))]


def _mat_inv(A):
    from .equations import mat_inv
    return mat_inv(A)


def atkinson_nf(T):
    """Bring a concise tensor whose A-slices have maximal rank m-1 into the
    form K_1 = Id, K_s = [[x_s, w_s],[u_s, 0]] with x_s strictly upper
    triangularizable data isolated in the last slice.

    Returns a CorankOneNF; raises NormalFormError when no such form exists.
    """
    m = T.m
    if not all(conciseness(T).values()):
        raise NormalFormError("tensor is not concise")
    prof = genericity_profile(T)
    if prof.max_rank["A"] != m - 1:
        raise NormalFormError("A-slices must have maximal rank m - 1")
    K = slices(T, "A")
    # pick a rank m-1 slice as the pencil anchor, preferring a dual basis slice
    k1_idx = None
    for i, Ki in enumerate(K):
        if rank(Ki) == m - 1:
            k1_idx = i
            break
    P_A = identity(m)
    if k1_idx is None:
        wvec = prof.witness["A"]
        P_A[0] = [frac(c) for c in wvec]
    elif k1_idx != 0:
        P_A[0], P_A[k1_idx] = P_A[k1_idx], P_A[0]
    # complete P_A to an invertible matrix greedily with standard basis rows
    rows = [P_A[0]]
    filled = [P_A[0]]
    for i in range(1, m):
        cand = P_A[i]
        if rref(filled + [cand])[1] == len(filled) + 1:
            rows.append(cand)
            filled.append(cand)
        else:
            for j in range(m):
                e = [Fraction(1) if c == j else Fraction(0) for c in range(m)]
                if rref(filled + [e])[1] == len(filled) + 1:
                    rows.append(e)
                    filled.append(e)
                    break
    P_A = rows
    K = _apply_pa(P_A, K)
    K1 = K[0]
    if rank(K1) != m - 1:
        raise NormalFormError("could not find a rank m - 1 slice")
    # M_C K1 M_B = [[Id, 0], [0, 0]]
    n = m
    aug = [K1[i] + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
           for i in range(n)]
    R, r, pivots = rref(aug)
    M_C = [R[i][n:] for i in range(n)]
    ker = kernel_basis(K1)
    if len(ker) != 1:
        raise NormalFormError("anchor slice has corank other than one")
    M_B = [[Fraction(0)] * n for _ in range(n)]
    for col, p in enumerate(pivots[:m - 1]):
        M_B[p][col] = Fraction(1)
    kv = ker[0]
    for i in range(n):
        M_B[i][n - 1] = kv[i]
    K = [mat_mul(mat_mul(M_C, Ki), M_B) for Ki in K]
    if not mat_eq(K[0], _e11_block(m)):
        raise NormalFormError("anchor slice did not normalize")
    # corner entries must vanish when every slice combination has rank < m
    for s in range(1, m):
        if K[s][m - 1][m - 1] != 0:
            raise NormalFormError("corner entry is nonzero; rank exceeds m - 1")
    # border data: (u_s, w_s^t) across slices must span at most one line
    border = []
    for s in range(1, m):
        border.append(K[s][m - 1][:m - 1] + _col_of(K[s], m - 1)[:m - 1])
    Rb, rb, _ = rref(border)
    if rb >= 2:
        raise NormalFormError("border data is not proportional across slices")
    if rb == 1:
        # move the lowest bordered slice to the last position
        low = None
        for s in range(1, m):
            if any(x != 0 for x in border[s - 1]):
                low = s
                break
        coeffs = []
        for s in range(1, m):
            if s == low:
                coeffs.append(None)
                continue
            c = solve_coords([border[low - 1]], border[s - 1])
            coeffs.append(c[0] if c is not None else Fraction(0))
        newK = [K[0]]
        newP = [P_A[0]]
        for s in range(1, m):
            if s == low:
                continue
            lam = coeffs[s - 1]
            newK.append(mat_sub(K[s], mat_scale(K[low], lam)))
            newP.append([a - lam * b for a, b in zip(P_A[s], P_A[low])])
        newK.append(K[low])
        newP.append(P_A[low])
        K, P_A = newK, newP
    u_m = K[m - 1][m - 1][:m - 1]
    w_m = _col_of(K[m - 1], m - 1)[:m - 1]
    if all(v == 0 for v in u_m) or all(v == 0 for v in w_m):
        raise NormalFormError("distinguished slice has a vanishing border vector")
    # kill proportional borders in the middle slices against the anchor: the
    # previous subtraction already zeroed them, but eigen-normalize x_m data
    x = [None] * m
    x[0] = identity(m - 1)
    for s in range(1, m):
        x[s] = [K[s][i][:m - 1] for i in range(m - 1)]
    # subtract multiples of K_1 so every x_s (s < m) kills the border vectors
    for s in range(1, m - 1):
        xu = [sum(u_m[j] * x[s][j][i] for j in range(m - 1)) for i in range(m - 1)]
        mu = None
        for i in range(m - 1):
            if u_m[i] != 0:
                mu = xu[i] / u_m[i]
                break
        if mu is None:
            xw = [sum(x[s][i][j] * w_m[j] for j in range(m - 1)) for i in range(m - 1)]
            for i in range(m - 1):
                if w_m[i] != 0:
                    mu = xw[i] / w_m[i]
                    break
        if mu is not None and mu != 0:
            K[s] = mat_sub(K[s], mat_scale(K[0], mu))
            P_A[s] = [a - mu * b for a, b in zip(P_A[s], P_A[0])]
            x[s] = [K[s][i][:m - 1] for i in range(m - 1)]
    u = [None] * m
    w = [None] * m
    u[m - 1] = u_m
    w[m - 1] = _col(w_m)
    x_m = x[m - 1]
    # the compatibility vectors may fail to exist; that is a condition
    # failure, not a construction failure
    for s in range(1, m - 1):
        res = _solve_us_ws(x, x_m, u_m, w_m, s, m)
        if res is not None:
            u[s], w[s] = res
    nf = CorankOneNF(m=m, slices=K, x=x, u=u, w=w,
                     basis_change=(P_A, M_C, M_B))
    _check_roundtrip(T, nf)
    return nf


def _e11_block(m):
    M = zeros(m, m)
    for i in range(m - 1):
        M[i][i] = Fraction(1)
    return M


def _apply_pa(P_A, K):
    m = len(K)
    out = []
    for i in range(m):
        acc = zeros(len(K[0]), len(K[0][0]))
        for j in range(m):
            if P_A[i][j]:
                acc = mat_add(acc, mat_scale(K[j], P_A[i][j]))
        out.append(acc)
    return out


def _solve_us_ws(x, x_m, u_m, w_m, s, m):
    """Solve x_s x_m + w_s u_m = sum_j lam_j x_j = x_m x_s + w_m u_s for
    w_s (column), u_s (row) and the lam coefficients."""
    n = m - 1
    xs = x[s]
    L = mat_mul(xs, x_m)
    Rm = mat_mul(x_m, xs)
    # unknowns: w_s (n), u_s (n), lam over x_2 .. x_{m-1} (m-2)
    nunk = 2 * n + (m - 2)
    rows = []
    rhs = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * nunk
            row[i] = u_m[j]                      # (w_s u_m)[i][j]
            for t in range(1, m - 1):
                row[2 * n + t - 1] = -x[t][i][j]
            rows.append(row)
            rhs.append(-L[i][j])
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * nunk
            row[n + j] = w_m[i]                  # (w_m u_s)[i][j]
            for t in range(1, m - 1):
                row[2 * n + t - 1] = -x[t][i][j]
            rows.append(row)
            rhs.append(-Rm[i][j])
    sol = solve_linear(rows, rhs)
    if sol is None:
        return None
    w_s = _col(sol[:n])
    u_s = sol[n:2 * n]
    return u_s, w_s


def _check_roundtrip(T, nf):
    K0 = slices(T, "A")
    P_A, M_C, M_B = nf.basis_change
    got = [mat_mul(mat_mul(M_C, Ki), M_B) for Ki in _apply_pa(P_A, K0)]
    for G, K in zip(got, nf.slices):
        if not mat_eq(G, K):
            raise AssertionError("basis change does not reproduce the slices")


def nf_tensor(nf):
    """Rebuild the cubic tensor whose A-slices are the normal form slices."""
    return Tensor3.from_a_slices(nf.slices)


def check_nf_conditions(nf):
    """The six structural conditions. Items (1) and (6) are the Strassen-type
    conditions, item (3) is the End-closure condition."""
    m = nf.m
    n = m - 1
    x, u, w = nf.x, nf.u, nf.w
    x_m, u_m, w_m = x[m - 1], u[m - 1], w[m - 1]
    out = {}
    # (1): u_m X(lam)^j w_m = 0 for every combination X(lam) of all the x_s
    # (including x_m) and 0 <= j <= m-2.
    lam = sp.symbols("l1:%d" % (m + 1))
    Xs = sp.zeros(n, n)
    for s in range(m):
        S = sp.Matrix([[sp.Rational(x[s][i][j].numerator, x[s][i][j].denominator)
                        for j in range(n)] for i in range(n)])
        Xs = Xs + lam[s] * S
    um = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in u_m]])
    wm = sp.Matrix([[sp.Rational(v[0].numerator, v[0].denominator)] for v in w_m])
    ok1 = True
    P = sp.eye(n)
    for _ in range(m - 1):
        val = sp.expand((um * P * wm)[0, 0])
        if val != 0:
            ok1 = False
            break
        P = sp.expand(Xs * P)
    out[1] = ok1
    # (2): the x_s span an (m-1)-dim abelian subspace closed under products
    span = [vec_flat(x[s]) for s in range(m - 1)]
    R, r, _ = rref(span)
    ok2 = r == m - 1
    if ok2:
        for s in range(m - 1):
            for t2 in range(s + 1, m - 1):
                if not mat_eq(mat_mul(x[s], x[t2]), mat_mul(x[t2], x[s])):
                    ok2 = False
        for s in range(m - 1):
            for t2 in range(m - 1):
                if solve_coords(span, vec_flat(mat_mul(x[s], x[t2]))) is None:
                    ok2 = False
    out[2] = ok2
    # (3): w_m u_m lies in the span of x_2 .. x_{m-1}
    wmum = mat_mul(w_m, [u_m])
    sub = [vec_flat(x[s]) for s in range(1, m - 1)]
    out[3] = (solve_coords(sub, vec_flat(wmum)) is not None) if sub else \
        all(v == 0 for v in vec_flat(wmum))
    # (4): u_m x_s = 0 and x_s w_m = 0 for s = 2 .. m-1
    ok4 = True
    for s in range(1, m - 1):
        if any(sum(u_m[j] * x[s][j][i] for j in range(n)) != 0 for i in range(n)):
            ok4 = False
        if any(sum(x[s][i][j] * w_m[j][0] for j in range(n)) != 0 for i in range(n)):
            ok4 = False
    out[4] = ok4
    # (5): u_s, w_s satisfying the compatibility equation exist
    ok5 = True
    for s in range(1, m - 1):
        if u[s] is None or w[s] is None:
            ok5 = False
            continue
        L = mat_add(mat_mul(x[s], x_m), mat_mul(w[s], [u_m]))
        Rs = mat_add(mat_mul(x_m, x[s]), mat_mul(w_m, [u[s]]))
        if not mat_eq(L, Rs):
            ok5 = False
        if solve_coords([vec_flat(x[t]) for t in range(1, m - 1)], vec_flat(L)) is None:
            ok5 = False
    out[5] = ok5
    # (6): x_s x_m^j w_m = 0 and u_m x_m^j x_s = 0 for j = 1 .. m-1
    ok6 = True
    for s in range(1, m - 1):
        P = x_m
        for _ in range(m - 1):
            lhs = mat_mul(x[s], mat_mul(P, w_m))
            if any(v[0] != 0 for v in lhs):
                ok6 = False
            rhs = mat_mul([u_m], mat_mul(P, x[s]))
            if any(v != 0 for v in rhs[0]):
                ok6 = False
            P = mat_mul(P, x_m)
    out[6] = ok6
    return out


def normalize_xm(nf, u_star, w_star):
    """Gauge-fix the distinguished slice: with u_m u* = 1 and w* w_m = 1,
    replace x_m so that w* x_m = 0 and x_m u* = 0, adjusting u_s, w_s."""
    m = nf.m
    n = m - 1
    x, u, w = [list(v) if v is not None else None for v in nf.x], list(nf.u), list(nf.w)
    u_m, w_m, x_m = u[m - 1], w[m - 1], x[m - 1]
    u_star = _col([frac(v) for v in u_star])
    w_star = [[frac(v) for v in w_star]]
    if sum(u_m[i] * u_star[i][0] for i in range(n)) != 1:
        raise ValueError("u* must pair to 1 with u_m")
    if sum(w_star[0][i] * w_m[i][0] for i in range(n)) != 1:
        raise ValueError("w* must pair to 1 with w_m")
    beta = [[-v for v in mat_mul(w_star, x_m)[0]]]           # row
    gamma = _col([-v[0] for v in mat_mul(x_m, u_star)])      # column
    alpha = mat_mul(w_star, mat_mul(x_m, u_star))[0][0]
    x_m2 = mat_add(x_m, mat_mul(w_m, beta))
    x_m2 = mat_add(x_m2, mat_mul(gamma, [u_m]))
    x_m2 = mat_add(x_m2, mat_scale(mat_mul(w_m, [u_m]), alpha))
    if any(v != 0 for v in mat_mul(w_star, x_m2)[0]):
        raise AssertionError("gauge did not annihilate w* x_m")
    if any(v[0] != 0 for v in mat_mul(x_m2, u_star)):
        raise AssertionError("gauge did not annihilate x_m u*")
    x = list(x)
    x[m - 1] = x_m2
    for s in range(1, m - 1):
        u[s] = mat_mul(w_star, mat_mul(x[s], x_m2))[0]
        w[s] = mat_mul(mat_mul(x_m2, x[s]), u_star)
    # rebuild slices and compose the extra basis change into the record
    L = identity(m)
    for i in range(n):
        L[i][m - 1] = gamma[i][0] + alpha * w_m[i][0]
    Rm = identity(m)
    for j in range(n):
        Rm[m - 1][j] = beta[0][j]
    P_A, M_C, M_B = nf.basis_change
    K = []
    for s in range(m):
        M = zeros(m, m)
        for i in range(n):
            for j in range(n):
                M[i][j] = x[s][i][j] if s else (Fraction(1) if i == j else Fraction(0))
        if s == m - 1:
            for i in range(n):
                M[i][m - 1] = w[s][i][0]
                M[m - 1][i] = u[s][i]
        K.append(M)
    out = CorankOneNF(m=m, slices=K, x=x, u=u, w=w,
                      basis_change=(P_A, mat_mul(L, M_C), mat_mul(M_B, Rm)))
    for G, Ks in zip([mat_mul(mat_mul(L, Ki), Rm) for Ki in nf.slices], K):
        if not mat_eq(G, Ks):
            raise AssertionError("gauge change does not reproduce the slices")
    return out


@dataclass
class M5Class:
    label: str          # one of O54 .. O58
    p_rank: int         # 1 (case M1) or 2 (case M2)
    dims: object        # SymmetryDims
    nf: CorankOneNF


def m5_dichotomy(nf):
    """For m = 5, decide which of the two degenerate families the middle
    slice data belongs to, via the rank of the trace pairing on the common
    corner block."""
    m = nf.m
    if m != 5:
        raise ValueError("dichotomy is specific to m = 5")
    n = m - 1
    xs = [nf.x[s] for s in range(1, m - 1)]
    for X in xs:
        P = X
        for _ in range(n - 1):
            P = mat_mul(P, X)
        if any(v != 0 for row in P for v in row):
            raise NormalFormError("middle slice block is not nilpotent")
    # joint image of the x_s must be 2-dim and contain all their images
    imgs = []
    for X in xs:
        for j in range(n):
            imgs.append(_col_of_list(X, j))
    R, r, _ = rref(imgs)
    if r != 2:
        raise NormalFormError("common image of middle blocks is not 2-dim")
    jk = R[:2]
    basis = [list(v) for v in jk]
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        if rref(basis + [e])[1] == len(basis) + 1:
            basis.append(e)
        if len(basis) == n:
            break
    S = transpose(basis)
    Sinv = _mat_inv(S)
    chis = []
    for X in xs:
        Xp = mat_mul(Sinv, mat_mul(X, S))
        chi = [[Xp[i][2 + j] for j in range(2)] for i in range(2)]
        if any(Xp[i][j] != 0 for i in range(n) for j in range(n)
               if not (i < 2 and j >= 2)):
            raise NormalFormError("middle blocks are not strictly upper square")
        chis.append(chi)
    if rref([vec_flat(c) for c in chis])[1] != 3:
        raise NormalFormError("corner blocks do not span a 3-dim space")
    rows = [[c[0][0], c[1][0], c[0][1], c[1][1]] for c in chis]
    kerv = kernel_basis(rows)
    if len(kerv) != 1:
        raise NormalFormError("trace pairing kernel is not one dimensional")
    k = kerv[0]
    P = [[k[0], k[1]], [k[2], k[3]]]
    rp = rank(P)
    if rp == 1:
        return P, "M1"
    if rp == 2:
        return P, "M2"
    raise NormalFormError("degenerate pairing matrix")


def _col_of_list(M, j):
    return [M[i][j] for i in range(len(M))]


_LABEL_BY_SYM = {16: "O58", 17: "O57", 18: "O56", 19: "O55", 20: "O54"}
_PARTS_BY_LABEL = {"O58": (5, 5, 5), "O57": (5, 5, 6), "O56": (5, 6, 6),
                   "O55": (6, 6, 6), "O54": (6, 6, 6)}
# the dichotomy case depends on which factor plays the slice role, so the
# two middle labels admit both cases across factor orderings
_CASES_BY_LABEL = {"O58": {"M2"}, "O57": {"M1", "M2"}, "O56": {"M1", "M2"},
                   "O55": {"M1"}, "O54": {"M1"}}

_ORDERS = [("A", "B", "C"), ("A", "C", "B"), ("B", "A", "C"),
           ("B", "C", "A"), ("C", "A", "B"), ("C", "B", "A")]


def classify_m5(T):
    """Classify a concise, 1-degenerate, 111-abundant 5x5x5 tensor up to the
    known isomorphism list, cross-checking the symmetry data against the
    dichotomy case."""
    from .algebra import symmetry_dims
    from .equations import triple_111

    if T.m != 5:
        raise ValueError("classification requires a 5x5x5 tensor")
    if not all(conciseness(T).values()):
        raise ValueError("classification requires a concise tensor")
    prof = genericity_profile(T)
    if not prof.one_degenerate:
        raise ValueError("classification requires a 1-degenerate tensor")
    tri = triple_111(T)
    if not tri.abundant:
        raise ValueError("classification requires 111-abundance")
    nf = None
    case = None
    for order in _ORDERS:
        Tp = permute(T, order)
        profp = genericity_profile(Tp)
        if profp.max_rank["A"] != 4:
            continue
        try:
            cand = atkinson_nf(Tp)
            _, case = m5_dichotomy(cand)
            nf = cand
            break
        except NormalFormError:
            continue
    if nf is None:
        raise NormalFormError("no factor ordering admits the normal form")
    sym = symmetry_dims(T)
    if sym.full not in _LABEL_BY_SYM:
        raise NormalFormError("symmetry dimension outside the known range")
    label = _LABEL_BY_SYM[sym.full]
    parts = tuple(sorted((sym.ab, sym.bc, sym.ca)))
    if parts != _PARTS_BY_LABEL[label] or case not in _CASES_BY_LABEL[label]:
        raise NormalFormError("classification inconsistency")
    return M5Class(label=label, p_rank=1 if case == "M1" else 2, dims=sym,
                   nf=nf)
