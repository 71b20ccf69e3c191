"""Verdicts and certificates: minimal border rank, wildness, minimal
smoothable rank, exact rank-m decompositions via simultaneous
diagonalization, and polynomial limit families."""

from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from . import polymat
from .equations import (_commutator_witness, e_alpha, end_closed_check,
                        koszul_p1, mat_inv, strassen_check, triple_111)
from .linalg import (Subspace, frac, identity, kernel_basis, mat_mul, rank,
                     unflatten, vec_flat, zeros)
from .polymat import flat_limit, generic_rank, t
from .tensor import (FACTORS, Tensor3, conciseness, flattening_space,
                     genericity_profile, slices)


@dataclass
class Verdict:
    question: str
    answer: str          # yes | no | unknown
    rule: str
    evidence: dict = field(default_factory=dict)


@dataclass
class LimitCertificate:
    family: tuple
    target_span: object
    verified: bool
    reason: str = ""


def _equation_report(T):
    tri = triple_111(T)
    return {
        "triple_dim": tri.dim,
        "abundant": tri.abundant,
        "sharp": tri.sharp,
        "strassen": strassen_check(T),
        "end_closed": end_closed_check(T),
        "koszul": koszul_p1(T),
    }


def minimal_br_verdict(T):
    """Decide whether the tensor has border rank equal to its side length."""
    m = T.m
    conc = conciseness(T)
    if not all(conc.values()):
        return Verdict(question="minimal_border_rank", answer="no",
                       rule="a non-concise tensor is not a concise tensor "
                            "of minimal border rank",
                       evidence={"concise": conc, "m": m})
    tri = triple_111(T)
    if m <= 5:
        return Verdict(question="minimal_border_rank",
                       answer="yes" if tri.abundant else "no",
                       rule="for concise tensors of side at most 5, minimal "
                            "border rank is equivalent to 111-abundance",
                       evidence={"m": m, "triple_dim": tri.dim,
                                 "abundant": tri.abundant})
    prof = genericity_profile(T)
    if m == 6 and prof.one_star_generic:
        return Verdict(question="minimal_border_rank",
                       answer="yes" if tri.abundant else "no",
                       rule="for concise 1_*-generic tensors of side 6, "
                            "minimal border rank is equivalent to "
                            "111-abundance",
                       evidence={"m": m, "triple_dim": tri.dim,
                                 "abundant": tri.abundant,
                                 "one_star_generic": True})
    return Verdict(question="minimal_border_rank", answer="unknown",
                   rule="no exact criterion in scope for this side length "
                        "and genericity",
                   evidence={"m": m, "report": _equation_report(T)})


def wildness(T):
    """A concise minimal border rank tensor is wild exactly when it is
    1-degenerate."""
    m = T.m
    conc = conciseness(T)
    if all(conc.values()):
        mbr = minimal_br_verdict(T)
        if mbr.answer == "yes":
            prof = genericity_profile(T)
            return Verdict(question="wild",
                           answer="yes" if prof.one_degenerate else "no",
                           rule="concise minimal border rank tensors are "
                                "wild exactly when they are 1-degenerate",
                           evidence={"m": m,
                                     "one_degenerate": prof.one_degenerate,
                                     "minimal_border_rank": mbr.answer})
    return Verdict(question="wild", answer="unknown",
                   rule="wildness criterion needs a concise minimal border "
                        "rank tensor",
                   evidence={"m": m, "concise": conc})


def smoothable_rank_verdict(T):
    """Decide whether the tensor has minimal smoothable rank: for concise
    tensors of side at most 7 this holds exactly when the tensor is
    1-generic and 111-abundant."""
    m = T.m
    conc = conciseness(T)
    if not all(conc.values()) or m > 7:
        return Verdict(question="minimal_smoothable_rank", answer="unknown",
                       rule="criterion applies to concise tensors of side "
                            "at most 7",
                       evidence={"m": m, "concise": conc})
    prof = genericity_profile(T)
    tri = triple_111(T)
    ans = "yes" if (prof.one_generic and tri.abundant) else "no"
    evidence = {"m": m, "one_generic": prof.one_generic,
                "abundant": tri.abundant}
    from .algebra import compute_111_algebra, gorenstein_check
    try:
        alg = compute_111_algebra(T)
        evidence["gorenstein"] = gorenstein_check(alg.structure_constants)
        evidence["algebra_dim"] = alg.dim
    except (ValueError, AssertionError) as exc:
        evidence["gorenstein"] = None
        evidence["algebra_error"] = str(exc)
    if ans == "yes" and evidence["gorenstein"] is not True:
        raise AssertionError("minimal smoothable rank verdict is positive "
                             "but the algebra is not Gorenstein")
    return Verdict(question="minimal_smoothable_rank", answer=ans,
                   rule="for concise tensors of side at most 7, minimal "
                        "smoothable rank is equivalent to 1-genericity plus "
                        "111-abundance",
                   evidence=evidence)


def _rational_eigenvalues(X):
    """(eigenvalues, certified) where certified is False when the
    characteristic polynomial has an irreducible nonlinear factor."""
    n = len(X)
    lam = sp.Symbol("lam")
    M = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row]
                   for row in X])
    p = (M - lam * sp.eye(n)).det()
    _, factors = sp.factor_list(sp.Poly(p, lam))
    eigs = []
    certified = True
    for fac, _mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            root = sp.Rational(-b, a)
            eigs.append(Fraction(root.p, root.q))
        elif fac.degree() > 1:
            certified = False
    return eigs, certified


def _eigenspace(X, lam):
    n = len(X)
    M = [[X[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    return kernel_basis(M)


def diagonalizability_certificate(T):
    """Certify minimal rank by simultaneous diagonalization of the
    endomorphism space over Q; on success the witness is an explicit list
    of m rank-one terms that rebuild the tensor."""
    m = T.m
    prof = genericity_profile(T)
    gen = [f for f in FACTORS if prof.generic[f]]
    if not gen:
        raise ValueError("certificate requires a 1_*-generic tensor")
    f = gen[0]
    E = e_alpha(T, f, prof.witness[f])
    if _commutator_witness(E.basis) is not None:
        raise ValueError("endomorphism space is not abelian")
    # refine Q^m into joint eigenspaces
    spaces = [Subspace.from_vectors(identity(m), m)]
    for X in E.basis:
        eigs, certified = _rational_eigenvalues(X)
        total = sum(len(_eigenspace(X, lam)) for lam in eigs)
        if total < m and certified:
            return {"rank_m": False, "status": "not_rank_m",
                    "witness": {"factor": f, "non_semisimple": X}}
        if not certified:
            return {"rank_m": None, "status": "not certified over Q",
                    "witness": {"factor": f}}
        refined = []
        for W in spaces:
            covered = 0
            for lam in eigs:
                ker = _eigenspace(X, lam)
                piece = W.intersect(Subspace.from_vectors(ker, m))
                if piece.dim:
                    refined.append(piece)
                    covered += piece.dim
            if covered != W.dim:
                return {"rank_m": False, "status": "not_rank_m",
                        "witness": {"factor": f, "non_semisimple": X}}
        spaces = refined
    if len(spaces) != m or any(W.dim != 1 for W in spaces):
        raise AssertionError("joint eigenspace refinement did not reach "
                             "one-dimensional pieces")
    V = [list(W.basis[0]) for W in spaces]          # eigenvectors as rows
    Vmat = [[V[r][i] for r in range(m)] for i in range(m)]  # columns
    from .linalg import mat_add, mat_scale
    K_alpha = zeros(m, m)
    for coeff, Ki in zip(prof.witness[f], slices(T, f)):
        K_alpha = mat_add(K_alpha, mat_scale(Ki, frac(coeff)))
    G = mat_mul(mat_inv(Vmat), K_alpha)
    Ks = slices(T, f)
    # slice coefficients: K_i = V D_i G, so D_i = diag of V^{-1} K_i G^{-1}
    Vinv = mat_inv(Vmat)
    Ginv = mat_inv(G)
    terms = []
    for r in range(m):
        d = []
        for Ki in Ks:
            Dmat = mat_mul(Vinv, mat_mul(Ki, Ginv))
            d.append(Dmat[r][r])
        terms.append((d, list(G[r]), [Vmat[i][r] for i in range(m)]))
    rebuilt = _rebuild_from_terms(T, f, terms)
    if rebuilt != T:
        raise AssertionError("decomposition does not rebuild the tensor")
    return {"rank_m": True, "status": "certified_rank_m",
            "witness": {"factor": f, "terms": terms}}


def _rebuild_from_terms(T, f, terms):
    """Sum of rank-one terms (d, g, v): d over the slice factor, g over the
    column factor, v over the row factor of the slice convention."""
    m = T.m
    entries = []
    order = {"A": (0, 1, 2), "B": (1, 2, 0), "C": (2, 0, 1)}[f]
    for (d, g, v) in terms:
        for i in range(m):
            if not d[i]:
                continue
            for j in range(m):
                if not g[j]:
                    continue
                for k in range(m):
                    val = d[i] * g[j] * v[k]
                    if val:
                        idx = [0, 0, 0]
                        idx[order[0]] = i
                        idx[order[1]] = j
                        idx[order[2]] = k
                        entries.append((idx[0] + 1, idx[1] + 1, idx[2] + 1, val))
    return Tensor3.from_entries(T.dims, entries)


def verify_limit_certificate(family, T, f, change=None):
    """Check a polynomial family of matrices certifies the flattening span
    of T in factor f as a limit of rank-one spans.

    change, when given, is a pair (L, R); each limit basis matrix M is
    compared after the substitution M -> L M R.
    """
    m = T.m
    fam = tuple(sp.Matrix(B) if not isinstance(B, sp.Matrix) else B
                for B in family)
    reason = ""
    verified = True
    for B in fam:
        if generic_rank(B.tolist()) != 1:
            verified = False
            reason = "a family member does not have rank one"
            break
    span_rows = [[B[i, j] for i in range(B.rows) for j in range(B.cols)]
                 for B in fam]
    if verified and generic_rank(span_rows) != m:
        verified = False
        reason = "the family does not span m dimensions"
    target = flattening_space(T, f)
    if verified:
        lim = flat_limit(span_rows)
        if change is not None:
            L, R = change
            moved = []
            for v in lim.basis:
                M = unflatten(list(v), len(L[0]), len(R))
                moved.append(vec_flat(mat_mul(mat_mul(L, M), R)))
            lim = Subspace.from_vectors(moved, len(moved[0]))
        if lim != target:
            verified = False
            reason = "the limit span differs from the flattening span"
    return LimitCertificate(family=fam, target_span=target,
                            verified=verified, reason=reason)


def b_family():
    """A pentuple of rank-one matrices over Q[t] whose span degenerates to
    the slice span of the side-5 classification tensor with full symmetry
    dimension 16."""
    B1 = sp.Matrix([
        [0, 0, 1, 1, 0],
        [0, 0, -1, -1, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0]])
    B2 = sp.Matrix([
        [0, 0, -1, 1, 0],
        [0, 0, -1, 1, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0]])
    B3 = sp.Matrix([
        [0, 0, 0, 0, 0],
        [0, t, 1, 0, 0],
        [0, t ** 2, t, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0]])
    B4 = sp.Matrix([
        [-t, 0, 0, 1, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [t ** 2, 0, 0, -t, 0],
        [0, 0, 0, 0, 0]])
    B5 = (sp.Matrix([[1, -t, 0, -t, t ** 2]]).T
          * sp.Matrix([[-t, 0, t, 1, t ** 2]]))
    return (B1, B2, B3, B4, B5)


def _sym_mat(M):
    return sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row]
                      for row in M])


def deformation_quintuple(nf):
    """For a side-5 normal form whose last block has the one-parameter
    antisymmetric corner shape, build the commuting polynomial quintuple
    that degenerates to the slices, and verify commutativity, closure under
    products, and the limit."""
    m = nf.m
    if m != 5:
        raise ValueError("the deformation is specific to side 5")
    n = m - 1
    x5 = nf.x[4]
    u5, w5 = nf.u[4], nf.w[4]
    if u5 != [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]:
        raise ValueError("last border row is not in the expected gauge")
    if [v[0] for v in w5] != [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]:
        raise ValueError("last border column is not in the expected gauge")
    p3 = x5[1][0]
    expected = zeros(n, n)
    expected[1][0] = p3
    expected[3][2] = -p3
    if x5 != expected:
        raise ValueError("last block is not in the one-parameter shape")
    p = sp.Rational(p3.numerator, p3.denominator)
    u = {2: sp.zeros(1, 4), 3: sp.Matrix([[0, 0, -p, 0]]), 4: sp.zeros(1, 4)}
    w = {2: sp.zeros(4, 1), 3: sp.Matrix([[0], [p], [0], [0]]), 4: sp.zeros(4, 1)}
    mats = [sp.eye(5)]
    for s in (2, 3, 4):
        xs = _sym_mat(nf.x[s - 1])
        M = sp.zeros(5, 5)
        M[:4, :4] = xs
        M[:4, 4] = w[s]
        M[4, :4] = u[s] * t
        mats.append(M)
    M5 = sp.zeros(5, 5)
    M5[:4, :4] = t * _sym_mat(x5)
    M5[:4, 4] = _sym_mat([[1], [0], [0], [0]])
    M5[4, :4] = t * sp.Matrix([[0, 0, 0, 1]])
    mats.append(M5)  # t times the pencil member with the t^{-1} column
    for i in range(5):
        for j in range(i + 1, 5):
            if sp.expand(mats[i] * mats[j] - mats[j] * mats[i]) != sp.zeros(5, 5):
                raise ValueError("quintuple does not commute at (%d, %d)"
                                 % (i + 1, j + 1))
    span = [[M[a, b] for a in range(5) for b in range(5)] for M in mats]
    base_rank = generic_rank(span)
    for i in range(5):
        for j in range(5):
            prod = mats[i] * mats[j]
            vec = [prod[a, b] for a in range(5) for b in range(5)]
            if generic_rank(span + [vec]) != base_rank:
                raise ValueError("quintuple is not closed under products "
                                 "at (%d, %d)" % (i + 1, j + 1))
    # rescale the last column and take t -> 0; must reproduce the slices
    D = sp.diag(1, 1, 1, 1, t)
    orig = list(mats)
    orig[4] = orig[4] / t
    for M, K in zip(orig, nf.slices):
        lim = sp.expand(M * D)
        lim = lim.subs(t, 0)
        if lim != _sym_mat(K):
            raise ValueError("limit of the deformation misses a slice")
    return tuple(mats)
