"""Matrices over Q[t]: generic rank over Q(t) and flat limits at t=0.

Polynomial arithmetic is delegated to sympy; everything returned to callers
is converted back to stdlib Fractions.
"""

from fractions import Fraction

import sympy as sp

from .linalg import Subspace, rank

t = sp.Symbol("t")


def _sym(x):
    if isinstance(x, Fraction):
        return sp.Rational(x.numerator, x.denominator)
    return sp.sympify(x)


def poly_matrix(rows):
    """Coerce nested lists of Fractions / ints / sympy expressions in t."""
    return [[sp.expand(_sym(x)) for x in row] for row in rows]


def _to_fraction(x):
    x = sp.nsimplify(x) if not isinstance(x, sp.Rational) else x
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def generic_rank(F):
    """Rank of F over the rational function field Q(t).

    Every minor is a polynomial of degree at most min(rows, cols) times the
    maximum entry degree, so the generic rank is achieved at some point of
    any larger set of distinct rational evaluation points.
    """
    if not F:
        return 0
    rows = [[sp.expand(_sym(x)) for x in row] for row in F]
    deg = 0
    coeffs = []
    for row in rows:
        crow = []
        for e in row:
            if e == 0:
                crow.append([Fraction(0)])
                continue
            p = sp.Poly(e, t)
            deg = max(deg, p.degree())
            crow.append([Fraction(int(c.p), int(c.q))
                         for c in reversed(p.all_coeffs())])
        coeffs.append(crow)
    npts = min(len(rows), len(rows[0])) * deg + 1
    best = 0
    for t0 in range(npts):
        pt = Fraction(t0)
        M = [[sum(c * pt ** i for i, c in enumerate(cs)) for cs in crow]
             for crow in coeffs]
        best = max(best, rank(M))
        if best == min(len(rows), len(rows[0])):
            break
    return best


def eval_at(F, t0):
    """Evaluate entrywise at a rational point; returns Fraction rows."""
    t0 = _sym(t0)
    return [[_to_fraction(sp.expand(e).subs(t, t0)) for e in row] for row in F]


def _valuation(e):
    p = sp.Poly(e, t)
    return min(m[0] for m in p.monoms())


def flat_limit(F):
    """Flat limit at t=0 of the row span of F, as a Subspace over Q.

    The rows must be a Q(t)-basis of their span (generic_rank == number of
    rows).  Repeatedly evaluates at t=0; while the evaluations are dependent,
    a Q-combination of rows vanishing at 0 is divided by the largest power of
    t and swapped in for the lowest-index participating row.  The total
    t-valuation drops each round, so this terminates.
    """
    rows = [[sp.expand(_sym(x)) for x in row] for row in F]
    d = len(rows)
    n = len(rows[0]) if rows else 0
    if generic_rank(rows) != d:
        raise ValueError("rows are dependent over Q(t); reduce to a basis first")
    while True:
        at0 = [[_to_fraction(e.subs(t, 0)) for e in row] for row in rows]
        M0 = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row]
                        for row in at0])
        if M0.rank() == d:
            return Subspace.from_vectors(at0, n)
        v = M0.T.nullspace()[0]
        comb = [sp.expand(sum(v[i] * rows[i][j] for i in range(d)))
                for j in range(n)]
        pw = min(_valuation(e) for e in comb if e != 0)
        if pw > 0:
            comb = [sp.expand(sp.cancel(e / t ** pw)) for e in comb]
        idx = min(i for i in range(d) if v[i] != 0)
        rows[idx] = comb
