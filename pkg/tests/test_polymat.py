"""Polynomial matrices over Q[t]: generic rank and flat limits."""

import random
from fractions import Fraction

import sympy as sp

from minbr.polymat import eval_at, flat_limit, generic_rank, t


def rand_poly(rng, deg=2):
    return sum(sp.Rational(rng.randint(-3, 3)) * t ** i for i in range(deg + 1))


def test_generic_rank_matches_random_evaluation():
    rng = random.Random(11)
    for _ in range(20):
        rows = [[rand_poly(rng) for _ in range(4)] for _ in range(3)]
        r = generic_rank(rows)
        # a random evaluation point gives rank at most the generic rank,
        # with equality away from finitely many points
        vals = [rank_at(rows, Fraction(p)) for p in (5, 7, 11)]
        assert max(vals) == r


def rank_at(rows, t0):
    M = sp.Matrix([[e.subs(t, sp.Rational(t0.numerator, t0.denominator))
                    if hasattr(e, "subs") else e for e in row]
                   for row in rows])
    return M.rank()


def test_flat_limit_of_constant_family_is_the_span():
    rows = [[1, 0, 0, 0], [0, 1, 0, 0]]
    lim = flat_limit(rows)
    assert lim.dim == 2
    assert lim.contains([Fraction(1), Fraction(0), Fraction(0), Fraction(0)])


def test_flat_limit_divides_by_t():
    # the two rows collide at t = 0; the limit keeps dimension 2
    rows = [[1, t, 0, 0], [1, 2 * t, 0, t]]
    lim = flat_limit(rows)
    assert lim.dim == 2
    assert lim.contains([Fraction(1), Fraction(0), Fraction(0), Fraction(0)])
    # (row2 - row1)/t = (0, 1, 0, 1) at t = 0
    assert lim.contains([Fraction(0), Fraction(1), Fraction(0), Fraction(1)])


def test_flat_limit_contains_combination_limits():
    rng = random.Random(13)
    for _ in range(10):
        rows = [[rand_poly(rng) for _ in range(4)] for _ in range(2)]
        if generic_rank(rows) != 2:
            continue
        lim = flat_limit(rows)
        assert lim.dim == 2
        for _ in range(10):
            p, q = rand_poly(rng, 1), rand_poly(rng, 1)
            comb = [sp.expand(p * rows[0][j] + q * rows[1][j])
                    for j in range(4)]
            v = [Fraction(int(sp.Poly(c, t).eval(0)) if c != 0 else 0)
                 for c in comb]
            if any(v):
                assert lim.contains(v)


def test_eval_at():
    rows = [[t + 1, t ** 2], [2, t]]
    M = eval_at(rows, Fraction(2))
    assert M == [[Fraction(3), Fraction(4)], [Fraction(2), Fraction(2)]]
