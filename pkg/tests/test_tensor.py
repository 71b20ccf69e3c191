"""Tensor container, slice conventions, genericity profiles."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from minbr.corpus import get
from minbr.linalg import identity, mat_mul
from minbr.tensor import (FACTORS, Tensor3, act, conciseness, flattening_space,
                          genericity_profile, max_slice_rank, permute, slices)


def rand_tensor(rng, dims):
    entries = []
    for i in range(dims[0]):
        for j in range(dims[1]):
            for k in range(dims[2]):
                v = rng.randint(-3, 3)
                if v:
                    entries.append((i + 1, j + 1, k + 1, Fraction(v)))
    return Tensor3.from_entries(dims, entries)


def test_slice_conventions():
    T = Tensor3.from_entries((2, 3, 4), [(1, 2, 3, Fraction(5))])
    # A-slices have rows over C and columns over B
    assert slices(T, "A")[0][2][1] == 5
    # B-slices have rows over A and columns over C
    assert slices(T, "B")[1][0][2] == 5
    # C-slices have rows over B and columns over A
    assert slices(T, "C")[2][1][0] == 5


@given(st.permutations(FACTORS))
@settings(max_examples=10, deadline=None)
def test_permute_round_trip(perm):
    T = rand_tensor(random.Random(5), (3, 3, 3))
    S = permute(T, tuple(perm))
    inv = [None] * 3
    for pos, f in enumerate(perm):
        inv["ABC".index(f)] = FACTORS[pos]
    assert permute(S, tuple(inv)) == T


def test_permute_preserves_entry_values():
    T = Tensor3.from_entries((2, 3, 4), [(2, 3, 4, Fraction(7))])
    S = permute(T, ("C", "A", "B"))
    assert S.dims == (4, 2, 3)
    assert dict((e[:3], e[3]) for e in S.entries())[(4, 2, 3)] == 7


def test_max_slice_rank_witness():
    T = get("T_O58").tensor
    for f in FACTORS:
        r, wit = max_slice_rank(slices(T, f))
        assert r == 4
        K = slices(T, f)
        comb = [[sum(Fraction(wit[s]) * K[s][i][j] for s in range(5))
                 for j in range(5)] for i in range(5)]
        from minbr.linalg import rank
        assert rank(comb) == r


def test_genericity_profiles():
    p = genericity_profile(get("unit_5").tensor)
    assert p.one_generic and p.one_star_generic and p.binding
    assert not p.one_degenerate
    p = genericity_profile(get("T_O58").tensor)
    assert p.one_degenerate
    assert p.max_rank == {"A": 4, "B": 4, "C": 4}
    assert p.corank == {"A": 1, "B": 1, "C": 1}
    p = genericity_profile(get("w_state").tensor)
    assert p.one_generic


def test_conciseness():
    assert conciseness(get("unit_4").tensor) == {"A": True, "B": True, "C": True}
    # a tensor supported on one slice is nowhere concise in that factor
    T = Tensor3.from_entries((3, 3, 3), [(1, j, k, Fraction(1))
                                         for j in range(1, 4) for k in range(1, 4)])
    assert not conciseness(T)["B"]


def test_flattening_space_dims():
    T = get("T_O57").tensor
    for f in FACTORS:
        assert flattening_space(T, f).dim == 5


def test_act_identity_and_composition():
    T = rand_tensor(random.Random(9), (3, 3, 3))
    assert act(identity(3), "B", T) == T
    X = [[Fraction(1), Fraction(2), Fraction(0)],
         [Fraction(0), Fraction(1), Fraction(0)],
         [Fraction(1), Fraction(0), Fraction(1)]]
    Y = [[Fraction(1), Fraction(0), Fraction(0)],
         [Fraction(3), Fraction(1), Fraction(0)],
         [Fraction(0), Fraction(0), Fraction(2)]]
    for f in FACTORS:
        assert act(X, f, act(Y, f, T)) == act(mat_mul(X, Y), f, T)
