"""Corank-one normal form, gauge fixing, and the side-5 classification."""

import random
from fractions import Fraction

import pytest
import sympy as sp

from minbr.corpus import get
from minbr.linalg import mat_eq, mat_mul
from minbr.normalform import (NormalFormError, atkinson_nf,
                              check_nf_conditions, classify_m5, m5_dichotomy,
                              nf_tensor, normalize_xm)
from minbr.tensor import Tensor3, act, slices


def rand_gl(rng, m):
    while True:
        M = [[Fraction(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)]
        if sp.Matrix([[int(v) for v in r] for r in M]).det() != 0:
            return M


def test_nf_shape_and_roundtrip():
    T = get("T_O58").tensor
    nf = atkinson_nf(T)
    m = nf.m
    # first slice is the rank-(m-1) identity block
    assert nf.slices[0][0][0] == 1 and nf.slices[0][m - 1][m - 1] == 0
    # middle slices carry no border data
    for s in range(1, m - 1):
        assert all(nf.slices[s][m - 1][j] == 0 for j in range(m))
        assert all(nf.slices[s][i][m - 1] == 0 for i in range(m))
    # the recorded basis change rebuilds the normal form from the input
    P_A, M_C, M_B = nf.basis_change
    K0 = slices(T, "A")
    for i in range(m):
        acc = [[sum(P_A[i][s] * K0[s][r][c] for s in range(m))
                for c in range(m)] for r in range(m)]
        assert mat_eq(mat_mul(mat_mul(M_C, acc), M_B), nf.slices[i])


def test_nf_conditions_on_abundant_tensors():
    for key in ("T_O58", "T_O57", "T_O55", "symmetric_cubic"):
        nf = atkinson_nf(get(key).tensor)
        conds = check_nf_conditions(nf)
        assert all(conds.values()), (key, conds)


def test_nf_border_compatibility_symmetry():
    # x_s w_t = x_t w_s and u_t x_s = u_s x_t across middle slices
    nf = atkinson_nf(get("T_O58").tensor)
    m = nf.m
    for s in range(1, m - 1):
        for t in range(1, m - 1):
            assert mat_eq(mat_mul(nf.x[s], nf.w[t]), mat_mul(nf.x[t], nf.w[s]))
            assert mat_mul([nf.u[t]], nf.x[s]) == mat_mul([nf.u[s]], nf.x[t])


def test_nf_with_non_abelian_middle_block():
    # every condition except commutativity of the middle blocks holds here
    nf = atkinson_nf(get("example_111necessary").tensor)
    conds = check_nf_conditions(nf)
    assert conds == {1: True, 2: False, 3: True, 4: True, 5: True, 6: True}


def test_nf_requires_corank_one():
    with pytest.raises(ValueError):
        atkinson_nf(get("unit_5").tensor)


def test_nf_tensor_reencodes():
    nf = atkinson_nf(get("T_O57").tensor)
    assert slices(nf_tensor(nf), "A") == nf.slices


def test_normalize_xm_gauge():
    nf = atkinson_nf(get("T_O58").tensor)
    m = nf.m
    nf2 = normalize_xm(nf, [0, 0, 0, 1], [1, 0, 0, 0])
    x_m = nf2.x[m - 1]
    assert all(v == 0 for v in x_m[0])                 # w* x_m = 0
    assert all(row[m - 2] == 0 for row in x_m)         # x_m u* = 0
    assert all(check_nf_conditions(nf2).values())


def test_normalize_xm_rejects_bad_pairing():
    nf = atkinson_nf(get("T_O58").tensor)
    with pytest.raises(ValueError):
        normalize_xm(nf, [1, 0, 0, 0], [0, 0, 0, 1])


def test_m5_dichotomy_cases():
    nf = atkinson_nf(get("T_M1").tensor)
    P, case = m5_dichotomy(nf)
    assert case == "M1"
    nf = atkinson_nf(get("T_M2").tensor)
    P, case = m5_dichotomy(nf)
    assert case == "M2"


def test_classify_labels():
    for key, label in (("T_O58", "O58"), ("T_O57", "O57"), ("T_O56", "O56"),
                       ("T_O55", "O55"), ("T_O54", "O54"),
                       ("T_O57_tilde", "O57"), ("T_O56_tilde", "O56")):
        assert classify_m5(get(key).tensor).label == label


def test_classify_preconditions():
    with pytest.raises(ValueError):
        classify_m5(get("unit_5").tensor)          # not 1-degenerate
    with pytest.raises(ValueError):
        classify_m5(get("unit_4").tensor)          # wrong side
    with pytest.raises(ValueError):
        classify_m5(get("example_111necessary").tensor)   # not abundant


def test_classify_invariant_under_basis_change():
    rng = random.Random(17)
    T = get("T_O57").tensor
    S = T
    for f in "ABC":
        S = act(rand_gl(rng, 5), f, S)
    assert classify_m5(S).label == "O57"
