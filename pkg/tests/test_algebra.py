"""111-algebra, symmetry Lie algebra, and ADHM module invariants."""

import pytest

from minbr.algebra import (adhm_module, algebra_hilbert, build_t_phi,
                           compute_111_algebra, cyclicity_check,
                           gorenstein_check, min_generators, symmetry_dims)
from minbr.corpus import (diagonal_algebra, get, square_zero_extension,
                          structure_tensor, truncated_polynomial_algebra)


def test_111_algebra_of_unit_tensor():
    alg = compute_111_algebra(get("unit_4").tensor)
    assert alg.dim == 4
    c = alg.structure_constants
    # first basis element is the unit; multiplication is commutative
    for j in range(4):
        assert c[0][j] == [1 if k == j else 0 for k in range(4)]
    for i in range(4):
        for j in range(4):
            assert c[i][j] == c[j][i]
    assert gorenstein_check(c)


def test_111_algebra_truncated_polynomials():
    c = truncated_polynomial_algebra(4)
    alg = compute_111_algebra(structure_tensor(c))
    assert alg.dim == 4
    assert gorenstein_check(alg.structure_constants)
    assert algebra_hilbert(alg.structure_constants) == (1, 1, 1, 1)


def test_111_algebra_square_zero():
    alg = compute_111_algebra(structure_tensor(square_zero_extension(4)))
    assert alg.dim == 5
    assert not gorenstein_check(alg.structure_constants)


def test_111_algebra_symmetric_cubic():
    alg = compute_111_algebra(get("symmetric_cubic").tensor)
    assert alg.dim == 5
    c = alg.structure_constants
    # all products of non-identity basis elements vanish: the square-zero
    # extension of Q by a 4-dimensional vector space
    for i in range(1, 5):
        for j in range(1, 5):
            assert all(v == 0 for v in c[i][j])


def test_111_algebra_below_abundance():
    # the algebra of compatible triples exists but has dimension below m
    alg = compute_111_algebra(get("example_111necessary").tensor)
    assert alg.dim == 3


def test_symmetry_dims_table():
    for key in ("T_O58", "T_O57", "T_O56", "T_O55", "T_O54",
                "T_O57_tilde", "T_O56_tilde"):
        entry = get(key)
        d = symmetry_dims(entry.tensor)
        exp = entry.expected
        assert (d.full, d.ab, d.bc, d.ca) == (
            exp["symmetry_full"], exp["symmetry_ab"],
            exp["symmetry_bc"], exp["symmetry_ca"]), key


def test_adhm_local_module():
    T = get("poly_trunc_4").tensor
    mod = adhm_module(T, "A")
    assert mod.locality == "local"
    assert mod.hilbert_module == (1, 1, 1, 1)
    assert mod.hilbert_algebra == (1, 1, 1, 1)
    assert min_generators(mod) == 1


def test_adhm_nonlocal():
    mod = adhm_module(get("unit_4").tensor, "A")
    assert mod.locality == "nonlocal"


def test_cyclicity():
    assert cyclicity_check(get("unit_5").tensor, "A")
    assert cyclicity_check(get("poly_trunc_3").tensor, "B")


def test_build_t_phi_unit_functional():
    c = diagonal_algebra(5)
    T = build_t_phi(c, [1] * 5)
    assert T == get("unit_5").tensor


def test_build_t_phi_gorenstein_pairing():
    # the dual-socle functional on Q[x]/(x^3) gives a concise 1-generic tensor
    c = truncated_polynomial_algebra(3)
    T = build_t_phi(c, [0, 0, 1])
    from minbr.tensor import conciseness, genericity_profile
    assert all(conciseness(T).values())
    assert genericity_profile(T).one_generic
