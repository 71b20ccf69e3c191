"""Classical equation tests: Strassen, End-closed, Koszul, 111."""

import random
from fractions import Fraction

import pytest

from minbr.corpus import get
from minbr.equations import (e_alpha, end_closed_check, implication_audit,
                             koszul_p1, strassen_check, triple_111)
from minbr.tensor import FACTORS, Tensor3


def test_strassen_one_generic_pass():
    for key in ("unit_5", "poly_trunc_3", "w_state"):
        assert all(v["status"] == "pass"
                   for v in strassen_check(get(key).tensor).values())


def test_strassen_corank_one_routes():
    st = strassen_check(get("T_O58").tensor)
    assert all(v["status"] == "pass" for v in st.values())
    st = strassen_check(get("example_111necessary").tensor)
    assert st["A"]["status"] == "pass"
    assert st["B"]["status"] == "fail"
    assert st["C"]["status"] == "fail"


def test_end_closed_mirrors():
    ec = end_closed_check(get("example_111necessary").tensor)
    assert ec["A"]["status"] == "pass"
    assert ec["B"]["status"] == "fail"
    ec = end_closed_check(get("T_O55").tensor)
    assert all(v["status"] == "pass" for v in ec.values())


def test_witness_independence():
    # the endomorphism-space verdicts cannot depend on the full-rank witness
    T = get("poly_trunc_4").tensor
    m = T.m
    from minbr.equations import _commutator_witness, _product_witness
    for alpha in ([1, 0, 0, 0], [1, 1, 1, 1], [2, -1, 3, 1]):
        E = e_alpha(T, "A", [Fraction(a) for a in alpha])
        assert E.subspace.dim == m
        assert _commutator_witness(E.basis) is None
        assert _product_witness(E.basis, E.subspace) is None


def test_koszul_bounds():
    out = koszul_p1(get("T_O58").tensor)
    assert set(out) == {"".join(p) for p in
                        __import__("itertools").permutations("ABC")}
    assert all(v["bound"] == 20 for v in out.values())
    assert all(v["minimal_ok"] for v in out.values())


def test_koszul_detects_high_border_rank():
    # a random dense 3x3x3 tensor has border rank above 3
    rng = random.Random(3)
    T = Tensor3.from_entries(
        (3, 3, 3), [(i + 1, j + 1, k + 1, Fraction(rng.randint(-4, 4)))
                    for i in range(3) for j in range(3) for k in range(3)])
    out = koszul_p1(T)
    assert any(not v["minimal_ok"] for v in out.values())


def test_triple_111_corpus_values():
    assert triple_111(get("unit_5").tensor).sharp
    tri = triple_111(get("example_111necessary").tensor)
    assert tri.dim == 3 and not tri.abundant
    tri = triple_111(get("T_O54").tensor)
    assert tri.dim == 5 and tri.sharp


def test_triple_111_direct_map_oracle():
    for key in ("unit_2", "unit_3", "unit_4", "w_state", "poly_trunc_2",
                "poly_trunc_3"):
        T = get(key).tensor
        if T.m > 4:
            continue
        tri = triple_111(T, verify_direct=True)
        assert tri.direct_map_rank == tri.map_rank


def test_implication_audit():
    for key in ("unit_5", "T_O58", "T_O54", "symmetric_cubic",
                "example_111necessary", "poly_trunc_4"):
        audit = implication_audit(get(key).tensor)
        assert audit["consistent"], (key, audit["violations"])


def test_audit_requires_concise():
    T = Tensor3.from_entries((3, 3, 3), [(1, 1, 1, Fraction(1))])
    with pytest.raises(ValueError):
        implication_audit(T)
