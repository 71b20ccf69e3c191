"""Verdicts, diagonalization certificates, and degeneration certificates."""

from fractions import Fraction

import pytest
import sympy as sp

from minbr.certify import (b_family, deformation_quintuple,
                           diagonalizability_certificate, minimal_br_verdict,
                           smoothable_rank_verdict, verify_limit_certificate,
                           wildness)
from minbr.corpus import get, structure_tensor
from minbr.normalform import atkinson_nf, normalize_xm
from minbr.polymat import t
from minbr.tensor import Tensor3


def test_minimal_border_rank_verdicts():
    assert minimal_br_verdict(get("unit_5").tensor).answer == "yes"
    assert minimal_br_verdict(get("T_O58").tensor).answer == "yes"
    assert minimal_br_verdict(get("example_111necessary").tensor).answer == "no"
    assert minimal_br_verdict(get("unit_7").tensor).answer == "unknown"


def test_wildness_verdicts():
    assert wildness(get("unit_5").tensor).answer == "no"
    for key in ("T_O58", "T_O54", "symmetric_cubic"):
        assert wildness(get(key).tensor).answer == "yes"


def test_smoothable_rank_verdicts():
    assert smoothable_rank_verdict(get("unit_6").tensor).answer == "yes"
    assert smoothable_rank_verdict(get("T_O58").tensor).answer == "no"
    assert smoothable_rank_verdict(get("dual_numbers_4").tensor).answer == "no"


def test_guards_on_larger_sides():
    # side-6 concise 1-degenerate input: no verdict is claimed
    ent = list(get("T_O58").tensor.entries()) + [(6, 6, 6, Fraction(1))]
    T6 = Tensor3.from_entries((6, 6, 6), ent)
    assert minimal_br_verdict(T6).answer == "unknown"
    assert wildness(T6).answer == "unknown"
    # non-concise input is reported as such
    T = Tensor3.from_entries((3, 3, 3), [(1, 1, 1, Fraction(1))])
    v = minimal_br_verdict(T)
    assert v.answer == "no"
    assert "concise" in v.rule


def test_diagonalizability_certificate_positive():
    out = diagonalizability_certificate(get("unit_5").tensor)
    assert out["status"] == "certified_rank_m"
    assert len(out["witness"]["terms"]) == 5


def test_diagonalizability_certificate_negative():
    # Q[x]/(x^2) acts by a nilpotent non-semisimple matrix
    out = diagonalizability_certificate(get("poly_trunc_2").tensor)
    assert out["status"] == "not_rank_m"
    assert out["rank_m"] is False


def test_diagonalizability_certificate_irrational():
    # x^2 = 2 has no rational eigenvalues
    c = [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]
    out = diagonalizability_certificate(structure_tensor(c))
    assert out["rank_m"] is None
    assert out["status"] == "not certified over Q"


def test_b_family_certificate():
    fam = b_family()
    cert = verify_limit_certificate(fam, get("T_O58").tensor, "A")
    assert cert.verified, cert.reason


def test_limit_certificate_rejects_bad_family():
    fam = list(b_family())
    fam[0] = fam[0] + sp.Matrix([[0] * 5] * 4 + [[0, 0, 0, 0, 1]])
    cert = verify_limit_certificate(fam, get("T_O58").tensor, "A")
    assert not cert.verified
    assert cert.reason


def test_deformation_quintuple():
    # p3 = 1 arises from the fully general member, p3 = 0 from T_M2
    for key in ("T_O58", "T_M2"):
        nf = atkinson_nf(get(key).tensor)
        nf = normalize_xm(nf, [0, 0, 0, 1], [1, 0, 0, 0])
        mats = deformation_quintuple(nf)
        assert len(mats) == 5
        assert mats[0] == sp.eye(5)


def test_deformation_quintuple_commutes_identically():
    nf = atkinson_nf(get("T_O58").tensor)
    nf = normalize_xm(nf, [0, 0, 0, 1], [1, 0, 0, 0])
    mats = deformation_quintuple(nf)
    # pairwise commutativity in t
    for i in range(5):
        for j in range(5):
            assert sp.expand(mats[i] * mats[j] - mats[j] * mats[i]) == sp.zeros(5, 5)
