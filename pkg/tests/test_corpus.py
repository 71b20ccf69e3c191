"""Ground-truth validation of the built-in tensor corpus."""

import pytest

from minbr.certify import minimal_br_verdict, smoothable_rank_verdict, wildness
from minbr.corpus import MATRIX_FORMS, get, keys, matrix_form_tensor
from minbr.equations import triple_111
from minbr.tensor import conciseness, genericity_profile


def test_keys_sorted_and_lookup():
    ks = keys()
    assert ks == sorted(ks)
    assert "T_O58" in ks
    with pytest.raises(KeyError):
        get("no_such_tensor")


def test_matrix_form_agrees_with_tensor_form():
    for label in MATRIX_FORMS:
        assert matrix_form_tensor(label) == get(label).tensor


@pytest.mark.parametrize("key", ["unit_2", "unit_3", "unit_4", "unit_5",
                                 "w_state", "poly_trunc_2", "poly_trunc_3",
                                 "poly_trunc_4", "symmetric_cubic",
                                 "example_111necessary", "T_O58", "T_O57",
                                 "T_O56", "T_O55", "T_O54", "dual_numbers_4"])
def test_expected_values(key):
    entry = get(key)
    exp = entry.expected
    T = entry.tensor
    if "concise" in exp:
        assert all(conciseness(T).values()) == exp["concise"]
    prof = genericity_profile(T)
    if "one_generic" in exp:
        assert prof.one_generic == exp["one_generic"]
    if "one_degenerate" in exp:
        assert prof.one_degenerate == exp["one_degenerate"]
    if "triple_dim" in exp:
        assert triple_111(T).dim == exp["triple_dim"]
    if "minimal_border_rank" in exp:
        assert minimal_br_verdict(T).answer == exp["minimal_border_rank"]
    if "wild" in exp:
        assert wildness(T).answer == exp["wild"]
    if "minimal_smoothable_rank" in exp:
        assert smoothable_rank_verdict(T).answer == exp["minimal_smoothable_rank"]


def test_classification_expected_values():
    from minbr.normalform import classify_m5
    for key in ("T_M1", "T_M2", "T_O58", "T_O57", "T_O56", "T_O55", "T_O54",
                "T_O57_tilde", "T_O56_tilde"):
        entry = get(key)
        cls = classify_m5(entry.tensor)
        assert cls.label == entry.expected["label"], key
        d = cls.dims
        assert (d.full, d.ab, d.bc, d.ca) == (
            entry.expected["symmetry_full"], entry.expected["symmetry_ab"],
            entry.expected["symmetry_bc"], entry.expected["symmetry_ca"]), key
