import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colortwist.anyons import (
    BOSON_LABELS,
    FERMION_DEFINITIONS,
    boson_monodromy_rule,
    bosons,
    builtin_model,
    display_order,
    fermion_decompositions,
    fermion_monodromy_rule,
    fermions,
    fuse,
    monodromy,
    product_model,
    spin,
    verify_model,
)

CC = builtin_model("CC")
charge = st.integers(0, 15)


def test_model_sizes():
    assert (CC.size, len(bosons(CC)), len(fermions(CC))) == (16, 9, 6)
    assert builtin_model("TC").size == 4
    assert [c.label for c in fermions(builtin_model("3F"))] == ["f1", "f2", "f3"]


def test_display_order_lists_bosons_then_fermions():
    labels = [CC.labels[v] for v in display_order(CC)]
    assert labels == ["1", *BOSON_LABELS, "f1", "f2", "f3", "f4", "f5", "f6"]


def test_boson_grid_fusion_rules():
    assert fuse(CC, "rx", "gx").label == "bx"
    assert fuse(CC, "rx", "rz").label == "ry"
    assert fuse(CC, "rx", "rx").label == "1"


@pytest.mark.parametrize("label, a, b", FERMION_DEFINITIONS)
def test_fermions_are_fusions_of_their_defining_bosons(label, a, b):
    assert fuse(CC, a, b).label == label
    assert spin(CC, label) == -1


@pytest.mark.parametrize("a, b", list(itertools.product(BOSON_LABELS, repeat=2)))
def test_boson_braiding_rule(a, b):
    assert monodromy(CC, a, b) == boson_monodromy_rule(a, b)


@pytest.mark.parametrize("i, j", list(itertools.product(range(1, 7), repeat=2)))
def test_fermion_braiding_rule(i, j):
    assert monodromy(CC, f"f{i}", f"f{j}") == fermion_monodromy_rule(i, j)


def test_each_fermion_has_three_boson_decompositions():
    for f in fermions(CC):
        pairs = fermion_decompositions(CC, f)
        assert len(pairs) == 3
        used = [x.label for pair in pairs for x in pair]
        assert len(set(used)) == 6


def test_decomposition_of_boson_rejected():
    with pytest.raises(ValueError, match="not a fermion"):
        fermion_decompositions(CC, "rx")


@pytest.mark.parametrize("name", ["CC", "TC", "3F"])
def test_builtin_models_satisfy_laws(name):
    assert verify_model(builtin_model(name)).passed


def test_corrupted_spin_is_caught():
    report = verify_model(CC.with_spin("f1", 1))
    assert not report.passed
    assert not report.law("composite-spin").passed


@given(charge, charge, charge)
def test_fusion_is_an_abelian_group(a, b, c):
    assert fuse(CC, a, b) == fuse(CC, b, a)
    assert fuse(CC, fuse(CC, a, b), c) == fuse(CC, a, fuse(CC, b, c))


@given(charge, charge, charge)
def test_monodromy_is_bilinear(a, b, c):
    assert monodromy(CC, a, b ^ c) == monodromy(CC, a, b) * monodromy(CC, a, c)


@given(charge, charge)
def test_spin_of_fusion(a, b):
    assert spin(CC, a ^ b) == spin(CC, a) * spin(CC, b) * monodromy(CC, a, b)


def test_monodromy_is_nondegenerate():
    for a in range(1, 16):
        assert any(monodromy(CC, a, b) == -1 for b in range(16))


def test_product_model_labels():
    tc = builtin_model("TC")
    doubled = product_model(tc, tc)
    assert doubled.size == 16
    assert doubled.labels[1] == "e-"
    assert "e-m+" in doubled.labels
    assert verify_model(doubled).passed
