import pytest
from hypothesis import given
from hypothesis import strategies as st

from colortwist.anyons import builtin_model
from colortwist.symmetries import (
    TABLE_COLUMNS,
    TABLE_ROWS,
    class_of,
    class_table,
    compose,
    conjugacy_classes,
    conjugate,
    cross_wall,
    describe,
    enumerate_symmetries,
    identity,
    inverse,
    localized_anyons,
    order,
    preserves_data,
    quantum_dimension_squared,
    shortest_word,
    structured_form,
    unfold_map,
    verify_iso,
    word,
    wreath_check,
)

GROUP = enumerate_symmetries("CC")
ELEMENTS = list(GROUP)
element = st.sampled_from(ELEMENTS)

# class sizes and d^2 per class, from a brute-force run over all 72 elements
CLASS_SIZES = {"A": 1, "B": 6, "C": 9, "D": 4, "E": 12, "F": 4, "G": 6, "H": 18, "I": 12}
CLASS_DIMS = {"A": 1, "B": 4, "C": 4, "D": 16, "E": 16, "F": 4, "G": 2, "H": 8, "I": 8}


def test_group_orders():
    assert len(GROUP) == 72
    assert len(enumerate_symmetries("3F")) == 6
    assert len(enumerate_symmetries("TC")) == 2


def test_every_element_preserves_the_model():
    cc = builtin_model("CC")
    assert all(preserves_data(cc, g) for g in GROUP)


@given(element, element)
def test_closure(g, h):
    assert compose(g, h) in GROUP


@given(element)
def test_inverse(g):
    assert compose(g, inverse(g)) == identity("CC")


@given(element, element)
def test_conjugation_preserves_class_and_dimension(g, h):
    c = conjugate(g, h)
    assert class_of(c) == class_of(g)
    assert quantum_dimension_squared(c) == quantum_dimension_squared(g)


@given(element)
def test_localized_anyons_form_a_subgroup(g):
    loc = localized_anyons(g)
    assert all(a ^ b in loc for a in loc for b in loc)


def test_class_sizes_and_dimensions():
    classes = conjugacy_classes()
    assert {c.name: len(c) for c in classes} == CLASS_SIZES
    for c in classes:
        assert {quantum_dimension_squared(g) for g in c.elements} == {CLASS_DIMS[c.name]}


def test_class_tables():
    assert ["".join(r) for r in class_table()] == [
        "ABBBDD", "BCCCEE", "BCCCEE", "BCCCEE", "DEEEFF", "DEEEFF",
    ]  # fmt: skip
    assert ["".join(r) for r in class_table(with_d=True)] == [
        "GHHHII", "HGIIHH", "HIGIHH", "HIIGHH", "IHHHIG", "IHHHGI",
    ]  # fmt: skip


def test_table_axes():
    assert TABLE_ROWS == ("1", "R", "G", "B", "RB", "BR")
    assert TABLE_COLUMNS == ("1", "X", "Y", "Z", "XZ", "ZX")


def test_generator_orders():
    assert order(word("R")) == 2
    assert order(word("R B")) == 3
    assert order(word("D")) == 2
    assert order(word("X Z")) == 3


@pytest.mark.parametrize(
    "lhs, rhs",
    [("R G R", "B"), ("D B D", "Z"), ("D Z D", "B")],
)
def test_named_identities(lhs, rhs):
    assert word(lhs) == word(rhs)


def test_wall_crossing():
    assert cross_wall(word("G"), word("R")) == word("B")
    assert cross_wall(word("G"), word("D")) == word("Y")


def test_describe_and_structured_form():
    assert describe(identity("CC")) == "1 [A]"
    assert shortest_word(word("D")) == "D"
    assert str(structured_form(word("D"))).endswith("t=1)")


@pytest.mark.parametrize("target", ["2TC", "2x3F"])
def test_unfolding_is_an_isomorphism(target):
    assert verify_iso(unfold_map(target)).passed


@pytest.mark.parametrize(
    "charge, image",
    [("rx", "e-"), ("rz", "m+"), ("bx", "e+"), ("bz", "m-"), ("gy", "eps-eps+")],
)
def test_toric_code_unfolding(charge, image):
    assert unfold_map("2TC").label(charge) == image


@pytest.mark.parametrize(
    "charge, image",
    [("rx", "f1-f1+"), ("rz", "f3-f2+"), ("bx", "f3-f3+"), ("bz", "f2-f1+")],
)
def test_three_fermion_unfolding(charge, image):
    assert unfold_map("2x3F").label(charge) == image


def test_unknown_unfolding_target():
    with pytest.raises(ValueError, match="unknown unfolding target"):
        unfold_map("3TC")


def test_wreath_product_parameterization():
    assert wreath_check().passed
