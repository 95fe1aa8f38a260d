import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colortwist.boundaries import (
    BOUNDARY_NAMES,
    act_on_boundary,
    condensable_twists,
    corner_twist_candidates,
    enumerate_lagrangian_subgroups,
    fold_table,
    is_lagrangian,
    named_boundary,
    orbit,
)
from colortwist.symmetries import enumerate_symmetries

GROUP = list(enumerate_symmetries("CC"))


def brute_lagrangian_count(name: str) -> int:
    """Count subsets satisfying the definition directly, without group structure."""
    from colortwist.anyons import builtin_model

    m = builtin_model(name)
    count = 0
    for size in range(1, m.size + 1):
        if size * size != m.size:
            continue
        for rest in itertools.combinations(range(1, m.size), size - 1):
            s = {0, *rest}
            if all(a ^ b in s for a in s for b in s) and is_lagrangian(m, s):
                count += 1
    return count


@pytest.mark.parametrize("name, expected", [("CC", 6), ("TC", 2), ("3F", 0)])
def test_lagrangian_counts(name, expected):
    assert len(enumerate_lagrangian_subgroups(name)) == expected
    assert brute_lagrangian_count(name) == expected


def test_color_code_boundaries_are_named_in_order():
    subs = enumerate_lagrangian_subgroups("CC")
    assert [b.name for b in subs] == list(BOUNDARY_NAMES)
    assert str(subs[0]) == "red {1, rx, rz, ry}"


@pytest.mark.parametrize(
    "subset, condition",
    [
        (["rx", "rz"], "I"),
        (["1", "f1"], "II-spin"),
        (["1", "rx", "gz", "bx"], "I"),
        (["1", "rx", "gx", "bx", "rz", "ry", "gy", "bz"], "I"),
    ],
)
def test_invalid_subsets_report_first_failed_condition(subset, condition):
    verdict = is_lagrangian("CC", subset)
    assert not verdict
    assert verdict.condition == condition


def test_incomplete_subgroup_fails_maximality():
    verdict = is_lagrangian("CC", ["1", "rx"])
    assert verdict.condition == "III"


@given(st.sampled_from(GROUP), st.sampled_from(BOUNDARY_NAMES))
def test_symmetries_permute_boundaries(phi, name):
    image = act_on_boundary(phi, named_boundary(name))
    assert image.name in BOUNDARY_NAMES


def test_action_is_transitive_with_stabilizer_of_twelve():
    red = named_boundary("red")
    assert len(orbit(red)) == 6
    assert len(condensable_twists(red)) == 12


def test_corner_candidates_split_the_group():
    red = named_boundary("red")
    total = sum(len(corner_twist_candidates(red, named_boundary(n))) for n in BOUNDARY_NAMES)
    assert total == 72


def test_fold_table():
    assert fold_table() == [
        ("1", "x"),
        ("f2<->f3", "red"),
        ("f1<->f2", "blue"),
        ("f1->f2, f2->f3, f3->f1", "z"),
        ("f1->f3, f2->f1, f3->f2", "y"),
        ("f1<->f3", "green"),
    ]


def test_unknown_boundary_name():
    with pytest.raises(ValueError, match="unknown boundary"):
        named_boundary("purple")
