from fractions import Fraction

import pytest

from colortwist.codes import FamilyParams, build_code, encoding_rate, validate_code
from colortwist.pauli import StabilizerCode


def test_report_for_small_triangle():
    params = FamilyParams("triangular", d=3, lattice="666")
    spec, code = build_code(params)
    report = validate_code(code, params, spec)
    assert report.ok
    assert report.summary() == "[[7,1,3]]"
    assert report.rate == Fraction(9, 7)
    assert report.weights == (4,)


def test_wrong_expectation_fails_without_raising():
    spec, code = build_code(FamilyParams("triangular", d=3, lattice="666"))
    report = validate_code(code, FamilyParams("triangular", d=5, lattice="666"), spec)
    assert not report.ok
    assert any(line.startswith("FAIL distance") for line in report.lines())


def test_dependent_generators_reported():
    code = StabilizerCode.from_strings(["XX", "XX"])
    report = validate_code(code, FamilyParams("pauli-triangular", l=2))
    assert not report.ok
    assert report.k is None


def test_missing_witness_reported():
    params = FamilyParams("triangular", d=7, lattice="666")
    spec, code = build_code(params)
    bare = StabilizerCode(code.n, code.stabilizers, code.gauge, code.logicals, {})
    report = validate_code(bare, params, spec)
    assert [c.name for c in report.checks if not c.ok] == ["distance witness"]


def test_rate_of_empty_code():
    with pytest.raises(ValueError):
        encoding_rate(StabilizerCode(0, ()), 3)


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"family": "klein"}, "unknown family"),
        ({"family": "triangular", "d": 3}, "needs lattice"),
        ({"family": "triangular", "d": 3, "lattice": "4612"}, "lattice must be"),
        ({"family": "stellated-color", "lattice": "666", "s": 9, "d": 3}, "supported grid"),
        ({"family": "torus"}, "needs L"),
    ],
)
def test_family_params_validation(kwargs, message):
    with pytest.raises(ValueError, match=message):
        FamilyParams(**kwargs)


def test_params_from_metadata():
    _, code = build_code(FamilyParams("stellated-color", lattice="488", s=5, d=3))
    params = FamilyParams.from_metadata(dict(code.metadata))
    assert (params.family, params.lattice, params.s, params.d) == ("stellated-color", "488", 5, 3)
    assert (params.expected_k, params.expected_gauge, params.expected_distance) == (4, 1, 3)
