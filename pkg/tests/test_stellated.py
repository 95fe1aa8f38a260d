from fractions import Fraction

import pytest

from colortwist.codes import (
    FamilyParams,
    build_stellated_color_code,
    build_stellated_surface_code,
    encoding_rate,
    rate_bound,
    validate_code,
)
from colortwist.codes.stellated import surface_extents
from colortwist.pauli import check_commutation, code_k, distance_exact, gauge_qubit_count

# qubit counts of every supported (s, d), frozen from a full generation run
COLOR_N = {
    "666": {
        3: (15, 33, 63, 99),
        4: (20, 44, 84, 132),
        5: (25, 55, 105, 165),
        6: (30, 66, 126, 198),
        7: (35, 77, 147, 231),
    },
    "488": {
        3: (15, 27, 63, 75),
        4: (20, 36, 84, 100),
        5: (25, 45, 105, 125),
        6: (30, 54, 126, 150),
        7: (35, 63, 147, 175),
    },
}
SURFACE_N = {3: (7, 19, 37, 61), 5: (14, 36, 68, 110), 7: (19, 49, 93, 151)}
DISTANCES = (3, 5, 7, 9)


def color_cases(ds=DISTANCES):
    return [(lat, s, d) for lat in COLOR_N for s in COLOR_N[lat] for d in ds]


@pytest.mark.parametrize("lattice, s, d", color_cases((3, 5)))
def test_color_code_sizes_and_logicals(lattice, s, d):
    spec, code = build_stellated_color_code(lattice, s, d)
    assert code.n == COLOR_N[lattice][s][DISTANCES.index(d)]
    assert check_commutation(code) is None
    assert code_k(code) == (s - 1 if s % 2 else s - 2)
    assert gauge_qubit_count(code) == s % 2


@pytest.mark.parametrize("lattice, s, d", color_cases((3, 5)))
def test_color_code_validates(lattice, s, d):
    spec, code = build_stellated_color_code(lattice, s, d)
    report = validate_code(code, FamilyParams("stellated-color", d=d, s=s, lattice=lattice), spec)
    assert report.ok, report.lines()


@pytest.mark.parametrize("lattice, s", [(lat, s) for lat in COLOR_N for s in (3, 4, 7)])
def test_large_color_codes_carry_witness(lattice, s):
    for d in (7, 9):
        spec, code = build_stellated_color_code(lattice, s, d)
        assert code.n == COLOR_N[lattice][s][DISTANCES.index(d)]
        report = validate_code(code, FamilyParams("stellated-color", d=d, s=s, lattice=lattice), spec)
        assert report.ok, report.lines()


def test_666_wedges_are_identical():
    for s, sizes in COLOR_N["666"].items():
        assert sizes == tuple(s * w for w in (5, 11, 21, 33))


@pytest.mark.parametrize("s, d", [(3, 7), (5, 5), (5, 7), (7, 5)])
def test_bare_distance_is_the_center_loop(s, d):
    # the loop around the gauge center has weight s, so bare distance is min(s, d)
    _, code = build_stellated_color_code("666", s, d)
    assert distance_exact(code, d, dressed=False).distance == min(s, d)


def test_odd_s_has_seam_and_gauge_center():
    spec, _ = build_stellated_color_code("488", 5, 5)
    assert len(spec.seams) == 1
    gauge = [p for p in spec.plaquettes if p.role == "gauge"]
    assert len(gauge) == 1 and len(gauge[0].qubits) == 5


def test_even_s_has_no_seam():
    spec, _ = build_stellated_color_code("666", 4, 3)
    assert spec.seams == []
    assert all(p.role == "stabilizer" for p in spec.plaquettes)


@pytest.mark.parametrize("lattice", ["666", "488"])
def test_even_s_distance_is_one_more(lattice):
    _, code = build_stellated_color_code(lattice, 4, 3)
    assert distance_exact(code, 4).distance == 4


@pytest.mark.parametrize("lattice", ["666", "488"])
def test_bare_distance_is_below_dressed(lattice):
    _, code = build_stellated_color_code(lattice, 3, 5)
    assert distance_exact(code, 5, dressed=True).distance == 5
    assert distance_exact(code, 5, dressed=False).distance == 3


@pytest.mark.parametrize("lattice", ["666", "488"])
@pytest.mark.parametrize("d", [3, 5])
def test_rates_rise_with_s_below_bound(lattice, d):
    rates = []
    for s in (3, 5, 7):
        _, code = build_stellated_color_code(lattice, s, d)
        rate = encoding_rate(code, d)
        assert rate < rate_bound(lattice, s)
        rates.append(rate)
    assert rates == sorted(set(rates))


def test_rate_bounds():
    assert rate_bound("488", 3) == Fraction(8, 3)
    assert rate_bound("666", 3) == Fraction(16, 9)
    assert rate_bound("surface", 5) == Fraction(8, 5)
    with pytest.raises(ValueError):
        rate_bound("4612", 3)


@pytest.mark.parametrize("s, d", [(s, d) for s in SURFACE_N for d in DISTANCES])
def test_surface_codes(s, d):
    spec, code = build_stellated_surface_code(s, d)
    assert code.n == SURFACE_N[s][DISTANCES.index(d)]
    assert code_k(code) == (s - 1) // 2
    report = validate_code(code, FamilyParams("stellated-surface", d=d, s=s), spec)
    assert report.ok, report.lines()


def test_surface_s3_is_the_triangle():
    for d in DISTANCES:
        assert SURFACE_N[3][DISTANCES.index(d)] == (3 * d * d + 1) // 4


def test_surface_rate_tie_at_distance_three():
    rates = {s: encoding_rate(build_stellated_surface_code(s, 3)[1], 3) for s in (3, 5, 7)}
    assert rates[3] == rates[5] == Fraction(9, 7)
    assert rates[7] > rates[5]


def test_surface_rates_strictly_rise_from_distance_five():
    for d in (5, 7, 9):
        rates = [encoding_rate(build_stellated_surface_code(s, d)[1], d) for s in (3, 5, 7)]
        assert rates[0] < rates[1] < rates[2]


def test_surface_extents():
    assert surface_extents(3, 5) == (3, 2, 2)
    assert surface_extents(5, 3) == (2, 1, 2, 2, 1)


def test_surface_weights():
    spec, _ = build_stellated_surface_code(5, 5)
    bulk = [len(p.qubits) for p in spec.plaquettes if p.color in ("r", "b")]
    assert max(bulk) == 4


@pytest.mark.parametrize("s, d", [(2, 3), (9, 3), (3, 11), (3, 4)])
def test_outside_grid_rejected(s, d):
    with pytest.raises(ValueError):
        build_stellated_color_code("666", s, d)


def test_even_surface_rejected():
    with pytest.raises(ValueError, match="odd s"):
        FamilyParams("stellated-surface", s=4, d=3)
