import pytest

from colortwist.codes import (
    build_pauli_triangular_code,
    build_triangular_color_code,
    dumps,
    loads,
    to_document,
)
from colortwist.codes.lattice import LatticeCodeSpec, Plaquette
from colortwist.pauli import (
    PauliOperator,
    check_commutation,
    code_k,
    commutes,
    distance_exact,
    format_check_matrix,
    in_group,
    parse_check_matrix,
)

# qubit counts frozen from the generated lattices; 6.6.6 follows (3d^2 + 1)/4
TRIANGLE_N = {
    "666": {3: 7, 5: 19, 7: 37, 9: 61},
    "488": {3: 7, 5: 21, 7: 43, 9: 73},
}


@pytest.mark.parametrize("lattice, d", [(lat, d) for lat in TRIANGLE_N for d in (3, 5, 7, 9)])
def test_triangular_sizes_and_k(lattice, d):
    spec, code = build_triangular_color_code(lattice, d)
    assert code.n == TRIANGLE_N[lattice][d]
    assert check_commutation(code) is None
    assert code_k(code) == 1
    assert sorted(b.kind for b in spec.boundaries) == ["blue", "green", "red"]
    assert all(len(b.qubits) == d for b in spec.boundaries)


def test_666_size_formula():
    assert all(TRIANGLE_N["666"][d] == (3 * d * d + 1) // 4 for d in (3, 5, 7, 9))


@pytest.mark.parametrize("lattice, cap", [("666", 6), ("488", 8)])
def test_triangular_weight_caps(lattice, cap):
    spec, _ = build_triangular_color_code(lattice, 7)
    assert spec.max_plaquette_weight() == cap


@pytest.mark.parametrize("lattice, d", [(lat, d) for lat in TRIANGLE_N for d in (3, 5)])
def test_triangular_exact_distance(lattice, d):
    _, code = build_triangular_color_code(lattice, d)
    assert distance_exact(code, d).distance == d


@pytest.mark.parametrize("lattice", ["666", "488"])
def test_large_triangles_carry_distance_witness(lattice):
    _, code = build_triangular_color_code(lattice, 9)
    witness = PauliOperator.from_string(code.metadata["witness"])
    assert witness.weight == 9
    assert all(commutes(witness, s) for s in code.stabilizers)
    assert not in_group(witness, list(code.stabilizers))


@pytest.mark.parametrize("d", [0, 2, 4])
def test_even_or_small_distance_rejected(d):
    with pytest.raises(ValueError):
        build_triangular_color_code("666", d)


def test_unknown_lattice_rejected():
    with pytest.raises(ValueError, match="lattice must be"):
        build_triangular_color_code("4612", 3)


def test_four_qubit_pauli_triangle():
    _, code = build_pauli_triangular_code(2)
    assert sorted(str(p) for p in code.stabilizers) == sorted(["XXIX", "YIYY", "IZZZ"])
    group = list(code.stabilizers)
    for text in ("IIXX", "IYIY", "ZIIZ"):
        op = PauliOperator.from_string(text)
        assert all(commutes(op, s) for s in group)
        assert not in_group(op, group)
    assert distance_exact(code, 3).distance == 2


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_pauli_triangles(l):  # noqa: E741
    spec, code = build_pauli_triangular_code(l)
    assert code.n == l * l
    assert code_k(code) == 1
    assert distance_exact(code, l).distance == l
    assert [b.kind for b in spec.boundaries] == ["x", "y", "z"]


def test_pauli_triangle_too_small():
    with pytest.raises(ValueError, match="at least 2"):
        build_pauli_triangular_code(1)


@pytest.mark.parametrize(
    "build",
    [
        lambda: build_pauli_triangular_code(3),
        lambda: build_triangular_color_code("488", 5),
        lambda: build_triangular_color_code("666", 7),
    ],
)
def test_json_round_trip(build):
    spec, code = build()
    text = dumps(spec, code)
    spec2, code2 = loads(text)
    assert (code2.n, code2.stabilizers, code2.gauge) == (code.n, code.stabilizers, code.gauge)
    assert code2.logicals  # derived logicals are written into the document
    assert dict(code2.metadata) == dict(code.metadata)
    assert spec2 is not None and spec2.plaquettes == spec.plaquettes
    assert dumps(spec2, code2) == text


def test_document_lists_stabilizers_as_strings():
    spec, code = build_pauli_triangular_code(2)
    doc = to_document(spec, code)
    assert doc["n"] == 4
    assert sorted(doc["stabilizers"]) == sorted(["XXIX", "YIYY", "IZZZ"])


def test_text_round_trip_of_generated_code():
    _, code = build_triangular_color_code("666", 5)
    again = parse_check_matrix(format_check_matrix(code))
    assert again.stabilizers == code.stabilizers


def test_odd_stabilizer_plaquette_rejected():
    spec = LatticeCodeSpec([(0, (0.0, 0.0)), (1, (1.0, 0.0)), (2, (2.0, 0.0))], [Plaquette((0, 1, 2), "r")])
    with pytest.raises(ValueError, match="odd size"):
        spec.compile()


def test_odd_gauge_plaquette_allowed():
    spec = LatticeCodeSpec(
        [(0, (0.0, 0.0)), (1, (1.0, 0.0)), (2, (2.0, 0.0))],
        [Plaquette((0, 1, 2), "g", role="gauge")],
    )
    code = spec.compile()
    assert len(code.gauge) == 2 and not code.stabilizers
