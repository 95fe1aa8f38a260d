import pytest

from colortwist.codes import build_torus_color_code, insert_pauli_twist_pair, insert_pauli_wall, ring, straight_path
from colortwist.codes.torus import torus_side, vertex_index, vertex_of
from colortwist.pauli import check_commutation, code_k


@pytest.fixture(scope="module")
def torus2():
    return build_torus_color_code(2)


@pytest.mark.parametrize("L", [1, 2, 3])
def test_torus_parameters(L):
    spec, code = build_torus_color_code(L)
    assert torus_side(L) == 3 * L
    assert code.n == 18 * L * L
    assert check_commutation(code) is None
    assert code_k(code) == 4
    assert {len(p.qubits) for p in spec.plaquettes} == {6}


def test_vertex_index_wraps():
    assert vertex_index(2, (6, -1)) == vertex_index(2, (0, 5))
    assert vertex_of(2, vertex_index(2, (4, 3))) == (4, 3)


def test_torus_rejects_nonpositive_size():
    with pytest.raises(ValueError):
        build_torus_color_code(0)


@pytest.mark.parametrize("radius", [1, 2])
def test_contractible_wall_keeps_k(torus2, radius):
    spec, _ = torus2
    walled_spec, walled = insert_pauli_wall(spec, ring(2, (2, 2), radius))
    assert check_commutation(walled) is None
    assert code_k(walled) == 4
    assert walled_spec.metadata["walls"] == ["wall"]


@pytest.mark.parametrize("L", [1, 2, 3])
@pytest.mark.parametrize("direction", [0, 1, 2])
def test_noncontractible_wall_halves_k(L, direction):
    spec, _ = build_torus_color_code(L)
    path = straight_path(L, (0, 0), direction, 3 * L - 1)
    _, walled = insert_pauli_wall(spec, path)
    assert check_commutation(walled) is None
    assert code_k(walled) == 2


def test_empty_wall_is_identity(torus2):
    spec, code = torus2
    _, same = insert_pauli_wall(spec, [])
    assert same.stabilizers == code.stabilizers


def test_open_path_is_not_a_wall(torus2):
    spec, _ = torus2
    with pytest.raises(ValueError, match="not closed"):
        insert_pauli_wall(spec, straight_path(2, (0, 0), 0, 2))


def test_path_must_be_connected(torus2):
    spec, _ = torus2
    with pytest.raises(ValueError, match="not adjacent"):
        insert_pauli_twist_pair(spec, [vertex_index(2, (0, 0)), vertex_index(2, (2, 0))])


def test_path_must_not_repeat(torus2):
    spec, _ = torus2
    p = vertex_index(2, (0, 0))
    with pytest.raises(ValueError, match="twice"):
        insert_pauli_twist_pair(spec, [p, vertex_index(2, (1, 0)), p])


PATHS = {
    "straight": [(0, 0), (1, 0), (2, 0), (3, 0)],
    "above": [(0, 0), (0, 1), (1, 1), (2, 1), (3, 0)],
    "below": [(0, 0), (1, -1), (2, -1), (3, -1), (3, 0)],
    "detour": [(0, 0), (-1, 1), (-1, 2), (0, 2), (1, 2), (2, 1), (3, 0)],
}


@pytest.mark.parametrize("name", sorted(PATHS))
def test_twist_pair_k_is_path_independent(torus2, name):
    spec, _ = torus2
    twisted_spec, twisted = insert_pauli_twist_pair(spec, [vertex_index(2, v) for v in PATHS[name]])
    assert check_commutation(twisted) is None
    # one Y twist pair leaves the logical count of the torus unchanged
    assert code_k(twisted) == 4
    ends = [twisted_spec.plaquettes[vertex_index(2, v)] for v in (PATHS[name][0], PATHS[name][-1])]
    assert all(p.basis == "Y" for p in ends)


def test_two_twist_pairs_add_a_qubit_per_pair_beyond_the_first(torus2):
    spec, _ = torus2
    first, _ = insert_pauli_twist_pair(spec, straight_path(2, (0, 0), 0, 2))
    _, both = insert_pauli_twist_pair(first, straight_path(2, (0, 3), 0, 2))
    assert check_commutation(both) is None
    assert code_k(both) == 6


def test_walls_only_on_torus():
    from colortwist.codes import build_triangular_color_code

    spec, _ = build_triangular_color_code("666", 3)
    with pytest.raises(ValueError, match="torus"):
        insert_pauli_wall(spec, [0, 1, 2])
