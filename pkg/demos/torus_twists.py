"""Y walls and Y twist pairs on the 6.6.6 torus code.

    python3 demos/torus_twists.py
"""

from colortwist.codes import build_torus_color_code, insert_pauli_twist_pair, insert_pauli_wall, ring, straight_path
from colortwist.pauli import check_commutation, code_k


def main() -> None:
    L = 2
    spec, code = build_torus_color_code(L)
    print(f"torus L={L}: n = {code.n}, k = {code_k(code)}")

    _, walled = insert_pauli_wall(spec, ring(L, (2, 2), 1))
    print(f"contractible wall:      k = {code_k(walled)}")
    _, walled = insert_pauli_wall(spec, straight_path(L, (0, 0), 0, 3 * L - 1))
    print(f"non-contractible wall:  k = {code_k(walled)}")

    one, twisted = insert_pauli_twist_pair(spec, straight_path(L, (0, 0), 0, 3))
    print(f"one twist pair:         k = {code_k(twisted)}, commuting = {check_commutation(twisted) is None}")
    _, twisted = insert_pauli_twist_pair(one, straight_path(L, (0, 3), 0, 2))
    print(f"two twist pairs:        k = {code_k(twisted)}")


if __name__ == "__main__":
    main()
