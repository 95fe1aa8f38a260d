"""Encoding rate c = k d^2 / n of stellated codes against their large-d limits.

    python3 demos/stellated_rates.py
"""

from colortwist.codes import FamilyParams, build_code, encoding_rate, rate_bound
from colortwist.pauli import code_k


def row(params: FamilyParams, bound_key: str) -> str:
    _, code = build_code(params)
    d = params.expected_distance or 0
    rate = encoding_rate(code, d)
    bound = rate_bound(bound_key, params.s or 0)
    return f"  s={params.s}  d={params.d}  [[{code.n},{code_k(code)},{d}]]  c = {float(rate):.3f}  limit {float(bound):.3f}"


def main() -> None:
    for lattice in ("666", "488"):
        print(f"stellated {lattice} color codes")
        for s in (3, 5, 7):
            for d in (3, 5, 7, 9):
                print(row(FamilyParams("stellated-color", lattice=lattice, s=s, d=d), lattice))
    print("stellated surface codes")
    for s in (3, 5, 7):
        for d in (3, 5, 7, 9):
            print(row(FamilyParams("stellated-surface", s=s, d=d), "surface"))


if __name__ == "__main__":
    main()
