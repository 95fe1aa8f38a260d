import itertools

from hypothesis import given
from hypothesis import strategies as st

from colortwist.gf2 import EchelonBasis, in_span, nullspace, parity, popcount, rank, solve

rows_st = st.lists(st.integers(min_value=0, max_value=(1 << 6) - 1), max_size=7)


def span(rows: list[int]) -> set[int]:
    out = {0}
    for r in rows:
        out |= {v ^ r for v in out}
    return out


def test_popcount_and_parity():
    assert popcount(0b1011) == 3
    assert parity(0b1011) == 1
    assert parity(0) == 0


def test_rank_of_identity_and_repeats():
    assert rank([1, 2, 4, 8]) == 4
    assert rank([3, 5, 6]) == 2
    assert rank([]) == 0


@given(rows_st)
def test_rank_matches_span_size(rows):
    assert len(span(rows)) == 1 << rank(rows)


@given(rows_st, st.integers(min_value=0, max_value=63))
def test_in_span_matches_enumeration(rows, v):
    assert in_span(v, rows) == (v in span(rows))


@given(rows_st)
def test_nullspace_is_orthogonal_and_complete(rows):
    null = nullspace(rows, 6)
    for v in null:
        assert all(parity(v & r) == 0 for r in rows)
    assert rank(null) == len(null)
    assert len(null) + rank(rows) == 6


@given(rows_st, st.integers(min_value=0, max_value=63))
def test_solve_reconstructs_target(rows, target):
    coeffs = solve(rows, target)
    if target in span(rows):
        assert coeffs is not None
        combo = 0
        for i, r in enumerate(rows):
            if (coeffs >> i) & 1:
                combo ^= r
        assert combo == target
    else:
        assert coeffs is None


def test_echelon_basis_add_reports_independence():
    basis = EchelonBasis()
    assert basis.add(0b011)
    assert basis.add(0b110)
    assert not basis.add(0b101)
    assert len(basis) == 2
    assert basis.contains(0b101)
    assert all(basis.reduce(v) == 0 for v in itertools.islice(span([3, 6]), 4))
