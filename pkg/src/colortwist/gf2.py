"""Linear algebra over GF(2) with rows stored as Python int bitsets.

Bit ``j`` of a row is column ``j``.  Python ints are arbitrary precision,
so the same routines serve 4-bit anyon vectors and 200-bit Pauli vectors.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def popcount(v: int) -> int:
    return v.bit_count()


def parity(v: int) -> int:
    return v.bit_count() & 1


class EchelonBasis:
    """Incrementally maintained row-echelon basis keyed by pivot bit.

    Each stored row has a distinct lowest set bit (its pivot) and no other
    stored row has that bit set, so reduction is a single pass.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self._rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: int) -> int:
        # rows are kept fully reduced, so one pass over the pivots suffices
        for low, r in self._rows.items():
            if v & low:
                v ^= r
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; return False when it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        low = v & -v
        for key, r in list(self._rows.items()):
            if r & low:
                self._rows[key] = r ^ v
        self._rows[low] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def rows(self) -> list[int]:
        return [self._rows[k] for k in sorted(self._rows)]


def rank(rows: Iterable[int]) -> int:
    return len(EchelonBasis(rows))


def in_span(v: int, rows: Iterable[int]) -> bool:
    return EchelonBasis(rows).contains(v)


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{v : popcount(r & v) even for every r in rows}``."""
    pivots: dict[int, int] = {}  # pivot column -> fully reduced row
    for r in rows:
        for col, p in pivots.items():
            if (r >> col) & 1:
                r ^= p
        if not r:
            continue
        col = (r & -r).bit_length() - 1
        for c in list(pivots):
            if (pivots[c] >> col) & 1:
                pivots[c] ^= r
        pivots[col] = r
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = 1 << free
        for col, p in pivots.items():
            if (p >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def solve(rows: Sequence[int], target: int) -> int | None:
    """Return a bitmask ``c`` with XOR of ``rows[i]`` over set bits ``i`` equal to target."""
    basis: dict[int, tuple[int, int]] = {}
    for i, r in enumerate(rows):
        combo = 1 << i
        for low, (br, bc) in basis.items():
            if r & low:
                r ^= br
                combo ^= bc
        if not r:
            continue
        low = r & -r
        for key, (br, bc) in list(basis.items()):
            if br & low:
                basis[key] = (br ^ r, bc ^ combo)
        basis[low] = (r, combo)
    combo = 0
    for low, (br, bc) in basis.items():
        if target & low:
            target ^= br
            combo ^= bc
    return combo if target == 0 else None


__all__ = ["EchelonBasis", "in_span", "nullspace", "parity", "popcount", "rank", "solve"]
