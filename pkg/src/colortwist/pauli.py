"""Symplectic GF(2) Pauli operators, stabilizer codes and exact distance search.

A Pauli on ``n`` qubits is a pair of ``n``-bit masks ``(x, z)``; qubit ``i``
carries X, Z or Y when bit ``i`` is set in ``x``, ``z`` or both.  Phases are
not tracked.  With independent generators and the all-positive sign
convention the stabilizer group never contains ``-1``, so nothing is lost.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from colortwist import gf2

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


@dataclass(frozen=True, order=True)
class PauliOperator:
    """Phase-free Pauli operator stored as two bit masks."""

    n: int
    x: int
    z: int

    def __post_init__(self) -> None:
        limit = 1 << self.n
        if self.n < 0 or not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError(f"bit masks do not fit on {self.n} qubits")

    @classmethod
    def from_string(cls, text: str) -> PauliOperator:
        text = text.strip()
        x = z = 0
        for i, ch in enumerate(text):
            try:
                bx, bz = _LETTER_BITS[ch.upper()]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r} in {text!r}") from None
            x |= bx << i
            z |= bz << i
        return cls(len(text), x, z)

    @classmethod
    def from_sparse(cls, n: int, letters: Mapping[int, str]) -> PauliOperator:
        x = z = 0
        for q, ch in letters.items():
            if not 0 <= q < n:
                raise ValueError(f"qubit {q} out of range for n={n}")
            bx, bz = _LETTER_BITS[ch.upper()]
            x |= bx << q
            z |= bz << q
        return cls(n, x, z)

    @classmethod
    def on_support(cls, n: int, qubits: Iterable[int], letter: str) -> PauliOperator:
        return cls.from_sparse(n, {q: letter for q in qubits})

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, 0, 0)

    def __str__(self) -> str:
        return "".join(self.letter(i) for i in range(self.n))

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        mask = self.x | self.z
        return tuple(i for i in range(self.n) if (mask >> i) & 1)

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def vec(self) -> int:
        """Pack as a single ``2n``-bit integer, x bits low and z bits high."""
        return self.x | (self.z << self.n)

    @classmethod
    def from_vec(cls, n: int, v: int) -> PauliOperator:
        mask = (1 << n) - 1
        return cls(n, v & mask, v >> n)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        _check_same_n(self, other)
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z)

    def commutes(self, other: PauliOperator) -> bool:
        return commutes(self, other)


def _check_same_n(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n} qubits")


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    _check_same_n(p, q)
    return not (((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1)


def _swapped_vec(p: PauliOperator) -> int:
    # dotting a vec with the swapped vec of p gives the symplectic product
    return p.z | (p.x << p.n)


def in_group(p: PauliOperator, generators: Sequence[PauliOperator]) -> bool:
    """True iff ``p`` is a product of ``generators`` up to phase."""
    for g in generators:
        _check_same_n(p, g)
    return gf2.in_span(p.vec(), (g.vec() for g in generators))


def independent_subset(paulis: Sequence[PauliOperator]) -> list[PauliOperator]:
    """Greedy maximal independent sublist, preserving input order."""
    basis = gf2.EchelonBasis()
    return [p for p in paulis if basis.add(p.vec())]


def symplectic_rank(paulis: Sequence[PauliOperator]) -> int:
    return gf2.rank(p.vec() for p in paulis)


class CodeError(ValueError):
    """Raised when a generator list violates the stabilizer-code contract."""


@dataclass(frozen=True)
class StabilizerCode:
    """Stabilizer (or subsystem) code on ``n`` qubits.

    ``gauge`` lists extra gauge generators whose encoded qubits are excluded
    from the logical count.  ``logicals`` is optional declared data carried
    through I/O; derived logical operators come from :func:`logical_basis`.
    """

    n: int
    stabilizers: tuple[PauliOperator, ...]
    gauge: tuple[PauliOperator, ...] = ()
    logicals: tuple[PauliOperator, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        for group in (self.stabilizers, self.gauge, self.logicals):
            for p in group:
                if p.n != self.n:
                    raise CodeError(f"operator {p} has {p.n} qubits, code has {self.n}")

    @classmethod
    def from_strings(
        cls,
        stabilizers: Iterable[str],
        gauge: Iterable[str] = (),
        logicals: Iterable[str] = (),
        n: int | None = None,
        metadata: Mapping[str, Any] | None = None,
    ) -> StabilizerCode:
        stabs = tuple(PauliOperator.from_string(s) for s in stabilizers)
        gs = tuple(PauliOperator.from_string(s) for s in gauge)
        ls = tuple(PauliOperator.from_string(s) for s in logicals)
        if n is None:
            lengths = {p.n for p in stabs + gs + ls}
            if len(lengths) != 1:
                raise CodeError(f"inconsistent or missing operator lengths: {sorted(lengths)}")
            n = lengths.pop()
        return cls(n, stabs, gs, ls, dict(metadata or {}))

    def is_css(self) -> bool:
        return all(not (p.x and p.z) for p in self.stabilizers + self.gauge)

    def max_weight(self) -> int:
        return max((p.weight for p in self.stabilizers), default=0)


def check_commutation(code: StabilizerCode) -> tuple[int, int] | None:
    """First anticommuting (stabilizer, stabilizer-or-gauge) index pair, if any.

    Gauge indices are offset by the number of stabilizers.
    """
    stabs = code.stabilizers
    others = stabs + code.gauge
    for i, p in enumerate(stabs):
        for j in range(i + 1, len(others)):
            if not commutes(p, others[j]):
                return i, j
    return None


def _require_independent(code: StabilizerCode) -> int:
    r = symplectic_rank(code.stabilizers)
    if r != len(code.stabilizers):
        raise CodeError(
            f"stabilizer generators are dependent: {len(code.stabilizers)} listed, rank {r}"
        )
    return r


def gauge_qubit_count(code: StabilizerCode) -> int:
    """Number of qubits encoded in the gauge generators modulo the stabilizers."""
    return len(gauge_pairs(code))


def total_k(code: StabilizerCode) -> int:
    """``n - rank(stabilizers)``; gauge qubits are counted as encoded."""
    return code.n - _require_independent(code)


def code_k(code: StabilizerCode) -> int:
    """Logical qubit count after removing declared gauge qubits."""
    return total_k(code) - gauge_qubit_count(code)


def _normalizer_basis(n: int, constraints: Sequence[PauliOperator]) -> list[int]:
    return gf2.nullspace([_swapped_vec(p) for p in constraints], 2 * n)


def _sym(n: int, a: int, b: int) -> int:
    mask = (1 << n) - 1
    return ((a & (b >> n)).bit_count() + ((a >> n) & b & mask).bit_count()) & 1


def _symplectic_pairs(n: int, vecs: list[int]) -> list[tuple[int, int]]:
    """Symplectic Gram-Schmidt; vectors left without a partner are dropped."""
    pool = list(vecs)
    pairs: list[tuple[int, int]] = []
    while pool:
        a = pool.pop(0)
        j = next((j for j, b in enumerate(pool) if _sym(n, a, b)), None)
        if j is None:
            continue
        b = pool.pop(j)
        pairs.append((a, b))
        fixed = []
        for c in pool:
            if _sym(n, c, b):
                c ^= a
            if _sym(n, c, a):
                c ^= b
            fixed.append(c)
        pool = fixed
    return pairs


def _complement(n: int, candidates: Iterable[int], span: Iterable[int]) -> list[int]:
    basis = gf2.EchelonBasis(span)
    out = []
    for v in candidates:
        if basis.add(v):
            out.append(v)
    return out


def gauge_pairs(code: StabilizerCode) -> list[tuple[PauliOperator, PauliOperator]]:
    """Gauge generators reorganised into anticommuting pairs modulo the stabilizers."""
    if not code.gauge:
        return []
    n = code.n
    fresh = _complement(n, (g.vec() for g in code.gauge), (s.vec() for s in code.stabilizers))
    pairs = _symplectic_pairs(n, fresh)
    if 2 * len(pairs) != len(fresh):
        raise CodeError("gauge generators contain an element central modulo the stabilizers")
    return [(PauliOperator.from_vec(n, a), PauliOperator.from_vec(n, b)) for a, b in pairs]


def logical_basis(code: StabilizerCode) -> list[tuple[PauliOperator, PauliOperator]]:
    """Pairs ``(Xbar_i, Zbar_i)`` spanning the bare logical operators.

    Each element commutes with every stabilizer and gauge generator, and
    ``Xbar_i`` anticommutes with ``Zbar_j`` exactly when ``i == j``.
    """
    _require_independent(code)
    n = code.n
    group = list(code.stabilizers) + list(code.gauge)
    normal = _normalizer_basis(n, group)
    fresh = _complement(n, normal, (g.vec() for g in group))
    pairs = _symplectic_pairs(n, fresh)
    if 2 * len(pairs) != len(fresh):
        raise CodeError("normalizer modulo the gauge group is degenerate")
    return [(PauliOperator.from_vec(n, a), PauliOperator.from_vec(n, b)) for a, b in pairs]


# --------------------------------------------------------------------------
# distance search


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a bounded search; ``distance`` is None when it exceeds ``w_max``."""

    distance: int | None
    w_max: int
    witness: PauliOperator | None = None

    @property
    def exceeds(self) -> bool:
        return self.distance is None

    def __str__(self) -> str:
        return f">{self.w_max}" if self.distance is None else str(self.distance)


@dataclass(frozen=True)
class _SearchContext:
    n: int  # number of searchable qubits
    n_full: int
    qubits: tuple[int, ...]  # searchable position -> qubit index
    m: int  # number of commutation checks in the low bits of a syndrome
    letters: tuple[int, ...]  # 1 = X, 2 = Z, 3 = Y
    single: tuple[tuple[int, ...], ...]  # single[q][letter] -> syndrome


def _make_context(
    code: StabilizerCode,
    dressed: bool,
    letters: tuple[int, ...],
    qubits: tuple[int, ...] | None = None,
) -> _SearchContext:
    checks = list(code.stabilizers)
    detectors: list[PauliOperator] = []
    for a, b in logical_basis(code):
        detectors += [a, b]
    if not dressed:
        for a, b in gauge_pairs(code):
            detectors += [a, b]
    rows = checks + detectors
    if qubits is None:
        qubits = tuple(range(code.n))
    single = []
    for q in qubits:
        by_letter = [0, 0, 0, 0]
        for letter in (1, 2, 3):
            px = (letter & 1) << q
            pz = (letter >> 1) << q
            syn = 0
            for i, r in enumerate(rows):
                if ((px & r.z) ^ (pz & r.x)) >> q & 1:
                    syn |= 1 << i
            by_letter[letter] = syn
        single.append(tuple(by_letter))
    return _SearchContext(len(qubits), code.n, qubits, len(checks), letters, tuple(single))


def _enumerate(ctx: _SearchContext, weight: int, first: range | None = None) -> Iterator[tuple[int, int, tuple[int, ...], tuple[int, ...]]]:
    """Yield ``(syndrome, support_mask, support, letters)`` in a fixed order."""
    n = ctx.n
    single = ctx.single
    letters = ctx.letters
    heads = range(n) if first is None else first
    for head in heads:
        for tail in itertools.combinations(range(head + 1, n), weight - 1):
            support = (head,) + tail
            mask = 0
            for q in support:
                mask |= 1 << q
            rows = [single[q] for q in support]
            for word in itertools.product(letters, repeat=weight):
                syn = 0
                for row, letter in zip(rows, word):
                    syn ^= row[letter]
                yield syn, mask, support, word


def _to_pauli(ctx: _SearchContext, support: Sequence[int], word: Sequence[int]) -> PauliOperator:
    x = z = 0
    for pos, letter in zip(support, word):
        q = ctx.qubits[pos]
        x |= (letter & 1) << q
        z |= (letter >> 1) << q
    return PauliOperator(ctx.n_full, x, z)


_Table = dict[int, list[tuple[int, int, tuple[int, ...], tuple[int, ...]]]]


def _half_table(ctx: _SearchContext, h: int) -> _Table:
    low_mask = (1 << ctx.m) - 1
    table: _Table = {}
    for syn, mask, support, word in _enumerate(ctx, h):
        table.setdefault(syn & low_mask, []).append((syn >> ctx.m, mask, support, word))
    return table


def _search_weight(
    ctx: _SearchContext, w: int, heads: range | None = None, table: _Table | None = None
) -> PauliOperator | None:
    low_mask = (1 << ctx.m) - 1
    if w == 1:
        for syn, _mask, support, word in _enumerate(ctx, 1, heads):
            if not (syn & low_mask) and syn:
                return _to_pauli(ctx, support, word)
        return None
    h = w // 2
    if table is None:
        table = _half_table(ctx, h)
    for syn, mask, support, word in _enumerate(ctx, w - h, heads):
        bucket = table.get(syn & low_mask)
        if not bucket:
            continue
        det = syn >> ctx.m
        for det_b, mask_b, support_b, word_b in bucket:
            if det_b != det and not (mask & mask_b):
                return _to_pauli(ctx, support, word) * _to_pauli(ctx, support_b, word_b)
    return None


_WORKER_CTX: _SearchContext | None = None
_WORKER_TABLES: dict[int, _Table] = {}


def _init_worker(ctx: _SearchContext) -> None:
    global _WORKER_CTX
    _WORKER_CTX = ctx
    _WORKER_TABLES.clear()


def _shard_search(args: tuple[int, int]) -> PauliOperator | None:
    w, head = args
    ctx = _WORKER_CTX
    assert ctx is not None
    table = None
    if w > 1:
        h = w // 2
        if h not in _WORKER_TABLES:
            _WORKER_TABLES[h] = _half_table(ctx, h)
        table = _WORKER_TABLES[h]
    return _search_weight(ctx, w, range(head, head + 1), table)


def _search_alphabet(ctx: _SearchContext, w_max: int, workers: int) -> tuple[int, PauliOperator] | None:
    has_detectors = any(
        ctx.single[q][letter] >> ctx.m for q in range(ctx.n) for letter in ctx.letters
    )
    if not has_detectors:
        return None
    if workers <= 1:
        for w in range(1, w_max + 1):
            hit = _search_weight(ctx, w)
            if hit is not None:
                return w, hit
        return None
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(ctx,)) as pool:
        for w in range(1, w_max + 1):
            # shards are keyed by the lowest qubit of the larger half; taking the
            # first hit in shard order reproduces the serial witness exactly
            results = pool.map(_shard_search, [(w, head) for head in range(ctx.n)])
            for hit in results:
                if hit is not None:
                    return w, hit
    return None


def distance_exact(
    code: StabilizerCode,
    w_max: int,
    dressed: bool = True,
    workers: int = 1,
) -> DistanceResult:
    """Smallest weight of a nontrivial logical operator, searched up to ``w_max``.

    With ``dressed=True`` a candidate must commute with the stabilizers and
    lie outside the group generated by stabilizers and gauge generators.
    With ``dressed=False`` the gauge generators are ignored, so gauge qubits
    count as logical ones.

    Weights are tried in increasing order.  Each weight ``w`` is found by
    meeting in the middle: operators of weight ``w // 2`` are bucketed by
    syndrome and every operator of weight ``w - w // 2`` is matched against
    its bucket.  For ``n`` qubits the cost of weight ``w`` is about
    ``C(n, w - w//2) * 3**(w - w//2)`` syndrome updates plus a table of
    ``C(n, w//2) * 3**(w//2)`` entries; CSS codes drop the ``3**`` factors by
    searching X-type and Z-type operators separately.  Results and witnesses
    do not depend on ``workers``.
    """
    return _bounded_search(code, w_max, dressed, workers, None)


def logical_witness(
    code: StabilizerCode,
    qubits: Iterable[int],
    w_max: int,
    dressed: bool = True,
    workers: int = 1,
) -> DistanceResult:
    """Lightest nontrivial logical supported inside ``qubits``, up to ``w_max``.

    The result bounds the distance from above.  It is the tool for codes too
    large for :func:`distance_exact`, where a good guess of the region holding
    a minimal logical (one boundary, say) keeps the search small.
    """
    region = tuple(sorted(set(qubits)))
    if any(not 0 <= q < code.n for q in region):
        raise ValueError("region qubit out of range")
    return _bounded_search(code, w_max, dressed, workers, region)


def _bounded_search(
    code: StabilizerCode,
    w_max: int,
    dressed: bool,
    workers: int,
    region: tuple[int, ...] | None,
) -> DistanceResult:
    if w_max < 0:
        raise ValueError("w_max must be non-negative")
    if code.n == 0 or w_max == 0:
        return DistanceResult(None, w_max)
    alphabets: list[tuple[int, ...]] = [(1,), (2,)] if code.is_css() else [(1, 2, 3)]
    best: tuple[int, PauliOperator] | None = None
    for letters in alphabets:
        ctx = _make_context(code, dressed, letters, region)
        bound = w_max if best is None else best[0] - 1
        if bound < 1:
            break
        hit = _search_alphabet(ctx, bound, workers)
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit
    if best is None:
        return DistanceResult(None, w_max)
    return DistanceResult(best[0], w_max, best[1])


def default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


# --------------------------------------------------------------------------
# plain-text check-matrix format


_SECTIONS = {"#stabilizers": "stabilizers", "#gauge": "gauge", "#logical": "logicals"}


def parse_check_matrix(text: str) -> StabilizerCode:
    """Parse one Pauli string per line with optional ``#gauge``/``#logical`` sections.

    Lines starting with ``#`` that are not section headers are comments.
    """
    groups: dict[str, list[str]] = {"stabilizers": [], "gauge": [], "logicals": []}
    current = "stabilizers"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key = line.split()[0].lower()
            if key in _SECTIONS:
                current = _SECTIONS[key]
            continue
        if any(ch.upper() not in _LETTER_BITS for ch in line):
            raise ValueError(f"line {lineno}: not a Pauli string: {line!r}")
        groups[current].append(line)
    return StabilizerCode.from_strings(groups["stabilizers"], groups["gauge"], groups["logicals"])


def format_check_matrix(code: StabilizerCode) -> str:
    lines = [str(p) for p in code.stabilizers]
    if code.gauge:
        lines.append("#gauge")
        lines += [str(p) for p in code.gauge]
    if code.logicals:
        lines.append("#logical")
        lines += [str(p) for p in code.logicals]
    return "\n".join(lines) + "\n"


__all__ = [
    "CodeError",
    "DistanceResult",
    "PauliOperator",
    "StabilizerCode",
    "check_commutation",
    "code_k",
    "commutes",
    "default_workers",
    "distance_exact",
    "format_check_matrix",
    "gauge_pairs",
    "gauge_qubit_count",
    "in_group",
    "independent_subset",
    "logical_basis",
    "parse_check_matrix",
    "symplectic_rank",
    "total_k",
]
