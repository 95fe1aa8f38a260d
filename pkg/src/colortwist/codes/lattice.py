"""Geometric code descriptions and their compilation to stabilizer codes.

A :class:`LatticeCodeSpec` lists qubits with positions, plaquettes with a
color and a basis assignment, boundary segments and seams.  Compiling a spec
gives a :class:`~colortwist.pauli.StabilizerCode`:

* an ``XZ`` plaquette contributes an X-type and a Z-type generator;
* ``X``, ``Y`` or ``Z`` plaquettes contribute one generator;
* qubits listed in ``swapped`` have X and Z exchanged (the plaquette sits
  across a wall that exchanges the two Pauli labels);
* ``overrides`` fixes the letter on individual qubits of a single-basis
  plaquette;
* plaquettes with ``role="gauge"`` compile to gauge generators.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..pauli import PauliOperator, StabilizerCode, independent_subset, logical_basis

BASES = ("XZ", "X", "Y", "Z")
COLORS = ("r", "g", "b", "seam")
BOUNDARY_TYPES = ("red", "green", "blue", "x", "y", "z")
_SWAP = {"X": "Z", "Z": "X", "Y": "Y"}


@dataclass(frozen=True)
class Plaquette:
    qubits: tuple[int, ...]
    color: str
    basis: str = "XZ"
    swapped: tuple[int, ...] = ()
    overrides: tuple[tuple[int, str], ...] = ()
    role: str = "stabilizer"

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {self.basis!r}")
        if self.color not in COLORS:
            raise ValueError(f"color must be one of {COLORS}, got {self.color!r}")
        if self.role not in ("stabilizer", "gauge"):
            raise ValueError(f"unknown plaquette role {self.role!r}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError("plaquette lists a qubit twice")
        extra = (set(self.swapped) | {q for q, _ in self.overrides}) - set(self.qubits)
        if extra:
            raise ValueError(f"qubits {sorted(extra)} are not on the plaquette")

    def operators(self, n: int) -> list[PauliOperator]:
        letters = ("X", "Z") if self.basis == "XZ" else (self.basis,)
        out = []
        for letter in letters:
            sparse = {q: letter for q in self.qubits}
            for q in self.swapped:
                sparse[q] = _SWAP[letter]
            for q, forced in self.overrides:
                sparse[q] = forced
            out.append(PauliOperator.from_sparse(n, sparse))
        return out


@dataclass(frozen=True)
class BoundarySegment:
    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in BOUNDARY_TYPES:
            raise ValueError(f"boundary type must be one of {BOUNDARY_TYPES}")


@dataclass(frozen=True)
class Seam:
    wall: str
    path: tuple[int, ...]  # plaquette indices the wall passes through


@dataclass
class LatticeCodeSpec:
    qubits: list[tuple[int, tuple[float, float]]]
    plaquettes: list[Plaquette]
    boundaries: list[BoundarySegment] = field(default_factory=list)
    seams: list[Seam] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.qubits)

    def check(self) -> None:
        """Structural invariants that hold before compilation."""
        ids = [q for q, _ in self.qubits]
        if ids != list(range(len(ids))):
            raise ValueError("qubit ids must be 0 .. n-1 in order")
        for p in self.plaquettes:
            if any(not 0 <= q < self.n for q in p.qubits):
                raise ValueError("plaquette refers to a missing qubit")
            if p.basis == "XZ" and p.role == "stabilizer" and len(p.qubits) % 2:
                raise ValueError(f"XZ plaquette of odd size {len(p.qubits)}")

    def compile(self, logicals: Sequence[PauliOperator] = ()) -> StabilizerCode:
        """Stabilizer code with independent generators, in plaquette order."""
        self.check()
        stabs: list[PauliOperator] = []
        gauge: list[PauliOperator] = []
        for p in self.plaquettes:
            (gauge if p.role == "gauge" else stabs).extend(p.operators(self.n))
        return StabilizerCode(
            self.n,
            tuple(independent_subset(stabs)),
            tuple(gauge),
            tuple(logicals),
            dict(self.metadata),
        )

    def max_plaquette_weight(self, role: str = "stabilizer") -> int:
        return max((len(p.qubits) for p in self.plaquettes if p.role == role), default=0)


def relabel(
    qubit_keys: Sequence[Any],
    positions: Mapping[Any, tuple[float, float]],
) -> tuple[dict[Any, int], list[tuple[int, tuple[float, float]]]]:
    """Assign ids 0..n-1 to qubit keys in the given order."""
    index = {key: i for i, key in enumerate(qubit_keys)}
    qubits = [(i, _round_pos(positions[key])) for i, key in enumerate(qubit_keys)]
    return index, qubits


def _round_pos(p: tuple[float, float]) -> tuple[float, float]:
    return (round(float(p[0]), 6) + 0.0, round(float(p[1]), 6) + 0.0)


# ---------------------------------------------------------------- JSON exchange

JSON_FIELDS = ("n", "qubits", "plaquettes", "boundaries", "seams", "stabilizers", "gauge", "logicals", "metadata")


def to_document(spec: LatticeCodeSpec | None, code: StabilizerCode, include_logicals: bool = True) -> dict[str, Any]:
    """JSON-ready document with a fixed field order."""
    doc: dict[str, Any] = {"n": code.n}
    if spec is not None:
        doc["qubits"] = [{"id": q, "pos": list(pos)} for q, pos in spec.qubits]
        doc["plaquettes"] = [_plaquette_doc(p) for p in spec.plaquettes]
        doc["boundaries"] = [{"type": b.kind, "qubits": list(b.qubits)} for b in spec.boundaries]
        doc["seams"] = [{"wall": s.wall, "path": list(s.path)} for s in spec.seams]
    doc["stabilizers"] = [str(p) for p in code.stabilizers]
    doc["gauge"] = [str(p) for p in code.gauge]
    if include_logicals:
        logicals = list(code.logicals)
        if not logicals:
            for a, b in logical_basis(code):
                logicals += [a, b]
        doc["logicals"] = [str(p) for p in logicals]
    doc["metadata"] = _jsonable(code.metadata)
    return doc


def _plaquette_doc(p: Plaquette) -> dict[str, Any]:
    d: dict[str, Any] = {"qubits": list(p.qubits), "color": p.color, "basis": p.basis}
    if p.swapped:
        d["swapped"] = list(p.swapped)
    if p.overrides:
        d["overrides"] = {str(q): letter for q, letter in p.overrides}
    if p.role != "stabilizer":
        d["role"] = p.role
    return d


def _jsonable(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def dumps(spec: LatticeCodeSpec | None, code: StabilizerCode) -> str:
    return json.dumps(to_document(spec, code), indent=1) + "\n"


def from_document(doc: Mapping[str, Any]) -> tuple[LatticeCodeSpec | None, StabilizerCode]:
    """Inverse of :func:`to_document`; stabilizers are taken verbatim."""
    try:
        n = int(doc["n"])
        stabs = tuple(PauliOperator.from_string(s) for s in doc["stabilizers"])
        gauge = tuple(PauliOperator.from_string(s) for s in doc.get("gauge", []))
        logicals = tuple(PauliOperator.from_string(s) for s in doc.get("logicals", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed code document: {exc}") from exc
    if any(p.n != n for p in stabs + gauge + logicals):
        raise ValueError("operator length does not match n")
    metadata = dict(doc.get("metadata", {}))
    spec = None
    if "qubits" in doc:
        spec = LatticeCodeSpec(
            [(int(q["id"]), (float(q["pos"][0]), float(q["pos"][1]))) for q in doc["qubits"]],
            [
                Plaquette(
                    tuple(p["qubits"]),
                    p["color"],
                    p["basis"],
                    tuple(p.get("swapped", ())),
                    tuple((int(q), letter) for q, letter in p.get("overrides", {}).items()),
                    p.get("role", "stabilizer"),
                )
                for p in doc.get("plaquettes", [])
            ],
            [BoundarySegment(b["type"], tuple(b["qubits"])) for b in doc.get("boundaries", [])],
            [Seam(s["wall"], tuple(s["path"])) for s in doc.get("seams", [])],
            metadata,
        )
    return spec, StabilizerCode(n, stabs, gauge, logicals, metadata)


def loads(text: str) -> tuple[LatticeCodeSpec | None, StabilizerCode]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("code document must be a JSON object")
    return from_document(doc)


def qubits_of(plaquettes: Iterable[Plaquette]) -> set[int]:
    out: set[int] = set()
    for p in plaquettes:
        out.update(p.qubits)
    return out
