"""Family-level checks on generated codes, and the exact encoding rate."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..pauli import (
    CodeError,
    PauliOperator,
    StabilizerCode,
    check_commutation,
    code_k,
    commutes,
    distance_exact,
    gauge_qubit_count,
    in_group,
    symplectic_rank,
)
from .families import FamilyParams
from .lattice import LatticeCodeSpec


def encoding_rate(code: StabilizerCode, d: int) -> Fraction:
    """``c = k d^2 / n`` as an exact rational, with ``k`` the logical count."""
    if code.n == 0:
        raise ValueError("rate of an empty code is undefined")
    return Fraction(code_k(code) * d * d, code.n)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    params: FamilyParams
    n: int
    k: int | None = None
    gauge_qubits: int | None = None
    distance: str | None = None
    rate: Fraction | None = None
    weights: tuple[int, ...] = ()
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def summary(self) -> str:
        d = self.distance if self.distance is not None else "?"
        return f"[[{self.n},{self.k},{d}]]"

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _witness_ok(code: StabilizerCode, witness: PauliOperator) -> bool:
    if not all(commutes(witness, s) for s in code.stabilizers):
        return False
    return not in_group(witness, list(code.stabilizers) + list(code.gauge))


def validate_code(
    code: StabilizerCode,
    expected: FamilyParams,
    spec: LatticeCodeSpec | None = None,
    distance_max: int = 5,
    dressed: bool = True,
    workers: int = 1,
) -> ValidationReport:
    """Run every family check; failures become report entries, never exceptions.

    The exact distance search runs when the expected distance is at most
    ``distance_max``.  Larger codes are checked through the weight-``d``
    witness stored in their metadata, which bounds the distance from above.
    """
    report = ValidationReport(expected, code.n)
    report.add("commutation", check_commutation(code) is None)
    rank = symplectic_rank(code.stabilizers)
    report.add("independent generators", rank == len(code.stabilizers), f"rank {rank} of {len(code.stabilizers)}")
    if rank != len(code.stabilizers):
        return report
    try:
        report.k = code_k(code)
        report.gauge_qubits = gauge_qubit_count(code)
    except CodeError as exc:
        report.add("gauge structure", False, str(exc))
        return report
    report.add("k", report.k == expected.expected_k, f"k = {report.k}, expected {expected.expected_k}")
    report.add(
        "gauge qubits",
        report.gauge_qubits == expected.expected_gauge,
        f"{report.gauge_qubits}, expected {expected.expected_gauge}",
    )

    if spec is not None:
        report.weights = tuple(sorted({len(p.qubits) for p in spec.plaquettes if p.role == "stabilizer"}))
        # centers and seams are allowed to exceed the bulk cap
        bulk = [len(p.qubits) for p in spec.plaquettes if p.role == "stabilizer" and p.color in ("r", "b", "g")]
        if expected.family == "stellated-surface":
            bulk = [len(p.qubits) for p in spec.plaquettes if p.color in ("r", "b")]
        cap = expected.weight_cap
        report.add("weight cap", max(bulk, default=0) <= cap, f"max {max(bulk, default=0)}, cap {cap}")
    else:
        report.weights = tuple(sorted({p.weight for p in code.stabilizers}))

    target = expected.expected_distance
    if target is not None:
        if target <= distance_max:
            result = distance_exact(code, target, dressed=dressed, workers=workers)
            report.distance = str(result)
            report.add("distance", result.distance == target, f"{result}, expected {target}")
        else:
            raw = code.metadata.get("witness")
            if raw is None:
                report.add("distance witness", False, "no witness recorded")
            else:
                witness = PauliOperator.from_string(raw)
                report.distance = f"<={witness.weight}"
                report.add(
                    "distance witness",
                    witness.weight == target and _witness_ok(code, witness),
                    f"weight {witness.weight}, expected {target}",
                )
        if report.k:
            report.rate = encoding_rate(code, target)
    return report
