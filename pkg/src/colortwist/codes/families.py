"""Family parameters and a single entry point for building any supported code."""

from __future__ import annotations

from dataclasses import dataclass

from ..pauli import StabilizerCode
from .lattice import LatticeCodeSpec
from .stellated import SUPPORTED_D, SUPPORTED_S, build_stellated_color_code, build_stellated_surface_code
from .torus import build_torus_color_code
from .triangular import build_pauli_triangular_code, build_triangular_color_code

FAMILIES = ("triangular", "pauli-triangular", "stellated-color", "stellated-surface", "torus")
LATTICES = ("666", "488")


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of one code family member; unused fields stay ``None``."""

    family: str
    d: int | None = None
    s: int | None = None
    lattice: str | None = None
    l: int | None = None  # noqa: E741  side of a Pauli-boundary triangle
    L: int | None = None  # torus size, the side being 3L

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        needs = {
            "triangular": ("lattice", "d"),
            "pauli-triangular": ("l",),
            "stellated-color": ("lattice", "s", "d"),
            "stellated-surface": ("s", "d"),
            "torus": ("L",),
        }[self.family]
        missing = [name for name in needs if getattr(self, name) is None]
        if missing:
            raise ValueError(f"family {self.family} needs {', '.join(missing)}")
        if "lattice" in needs and self.lattice not in LATTICES:
            raise ValueError(f"lattice must be 666 or 488, got {self.lattice!r}")
        if self.family.startswith("stellated") and (self.s not in SUPPORTED_S or self.d not in SUPPORTED_D):
            raise ValueError(
                f"(s={self.s}, d={self.d}) is outside the supported grid s in {SUPPORTED_S}, d in {SUPPORTED_D}"
            )
        if self.family == "stellated-surface" and self.s is not None and self.s % 2 == 0:
            raise ValueError(f"stellated surface codes need odd s, got {self.s}")

    @classmethod
    def from_metadata(cls, meta: dict) -> FamilyParams:
        fields = {k: meta.get(k) for k in ("d", "s", "lattice", "l", "L")}
        if fields["lattice"] is not None:
            fields["lattice"] = str(fields["lattice"])
        return cls(meta["family"], **fields)

    @property
    def expected_k(self) -> int:
        """Logical qubits the family is meant to encode (gauge qubits excluded)."""
        if self.family in ("triangular", "pauli-triangular"):
            return 1
        if self.family == "stellated-color":
            assert self.s is not None
            return self.s - 1 if self.s % 2 else self.s - 2
        if self.family == "stellated-surface":
            assert self.s is not None
            return (self.s - 1) // 2
        return 4

    @property
    def expected_gauge(self) -> int:
        return 1 if self.family == "stellated-color" and self.s is not None and self.s % 2 else 0

    @property
    def expected_distance(self) -> int | None:
        if self.family == "pauli-triangular":
            return self.l
        if self.family == "torus":
            return None
        if self.family == "stellated-color" and self.d is not None and self.s is not None and self.s % 2 == 0:
            return self.d + 1  # no puncture: logicals cross the center
        return self.d

    @property
    def weight_cap(self) -> int:
        """Largest plaquette weight allowed away from centers and seams."""
        if self.family == "stellated-surface":
            return 4
        if self.family == "pauli-triangular":
            return 6
        return 8 if self.lattice == "488" else 6


def build_code(params: FamilyParams) -> tuple[LatticeCodeSpec, StabilizerCode]:
    p = params
    if p.family == "triangular":
        return build_triangular_color_code(p.lattice or "", p.d or 0)
    if p.family == "pauli-triangular":
        return build_pauli_triangular_code(p.l or 0)
    if p.family == "stellated-color":
        return build_stellated_color_code(p.lattice or "", p.s or 0, p.d or 0)
    if p.family == "stellated-surface":
        return build_stellated_surface_code(p.s or 0, p.d or 0)
    return build_torus_color_code(p.L or 0)
