"""Lattice code families: triangular, Pauli-boundary, stellated and torus codes."""

from .families import FAMILIES, FamilyParams, build_code
from .lattice import BoundarySegment, LatticeCodeSpec, Plaquette, Seam, dumps, loads, to_document
from .stellated import build_stellated_color_code, build_stellated_surface_code, rate_bound
from .torus import build_torus_color_code, insert_pauli_twist_pair, insert_pauli_wall, ring, straight_path
from .triangular import build_pauli_triangular_code, build_triangular_color_code
from .validate import ValidationReport, encoding_rate, validate_code

__all__ = [
    "FAMILIES",
    "BoundarySegment",
    "FamilyParams",
    "LatticeCodeSpec",
    "Plaquette",
    "Seam",
    "ValidationReport",
    "build_code",
    "build_pauli_triangular_code",
    "build_stellated_color_code",
    "build_stellated_surface_code",
    "build_torus_color_code",
    "build_triangular_color_code",
    "dumps",
    "encoding_rate",
    "insert_pauli_twist_pair",
    "insert_pauli_wall",
    "loads",
    "rate_bound",
    "ring",
    "straight_path",
    "to_document",
    "validate_code",
]
