"""Triangular color codes and the Pauli-boundary triangle codes.

Both color-code lattices are built on their dual triangulations: qubits are
triangles, plaquettes are vertices, and a vertex's plaquette acts on the
triangles around it.  A color boundary of color ``c`` is a straight line of
``c``-colored vertices that is left out; the region is everything on one
side of three such lines.

* 6.6.6: the triangular lattice with vertex ``(a, b)`` colored
  ``(a - b) mod 3``.
* 4.8.8: the tetrakis square lattice.  In doubled coordinates the green
  squares sit at odd points and the octagons at even points, colored by
  ``(x + y) / 2 mod 2``.  Along the two diagonal sides the green squares are
  cut down to two qubits; such a weight-two plaquette fixes its qubit pair in
  a Bell state, so the pair is removed.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

from ..pauli import StabilizerCode, logical_witness
from .lattice import BoundarySegment, LatticeCodeSpec, Plaquette, relabel

Vertex = tuple[int, int]
Triangle = tuple[Vertex, Vertex, Vertex]

_SQRT3_2 = math.sqrt(3) / 2
_COLOR3 = ("r", "g", "b")
_BOUNDARY_OF = {"r": "red", "g": "green", "b": "blue"}


def require_odd_distance(d: int, low: int = 3) -> None:
    if d < low or d % 2 == 0:
        raise ValueError(f"distance must be odd and at least {low}, got {d}")


def tri_pos(v: Vertex) -> tuple[float, float]:
    """Cartesian position of a triangular-lattice vertex."""
    a, b = v
    return (a + b / 2, b * _SQRT3_2)


def centroid(points: Sequence[tuple[float, float]]) -> tuple[float, float]:
    return (sum(p[0] for p in points) / len(points), sum(p[1] for p in points) / len(points))


def lattice_triangles(radius: int) -> list[Triangle]:
    """Up and down triangles of the triangular lattice with corners in a box."""
    out: list[Triangle] = []
    for a in range(-radius, radius):
        for b in range(-radius, radius):
            out.append(((a, b), (a + 1, b), (a, b + 1)))
            out.append(((a + 1, b), (a, b + 1), (a + 1, b + 1)))
    return out


def incidence(triangles: Sequence[tuple]) -> dict:
    inc: dict = {}
    for k, t in enumerate(triangles):
        for v in t:
            inc.setdefault(v, []).append(k)
    return inc


def attach_witness(
    code: StabilizerCode, region: Sequence[int], d: int, threshold: int = 6
) -> StabilizerCode:
    """Record an explicit weight-``d`` logical in the metadata for large ``d``.

    Below ``threshold`` the exact distance search is cheap and nothing is
    added.  The witness is the lightest logical inside ``region``; when its
    weight is not ``d`` the entry is still recorded so validation can flag it.
    """
    if d < threshold:
        return code
    found = logical_witness(code, region, d)
    meta = dict(code.metadata)
    if found.witness is not None:
        meta["witness"] = str(found.witness)
        meta["witness_weight"] = found.distance
    else:
        meta["witness"] = None
    return StabilizerCode(code.n, code.stabilizers, code.gauge, code.logicals, meta)


# ---------------------------------------------------------------- 6.6.6


def _region_666(d: int) -> tuple[int, int, int]:
    # sides a + 2b = F, -2a - b = G, a - b = H with colors F, G, H mod 3;
    # the triangle holds (3d^2 + 1)/4 qubits when F + G + H = 3(d + 1)/2
    return 0, 3 * (d + 1) // 2 - 2, 2


def triangular_666(d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    require_odd_distance(d)
    F, G, H = _region_666(d)

    def inside(v: Vertex) -> bool:
        a, b = v
        return a + 2 * b <= F and -2 * a - b <= G and a - b <= H

    sides: list[tuple[str, Callable[[Vertex], bool]]] = [
        (_COLOR3[F % 3], lambda v: v[0] + 2 * v[1] == F),
        (_COLOR3[G % 3], lambda v: -2 * v[0] - v[1] == G),
        (_COLOR3[H % 3], lambda v: v[0] - v[1] == H),
    ]
    tris = [t for t in lattice_triangles(2 * d + 4) if all(inside(v) for v in t)]
    pos = {t: centroid([tri_pos(v) for v in t]) for t in tris}
    tris.sort(key=lambda t: (round(pos[t][1], 6), round(pos[t][0], 6)))
    index, qubits = relabel(tris, pos)
    inc = incidence(tris)
    plaquettes = []
    for v in sorted(inc, key=lambda v: (v[1], v[0])):
        if any(on(v) for _, on in sides):
            continue
        plaquettes.append(Plaquette(tuple(sorted(inc[v])), _COLOR3[(v[0] - v[1]) % 3]))
    boundaries = [
        BoundarySegment(_BOUNDARY_OF[col], tuple(sorted({k for v, ks in inc.items() if on(v) for k in ks})))
        for col, on in sides
    ]
    spec = LatticeCodeSpec(
        qubits, plaquettes, boundaries, [], {"family": "triangular", "lattice": "666", "d": d}
    )
    code = spec.compile()
    return spec, attach_witness(code, boundaries[0].qubits, d)


# ---------------------------------------------------------------- 4.8.8


def triangular_488(d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    require_odd_distance(d)
    m = (d + 1) // 2
    y0, red_line, blue_line = -1, 4 * m, -2  # y >= y0, x + y <= red_line, y - x <= blue_line
    apex = ((red_line - blue_line) // 2, (red_line + blue_line) // 2)

    def inside(v: Vertex) -> bool:
        x, y = v
        return y >= y0 and x + y <= red_line and y - x <= blue_line

    def color(v: Vertex) -> str:
        x, y = v
        if x % 2:
            return "g"
        return "r" if (x + y) // 2 % 2 == 0 else "b"

    def omitted(v: Vertex) -> bool:
        c = color(v)
        x, y = v
        return (
            (c == "g" and y == y0)
            or (c == "r" and x + y == red_line)
            or (c == "b" and y - x == blue_line)
        )

    span = 4 * m + 6
    tris: list[Triangle] = []
    for gx in range(-span, span, 2):
        for gy in range(-span, span, 2):
            g = (gx + 1, gy + 1)
            corners = [(gx, gy), (gx + 2, gy), (gx + 2, gy + 2), (gx, gy + 2)]
            for k in range(4):
                t = (g, corners[k], corners[(k + 1) % 4])
                if apex not in t and all(inside(v) for v in t):
                    tris.append(t)
    inc = incidence(tris)
    faces = {v: ks for v, ks in inc.items() if not omitted(v)}
    bell = {k for ks in faces.values() if len(ks) == 2 for k in ks}
    kept = [t for k, t in enumerate(tris) if k not in bell]
    pos = {t: centroid([(x / 2, y / 2) for x, y in t]) for t in kept}
    kept.sort(key=lambda t: (round(pos[t][1], 6), round(pos[t][0], 6)))
    index, qubits = relabel(kept, pos)
    old_to_new = {k: index[t] for k, t in enumerate(tris) if t in index}

    plaquettes = []
    for v in sorted(faces, key=lambda v: (v[1], v[0])):
        ks = faces[v]
        if len(ks) == 2:
            continue
        plaquettes.append(Plaquette(tuple(sorted(old_to_new[k] for k in ks if k not in bell)), color(v)))

    def side_qubits(on: Callable[[Vertex], bool]) -> tuple[int, ...]:
        return tuple(sorted({old_to_new[k] for v, ks in inc.items() if on(v) for k in ks if k in old_to_new}))

    boundaries = [
        BoundarySegment("green", side_qubits(lambda v: v[1] == y0)),
        BoundarySegment("red", side_qubits(lambda v: v[0] + v[1] == red_line)),
        BoundarySegment("blue", side_qubits(lambda v: v[1] - v[0] == blue_line)),
    ]
    spec = LatticeCodeSpec(
        qubits, plaquettes, boundaries, [], {"family": "triangular", "lattice": "488", "d": d}
    )
    code = spec.compile()
    return spec, attach_witness(code, boundaries[0].qubits, d)


def build_triangular_color_code(lattice: str | int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """Triangular color code on the 6.6.6 or 4.8.8 lattice with odd distance ``d``."""
    key = str(lattice)
    if key == "666":
        return triangular_666(d)
    if key == "488":
        return triangular_488(d)
    raise ValueError(f"lattice must be 666 or 488, got {lattice!r}")


# ---------------------------------------------------------------- Pauli boundaries


def build_pauli_triangular_code(l: int) -> tuple[LatticeCodeSpec, StabilizerCode]:  # noqa: E741
    """Triangle of ``l**2`` qubits whose three sides are x, y and z Pauli boundaries.

    Qubits are the small triangles of a side-``l`` subdivision; interior
    vertices carry XZ plaquettes and side vertices carry one single-basis
    plaquette whose letter is that of the side.  Going counterclockwise from
    the bottom the sides are x, y, z.  Qubits are numbered upward-pointing
    triangles first (bottom row to top, right to left within a row), then
    the downward-pointing ones in the same order; for ``l = 2`` this gives
    generators ``X1 X2 X4``, ``Y1 Y3 Y4`` and ``Z2 Z3 Z4``.
    """
    if l < 2:
        raise ValueError(f"side length must be at least 2, got {l}")
    ups = [(a, b) for b in range(l) for a in range(l - b - 1, -1, -1)]
    downs = [(a, b) for b in range(l) for a in range(l - b - 2, -1, -1)]
    tris: list[Triangle] = [((a, b), (a + 1, b), (a, b + 1)) for a, b in ups]
    tris += [((a + 1, b), (a, b + 1), (a + 1, b + 1)) for a, b in downs]
    pos = {t: centroid([tri_pos(v) for v in t]) for t in tris}
    _, qubits = relabel(tris, pos)
    inc = incidence(tris)
    plaquettes = []
    members: dict[str, set[int]] = {"x": set(), "y": set(), "z": set()}
    for v in sorted(inc, key=lambda v: (v[1], v[0])):
        a, b = v
        on = {"x": b == 0, "y": a + b == l, "z": a == 0}
        sides = [s for s, flag in on.items() if flag]
        color = _COLOR3[(a - b) % 3]
        if len(sides) >= 2:
            continue  # corner: a single qubit, no plaquette
        qs = tuple(sorted(inc[v]))
        if sides:
            members[sides[0]].update(qs)
            plaquettes.append(Plaquette(qs, color, sides[0].upper()))
        else:
            plaquettes.append(Plaquette(qs, color))
    boundaries = [BoundarySegment(s, tuple(sorted(members[s]))) for s in ("x", "y", "z")]
    spec = LatticeCodeSpec(qubits, plaquettes, boundaries, [], {"family": "pauli-triangular", "l": l})
    return spec, spec.compile()

