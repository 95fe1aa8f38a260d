"""Stellated codes: ``s`` copies of a wedge glued cyclically around a center.

Every construction glues ``s`` wedges around a central plaquette.  Going
once around the center exchanges two labels (red and blue for color codes,
X and Z for the surface code), so for odd ``s`` one gluing is made across a
seam that carries the exchange.

* 4.8.8: a square-lattice cone of ``s`` quadrants in which every vertex is
  fattened into a green square.  The center becomes a green ``s``-gon.
* 6.6.6: a triangulated cone of ``s`` sixty-degree wedges (dual picture:
  qubits are triangles, plaquettes are vertices).  The center is a vertex
  of degree ``s``.  Each wedge is a rhombus whose far tip is a corner
  between a red and a blue boundary, so the outline is an ``s``-pointed
  star.
* surface code: square wedges of varying size around a central
  ``(s + 1)``-gon, one of whose corners starts a line of qubits carrying the
  X/Z exchange; the central plaquette acts as Y on that corner.

For odd ``s`` the two color-code centers have odd weight, so their X and Z
operators anticommute.  They are kept as a gauge pair rather than
stabilizers.  For even ``s`` the center is an ordinary plaquette.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from ..pauli import StabilizerCode
from .lattice import BoundarySegment, LatticeCodeSpec, Plaquette, Seam, relabel
from .triangular import attach_witness, centroid, require_odd_distance

SUPPORTED_S = (3, 4, 5, 6, 7)
SUPPORTED_D = (3, 5, 7, 9)


def _require_grid(s: int, d: int) -> None:
    require_odd_distance(d)
    if s not in SUPPORTED_S or d not in SUPPORTED_D:
        raise ValueError(
            f"(s={s}, d={d}) is outside the supported grid s in {SUPPORTED_S}, d in {SUPPORTED_D}"
        )


def _unit(angle: float) -> tuple[float, float]:
    return (math.cos(angle), math.sin(angle))


def _combo(a: float, u: tuple[float, float], b: float, v: tuple[float, float]) -> tuple[float, float]:
    return (a * u[0] + b * v[0], a * u[1] + b * v[1])


def rate_bound(family: str, s: int) -> Fraction:
    """Large-distance limit of ``k d^2 / n`` for a stellated family."""
    bounds = {
        "488": Fraction(4) - Fraction(4, s),
        "666": Fraction(8, 3) - Fraction(8, 3 * s),
        "surface": Fraction(2) - Fraction(2, s),
    }
    if family not in bounds:
        raise ValueError(f"unknown stellated family {family!r}")
    return bounds[family]


def _expected_distance(s: int, d: int) -> int:
    """Distance of the color-code cone built for target ``d``.

    With even ``s`` there is no seam and no puncture; the shortest logicals
    then cross the center, and the same wedges give distance ``d + 1``.
    """
    return d if s % 2 else d + 1


# ---------------------------------------------------------------- 4.8.8


def _plan_488(d: int) -> tuple[int, bool]:
    """Quadrant size and whether the far corner is notched.

    A quadrant of ``L x L`` squares gives distance ``4L + 1``; removing its
    far corner vertex gives ``4L - 1``.
    """
    return (d + 1) // 4, d % 4 == 3


def stellated_488(s: int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    _require_grid(s, d)
    L, notched = _plan_488(d)
    puncture = s % 2 == 1

    def vert(i: int, a: int, b: int) -> tuple:
        i %= s
        if a == 0 and b == 0:
            return ("O",)
        if b == 0:
            return ("R", i, a)
        if a == 0:
            return ("R", (i + 1) % s, b)
        return ("Q", i, a, b)

    quadrant = {(a, b) for a in range(L + 1) for b in range(L + 1)}
    if notched:
        quadrant.discard((L, L))
    region = sorted({vert(i, a, b) for i in range(s) for a, b in quadrant})
    nbrs: dict[tuple, set[tuple]] = {v: set() for v in region}
    for i in range(s):
        for a, b in quadrant:
            for da, db in ((1, 0), (0, 1), (-1, 0), (0, -1)):
                if a + da >= 0 and b + db >= 0:
                    nbrs[vert(i, a, b)].add(vert(i, a + da, b + db))

    angle = 2 * math.pi / s

    def vpos(v: tuple) -> tuple[float, float]:
        if v[0] == "O":
            return (0.0, 0.0)
        if v[0] == "R":
            return _combo(2.0 * v[2], _unit(v[1] * angle), 0, (0, 0))
        _, i, a, b = v
        return _combo(2.0 * a, _unit(i * angle), 2.0 * b, _unit((i + 1) * angle))

    keys = [(v, w) for v in region for w in sorted(nbrs[v])]
    pos = {}
    for v, w in keys:
        pv, pw = vpos(v), vpos(w)
        pos[(v, w)] = (pv[0] + 0.3 * (pw[0] - pv[0]), pv[1] + 0.3 * (pw[1] - pv[1]))
    index, qubits = relabel(keys, pos)

    plaquettes: list[Plaquette] = []
    seam_path: list[int] = []
    for v in region:
        qs = tuple(sorted(index[(v, w)] for w in nbrs[v]))
        if v == ("O",):
            plaquettes.append(Plaquette(qs, "g", role="gauge" if puncture else "stabilizer"))
            continue
        if puncture and v[0] == "R" and v[1] == 0:
            seam_path.append(len(plaquettes))
        plaquettes.append(Plaquette(qs, "g"))

    sides: dict[tuple[int, str], set[int]] = {}
    for i in range(s):
        for a in range(L + 1):
            for b in range(L + 1):
                corners = [(a, b), (a + 1, b), (a + 1, b + 1), (a, b + 1)]
                inside = [c in quadrant for c in corners]
                if not any(inside):
                    continue
                color = "r" if (a + b + i) % 2 == 0 else "b"
                qs = []
                for k, c in enumerate(corners):
                    if inside[k]:
                        v = vert(i, *c)
                        for other in (corners[k - 1], corners[(k + 1) % 4]):
                            qs.append(index[(v, vert(i, *other))])
                if all(inside):
                    plaquettes.append(Plaquette(tuple(sorted(qs)), color))
                    continue
                if sum(inside) == 1:
                    continue  # lone corner of the far vertex
                if notched and (a, b) == (L - 1, L - 1):
                    keep = True
                elif a >= L:
                    keep = (a + b + i) % 2 == i % 2
                else:
                    keep = (a + b + i) % 2 == (i + 1) % 2
                if keep:
                    plaquettes.append(Plaquette(tuple(sorted(qs)), color))
                    # the missing color names the boundary
                    sides.setdefault((i, "blue" if color == "r" else "red"), set()).update(qs)

    spec = LatticeCodeSpec(
        qubits,
        plaquettes,
        _segments(sides),
        [Seam("G", tuple(seam_path))] if puncture else [],
        {
            "family": "stellated-color",
            "lattice": "488",
            "s": s,
            "d": d,
            "gauge_qubits": int(puncture),
            "expected_distance": _expected_distance(s, d),
        },
    )
    code = spec.compile()
    def near(quads: set[int], rays: set[int]) -> list[int]:
        out = {index[k] for k in keys if k[0] == ("O",) or (k[0][0] == "R" and k[0][1] in rays)}
        for (i, _), qs in sides.items():
            if i in quads:
                out.update(qs)
        return sorted(out)

    if puncture:
        # minimal logicals run from the center into the first quadrant's boundary
        first = {vert(0, a, b) for a, b in quadrant}
        regions = [[index[k] for k in keys if k[0] in first]]
    else:
        # without a puncture they cross the center between two boundaries
        diagonal = {vert(i, t, t) for i in (1, s - 1) for t in range(1, L + 1)}
        band = sorted(set(near({1, s - 1}, set())) | {index[k] for k in keys if k[0] in diagonal})
        regions = [near({0, s - 1}, {0}), near({1, s - 1}, {0, 1})]
        regions = regions + [band] if notched else [band] + regions
    return spec, _first_witness(code, regions, _expected_distance(s, d))


def _segments(sides: dict[tuple[int, str], set[int]]) -> list[BoundarySegment]:
    """One boundary segment per wedge side, in wedge order."""
    return [BoundarySegment(kind, tuple(sorted(q))) for (_, kind), q in sorted(sides.items())]


def _first_witness(code: StabilizerCode, regions: Sequence[Sequence[int]], d: int) -> StabilizerCode:
    """Witness from the first candidate region holding a weight-``d`` logical."""
    out = code
    for region in regions:
        out = attach_witness(code, region, d)
        if out.metadata.get("witness_weight") == d:
            break
    return out


# ---------------------------------------------------------------- 6.6.6

_Vec = tuple[int, int]


def _rot(v: _Vec) -> _Vec:
    """Sixty-degree rotation of the triangular lattice about the origin."""
    a, b = v
    return (-b, a + b)


def _rot_inv(v: _Vec) -> _Vec:
    a, b = v
    return (a + b, -a)


def _canonical(j: int, v: _Vec, s: int) -> tuple[int, _Vec]:
    """Representative of a lattice point written in the frame of wedge ``j``.

    Wedge frames cover the sector ``b >= a`` (lower ray along ``(1, 1)``)
    and ``2a + b > 0`` (upper ray along ``(-1, 2)``, which belongs to the
    next wedge).  The center is ``(-1, (0, 0))``.
    """
    if v == (0, 0):
        return (-1, (0, 0))
    for _ in range(2 * s + 4):
        a, b = v
        if b - a < 0:
            v, j = _rot(v), (j - 1) % s
        elif 2 * a + b <= 0:
            v, j = _rot_inv(v), (j + 1) % s
        else:
            return (j, v)
    raise AssertionError("point does not settle into a wedge")


def _levels_666(d: int) -> tuple[int, int]:
    """Offsets ``(G1, G2)`` of the two outer sides of a wedge.

    Side one is the line ``2a + b = G1`` through the end of the lower ray,
    side two the line ``b - a = G2`` through the end of the upper ray.  With
    ``G1 = 1`` and ``G2 = 2 (mod 3)`` the two sides have the two non-center
    colors, and side two of one wedge continues side one of the next with a
    one-step jog at the ray.  ``G1 + G2 = 3(d + 1)/2`` sets the distance.
    """
    g1 = 3 * ((d + 1) // 4) + 1
    return g1, 3 * (d + 1) // 2 - g1


def stellated_666(s: int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    _require_grid(s, d)
    G1, G2 = _levels_666(d)
    puncture = s % 2 == 1

    def side(v: tuple[int, _Vec]) -> int | None:
        """0 inside, 1 or 2 on that side, None outside the wedge."""
        j, (a, b) = v
        if j == -1:
            return 0
        e1, e2 = 2 * a + b, b - a
        if e1 > G1 or e2 > G2:
            return None
        return 1 if e1 == G1 else 2 if e2 == G2 else 0

    tris: set[tuple] = set()
    rays: dict[int, set[tuple]] = {}  # triangles touching the lower ray of each wedge
    span = max(G1, G2) + 2
    for j in range(s):
        for a in range(-span, span + 1):
            for b in range(-span, span + 1):
                for tri in (((a, b), (a + 1, b), (a, b + 1)), ((a + 1, b), (a, b + 1), (a + 1, b + 1))):
                    ca = sum(p[0] for p in tri)
                    cb = sum(p[1] for p in tri)
                    # the centroid picks the owning wedge; ties on the lower ray stay here
                    if not (cb - ca >= 0 and 2 * ca + cb > 0):
                        continue
                    verts = tuple(sorted(_canonical(j, p, s) for p in tri))
                    if all(side(v) is not None for v in verts):
                        tris.add(verts)
                        if any(p[0] == p[1] for p in tri):
                            rays.setdefault(j, set()).add(verts)

    wedge_angle = 2 * math.pi / s

    def vpos(v: tuple[int, _Vec]) -> tuple[float, float]:
        j, (a, b) = v
        if j == -1:
            return (0.0, 0.0)
        x, y = a + b / 2, b * math.sqrt(3) / 2
        r, theta = math.hypot(x, y), math.atan2(y, x)
        local = (theta - math.pi / 6) / (math.pi / 3)  # 0 on the lower ray, 1 on the upper
        return (r * math.cos((j + local) * wedge_angle), r * math.sin((j + local) * wedge_angle))

    ordered = sorted(tris)
    pos = {t: centroid([vpos(v) for v in t]) for t in ordered}
    index, qubits = relabel(ordered, pos)
    inc: dict[tuple, list[int]] = {}
    for t in ordered:
        for v in t:
            inc.setdefault(v, []).append(index[t])

    def color(v: tuple[int, _Vec]) -> str:
        # the center's color is fixed by rotations; the other two swap per wedge
        j, (a, b) = v
        c = ("g", "r", "b")[(a - b) % 3]
        return {"r": "b", "b": "r", "g": "g"}[c] if j % 2 else c

    plaquettes: list[Plaquette] = []
    seam_path: list[int] = []
    sides: dict[tuple[int, str], set[int]] = {}
    for v in sorted(inc):
        j, (a, b) = v
        qs = tuple(sorted(inc[v]))
        if j == -1:
            plaquettes.append(Plaquette(qs, "g", role="gauge" if puncture else "stabilizer"))
            continue
        where = side(v)
        if where:
            name = {"r": "red", "b": "blue"}[color(v)]
            sides.setdefault((2 * j + where - 1, name), set()).update(qs)
            continue
        if puncture and j == 0 and a == b:
            seam_path.append(len(plaquettes))
        plaquettes.append(Plaquette(qs, color(v)))

    spec = LatticeCodeSpec(
        qubits,
        plaquettes,
        _segments(sides),
        [Seam("G", tuple(seam_path))] if puncture else [],
        {
            "family": "stellated-color",
            "lattice": "666",
            "s": s,
            "d": d,
            "gauge_qubits": int(puncture),
            "expected_distance": _expected_distance(s, d),
        },
    )
    code = spec.compile()
    by_wedge: dict[int, set[int]] = {}
    for tri, q in index.items():
        for v in tri:
            by_wedge.setdefault(v[0], set()).add(q)

    def near_rays(*wedges: int) -> list[int]:
        return sorted(by_wedge[-1].union(*({index[t] for t in rays.get(j, ())} for j in wedges)))

    if puncture:
        # minimal logicals leave one side of wedge 0, pass the center and return
        regions = [near_rays(0, 1), sorted(by_wedge[-1] | by_wedge[0])]
    else:
        # without a puncture they cross the center between wedges s - 1 and 1
        regions = [near_rays(s - 1, 0, 1), sorted(by_wedge[-1] | by_wedge[0] | by_wedge[1])]
    return spec, _first_witness(code, regions, _expected_distance(s, d))


def build_stellated_color_code(lattice: str | int, s: int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """Stellated color code; odd ``s`` carries one gauge qubit at the center."""
    key = str(lattice)
    if key == "488":
        return stellated_488(s, d)
    if key == "666":
        return stellated_666(s, d)
    raise ValueError(f"lattice must be 666 or 488, got {lattice!r}")


# ---------------------------------------------------------------- surface code

# Wedge extents as offsets from L = (d - 1) / 2; the first entry also sets the
# length of the exchange line, whose length bounds the distance by 2 A_1.
_SURFACE_PATTERNS: dict[int, tuple[int, ...]] = {
    3: (1, 0, 0),
    5: (1, 0, 1, 1, 0),
    7: (1, 1, 0, 1, 1, 0, 0),
}
_FLIP = {"X": "Z", "Z": "X"}


def surface_extents(s: int, d: int) -> tuple[int, ...]:
    L = (d - 1) // 2
    return tuple(L + e for e in _SURFACE_PATTERNS[s])


def stellated_surface(s: int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """Stellated surface code with ``(s - 1) / 2`` logical qubits.

    Wedge ``j`` (``1 <= j <= s``) holds qubits ``(a, b)`` with ``a < A_j`` and
    ``b < A_{j+1}`` (indices cyclic).  A line of ``A_1`` qubits separates
    wedge ``s`` from wedge 1.  Plaquettes are 2-colored across shared edges
    without crossing the line.  Color 0 is X-type and color 1 is Z-type.
    Plaquettes touching the line from the wedge ``s`` side act with the
    exchanged letter on the line qubits.  The central plaquette has the
    letter of its color except Y on the first line qubit.
    """
    require_odd_distance(d)
    if s % 2 == 0 or s < 3:
        raise ValueError(f"stellated surface codes need odd s >= 3, got {s}")
    if s not in _SURFACE_PATTERNS or d not in SUPPORTED_D:
        raise ValueError(f"(s={s}, d={d}) is outside the supported grid s in (3, 5, 7), d in {SUPPORTED_D}")
    A = surface_extents(s, d)
    cells, keys = _surface_cells(s, A)
    types = _two_color(cells)

    delta = 2 * math.pi / (s + 1)

    def qpos(q: tuple) -> tuple[float, float]:
        if q[0] == "l":
            return (q[1] + 1.0, 0.0)
        _, j, a, b = q
        return _combo(a + 1.0, _unit((j - 0.5) * delta), b + 1.0, _unit((j + 0.5) * delta))

    index, qubits = relabel(keys, {q: qpos(q) for q in keys})
    plaquettes: list[Plaquette] = []
    seam_path: list[int] = []
    sides: dict[tuple[int, str], set[int]] = {}
    for ci, (kind, cs, j) in enumerate(cells):
        t = types[ci]
        if kind in ("side_a", "side_b", "end"):
            want = {"side_a": (j - 1) % 2, "side_b": j % 2, "end": j % 2}[kind]
            if t != want:
                continue
        letter = "X" if t == 0 else "Z"
        qs = tuple(sorted(index[q] for q in cs))
        if kind in ("side_a", "side_b", "end"):
            # weight-two X checks sit on a boundary where X strings end, and vice versa
            sides.setdefault((j, letter.lower()), set()).update(qs)
        swapped: tuple[int, ...] = ()
        overrides: tuple[tuple[int, str], ...] = ()
        color = "r" if t == 0 else "b"
        if kind == "seamL" or (kind == "end" and j == s):
            swapped = tuple(sorted(index[q] for q in cs if q[0] == "l"))
            color = "seam"
            seam_path.append(len(plaquettes))
        if kind == "C":
            overrides = ((index[("l", 0)], "Y"),)
            color = "g"
        plaquettes.append(Plaquette(qs, color, letter, swapped, overrides))

    spec = LatticeCodeSpec(
        qubits,
        plaquettes,
        _segments(sides),
        [Seam("Y", tuple(seam_path))],
        {"family": "stellated-surface", "s": s, "d": d, "extents": list(A)},
    )
    code = spec.compile()
    # minimal logicals: the exchange line joined to a wedge ray of length L
    line = [index[("l", t)] for t in range(A[0])]
    rays = []
    for j in range(1, s + 1):
        for on_axis in (lambda q: q[3] == 0, lambda q: q[2] == 0):
            ray = [index[q] for q in keys if q[0] == "w" and q[1] == j and on_axis(q)]
            if len(ray) == (d - 1) // 2:
                rays.append(line + ray)
    return spec, _first_witness(code, rays, d)


def _surface_cells(s: int, A: Sequence[int]) -> tuple[list[tuple[str, list[tuple], int | None]], list[tuple]]:
    def ext_a(j: int) -> int:
        return A[j - 1]

    def ext_b(j: int) -> int:
        return A[j % s]

    def W(j: int, a: int, b: int) -> tuple:
        return ("w", j, a, b)

    def line(t: int) -> tuple:
        return ("l", t)

    keys = [line(t) for t in range(A[0])]
    keys += [W(j, a, b) for j in range(1, s + 1) for a in range(ext_a(j)) for b in range(ext_b(j))]
    cells: list[tuple[str, list[tuple], int | None]] = [("C", [line(0)] + [W(j, 0, 0) for j in range(1, s + 1)], None)]
    for j in range(1, s + 1):
        for a in range(ext_a(j) - 1):
            for b in range(ext_b(j) - 1):
                cells.append(("bulk", [W(j, a, b), W(j, a + 1, b), W(j, a + 1, b + 1), W(j, a, b + 1)], j))

    def left(j: int, t: int) -> tuple:
        return line(t) if j == 0 else W(j, 0, t)

    def right(j: int, t: int) -> tuple:
        return line(t) if j == s + 1 else W(j, t, 0)

    for j in range(s + 1):
        m = A[0] if j in (0, s) else ext_b(j)
        kind = "seamL" if j == s else ("seamR" if j == 0 else "ray")
        for t in range(m - 1):
            cells.append((kind, [left(j, t), left(j, t + 1), right(j + 1, t + 1), right(j + 1, t)], j))
        cells.append(("end", [left(j, m - 1), right(j + 1, m - 1)], j))
    for j in range(1, s + 1):
        for b in range(ext_b(j) - 1):
            cells.append(("side_a", [W(j, ext_a(j) - 1, b), W(j, ext_a(j) - 1, b + 1)], j))
        for a in range(ext_a(j) - 1):
            cells.append(("side_b", [W(j, a, ext_b(j) - 1), W(j, a + 1, ext_b(j) - 1)], j))
    return cells, keys


def _two_color(cells: Sequence[tuple[str, list[tuple], int | None]]) -> dict[int, int]:
    """Checkerboard coloring through shared edges, never across the line."""
    edges: dict[frozenset, list[int]] = {}
    for ci, (_, cs, _) in enumerate(cells):
        m = len(cs)
        for k in range(m if m > 2 else 1):
            e = frozenset((cs[k], cs[(k + 1) % m]))
            if all(q[0] == "l" for q in e):
                continue
            edges.setdefault(e, []).append(ci)
    adj: dict[int, set[int]] = {i: set() for i in range(len(cells))}
    for fs in edges.values():
        for a in fs:
            adj[a].update(b for b in fs if b != a)
    types = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in sorted(adj[u]):
            if v not in types:
                types[v] = 1 - types[u]
                stack.append(v)
            elif types[v] == types[u]:
                raise AssertionError("plaquette adjacency is not bipartite")
    if len(types) != len(cells):
        raise AssertionError("plaquette adjacency is disconnected")
    return types


def build_stellated_surface_code(s: int, d: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    return stellated_surface(s, d)
