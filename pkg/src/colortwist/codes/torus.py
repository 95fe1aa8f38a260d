"""The 6.6.6 color code on a torus, and Y-type walls and twists inserted into it.

The code is built on the dual triangulation of ``Z_N x Z_N`` with
``N = 3L``: qubits are triangles and plaquettes are vertices, a vertex
``(a, b)`` having color ``(a - b) mod 3``.  Three-coloring the vertices
consistently around both cycles needs ``N`` divisible by three, which is why
the side is ``3L``.

A Y wall exchanges the X and Z labels.  It runs through a path of
plaquettes; each plaquette on the path is split by the wall into a left and
a right arc of triangles, and its letters are exchanged on the left arc.
Up to the path plaquettes this is a Hadamard on everything to the left of
the wall, so commutation is untouched.  An open path ends on two twists,
where the plaquette keeps only the product of its two generators, a single
Y-type stabilizer.
"""

from __future__ import annotations

from collections.abc import Sequence

from ..pauli import StabilizerCode
from .lattice import LatticeCodeSpec, Plaquette, Seam, relabel
from .triangular import centroid, tri_pos

# neighbor directions in counterclockwise order; triangle k around a vertex
# has corners v, v + DIRECTIONS[k], v + DIRECTIONS[k + 1]
DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
_COLOR3 = ("r", "g", "b")


def torus_side(L: int) -> int:
    return 3 * L


def vertex_index(L: int, v: tuple[int, int]) -> int:
    """Plaquette index of the vertex ``(a, b)``, coordinates taken mod ``3L``."""
    N = torus_side(L)
    a, b = v[0] % N, v[1] % N
    return b * N + a


def vertex_of(L: int, index: int) -> tuple[int, int]:
    N = torus_side(L)
    return (index % N, index // N)


def _triangle_keys(L: int) -> list[frozenset[tuple[int, int]]]:
    N = torus_side(L)
    out = []
    for b in range(N):
        for a in range(N):
            up = frozenset({(a, b), ((a + 1) % N, b), (a, (b + 1) % N)})
            down = frozenset({((a + 1) % N, b), (a, (b + 1) % N), ((a + 1) % N, (b + 1) % N)})
            out += [up, down]
    return out


def _around(L: int, v: tuple[int, int]) -> list[frozenset[tuple[int, int]]]:
    """The six triangles at ``v`` in counterclockwise order."""
    N = torus_side(L)
    a, b = v
    out = []
    for k in range(6):
        d1, d2 = DIRECTIONS[k], DIRECTIONS[(k + 1) % 6]
        out.append(frozenset({(a, b), ((a + d1[0]) % N, (b + d1[1]) % N), ((a + d2[0]) % N, (b + d2[1]) % N)}))
    return out


def build_torus_color_code(L: int) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """6.6.6 color code on the ``3L x 3L`` triangulated torus (``18 L^2`` qubits)."""
    if L < 1:
        raise ValueError(f"L must be at least 1, got {L}")
    N = torus_side(L)
    keys = _triangle_keys(L)
    pos = {}
    for t in keys:
        # unwrap corners that straddle the periodic edge before averaging
        pts = sorted(t)
        base = pts[0]
        shifted = [
            (p[0] - N if p[0] - base[0] > 1 else p[0], p[1] - N if p[1] - base[1] > 1 else p[1]) for p in pts
        ]
        pos[t] = centroid([tri_pos(p) for p in shifted])
    index, qubits = relabel(keys, pos)
    plaquettes = []
    for i in range(N * N):
        v = vertex_of(L, i)
        qs = tuple(sorted(index[t] for t in _around(L, v)))
        plaquettes.append(Plaquette(qs, _COLOR3[(v[0] - v[1]) % 3]))
    spec = LatticeCodeSpec(qubits, plaquettes, [], [], {"family": "torus", "lattice": "666", "L": L})
    return spec, spec.compile()


def _direction(L: int, v: tuple[int, int], w: tuple[int, int]) -> int:
    N = torus_side(L)
    for k, (da, db) in enumerate(DIRECTIONS):
        if ((v[0] + da) % N, (v[1] + db) % N) == w:
            return k
    raise ValueError(f"plaquettes at {v} and {w} are not adjacent")


def _check_path(spec: LatticeCodeSpec, path: Sequence[int]) -> list[tuple[int, int]]:
    if spec.metadata.get("family") != "torus":
        raise ValueError("walls are inserted into torus codes only")
    L = int(spec.metadata["L"])
    if len(set(path)) != len(path):
        raise ValueError("path visits a plaquette twice")
    if any(not 0 <= p < len(spec.plaquettes) for p in path):
        raise ValueError("path refers to a missing plaquette")
    verts = [vertex_of(L, p) for p in path]
    for v, w in zip(verts, verts[1:]):
        _direction(L, v, w)
    return verts


def _left_arc(L: int, v: tuple[int, int], prev: tuple[int, int], nxt: tuple[int, int]) -> list[frozenset]:
    """Triangles at ``v`` counterclockwise from the outgoing to the incoming direction."""
    start, stop = _direction(L, v, nxt), _direction(L, v, prev)
    tris = _around(L, v)
    out = []
    k = start
    while k != stop:
        out.append(tris[k])
        k = (k + 1) % 6
    return out


def _wall_plaquettes(
    spec: LatticeCodeSpec, verts: list[tuple[int, int]], closed: bool
) -> dict[int, Plaquette]:
    L = int(spec.metadata["L"])
    index = {t: i for i, t in enumerate(_triangle_keys(L))}
    m = len(verts)
    out = {}
    inner = range(m) if closed else range(1, m - 1)
    for i in inner:
        v = verts[i]
        arc = _left_arc(L, v, verts[i - 1], verts[(i + 1) % m])
        p = spec.plaquettes[vertex_index(L, v)]
        out[vertex_index(L, v)] = Plaquette(p.qubits, "seam", "XZ", tuple(sorted(index[t] for t in arc)))
    return out


def _with(spec: LatticeCodeSpec, changes: dict[int, Plaquette], seam: Seam, tag: str) -> LatticeCodeSpec:
    plaquettes = [changes.get(i, p) for i, p in enumerate(spec.plaquettes)]
    meta = dict(spec.metadata)
    meta.setdefault("walls", [])
    meta["walls"] = list(meta["walls"]) + [tag]
    return LatticeCodeSpec(list(spec.qubits), plaquettes, list(spec.boundaries), list(spec.seams) + [seam], meta)


def insert_pauli_wall(spec: LatticeCodeSpec, path: Sequence[int]) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """Close a Y wall along a cyclic plaquette path (last plaquette adjacent to the first).

    The wall is oriented by the path; letters are exchanged on the left.
    """
    if not path:
        return spec, spec.compile()
    verts = _check_path(spec, path)
    if len(verts) < 3:
        raise ValueError("a closed wall needs at least three plaquettes")
    try:
        _direction(int(spec.metadata["L"]), verts[-1], verts[0])
    except ValueError:
        raise ValueError("wall path is not closed: last plaquette is not adjacent to the first") from None
    new = _with(spec, _wall_plaquettes(spec, verts, closed=True), Seam("Y", tuple(path)), "wall")
    return new, new.compile()


def insert_pauli_twist_pair(spec: LatticeCodeSpec, path: Sequence[int]) -> tuple[LatticeCodeSpec, StabilizerCode]:
    """Open Y wall along ``path`` with a Y twist on each terminal plaquette."""
    verts = _check_path(spec, path)
    if len(verts) < 2:
        raise ValueError("a twist pair needs two distinct terminal plaquettes")
    changes = _wall_plaquettes(spec, verts, closed=False)
    for end in (path[0], path[-1]):
        p = spec.plaquettes[end]
        changes[end] = Plaquette(p.qubits, p.color, "Y")
    new = _with(spec, changes, Seam("Y", tuple(path)), "twist-pair")
    return new, new.compile()


def straight_path(L: int, start: tuple[int, int], direction: int, length: int) -> list[int]:
    """``length + 1`` plaquettes from ``start`` along one lattice direction."""
    da, db = DIRECTIONS[direction % 6]
    return [vertex_index(L, (start[0] + t * da, start[1] + t * db)) for t in range(length + 1)]


def ring(L: int, center: tuple[int, int], radius: int = 1) -> list[int]:
    """Counterclockwise hexagonal ring of plaquettes around ``center``."""
    a, b = center
    v = (a + radius * DIRECTIONS[4][0], b + radius * DIRECTIONS[4][1])
    out = []
    for k in range(6):
        da, db = DIRECTIONS[k]
        for _ in range(radius):
            out.append(vertex_index(L, v))
            v = (v[0] + da, v[1] + db)
    return out
