"""Gapped boundaries as Lagrangian subgroups, and how symmetries move them.

A subset of charges is Lagrangian when

I.   it contains the vacuum and is closed under fusion,
II.  its members are bosons (``II-spin``) that braid trivially with each
     other (``II-braid``),
III. every charge outside it braids nontrivially with some member.

For the color code the six Lagrangian subgroups are the columns (one color,
all Pauli labels) and rows (one Pauli label, all colors) of the boson grid.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .anyons import COLORS, PAULIS, AnyonModel, boson_vector, builtin_model
from .gf2 import EchelonBasis
from .symmetries import (
    Automorphism,
    SymmetryGroup,
    enumerate_symmetries,
    symmetry_names,
    unfold_map,
)

BOUNDARY_NAMES = ("red", "green", "blue", "x", "y", "z")
_COLOR_NAMES = {"r": "red", "g": "green", "b": "blue"}


def _cc_boundary_sets() -> dict[str, frozenset[int]]:
    out = {}
    for c in COLORS:
        out[_COLOR_NAMES[c]] = frozenset([0] + [boson_vector(c + p) for p in PAULIS])
    for p in PAULIS:
        out[p] = frozenset([0] + [boson_vector(c + p) for c in COLORS])
    return {name: out[name] for name in BOUNDARY_NAMES}


CC_BOUNDARIES = _cc_boundary_sets()


@dataclass(frozen=True)
class LagrangianSubgroup:
    """A boundary condition: the charges that condense on it."""

    model: str
    elements: frozenset[int]
    name: str | None = None

    def __contains__(self, v: int) -> bool:
        return v in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def labels(self) -> list[str]:
        m = builtin_model(self.model)
        return [m.labels[v] for v in sorted(self.elements)]

    def __str__(self) -> str:
        tag = f"{self.name} " if self.name else ""
        return tag + "{" + ", ".join(self.labels()) + "}"


def boundary_name(model: AnyonModel | str, elements: Iterable[int]) -> str | None:
    m = builtin_model(model) if isinstance(model, str) else model
    if m.name != "CC":
        return None
    s = frozenset(elements)
    return next((n for n, e in CC_BOUNDARIES.items() if e == s), None)


def named_boundary(name: str) -> LagrangianSubgroup:
    """One of the six color-code boundaries by name (``red`` .. ``z``)."""
    key = name.lower()
    key = {"r": "red", "g": "green", "b": "blue"}.get(key, key)
    if key not in CC_BOUNDARIES:
        raise ValueError(f"unknown boundary {name!r}; expected one of {', '.join(BOUNDARY_NAMES)}")
    return LagrangianSubgroup("CC", CC_BOUNDARIES[key], key)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    condition: str | None = None  # "I", "II-spin", "II-braid" or "III"
    witness: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def is_lagrangian(model: AnyonModel | str, subset: Iterable[int | str]) -> Verdict:
    """Check conditions I, II-spin, II-braid and III in that order.

    The witness is the first offending charge (or pair) in vector order.
    """
    m = builtin_model(model) if isinstance(model, str) else model
    s = sorted({m.vec(x) for x in subset})
    members = set(s)
    lab = m.labels
    if 0 not in members:
        return Verdict(False, "I", ("1",))
    for a, b in itertools.combinations_with_replacement(s, 2):
        if a ^ b not in members:
            return Verdict(False, "I", (lab[a], lab[b]))
    for a in s:
        if m.spins[a] != 1:
            return Verdict(False, "II-spin", (lab[a],))
    for a, b in itertools.combinations(s, 2):
        if m.monodromies[a][b] != 1:
            return Verdict(False, "II-braid", (lab[a], lab[b]))
    for v in range(m.size):
        if v not in members and all(m.monodromies[v][a] == 1 for a in s):
            return Verdict(False, "III", (lab[v],))
    return Verdict(True)


def all_subgroups(rank: int) -> list[frozenset[int]]:
    """Every subgroup of GF(2)^rank, ordered by size then by sorted elements."""
    seen: set[frozenset[int]] = set()
    for k in range(rank + 1):
        for gens in itertools.combinations(range(1, 1 << rank), k):
            basis = EchelonBasis()
            if not all(basis.add(g) for g in gens):
                continue
            span = frozenset(
                _combo(gens, mask) for mask in range(1 << len(gens))
            )
            seen.add(span)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def _combo(gens: tuple[int, ...], mask: int) -> int:
    out = 0
    for i, g in enumerate(gens):
        if (mask >> i) & 1:
            out ^= g
    return out


def enumerate_lagrangian_subgroups(model: AnyonModel | str) -> list[LagrangianSubgroup]:
    """All Lagrangian subgroups by exhaustion over subgroups."""
    m = builtin_model(model) if isinstance(model, str) else model
    if m.rank > 4:
        raise ValueError("exhaustive subgroup search is limited to rank 4")
    out = []
    for sub in all_subgroups(m.rank):
        if is_lagrangian(m, sub):
            out.append(LagrangianSubgroup(m.name, sub, boundary_name(m, sub)))
    if m.name == "CC":
        out.sort(key=lambda b: BOUNDARY_NAMES.index(b.name or ""))
    return out


def act_on_boundary(phi: Automorphism, boundary: LagrangianSubgroup) -> LagrangianSubgroup:
    """Image of a boundary under a symmetry; the result is checked to be Lagrangian."""
    if phi.model != boundary.model:
        raise ValueError("symmetry and boundary belong to different models")
    image = frozenset(phi(v) for v in boundary.elements)
    verdict = is_lagrangian(boundary.model, image)
    if not verdict:
        raise AssertionError(f"image violates condition {verdict.condition}")
    return LagrangianSubgroup(boundary.model, image, boundary_name(boundary.model, image))


def condensable_twists(
    boundary: LagrangianSubgroup, group: SymmetryGroup | None = None
) -> list[Automorphism]:
    """Symmetries fixing the boundary, i.e. twists that can be absorbed by it."""
    return corner_twist_candidates(boundary, boundary, group)


def corner_twist_candidates(
    first: LagrangianSubgroup, second: LagrangianSubgroup, group: SymmetryGroup | None = None
) -> list[Automorphism]:
    """Symmetries carrying ``first`` onto ``second``: the labels a corner may carry."""
    group = group or enumerate_symmetries(first.model)
    return [phi for phi in group if frozenset(phi(v) for v in first.elements) == second.elements]


def orbit(boundary: LagrangianSubgroup, group: SymmetryGroup | None = None) -> list[LagrangianSubgroup]:
    group = group or enumerate_symmetries(boundary.model)
    images = {frozenset(phi(v) for v in boundary.elements) for phi in group}
    subs = [LagrangianSubgroup(boundary.model, s, boundary_name(boundary.model, s)) for s in images]
    return sorted(subs, key=lambda b: sorted(b.elements))


def fold_boundary(wall: Automorphism) -> LagrangianSubgroup:
    """Color-code boundary obtained by folding two three-fermion layers.

    The ``-`` layer carries the wall; each 3F charge ``b`` contributes the
    pair ``wall(b)- b+``, which is read back as a color-code charge through
    the inverse of the ``2x3F`` unfolding.
    """
    if wall.model != "3F":
        raise ValueError("fold walls are symmetries of the three-fermion model")
    umap = unfold_map("2x3F")
    pairs = {wall(b) | (b << 2) for b in range(4)}
    elements = frozenset(umap.inverse_image(w) for w in pairs)
    return LagrangianSubgroup("CC", elements, boundary_name("CC", elements))


def fold_table() -> list[tuple[str, str]]:
    """``(wall name, boundary name)`` for all six three-fermion walls."""
    names = symmetry_names("3F")
    return [(names[w], fold_boundary(w).name or "?") for w in enumerate_symmetries("3F")]
