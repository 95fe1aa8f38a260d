"""Anyon-model automorphisms: domain walls and the twists that end them.

An automorphism is an invertible GF(2) map on charge vectors that preserves
every spin and monodromy.  It is stored as the tuple of images of the basis
vectors (``cols[i]`` is the image of ``1 << i``), which doubles as the
lexicographic sort key used throughout.

For the color code each automorphism also has a structured form
``(alpha, beta, t)``: ``alpha`` permutes colors, ``beta`` permutes Pauli
labels and ``t`` transposes the boson grid.  Here a boson is viewed as the
2x2 outer product of a color vector and a Pauli vector; ``(alpha, beta, 0)``
sends ``c (x) p`` to ``alpha(c) (x) beta(p)`` and ``t = 1`` swaps the two
factors first.  Permutations of three labels are kept as elements of
GL(2, 2), acting on the 2-bit vectors of the labels.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .anyons import (
    COLOR_VEC,
    PAULI_VEC,
    AnyonCharge,
    AnyonModel,
    builtin_model,
    grid_vector,
    product_model,
)
from .gf2 import rank as gf2_rank

MAX_ENUMERATION_RANK = 4


@dataclass(frozen=True, order=True)
class Automorphism:
    """Invertible linear map on the charges of the model called ``model``."""

    model: str
    cols: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cols)

    def __call__(self, v: int | AnyonCharge) -> int:
        if isinstance(v, AnyonCharge):
            v = v.vec
        out = 0
        for i, col in enumerate(self.cols):
            if (v >> i) & 1:
                out ^= col
        return out

    def permutation(self) -> tuple[int, ...]:
        """Images of all charge vectors in vector order."""
        return tuple(self(v) for v in range(1 << self.rank))

    def is_identity(self) -> bool:
        return all(col == 1 << i for i, col in enumerate(self.cols))


def identity(model: AnyonModel | str) -> Automorphism:
    m = _model(model)
    return Automorphism(m.name, tuple(1 << i for i in range(m.rank)))


def _model(model: AnyonModel | str) -> AnyonModel:
    return builtin_model(model) if isinstance(model, str) else model


def _same_model(phi: Automorphism, psi: Automorphism) -> None:
    if phi.model != psi.model or phi.rank != psi.rank:
        raise ValueError(f"automorphisms of different models: {phi.model} vs {psi.model}")


def compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """``phi o psi``: apply ``psi`` first."""
    _same_model(phi, psi)
    return Automorphism(phi.model, tuple(phi(c) for c in psi.cols))


def compose_all(*maps: Automorphism) -> Automorphism:
    """Left-to-right product ``maps[0] o maps[1] o ...``."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def inverse(phi: Automorphism) -> Automorphism:
    perm = phi.permutation()
    inv = [0] * len(perm)
    for v, w in enumerate(perm):
        inv[w] = v
    return Automorphism(phi.model, tuple(inv[1 << i] for i in range(phi.rank)))


def order(phi: Automorphism) -> int:
    k, cur = 1, phi
    while not cur.is_identity():
        cur = compose(phi, cur)
        k += 1
    return k


def preserves_data(model: AnyonModel, phi: Automorphism) -> bool:
    """True when ``phi`` keeps every spin and every monodromy."""
    perm = phi.permutation()
    S, M = model.spins, model.monodromies
    if any(S[perm[v]] != S[v] for v in range(model.size)):
        return False
    return all(M[perm[u]][perm[v]] == M[u][v] for u in range(model.size) for v in range(u))


@dataclass(frozen=True)
class SymmetryGroup:
    """All automorphisms of a model, sorted by their column tuples."""

    model: str
    elements: tuple[Automorphism, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, phi: object) -> bool:
        return phi in self._set

    @property
    def _set(self) -> frozenset[Automorphism]:
        return frozenset(self.elements)

    def index(self, phi: Automorphism) -> int:
        return self.elements.index(phi)

    def composition_table(self) -> list[list[int]]:
        """``table[i][j]`` is the index of ``elements[i] o elements[j]``."""
        pos = {g: i for i, g in enumerate(self.elements)}
        return [[pos[compose(g, h)] for h in self.elements] for g in self.elements]


@lru_cache(maxsize=None)
def _enumerate_cached(model: AnyonModel) -> SymmetryGroup:
    found = []
    for cols in itertools.product(range(1, model.size), repeat=model.rank):
        if gf2_rank(list(cols)) != model.rank:
            continue
        phi = Automorphism(model.name, cols)
        if preserves_data(model, phi):
            found.append(phi)
    return SymmetryGroup(model.name, tuple(found))


def enumerate_symmetries(model: AnyonModel | str) -> SymmetryGroup:
    """Brute force over GL(rank, 2); feasible for rank at most 4."""
    m = _model(model)
    if m.rank > MAX_ENUMERATION_RANK:
        raise ValueError(
            f"rank {m.rank} exceeds the exhaustive search bound of {MAX_ENUMERATION_RANK}"
        )
    return _enumerate_cached(m)


# ---------------------------------------------------------------- structured form

# GL(2, 2) elements as column pairs (image of 0b01, image of 0b10)
Perm2 = tuple[int, int]

_LABEL_OF_COLOR = {v: k for k, v in COLOR_VEC.items()}
_LABEL_OF_PAULI = {v: k for k, v in PAULI_VEC.items()}


def _apply2(m: Perm2, v: int) -> int:
    return (m[0] if v & 1 else 0) ^ (m[1] if v & 2 else 0)


def _mul2(a: Perm2, b: Perm2) -> Perm2:
    return (_apply2(a, b[0]), _apply2(a, b[1]))


GL2 = tuple(
    (a, b) for a in range(1, 4) for b in range(1, 4) if a != b
)  # the six elements of S3 acting on {1, 2, 3}
ID2: Perm2 = (1, 2)


def label_permutation(images: dict[str, str], vectors: dict[str, int]) -> Perm2:
    """GL(2, 2) element sending each label to ``images[label]``."""
    m = (vectors[images[_first(vectors, 1)]], vectors[images[_first(vectors, 2)]])
    for lab, v in vectors.items():
        if _apply2(m, v) != vectors[images[lab]]:
            raise ValueError("not a permutation of three labels")
    return m


def _first(vectors: dict[str, int], v: int) -> str:
    return next(k for k, w in vectors.items() if w == v)


@dataclass(frozen=True)
class StructuredForm:
    """``(alpha, beta, t)`` view of a color-code automorphism."""

    colors: Perm2
    paulis: Perm2
    transpose: int

    def color_images(self) -> dict[str, str]:
        return {lab: _LABEL_OF_COLOR[_apply2(self.colors, v)] for lab, v in COLOR_VEC.items()}

    def pauli_images(self) -> dict[str, str]:
        return {lab: _LABEL_OF_PAULI[_apply2(self.paulis, v)] for lab, v in PAULI_VEC.items()}

    def __str__(self) -> str:
        cs = "".join(self.color_images()[c] for c in "rgb")
        ps = "".join(self.pauli_images()[p] for p in "xyz")
        return f"(rgb->{cs}, xyz->{ps}, t={self.transpose})"


def _transpose_vec(v: int) -> int:
    # entry (i, j) lives at bit 2*i + j
    out = 0
    for i in range(2):
        for j in range(2):
            if (v >> (2 * i + j)) & 1:
                out |= 1 << (2 * j + i)
    return out


def _act_structured(form: StructuredForm, v: int) -> int:
    if form.transpose:
        v = _transpose_vec(v)
    out = 0
    for i in range(2):
        for j in range(2):
            if (v >> (2 * i + j)) & 1:
                out ^= grid_vector(_apply2(form.colors, 1 << i), _apply2(form.paulis, 1 << j))
    return out


def structured(colors: Perm2, paulis: Perm2, transpose: int = 0) -> Automorphism:
    """Color-code automorphism with the given structured form."""
    form = StructuredForm(colors, paulis, transpose & 1)
    return Automorphism("CC", tuple(_act_structured(form, 1 << i) for i in range(4)))


def compose_structured(f: StructuredForm, g: StructuredForm) -> StructuredForm:
    """Semidirect-product law for ``f o g``.

    A transpose in ``f`` swaps the roles of the color and Pauli factors of
    ``g``.
    """
    if f.transpose:
        return StructuredForm(_mul2(f.colors, g.paulis), _mul2(f.paulis, g.colors), 1 ^ g.transpose)
    return StructuredForm(_mul2(f.colors, g.colors), _mul2(f.paulis, g.paulis), g.transpose)


def all_structured_forms() -> list[StructuredForm]:
    return [StructuredForm(a, b, t) for t in (0, 1) for a in GL2 for b in GL2]


@lru_cache(maxsize=None)
def _form_lookup() -> dict[Automorphism, StructuredForm]:
    return {structured(f.colors, f.paulis, f.transpose): f for f in all_structured_forms()}


def structured_form(phi: Automorphism) -> StructuredForm:
    """Structured view of a color-code automorphism."""
    if phi.model != "CC":
        raise ValueError("structured forms exist only for the color code")
    try:
        return _form_lookup()[phi]
    except KeyError:
        raise ValueError("not a color-code symmetry") from None


def _swap_fixing(fixed: str, vectors: dict[str, int]) -> Perm2:
    a, b = (lab for lab in vectors if lab != fixed)
    return label_permutation({fixed: fixed, a: b, b: a}, vectors)


GENERATOR_NAMES = ("R", "G", "B", "X", "Y", "Z", "D", "RB", "BR", "XZ", "ZX")


def named_generator(name: str) -> Automorphism:
    """Named color-code symmetry.

    ``R``, ``G``, ``B`` exchange the two colors other than the named one;
    ``X``, ``Y``, ``Z`` do the same for Pauli labels; ``D`` transposes the
    boson grid, fixing ``rx``, ``gy`` and ``bz``.  Two-letter names are
    products read left to right, e.g. ``RB = R o B``.
    """
    if name in ("R", "G", "B"):
        return structured(_swap_fixing(name.lower(), COLOR_VEC), ID2)
    if name in ("X", "Y", "Z"):
        return structured(ID2, _swap_fixing(name.lower(), PAULI_VEC))
    if name == "D":
        return structured(ID2, ID2, 1)
    if name in ("RB", "BR", "XZ", "ZX"):
        return compose(named_generator(name[0]), named_generator(name[1]))
    if name in ("1", "I"):
        return identity("CC")
    raise ValueError(f"unknown generator {name!r}; expected one of {', '.join(GENERATOR_NAMES)}")


def word(text: str) -> Automorphism:
    """Product of named generators written with ``*`` or spaces, e.g. ``"D*X*Z"``."""
    parts = [p for p in text.replace("*", " ").split() if p]
    if not parts:
        return identity("CC")
    return compose_all(*(named_generator(p) for p in parts))


# ---------------------------------------------------------------- conjugacy and twists

CLASS_REPRESENTATIVES = (
    ("A", "1"),
    ("B", "B"),
    ("C", "R X"),
    ("D", "RB"),
    ("E", "R XZ"),
    ("F", "RB XZ"),
    ("G", "D"),
    ("H", "D X"),
    ("I", "D XZ"),
)

TABLE_ROWS = ("1", "R", "G", "B", "RB", "BR")
TABLE_COLUMNS = ("1", "X", "Y", "Z", "XZ", "ZX")


def conjugate(phi: Automorphism, by: Automorphism) -> Automorphism:
    """``by o phi o by^-1``."""
    return compose_all(by, phi, inverse(by))


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    representative: Automorphism
    elements: frozenset[Automorphism]

    def __len__(self) -> int:
        return len(self.elements)


def _raw_classes(group: SymmetryGroup) -> list[frozenset[Automorphism]]:
    remaining = list(group.elements)
    classes = []
    while remaining:
        g = remaining[0]
        cls = frozenset(conjugate(g, h) for h in group.elements)
        classes.append(cls)
        remaining = [x for x in remaining if x not in cls]
    return classes


def conjugacy_classes(group: SymmetryGroup | None = None) -> list[ConjugacyClass]:
    """The nine classes of the color-code group, named ``A`` .. ``I``.

    Each letter is attached to the class of its canonical representative;
    classes come back in letter order.
    """
    group = group or enumerate_symmetries("CC")
    if group.model != "CC":
        raise ValueError("class names are defined for the color code only")
    raw = _raw_classes(group)
    named = []
    for letter, text in CLASS_REPRESENTATIVES:
        rep = word(text)
        cls = next(c for c in raw if rep in c)
        named.append(ConjugacyClass(letter, rep, cls))
    if len({c.elements for c in named}) != len(raw):
        raise AssertionError("canonical representatives do not cover every class")
    return named


@lru_cache(maxsize=None)
def _class_index() -> dict[Automorphism, str]:
    return {g: c.name for c in conjugacy_classes() for g in c.elements}


def class_of(phi: Automorphism) -> str:
    return _class_index()[phi]


def class_table(with_d: bool = False) -> list[list[str]]:
    """Class letters of ``row o column`` (or ``D o row o column``)."""
    prefix = "D " if with_d else ""
    return [[class_of(word(f"{prefix}{r} {c}")) for c in TABLE_COLUMNS] for r in TABLE_ROWS]


def localized_anyons(phi: Automorphism, model: AnyonModel | str | None = None) -> frozenset[int]:
    """Charges ``phi(b) x b`` over all ``b``: what a ``phi`` twist can absorb."""
    out = frozenset(phi(b) ^ b for b in range(1 << phi.rank))
    _assert_subgroup(out)
    return out


def _assert_subgroup(vectors: Iterable[int]) -> None:
    s = set(vectors)
    if 0 not in s or any(a ^ b not in s for a in s for b in s):
        raise AssertionError("localized set is not a subgroup")


def quantum_dimension_squared(phi: Automorphism) -> int:
    return len(localized_anyons(phi))


def cross_wall(twist: Automorphism, wall: Automorphism) -> Automorphism:
    """Label of a twist after it is carried through a wall: ``wall^-1 o twist o wall``."""
    return compose_all(inverse(wall), twist, wall)


def describe(phi: Automorphism) -> str:
    """Shortest generator word for a color-code symmetry, with its class."""
    return f"{shortest_word(phi)} [{class_of(phi)}]"


@lru_cache(maxsize=None)
def _words() -> dict[Automorphism, str]:
    names = ("R", "G", "B", "X", "Y", "Z", "D")
    best: dict[Automorphism, str] = {identity("CC"): "1"}
    frontier = [identity("CC")]
    while frontier:
        nxt = []
        for g in frontier:
            for n in names:
                h = compose(g, named_generator(n))
                if h not in best:
                    best[h] = n if best[g] == "1" else f"{best[g]}*{n}"
                    nxt.append(h)
        frontier = nxt
    return best


def shortest_word(phi: Automorphism) -> str:
    """A shortest word in the exchange generators and ``D`` (BFS order)."""
    return _words()[phi]


# ---------------------------------------------------------------- unfolding


@dataclass(frozen=True)
class UnfoldMap:
    """Linear relabeling of color-code charges as charges of ``target``."""

    name: str
    target: AnyonModel
    cols: tuple[int, ...]

    def __call__(self, v: int | str | AnyonCharge) -> int:
        cc = builtin_model("CC")
        v = cc.vec(v)
        out = 0
        for i, col in enumerate(self.cols):
            if (v >> i) & 1:
                out ^= col
        return out

    def label(self, v: int | str | AnyonCharge) -> str:
        return self.target.labels[self(v)]

    def inverse_image(self, w: int) -> int:
        for v in range(16):
            if self(v) == w:
                return v
        raise ValueError(f"{w} has no preimage")


def _doubled(name: str) -> AnyonModel:
    base = builtin_model(name)
    return product_model(base, base, name=f"2x{name}")


def unfold_map(target: str) -> UnfoldMap:
    """``"2TC"`` or ``"2x3F"``; the minus layer occupies the low bits.

    The images of the basis ``rx, rz, bx, bz`` are::

        2TC : e-,       m+,      e+,      m-
        2x3F: f1-f1+,   f3-f2+,  f3-f3+,  f2-f1+
    """
    key = target.upper().replace("X", "x")
    if key in ("2TC", "2xTC"):
        model = _doubled("TC")
        images = ("e-", "m+", "e+", "m-")
        name = "2TC"
    elif key in ("2x3F", "23F"):
        model = _doubled("3F")
        images = ("f1-f1+", "f3-f2+", "f3-f3+", "f2-f1+")
        name = "2x3F"
    else:
        raise ValueError(f"unknown unfolding target {target!r}; expected 2TC or 2x3F")
    return UnfoldMap(name, model, tuple(model.vec(lab) for lab in images))


@dataclass(frozen=True)
class IsoReport:
    name: str
    bijective: bool
    fusion: tuple[str, ...] | None
    spin: tuple[str, ...] | None
    monodromy: tuple[str, ...] | None

    @property
    def passed(self) -> bool:
        return self.bijective and self.fusion is None and self.spin is None and self.monodromy is None


def verify_iso(mapping: UnfoldMap, source: AnyonModel | None = None) -> IsoReport:
    """Exhaustive check that ``mapping`` is an isomorphism of anyon models.

    Each failing property carries the labels of its first counterexample.
    """
    src = source or builtin_model("CC")
    dst = mapping.target
    img = [mapping(v) for v in range(src.size)]
    lab = src.labels
    bij = sorted(img) == list(range(dst.size))
    fus = next(((a, b) for a in range(src.size) for b in range(src.size) if img[a ^ b] != img[a] ^ img[b]), None)
    sp = next((a for a in range(src.size) if dst.spins[img[a]] != src.spins[a]), None)
    mo = next(
        (
            (a, b)
            for a in range(src.size)
            for b in range(src.size)
            if dst.monodromies[img[a]][img[b]] != src.monodromies[a][b]
        ),
        None,
    )
    return IsoReport(
        mapping.name,
        bij,
        None if fus is None else (lab[fus[0]], lab[fus[1]]),
        None if sp is None else (lab[sp],),
        None if mo is None else (lab[mo[0]], lab[mo[1]]),
    )


@dataclass(frozen=True)
class WreathReport:
    size: int
    bijection: bool
    composition_witness: tuple[str, str] | None
    transpose_witness: str | None

    @property
    def passed(self) -> bool:
        return self.bijection and self.composition_witness is None and self.transpose_witness is None


def wreath_check(group: SymmetryGroup | None = None) -> WreathReport:
    """Compare the structured parameterization with the enumerated group.

    Checks that the 72 structured triples give 72 distinct automorphisms
    forming exactly the enumerated group, that composing triples agrees with
    composing matrices for every pair, and that conjugating a pure color
    permutation by ``D`` gives a pure Pauli permutation.
    """
    group = group or enumerate_symmetries("CC")
    forms = all_structured_forms()
    mats = [structured(f.colors, f.paulis, f.transpose) for f in forms]
    bijection = len(set(mats)) == len(forms) == len(group) and set(mats) == set(group.elements)
    comp = None
    for (f, mf), (g, mg) in itertools.product(zip(forms, mats), repeat=2):
        h = compose_structured(f, g)
        if structured(h.colors, h.paulis, h.transpose) != compose(mf, mg):
            comp = (str(f), str(g))
            break
    d = named_generator("D")
    tw = None
    for a in GL2:
        conj = structured_form(compose_all(d, structured(a, ID2), d))
        if conj.colors != ID2 or conj.transpose:
            tw = str(StructuredForm(a, ID2, 0))
            break
    return WreathReport(len(forms), bijection, comp, tw)


def symmetry_names(model: AnyonModel | str) -> dict[Automorphism, str]:
    """Readable names for small models: label permutations such as ``f1<->f2``."""
    m = _model(model)
    out = {}
    for phi in enumerate_symmetries(m):
        moved = [(m.labels[v], m.labels[phi(v)]) for v in range(1, m.size) if phi(v) != v]
        if not moved:
            out[phi] = "1"
            continue
        if len(moved) == 2:
            out[phi] = f"{moved[0][0]}<->{moved[0][1]}"
        else:
            out[phi] = ", ".join(f"{a}->{b}" for a, b in moved)
    return out


def format_labels(model: AnyonModel, vectors: Sequence[int] | frozenset[int]) -> str:
    return "{" + ", ".join(model.labels[v] for v in sorted(vectors)) + "}"
