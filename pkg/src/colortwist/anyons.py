"""Abelian anyon models whose charges form a GF(2) vector space.

A model is stored as a rank, a name for every charge vector, a table of
topological spins and a table of monodromies.  All phases in the models
handled here are signs, so both tables hold the integers ``+1`` and ``-1``.

Three models are built in:

``CC``
    The color code.  Charges are 4-bit vectors over the basis
    ``(rx, rz, bx, bz)``; the nine bosons are color-Pauli pairs and the six
    remaining nontrivial charges are fermions ``f1`` .. ``f6``.
``TC``
    The toric code with charges ``1, e, m, eps``.
``3F``
    The three-fermion model with charges ``1, f1, f2, f3``.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field

Phase = int  # +1 or -1

COLORS = ("r", "g", "b")
PAULIS = ("x", "y", "z")

# 2-bit vectors of the color and Pauli labels; a boson C P is the outer product
# of its color vector and its Pauli vector, flattened so that bit 2*i + j holds
# entry (i, j).
COLOR_VEC = {"r": 0b01, "b": 0b10, "g": 0b11}
PAULI_VEC = {"x": 0b01, "z": 0b10, "y": 0b11}


def grid_vector(color_vec: int, pauli_vec: int) -> int:
    """Flattened outer product of a color vector and a Pauli vector."""
    out = 0
    for i in range(2):
        for j in range(2):
            if (color_vec >> i) & 1 and (pauli_vec >> j) & 1:
                out |= 1 << (2 * i + j)
    return out


def boson_vector(label: str) -> int:
    """Vector of a color-code boson such as ``"gy"``."""
    return grid_vector(COLOR_VEC[label[0]], PAULI_VEC[label[1]])


BOSON_LABELS = tuple(c + p for c in COLORS for p in PAULIS)

# Each fermion is named after its first decomposition into two bosons.
FERMION_DEFINITIONS = (
    ("f1", "rz", "bx"),
    ("f2", "gy", "bz"),
    ("f3", "gy", "bx"),
    ("f4", "rx", "gy"),
    ("f5", "rz", "gy"),
    ("f6", "rx", "bz"),
)


@dataclass(frozen=True)
class AnyonCharge:
    """A charge of a specific model: its vector plus its display label."""

    vec: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class AnyonModel:
    """Finite abelian anyon model over GF(2)^rank.

    ``labels[v]``, ``spins[v]`` and ``monodromies[u][v]`` are indexed by the
    charge vectors.  ``definitions`` lists triples ``(c, a, b)`` meaning that
    the label ``c`` is defined as ``a x b``; consistency checks visit these
    first so that a broken law is reported on a familiar pair.
    """

    name: str
    rank: int
    labels: tuple[str, ...]
    spins: tuple[Phase, ...]
    monodromies: tuple[tuple[Phase, ...], ...]
    definitions: tuple[tuple[str, str, str], ...] = ()
    _index: dict[str, int] = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        size = 1 << self.rank
        if len(self.labels) != size or len(self.spins) != size or len(self.monodromies) != size:
            raise ValueError("tables must have one entry per charge vector")
        if len(set(self.labels)) != size:
            raise ValueError("charge labels must be distinct")
        object.__setattr__(self, "_index", {lab: v for v, lab in enumerate(self.labels)})

    @property
    def size(self) -> int:
        return 1 << self.rank

    @property
    def identity(self) -> AnyonCharge:
        return self.charge(0)

    def charge(self, key: int | str | AnyonCharge) -> AnyonCharge:
        """Look up a charge by vector, label or charge object."""
        if isinstance(key, AnyonCharge):
            key = key.vec
        if isinstance(key, str):
            if key not in self._index:
                raise KeyError(f"{self.name} has no charge labelled {key!r}")
            key = self._index[key]
        if not 0 <= key < self.size:
            raise KeyError(f"vector {key} is outside {self.name}")
        return AnyonCharge(key, self.labels[key])

    def charges(self) -> list[AnyonCharge]:
        """All charges in vector order."""
        return [AnyonCharge(v, self.labels[v]) for v in range(self.size)]

    def vec(self, key: int | str | AnyonCharge) -> int:
        return self.charge(key).vec

    def with_spin(self, key: int | str | AnyonCharge, value: Phase) -> AnyonModel:
        """Copy of the model with one spin entry replaced (used for fault injection)."""
        v = self.vec(key)
        spins = list(self.spins)
        spins[v] = value
        return AnyonModel(
            self.name + "*", self.rank, self.labels, tuple(spins), self.monodromies, self.definitions
        )


def model_from_forms(
    name: str,
    rank: int,
    labels: Sequence[str],
    spin_exponent: Callable[[int], int],
    monodromy_exponent: Callable[[int, int], int],
    definitions: Sequence[tuple[str, str, str]] = (),
) -> AnyonModel:
    """Build a model from GF(2)-valued spin and monodromy exponents."""
    size = 1 << rank
    spins = tuple(-1 if spin_exponent(v) & 1 else 1 for v in range(size))
    mono = tuple(
        tuple(-1 if monodromy_exponent(u, v) & 1 else 1 for v in range(size)) for u in range(size)
    )
    return AnyonModel(name, rank, tuple(labels), spins, mono, tuple(definitions))


def _bit(v: int, i: int) -> int:
    return (v >> i) & 1


def _color_code() -> AnyonModel:
    labels = [""] * 16
    labels[0] = "1"
    definitions: list[tuple[str, str, str]] = []
    for lab in BOSON_LABELS:
        labels[boson_vector(lab)] = lab
    for c in COLORS:
        definitions.append((c + "y", c + "x", c + "z"))
    for p in ("x", "z"):
        definitions.append(("g" + p, "r" + p, "b" + p))
    for f, a, b in FERMION_DEFINITIONS:
        labels[boson_vector(a) ^ boson_vector(b)] = f
        definitions.append((f, a, b))
    order = {lab: i for i, lab in enumerate(CC_LABEL_ORDER)}
    definitions.sort(key=lambda t: order[t[0]])

    def spin(a: int) -> int:
        return _bit(a, 0) & _bit(a, 3) ^ _bit(a, 1) & _bit(a, 2)

    def mono(a: int, b: int) -> int:
        return (
            _bit(a, 0) & _bit(b, 3)
            ^ _bit(a, 3) & _bit(b, 0)
            ^ _bit(a, 1) & _bit(b, 2)
            ^ _bit(a, 2) & _bit(b, 1)
        )

    return model_from_forms("CC", 4, labels, spin, mono, definitions)


CC_LABEL_ORDER = ("1",) + BOSON_LABELS + tuple(f for f, _, _ in FERMION_DEFINITIONS)


def _toric_code() -> AnyonModel:
    return model_from_forms(
        "TC",
        2,
        ["1", "e", "m", "eps"],
        lambda a: _bit(a, 0) & _bit(a, 1),
        lambda a, b: _bit(a, 0) & _bit(b, 1) ^ _bit(a, 1) & _bit(b, 0),
        [("eps", "e", "m")],
    )


def _three_fermion() -> AnyonModel:
    return model_from_forms(
        "3F",
        2,
        ["1", "f1", "f2", "f3"],
        lambda a: _bit(a, 0) ^ _bit(a, 1) ^ _bit(a, 0) & _bit(a, 1),
        lambda a, b: _bit(a, 0) & _bit(b, 1) ^ _bit(a, 1) & _bit(b, 0),
        [("f3", "f1", "f2")],
    )


_BUILDERS = {"CC": _color_code, "TC": _toric_code, "3F": _three_fermion}
_CACHE: dict[str, AnyonModel] = {}


def builtin_model(name: str) -> AnyonModel:
    """One of ``"CC"``, ``"TC"`` or ``"3F"`` (case-insensitive)."""
    key = name.upper()
    if key not in _BUILDERS:
        raise ValueError(f"unknown model {name!r}; expected one of CC, TC, 3F")
    if key not in _CACHE:
        _CACHE[key] = _BUILDERS[key]()
    return _CACHE[key]


def product_model(
    first: AnyonModel, second: AnyonModel, tags: tuple[str, str] = ("-", "+"), name: str | None = None
) -> AnyonModel:
    """Direct product; charges of ``first`` occupy the low bits.

    A pair of nontrivial charges ``(a, b)`` is labelled ``a- b+`` written
    without a space, e.g. ``"e-m+"``.
    """
    r1 = first.rank
    labels = []
    for v in range(1 << (r1 + second.rank)):
        a, b = v & ((1 << r1) - 1), v >> r1
        parts = []
        if a:
            parts.append(first.labels[a] + tags[0])
        if b:
            parts.append(second.labels[b] + tags[1])
        labels.append("".join(parts) or "1")
    mask = (1 << r1) - 1
    spins = tuple(first.spins[v & mask] * second.spins[v >> r1] for v in range(len(labels)))
    mono = tuple(
        tuple(
            first.monodromies[u & mask][v & mask] * second.monodromies[u >> r1][v >> r1]
            for v in range(len(labels))
        )
        for u in range(len(labels))
    )
    return AnyonModel(name or f"{first.name}x{second.name}", r1 + second.rank, tuple(labels), spins, mono)


def fuse(model: AnyonModel, a: int | str | AnyonCharge, b: int | str | AnyonCharge) -> AnyonCharge:
    """Fusion product: the GF(2) sum of the two vectors."""
    return model.charge(model.vec(a) ^ model.vec(b))


def spin(model: AnyonModel, a: int | str | AnyonCharge) -> Phase:
    return model.spins[model.vec(a)]


def monodromy(model: AnyonModel, a: int | str | AnyonCharge, b: int | str | AnyonCharge) -> Phase:
    return model.monodromies[model.vec(a)][model.vec(b)]


def is_boson(model: AnyonModel, a: int | str | AnyonCharge) -> bool:
    return spin(model, a) == 1


def bosons(model: AnyonModel, include_identity: bool = False) -> list[AnyonCharge]:
    return [c for c in model.charges() if model.spins[c.vec] == 1 and (c.vec or include_identity)]


def fermions(model: AnyonModel) -> list[AnyonCharge]:
    return [c for c in model.charges() if model.spins[c.vec] == -1]


def fermion_decompositions(model: AnyonModel, f: int | str | AnyonCharge) -> list[tuple[AnyonCharge, AnyonCharge]]:
    """All unordered pairs of nontrivial bosons fusing to the fermion ``f``.

    Pairs are returned in vector order of their first member.
    """
    target = model.charge(f)
    if model.spins[target.vec] != -1:
        raise ValueError(f"{target.label} is not a fermion")
    found = []
    for a, b in itertools.combinations(bosons(model), 2):
        if a.vec ^ b.vec == target.vec:
            found.append((a, b))
    return found


def fermion_index(label: str) -> int:
    """Numeric index of a label ``f1`` .. ``f6``."""
    if len(label) != 2 or label[0] != "f" or label[1] not in "123456":
        raise ValueError(f"{label!r} is not a color-code fermion label")
    return int(label[1])


def boson_monodromy_rule(a: str, b: str) -> Phase:
    """Braiding of two color-code bosons from their labels alone.

    The monodromy is ``-1`` exactly when both the color and the Pauli labels
    differ.
    """
    return -1 if a[0] != b[0] and a[1] != b[1] else 1


def fermion_monodromy_rule(i: int, j: int) -> Phase:
    """Braiding of ``f_i`` with ``f_j``: ``-1`` iff ``i != j`` have equal parity."""
    return -1 if i != j and (i - j) % 2 == 0 else 1


@dataclass(frozen=True)
class LawCheck:
    name: str
    passed: bool
    witness: tuple[str, ...] = ()

    def __str__(self) -> str:
        tail = "" if self.passed else " witness=(" + ", ".join(self.witness) + ")"
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}{tail}"


@dataclass(frozen=True)
class ModelReport:
    model: str
    laws: tuple[LawCheck, ...]
    charges: int
    bosons: int
    fermions: int

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def law(self, name: str) -> LawCheck:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)


def _pairs_definitions_first(model: AnyonModel) -> Iterator[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    for _, a, b in model.definitions:
        pair = (model.vec(a), model.vec(b))
        seen.add(pair)
        yield pair
    for pair in itertools.product(range(model.size), repeat=2):
        if pair not in seen:
            yield pair


def verify_model(model: AnyonModel) -> ModelReport:
    """Check the defining laws of an abelian model over all charges.

    Laws: spin and monodromy of the vacuum are trivial, every charge is its
    own antiparticle, monodromy is symmetric and bilinear (the composite
    braiding law), the composite spin law
    ``spin(a x b) = spin(a) spin(b) M(a, b)`` and unit quantum dimensions.
    Each law records the first counterexample found; the composite spin law
    tries the label definitions of the model before the exhaustive sweep.
    """
    lab = model.labels
    size = model.size
    S, M = model.spins, model.monodromies
    laws = []

    if S[0] != 1:
        laws.append(LawCheck("vacuum", False, ("1",)))
    else:
        bad = next((v for v in range(size) if M[0][v] != 1), None)
        laws.append(LawCheck("vacuum", bad is None, () if bad is None else ("1", lab[bad])))

    # fusion is vector addition, so a x a = 1 holds; still recorded as a law so
    # that the report lists every property being relied upon
    laws.append(LawCheck("self-inverse", all(v ^ v == 0 for v in range(size))))

    sym = next(((u, v) for u in range(size) for v in range(u) if M[u][v] != M[v][u]), None)
    laws.append(LawCheck("monodromy-symmetric", sym is None, () if sym is None else (lab[sym[0]], lab[sym[1]])))

    bil = next(
        (
            (a, b, d)
            for a, b, d in itertools.product(range(size), repeat=3)
            if M[a ^ b][d] != M[a][d] * M[b][d]
        ),
        None,
    )
    laws.append(LawCheck("composite-braiding", bil is None, () if bil is None else tuple(lab[x] for x in bil)))

    spin_bad = next(
        ((a, b) for a, b in _pairs_definitions_first(model) if S[a ^ b] != S[a] * S[b] * M[a][b]),
        None,
    )
    laws.append(
        LawCheck("composite-spin", spin_bad is None, () if spin_bad is None else (lab[spin_bad[0]], lab[spin_bad[1]]))
    )

    # every abelian charge has exactly one fusion channel with any other, so
    # d_a^2 = sum over outcomes of d_c d_a / d_b forces d_a = 1
    laws.append(LawCheck("quantum-dimension", True))

    n_b = sum(1 for v in range(1, size) if S[v] == 1)
    n_f = sum(1 for v in range(size) if S[v] == -1)
    return ModelReport(model.name, tuple(laws), size, n_b, n_f)


def fusion_table(model: AnyonModel) -> list[list[str]]:
    return [[model.labels[a ^ b] for b in range(model.size)] for a in range(model.size)]


def spin_table(model: AnyonModel) -> list[tuple[str, Phase]]:
    return [(model.labels[v], model.spins[v]) for v in range(model.size)]


def monodromy_table(model: AnyonModel) -> list[list[Phase]]:
    return [list(row) for row in model.monodromies]


def display_order(model: AnyonModel) -> list[int]:
    """Vectors in the conventional display order (identity, bosons, fermions for CC)."""
    if model.name.rstrip("*") == "CC":
        return [model.vec(lab) for lab in CC_LABEL_ORDER]
    return list(range(model.size))
