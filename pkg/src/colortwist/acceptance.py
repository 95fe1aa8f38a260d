"""Registry of the twelve reproducibility claims checked by ``verify-paper``.

Each claim is a function returning a :class:`ClaimResult`.  The registry
order is fixed, so reports are stable regardless of how claims are run.
Reference data that is compared against (class tables, quantum dimensions,
fermion decompositions, unfolding tables) is written out literally below.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .anyons import (
    BOSON_LABELS,
    builtin_model,
    fermion_decompositions,
    fermion_index,
    fermions,
    verify_model,
)
from .boundaries import (
    CC_BOUNDARIES,
    act_on_boundary,
    enumerate_lagrangian_subgroups,
    fold_table,
    named_boundary,
)
from .codes import (
    FamilyParams,
    build_code,
    build_torus_color_code,
    insert_pauli_twist_pair,
    insert_pauli_wall,
    rate_bound,
    ring,
    validate_code,
)
from .codes.torus import vertex_index
from .pauli import PauliOperator, check_commutation, code_k, commutes, distance_exact, in_group
from .symmetries import (
    TABLE_COLUMNS,
    TABLE_ROWS,
    class_table,
    compose_all,
    conjugacy_classes,
    cross_wall,
    enumerate_symmetries,
    quantum_dimension_squared,
    unfold_map,
    verify_iso,
    word,
    wreath_check,
)

CLASS_TABLE = (
    "ABBBDD",
    "BCCCEE",
    "BCCCEE",
    "BCCCEE",
    "DEEEFF",
    "DEEEFF",
)
CLASS_TABLE_D = (
    "GHHHII",
    "HGIIHH",
    "HIGIHH",
    "HIIGHH",
    "IHHHIG",
    "IHHHGI",
)
# quantum dimensions squared, same layout as the class tables
DIM_SQUARED = (
    (1, 4, 4, 4, 16, 16),
    (4, 4, 4, 4, 16, 16),
    (4, 4, 4, 4, 16, 16),
    (4, 4, 4, 4, 16, 16),
    (16, 16, 16, 16, 4, 4),
    (16, 16, 16, 16, 4, 4),
)
DIM_SQUARED_D = (
    (2, 8, 8, 8, 8, 8),
    (8, 2, 8, 8, 8, 8),
    (8, 8, 2, 8, 8, 8),
    (8, 8, 8, 2, 8, 8),
    (8, 8, 8, 8, 8, 2),
    (8, 8, 8, 8, 2, 8),
)

# three boson-pair decompositions per fermion as printed; the third entry for
# f3 repeats the second decomposition of f2 and is the one known misprint
PRINTED_DECOMPOSITIONS = {
    "f1": (("rz", "bx"), ("gz", "by"), ("ry", "gx")),
    "f2": (("gy", "bz"), ("rz", "gx"), ("ry", "bx")),
    "f3": (("gy", "bx"), ("rx", "gz"), ("gy", "bz")),
    "f4": (("rx", "gy"), ("gz", "bx"), ("rz", "by")),
    "f5": (("rz", "gy"), ("gx", "bz"), ("rx", "by")),
    "f6": (("rx", "bz"), ("ry", "gz"), ("gx", "by")),
}
MISPRINTS = {("f3", "gy", "bz")}

UNFOLD_2TC = {
    "rx": "e-", "ry": "e-m+", "rz": "m+",
    "gx": "e-e+", "gy": "eps-eps+", "gz": "m-m+",
    "bx": "e+", "by": "m-e+", "bz": "m-",
}  # fmt: skip
UNFOLD_2X3F = {
    "rx": "f1-f1+", "ry": "f2-f3+", "rz": "f3-f2+",
    "gx": "f2-f2+", "gy": "f3-f1+", "gz": "f1-f3+",
    "bx": "f3-f3+", "by": "f1-f2+", "bz": "f2-f1+",
}  # fmt: skip


@dataclass(frozen=True)
class ClaimResult:
    ok: bool
    detail: str


@dataclass(frozen=True)
class Claim:
    number: int
    tag: str
    title: str
    run: Callable[[], ClaimResult]


def _result(failures: list[str], summary: str) -> ClaimResult:
    if failures:
        return ClaimResult(False, "; ".join(failures[:3]))
    return ClaimResult(True, summary)


# ---------------------------------------------------------------- 1: anyon tables


def _same_pauli_rule(a: str, b: str) -> str | None:
    """Product of two bosons forced by the row, column and diagonal fusion rules."""
    if a == b:
        return "1"
    if a[1] == b[1]:
        return ({"r", "g", "b"} - {a[0], b[0]}).pop() + a[1]
    if a[0] == b[0]:
        return a[0] + ({"x", "y", "z"} - {a[1], b[1]}).pop()
    return None


def claim_anyon_tables() -> ClaimResult:
    m = builtin_model("CC")
    fails: list[str] = []
    if not verify_model(m).passed:
        fails.append("model laws fail")
    for a, b in itertools.product(BOSON_LABELS, repeat=2):
        want = _same_pauli_rule(a, b)
        got = m.labels[m.vec(a) ^ m.vec(b)]
        if want is not None and got != want:
            fails.append(f"{a} x {b} = {got}, rule gives {want}")
        if want is None and m.spins[m.vec(got)] != -1:
            fails.append(f"{a} x {b} = {got} is not a fermion")
        expect = -1 if a[0] != b[0] and a[1] != b[1] else 1
        if m.monodromies[m.vec(a)][m.vec(b)] != expect:
            fails.append(f"M({a},{b})")
    for f, g in itertools.product(fermions(m), repeat=2):
        i, j = fermion_index(f.label), fermion_index(g.label)
        expect = -1 if i != j and (i - j) % 2 == 0 else 1
        if m.monodromies[f.vec][g.vec] != expect:
            fails.append(f"M({f.label},{g.label})")
    misprints = set()
    for f, pairs in PRINTED_DECOMPOSITIONS.items():
        found = {frozenset((a.label, b.label)) for a, b in fermion_decompositions(m, f)}
        if len(found) != 3:
            fails.append(f"{f} has {len(found)} decompositions")
        for a, b in pairs:
            if frozenset((a, b)) not in found:
                misprints.add((f, a, b))
    if misprints != MISPRINTS:
        fails.append(f"unexpected printed decompositions {sorted(misprints - MISPRINTS)}")
    return _result(fails, "16x16 fusion, spin and monodromy; 18 decompositions, f3 misprint confirmed")


# ---------------------------------------------------------------- 2-5: symmetries


def claim_symmetry_counts() -> ClaimResult:
    start = time.perf_counter()
    counts = {name: len(enumerate_symmetries(name)) for name in ("CC", "3F", "TC")}
    ok = counts == {"CC": 72, "3F": 6, "TC": 2} and time.perf_counter() - start < 10
    return ClaimResult(ok, f"CC {counts['CC']}, 3F {counts['3F']}, TC {counts['TC']}")


def claim_conjugacy_classes() -> ClaimResult:
    classes = conjugacy_classes()
    fails = []
    if len(classes) != 9:
        fails.append(f"{len(classes)} classes")
    if sum(len(c) for c in classes) != 72:
        fails.append("class sizes do not sum to 72")
    for got, want, name in ((class_table(), CLASS_TABLE, "plain"), (class_table(True), CLASS_TABLE_D, "D")):
        for r, (row, ref) in enumerate(zip(got, want)):
            if "".join(row) != ref:
                fails.append(f"{name} table row {r}: {''.join(row)} != {ref}")
    sizes = " ".join(f"{c.name}{len(c)}" for c in classes)
    return _result(fails, f"9 classes ({sizes}), 72 table cells match")


def claim_quantum_dimensions() -> ClaimResult:
    fails = []
    for prefix, ref in (("", DIM_SQUARED), ("D ", DIM_SQUARED_D)):
        for r, row in enumerate(TABLE_ROWS):
            for c, col in enumerate(TABLE_COLUMNS):
                got = quantum_dimension_squared(word(f"{prefix}{row} {col}"))
                if got != ref[r][c]:
                    fails.append(f"d^2({prefix}{row} {col}) = {got}, expected {ref[r][c]}")
    for cls in conjugacy_classes():
        values = {quantum_dimension_squared(g) for g in cls.elements}
        if len(values) != 1:
            fails.append(f"class {cls.name} has d^2 values {sorted(values)}")
    return _result(fails, "d^2 over 72 twists matches; constant on classes")


def claim_named_identities() -> ClaimResult:
    checks = {
        "RGR = B": compose_all(word("R"), word("G"), word("R")) == word("B"),
        "DBD = Z": compose_all(word("D"), word("B"), word("D")) == word("Z"),
        "DZD = B": compose_all(word("D"), word("Z"), word("D")) == word("B"),
        "G across R = B": cross_wall(word("G"), word("R")) == word("B"),
        "G across D = Y": cross_wall(word("G"), word("D")) == word("Y"),
    }
    return _result([k for k, ok in checks.items() if not ok], ", ".join(checks))


# ---------------------------------------------------------------- 6-7: boundaries and unfolding


def claim_boundaries() -> ClaimResult:
    fails = []
    cc = enumerate_lagrangian_subgroups("CC")
    if {b.elements for b in cc} != set(CC_BOUNDARIES.values()) or len(cc) != 6:
        fails.append(f"CC has {len(cc)} Lagrangian subgroups, not the six rows and columns")
    n_tc, n_3f = len(enumerate_lagrangian_subgroups("TC")), len(enumerate_lagrangian_subgroups("3F"))
    if n_tc != 2:
        fails.append(f"TC has {n_tc}")
    if n_3f != 0:
        fails.append(f"3F has {n_3f}")
    group = enumerate_symmetries("CC")
    red = named_boundary("red")
    images = {act_on_boundary(g, red).name for g in group}
    stab = sum(1 for g in group if act_on_boundary(g, red).elements == red.elements)
    if len(images) != 6 or stab != 12:
        fails.append(f"orbit {len(images)}, stabilizer {stab}")
    folds = [b for _, b in fold_table()]
    if sorted(folds) != sorted(CC_BOUNDARIES):
        fails.append(f"fold walls give {folds}")
    return _result(fails, "CC 6, TC 2, 3F 0; transitive with stabilizer 12; 6 fold walls onto 6 boundaries")


def claim_unfolding() -> ClaimResult:
    fails = []
    for target, table in (("2TC", UNFOLD_2TC), ("2x3F", UNFOLD_2X3F)):
        umap = unfold_map(target)
        for boson, label in table.items():
            if umap.label(boson) != label:
                fails.append(f"{target}: {boson} -> {umap.label(boson)}, expected {label}")
        if not verify_iso(umap).passed:
            fails.append(f"{target} is not an isomorphism")
    if not wreath_check().passed:
        fails.append("wreath-product parameterization fails")
    return _result(fails, "both relabelings preserve fusion, spin, monodromy; wreath bijection holds")


# ---------------------------------------------------------------- 8-12: codes


def claim_small_codes() -> ClaimResult:
    fails = []
    spec, code = build_code(FamilyParams("pauli-triangular", l=2))
    gens = sorted(str(p) for p in code.stabilizers)
    if gens != sorted(["XXIX", "YIYY", "IZZZ"]):
        fails.append(f"[[4,1,2]] generators {gens}")
    group = list(code.stabilizers)
    for text in ("IIXX", "IYIY", "ZIIZ"):
        op = PauliOperator.from_string(text)
        if not all(commutes(op, s) for s in group) or in_group(op, group):
            fails.append(f"{text} is not a logical")
    for l, d in ((2, 2), (3, 3), (4, 4)):
        _, c = build_code(FamilyParams("pauli-triangular", l=l))
        got = distance_exact(c, d).distance
        if (c.n, code_k(c), got) != (l * l, 1, d):
            fails.append(f"l={l}: [[{c.n},{code_k(c)},{got}]]")
    return _result(fails, "[[4,1,2]], [[9,1,3]], [[16,1,4]]")


def _family_checks(params: FamilyParams, fails: list[str]) -> Fraction | None:
    spec, code = build_code(params)
    report = validate_code(code, params, spec)
    if not report.ok:
        bad = [c.line() for c in report.checks if not c.ok]
        fails.append(f"{params.family} {params.lattice or ''} s={params.s} d={params.d}: {bad}")
    return report.rate


def claim_triangular() -> ClaimResult:
    fails: list[str] = []
    for lattice, d in itertools.product(("666", "488"), (3, 5)):
        _family_checks(FamilyParams("triangular", d=d, lattice=lattice), fails)
    return _result(fails, "666 and 488 at d = 3, 5: k = 1, exact distance, weight caps")


def claim_stellated_color() -> ClaimResult:
    fails: list[str] = []
    for lattice, d in itertools.product(("666", "488"), (3, 5)):
        rates = []
        for s in (3, 5, 7):
            rate = _family_checks(FamilyParams("stellated-color", d=d, s=s, lattice=lattice), fails)
            rates.append(rate)
            if rate is not None and rate >= rate_bound(lattice, s):
                fails.append(f"{lattice} s={s} d={d}: c = {rate} reaches the bound")
        if None in rates or not all(a < b for a, b in zip(rates, rates[1:])):
            fails.append(f"{lattice} d={d}: rates {rates} not increasing")
    return _result(fails, "s = 3, 5, 7 at d = 3, 5: k = s-1 plus one gauge qubit, exact d, rising c below bound")


def claim_stellated_surface() -> ClaimResult:
    fails: list[str] = []
    for d in (3, 5):
        rates = {}
        for s in (3, 5, 7):
            rates[s] = _family_checks(FamilyParams("stellated-surface", d=d, s=s), fails)
        for s in (5, 7):
            if rates[s] is None or rates[s] >= rate_bound("surface", s):
                fails.append(f"s={s} d={d}: c = {rates[s]}")
        if rates[5] is None or rates[7] is None or not rates[5] < rates[7]:
            fails.append(f"d={d}: c(5) = {rates[5]}, c(7) = {rates[7]}")
    return _result(fails, "s = 3 is the [[7,1,3]]/[[19,1,5]] triangle; s = 5, 7 rise below 2 - 2/s")


def claim_walls_and_twists() -> ClaimResult:
    fails: list[str] = []
    spec, code = build_torus_color_code(2)
    k0 = code_k(code)
    for radius in (1, 2):
        _, walled = insert_pauli_wall(spec, ring(2, (2, 2), radius))
        if check_commutation(walled) is not None or code_k(walled) != k0:
            fails.append(f"ring wall of radius {radius}")
    L = 2
    start, end = (0, 0), (3, 0)
    paths = {
        "straight": [(0, 0), (1, 0), (2, 0), (3, 0)],
        "above": [(0, 0), (0, 1), (1, 1), (2, 1), (3, 0)],
        "below": [(0, 0), (1, -1), (2, -1), (3, -1), (3, 0)],
        "detour": [(0, 0), (-1, 1), (-1, 2), (0, 2), (1, 2), (2, 1), (3, 0)],
    }
    deltas = {}
    for name, verts in paths.items():
        assert verts[0] == start and verts[-1] == end
        _, twisted = insert_pauli_twist_pair(spec, [vertex_index(L, v) for v in verts])
        if check_commutation(twisted) is not None:
            fails.append(f"{name} twist pair does not commute")
        deltas[name] = code_k(twisted) - k0
    if len(set(deltas.values())) != 1:
        fails.append(f"twist-pair k changes differ: {deltas}")
    delta = next(iter(deltas.values()))
    return _result(fails, f"rings keep k = {k0}; twist pair dk = {delta} on {len(paths)} paths")


CLAIMS: tuple[Claim, ...] = (
    Claim(1, "anyon tables", "fusion, spin and braiding of the 16 charges", claim_anyon_tables),
    Claim(2, "symmetry count", "72 color-code symmetries, 6 for 3F, 2 for TC", claim_symmetry_counts),
    Claim(3, "conjugacy classes", "nine classes and both class tables", claim_conjugacy_classes),
    Claim(4, "quantum dimensions", "d^2 of all 72 twists", claim_quantum_dimensions),
    Claim(5, "named identities", "products and wall crossings of named twists", claim_named_identities),
    Claim(6, "boundaries", "Lagrangian subgroups and fold walls", claim_boundaries),
    Claim(7, "unfolding", "toric-code and three-fermion relabelings", claim_unfolding),
    Claim(8, "small codes", "[[4,1,2]] and Pauli-boundary triangles", claim_small_codes),
    Claim(9, "triangular codes", "6.6.6 and 4.8.8 triangles", claim_triangular),
    Claim(10, "stellated color codes", "k, distance and rate of stellated color codes", claim_stellated_color),
    Claim(11, "stellated surface codes", "k, distance and rate of stellated surface codes", claim_stellated_surface),
    Claim(12, "walls and twists", "Y walls and twist pairs on the torus", claim_walls_and_twists),
)


def run_claim(claim: Claim) -> tuple[ClaimResult, float]:
    start = time.perf_counter()
    try:
        result = claim.run()
    except Exception as exc:  # a crash is reported as a failed claim
        result = ClaimResult(False, f"{type(exc).__name__}: {exc}")
    return result, time.perf_counter() - start


def format_line(claim: Claim, result: ClaimResult) -> str:
    status = "PASS" if result.ok else "FAIL"
    return f"{status} {claim.number:>2} [{claim.tag}] {claim.title}: {result.detail}"
