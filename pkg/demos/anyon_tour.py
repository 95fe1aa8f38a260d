"""Walk through the color-code anyon model: charges, twists, boundaries.

    python3 demos/anyon_tour.py
"""

from colortwist.anyons import builtin_model, fermion_decompositions, fermions
from colortwist.boundaries import enumerate_lagrangian_subgroups, fold_table
from colortwist.symmetries import conjugacy_classes, describe, quantum_dimension_squared, unfold_map


def main() -> None:
    cc = builtin_model("CC")
    print("fermions and their boson decompositions")
    for f in fermions(cc):
        pairs = ", ".join(f"{a} x {b}" for a, b in fermion_decompositions(cc, f))
        print(f"  {f}: {pairs}")

    print("\nconjugacy classes of the 72 symmetries")
    for cls in conjugacy_classes():
        rep = cls.representative
        print(f"  {cls.name}: {len(cls):>2} elements, d^2 = {quantum_dimension_squared(rep):>2}, e.g. {describe(rep)}")

    print("\nboundaries")
    for b in enumerate_lagrangian_subgroups("CC"):
        print(f"  {b}")

    print("\nunfolding into two toric codes and two three-fermion layers")
    tc, tf = unfold_map("2TC"), unfold_map("2x3F")
    for label in ("rx", "rz", "bx", "bz", "gy"):
        print(f"  {label:>3} -> {tc.label(label):<9} {tf.label(label)}")

    print("\nfolding two three-fermion layers across a wall")
    for wall, boundary in fold_table():
        print(f"  {wall:<24} -> {boundary}")


if __name__ == "__main__":
    main()
