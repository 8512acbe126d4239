#!/usr/bin/env python3
"""Enumerating every homomorphism out of a Laurent-generated subsemiring.

Homomorphisms correspond to integer matrices with zero row sums whose
columns are nonnegative rational multiples of source columns; restricting
the codomain adds a lattice condition on the rows.  The enumerator returns
them as single-parameter families: a primitive base matrix and the scalar
modulus its multiples must respect.
"""

from pathlib import Path

from tropfan import Fan1D, Lattice, enumerate_homs, weighted_eval_map

here = Path(__file__).parent
X = Fan1D.load(here / "fans" / "fan5_r3.json")
MF = weighted_eval_map(X)

print("=== full target with three labels ===")
enum = enumerate_homs(MF, 3)
print(f"{len(enum.families)} families (plus the zero matrix); all moduli 1:")
for fam in enum.families:
    print("  base", [list(r) for r in fam.base],
          " columns from source labels", [a + 1 if a is not None else 0
                                          for a in fam.assignment])

print("\n=== restricted to the subsemiring generated by (1,-2,1), (1,2,-3) ===")
L = Lattice.from_rows([(1, -2, 1), (1, 2, -3)])
enum = enumerate_homs(MF, 3, L)
for fam in enum.families:
    members = ", ".join(str(s * fam.modulus) for s in (1, 2, 3))
    print("  base", [list(r) for r in fam.base],
          f" modulus {fam.modulus} (parameters {members}, ...)")

print("\nsmallest members of the first family:")
fam = enum.families[0]
for k in (1, 2):
    print(" ", [list(r) for r in fam.matrix_for(k * fam.modulus)])
