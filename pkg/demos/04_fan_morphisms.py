#!/usr/bin/env python3
"""Every morphism between two 1-dimensional tropical fans.

A morphism is the restriction of an integer linear map carrying one fan's
support into the other's.  They biject with the homomorphisms between the
function semirings, so the enumeration reduces to the matrix-family search
followed by an exact integer solve that rewrites each family in terms of
the source fan's generators.
"""

from pathlib import Path

from tropfan import Fan1D, apply_functor, enumerate_morphisms, primitive, weighted_eval_map

here = Path(__file__).parent
X = Fan1D.load(here / "fans" / "fan5_r3.json")
Y = Fan1D.load(here / "fans" / "fan3_r2.json")

enum = enumerate_morphisms(Y, X)
print(f"{len(enum.families)} matrix families map |Y| into |X| (plus the zero map):")
for fam in enum.families:
    print("  T =", [list(r) for r in fam.base_T], "times any positive integer")

fam = enum.families[0]
T = fam.matrix_for(1)
print("\nthe first family at parameter 1 sends the rays of Y to rays of X:")
for d in Y.directions:
    image = tuple(sum(T[i][j] * d[j] for j in range(2)) for i in range(3))
    print(f"  {list(d)} -> {list(image)}  (ray of X: {list(primitive(image))})")

MG = weighted_eval_map(Y)
print("\nits induced images of X's generators:")
for v in apply_functor(T, MG):
    print(" ", v.to_json())
