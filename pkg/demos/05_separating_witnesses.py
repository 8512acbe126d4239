#!/usr/bin/env python3
"""Separating witnesses: certifying that a point lies off a union of rays.

For any rational point p outside a finite union of rays Z there is a pair
of polynomial functions agreeing everywhere on Z and splitting at p.  The
pair certifies that the common-agreement locus of all Z-agreeing pairs is
exactly Z.
"""

from fractions import Fraction
from pathlib import Path

from tropfan import Fan1D, in_congruence_variety, separating_pair, verify_witness

here = Path(__file__).parent
X = Fan1D.load(here / "fans" / "fan5_r3.json")
dirs = list(X.directions)

p = (1, 1, 0)
w = separating_pair(dirs, p)
print("point off the support:", p)
print("f monomials:", w.f.sorted_monomials())
print("g = f plus the point direction", w.direction, " (K =", str(w.K) + ")")
print("values on the five ray directions:")
for d in dirs:
    print(f"  f{list(d)} = {w.f.eval(d)},  g{list(d)} = {w.g.eval(d)}")
print(f"values at p: f = {w.f.eval(p)}, g = {w.g.eval(p)}")
print("verified:", verify_witness(w, dirs))

print("\nmembership in the agreement locus is ray membership:")
for q in [(2, 0, 2), (0, 0, -7), (Fraction(1, 2), 0, Fraction(1, 2)),
          (-1, 0, -1), (1, 1, 1)]:
    ok, cert = in_congruence_variety(q, dirs)
    tag = "on the union" if ok else "certified outside"
    print(f"  {[str(c) for c in q]}: {tag}")
