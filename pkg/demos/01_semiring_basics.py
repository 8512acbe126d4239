#!/usr/bin/env python3
"""Max-plus vector arithmetic: the semiring, its units, and decompositions.

Vectors over a finite label set combine by entrywise max (addition) and
entrywise sum (multiplication).  The vectors of nonnegative entry sum form
a subsemiring whose invertible elements are exactly the degree-zero
vectors.
"""

from tropfan import TropVector, zero_unit

F = TropVector([1, -1, 0, 0, 0])
G = TropVector([0, 0, 1, -1, 0])

print("F          =", F.to_json())
print("G          =", G.to_json())
print("F (+) G    =", (F + G).to_json(), "  (entrywise max)")
print("F (*) G    =", (F * G).to_json(), "  (entrywise sum)")
print("deg F      =", F.degree)

bottom = TropVector.bottom(5)
print("\nbottom is the additive identity and multiplicative absorber:")
print("F (+) bot  =", (F + bottom).to_json())
print("F (*) bot  =", (F * bottom).to_json())

print("\ndegree-zero vectors invert by entrywise negation:")
print("F^-1       =", F.inverse().to_json())
print("F * F^-1   =", (F * F.inverse()).to_json(), "=", zero_unit(5).to_json())

print("\nany nonnegative-degree vector is a max of two units:")
H = TropVector([2, 1])
H1, H2 = H.decompose(0, 1)
print("H          =", H.to_json(), " deg", H.degree)
print("H1, H2     =", H1.to_json(), H2.to_json(), " both degree 0")
print("H1 (+) H2  =", (H1 + H2).to_json())
