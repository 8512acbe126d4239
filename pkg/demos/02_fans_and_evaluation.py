#!/usr/bin/env python3
"""Fans, balancing, and the weighted evaluation map.

A 1-dimensional fan is a set of weighted rational rays through the origin.
Evaluating a polynomial function on every primitive ray direction, scaled by
the ray weight, is a semiring map; on a balanced fan its generator matrix
has degree-zero rows.  Equality of two polynomial functions on the fan's
support is decided by one exact evaluation per ray.
"""

from pathlib import Path

from tropfan import (Fan1D, apply_phi_to_poly, check_balancing,
                     fan_from_generators, kernel_eq, parse_poly,
                     weighted_eval_map)

here = Path(__file__).parent
X = Fan1D.load(here / "fans" / "fan5_r3.json")
print("fan X in R^3 with rays:")
for ray in X.rays:
    print("  direction", list(ray.direction), "weight", ray.weight)
print("balanced:", check_balancing(X))

MF = weighted_eval_map(X)
print("\ngenerator matrix (rows = images of the coordinate functions):")
for row in MF.rows:
    print(" ", row.to_json(), " degree", row.degree)

f = parse_poly("x1 + x2", 3)
print("\nimage of x1 + x2 under the evaluation map:",
      apply_phi_to_poly(X, f).to_json())

g = parse_poly("x1 + x2 + x1*x2", 3)
print("x1 + x2 and x1 + x2 + x1*x2 agree on |X|? ", kernel_eq(X, f, g))

print("\nthe fan spanned by the generator columns recovers the directions:")
print(" ", list(fan_from_generators(MF).directions))
