"""The seven-dimensional cross product and its calibration 3-form.

The bilinear product on R^7 defined by (u x v) . w = phi(u, v, w), with phi
the unit-coefficient calibration 3-form, behaves like the familiar
three-dimensional cross product: antisymmetric, perpendicular to its
arguments, and satisfying u x (u x v) = (u.v) u - (u.u) v.  Its symmetry
group is the 14-dimensional exceptional compact group, realized here by
matrices that pull phi back to itself exactly.
"""

import random
from fractions import Fraction

from g2kit import (
    adapted_frame,
    associative_three_form,
    cross,
    dot,
    g2_defect,
    is_g2,
)
from g2kit.sampling import random_rational_frame


def e(k):
    return tuple(Fraction(1 if i == k - 1 else 0) for i in range(7))


phi = associative_three_form()
print("calibration 3-form:", phi)
print()
print("phi(e1,e2,e3) =", phi.evaluate([e(1), e(2), e(3)]))
print("phi(e2,e5,e7) =", phi.evaluate([e(2), e(5), e(7)]))
print()

print("e1 x e2        =", [str(x) for x in cross(e(1), e(2))])
print("e1 x (e1 x e2) =", [str(x) for x in cross(e(1), cross(e(1), e(2)))])

rng = random.Random(1)
u = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7))
v = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7))
lhs = cross(u, cross(u, v))
rhs = tuple(dot(u, v) * a - dot(u, u) * b for a, b in zip(u, v))
print("double-cross identity on random rationals:", lhs == rhs)
print("perpendicularity: (u x v).u =", dot(cross(u, v), u))
print()

print("identity matrix preserves phi:", is_g2([[Fraction(i == j) for j in range(7)] for i in range(7)]))
refl = [[Fraction(0)] * 7 for _ in range(7)]
for i, d in enumerate((-1, -1, 1, 1, 1, 1, 1)):
    refl[i][i] = Fraction(d)
print("reflection diag(-1,-1,1,...) preserves phi:", is_g2(refl))
print("  its defect form:", g2_defect(refl))
print()

# an orthonormal triple (u, v, w) with phi(u, v, w) = 0 completes to a group
# element by repeated cross products; the standard triple gives the identity
frame = adapted_frame(e(1), e(2), e(4))
print("frame of (e1, e2, e4) is identity:",
      all(frame.matrix[i][j] == (i == j) for i in range(7) for j in range(7)))

frame = random_rational_frame(random.Random(7))
print("a random exact group element moves the base point to:")
print("  x =", [str(x) for x in frame.x])
print("  still preserves phi exactly:", is_g2(frame.matrix))
