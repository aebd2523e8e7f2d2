"""Orbit types of 3-forms in six dimensions and the elliptic-definite verdict.

A 3-form on R^6 is split, elliptic, or degenerate according to the sign of
the invariant lambda = tr(K^2)/6 where K(v) = (iota_v rho)^rho read through a
volume form.  Elliptic forms determine a complex structure J = K/sqrt(-lambda)
and a decomposable complex volume with 3 Im(Upsilon) = rho.  For an
almost-symplectic structure, d(omega) splits uniquely into a conformal part
and a primitive part; when the primitive part is elliptic and omega is
positive for the recovered J, the structure is elliptic definite - which is
exactly what happens on the six-sphere.
"""

from fractions import Fraction

from g2kit import (
    ExteriorForm,
    classify_3form,
    elliptic_definite_check,
    elliptic_normal_form,
    primitive_decompose,
    split_normal_form,
)


def show(name, rho):
    cls = classify_3form(rho)
    print(f"{name:<28} tag = {cls.tag:<11} lambda = {cls.discriminant}")
    return cls


show("split normal form", split_normal_form())
cls = show("elliptic normal form", elliptic_normal_form())
show("decomposable e^123", ExteriorForm(6, 3, {(1, 2, 3): Fraction(1)}))
print()
print("elliptic J (exact, J^2 = -I):")
for row in cls.j_matrix:
    print("  ", [str(x) for x in row])
print("recovered complex volume:", cls.upsilon)
print()

# the sphere instance at the base point: restrict everything to the tangent space
from g2kit.g2 import associative_three_form
from g2kit.sphere import basis_point, omega_at


def e(k):
    return tuple(Fraction(1 if i == k - 1 else 0) for i in range(7))


basis = [e(k) for k in range(2, 8)]
om6 = omega_at(basis_point(1)).restrict(basis)
dom6 = (3 * associative_three_form()).restrict(basis)
lam, pi = primitive_decompose(om6, dom6)
print("sphere datum: conformal 1-form =", lam, " (zero: purely primitive)")
rep = elliptic_definite_check(om6, dom6)
print(f"verdict: tag = {rep.tag}, hermitian signature = {rep.signature},"
      f" elliptic definite = {rep.elliptic_definite}")
print()

# the other signature also occurs, on a sign-flipped toy instance
om_flip = ExteriorForm(6, 2, {(1, 2): Fraction(1), (3, 4): Fraction(-1), (5, 6): Fraction(-1)})
rep2 = elliptic_definite_check(om_flip, 3 * elliptic_normal_form())
print(f"sign-flipped toy 2-form: signature = {rep2.signature},"
      f" elliptic definite = {rep2.elliptic_definite}")
