from fractions import Fraction

from g2kit import linalg
from g2kit.forms import ExteriorForm, pullback
from g2kit.sampling import random_invertible_rational
from g2kit.scalars import I_EXACT
from g2kit.threeforms import (
    classify_3form,
    elliptic_normal_form,
    recover_upsilon,
    split_normal_form,
    standard_volume_form,
    upsilon_type_defect,
)

from conftest import e_vec


def complex_line(a, b):
    return ExteriorForm.from_covector(
        [Fraction(1 if i == a - 1 else 0) for i in range(6)]
    ) + I_EXACT * ExteriorForm.from_covector(
        [Fraction(1 if i == b - 1 else 0) for i in range(6)]
    )


NORMAL_UPSILON = complex_line(1, 2).wedge(complex_line(3, 4)).wedge(complex_line(5, 6))


def test_split_normal_form():
    cls = classify_3form(split_normal_form())
    assert cls.tag == "split"
    assert cls.discriminant > 0


def test_elliptic_normal_form():
    cls = classify_3form(elliptic_normal_form())
    assert cls.tag == "elliptic"
    assert cls.discriminant < 0
    assert cls.sqrt_is_exact
    j2 = linalg.mat_mul(cls.j_matrix, cls.j_matrix)
    assert all(j2[a][b] == (-1 if a == b else 0) for a in range(6) for b in range(6))
    assert upsilon_type_defect(cls.upsilon, cls.j_matrix) == 0


def test_elliptic_normal_form_is_imaginary_part():
    # the normal form is Im((e1+ie2)^(e3+ie4)^(e5+ie6)) by direct expansion
    assert NORMAL_UPSILON.imag() == elliptic_normal_form()


def test_upsilon_recovery_normalization():
    cls = classify_3form(3 * elliptic_normal_form())
    assert cls.upsilon == NORMAL_UPSILON
    assert 3 * cls.upsilon.imag() == 3 * elliptic_normal_form()


def test_degenerate_cases():
    single = ExteriorForm(6, 3, {(1, 2, 3): Fraction(1)})
    assert classify_3form(single).tag == "degenerate"
    assert classify_3form(single).discriminant == 0
    assert classify_3form(ExteriorForm.zero(6, 3)).tag == "degenerate"


def test_scaling_homogeneity():
    base = classify_3form(3 * elliptic_normal_form())
    t = Fraction(3, 2)
    scaled = classify_3form(t**3 * (3 * elliptic_normal_form()))
    assert scaled.j_matrix == base.j_matrix
    assert scaled.upsilon == t**3 * base.upsilon


def test_orientation_normalization():
    """J always induces the orientation of the supplied volume form."""
    rho = elliptic_normal_form()
    plus = classify_3form(rho, standard_volume_form())
    minus = classify_3form(rho, (-1) * standard_volume_form())
    assert plus.j_matrix == [[-x for x in row] for row in minus.j_matrix]


def test_tag_invariant_under_pullback(rng):
    for rho, tag in ((split_normal_form(), "split"), (elliptic_normal_form(), "elliptic")):
        for _ in range(30):
            a = random_invertible_rational(rng, 6, bound=3)
            assert classify_3form(pullback(rho, a)).tag == tag


def test_recover_upsilon_requires_elliptic():
    cls = classify_3form(3 * elliptic_normal_form())
    ups = recover_upsilon(3 * elliptic_normal_form(), cls.j_matrix)
    assert ups == NORMAL_UPSILON


def test_sphere_primitive_form_is_elliptic_with_standard_structure():
    """Cross-module oracle: the sphere's primitive 3-form recovers its J."""
    from g2kit.g2 import dot
    from g2kit.sphere import basis_point, phi_tangential, standard_j, upsilon_at
    from g2kit.g2 import standard_frame

    u = basis_point(1)
    basis = [e_vec(7, k) for k in range(2, 8)]
    pi6 = (3 * phi_tangential(u)).restrict(basis)
    om6 = None
    from g2kit.sphere import omega_at

    om = omega_at(u)
    vol = om.restrict(basis)
    vol = vol.wedge(vol).wedge(vol)
    cls = classify_3form(pi6, vol)
    assert cls.tag == "elliptic"
    assert cls.sqrt_is_exact
    jmat = [
        [dot(basis[p], standard_j(u, basis[t])) for t in range(6)] for p in range(6)
    ]
    assert cls.j_matrix == jmat
    ups_expected = upsilon_at(u, standard_frame()).restrict(basis)
    assert cls.upsilon == ups_expected


def test_sphere_primitive_form_elliptic_at_float_points():
    import random as _r

    from g2kit.sphere import frame_at_float_point, phi_tangential

    rng = _r.Random(31)
    for _ in range(10):
        frame = frame_at_float_point(rng, None)
        u = frame.x
        basis = frame.tangent_columns()
        pi6 = (3.0 * phi_tangential(u)).restrict([list(b) for b in basis], tol=1e-9)
        cls = classify_3form(pi6)
        assert cls.tag == "elliptic"
        assert cls.discriminant < 0
