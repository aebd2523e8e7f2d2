import random
from fractions import Fraction

import pytest

from g2kit import linalg
from g2kit.forms import ExteriorForm
from g2kit.g2 import (
    FrameConstructionError,
    adapted_frame,
    ambient_metric,
    associative_three_form,
    cross,
    dot,
    frame_rotate,
    g2_defect,
    is_g2,
    standard_frame,
)
from g2kit.sampling import random_g2_matrix, random_rational_frame, random_su3

from conftest import e7, rand_vector


def test_calibration_form_terms():
    phi = associative_three_form()
    assert len(phi.terms) == 7
    assert phi.terms == {
        (1, 2, 3): 1,
        (1, 4, 5): 1,
        (1, 6, 7): 1,
        (2, 4, 6): 1,
        (2, 5, 7): -1,
        (3, 4, 7): -1,
        (3, 5, 6): -1,
    }


def test_calibration_form_values():
    phi = associative_three_form()
    assert phi.evaluate([e7(1), e7(2), e7(3)]) == 1
    assert phi.evaluate([e7(2), e7(5), e7(7)]) == -1
    assert phi.evaluate([e7(1), e7(2), e7(2)]) == 0


def test_cross_basic():
    assert cross(e7(1), e7(2)) == e7(3)
    assert cross(e7(1), cross(e7(1), e7(2))) == tuple(-x for x in e7(2))
    u = rand_vector(random.Random(3), 7)
    assert all(x == 0 for x in cross(u, u))
    v = rand_vector(random.Random(4), 7)
    assert cross(u, v) == tuple(-x for x in cross(v, u))


def test_cross_defined_by_calibration(rng):
    phi = associative_three_form()
    for _ in range(30):
        u, v, w = (rand_vector(rng, 7) for _ in range(3))
        assert dot(cross(u, v), w) == phi.evaluate([u, v, w])


def test_cross_perpendicular(rng):
    for _ in range(50):
        u, v = rand_vector(rng, 7), rand_vector(rng, 7)
        c = cross(u, v)
        assert dot(u, c) == 0 and dot(v, c) == 0
        assert ambient_metric(u, c) == 0


def test_double_cross_identity(rng):
    # u x (u x v) = (u.v) u - (u.u) v, exactly, on random rational pairs
    for _ in range(200):
        u, v = rand_vector(rng, 7), rand_vector(rng, 7)
        lhs = cross(u, cross(u, v))
        uv, uu = dot(u, v), dot(u, u)
        rhs = tuple(uv * a - uu * b for a, b in zip(u, v))
        assert lhs == rhs


def test_metric_examples():
    assert ambient_metric(e7(1), e7(1)) == 1
    assert ambient_metric(e7(1), e7(2)) == 0


def test_is_g2_identity_and_reflections():
    ident = [[Fraction(1 if i == j else 0) for j in range(7)] for i in range(7)]
    assert is_g2(ident)
    refl = [[Fraction(0)] * 7 for _ in range(7)]
    for i, d in enumerate((-1, -1, 1, 1, 1, 1, 1)):
        refl[i][i] = Fraction(d)
    assert not is_g2(refl)
    # pullback oracle: the defect form is exactly the changed terms
    defect = g2_defect(refl)
    assert not defect.is_zero
    assert defect.coeff((1, 4, 5)) == -2  # d1*d4*d5 = -1 flips this term


def test_is_g2_shape_errors():
    with pytest.raises(ValueError):
        is_g2([[1, 0], [0, 1]])


def test_adapted_frame_standard_triple():
    f = adapted_frame(e7(1), e7(2), e7(4))
    ident = [[Fraction(1 if i == j else 0) for j in range(7)] for i in range(7)]
    assert [list(r) for r in f.matrix] == ident


def test_adapted_frame_rejects_nonadmissible():
    with pytest.raises(FrameConstructionError):
        adapted_frame(e7(1), e7(2), e7(3))  # phi(e1,e2,e3) = 1 != 0
    with pytest.raises(FrameConstructionError):
        adapted_frame(e7(1), e7(1), e7(4))  # not orthonormal


def test_adapted_frame_swapped_triple():
    f = adapted_frame(e7(2), e7(1), e7(4))
    assert f.col(3) == tuple(-x for x in e7(3))
    assert is_g2(f.matrix)


def test_adapted_frames_at_float_points():
    from g2kit.sphere import random_admissible_triple

    rng = random.Random(99)
    for _ in range(10):
        u, v, w = random_admissible_triple(rng)
        f = adapted_frame(u, v, w)
        assert g2_defect([list(r) for r in f.matrix]).norm_inf() < 1e-10


def test_membership_implies_special_orthogonal(rng):
    m = random_g2_matrix(rng)
    assert is_g2(m)
    mtm = linalg.mat_mul(linalg.transpose(m), m)
    assert all(mtm[i][j] == (1 if i == j else 0) for i in range(7) for j in range(7))
    assert linalg.det(m) == 1


def test_frame_rotation_stays_in_group(rng):
    frame = standard_frame()
    for _ in range(3):
        u3 = random_su3(rng)
        rotated = frame_rotate(frame, u3)
        assert rotated.x == frame.x
        assert is_g2(rotated.matrix)


def test_random_rational_frames(rng):
    f = random_rational_frame(rng)
    assert is_g2(f.matrix)
    assert dot(f.x, f.x) == 1


def test_theta_coframe_properties():
    """theta_j pairs the complex frame correctly and sees only the tangent."""
    from g2kit.scalars import ComplexRational

    rng = random.Random(5)
    frame = random_rational_frame(rng)
    for j in (1, 2, 3):
        th = frame.theta(j)
        assert th.evaluate([frame.x]) == ComplexRational(0)
        for k in (1, 2, 3):
            val = sum(
                (th.coeff((i + 1,)) * frame.f(k)[i] for i in range(7)),
                start=ComplexRational(0),
            )
            expected = ComplexRational(0, Fraction(-1, 2)) if j == k else ComplexRational(0)
            assert val == expected  # theta_j(f_k) = -(i/2) delta_jk


def test_invariant_two_form_from_coframe(rng):
    """2i sum theta_j ^ conj(theta_j) = iota_x phi for any frame (exact)."""
    from g2kit.scalars import I_EXACT

    frame = random_rational_frame(rng)
    phi = associative_three_form()
    om = ExteriorForm.zero(7, 2)
    for j in (1, 2, 3):
        th = frame.theta(j)
        om = om + (2 * I_EXACT) * th.wedge(th.conj())
    assert om == phi.interior(frame.x)
