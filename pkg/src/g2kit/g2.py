"""The R^7 cross product, its calibration 3-form, and adapted frames.

The compact exceptional group is realized as the stabilizer of the 3-form

    phi = e^123 + e^145 + e^167 + e^246 - e^257 - e^347 - e^356,

and the cross product is the bilinear map with (u x v) . w = phi(u, v, w).
An *adapted frame* is a matrix g in the stabilizer, read as an orthonormal
frame (columns g1..g7) together with the complex frame f_j = (g_2j - i g_2j+1)/2
on the tangent space of the unit sphere at x = g1.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .forms import ExteriorForm
from .scalars import (
    EXACT,
    FLOAT,
    ComplexRational,
    join_modes,
    matrix_mode,
    to_float,
    vector_mode,
)

PHI_TERMS = (
    ((1, 2, 3), 1),
    ((1, 4, 5), 1),
    ((1, 6, 7), 1),
    ((2, 4, 6), 1),
    ((2, 5, 7), -1),
    ((3, 4, 7), -1),
    ((3, 5, 6), -1),
)

DEFAULT_TOL = 1e-10


class FrameConstructionError(ValueError):
    """Input triple is not orthonormal/admissible, or the completion failed."""


def associative_three_form() -> ExteriorForm:
    """The calibration 3-form phi on R^7 (exact, unit coefficients)."""
    return ExteriorForm(7, 3, {idx: Fraction(s) for idx, s in PHI_TERMS})


def _structure_constants():
    # c[i][j] = list of (k, sign): (e_i x e_j) has component sign on e_k
    table = [[[] for _ in range(8)] for _ in range(8)]
    for (a, b, c), s in PHI_TERMS:
        for (i, j, k), sign in (
            ((a, b, c), s),
            ((b, c, a), s),
            ((c, a, b), s),
            ((b, a, c), -s),
            ((a, c, b), -s),
            ((c, b, a), -s),
        ):
            table[i][j].append((k, sign))
    return table

_CROSS_TABLE = _structure_constants()


def cross(u, v):
    """The seven-dimensional cross product, componentwise exact."""
    u, v = list(u), list(v)
    if len(u) != 7 or len(v) != 7:
        raise ValueError("cross product needs 7-vectors")
    join_modes(vector_mode(u), vector_mode(v))
    zero = u[0] * 0
    out = [zero] * 7
    for i in range(1, 8):
        if not u[i - 1]:
            continue
        for j in range(1, 8):
            if not v[j - 1]:
                continue
            for k, sign in _CROSS_TABLE[i][j]:
                term = u[i - 1] * v[j - 1]
                out[k - 1] = out[k - 1] + (term if sign == 1 else -term)
    return tuple(out)


def dot(u, v):
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    join_modes(vector_mode(u), vector_mode(v))
    return sum((a * b for a, b in zip(u, v)), start=u[0] * 0)


def ambient_metric(u, v):
    """The inner product the cross product is calibrated against."""
    return dot(u, v)


def g2_defect(matrix) -> ExteriorForm:
    """pullback(phi, g) - phi; the zero form exactly when g is in the group."""
    phi = associative_three_form()
    if matrix_mode(matrix) == FLOAT:
        phi = phi.as_float()
    return phi.pullback(matrix) - phi


def is_g2(matrix, tol=None) -> bool:
    """Whether the 7x7 matrix preserves phi (exactly, or within tol for floats).

    A passing matrix is also checked to be special orthogonal, which is a
    consequence of preserving phi; a violation indicates corrupted input.
    """
    rows = [list(r) for r in matrix]
    if len(rows) != 7 or any(len(r) != 7 for r in rows):
        raise ValueError("group membership test needs a 7x7 matrix")
    exact = matrix_mode(rows) != FLOAT
    defect = g2_defect(rows)
    if exact:
        ok = defect.is_zero
    else:
        ok = defect.norm_inf() < (DEFAULT_TOL if tol is None else tol)
    if ok:
        _assert_special_orthogonal(rows, exact, tol)
    return ok


def _assert_special_orthogonal(rows, exact, tol):
    gtg = linalg.mat_mul(linalg.transpose(rows), rows)
    d = linalg.det(rows, 0.0 if exact else 1e-12)
    if exact:
        ok = d == 1 and all(
            gtg[i][j] == (1 if i == j else 0) for i in range(7) for j in range(7)
        )
    else:
        t = DEFAULT_TOL if tol is None else tol
        err = max(
            abs(gtg[i][j] - (1.0 if i == j else 0.0)) for i in range(7) for j in range(7)
        )
        ok = err < 100 * t and abs(d - 1.0) < 100 * t
    if not ok:
        raise AssertionError("phi-preserving matrix fails the orthogonality check")


class AdaptedFrame:
    """A group element as a moving frame: base point x = g1, complex frame f_j.

    ``matrix`` is row-major; ``col(j)`` returns column j (1-based).  theta(j)
    is the complex-valued tangent coframe normalized so that the invariant
    2-form at x equals 2i * sum_j theta_j ^ conj(theta_j) exactly.
    """

    __slots__ = ("matrix", "mode")

    def __init__(self, matrix, check=True, tol=None):
        rows = tuple(tuple(r) for r in matrix)
        mode = EXACT if matrix_mode(rows) != FLOAT else FLOAT
        if check and not is_g2(rows, tol):
            raise FrameConstructionError("matrix does not preserve phi")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("AdaptedFrame is immutable")

    def col(self, j):
        return tuple(self.matrix[i][j - 1] for i in range(7))

    @property
    def x(self):
        return self.col(1)

    def f(self, j):
        """Complex tangent frame vector f_j = (g_2j - i g_2j+1)/2."""
        a, b = self.col(2 * j), self.col(2 * j + 1)
        if self.mode == EXACT:
            return tuple(
                ComplexRational(Fraction(x) / 2, -Fraction(y) / 2) for x, y in zip(a, b)
            )
        return tuple((x - 1j * y) / 2.0 for x, y in zip(a, b))

    def theta(self, j) -> ExteriorForm:
        """Coframe 1-form theta_j = (g_2j+1 - i g_2j)/2 as covector (ambient)."""
        a, b = self.col(2 * j), self.col(2 * j + 1)
        if self.mode == EXACT:
            comps = [
                ComplexRational(Fraction(y) / 2, -Fraction(x) / 2) for x, y in zip(a, b)
            ]
        else:
            comps = [(y - 1j * x) / 2.0 for x, y in zip(a, b)]
        return ExteriorForm.from_covector(comps)

    def tangent_columns(self):
        return [self.col(j) for j in range(2, 8)]

    def __eq__(self, other):
        if not isinstance(other, AdaptedFrame):
            return NotImplemented
        return self.matrix == other.matrix

    def __repr__(self):
        return f"AdaptedFrame(x={self.x})"


def adapted_frame(u, v, w, tol=None) -> AdaptedFrame:
    """Complete an orthonormal triple with phi(u,v,w) = 0 to a group element.

    Columns: u, v, u x v, w, u x w, v x w, -(u x v) x w.  The standard triple
    (e1, e2, e4) completes to the identity.  Membership is re-verified and the
    construction fails hard if the completion does not preserve phi.
    """
    u, v, w = tuple(u), tuple(v), tuple(w)
    mode = join_modes(join_modes(vector_mode(u), vector_mode(v)), vector_mode(w))
    mode = FLOAT if mode == FLOAT else EXACT
    t = DEFAULT_TOL if tol is None else tol

    def check(value, name):
        if mode == EXACT:
            if value != 0:
                raise FrameConstructionError(f"triple not admissible: {name} = {value}")
        elif abs(to_float(value)) > t:
            raise FrameConstructionError(f"triple not admissible: {name} = {value}")

    check(dot(u, u) - 1, "|u|^2 - 1")
    check(dot(v, v) - 1, "|v|^2 - 1")
    check(dot(w, w) - 1, "|w|^2 - 1")
    check(dot(u, v), "u.v")
    check(dot(u, w), "u.w")
    check(dot(v, w), "v.w")
    check(dot(cross(u, v), w), "phi(u,v,w)")

    uv = cross(u, v)
    cols = [u, v, uv, w, cross(u, w), cross(v, w), tuple(-x for x in cross(uv, w))]
    rows = [[cols[j][i] for j in range(7)] for i in range(7)]
    try:
        return AdaptedFrame(rows, check=True, tol=tol)
    except FrameConstructionError as exc:
        raise FrameConstructionError(
            "cross-product completion failed the membership check"
        ) from exc


def standard_frame() -> AdaptedFrame:
    return adapted_frame(
        (Fraction(1), 0, 0, 0, 0, 0, 0),
        (0, Fraction(1), 0, 0, 0, 0, 0),
        (0, 0, 0, Fraction(1), 0, 0, 0),
    )


def frame_rotate(frame: AdaptedFrame, unitary) -> AdaptedFrame:
    """Act on a frame by a special-unitary 3x3 matrix in the complex frame.

    New complex columns f'_k = sum_j U[j][k] f_j; the base point is fixed.
    For exact U in SU(3) the result is again a group element (re-verified).
    """
    u = [list(r) for r in unitary]
    cols = [frame.col(1)]
    new_cols = {}
    for k in range(1, 4):
        re_col = [0] * 7
        im_col = [0] * 7
        for j in range(1, 4):
            c = u[j - 1][k - 1]
            a = c.re if isinstance(c, ComplexRational) else c.real
            b = c.im if isinstance(c, ComplexRational) else c.imag
            gj, gj1 = frame.col(2 * j), frame.col(2 * j + 1)
            for i in range(7):
                re_col[i] = re_col[i] + a * gj[i] + b * gj1[i]
                im_col[i] = im_col[i] + a * gj1[i] - b * gj[i]
        new_cols[2 * k] = tuple(re_col)
        new_cols[2 * k + 1] = tuple(im_col)
    for j in range(2, 8):
        cols.append(new_cols[j])
    rows = [[cols[j][i] for j in range(7)] for i in range(7)]
    return AdaptedFrame(rows, check=True)
