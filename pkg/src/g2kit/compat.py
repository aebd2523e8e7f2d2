"""Linear algebra of compatible pairs on R^{2n}.

A complex structure J (J^2 = -I) and a nondegenerate 2-form omega are
*compatible* when omega(Jv, Jw) = omega(v, w); the induced bilinear form
g(v, w) = omega(v, Jw) is then symmetric and nondegenerate, and its inertia
(2p, 2q) defines the omega-index (p, q) of J.  Everything here works on
plain matrices: omega is the matrix O with O[i][j] = omega(e_i, e_j).

Signatures are computed by exact congruence reduction over the rationals
(see :mod:`g2kit.linalg`), never by eigenvalues.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .linalg import DegenerateFormError
from .scalars import FLOAT, matrix_mode, sabs


class NotComplexStructureError(ValueError):
    """Matrix does not square to minus the identity."""


class IncompatiblePairError(ValueError):
    """omega-index requested for a non-compatible pair."""


def _is_zero_matrix(m, tol):
    if tol == 0.0:
        return all(not x for row in m for x in row)
    return all(sabs(x) <= tol for row in m for x in row)


def _tol_for(m, tol):
    if tol is not None:
        return tol
    return 1e-10 if matrix_mode(m) == FLOAT else 0.0


def check_complex_structure(j, tol=None):
    j = [list(r) for r in j]
    n = len(j)
    if n % 2 or any(len(r) != n for r in j):
        raise NotComplexStructureError("complex structures need even square matrices")
    t = _tol_for(j, tol)
    jj = linalg.mat_mul(j, j)
    defect = [[jj[a][b] + (1 if a == b else 0) for b in range(n)] for a in range(n)]
    if not _is_zero_matrix(defect, t):
        raise NotComplexStructureError("J^2 != -I")
    return j


def standard_complex_structure(n):
    """Block [[0, -I], [I, 0]] on R^{2n}."""
    z, one = Fraction(0), Fraction(1)
    j = [[z] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        j[k][n + k] = -one
        j[n + k][k] = one
    return j


def standard_symplectic_matrix(n):
    """The 2-form matrix paired with the standard J so the metric is identity."""
    z, one = Fraction(0), Fraction(1)
    o = [[z] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        o[k][n + k] = one
        o[n + k][k] = -one
    return o


def induced_metric(omega, j, tol=None):
    """g(v, w) = omega(v, Jw) as a matrix; symmetric iff the pair is compatible."""
    omega = [list(r) for r in omega]
    t = _tol_for(omega, tol)
    try:
        linalg.inverse(omega, t)
    except DegenerateFormError:
        raise DegenerateFormError("omega is degenerate") from None
    return linalg.mat_mul(omega, j)


def symmetry_defect(m):
    n = len(m)
    return max(
        (sabs(m[a][b] - m[b][a]) for a in range(n) for b in range(a + 1, n)),
        default=0.0,
    )


def is_compatible_omega(omega, j, tol=None):
    """omega(Jv, Jw) = omega(v, w), i.e. t(J) omega J = omega."""
    omega = [list(r) for r in omega]
    j = check_complex_structure(j, tol)
    t = _tol_for(omega, tol)
    lhs = linalg.mat_mul(linalg.transpose(j), linalg.mat_mul(omega, j))
    return _is_zero_matrix(linalg.mat_sub(lhs, omega), t)


def is_compatible_metric(g, j, tol=None):
    """g(Jv, Jw) = g(v, w), i.e. t(J) g J = g."""
    g = [list(r) for r in g]
    j = check_complex_structure(j, tol)
    t = _tol_for(g, tol)
    lhs = linalg.mat_mul(linalg.transpose(j), linalg.mat_mul(g, j))
    return _is_zero_matrix(linalg.mat_sub(lhs, g), t)


def inertial_index(g, tol=None):
    """(positives, negatives) of a symmetric form; degenerate input raises."""
    g = [list(r) for r in g]
    t = _tol_for(g, tol)
    return linalg.signature(g, t)


def omega_index(omega, j, tol=None):
    """The (p, q) with p + q = n such that the induced metric has inertia (2p, 2q)."""
    if not is_compatible_omega(omega, j, tol):
        raise IncompatiblePairError("pair is not omega-compatible")
    g = induced_metric(omega, j, tol)
    pos, neg = inertial_index(g, tol)
    if pos % 2 or neg % 2:
        raise IncompatiblePairError(
            f"induced metric inertia ({pos},{neg}) is not even"
        )
    return (pos // 2, neg // 2)


# ---------------------------------------------------------------------------
# dimension counts of the compatibility spaces
# ---------------------------------------------------------------------------

def _vectorize_condition(rows_of_condition, n2):
    """Flatten matrix conditions L(A) = 0 into a (len x n2^2) system."""
    return rows_of_condition


def _linear_map_matrix(apply_map, n):
    """Matrix of A |-> apply_map(A) on the n x n matrix space, row per output entry."""
    n2 = n * n
    cols = []
    for k in range(n2):
        a = [[Fraction(0)] * n for _ in range(n)]
        a[k // n][k % n] = Fraction(1)
        out = apply_map(a)
        cols.append([out[i][j] for i in range(n) for j in range(n)])
    return [[cols[k][r] for k in range(n2)] for r in range(n2)]


def compatibility_space_dims(n):
    """Tangent dimensions at the standard pair of three structure spaces.

    Returns a dict with the dimension of the space of complex structures
    (2n^2), of the omega-compatible ones (n^2 + n), and of the metric-
    compatible ones (n^2 - n), each computed as the kernel dimension of the
    linearized defining equations at (g0, omega0, J0); the achieved ranks are
    included as evidence.
    """
    if n < 1:
        raise ValueError("n must be positive")
    j0 = standard_complex_structure(n)
    om0 = standard_symplectic_matrix(n)
    m = 2 * n

    def anticommute(a):  # tangent to {J^2 = -I}: A J0 + J0 A = 0
        return linalg.mat_add(linalg.mat_mul(a, j0), linalg.mat_mul(j0, a))

    def omega_lin(a):  # derivative of t(J) om J = om
        return linalg.mat_add(
            linalg.mat_mul(linalg.transpose(a), linalg.mat_mul(om0, j0)),
            linalg.mat_mul(linalg.transpose(j0), linalg.mat_mul(om0, a)),
        )

    def metric_lin(a):  # derivative of t(J) g J = g at g = I
        return linalg.mat_add(
            linalg.mat_mul(linalg.transpose(a), j0),
            linalg.mat_mul(linalg.transpose(j0), a),
        )

    m_anti = _linear_map_matrix(anticommute, m)
    m_omega = _linear_map_matrix(omega_lin, m)
    m_metric = _linear_map_matrix(metric_lin, m)

    total = linalg.kernel_dim(m_anti)
    omega_dim = linalg.kernel_dim(m_anti + m_omega)
    metric_dim = linalg.kernel_dim(m_anti + m_metric)
    return {
        "n": n,
        "total": total,
        "omega_compatible": omega_dim,
        "g_compatible": metric_dim,
        "evidence": {
            "rank_anticommutator": linalg.rank(m_anti),
            "rank_with_omega_condition": linalg.rank(m_anti + m_omega),
            "rank_with_metric_condition": linalg.rank(m_anti + m_metric),
            "matrix_space_dim": m * m,
        },
    }
