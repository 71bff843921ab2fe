"""Geometry over the projective line: cotangent charts, moment maps, the
transported weight, and the orbit symplectic form.

Covectors on the Lie algebra are stored by their values (h, e, f) on the
basis (H, E, F).  Under the trace form a covector with values (h, e, f)
corresponds to the matrix (h/2) H + f E + e F, written (p, q, r) = (h/2, f, e)
below; the norm used for fiber cutoffs is the flat Euclidean norm of
(h, e, f), which is computable and fixes the free norm choice once.

The fiber coordinate xi means the covector xi dz in the chart at hand.
Chart transition: w = 1/z, eta = -z^2 xi.
"""

from dataclasses import dataclass

import numpy as np

from .lie import FlagPoint, Sl2Element, flow_velocity_chart


class NotRegular(ValueError):
    """Raised when a covector or weight fails a regularity requirement."""


class NotTangent(ValueError):
    """Raised when a vector is not tangent to the coadjoint orbit."""


@dataclass(frozen=True)
class CovectorValue:
    """Element of the dual Lie algebra by its values on (H, E, F)."""

    h: complex
    e: complex
    f: complex

    def evaluate(self, g: Sl2Element) -> complex:
        return g.a * self.h + g.b * self.e + g.c * self.f

    @property
    def values(self):
        return np.array([self.h, self.e, self.f])

    @property
    def matrix_coords(self):
        """(p, q, r) of the trace-form dual matrix [[p, q], [r, -p]]."""
        return np.array([0.5 * self.h, self.f, self.e])

    def norm(self) -> float:
        return float(np.sqrt(abs(self.h) ** 2 + abs(self.e) ** 2 + abs(self.f) ** 2))

    def su2_values(self):
        """Values on the su(2) basis (iH, E-F, iE+iF)."""
        return np.array([1j * self.h, self.e - self.f, 1j * (self.e + self.f)])

    def __add__(self, other):
        return CovectorValue(self.h + other.h, self.e + other.e, self.f + other.f)

    def __sub__(self, other):
        return CovectorValue(self.h - other.h, self.e - other.e, self.f - other.f)

    def __mul__(self, s):
        return CovectorValue(s * self.h, s * self.e, s * self.f)

    __rmul__ = __mul__


ZERO_COVECTOR = CovectorValue(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class Weight:
    """A weight of the standard Cartan, determined by its value on H."""

    lambda_h: complex

    @property
    def regular(self) -> bool:
        return self.lambda_h != 0


@dataclass(frozen=True)
class CotangentPoint:
    """A covector xi dz over the chart point z in one of the two charts."""

    chart: int
    z: complex
    xi: complex

    def base(self) -> FlagPoint:
        if self.chart == 1:
            return FlagPoint([1.0, self.z])
        return FlagPoint([self.z, 1.0])

    def to_chart(self, chart: int) -> "CotangentPoint":
        if chart == self.chart:
            return self
        if abs(self.z) < 1e-150:
            raise ZeroDivisionError("point is at infinity of the other chart")
        return CotangentPoint(chart, 1.0 / self.z, -self.z * self.z * self.xi)


def transition(p: CotangentPoint) -> CotangentPoint:
    """The same cotangent vector in the other standard chart."""
    return p.to_chart(2 if p.chart == 1 else 1)


# ---------------------------------------------------------------------------
# moment maps (vectorized kernels take chart masks and coordinate arrays)
# ---------------------------------------------------------------------------

def moment_values(chart, z, xi):
    """Values (h, e, f) of the moment map; arrays broadcast elementwise."""
    chart = np.asarray(chart)
    z = np.asarray(z, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    in1 = chart == 1
    h = np.where(in1, -2.0 * z * xi, 2.0 * z * xi)
    e = np.where(in1, -z * z * xi, xi)
    f = np.where(in1, xi, -z * z * xi)
    return h, e, f


def lambda_site_values(chart, z, lam: Weight):
    """Values of the transported weight at the base point of (chart, z).

    The weight (lambda_h, 0, 0) at [1:0] is moved to x by any special
    unitary u with u.[1:0] = x; the stabilizing torus fixes it, so the
    result only depends on x.
    """
    z = np.asarray(z, dtype=complex)
    chart = np.asarray(chart)
    n2 = 1.0 + np.abs(z) ** 2
    in1 = chart == 1
    # chart 1: v = (1, z)/|..|,  chart 2: v = (z, 1)/|..|
    d = np.where(in1, 1.0 - np.abs(z) ** 2, np.abs(z) ** 2 - 1.0) / n2
    v1bar_v2 = np.where(in1, z, np.conj(z)) / n2
    lh = lam.lambda_h
    return lh * d, lh * v1bar_v2, lh * np.conj(v1bar_v2)


def twisted_moment_values(chart, z, xi, lam: Weight):
    mh, me, mf = moment_values(chart, z, xi)
    lh, le, lf = lambda_site_values(chart, z, lam)
    return mh + lh, me + le, mf + lf


def fiber_norm(chart, z, xi):
    """Norm ||mu(zeta)|| used for cycle cutoffs; linear in xi."""
    h, e, f = moment_values(chart, z, xi)
    return np.sqrt(np.abs(h) ** 2 + np.abs(e) ** 2 + np.abs(f) ** 2)


def moment(p: CotangentPoint) -> CovectorValue:
    """Moment map: pairs the covector with the flow of each basis element."""
    h, e, f = moment_values(p.chart, p.z, p.xi)
    return CovectorValue(complex(h), complex(e), complex(f))


def lambda_transport(x: FlagPoint, lam: Weight) -> CovectorValue:
    chart = x.chart()
    h, e, f = lambda_site_values(chart, x.coordinate(chart), lam)
    return CovectorValue(complex(h), complex(e), complex(f))


def twisted_moment(p: CotangentPoint, lam: Weight) -> CovectorValue:
    return moment(p) + lambda_transport(p.base(), lam)


# ---------------------------------------------------------------------------
# Mobius lifts to the cotangent bundle
# ---------------------------------------------------------------------------

def mobius_cotangent(m, chart, z, xi):
    """Pushforward of covectors under the projective action of a 2x2 matrix.

    Returns (chart', z', xi') with the output chart picked per point so the
    coordinate stays bounded.  Vectorized over coordinate arrays.
    """
    m = np.asarray(m, dtype=complex)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    chart = np.asarray(chart)
    z = np.asarray(z, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    in1 = chart == 1
    # homogeneous image (A, B) of the representative (1, z) or (z, 1)
    A = np.where(in1, m[0, 0] + m[0, 1] * z, m[0, 0] * z + m[0, 1])
    B = np.where(in1, m[1, 0] + m[1, 1] * z, m[1, 0] * z + m[1, 1])
    out1 = np.abs(B) <= np.abs(A)
    z_new = np.where(out1, B / np.where(out1, A, 1.0), A / np.where(out1, 1.0, B))
    denom = np.where(out1, A, B)
    # dz'/dz = +- det / denom^2, sign flipping when exactly one chart is swapped
    sign = np.where(in1 == out1, 1.0, -1.0)
    deriv = sign * det / (denom * denom)
    return np.where(out1, 1, 2), z_new, xi / deriv


def so2_matrix(theta: float) -> np.ndarray:
    return np.array([[np.cos(theta), -np.sin(theta)],
                     [np.sin(theta), np.cos(theta)]])


def coadjoint(m, cov: CovectorValue) -> CovectorValue:
    """Ad*(m) on covector values: the dual matrix transforms by conjugation."""
    m = np.asarray(m, dtype=complex)
    p, q, r = cov.matrix_coords
    zmat = np.array([[p, q], [r, -p]])
    zz = m @ zmat @ np.linalg.inv(m)
    return CovectorValue(2.0 * zz[0, 0], zz[1, 0], zz[0, 1])


# ---------------------------------------------------------------------------
# orbit symplectic form
# ---------------------------------------------------------------------------

def _ad_matrix(pqr):
    """Matrix of x -> [x, Z] on (p, q, r) coordinates, stacked over Z."""
    p, q, r = pqr[..., 0], pqr[..., 1], pqr[..., 2]
    zero = np.zeros_like(p)
    return np.stack([
        np.stack([zero, r, -q], axis=-1),
        np.stack([2.0 * q, -2.0 * p, zero], axis=-1),
        np.stack([-2.0 * r, zero, 2.0 * p], axis=-1),
    ], axis=-2)


def _bracket(a, b):
    """[A, B] in (p, q, r) coordinates, elementwise over stacks."""
    pa, qa, ra = a[..., 0], a[..., 1], a[..., 2]
    pb, qb, rb = b[..., 0], b[..., 1], b[..., 2]
    return np.stack([
        rb * qa - qb * ra,
        2.0 * (qb * pa - pb * qa),
        2.0 * (pb * ra - rb * pa),
    ], axis=-1)


def _trace_pairing(a, b):
    return (2.0 * a[..., 0] * b[..., 0] + a[..., 1] * b[..., 2]
            + a[..., 2] * b[..., 1])


def _inv3(m):
    """Explicit inverse of stacked 3x3 matrices (vector arithmetic only)."""
    a, b, c = m[..., 0, 0], m[..., 0, 1], m[..., 0, 2]
    d, e, f = m[..., 1, 0], m[..., 1, 1], m[..., 1, 2]
    g, h, i = m[..., 2, 0], m[..., 2, 1], m[..., 2, 2]
    A = e * i - f * h
    B = -(d * i - f * g)
    C = d * h - e * g
    det = a * A + b * B + c * C
    inv = np.empty(m.shape, dtype=complex)
    inv[..., 0, 0] = A
    inv[..., 0, 1] = -(b * i - c * h)
    inv[..., 0, 2] = b * f - c * e
    inv[..., 1, 0] = B
    inv[..., 1, 1] = a * i - c * g
    inv[..., 1, 2] = -(a * f - c * d)
    inv[..., 2, 0] = C
    inv[..., 2, 1] = -(a * h - b * g)
    inv[..., 2, 2] = a * e - b * d
    return inv / det[..., None, None]


def sigma_batch(zeta_pqr, w1_pqr, w2_pqr):
    """Orbit symplectic form on stacked tangent pairs.

    Solves [x_i, Z] = W_i (the ambiguity along the centralizer drops out of
    the result) and returns tr(Z [x_1, x_2]).  The rank-2 systems are made
    invertible by adding the projector onto the centralizer.
    """
    ad = _ad_matrix(zeta_pqr)
    n = 2.0 * (zeta_pqr[..., 0] ** 2 + zeta_pqr[..., 1] * zeta_pqr[..., 2])
    t = np.stack([2.0 * zeta_pqr[..., 0], zeta_pqr[..., 2], zeta_pqr[..., 1]],
                 axis=-1)
    m = ad + zeta_pqr[..., :, None] * t[..., None, :] / n[..., None, None]
    minv = _inv3(m)
    x1 = np.einsum("...ij,...j->...i", minv, w1_pqr)
    x2 = np.einsum("...ij,...j->...i", minv, w2_pqr)
    return _trace_pairing(zeta_pqr, _bracket(x1, x2))


def kks_eval(zeta: CovectorValue, w1: CovectorValue, w2: CovectorValue,
             tangency_tol: float = 1e-8) -> complex:
    """sigma_lambda(w1, w2) = <zeta, [x1, x2]> with ad*_{x_i} zeta = w_i.

    Raises NotRegular when the coadjoint map at zeta has rank below 2 and
    NotTangent when either w_i fails to lie in its image.
    """
    zp = zeta.matrix_coords
    ad = _ad_matrix(zp)
    u, s, vh = np.linalg.svd(ad)
    if s[1] <= 1e-12 * max(s[0], 1e-300):
        raise NotRegular("coadjoint map has rank < 2 at zeta")
    xs = []
    for w in (w1, w2):
        wp = w.matrix_coords
        x = np.linalg.pinv(ad, rcond=1e-10) @ wp
        resid = np.linalg.norm(ad @ x - wp)
        scale = max(np.linalg.norm(wp), 1e-300)
        if resid > tangency_tol * max(scale, 1.0):
            raise NotTangent(f"residual {resid:.3e} exceeds tolerance")
        xs.append(x)
    return complex(_trace_pairing(zp, _bracket(xs[0], xs[1])))


# ---------------------------------------------------------------------------
# pullback of the orbit form through the twisted moment map
# ---------------------------------------------------------------------------

FD_STEP = 1e-5


def _mu_lambda_real(chart, coords, lam):
    """Twisted moment map as a function of real chart coordinates."""
    z = coords[..., 0] + 1j * coords[..., 1]
    xi = coords[..., 2] + 1j * coords[..., 3]
    h, e, f = twisted_moment_values(chart, z, xi, lam)
    return np.stack([h, e, f], axis=-1)


def moment_jacobian(p: CotangentPoint, lam: Weight, step: float | None = None):
    """Central finite-difference Jacobian of the twisted moment map.

    Returns a (3, 4) complex array: columns are the images of the unit
    tangents along (Re z, Im z, Re xi, Im xi).  The map is real analytic
    but not holomorphic, so the four real directions are independent.
    """
    x0 = np.array([p.z.real, p.z.imag, p.xi.real, p.xi.imag])
    if step is None:
        step = FD_STEP * max(1.0, np.linalg.norm(x0))
    cols = []
    for k in range(4):
        dx = np.zeros(4)
        dx[k] = step
        fp = _mu_lambda_real(p.chart, x0 + dx, lam)
        fm = _mu_lambda_real(p.chart, x0 - dx, lam)
        cols.append((fp - fm) / (2.0 * step))
    return np.stack(cols, axis=-1)


def pulled_back_area(p: CotangentPoint, lam: Weight, t1, t2) -> complex:
    """Value of the integrand 2-form on two tangent vectors of T*X.

    Tangents are real 4-vectors in the chart of p, ordered
    (Re z, Im z, Re xi, Im xi).  The form is the pullback of the orbit
    symplectic form through the twisted moment map, which equals
    -sigma + pi* tau without ever constructing tau.
    """
    if not lam.regular:
        raise NotRegular("weight must be regular (lambda_h != 0)")
    jac = moment_jacobian(p, lam)
    w1 = jac @ np.asarray(t1, dtype=float)
    w2 = jac @ np.asarray(t2, dtype=float)
    zeta = twisted_moment(p, lam)

    def cov(values):
        return CovectorValue(values[0], values[1], values[2])

    return kks_eval(zeta, cov(w1), cov(w2))
