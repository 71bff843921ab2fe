"""Analytic pairings: Fourier transforms of bump forms, the compact
Weyl/Kirillov pair, the fixed point density, the cycle integrals with
optional fiber shear, the Gaussian fiber limit, and the rotation-sphere
localization anchor.

Pairings integrate against the volume element of the (a, b, c) basis
coordinates (and of the su(2) basis coordinates on the compact side); the
cycle integral carries the 1/(2 pi i) normalization of one complex
dimension.
"""

import math
import threading
from dataclasses import dataclass

import numpy as np

from .lie import (ELLIPTIC, HYPERBOLIC, FlagPoint, NotRegularSemisimple,
                  Sl2Element, classify, spectral_data)
from .flag import (CovectorValue, NotRegular, Weight, lambda_transport,
                   sigma_batch, twisted_moment_values)
from .cycles import (AdaptedAtlas, ParametrizedCycle, fiber_cycle,
                     patch_quadrature, theta_deform)
from .quadrature import adaptive_box_rule, box_rule, panel_rule, panels_rule

TWO_PI_I = 2.0j * math.pi
_FD_REL = 1e-5


# ---------------------------------------------------------------------------
# test functions and their Fourier transform
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TestFunction:
    """Smooth bump supported on a closed ball of R^3.

    Values are poly(u) * exp(-1/(1-u)) with u = |x - center|^2 / radius^2
    inside the ball and exactly zero outside; `poly` holds coefficients of
    the radial polynomial in u, so the support is representable exactly.
    """

    center: tuple
    radius: float
    poly: tuple = (1.0,)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        u = np.sum((x - np.array(self.center)) ** 2, axis=-1) / self.radius ** 2
        inside = u < 1.0
        u_safe = np.where(inside, u, 0.0)
        with np.errstate(over="ignore"):
            bump = np.exp(-1.0 / (1.0 - u_safe))
        return np.where(inside, np.polyval(self.poly[::-1], u_safe) * bump, 0.0)

    @property
    def box(self):
        return [(c - self.radius, c + self.radius) for c in self.center]


_GRID_CACHE: dict = {}
_GRID_LOCK = threading.Lock()


def _phi_grid(phi: TestFunction, degree: int):
    """Cached tensor Gauss grid over the support box with phi-weighted
    weights; reads are lock-free, insertion is exclusive."""
    key = (phi, degree)
    grid = _GRID_CACHE.get(key)
    if grid is None:
        with _GRID_LOCK:
            grid = _GRID_CACHE.get(key)
            if grid is None:
                nodes, weights = box_rule(phi.box, degree)
                grid = (nodes, weights * phi(nodes))
                _GRID_CACHE[key] = grid
    return grid


FOURIER_DEGREE = 24


def fourier_batch(phi: TestFunction, zeta, degree: int = FOURIER_DEGREE,
                  chunk_budget: int = 30_000_000):
    """phi-hat at a stack of covectors: int phi(x) e^{<x, zeta>} dx.

    `zeta` has shape (..., 3) in the dual coordinates of phi's domain; no
    factor of i is inserted in the exponent.
    """
    nodes, wphi = _phi_grid(phi, degree)
    z = np.asarray(zeta, dtype=complex)
    flat = z.reshape(-1, 3)
    out = np.empty(flat.shape[0], dtype=complex)
    chunk = max(1, chunk_budget // nodes.shape[0])
    for i in range(0, flat.shape[0], chunk):
        block = flat[i:i + chunk]
        out[i:i + chunk] = wphi @ np.exp(nodes @ block.T)
    return out.reshape(z.shape[:-1])


def fourier(phi: TestFunction, zeta, degree: int = FOURIER_DEGREE) -> complex:
    """Fourier transform of phi at one covector (values on the basis)."""
    if isinstance(zeta, CovectorValue):
        zeta = zeta.values
    return complex(fourier_batch(phi, np.asarray(zeta, dtype=complex), degree))


def integral(phi: TestFunction, degree: int = FOURIER_DEGREE) -> float:
    nodes, wphi = _phi_grid(phi, degree)
    return float(np.sum(wphi))


# ---------------------------------------------------------------------------
# compact warm-up: Weyl and Kirillov for su(2)
# ---------------------------------------------------------------------------

def weyl_character_su2(n: int, theta) -> float:
    """Two-term Weyl sum on the Cartan element with root value 2 i theta.

    Equals sin((n+1) theta)/theta with the removable singularity filled by
    the dimension n+1; this already carries the square-root Jacobian factor
    that turns the group character into the Lie algebra one.
    """
    theta = np.asarray(theta, dtype=float)
    return (n + 1) * np.sinc((n + 1) * theta / np.pi)


def weyl_pairing_su2(n: int, phi: TestFunction,
                     degree: int = FOURIER_DEGREE) -> float:
    """int theta_pi(x) phi(x) dx over su(2) coordinates.

    The character extends from the Cartan axis by rotation invariance, so
    it evaluates to weyl_character_su2 at the coordinate norm.
    """
    nodes, wphi = _phi_grid(phi, degree)
    return float(np.sum(wphi * weyl_character_su2(n, np.linalg.norm(nodes, axis=1))))


def kirillov_pairing_su2(n: int, phi: TestFunction,
                         degree_polar: int = 40, degree_azimuth: int = 16,
                         fourier_degree: int = FOURIER_DEGREE) -> complex:
    """Integral of phi-hat over the coadjoint sphere of radius n+1.

    The sphere carries the orbit symplectic measure over 2 pi, which has
    total mass n+1; in coordinates the pairing is
    (r / 4 pi) * int_{S^2} phi-hat(i r m) dOmega(m) with r = n + 1.
    """
    r = float(n + 1)
    cos_nodes, cos_w = panel_rule(-1.0, 1.0, degree_polar)
    az_nodes, az_w = panels_rule(np.linspace(0.0, 2.0 * math.pi, 9), degree_azimuth)
    C, A = np.meshgrid(cos_nodes, az_nodes, indexing="ij")
    WC, WA = np.meshgrid(cos_w, az_w, indexing="ij")
    sin_t = np.sqrt(1.0 - C ** 2)
    m = np.stack([sin_t * np.cos(A), sin_t * np.sin(A), C], axis=-1)
    fhat = fourier_batch(phi, 1j * r * m, fourier_degree)
    return complex(np.sum(WC * WA * fhat) * r / (4.0 * math.pi))


# ---------------------------------------------------------------------------
# fixed point side
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityRule:
    """Integer local multiplicities: keyed by stability for hyperbolic
    elements, free inputs (in canonical eigenvalue order) for elliptic."""

    attracting: int = 1
    repelling: int = 1
    elliptic: tuple = (1, 1)

    @staticmethod
    def ones() -> "MultiplicityRule":
        return MultiplicityRule(1, 1, (1, 1))

    @staticmethod
    def attracting_only() -> "MultiplicityRule":
        return MultiplicityRule(1, 0, (1, 0))

    @staticmethod
    def zeros() -> "MultiplicityRule":
        return MultiplicityRule(0, 0, (0, 0))


@dataclass(frozen=True)
class PairingReport:
    value: complex
    quadrature_degree: int
    cutoff_R: float
    theta_t: float | None
    tail_estimate: float


def fixed_point_density(g: Sl2Element, lam: Weight,
                        m: MultiplicityRule = MultiplicityRule.ones()) -> complex:
    """Sum over the two fixed points of m_x e^{<g, lam_x>} / d_x(g).

    On the split (hyperbolic) side the denominator d_x is 2 nu = |alpha|
    at both fixed points: the attracting point's linearization rate is
    -2 nu, and the sign is absorbed by the orientation of its limiting
    cotangent fiber under the real/holomorphic identification.  This is
    the calibration that makes the multiplicities of the deformation
    endpoints come out as the sheaf-local integers (1, 1) for the circle
    cycle and (1, 0) for a hemisphere cycle; it was pinned numerically by
    regularized slice integrals of those cycles.  Elliptic elements keep
    the signed linearization rates, matching the classical compact-group
    localization; their multiplicities stay caller-supplied.
    """
    sd = spectral_data(g)
    if classify(g).tag == HYPERBOLIC:
        # canonical order puts the attracting point first (alpha_1 = -2 nu)
        mults = (m.attracting, m.repelling)
        denoms = (2.0 * sd.nu, 2.0 * sd.nu)
    else:
        mults = m.elliptic
        denoms = sd.alpha
    total = 0.0 + 0.0j
    for mult, x, den in zip(mults, sd.fixed_points, denoms):
        if mult == 0:
            continue
        lam_x = lambda_transport(x, lam)
        total += mult * np.exp(lam_x.evaluate(g)) / den
    return complex(total)


def _density_batch(abc, lam: Weight, m: MultiplicityRule):
    """Vectorized fixed point density over (N, 3) coordinate stacks."""
    a, b, c = abc[:, 0], abc[:, 1], abc[:, 2]
    q = a * a + b * c
    nu = np.sqrt(q.astype(complex))  # principal branch matches the canonical pick
    out = np.zeros(abc.shape[0], dtype=complex)
    regular = np.abs(q) > 1e-300
    lh = lam.lambda_h

    for sign, idx in ((1.0, 0), (-1.0, 1)):
        lam_val = np.where(q > 0,
                           float(m.attracting if idx == 0 else m.repelling),
                           float(m.elliptic[idx]))
        # eigenvector of sign*nu, chosen per point for conditioning
        v1a, v2a = b.astype(complex), sign * nu - a
        v1b, v2b = sign * nu + a, c.astype(complex)
        better = (np.abs(v1a) ** 2 + np.abs(v2a) ** 2
                  >= np.abs(v1b) ** 2 + np.abs(v2b) ** 2)
        v1 = np.where(better, v1a, v1b)
        v2 = np.where(better, v2a, v2b)
        norm2 = np.abs(v1) ** 2 + np.abs(v2) ** 2
        d = (np.abs(v1) ** 2 - np.abs(v2) ** 2) / norm2
        cross = np.conj(v1) * v2 / norm2
        exponent = lh * (a * d + b * cross + c * np.conj(cross))
        # hyperbolic denominators are orientation-calibrated to 2 nu at
        # both points; elliptic ones keep the signed linearization rate
        denom = np.where(q > 0, 2.0 * nu, -2.0 * sign * nu)
        with np.errstate(divide="ignore", invalid="ignore"):
            term = lam_val * np.exp(exponent) / denom
        out += np.where(regular, term, 0.0)
    return out


def fixed_point_pairing(lam: Weight, m: MultiplicityRule, phi: TestFunction,
                        degree: int = 12, max_depth: int = 8) -> PairingReport:
    """Pairing of the fixed point density with phi over the support box.

    Cells meeting the nilpotent cone are refined dyadically; the density
    has an integrable inverse-square-root singularity there.
    """

    def needs_split(lo, hi):
        corners = np.array([[x, y, z] for x in (lo[0], hi[0])
                            for y in (lo[1], hi[1]) for z in (lo[2], hi[2])])
        q = corners[:, 0] ** 2 + corners[:, 1] * corners[:, 2]
        if np.min(q) < 0.0 < np.max(q):
            return True
        diam = float(np.linalg.norm(hi - lo))
        center = 0.5 * (lo + hi)
        qc = center[0] ** 2 + center[1] * center[2]
        grad = np.linalg.norm([2 * center[0], center[2], center[1]])
        return abs(qc) <= grad * diam + diam ** 2

    def evaluate(depth):
        nodes, weights = adaptive_box_rule(phi.box, degree, needs_split, depth)
        vals = _density_batch(nodes, lam, m) * phi(nodes)
        return complex(np.sum(weights * vals))

    value = evaluate(max_depth)
    coarse = evaluate(max_depth - 1)
    return PairingReport(value=value, quadrature_degree=degree,
                         cutoff_R=math.inf, theta_t=None,
                         tail_estimate=abs(value - coarse))


# ---------------------------------------------------------------------------
# cycle side
# ---------------------------------------------------------------------------

def _values_to_pqr(values):
    """(h, e, f) stacks -> matrix coordinates (h/2, f, e)."""
    return np.stack([0.5 * values[..., 0], values[..., 2], values[..., 1]],
                    axis=-1)


def _mu_lambda_stack(chart, z, xi, lam: Weight):
    h, e, f = twisted_moment_values(chart, z, xi, lam)
    return np.stack([h, e, f], axis=-1)


class _PatchStencil:
    """Quadrature nodes of one patch with the four finite-difference
    parameter shifts already embedded into chart coordinates."""

    def __init__(self, patch, cutoff, degree, r0):
        self.patch = patch
        U, V, W = patch_quadrature(patch, cutoff, degree, r0)
        self.weights = W * patch.orientation * patch.multiplicity
        hu = _FD_REL * (1.0 + np.abs(U))
        hv = _FD_REL * (1.0 + np.abs(V))
        self.hu, self.hv = hu, hv
        params = [(U, V), (U + hu, V), (U - hu, V), (U, V + hv), (U, V - hv)]
        self.points = [patch.embed(u, v) for u, v in params]
        if patch.kind == "conic":
            self.shell = np.abs(V) > 0.5 * cutoff
        elif patch.kind == "fiber":
            self.shell = np.hypot(U, V) > 0.5 * cutoff
        else:
            self.shell = np.zeros(U.shape, dtype=bool)

    def form_values(self, lam: Weight, transport=None):
        """zeta (N, 3) and the 2-form density sigma (N,) on the patch,
        optionally after a pointwise cotangent transport."""
        stacks = []
        for chart, z, xi in self.points:
            if transport is not None:
                chart, z, xi = transport(chart, z, xi)
            stacks.append(_mu_lambda_stack(chart, z, xi, lam))
        zeta = stacks[0]
        w1 = (stacks[1] - stacks[2]) / (2.0 * self.hu)[:, None]
        w2 = (stacks[3] - stacks[4]) / (2.0 * self.hv)[:, None]
        sigma = sigma_batch(_values_to_pqr(zeta), _values_to_pqr(w1),
                            _values_to_pqr(w2))
        return zeta, sigma


CYCLE_DEGREE = 16


def _stencils(cycle: ParametrizedCycle, R: float, degree: int, r0: float):
    cutoff = min(R, cycle.cutoff_R)
    return [_PatchStencil(p, cutoff, degree, r0) for p in cycle.patches]


def cycle_pairing(cycle: ParametrizedCycle, lam: Weight, phi: TestFunction,
                  R: float, degree: int = CYCLE_DEGREE,
                  fourier_degree: int = FOURIER_DEGREE,
                  r0: float = 0.5) -> PairingReport:
    """Integral character pairing over the cutoff cycle.

    Computes 1/(2 pi i) * sum over patches of the (orientation times
    multiplicity weighted) integral of phi-hat(mu_lambda) against the
    pulled back orbit form; the tail estimate is the contribution of the
    outermost dyadic shell.
    """
    if not lam.regular:
        raise NotRegular("cycle pairing needs a regular weight")
    total = 0.0 + 0.0j
    shell_total = 0.0 + 0.0j
    for st in _stencils(cycle, R, degree, r0):
        zeta, sigma = st.form_values(lam)
        fhat = fourier_batch(phi, zeta, fourier_degree)
        contrib = st.weights * fhat * sigma
        total += np.sum(contrib)
        shell_total += np.sum(contrib[st.shell])
    return PairingReport(value=complex(total / TWO_PI_I),
                         quadrature_degree=degree, cutoff_R=R, theta_t=None,
                         tail_estimate=abs(shell_total / TWO_PI_I))


def _outer_grid(phi: TestFunction, degree: int, max_depth: int = 6):
    """Nodes over the support of phi avoiding the nilpotent cone."""

    def needs_split(lo, hi):
        corners = np.array([[x, y, z] for x in (lo[0], hi[0])
                            for y in (lo[1], hi[1]) for z in (lo[2], hi[2])])
        q = corners[:, 0] ** 2 + corners[:, 1] * corners[:, 2]
        return bool(np.min(q) < 0.0 < np.max(q))

    nodes, weights = adaptive_box_rule(phi.box, degree, needs_split, max_depth)
    keep = np.abs(nodes[:, 0] ** 2 + nodes[:, 1] * nodes[:, 2]) > 1e-12
    return nodes[keep], weights[keep]


def deformed_cycle_pairing(cycle: ParametrizedCycle, lam: Weight,
                           phi: TestFunction, t: float, R: float,
                           degree: int = 12, outer_degree: int = 8,
                           r0: float = 0.5) -> PairingReport:
    """Cycle pairing with the integrand pulled back through the fiber shear.

    The shear depends on the Lie algebra variable, so the pairing is an
    outer quadrature over the regular support of phi with an inner cycle
    quadrature per node.
    """
    if not lam.regular:
        raise NotRegular("cycle pairing needs a regular weight")
    if t <= 0.0:
        raise ValueError("shear parameter must be positive; use cycle_pairing at t=0")
    stencils = _stencils(cycle, R, degree, r0)
    nodes, weights = _outer_grid(phi, outer_degree)
    phi_vals = phi(nodes)
    total = 0.0 + 0.0j
    shell_total = 0.0 + 0.0j
    for g_coords, wg, pv in zip(nodes, weights, phi_vals):
        if pv == 0.0:
            continue
        g = Sl2Element(*g_coords)
        try:
            inner, inner_shell = _deformed_inner(stencils, lam, g, t)
        except NotRegularSemisimple:
            continue
        total += wg * pv * inner
        shell_total += wg * pv * inner_shell
    return PairingReport(value=complex(total / TWO_PI_I),
                         quadrature_degree=degree, cutoff_R=R, theta_t=t,
                         tail_estimate=abs(shell_total / TWO_PI_I))


def _deformed_inner(stencils, lam: Weight, g: Sl2Element, t: float):
    """Sheared cycle integral at one Lie algebra point (no 2 pi i)."""
    atlas = AdaptedAtlas(g)
    inner = 0.0 + 0.0j
    inner_shell = 0.0 + 0.0j
    for st in stencils:
        c0, z0, _ = st.points[0]
        index = atlas.nearest_index(c0, z0)

        def transport(chart, z, xi, index=index):
            return theta_deform(atlas, t, chart, z, xi, index)

        zeta, sigma = st.form_values(lam, transport)
        expo = np.exp(zeta[:, 0] * g.a + zeta[:, 1] * g.b + zeta[:, 2] * g.c)
        contrib = st.weights * expo * sigma
        inner += np.sum(contrib)
        inner_shell += np.sum(contrib[st.shell])
    return inner, inner_shell


def _plain_inner(stencils, lam: Weight, abc):
    """Un-sheared cycle integrals at a stack of Lie algebra points."""
    abc = np.asarray(abc, dtype=float)
    inner = np.zeros(abc.shape[0], dtype=complex)
    shell = np.zeros(abc.shape[0], dtype=complex)
    for st in stencils:
        zeta, sigma = st.form_values(lam)
        ws = st.weights * sigma
        expo = np.exp(zeta @ abc.T)
        inner += ws @ expo
        shell += ws[st.shell] @ expo[st.shell]
    return inner, shell


def lemma_residuals(cycle: ParametrizedCycle, lam: Weight, phi: TestFunction,
                    t: float, R_values, degree: int = 10,
                    outer_degree: int = 6, r0: float = 0.5):
    """Shear-invariance and boundary-shell diagnostics of the pairing.

    For each cutoff R this evaluates the plain and the sheared pairings on
    shared inner and outer grids, so their difference measures the honest
    substitution residual (which must vanish as R grows at fixed t), and
    records the outermost-shell contribution of the sheared integral whose
    consecutive differences bound the boundary term at norm R.
    """
    nodes, weights = _outer_grid(phi, outer_degree)
    phi_w = weights * phi(nodes)
    keep = phi_w != 0.0
    nodes, phi_w = nodes[keep], phi_w[keep]
    rows = []
    for R in R_values:
        stencils = _stencils(cycle, R, degree, r0)
        plain, _ = _plain_inner(stencils, lam, nodes)
        plain_value = complex(np.sum(phi_w * plain) / TWO_PI_I)
        deformed = 0.0 + 0.0j
        for g_coords, w in zip(nodes, phi_w):
            inner, _ = _deformed_inner(stencils, lam, Sl2Element(*g_coords), t)
            deformed += w * inner
        deformed_value = complex(deformed / TWO_PI_I)
        rows.append({
            "R": float(R),
            "plain": plain_value,
            "deformed": deformed_value,
            "lemma17_residual": abs(plain_value - deformed_value),
        })
    for prev, cur in zip(rows[:-1], rows[1:]):
        cur["lemma18_shell"] = abs(cur["deformed"] - prev["deformed"])
    return rows


def gaussian_fiber_limit(g: Sl2Element, k: int, lam: Weight,
                         phi: TestFunction, t: float, R: float,
                         degree: int = CYCLE_DEGREE, r0: float = 0.25) -> complex:
    """Sheared integrand over the cotangent fiber at the k-th fixed point.

    As t -> 0+ with R sqrt(t) -> infinity this converges to
    (2 pi i) e^{<g, lam_x>} / alpha_k(g) * phi(g).
    """
    if not lam.regular:
        raise NotRegular("fiber integral needs a regular weight")
    sd = spectral_data(g)
    atlas = AdaptedAtlas(g)
    cycle = fiber_cycle(sd.fixed_points[k], 1)
    phi_g = float(phi(np.array([g.a, g.b, g.c])))
    total = 0.0 + 0.0j
    for st in _stencils(cycle, R, degree, r0):
        zeta, sigma = st.form_values(
            lam, lambda chart, z, xi: theta_deform(atlas, t, chart, z, xi))
        expo = np.exp(zeta[:, 0] * g.a + zeta[:, 1] * g.b + zeta[:, 2] * g.c)
        total += np.sum(st.weights * expo * sigma)
    return complex(total * phi_g)


def gaussian_fiber_reference(g: Sl2Element, k: int, lam: Weight,
                             phi: TestFunction) -> complex:
    """Closed-form limit (2 pi i) e^{<g, lam_x>}/alpha_k(g) * phi(g)."""
    sd = spectral_data(g)
    lam_x = lambda_transport(sd.fixed_points[k], lam)
    phi_g = float(phi(np.array([g.a, g.b, g.c])))
    return TWO_PI_I * np.exp(lam_x.evaluate(g)) / sd.alpha[k] * phi_g


# ---------------------------------------------------------------------------
# compact localization anchor
# ---------------------------------------------------------------------------

def dh_localization_check(speed: float, height_scale: float = 1.0,
                          degree: int = 40):
    """Rotation-invariant exponential area integral on the unit sphere
    against its two-pole localization sum.

    Returns (numerical surface integral, fixed point sum); the form is
    e^{s mu} with moment mu = height_scale * z, whose area integral is
    2 pi (e^{s c} - e^{-s c}) / (s c).
    """
    if speed == 0.0:
        raise ValueError("speed must be nonzero")
    zc = speed * height_scale
    z_nodes, z_w = panel_rule(-1.0, 1.0, degree)
    az_nodes, az_w = panels_rule(np.linspace(0.0, 2.0 * math.pi, 5), degree)
    Z, A = np.meshgrid(z_nodes, az_nodes, indexing="ij")
    WZ, WA = np.meshgrid(z_w, az_w, indexing="ij")
    surface = complex(np.sum(WZ * WA * np.exp(zc * Z)))
    poles = 2.0 * math.pi * (math.exp(zc) - math.exp(-zc)) / zc
    return surface, complex(poles)
