"""Parametrized Lagrangian cycles in the cotangent bundle of the
projective line.

Concrete positioning (fixed once): the invariant circle is the real
projective line (real ratios), the poles are N = [1:0] and S = [0:1],
the western hemisphere is {Im z > 0} in chart 1 = {Im w < 0} in chart 2,
and the latitude of a point is (|w|^2 - 1)/(|w|^2 + 1) in chart 2, so the
sub-level set below latitude t is {|w| < rho_t}.

Every patch embeds a parameter box into chart coordinates with a
per-point chart choice keeping coordinates bounded.  Fiber covectors are
normalized so the second parameter of a conic patch equals the fiber
norm ||mu(zeta)||; cutoffs then clip parameter boxes directly.

Orientations are fixed by parameter order and were calibrated once
against the fiber Gaussian limit (see characters.gaussian_fiber_limit):
with the conventions of this package the full cotangent fiber at a fixed
point must integrate the deformed integrand to +(2 pi i) e^<g,lam_x>/alpha.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .lie import (FlagPoint, NotRegularSemisimple, Sl2Element, classify,
                  spectral_data, NORTH, SOUTH, HYPERBOLIC, ELLIPTIC)
from .flag import CotangentPoint, fiber_norm, moment_values
from .quadrature import dyadic_breaks, panels_rule, panel_rule, tensor_rule

# Calibrated orientations (see module docstring).  The fiber value follows
# from the real/holomorphic cotangent identification: with parameters
# (Re xi, Im xi) the plain orientation integrates the fiber Gaussian to
# -(2 pi i)/alpha, so the calibrated sign is -1.  The zero-section sign
# makes the hemisphere cycle pair off against the attracting fixed point
# (its boundary then cancels the outward half conormal's edge).
FIBER_ORIENTATION = -1
CONORMAL_ORIENTATION = +1
HEMISPHERE_ORIENTATION = -1

WEST = "west"
EAST = "east"


@dataclass(frozen=True)
class CyclePatch:
    """One oriented smooth piece of a cycle.

    `embed(u, v)` maps parameter arrays to (chart, z, xi) arrays.  `kind`
    states how the patch meets the fiber cutoff: 'compact' patches ignore
    it, for 'conic' patches |v| is the fiber norm, and 'fiber' patches are
    whole cotangent planes with radius sqrt(u^2 + v^2).
    """

    tag: str
    domain: tuple
    embed: callable
    orientation: int
    multiplicity: int
    kind: str

    def scaled_params(self, u, v, s: float):
        """Parameter transform realizing the fiber scaling by s > 0."""
        if self.kind == "conic":
            return u, s * v
        if self.kind == "fiber":
            return s * u, s * v
        return u, v


@dataclass(frozen=True)
class ParametrizedCycle:
    patches: tuple
    cutoff_R: float = math.inf

    def with_cutoff(self, R: float) -> "ParametrizedCycle":
        return ParametrizedCycle(self.patches, min(self.cutoff_R, R))

    def describe(self) -> dict:
        def clean(x):
            return None if x is None or math.isinf(abs(x)) else float(x)

        return {
            "cutoff_R": clean(self.cutoff_R),
            "patches": [
                {
                    "tag": p.tag,
                    "domain": [[clean(a) for a in pair] for pair in p.domain],
                    "orientation": p.orientation,
                    "multiplicity": p.multiplicity,
                    "kind": p.kind,
                }
                for p in self.patches
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.describe(), **kwargs)


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

def _circle_base(theta):
    """Chart data of the real-ratio point at angle theta (half-angle line)."""
    t = 0.5 * np.asarray(theta, dtype=float)
    c, s = np.cos(t), np.sin(t)
    in1 = np.abs(s) <= np.abs(c)
    z = np.where(in1, s / np.where(in1, c, 1.0), c / np.where(in1, 1.0, s))
    return np.where(in1, 1, 2), z.astype(complex)


def _conormal_direction(chart, z):
    """Unit-fiber-norm conormal covector over a real-ratio base point.

    The chart-1 direction +i and chart-2 direction -i glue to one smooth
    conormal trivialization across the transition.
    """
    direction = np.where(chart == 1, 1j, -1j)
    scale = fiber_norm(chart, z, np.ones_like(z))
    return direction / scale


def _circle_conormal_embed(theta, s):
    theta = np.asarray(theta, dtype=float)
    s = np.asarray(s, dtype=float)
    chart, z = _circle_base(theta)
    return chart, z, s * _conormal_direction(chart, z)


def _hemisphere_embed(ell, psi):
    """Zero section over the latitude/longitude box, chart picked per point."""
    ell = np.clip(np.asarray(ell, dtype=float), -1.0, 1.0 - 1e-12)
    rho = np.sqrt((1.0 + ell) / (1.0 - ell))
    w = rho * np.exp(1j * np.asarray(psi, dtype=float))
    in2 = np.abs(w) <= 1.0
    z = np.where(in2, w, 1.0 / np.where(in2, 1.0, w))
    chart = np.where(in2, 2, 1)
    return chart, z, np.zeros_like(z)


def _fixed_fiber_embed(x: FlagPoint):
    chart = x.chart()
    z0 = x.coordinate(chart)
    scale = complex(fiber_norm(chart, z0, 1.0))

    def embed(u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        xi = (u + 1j * v) / scale
        shape = np.shape(xi)
        return (np.full(shape, chart, dtype=int),
                np.full(shape, z0, dtype=complex), xi)

    return embed


def _fiber_ray_embed(x: FlagPoint, chart: int):
    """Rays s * e^{i tau} in the fiber at x, unit normalized per direction.

    The ray angle tau is read in the given chart.
    """
    z0 = x.coordinate(chart)

    def embed(tau, s):
        tau = np.asarray(tau, dtype=float)
        s = np.asarray(s, dtype=float)
        direction = np.exp(1j * tau)
        scale = fiber_norm(chart, z0 * np.ones_like(direction), direction)
        xi = s * direction / scale
        shape = np.shape(xi)
        return (np.full(shape, chart, dtype=int),
                np.full(shape, z0, dtype=complex), xi)

    return embed


def _cone_patch(x: FlagPoint, directions, tag: str) -> CyclePatch:
    """Covector cone at x spanned by two chart-2 direction constraints.

    `directions` are the two extreme outward covector directions given in
    chart 2; they are transported to the chart where x has a bounded
    coordinate and the patch sweeps the short angular interval between
    them (the convex cone of a corner).
    """
    chart = x.chart()
    dirs = []
    for d in directions:
        if chart == 1:
            w = x.coordinate(2)
            d = -w * w * d  # covector transition into chart 1
        dirs.append(complex(d))
    a1 = math.atan2(dirs[0].imag, dirs[0].real)
    a2 = math.atan2(dirs[1].imag, dirs[1].real)
    while a2 - a1 > math.pi:
        a2 -= 2.0 * math.pi
    while a2 - a1 < -math.pi:
        a2 += 2.0 * math.pi
    lo, hi = min(a1, a2), max(a1, a2)
    return CyclePatch(
        tag=tag,
        domain=((lo, hi), (0.0, None)),
        embed=_fiber_ray_embed(x, chart),
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    )


# ---------------------------------------------------------------------------
# the basic cycles
# ---------------------------------------------------------------------------

def principal_cycle() -> ParametrizedCycle:
    """Conormal bundle of the invariant circle, one (theta, s) patch."""
    patch = CyclePatch(
        tag="conormal_circle",
        domain=((0.0, 2.0 * math.pi), (None, None)),
        embed=_circle_conormal_embed,
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    )
    return ParametrizedCycle((patch,))


def _hemisphere_psi_range(hemisphere: str):
    # chart 2: west is Im w < 0
    if hemisphere == WEST:
        return (math.pi, 2.0 * math.pi)
    if hemisphere == EAST:
        return (0.0, math.pi)
    raise ValueError(f"unknown hemisphere {hemisphere!r}")


def _zero_section_patch(hemisphere: str, ell_max: float) -> CyclePatch:
    return CyclePatch(
        tag=f"zero_section_{hemisphere}",
        domain=((-1.0, ell_max), _hemisphere_psi_range(hemisphere)),
        embed=_hemisphere_embed,
        orientation=HEMISPHERE_ORIENTATION,
        multiplicity=1,
        kind="compact",
    )


def _outward_half_range(hemisphere: str):
    # s >= 0 of the conormal trivialization points out of the west hemisphere
    return (0.0, None) if hemisphere == WEST else (None, 0.0)


def discrete_cycle(hemisphere: str = WEST) -> ParametrizedCycle:
    """Open-hemisphere zero section plus the outward half conormal bundle."""
    boundary = CyclePatch(
        tag=f"half_conormal_{hemisphere}",
        domain=((0.0, 2.0 * math.pi), _outward_half_range(hemisphere)),
        embed=_circle_conormal_embed,
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    )
    return ParametrizedCycle((_zero_section_patch(hemisphere, 1.0), boundary))


def fiber_cycle(x: FlagPoint, m: int) -> ParametrizedCycle:
    """The full cotangent fiber at x with integer multiplicity m."""
    if m == 0:
        return ParametrizedCycle(())
    patch = CyclePatch(
        tag="fiber",
        domain=((None, None), (None, None)),
        embed=_fixed_fiber_embed(x),
        orientation=FIBER_ORIENTATION,
        multiplicity=m,
        kind="fiber",
    )
    return ParametrizedCycle((patch,))


# ---------------------------------------------------------------------------
# latitude deformations
# ---------------------------------------------------------------------------

def _theta_cut(t_lat_deg: float) -> float:
    """Angle parameter of the circle point at the cutting latitude."""
    return math.acos(math.sin(math.radians(t_lat_deg)))


def _corner_w(t_lat_deg: float) -> float:
    s = math.sin(math.radians(t_lat_deg))
    return math.sqrt((1.0 + s) / (1.0 - s))


def deformed_discrete_cycle(t_lat_deg: float, hemisphere: str = WEST) -> ParametrizedCycle:
    """Characteristic cycle of the hemisphere sheaf clipped below latitude t.

    At t = 90 degrees this is the un-deformed discrete cycle; as t drops to
    -90 the support collapses onto the cotangent fiber at the south pole.
    """
    if not -90.0 < t_lat_deg <= 90.0:
        raise ValueError("latitude must lie in (-90, 90] degrees")
    if t_lat_deg == 90.0:
        return discrete_cycle(hemisphere)
    ell = math.sin(math.radians(t_lat_deg))
    theta_cut = _theta_cut(t_lat_deg)
    rho = _corner_w(t_lat_deg)
    psi_lo, psi_hi = _hemisphere_psi_range(hemisphere)

    patches = [_zero_section_patch(hemisphere, ell)]

    patches.append(CyclePatch(
        tag=f"half_conormal_{hemisphere}_arc",
        domain=((theta_cut, 2.0 * math.pi - theta_cut), _outward_half_range(hemisphere)),
        embed=_circle_conormal_embed,
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    ))

    def latitude_embed(psi, s):
        psi = np.asarray(psi, dtype=float)
        s = np.asarray(s, dtype=float)
        w = rho * np.exp(1j * psi)
        in2 = np.abs(w) <= 1.0
        chart = np.where(in2, 2, 1)
        z = np.where(in2, w, 1.0 / w)
        # outward of the latitude disc is radial in chart 2: xi ~ e^{-i psi};
        # transported to chart 1 where needed
        xi2 = np.exp(-1j * psi)
        xi = np.where(in2, xi2, -w * w * xi2)
        scale = fiber_norm(chart, z, xi)
        return chart, z, s * xi / scale

    patches.append(CyclePatch(
        tag="half_conormal_latitude",
        domain=((psi_lo, psi_hi), (0.0, None)),
        embed=latitude_embed,
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    ))

    # corner cones: at w = +-rho the outward covectors sweep the quarter
    # plane between the hemisphere half-conormal (-i in chart 2 for west)
    # and the radial latitude conormal (+-1 in chart 2)
    circle_dir = -1j if hemisphere == WEST else 1j
    for w_corner in (rho, -rho):
        corner = FlagPoint([w_corner, 1.0])
        lat_dir = 1.0 if w_corner > 0 else -1.0
        patches.append(_cone_patch(
            corner, (circle_dir, lat_dir),
            tag=f"corner_cone_{'pos' if w_corner > 0 else 'neg'}"))
    return ParametrizedCycle(tuple(patches))


def deformed_principal_cycle(t_lat_deg: float) -> ParametrizedCycle:
    """North fiber plus the clipped circle conormal with endpoint half planes."""
    if not -90.0 < t_lat_deg <= 90.0:
        raise ValueError("latitude must lie in (-90, 90] degrees")
    patches = list(fiber_cycle(NORTH, 1).patches)
    if t_lat_deg == 90.0:
        patches.append(CyclePatch(
            tag="conormal_circle_minus_north",
            domain=((0.0, 2.0 * math.pi), (None, None)),
            embed=_circle_conormal_embed,
            orientation=CONORMAL_ORIENTATION,
            multiplicity=1,
            kind="conic",
        ))
        # the boundary contribution at the removed point is the full fiber
        # with opposite sign, cancelling the explicit north fiber above
        patches.append(CyclePatch(
            tag="fiber_north_boundary",
            domain=((None, None), (None, None)),
            embed=_fixed_fiber_embed(NORTH),
            orientation=-FIBER_ORIENTATION,
            multiplicity=1,
            kind="fiber",
        ))
        return ParametrizedCycle(tuple(patches))

    theta_cut = _theta_cut(t_lat_deg)
    patches.append(CyclePatch(
        tag="conormal_circle_arc",
        domain=((theta_cut, 2.0 * math.pi - theta_cut), (None, None)),
        embed=_circle_conormal_embed,
        orientation=CONORMAL_ORIENTATION,
        multiplicity=1,
        kind="conic",
    ))
    # endpoint half planes: covectors nonnegative against the circle tangent
    # that points out of the latitude region (outgoing = against/with theta)
    for theta_end, outgoing in ((theta_cut, -1.0), (2.0 * math.pi - theta_cut, 1.0)):
        chart, z = _circle_base(theta_end)
        chart, z = int(chart), complex(z)
        x = FlagPoint([1.0, z] if chart == 1 else [z, 1.0])
        # the circle runs along the real axis of either chart; increasing
        # theta moves in the +direction of chart 1 and -direction of chart 2
        v_out = outgoing * (1.0 if chart == 1 else -1.0)
        tau0 = 0.0 if v_out > 0 else math.pi
        patches.append(CyclePatch(
            tag=f"half_plane_{'lo' if outgoing < 0 else 'hi'}",
            domain=((tau0 - 0.5 * math.pi, tau0 + 0.5 * math.pi), (0.0, None)),
            embed=_fiber_ray_embed(x, chart),
            orientation=CONORMAL_ORIENTATION,
            multiplicity=1,
            kind="conic",
        ))
    return ParametrizedCycle(tuple(patches))


# ---------------------------------------------------------------------------
# the fiberwise shear
# ---------------------------------------------------------------------------

def theta_map(g: Sl2Element, t: float, p: CotangentPoint) -> CotangentPoint:
    """Fiber shear in a g-adapted chart: z -> z - t (conj a/|a|) conj(xi).

    The point must already be expressed in the g-adapted chart centered at
    the fixed point its chart index names (1 or 2, matching the order of
    spectral_data).  The fiber coordinate is unchanged and t = 0 is the
    identity.
    """
    if classify(g).tag not in (HYPERBOLIC, ELLIPTIC):
        raise NotRegularSemisimple("shear needs a regular semisimple element")
    alpha = spectral_data(g).alpha[p.chart - 1]
    shift = t * (np.conj(alpha) / abs(alpha)) * np.conj(p.xi)
    return CotangentPoint(p.chart, p.z - shift, p.xi)


class AdaptedAtlas:
    """Charts of the projective line linearizing the flow of a fixed g.

    Chart k is the standard affine chart after moving the fixed points to
    [1:0] and [0:1] with the eigenvector matrix; the flow there is exactly
    alpha_k z d/dz.
    """

    def __init__(self, g: Sl2Element):
        sd = spectral_data(g)
        self.alpha = sd.alpha
        self.fixed_points = sd.fixed_points
        A = np.column_stack([sd.fixed_points[0].v, sd.fixed_points[1].v])
        self.A = A
        self.Ainv = np.linalg.inv(A)

    def nearest_index(self, chart, z):
        """0 or 1 per point by chordal distance to the fixed points."""
        chart = np.asarray(chart)
        z = np.asarray(z, dtype=complex)
        in1 = chart == 1
        v1 = np.where(in1, 1.0, z)
        v2 = np.where(in1, z, 1.0)
        norm = np.sqrt(np.abs(v1) ** 2 + np.abs(v2) ** 2)
        dists = []
        for fp in self.fixed_points:
            a, b = fp.v
            dists.append(np.abs(v1 * b - v2 * a) / norm)
        return (dists[1] < dists[0]).astype(int)

    def to_adapted(self, k, chart, z, xi):
        """Standard chart covector -> coordinates of adapted chart k."""
        m = self.Ainv
        chart = np.asarray(chart)
        z = np.asarray(z, dtype=complex)
        xi = np.asarray(xi, dtype=complex)
        in1 = chart == 1
        A = np.where(in1, m[0, 0] + m[0, 1] * z, m[0, 0] * z + m[0, 1])
        B = np.where(in1, m[1, 0] + m[1, 1] * z, m[1, 0] * z + m[1, 1])
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if k == 0:
            za = B / A
            dza = np.where(in1, det / (A * A), -det / (A * A))
        else:
            za = A / B
            dza = np.where(in1, -det / (B * B), det / (B * B))
        return za, xi / dza

    def from_adapted(self, k, za, xi_a):
        """Adapted chart k covector -> standard chart data (chart, z, xi)."""
        za = np.asarray(za, dtype=complex)
        xi_a = np.asarray(xi_a, dtype=complex)
        if k == 0:
            v1 = self.A[0, 0] + self.A[0, 1] * za
            v2 = self.A[1, 0] + self.A[1, 1] * za
            dsign = 1.0
        else:
            v1 = self.A[0, 0] * za + self.A[0, 1]
            v2 = self.A[1, 0] * za + self.A[1, 1]
            dsign = -1.0
        det = self.A[0, 0] * self.A[1, 1] - self.A[0, 1] * self.A[1, 0]
        out1 = np.abs(v2) <= np.abs(v1)
        z = np.where(out1, v2 / np.where(out1, v1, 1.0), v1 / np.where(out1, 1.0, v2))
        denom = np.where(out1, v1, v2)
        dz = np.where(out1, dsign, -dsign) * det / (denom * denom)
        return np.where(out1, 1, 2).astype(int), z, xi_a / dz


def theta_deform(atlas: AdaptedAtlas, t: float, chart, z, xi, index=None):
    """Apply the shear to standard-chart points through the nearest
    adapted chart; vectorized, measure-zero seam at equidistant bases.

    A precomputed chart index may be passed so finite-difference stencils
    differentiate a fixed branch of the map near the seam.
    """
    chart = np.asarray(chart)
    z = np.asarray(z, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    if index is None:
        index = atlas.nearest_index(chart, z)
    idx = np.atleast_1d(index)
    chart, z, xi = np.atleast_1d(chart), np.atleast_1d(z), np.atleast_1d(xi)
    out_chart = np.empty(z.shape, dtype=int)
    out_z = np.empty(z.shape, dtype=complex)
    out_xi = np.empty(z.shape, dtype=complex)
    for k in (0, 1):
        mask = idx == k
        if not np.any(mask):
            continue
        za, xia = atlas.to_adapted(k, chart[mask], z[mask], xi[mask])
        alpha = atlas.alpha[k]
        za = za - t * (np.conj(alpha) / abs(alpha)) * np.conj(xia)
        c, zz, xx = atlas.from_adapted(k, za, xia)
        out_chart[mask], out_z[mask], out_xi[mask] = c, zz, xx
    return out_chart, out_z, out_xi


# ---------------------------------------------------------------------------
# sampling and certificates
# ---------------------------------------------------------------------------

def sample_patch_params(patch: CyclePatch, n: int, rng, r_cap: float):
    """Random interior parameters, unbounded directions clipped to r_cap."""
    (u0, u1), (v0, v1) = patch.domain
    if patch.kind == "fiber":
        radius = r_cap * np.sqrt(rng.uniform(0.0, 1.0, n))
        angle = rng.uniform(0.0, 2.0 * math.pi, n)
        return radius * np.cos(angle), radius * np.sin(angle)
    u = rng.uniform(u0, u1, n)
    lo = -r_cap if v0 is None else v0
    hi = r_cap if v1 is None else v1
    v = rng.uniform(lo, hi, n)
    return u, v


def sample_points(cycle: ParametrizedCycle, n_per_patch: int, rng,
                  r_cap: float = 8.0):
    """Concatenated (chart, z, xi) samples across all patches."""
    cap = min(r_cap, cycle.cutoff_R)
    charts, zs, xis = [], [], []
    for patch in cycle.patches:
        u, v = sample_patch_params(patch, n_per_patch, rng, cap)
        c, z, xi = patch.embed(u, v)
        charts.append(np.broadcast_to(c, z.shape).ravel())
        zs.append(z.ravel())
        xis.append(xi.ravel())
    return np.concatenate(charts), np.concatenate(zs), np.concatenate(xis)


def sign_certificate_max(cycle: ParametrizedCycle, g: Sl2Element,
                         n_per_patch: int, rng, r_cap: float = 8.0) -> float:
    """max Re<g, mu(zeta)> over sampled cycle points (nonpositivity check)."""
    chart, z, xi = sample_points(cycle, n_per_patch, rng, r_cap)
    h, e, f = moment_values(chart, z, xi)
    values = g.a * h + g.b * e + g.c * f
    return float(np.max(values.real)) if values.size else 0.0


# ---------------------------------------------------------------------------
# quadrature grids over patches
# ---------------------------------------------------------------------------

def patch_quadrature(patch: CyclePatch, cutoff: float, degree: int = 16,
                     r0: float = 0.5, angular_panel: float = math.pi / 8.0):
    """Parameter nodes and weights for integrating over patch ∩ {norm <= R}.

    Returns (U, V, W); the caller multiplies by orientation, multiplicity
    and the 2-form density.  Unbounded fiber directions use dyadic panels
    out to the cutoff so oscillatory tails are resolved shell by shell.
    """
    (u0, u1), (v0, v1) = patch.domain
    if patch.kind == "fiber":
        if not math.isfinite(cutoff):
            raise ValueError("fiber patches need a finite cutoff")
        r_nodes, r_w = panels_rule(dyadic_breaks(r0, cutoff), degree)
        a_nodes, a_w = panels_rule(np.linspace(0.0, 2.0 * math.pi, 9), degree)
        R, A = np.meshgrid(r_nodes, a_nodes, indexing="ij")
        WR, WA = np.meshgrid(r_w, a_w, indexing="ij")
        U = (R * np.cos(A)).ravel()
        V = (R * np.sin(A)).ravel()
        W = (R * WR * WA).ravel()
        return U, V, W

    if patch.kind == "conic":
        if not math.isfinite(cutoff):
            raise ValueError("conic patches need a finite cutoff")
        n_panels = max(2, int(math.ceil((u1 - u0) / angular_panel)))
        u_nodes, u_w = panels_rule(np.linspace(u0, u1, n_panels + 1), degree)
        pieces = []
        if v1 is None or v1 > 0:
            pieces.append(panels_rule(dyadic_breaks(r0, cutoff), degree))
        if v0 is None or v0 < 0:
            nodes, w = panels_rule(dyadic_breaks(r0, cutoff), degree)
            pieces.append((-nodes, w))
        v_nodes = np.concatenate([p[0] for p in pieces])
        v_w = np.concatenate([p[1] for p in pieces])
        return tensor_from_axes(u_nodes, u_w, v_nodes, v_w)

    # compact: moderate paneling along both parameters
    u_nodes, u_w = panels_rule(np.linspace(u0, u1, 5), degree)
    v_nodes, v_w = panels_rule(np.linspace(v0, v1, 5), degree)
    return tensor_from_axes(u_nodes, u_w, v_nodes, v_w)


def tensor_from_axes(u_nodes, u_w, v_nodes, v_w):
    U, V = np.meshgrid(u_nodes, v_nodes, indexing="ij")
    WU, WV = np.meshgrid(u_w, v_w, indexing="ij")
    return U.ravel(), V.ravel(), (WU * WV).ravel()
