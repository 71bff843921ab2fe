"""Traceless 2x2 real matrices, their spectral data, and the induced flow
on the complex projective line.

Coordinates are taken in the basis H = [[1,0],[0,-1]], E = [[0,1],[0,0]],
F = [[0,0],[1,0]], so (a, b, c) stands for the matrix [[a, b], [c, -a]].
The invariant pairing is <X, Y> = tr(XY).

The projective line carries two standard affine charts: chart 1 with
coordinate z = v2/v1 around [1:0], chart 2 with w = v1/v2 around [0:1].
The one-parameter flow of (a, b, c) reads dz/dt = c - 2az - bz^2 in
chart 1 and dw/dt = b + 2aw - cw^2 in chart 2.
"""

from dataclasses import dataclass, field

import numpy as np

HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"
NILPOTENT = "nilpotent"
ZERO = "zero"


class NotRegularSemisimple(ValueError):
    """Raised when an operation requires distinct eigenvalues."""


class ChartOverflow(ValueError):
    """Raised when a point sits at the requested chart's infinity."""


@dataclass(frozen=True)
class Sl2Element:
    """A point of sl(2,R) ~ R^3: the matrix [[a, b], [c, -a]]."""

    a: float
    b: float
    c: float

    @property
    def coords(self):
        return np.array([self.a, self.b, self.c])

    @property
    def matrix(self):
        return np.array([[self.a, self.b], [self.c, -self.a]])

    def pairing(self, other: "Sl2Element") -> float:
        """tr(XY) in (a, b, c) coordinates."""
        return 2.0 * self.a * other.a + self.b * other.c + self.c * other.b

    def discriminant(self) -> float:
        """a^2 + bc; its sign separates the regularity classes."""
        return self.a * self.a + self.b * self.c

    def ad_rotation(self, theta: float) -> "Sl2Element":
        """Ad(k) for k = rotation by theta in SO(2)."""
        k = np.array([[np.cos(theta), -np.sin(theta)],
                      [np.sin(theta), np.cos(theta)]])
        m = k @ self.matrix @ k.T
        return Sl2Element(m[0, 0], m[0, 1], m[1, 0])


H = Sl2Element(1.0, 0.0, 0.0)
E = Sl2Element(0.0, 1.0, 0.0)
F = Sl2Element(0.0, 0.0, 1.0)


def normalize_vector(v) -> np.ndarray:
    """Unit representative with first nonzero coordinate positive real."""
    v = np.asarray(v, dtype=complex)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("zero vector does not define a projective point")
    v = v / n
    pivot = v[0] if abs(v[0]) > 1e-14 else v[1]
    return v * (abs(pivot) / pivot)


@dataclass(frozen=True)
class FlagPoint:
    """A complex line in C^2, stored by a normalized representative."""

    v: np.ndarray

    def __init__(self, v):
        object.__setattr__(self, "v", normalize_vector(v))

    def chart(self) -> int:
        """Standard chart in which this point has coordinate of modulus <= 1."""
        return 1 if abs(self.v[1]) <= abs(self.v[0]) else 2

    def coordinate(self, chart: int) -> complex:
        v1, v2 = self.v
        if chart == 1:
            if abs(v1) < 1e-150:
                raise ChartOverflow("point is at infinity of chart 1")
            return v2 / v1
        if abs(v2) < 1e-150:
            raise ChartOverflow("point is at infinity of chart 2")
        return v1 / v2

    def same_point(self, other: "FlagPoint", tol: float = 1e-10) -> bool:
        v, w = self.v, other.v
        return abs(v[0] * w[1] - v[1] * w[0]) <= tol

    def chordal_distance(self, other: "FlagPoint") -> float:
        v, w = self.v, other.v
        return abs(v[0] * w[1] - v[1] * w[0])


NORTH = FlagPoint([1.0, 0.0])
SOUTH = FlagPoint([0.0, 1.0])


@dataclass(frozen=True)
class RegularityClass:
    tag: str


def classify(g: Sl2Element) -> RegularityClass:
    """Regularity class from the sign of a^2 + bc."""
    d = g.discriminant()
    if d > 0.0:
        return RegularityClass(HYPERBOLIC)
    if d < 0.0:
        return RegularityClass(ELLIPTIC)
    if g.a == 0.0 and g.b == 0.0 and g.c == 0.0:
        return RegularityClass(ZERO)
    return RegularityClass(NILPOTENT)


def flow_velocity(g: Sl2Element, x: FlagPoint, chart: int | None = None) -> complex:
    """Chart expression of the vector field generated by g at x.

    With chart=None the chart is picked so that x has a finite coordinate.
    """
    if chart is None:
        chart = x.chart()
    z = x.coordinate(chart)
    return flow_velocity_chart(g, chart, z)


def flow_velocity_chart(g: Sl2Element, chart: int, z) -> complex:
    if chart == 1:
        return g.c - 2.0 * g.a * z - g.b * z * z
    return g.b + 2.0 * g.a * z - g.c * z * z


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalue, fixed points, and linearization rates of a regular
    semisimple element.

    `nu` is the eigenvalue with Re >= 0 (Im >= 0 on the boundary);
    `fixed_points[k]` is the eigenline of (-1)^k nu, and `alpha[k]` the
    linearization eigenvalue of the flow there, so alpha = (-2nu, +2nu).
    `stable_index` points at the attracting fixed point for hyperbolic
    elements and is None for elliptic ones.
    """

    nu: complex
    fixed_points: tuple
    alpha: tuple
    stable_index: int | None


def spectral_data(g: Sl2Element) -> SpectralData:
    tag = classify(g).tag
    if tag not in (HYPERBOLIC, ELLIPTIC):
        raise NotRegularSemisimple(f"element is {tag}, need distinct eigenvalues")
    d = complex(g.discriminant())
    nu = np.sqrt(d)
    if nu.real < 0 or (nu.real == 0 and nu.imag < 0):
        nu = -nu

    def eigenline(lam: complex) -> FlagPoint:
        # (g - lam) v = 0; pick the better-conditioned kernel vector.
        cand1 = np.array([g.b, lam - g.a])
        cand2 = np.array([lam + g.a, g.c])
        return FlagPoint(cand1 if np.linalg.norm(cand1) >= np.linalg.norm(cand2) else cand2)

    x1, x2 = eigenline(nu), eigenline(-nu)
    alpha = (-2.0 * nu, 2.0 * nu)
    stable = 0 if tag == HYPERBOLIC else None
    return SpectralData(nu=nu, fixed_points=(x1, x2), alpha=alpha, stable_index=stable)


def flow_matrix(g: Sl2Element, t: float) -> np.ndarray:
    """exp(t g) in closed form: cosh(t nu) I + sinh(t nu)/nu g."""
    nu = np.sqrt(complex(g.discriminant()))
    if abs(nu) < 1e-30:
        return np.eye(2) + t * g.matrix.astype(complex)
    return np.cosh(t * nu) * np.eye(2) + (np.sinh(t * nu) / nu) * g.matrix
