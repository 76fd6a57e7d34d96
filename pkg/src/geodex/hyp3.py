"""Hyperbolic 3-space: half-space and ball models, geodesics, frames, Jacobi fields.

Conventions
-----------
Half-space coordinates are (x0, x1, x2) with x0 > 0 and metric
(dx0^2 + dx1^2 + dx2^2) / x0^2.  Complex coordinates t = x0, z = x1 + i x2
give d/dz = (d/dx1 - i d/dx2)/2, so a complexified tangent vector is stored
as three complex coefficients on (d/dz, d/dzbar, d/dt).  Real vectors are
the subspace where the dzbar coefficient is the conjugate of the dz
coefficient and the dt coefficient is real.

An oriented geodesic not parallel to the x0-axis is the pair (xi, eta),
xi != 0, tracing the unit-speed curve

    t(r) = 1 / (|xi| cosh r),      z(r) = eta + tanh(r) / conj(xi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NearBoundary, TooFewSamples
from . import fd

_SQRT2 = math.sqrt(2.0)
BOUNDARY_TOL = 1e-14


@dataclass(frozen=True)
class UhsPoint:
    """Point of the upper half-space model: height t > 0 and horizontal z = x1 + i x2."""

    t: float
    z: complex

    def __post_init__(self):
        if not self.t > 0.0:
            raise ValueError(f"half-space height must be positive, got t={self.t}")

    @property
    def x(self) -> np.ndarray:
        """Real coordinates (x0, x1, x2)."""
        return np.array([self.t, self.z.real, self.z.imag])


@dataclass(frozen=True)
class BallPoint:
    """Point of the Poincare ball model, |y| < 1 strictly."""

    y: tuple

    def __post_init__(self):
        y = tuple(float(c) for c in self.y)
        object.__setattr__(self, "y", y)
        if not sum(c * c for c in y) < 1.0:
            raise ValueError(f"ball point must have |y| < 1, got {y}")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.y)


@dataclass(frozen=True)
class Tangent3:
    """Real tangent vector at a half-space point: v on d/dz (conjugate on d/dzbar implied), u on d/dt."""

    base: UhsPoint
    v: complex
    u: float

    def complexified(self) -> "CTangent3":
        return CTangent3(self.base, self.v, np.conj(self.v), complex(self.u))


@dataclass(frozen=True)
class CTangent3:
    """Complexified tangent vector: complex coefficients on (d/dz, d/dzbar, d/dt)."""

    base: UhsPoint
    vz: complex
    vzb: complex
    vt: complex

    def conjugate(self) -> "CTangent3":
        return CTangent3(self.base, np.conj(self.vzb), np.conj(self.vz), np.conj(self.vt))

    def scaled(self, c: complex) -> "CTangent3":
        return CTangent3(self.base, c * self.vz, c * self.vzb, c * self.vt)

    def __add__(self, other: "CTangent3") -> "CTangent3":
        return CTangent3(self.base, self.vz + other.vz, self.vzb + other.vzb, self.vt + other.vt)

    @property
    def components(self) -> np.ndarray:
        """Components on (d/dx0, d/dx1, d/dx2); complex for a complexified vector."""
        return np.array(
            [self.vt, (self.vz + self.vzb) / 2.0, 1j * (self.vzb - self.vz) / 2.0]
        )

    @classmethod
    def from_components(cls, base: UhsPoint, c) -> "CTangent3":
        c0, c1, c2 = c
        return cls(base, c1 + 1j * c2, c1 - 1j * c2, c0)


def metric(V: CTangent3, W: CTangent3) -> complex:
    """Hyperbolic inner product, extended bilinearly over C."""
    t2 = V.base.t**2
    return (V.vz * W.vzb + V.vzb * W.vz) / (2.0 * t2) + V.vt * W.vt / t2


def metric_real(X: Tangent3, Y: Tangent3) -> float:
    return metric(X.complexified(), Y.complexified()).real


def norm(V: CTangent3) -> float:
    """g-magnitude sqrt(g(V, conj V)), real and nonnegative for any complexified V."""
    return math.sqrt(abs(metric(V, V.conjugate()).real))


# --- model change ---------------------------------------------------------


def uhs_to_ball(p: UhsPoint) -> BallPoint:
    """Isometry from the half-space model onto the Poincare ball."""
    x0, x1, x2 = p.t, p.z.real, p.z.imag
    d = (x0 + 1.0) ** 2 + x1 * x1 + x2 * x2
    return BallPoint(
        (2.0 * x1 / d, 2.0 * x2 / d, (x0 * x0 + x1 * x1 + x2 * x2 - 1.0) / d)
    )


def ball_to_uhs(q: BallPoint) -> UhsPoint:
    """Inverse of uhs_to_ball.  Raises NearBoundary within 1e-14 of the sphere."""
    y1, y2, y3 = q.y
    if 1.0 - math.sqrt(y1 * y1 + y2 * y2 + y3 * y3) < BOUNDARY_TOL:
        raise NearBoundary("ball point within 1e-14 of the boundary sphere")
    e = y1 * y1 + y2 * y2 + (y3 - 1.0) ** 2
    if e < BOUNDARY_TOL:
        raise NearBoundary("ball point maps to the half-space point at infinity")
    t = (1.0 - (y1 * y1 + y2 * y2 + y3 * y3)) / e
    return UhsPoint(t, complex(2.0 * y1 / e, 2.0 * y2 / e))


# --- geodesics ------------------------------------------------------------


@dataclass(frozen=True)
class GeodesicUhs:
    """Oriented geodesic in chart U, coordinates (xi, eta) with xi != 0."""

    xi: complex
    eta: complex

    def __post_init__(self):
        if self.xi == 0:
            raise ValueError("xi = 0 is outside chart U (geodesic parallel to the x0-axis)")


def geodesic_point(g: GeodesicUhs, r: float) -> UhsPoint:
    """Point at arc length r along the oriented geodesic (xi, eta)."""
    t = 1.0 / (abs(g.xi) * math.cosh(r))
    z = g.eta + math.tanh(r) / np.conj(g.xi)
    return UhsPoint(t, complex(z))


def vertical_geodesic(c3: float, c4: float, r: float) -> UhsPoint:
    """Unit-speed geodesic parallel to the x0-axis through (1, c3, c4) at r = 0."""
    return UhsPoint(math.exp(r), complex(c3, c4))


def conserved_integrals(points, dr: float):
    """First integrals (I1, I2, I3) of a sampled affinely parameterized curve.

    Velocities are second-order central differences, so the three returned
    arrays cover the interior samples only.  Along a true geodesic all three
    are constant, with I1 = 1 for arc-length parameterization.
    """
    if len(points) < 3:
        raise TooFewSamples("need at least 3 samples for central differences")
    x = np.stack([p.x for p in points])  # (n, 3)
    xdot = (x[2:] - x[:-2]) / (2.0 * dr)
    x0 = x[1:-1, 0]
    i1 = (xdot**2).sum(axis=1) / x0**2
    i2 = 2.0 * xdot[:, 2] / x0**2
    i3 = 2.0 * xdot[:, 1] / x0**2
    return i1, i2, i3


# --- Christoffel symbols and covariant derivatives ------------------------


def christoffel_contract(x0, u, v):
    """Gamma(u, v) componentwise, vectorized: u, v arrays of shape (3, ...).

    Nonzero symbols: Gamma^0_00 = Gamma^1_01 = Gamma^2_02 = -1/x0,
    Gamma^0_11 = Gamma^0_22 = 1/x0.
    """
    u0, u1, u2 = u
    v0, v1, v2 = v
    return np.stack(
        [
            (-u0 * v0 + u1 * v1 + u2 * v2) / x0,
            (-u0 * v1 - u1 * v0) / x0,
            (-u0 * v2 - u2 * v0) / x0,
        ]
    )


def covariant_derivative_along(curve, field, r: float, h: float = fd.DEFAULT_STEP) -> CTangent3:
    """(nabla_{gamma'} V)(r) for a field V along the curve gamma.

    curve, field: callables r -> UhsPoint and r -> CTangent3.  The curve
    velocity and the field derivative are central differences with step h.
    """
    p = curve(r)
    dcomp = (field(r + h).components - field(r - h).components) / (2.0 * h)
    vel = (curve(r + h).x - curve(r - h).x) / (2.0 * h)
    gamma = christoffel_contract(p.x[0], vel, field(r).components)
    return CTangent3.from_components(p, dcomp + gamma)


def second_covariant_derivative_along(curve, tangent, field, r: float) -> CTangent3:
    """(nabla_{gamma'}^2 V)(r), single-level differencing to control roundoff.

    tangent: callable r -> CTangent3 giving the curve velocity analytically.
    Expands nabla^2 V = V'' + d/dr[Gamma(gamma', V)] + Gamma(gamma', nabla V).
    """
    p = curve(r)

    def comps(s):
        return field(s).components

    def gamma_term(s):
        q = curve(s)
        return christoffel_contract(q.x[0], tangent(s).components, field(s).components)

    d2v = fd.d2_h4(comps, r, h=1e-3)
    dgamma = fd.d1(gamma_term, r)
    nabla_v = fd.d1(comps, r) + gamma_term(r)
    second_gamma = christoffel_contract(p.x[0], tangent(r).components, nabla_v)
    return CTangent3.from_components(p, d2v + dgamma + second_gamma)


# --- adapted frames -------------------------------------------------------


@dataclass(frozen=True)
class NullFrame:
    """Null frame (e0, e+, e-): g(e0,e0) = g(e+,e-) = 1, g(e0,e+) = 0, e- = conj(e+)."""

    e0: CTangent3
    ep: CTangent3
    em: CTangent3


def adapted_null_frame(g: GeodesicUhs, r: float) -> NullFrame:
    """Null frame along (xi, eta) with e0 the geodesic tangent; e+ is parallel."""
    p = geodesic_point(g, r)
    xi, xib = g.xi, np.conj(g.xi)
    ch2 = math.cosh(r) ** 2
    axi = abs(xi)
    e0 = CTangent3(p, 1.0 / (xib * ch2), 1.0 / (xi * ch2), -math.sinh(r) / (axi * ch2))
    ep = CTangent3(
        p,
        -math.exp(-r) / (_SQRT2 * xib * ch2),
        math.exp(r) / (_SQRT2 * xi * ch2),
        1.0 / (_SQRT2 * axi * ch2),
    )
    return NullFrame(e0, ep, ep.conjugate())


def orthonormal_frame(g: GeodesicUhs, r: float):
    """Orthonormal frame (e0, e1, e2) with e+ = (e1 + i e2)/sqrt(2)."""
    f = adapted_null_frame(g, r)
    e1 = CTangent3.from_components(f.e0.base, (f.ep.components + f.em.components) / _SQRT2)
    e2 = CTangent3.from_components(f.e0.base, (f.ep.components - f.em.components) / (1j * _SQRT2))
    return f.e0, e1, e2


def frame_inverse(g: GeodesicUhs, r: float):
    """Coefficients of d/dt and d/dz on the adapted frame (e0, e+, e-).

    Returns (dt_coeffs, dz_coeffs), each a 3-tuple on (e0, e+, e-).
    """
    xi, xib = g.xi, np.conj(g.xi)
    axi = abs(xi)
    dt = (-axi * math.sinh(r), axi / _SQRT2, axi / _SQRT2)
    dz = (xib / 2.0, -xib * math.exp(-r) / (2.0 * _SQRT2), xib * math.exp(r) / (2.0 * _SQRT2))
    return dt, dz


# --- the derivative of Phi and the Jacobi-field map -----------------------


def dphi(g: GeodesicUhs, r: float, dxi=0.0, deta=0.0, dr=0.0, dxibar=None, detabar=None) -> CTangent3:
    """Pushforward of a chart tangent under Phi(xi, eta, r).

    dxi, deta, dr are the components on (d/dxi, d/deta, d/dr); dxibar and
    detabar default to the conjugates of dxi and deta (real vector).  Pass
    them explicitly to push forward a complexified vector.
    """
    if dxibar is None:
        dxibar = np.conj(dxi)
    if detabar is None:
        detabar = np.conj(deta)
    p = geodesic_point(g, r)
    xi, xib = g.xi, np.conj(g.xi)
    axi = abs(xi)
    th, ch = math.tanh(r), math.cosh(r)
    # images of the basis vectors, coefficients on (d/dz, d/dzbar, d/dt)
    im_xi = np.array([0.0, -th / xi**2, -1.0 / (2.0 * xi * axi * ch)])
    im_xibar = np.array([-th / xib**2, 0.0, -1.0 / (2.0 * xib * axi * ch)])
    im_eta = np.array([1.0, 0.0, 0.0])
    im_etabar = np.array([0.0, 1.0, 0.0])
    im_r = np.array([1.0 / (xib * ch**2), 1.0 / (xi * ch**2), -math.sinh(r) / (axi * ch**2)])
    out = (
        dxi * im_xi
        + dxibar * im_xibar
        + deta * im_eta
        + detabar * im_etabar
        + dr * im_r
    )
    return CTangent3(p, out[0], out[1], out[2])


def jacobi_frame_coefficients(g: GeodesicUhs, r: float, dxi=0.0, deta=0.0, dxibar=None, detabar=None):
    """Coefficients (c+, c-) of h(X) on (e+, e-) for a chart tangent X."""
    if dxibar is None:
        dxibar = np.conj(dxi)
    if detabar is None:
        detabar = np.conj(deta)
    xi, xib = g.xi, np.conj(g.xi)
    er, emr = math.exp(r), math.exp(-r)
    # h(d/dxi) and h(d/deta) from the coordinate description of h
    cp_xi, cm_xi = -er / (2.0 * _SQRT2 * xi), -emr / (2.0 * _SQRT2 * xi)
    cp_eta, cm_eta = -xib * emr / (2.0 * _SQRT2), xib * er / (2.0 * _SQRT2)
    cp = (
        dxi * cp_xi
        + deta * cp_eta
        + dxibar * np.conj(cm_xi)
        + detabar * np.conj(cm_eta)
    )
    cm = (
        dxi * cm_xi
        + deta * cm_eta
        + dxibar * np.conj(cp_xi)
        + detabar * np.conj(cp_eta)
    )
    return cp, cm


def jacobi_field(g: GeodesicUhs, r: float, dxi=0.0, deta=0.0, dxibar=None, detabar=None) -> CTangent3:
    """h(X) at parameter r: the orthogonal Jacobi field matching the chart tangent X."""
    cp, cm = jacobi_frame_coefficients(g, r, dxi, deta, dxibar, detabar)
    f = adapted_null_frame(g, r)
    return f.ep.scaled(cp) + f.em.scaled(cm)
