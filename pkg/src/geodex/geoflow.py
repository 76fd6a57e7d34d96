"""Geodesics of the neutral Kahler metric on the geodesic space.

In the (xi, eta) chart the geodesic equations reduce to

    xi xi'' - (xi')^2 + (conj(eta)')^2 xi^4 = 0,
    conj(xi) eta'' + 2 conj(xi)' eta' = 0,

which integrate in closed form to the sinh/cosh family parameterized by four
complex constants (b1, b2, b3, b4).  The G-length of the tangent is the
constant Im(b2^2)/2, and the tangent extends to a Killing field of the
neutral metric, so the geodesics are exactly the orbits of 1-parameter
isometry subgroups.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import ChartExit, StepFailure
from .hyp3 import GeodesicUhs
from .isometry import LKilling
from .lspace import XI_ETA, GeodesicGlobal, LTangent, mu_from_xieta

_SINH_TOL = 1e-12


@dataclass(frozen=True)
class GeoParams:
    """Integration constants of a closed-form geodesic.

    b2 = 0 or b3 = 0 make the closed form degenerate (the limiting straight
    lines are reachable through the numerical integrator instead) and are
    rejected.
    """

    b1: complex
    b2: complex
    b3: complex
    b4: complex

    def __post_init__(self):
        if self.b2 == 0:
            raise ValueError("b2 = 0: closed form degenerates, use the integrator")
        if self.b3 == 0:
            raise ValueError("b3 = 0: closed form degenerates, use the integrator")


def _sinh_arg(params: GeoParams, t: float) -> complex:
    return params.b2 * t + params.b1


def geodesic_G(params: GeoParams, t: float) -> GeodesicUhs:
    """Point of the closed-form geodesic at affine parameter t."""
    u = _sinh_arg(params, t)
    s = cmath.sinh(u)
    if abs(s) < _SINH_TOL:
        raise ChartExit(f"sinh({u}) = 0: geodesic leaves the chart at t = {t}")
    ub = np.conj(u)
    xi = np.conj(params.b3) * s / params.b2
    eta = params.b4 - np.conj(params.b2) * cmath.cosh(ub) / (params.b3 * cmath.sinh(ub))
    return GeodesicUhs(xi, eta)


def geodesic_velocity(params: GeoParams, t: float) -> LTangent:
    """Chart-U tangent of the closed-form geodesic: (xi', eta') with
    eta' = b3 / conj(xi)^2."""
    u = _sinh_arg(params, t)
    if abs(cmath.sinh(u)) < _SINH_TOL:
        raise ChartExit(f"sinh({u}) = 0: geodesic leaves the chart at t = {t}")
    ub = np.conj(u)
    dxi = np.conj(params.b3) * cmath.cosh(u)
    deta = np.conj(params.b2) ** 2 / (params.b3 * cmath.sinh(ub) ** 2)
    return LTangent(XI_ETA, dxi, deta)


def tangent_norm_constant(params: GeoParams) -> float:
    """Constant G-length of the geodesic tangent, Im(b2^2)/2."""
    return (params.b2**2).imag / 2.0


def geodesic_G_mu(params: GeoParams, t: float) -> GeodesicGlobal:
    """The geodesic point in boundary coordinates."""
    u = _sinh_arg(params, t)
    ub = np.conj(u)
    s, sb = cmath.sinh(u), cmath.sinh(ub)
    if abs(s) < _SINH_TOL:
        raise ChartExit(f"sinh({u}) = 0: geodesic leaves the chart at t = {t}")
    b2, b3, b4 = params.b2, params.b3, params.b4
    mu1 = -b4 + np.conj(b2) * (1.0 + cmath.cosh(ub)) / (b3 * sb)
    den = np.conj(b3) * np.conj(b4) * s + b2 * (1.0 - cmath.cosh(u))
    scale = abs(np.conj(b3) * s) + abs(b2) * (1.0 + abs(cmath.cosh(u)))
    if abs(den) < _SINH_TOL * scale:
        raise ChartExit(f"mu2 denominator vanishes at t = {t}")
    mu2 = np.conj(b3) * s / den
    return GeodesicGlobal.from_mu(mu1, mu2)


def killing_of_geodesic(params: GeoParams) -> LKilling:
    """The Killing field of the neutral metric whose restriction to the
    geodesic is its tangent: mu1' = c1 + c2 mu1 + c3 mu1^2 along the curve."""
    b2, b3, b4 = params.b2, params.b3, params.b4
    c1 = -(b3**2 * b4**2 - np.conj(b2) ** 2) / (2.0 * b3)
    c2 = -b3 * b4
    c3 = -b3 / 2.0
    return LKilling(c1, c2, c3)


@dataclass(frozen=True)
class GeodesicPath:
    """Sampled numerically-integrated geodesic: parameter values, chart
    points, and chart-U velocities."""

    ts: np.ndarray
    points: tuple
    velocities: tuple


def _rhs(t, y):
    xi, dxi, eta, deta = y
    ddxi = (dxi**2 - np.conj(deta) ** 2 * xi**4) / xi
    ddeta = -2.0 * np.conj(dxi) * deta / np.conj(xi)
    return [dxi, ddxi, deta, ddeta]


def integrate_geodesic_numeric(
    initial: GeodesicUhs, velocity: LTangent, t_end: float, num: int = 50
) -> GeodesicPath:
    """Integrate the geodesic system from chart-U initial data.

    Uses an adaptive 8th-order Runge-Kutta scheme at relative tolerance
    1e-10; the conserved G-length of the tangent is a good drift diagnostic
    for callers.
    """
    if velocity.chart != XI_ETA:
        raise ValueError("velocity must be a chart-U tangent")
    y0 = np.array([initial.xi, velocity.a, initial.eta, velocity.b], dtype=complex)
    sol = solve_ivp(
        _rhs,
        (0.0, t_end),
        y0,
        method="DOP853",
        rtol=1e-10,
        atol=1e-12,
        dense_output=True,
    )
    if not sol.success:
        raise StepFailure(f"integrator failed: {sol.message}")
    ts = np.linspace(0.0, t_end, num)
    ys = sol.sol(ts)
    points = tuple(GeodesicUhs(ys[0, i], ys[2, i]) for i in range(num))
    vels = tuple(LTangent(XI_ETA, ys[1, i], ys[3, i]) for i in range(num))
    return GeodesicPath(ts, points, vels)
