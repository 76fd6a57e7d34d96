"""Killing algebras and closed-form isometry flows.

The hyperbolic metric and the neutral Kahler metric on the geodesic space
carry isomorphic 6-parameter Killing algebras.  On the half-space model the
algebra is packaged as three complex parameters (alpha, beta, gamma); the
flow of such a field is a matrix Riccati equation whose solution is written
in closed form below.  On the geodesic space the algebra is packaged as
(c1, c2, c3), and `induced_killing` realizes the correspondence
c = (-beta, gamma, -conj(alpha)).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import LeavesChart, TranslationCase
from .hyp3 import GeodesicUhs, Tangent3, UhsPoint
from .lspace import MU, GeodesicGlobal, LTangent, _mu_values

_SERIES_CUT = 1e-4


@dataclass(frozen=True)
class HypKilling:
    """Killing field of the hyperbolic metric.

    The field is Re[t(gamma + 2 alpha conj(z)) d/dt
    + 2(beta + gamma z - alpha t^2 + conj(alpha) z^2) d/dz].
    """

    alpha: complex
    beta: complex
    gamma: complex


@dataclass(frozen=True)
class LKilling:
    """Killing field of the neutral metric: components
    (c1 + c2 mu1 + c3 mu1^2, conj(c3) - conj(c2) mu2 + conj(c1) mu2^2)."""

    c1: complex
    c2: complex
    c3: complex


@dataclass(frozen=True)
class FlowAux:
    """Shift tau and effective exponent gamma1 = gamma + 2 conj(alpha) tau
    used by the closed-form flow; tau is a root of
    conj(alpha) tau^2 + gamma tau + beta = 0."""

    tau: complex
    gamma1: complex


def hyp_killing_vector(k: HypKilling, p: UhsPoint) -> Tangent3:
    """Evaluate the Killing field at a half-space point.

    The real-part convention is fixed so that the field is the s-derivative
    of `hyp_flow`: the flow equations are dt/ds = t(Re(gamma) + 2 Re(alpha
    conj(z))) and dz/ds = beta + gamma z - alpha t^2 + conj(alpha) z^2.
    """
    t, z = p.t, p.z
    v = k.beta + k.gamma * z - k.alpha * t**2 + np.conj(k.alpha) * z**2
    u = t * (k.gamma + 2.0 * k.alpha * np.conj(z)).real
    return Tangent3(p, v, u)


def l_killing_vector(k: LKilling, base: GeodesicGlobal) -> LTangent:
    """Evaluate a Killing field of the neutral metric in the mu chart."""
    mu1, mu2 = _mu_values(base)
    a = k.c1 + k.c2 * mu1 + k.c3 * mu1**2
    b = np.conj(k.c3) - np.conj(k.c2) * mu2 + np.conj(k.c1) * mu2**2
    return LTangent(MU, a, b)


def flow_aux(k: HypKilling) -> FlowAux:
    """Pick the shift tau and exponent gamma1 for the closed-form flow.

    When alpha != 0 the quadratic has two roots; either gives the same flow,
    and we deterministically take the one of smaller modulus (ties broken by
    larger real part).
    """
    if k.alpha == 0 and k.gamma == 0:
        raise TranslationCase("alpha = gamma = 0: flow is a horizontal translation")
    if k.alpha == 0:
        tau = -k.beta / k.gamma
    else:
        ab = np.conj(k.alpha)
        disc = cmath.sqrt(k.gamma**2 - 4.0 * ab * k.beta)
        r1 = (-k.gamma + disc) / (2.0 * ab)
        r2 = (-k.gamma - disc) / (2.0 * ab)
        tau = min(r1, r2, key=lambda r: (abs(r), -r.real))
    return FlowAux(complex(tau), complex(k.gamma + 2.0 * np.conj(k.alpha) * tau))


def _phi(gamma1: complex, s: float) -> complex:
    """(e^{gamma1 s} - 1)/gamma1, by series when the exponent is small."""
    w = gamma1 * s
    if abs(w) < _SERIES_CUT:
        return s * (1.0 + w / 2.0 + w**2 / 6.0 + w**3 / 24.0)
    return (cmath.exp(w) - 1.0) / gamma1


def hyp_flow(k: HypKilling, p: UhsPoint, s: float) -> UhsPoint:
    """Move a point time s along the 1-parameter isometry group of k."""
    t0, z0 = p.t, p.z
    try:
        aux = flow_aux(k)
    except TranslationCase:
        return UhsPoint(t0, z0 + k.beta * s)
    tau, g1 = aux.tau, aux.gamma1
    lam = np.conj(k.alpha) * _phi(g1, s)
    big = abs(z0 - tau) ** 2 + t0**2
    w = np.conj(z0) - np.conj(tau) - lam * big
    den = abs(w) ** 2 + t0**2
    growth = cmath.exp(g1 * s)
    t = t0 * big * abs(growth) / den
    z = (z0 - tau - np.conj(lam) * big) * big * growth / den + tau
    return UhsPoint(t, z)


def l_action(k: HypKilling, g: GeodesicUhs, s: float) -> GeodesicUhs:
    """Push an oriented geodesic through the isometry flow of k.

    The chart-U image is given in closed form; geodesics whose image becomes
    parallel to the height axis leave the chart and raise LeavesChart.
    """
    xi, eta = g.xi, g.eta
    try:
        aux = flow_aux(k)
    except TranslationCase:
        return GeodesicUhs(xi, eta + k.beta * s)
    tau, g1 = aux.tau, aux.gamma1
    lam = np.conj(k.alpha) * _phi(g1, s)
    p = np.conj(lam)
    growth = cmath.exp(g1 * s)
    etab, xib = np.conj(eta), np.conj(xi)
    f1 = (
        xi
        / np.conj(growth)
        * (p * (etab + 1.0 / xi - np.conj(tau)) - 1.0)
        * (p * (etab - 1.0 / xi - np.conj(tau)) - 1.0)
    )
    dplus = lam * (eta + 1.0 / xib - tau) - 1.0
    dminus = lam * (eta - 1.0 / xib - tau) - 1.0
    num = eta - tau - lam * (eta + 1.0 / xib - tau) * (eta - 1.0 / xib - tau)
    f2 = num / (dplus * dminus) * growth + tau
    if not (np.isfinite(f1) and np.isfinite(f2)) or abs(f1) < 1e-12 or abs(f2) > 1e12:
        raise LeavesChart("image geodesic is parallel to the height axis")
    return GeodesicUhs(f1, f2)


def induced_killing(k: HypKilling) -> LKilling:
    """Generator of the induced action on the geodesic space."""
    return LKilling(-k.beta, k.gamma, -np.conj(k.alpha))
