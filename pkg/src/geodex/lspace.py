"""The space of oriented geodesics of H^3 and its neutral Kahler structure.

Two charts are used.  Chart U is (xi, eta), excluding geodesics parallel to
the height axis.  The global holomorphic coordinates are (mu1, mu2):

    mu1 = -eta + 1/conj(xi),        mu2 = 1/(conj(eta) + 1/xi),

where mu2 is the stereographic image of the future boundary endpoint and mu1
the antiholomorphic image of the past endpoint.  Each mu lives on a Riemann
sphere stored as a unit 3-vector, so mu = infinity is ordinary data (the
north pole of the coordinate sphere).

Scale convention: 2-forms use the alternating convention with the 1/2 factor
(dx ^ dy = (dx (x) dy - dy (x) dx)/2), which is the one under which the
symplectic form, the complex structure and the metric close up into a Kahler
triple G = Omega(J., .) with G(X, X) = Im(a^2/xi^2 + conj(xi)^2 b^2)/2 in
chart U.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ChartBoundary, ChartMismatch, OutsideChartU, ReflectedDiagonal
from .hyp3 import GeodesicUhs
from . import fd

XI_ETA = "xi-eta"
MU = "mu"

_DIAGONAL_TOL = 1e-12
_VERTICAL_TOL = 1e-13


@dataclass(frozen=True)
class RSpherePoint:
    """Point of the coordinate Riemann sphere, stored as a unit 3-vector.

    The chart value is mu = (n1 + i n2) / (1 - n3); the north pole (0, 0, 1)
    is mu = infinity.
    """

    n: tuple

    def __post_init__(self):
        n = np.asarray(self.n, dtype=float)
        nrm = np.linalg.norm(n)
        if abs(nrm - 1.0) > 1e-9:
            raise ValueError(f"sphere point must be a unit vector, |n| = {nrm}")
        object.__setattr__(self, "n", tuple(n / nrm))

    @classmethod
    def from_mu(cls, mu: complex) -> "RSpherePoint":
        d = 1.0 + abs(mu) ** 2
        return cls((2.0 * mu.real / d, 2.0 * mu.imag / d, (abs(mu) ** 2 - 1.0) / d))

    @classmethod
    def infinity(cls) -> "RSpherePoint":
        return cls((0.0, 0.0, 1.0))

    @property
    def is_infinity(self) -> bool:
        return self.n[2] > 1.0 - 1e-15

    @property
    def mu(self) -> complex:
        if self.is_infinity:
            raise ChartBoundary("mu = infinity has no finite chart value")
        n1, n2, n3 = self.n
        return complex(n1, n2) / (1.0 - n3)


@dataclass(frozen=True)
class GeodesicGlobal:
    """Oriented geodesic by its boundary pair (mu1, mu2), off the reflected diagonal."""

    mu1: RSpherePoint
    mu2: RSpherePoint

    def __post_init__(self):
        m = np.asarray(self.mu1.n)
        n = np.asarray(self.mu2.n)
        if np.linalg.norm(m + n) < _DIAGONAL_TOL:
            raise ReflectedDiagonal(
                "boundary pair lies on the reflected diagonal (coincident endpoints)"
            )

    @classmethod
    def from_mu(cls, mu1, mu2) -> "GeodesicGlobal":
        """Build from chart values; pass None for infinity."""
        p1 = RSpherePoint.infinity() if mu1 is None else RSpherePoint.from_mu(complex(mu1))
        p2 = RSpherePoint.infinity() if mu2 is None else RSpherePoint.from_mu(complex(mu2))
        return cls(p1, p2)


@dataclass(frozen=True)
class LTangent:
    """Tangent vector to the geodesic space: complex components (a, b) in a named chart.

    Real vectors carry implicit conjugate components on the barred basis.
    """

    chart: str
    a: complex
    b: complex

    def __post_init__(self):
        if self.chart not in (XI_ETA, MU):
            raise ValueError(f"unknown chart tag {self.chart!r}")


def _require_chart(X: LTangent, chart: str):
    if X.chart != chart:
        raise ChartMismatch(f"expected a {chart!r} tangent, got {X.chart!r}")


def _same_chart(X: LTangent, Y: LTangent) -> str:
    if X.chart != Y.chart:
        raise ChartMismatch(f"mixed charts {X.chart!r} and {Y.chart!r}")
    return X.chart


# --- chart changes --------------------------------------------------------


def mu_from_xieta(g: GeodesicUhs) -> GeodesicGlobal:
    """Boundary coordinates of a chart-U geodesic."""
    xi, eta = g.xi, g.eta
    mu1 = -eta + 1.0 / np.conj(xi)
    den = np.conj(eta) + 1.0 / xi
    mu2 = None if den == 0 else 1.0 / den
    return GeodesicGlobal.from_mu(mu1, mu2)


def xieta_from_mu(g: GeodesicGlobal) -> GeodesicUhs:
    """Chart-U coordinates; raises OutsideChartU for vertical geodesics."""
    if g.mu1.is_infinity:
        raise OutsideChartU("mu1 = infinity: geodesic through the point at infinity")
    m1 = g.mu1.mu
    if g.mu2.is_infinity:
        den = np.conj(m1)
        eta = -m1 / 2.0
    else:
        m2 = g.mu2.mu
        if m2 == 0:
            raise OutsideChartU("mu2 = 0: geodesic through the point at infinity")
        den = np.conj(m1) + 1.0 / m2
        eta = -(m1 - 1.0 / np.conj(m2)) / 2.0
    scale = 1.0 + abs(m1)
    if abs(den) < _VERTICAL_TOL * scale:
        raise OutsideChartU("geodesic parallel to the x0-axis")
    return GeodesicUhs(2.0 / den, eta)


def endpoints_ball(g: GeodesicGlobal):
    """Past and future boundary points on the unit sphere, as 3-vectors.

    In terms of the stored coordinate-sphere vectors m (for mu1) and n (for
    mu2) the stereographic displays collapse to past = (-m1, -m2, m3) and
    future = (n1, n2, -n3).
    """
    m = np.asarray(g.mu1.n)
    n = np.asarray(g.mu2.n)
    past = np.array([-m[0], -m[1], m[2]])
    future = np.array([n[0], n[1], -n[2]])
    return past, future


def tangent_to_mu(g: GeodesicUhs, X: LTangent) -> LTangent:
    """Push a real chart-U tangent to the mu chart."""
    _require_chart(X, XI_ETA)
    xi, xib = g.xi, np.conj(g.xi)
    den = np.conj(g.eta) + 1.0 / xi
    if den == 0:
        raise ChartBoundary("mu2 = infinity: no mu-chart components")
    mu2 = 1.0 / den
    a = -X.b - np.conj(X.a) / xib**2
    b = -(mu2**2) * (np.conj(X.b) - X.a / xi**2)
    return LTangent(MU, a, b)


def tangent_to_xieta(g: GeodesicUhs, X: LTangent) -> LTangent:
    """Pull a real mu-chart tangent back to chart U at the geodesic g."""
    _require_chart(X, MU)
    xi, xib = g.xi, np.conj(g.xi)
    den = np.conj(g.eta) + 1.0 / xi
    if den == 0:
        raise ChartBoundary("mu2 = infinity: no mu-chart components")
    mu2 = 1.0 / den
    mu2b = np.conj(mu2)
    b = -(X.a + np.conj(X.b) / mu2b**2) / 2.0
    a = xi**2 * (-np.conj(X.a) + X.b / mu2**2) / 2.0
    return LTangent(XI_ETA, a, b)


# --- the Kahler triple ----------------------------------------------------


def _mu_values(base: GeodesicGlobal):
    if base.mu1.is_infinity or base.mu2.is_infinity:
        raise ChartBoundary("mu-chart evaluation needs both mu finite")
    return base.mu1.mu, base.mu2.mu


def _xi_of(base) -> complex:
    if isinstance(base, GeodesicUhs):
        return base.xi
    return xieta_from_mu(base).xi


def apply_J(base, X: LTangent) -> LTangent:
    """The complex structure.  Holomorphic multiplication by i in the mu chart;
    in chart U the induced action on real vectors is
    (a, b) -> (-i xi^2 conj(b), i conj(a) / conj(xi)^2)."""
    if X.chart == MU:
        return LTangent(MU, 1j * X.a, 1j * X.b)
    xi = _xi_of(base)
    xib = np.conj(xi)
    return LTangent(XI_ETA, -1j * xi**2 * np.conj(X.b), 1j * np.conj(X.a) / xib**2)


def omega(base, X: LTangent, Y: LTangent) -> float:
    """Symplectic form on real tangents (same chart)."""
    chart = _same_chart(X, Y)
    w = X.a * np.conj(Y.b) - Y.a * np.conj(X.b)
    if chart == XI_ETA:
        return -0.5 * w.real
    mu1, mu2 = _mu_values(base if isinstance(base, GeodesicGlobal) else mu_from_xieta(base))
    return -(w / (1.0 + mu1 * np.conj(mu2)) ** 2).real


def metric_G(base, X: LTangent, Y: LTangent) -> float:
    """Neutral Kahler metric G = Omega(J., .) on real tangents (same chart)."""
    chart = _same_chart(X, Y)
    if chart == XI_ETA:
        xi = _xi_of(base)
        return 0.5 * (X.a * Y.a / xi**2 + np.conj(xi) ** 2 * X.b * Y.b).imag
    mu1, mu2 = _mu_values(base if isinstance(base, GeodesicGlobal) else mu_from_xieta(base))
    f = (1.0 + mu1 * np.conj(mu2)) ** 2
    return ((X.a * np.conj(Y.b) + Y.a * np.conj(X.b)) / f).imag


# --- curvature ------------------------------------------------------------

_REAL_BASIS = [
    LTangent(MU, 1.0, 0.0),
    LTangent(MU, 1j, 0.0),
    LTangent(MU, 0.0, 1.0),
    LTangent(MU, 0.0, 1j),
]


def metric_matrix_mu(x) -> np.ndarray:
    """G as a real 4x4 matrix in coordinates (Re mu1, Im mu1, Re mu2, Im mu2)."""
    mu1 = complex(x[0], x[1])
    mu2 = complex(x[2], x[3])
    f = (1.0 + mu1 * np.conj(mu2)) ** 2
    out = np.empty((4, 4))
    for i, X in enumerate(_REAL_BASIS):
        for j, Y in enumerate(_REAL_BASIS):
            out[i, j] = ((X.a * np.conj(Y.b) + Y.a * np.conj(X.b)) / f).imag
    return out


def gram_matrix(base) -> np.ndarray:
    """Real 4x4 Gram matrix of G in the coordinate basis of the mu chart."""
    mu1, mu2 = _mu_values(base)
    return metric_matrix_mu([mu1.real, mu1.imag, mu2.real, mu2.imag])


def gram_matrix_xieta(g: GeodesicUhs) -> np.ndarray:
    """Gram matrix of G in the real chart-U basis {dxi+c.c., i dxi+c.c., deta+c.c., i deta+c.c.}."""
    basis = [
        LTangent(XI_ETA, 1.0, 0.0),
        LTangent(XI_ETA, 1j, 0.0),
        LTangent(XI_ETA, 0.0, 1.0),
        LTangent(XI_ETA, 0.0, 1j),
    ]
    return np.array([[metric_G(g, X, Y) for Y in basis] for X in basis])


def omega_matrix_mu(x) -> np.ndarray:
    """Omega as a real antisymmetric 4x4 matrix in the mu-chart coordinates."""
    mu1 = complex(x[0], x[1])
    mu2 = complex(x[2], x[3])
    f = (1.0 + mu1 * np.conj(mu2)) ** 2
    out = np.empty((4, 4))
    for i, X in enumerate(_REAL_BASIS):
        for j, Y in enumerate(_REAL_BASIS):
            w = X.a * np.conj(Y.b) - Y.a * np.conj(X.b)
            out[i, j] = -(w / f).real
    return out


def _riemann_numeric(x, h=4e-3):
    """Riemann data of G at mu-chart point x by finite differences of the metric.

    Returns (riem, g, ginv) where riem[d, c, a, b] is the d/dx^d component of
    R(e_a, e_b) e_c, assembled from fourth-order finite differences of the
    metric components.
    """
    x = np.asarray(x, dtype=float)
    g = metric_matrix_mu(x)
    ginv = np.linalg.inv(g)
    dg = np.stack([fd.partial_d1_h4(metric_matrix_mu, x, i, h) for i in range(4)])
    d2g = np.empty((4, 4, 4, 4))
    for i in range(4):
        for j in range(i, 4):
            d2g[i, j] = d2g[j, i] = fd.partial_d2_h4(metric_matrix_mu, x, i, j, h)
    # sym[j, k, m] = d_j g_{m k} + d_k g_{m j} - d_m g_{j k}
    sym = np.empty((4, 4, 4))
    for j in range(4):
        for k in range(4):
            for m in range(4):
                sym[j, k, m] = dg[j, m, k] + dg[k, m, j] - dg[m, j, k]
    gamma = 0.5 * np.einsum("lm,jkm->ljk", ginv, sym)
    dsym = np.empty((4, 4, 4, 4))
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for m in range(4):
                    dsym[i, j, k, m] = d2g[i, j, m, k] + d2g[i, k, m, j] - d2g[i, m, j, k]
    dginv = -np.einsum("la,iab,bm->ilm", ginv, dg, ginv)
    dgamma = 0.5 * (
        np.einsum("ilm,jkm->iljk", dginv, sym) + np.einsum("lm,ijkm->iljk", ginv, dsym)
    )
    # R^d_{c a b} = d_a Gamma^d_{b c} - d_b Gamma^d_{a c}
    #              + Gamma^d_{a e} Gamma^e_{b c} - Gamma^d_{b e} Gamma^e_{a c}
    riem = (
        np.einsum("adbc->dcab", dgamma)
        - np.einsum("bdac->dcab", dgamma)
        + np.einsum("dae,ebc->dcab", gamma, gamma)
        - np.einsum("dbe,eac->dcab", gamma, gamma)
    )
    return riem, g, ginv


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature of G at a point: the one independent Riemann component,
    scalar curvature, Weyl norm and metric signature."""

    riemann_nonzero: complex
    scalar: float
    weyl_norm: float
    signature: tuple


def riemann_closed_form(base: GeodesicGlobal) -> complex:
    """The nonzero Riemann component 2 / (1 + conj(mu1) mu2)^2."""
    mu1, mu2 = _mu_values(base)
    return 2.0 / (1.0 + np.conj(mu1) * mu2) ** 2


def riemann_component_numeric(base: GeodesicGlobal, h=4e-3) -> complex:
    """Finite-difference value of the component matched against the closed form."""
    mu1, mu2 = _mu_values(base)
    x = np.array([mu1.real, mu1.imag, mu2.real, mu2.imag])
    riem, _, _ = _riemann_numeric(x, h)

    def cvec(c1: complex, c2: complex):
        """Real components of c1 d/dmu1 + c2 d/dmu2 (complexified)."""
        return np.array([c1 / 2.0, -1j * c1 / 2.0, c2 / 2.0, -1j * c2 / 2.0])

    xv = np.conj(cvec(1.0, 0.0))  # d/dmu1bar
    yv = cvec(0.0, 1.0)  # d/dmu2
    zv = cvec(0.0, 1.0)
    w = np.einsum("dcab,a,b,c->d", riem, yv, xv, zv)
    return complex(w[2] + 1j * w[3])


def _scalar_weyl_once(x, h):
    riem, g, ginv = _riemann_numeric(x, h)
    # rlow[d, c, a, b] = g(e_d, R(e_a, e_b) e_c) = R_{a b c d} in the usual
    # ordering g(R(X, Y) Z, W); Ric_{bd} = g^{ac} R_{abcd}, and in n = 4 the
    # Weyl tensor is C = R - (g o Ric)/2 + S (g o g)/12 with o the
    # Kulkarni-Nomizu product.
    rlow = np.einsum("de,ecab->dcab", g, riem)
    rabcd = np.einsum("dcab->abcd", rlow)
    ric = np.einsum("ac,abcd->bd", ginv, rabcd)
    scalar = float(np.einsum("bd,bd->", ginv, ric))
    weyl = rabcd - 0.5 * _kn_pairs(g, ric) + (scalar / 12.0) * _kn_pairs(g, g)
    return scalar, weyl


def scalar_and_weyl_numeric(base: GeodesicGlobal, h=4e-3):
    """Scalar curvature and Frobenius norm of the Weyl tensor, by finite differences.

    Uses Richardson extrapolation over steps h and h/2 to push the
    fourth-order truncation error of the stencils below the roundoff floor.
    """
    mu1, mu2 = _mu_values(base)
    x = np.array([mu1.real, mu1.imag, mu2.real, mu2.imag])
    s1, w1 = _scalar_weyl_once(x, h)
    s2, w2 = _scalar_weyl_once(x, h / 2.0)
    scalar = (16.0 * s2 - s1) / 15.0
    weyl = (16.0 * w2 - w1) / 15.0
    return scalar, float(np.sqrt((weyl**2).sum()))


def _kn_pairs(h1, h2):
    """Kulkarni-Nomizu product (h1 o h2)_{abcd}."""
    return (
        np.einsum("ac,bd->abcd", h1, h2)
        + np.einsum("bd,ac->abcd", h1, h2)
        - np.einsum("ad,bc->abcd", h1, h2)
        - np.einsum("bc,ad->abcd", h1, h2)
    )


def curvature_at(base: GeodesicGlobal) -> CurvatureReport:
    """Curvature report at a chart-interior point."""
    closed = riemann_closed_form(base)
    scalar, weyl = scalar_and_weyl_numeric(base)
    eigs = np.linalg.eigvalsh(gram_matrix(base))
    signature = (int((eigs > 0).sum()), int((eigs < 0).sum()))
    return CurvatureReport(closed, scalar, weyl, signature)
