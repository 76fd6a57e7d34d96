"""Ruled surfaces swept out by geodesics of the neutral metric.

A curve t -> (xi(t), eta(t)) of oriented geodesics sweeps a surface

    (r, t) -> (x0, x1, x2),   x0 = 1/(|xi| cosh r),   z = eta + tanh(r)/conj(xi),

in the half-space.  When the curve is a geodesic of the neutral metric the
surface is minimal, and it is totally geodesic exactly when the geodesic is
null (Im(b2^2) = 0).

The fundamental forms are computed numerically (finite differences of the
parameterization plus the hyperbolic Christoffel symbols); this pipeline is
the authority against which the closed-form display of the second
fundamental form is checked, since the printed normalizer M^2 mixes signs
that are not manifestly positive.  Steps in t are scaled by 1/|b2| so that
fast rulings keep full stencil accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ChartExit, DegenerateNormalizer, SingularPoint
from .geoflow import GeoParams
from .hyp3 import christoffel_contract, uhs_to_ball, UhsPoint

_D1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_OFFS = np.array([-2, -1, 0, 1, 2])

_BASE_STEP = 3e-3
_DET_TOL = 1e-14


def normalize_geodesic(params: GeoParams) -> GeoParams:
    """Reduce to the (b3, b4) = (1, 0) form by an isometry.

    The normalizing flow (alpha = 0, dilation factor b3, shift b3 b4/(b3-1))
    carries the surface isometrically onto the one swept by
    xi(t) = sinh(b2 t + b1)/b2, without reparameterizing (r, t).
    """
    if params.b3 == 1 and params.b4 == 0:
        return params
    if abs(params.b3 - 1.0) < 1e-12:
        raise DegenerateNormalizer(
            "b3 = 1 with b4 != 0: the normalizing shift diverges; "
            "pre-compose a small dilation first"
        )
    return GeoParams(params.b1, params.b2, 1.0, 0.0)


def ruling_curve(params: GeoParams):
    """Vectorized t -> (xi, eta) for the normalized closed-form geodesic.

    The returned callable carries a `centered(r, t, rc, tc)` attribute that
    evaluates the embedding with the horizontal offset z(rc, tc) removed,
    using difference identities (coth a - coth b = sinh(b-a)/(sinh a sinh b)
    and the like) instead of naive subtraction.  Removing the offset is a
    horizontal translation, hence an isometry; doing it stably keeps
    finite-difference stencils at local scale so the fundamental forms do
    not drown in cancellation at large |r| or large |xi|.
    """
    b1, b2 = params.b1, params.b2
    b1b, b2b = np.conj(b1), np.conj(b2)

    def curve(t):
        t = np.asarray(t, dtype=float)
        u = b2 * t + b1
        ub = b2b * t + b1b
        xi = np.sinh(u) / b2
        eta = -b2b * np.cosh(ub) / np.sinh(ub)
        return xi, eta

    def centered(r, t, rc, tc):
        t = np.asarray(t, dtype=float)
        tc = np.asarray(tc, dtype=float)
        u = b2 * t + b1
        ub = b2b * t + b1b
        ubc = b2b * tc + b1b
        sh, shc = np.sinh(ub), np.sinh(ubc)
        # eta(t) - eta(tc)
        d_eta = -b2b * np.sinh(ubc - ub) / (sh * shc)
        # 1/conj(xi)(t) - 1/conj(xi)(tc)
        d_inv = b2b * 2.0 * np.cosh((ub + ubc) / 2.0) * np.sinh((ubc - ub) / 2.0) / (sh * shc)
        # tanh r - tanh rc
        d_tanh = np.sinh(r - rc) / (np.cosh(r) * np.cosh(rc))
        z = d_eta + np.tanh(r) * d_inv + d_tanh * b2b / shc
        x0 = 1.0 / (np.abs(np.sinh(u) / b2) * np.cosh(r))
        return np.stack([x0, z.real, z.imag])

    curve.centered = centered
    return curve


def perturbed_ruling_curve(params: GeoParams):
    """Negative control: the same eta but xi(t) = sinh(b2 t^2 + b1)/b2,
    which is not a geodesic of the neutral metric."""
    b1, b2 = params.b1, params.b2
    b1b, b2b = np.conj(b1), np.conj(b2)

    def curve(t):
        t = np.asarray(t, dtype=float)
        xi = np.sinh(b2 * t**2 + b1) / b2
        ub = b2b * t + b1b
        eta = -b2b * np.cosh(ub) / np.sinh(ub)
        return xi, eta

    return curve


def _embed(curve, r, t):
    """Half-space coordinates of the swept surface, shape (3, ...)."""
    xi, eta = curve(t)
    z = eta + np.tanh(r) / np.conj(xi)
    x0 = 1.0 / (np.abs(xi) * np.cosh(r))
    return np.stack([x0, z.real, z.imag])


def surface_point(params: GeoParams, r: float, t: float) -> UhsPoint:
    """Point of the ruled surface of a normalized geodesic."""
    curve = ruling_curve(params)
    xi, _ = curve(t)
    if abs(xi) < 1e-12:
        raise ChartExit(f"ruling leaves the chart at t = {t}")
    x0, x1, x2 = _embed(curve, float(r), float(t))
    return UhsPoint(float(x0), complex(x1, x2))


def _surface_derivs(curve, r, t, hr, ht):
    """Stencil derivatives of the embedding at the (broadcast) samples."""
    centered = getattr(curve, "centered", None)
    S = np.empty((5, 5, 3) + r.shape)
    for i, oi in enumerate(_OFFS):
        for j, oj in enumerate(_OFFS):
            if centered is None:
                S[i, j] = _embed(curve, r + oi * hr, t + oj * ht)
            else:
                S[i, j] = centered(r + oi * hr, t + oj * ht, r, t)
    s0 = S[2, 2]
    s_r = np.einsum("i,ijk...->jk...", _D1, S[:, 2:3])[0] / hr
    s_t = np.einsum("j,ijk...->ik...", _D1, S[2:3, :])[0] / ht
    s_rr = np.einsum("i,ijk...->jk...", _D2, S[:, 2:3])[0] / hr**2
    s_tt = np.einsum("j,ijk...->ik...", _D2, S[2:3, :])[0] / ht**2
    s_rt = np.einsum("i,j,ijk...->k...", _D1, _D1, S) / (hr * ht)
    return s0, s_r, s_t, s_rr, s_rt, s_tt


def curve_fundamental_forms(curve, r, t, hr=_BASE_STEP, ht=_BASE_STEP):
    """First and second fundamental forms of the surface swept by `curve`.

    r, t may be scalars or broadcastable arrays.  Returns a dict with the
    induced metric (g_rr, g_rt, g_tt), second fundamental form
    (K_rr, K_rt, K_tt) and mean curvature H, all as arrays of the broadcast
    shape.  The unit normal is x0 * (S_r x S_t)/|S_r x S_t|, which makes
    (S_r, S_t, N) positively oriented.  The fourth-order stencils are
    Richardson-extrapolated over steps (h, h/2) so the totally-geodesic
    surfaces come out flat to well below 1e-8.
    """
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    r, t = np.broadcast_arrays(r, t)
    coarse = _surface_derivs(curve, r, t, hr, ht)
    fine = _surface_derivs(curve, r, t, hr / 2.0, ht / 2.0)
    s0 = fine[0]
    s_r, s_t, s_rr, s_rt, s_tt = (
        (16.0 * f - c) / 15.0 for c, f in zip(coarse[1:], fine[1:])
    )

    x0 = s0[0]
    cross = np.cross(s_r, s_t, axis=0)
    cn = np.sqrt((cross**2).sum(axis=0))
    normal = x0 * cross / cn  # g-unit normal

    def g_inner(u, v):
        return (u * v).sum(axis=0) / x0**2

    g_rr = g_inner(s_r, s_r)
    g_rt = g_inner(s_r, s_t)
    g_tt = g_inner(s_t, s_t)
    k_rr = g_inner(normal, s_rr + christoffel_contract(x0, s_r, s_r))
    k_rt = g_inner(normal, s_rt + christoffel_contract(x0, s_r, s_t))
    k_tt = g_inner(normal, s_tt + christoffel_contract(x0, s_t, s_t))
    det = g_rr * g_tt - g_rt**2
    if np.any(np.abs(det) < _DET_TOL):
        raise SingularPoint("induced metric is degenerate on the sample set")
    h = (g_tt * k_rr - 2.0 * g_rt * k_rt + g_rr * k_tt) / det
    return {
        "g_rr": g_rr, "g_rt": g_rt, "g_tt": g_tt,
        "K_rr": k_rr, "K_rt": k_rt, "K_tt": k_tt,
        "H": h,
    }


def _steps_for(params: GeoParams):
    return _BASE_STEP, _BASE_STEP / max(1.0, abs(params.b2))


def fundamental_forms(params: GeoParams, r, t):
    """Numeric fundamental forms of the normalized closed-form ruled surface."""
    hr, ht = _steps_for(params)
    return curve_fundamental_forms(ruling_curve(params), r, t, hr, ht)


def second_fundamental_form(params: GeoParams, r: float, t: float):
    """(K_rr, K_rt, K_tt) at a sample, from the numeric pipeline."""
    forms = fundamental_forms(params, float(r), float(t))
    return (float(forms["K_rr"]), float(forms["K_rt"]), float(forms["K_tt"]))


def second_fundamental_form_closed(params: GeoParams, r: float, t: float):
    """Closed-form (K_rr, K_rt, K_tt).

    K_rt = |sinh u| (b2^2 - conj(b2)^2) / (2M) and
    K_tt = Re[conj(b2) sinh u] (b2^2 - conj(b2)^2) / (|sinh u| M) with
    u = b2 t + b1.  See `_closed_normalizer` for the normalizer M; the
    numeric `second_fundamental_form` remains the authority.
    """
    b1, b2 = params.b1, params.b2
    u = b2 * float(t) + b1
    sh = np.sinh(u)
    imb = b2**2 - np.conj(b2) ** 2  # = 2i Im(b2^2)
    m = _closed_normalizer(params, r, t)
    if m == 0:
        return (0.0, 0.0, 0.0) if imb == 0 else (0.0, float("nan"), float("nan"))
    k_rt = abs(sh) * imb / (2.0 * m)
    k_tt = (np.conj(b2) * sh).real * imb / (abs(sh) * m)
    return (0.0, float(k_rt.real), float(k_tt.real))


def _closed_normalizer(params: GeoParams, r: float, t: float) -> complex:
    """Normalizer M of the closed-form second fundamental form.

    M^2 is negative real, so M is purely imaginary and cancels the
    imaginary factor b2^2 - conj(b2)^2 in the components.  The coefficient
    of the cosh r sinh r term is 8: the variant with coefficient 2 fails
    validation against the numeric pipeline away from r = 0, while this one
    matches it to finite-difference precision (~1e-9) across random
    parameters.
    """
    b1, b2 = params.b1, params.b2
    u = b2 * float(t) + b1
    ch, sh = np.cosh(u), np.sinh(u)
    m2 = (
        8.0 * abs(b2) ** 2 * math.cosh(r) * math.sinh(r) * ch.real
        - 4.0 * abs(b2) ** 2 * math.sinh(r) ** 2 * (abs(ch) ** 2 + 1.0)
        - 2.0 * abs(b2) ** 2 * abs(ch) ** 2
        - (abs(sh) ** 2 * (b2**2 + np.conj(b2) ** 2)).real
        - 2.0 * abs(b2) ** 2
    )
    return complex(np.sqrt(complex(m2)))


def mean_curvature(params: GeoParams, r: float, t: float) -> float:
    """Numeric mean curvature; vanishes for geodesic rulings."""
    forms = fundamental_forms(params, float(r), float(t))
    return float(forms["H"])


def is_totally_geodesic(params: GeoParams) -> bool:
    """True exactly when the generating geodesic is null."""
    return (params.b2**2).imag == 0.0


@dataclass(frozen=True)
class SurfacePatch:
    """Sampled ruled-surface patch with per-sample fundamental-form data.

    `ball` holds unit-ball coordinates of shape (3, nr, nt); the form entries
    and `H` are (nr, nt) arrays over the same (r, t) grid.  `regular` flags
    the samples where the induced metric is comfortably non-degenerate; the
    curvature data is only meaningful there (rotational surfaces contain a
    genuine parameterization singularity where rulings cross the axis).
    """

    params: GeoParams
    r: np.ndarray
    t: np.ndarray
    ball: np.ndarray
    forms: dict
    regular: np.ndarray


def sample_patch(
    params: GeoParams,
    r_range=(-5.0, 5.0),
    t_range=(0.1, 2.0),
    num_r: int = 64,
    num_t: int = 64,
) -> SurfacePatch:
    """Sample a normalized ruled surface on a uniform (r, t) grid."""
    params = normalize_geodesic(params)
    lo = max(r_range[0], -5.0)
    hi = min(r_range[1], 5.0)
    rs = np.linspace(lo, hi, num_r)
    ts = np.linspace(t_range[0], t_range[1], num_t)
    rg, tg = np.meshgrid(rs, ts, indexing="ij")
    forms = fundamental_forms(params, rg, tg)
    x = _embed(ruling_curve(params), rg, tg)
    # ball-model coordinates, vectorized image of the half-space map
    d = (x[0] + 1.0) ** 2 + x[1] ** 2 + x[2] ** 2
    ball = np.stack(
        [2.0 * x[1] / d, 2.0 * x[2] / d, (x[0] ** 2 + x[1] ** 2 + x[2] ** 2 - 1.0) / d]
    )
    det = forms["g_rr"] * forms["g_tt"] - forms["g_rt"] ** 2
    # For purely imaginary b2 the rulings cross the rotation axis and the
    # (r, t) parameterization degenerates (det -> 0); rulings near sinh(u) = 0
    # leave the chart entirely (they turn parallel to the height axis).
    # Curvature samples are only meaningful away from both loci.
    u = params.b2 * tg + params.b1
    regular = (np.abs(det) > 1e-2) & (np.abs(np.sinh(u)) > 1e-1)
    return SurfacePatch(params, rs, ts, ball, forms, regular)


def export_obj(patch: SurfacePatch, stream) -> None:
    """Write the patch as a triangulated OBJ mesh (ball coordinates)."""
    nr, nt = patch.ball.shape[1:]
    for i in range(nr):
        for j in range(nt):
            x, y, z = patch.ball[:, i, j]
            stream.write(f"v {x:.9f} {y:.9f} {z:.9f}\n")
    for i in range(nr - 1):
        for j in range(nt - 1):
            a = i * nt + j + 1
            b = a + 1
            c = a + nt
            d = c + 1
            stream.write(f"f {a} {b} {d}\n")
            stream.write(f"f {a} {d} {c}\n")


def export_csv(patch: SurfacePatch, stream) -> None:
    """Write per-sample rows: r, t, ball x/y/z, H, K_rt, K_tt."""
    stream.write("r,t,x,y,z,H,K_rt,K_tt\n")
    nr, nt = patch.ball.shape[1:]
    for i in range(nr):
        for j in range(nt):
            x, y, z = patch.ball[:, i, j]
            stream.write(
                f"{patch.r[i]:.9f},{patch.t[j]:.9f},{x:.9f},{y:.9f},{z:.9f},"
                f"{patch.forms['H'][i, j]:.3e},{patch.forms['K_rt'][i, j]:.9f},"
                f"{patch.forms['K_tt'][i, j]:.9f}\n"
            )
