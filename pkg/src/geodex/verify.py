"""Randomized verification suites cross-checking closed forms against oracles.

Each suite draws reproducible samples from a seeded generator, evaluates a
family of invariants (isometry pullbacks, geodesic residuals, frame and
Jacobi identities, Kahler compatibilities, curvature, Lie derivatives, flow
group laws, closed-form geodesics, ruled-surface curvature), and reports the
worst observed residual against a per-check tolerance.

Suites are independent and may run concurrently; the GEODEX_THREADS
environment variable bounds the worker pool.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import fd, hyp3, isometry, lspace, ruled
from .errors import ChartExit, LeavesChart
from .geoflow import (
    GeoParams,
    geodesic_G,
    geodesic_G_mu,
    geodesic_velocity,
    integrate_geodesic_numeric,
    killing_of_geodesic,
    tangent_norm_constant,
)
from .hyp3 import GeodesicUhs, UhsPoint
from .lspace import MU, XI_ETA, GeodesicGlobal, LTangent

SUITE_NAMES = ("hyp3", "kahler", "killing", "flows", "geoflow", "ruled")

# checks labeled "closed" compare closed forms against exact algebra or a
# tighter oracle; "fd" checks lean on finite differences and carry looser
# default tolerances.  CLI overrides replace the tolerance per kind.
CLOSED = "closed"
FD = "fd"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check: worst residual vs its tolerance."""

    suite: str
    name: str
    kind: str
    value: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.value < self.tol


def _check(suite, name, kind, value, tol, overrides):
    if overrides.get(kind) is not None:
        tol = overrides[kind]
    return CheckResult(suite, name, kind, float(value), float(tol))


def _rng(seed: int, suite: str) -> np.random.Generator:
    return np.random.default_rng([seed, SUITE_NAMES.index(suite)])


def _rand_complex(rng, n=None, scale=1.0):
    return scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n))


def _rand_chart_geodesic(rng) -> GeodesicUhs:
    while True:
        xi = _rand_complex(rng)
        if abs(xi) > 0.2:
            return GeodesicUhs(xi, _rand_complex(rng))


def _rand_global(rng) -> GeodesicGlobal:
    """Random geodesic in boundary coordinates, kept away from both the
    reflected diagonal and the mu-chart degeneracies."""
    while True:
        mu1, mu2 = _rand_complex(rng), _rand_complex(rng)
        if abs(1.0 + np.conj(mu1) * mu2) >= 0.4 and abs(1.0 + mu1 * mu2) >= 0.2:
            return GeodesicGlobal.from_mu(mu1, mu2)


# --- hyp3 ------------------------------------------------------------------


def _ball_pullback_error(p: UhsPoint, X: hyp3.Tangent3) -> float:
    def chart_map(x):
        return hyp3.uhs_to_ball(UhsPoint(x[0], complex(x[1], x[2]))).array

    J = fd.jacobian(chart_map, p.x)
    y = hyp3.uhs_to_ball(p).array
    w = J @ X.complexified().components.real
    g_ball = 4.0 * float(w @ w) / (1.0 - float(y @ y)) ** 2
    g_uhs = hyp3.metric_real(X, X)
    return abs(g_ball - g_uhs) / max(abs(g_uhs), 1e-12)


def _geodesic_residual(g: GeodesicUhs, r: float, h: float = 2e-3) -> float:
    def x_of(s):
        return hyp3.geodesic_point(g, s).x

    vel = fd.d1_h4(x_of, r, h=h)
    acc = fd.d2_h4(x_of, r, h=h)
    res = acc + hyp3.christoffel_contract(x_of(r)[0], vel, vel)
    return float(np.max(np.abs(res)))


def suite_hyp3(seed: int, overrides) -> list:
    rng = _rng(seed, "hyp3")
    # 1: the model change is an isometry
    worst = 0.0
    for _ in range(100):
        p = UhsPoint(float(rng.uniform(0.2, 3.0)), _rand_complex(rng))
        X = hyp3.Tangent3(p, _rand_complex(rng), float(rng.standard_normal()))
        worst = max(worst, _ball_pullback_error(p, X))
    out = [_check("hyp3", "ball-model isometry pullback", FD, worst, 1e-6, overrides)]

    # 2: chart curves satisfy the geodesic equation with unit speed
    worst_res, worst_i1, worst_i23 = 0.0, 0.0, 0.0
    for _ in range(50):
        g = _rand_chart_geodesic(rng)
        r0 = float(rng.uniform(-1.5, 1.5))
        worst_res = max(worst_res, _geodesic_residual(g, r0))
        # the integrals difference velocities at second order, so keep the
        # sampling window tight enough for the truncation to clear 1e-6
        rs = np.linspace(r0 - 0.002, r0 + 0.002, 41)
        pts = [hyp3.geodesic_point(g, r) for r in rs]
        i1, i2, i3 = hyp3.conserved_integrals(pts, rs[1] - rs[0])
        worst_i1 = max(worst_i1, float(np.max(np.abs(i1 - 1.0))))
        worst_i23 = max(
            worst_i23,
            float(np.ptp(i2)),
            float(np.ptp(i3)),
        )
    out.append(_check("hyp3", "geodesic equation residual", FD, worst_res, 1e-8, overrides))
    out.append(_check("hyp3", "unit-speed integral I1 = 1", FD, worst_i1, 1e-6, overrides))
    out.append(_check("hyp3", "first integrals I2, I3 constant", FD, worst_i23, 1e-6, overrides))

    # negative control: a Euclidean straight segment is not a geodesic
    # (asymmetric endpoints so the chord is not a horizontal circle arc)
    g = GeodesicUhs(1.0, 0.0)
    p0, p1 = hyp3.geodesic_point(g, -0.2), hyp3.geodesic_point(g, 0.8)
    rs = np.linspace(0.0, 1.0, 41)
    pts = [
        UhsPoint(
            (1 - s) * p0.t + s * p1.t, (1 - s) * p0.z + s * p1.z
        )
        for s in rs
    ]
    i1, _, _ = hyp3.conserved_integrals(pts, rs[1] - rs[0])
    out.append(
        _check("hyp3", "straight-segment control breaks I1", CLOSED, 1e-2 / max(float(np.ptp(i1)), 1e-30), 1.0, overrides)
    )

    # 3: frames and Jacobi fields
    target = np.array([[1.0, 0, 0], [0, 0, 1.0], [0, 1.0, 0]])
    worst_gram, worst_par, worst_jac = 0.0, 0.0, 0.0
    for _ in range(50):
        g = _rand_chart_geodesic(rng)
        r0 = float(rng.uniform(-1.5, 1.5))
        f = hyp3.adapted_null_frame(g, r0)
        vecs = (f.e0, f.ep, f.em)
        gram = np.array([[hyp3.metric(a, b) for b in vecs] for a in vecs])
        worst_gram = max(worst_gram, float(np.max(np.abs(gram - target))))

        nabla = hyp3.covariant_derivative_along(
            lambda s: hyp3.geodesic_point(g, s),
            lambda s: hyp3.adapted_null_frame(g, s).ep,
            r0,
        )
        worst_par = max(worst_par, hyp3.norm(nabla))

        for dxi, deta in ((1.0, 0.0), (0.0, 1.0)):
            field = lambda s: hyp3.jacobi_field(g, s, dxi=dxi, deta=deta)
            dd = hyp3.second_covariant_derivative_along(
                lambda s: hyp3.geodesic_point(g, s),
                lambda s: hyp3.adapted_null_frame(g, s).e0,
                field,
                r0,
            )
            res = dd + field(r0).scaled(-1.0)
            worst_jac = max(worst_jac, hyp3.norm(res))
    out.append(_check("hyp3", "null-frame inner products", CLOSED, worst_gram, 1e-12, overrides))
    out.append(_check("hyp3", "parallel transport of e+", FD, worst_par, 1e-6, overrides))
    out.append(_check("hyp3", "Jacobi equation for h-images", FD, worst_jac, 1e-6, overrides))
    return out


# --- kahler ----------------------------------------------------------------


def suite_kahler(seed: int, overrides) -> list:
    rng = _rng(seed, "kahler")
    worst_j2 = worst_oj = worst_go = 0.0
    sig_ok = True
    for _ in range(200):
        base = _rand_global(rng)
        X = LTangent(MU, _rand_complex(rng), _rand_complex(rng))
        Y = LTangent(MU, _rand_complex(rng), _rand_complex(rng))
        JJX = lspace.apply_J(base, lspace.apply_J(base, X))
        worst_j2 = max(worst_j2, abs(JJX.a + X.a), abs(JJX.b + X.b))
        worst_oj = max(
            worst_oj,
            abs(
                lspace.omega(base, lspace.apply_J(base, X), lspace.apply_J(base, Y))
                - lspace.omega(base, X, Y)
            ),
        )
        worst_go = max(
            worst_go,
            abs(lspace.metric_G(base, X, Y) - lspace.omega(base, lspace.apply_J(base, X), Y)),
        )
        ev = np.linalg.eigvalsh(lspace.gram_matrix(base))
        sig_ok = sig_ok and int((ev > 0).sum()) == 2 and int((ev < 0).sum()) == 2
    out = [
        _check("kahler", "J squared is minus identity", CLOSED, worst_j2, 1e-14, overrides),
        _check("kahler", "omega is J-invariant", CLOSED, worst_oj, 1e-12, overrides),
        _check("kahler", "G equals omega(J., .)", CLOSED, worst_go, 1e-12, overrides),
        _check("kahler", "neutral signature (2,2)", CLOSED, 0.0 if sig_ok else 1.0, 0.5, overrides),
    ]

    # the curvature oracle differentiates the metric twice; its roundoff
    # floor grows with the coordinate radius (the metric shrinks like
    # 1/|mu|^4 there), so draw curvature samples from a bounded chart region
    worst_riem = worst_scal = worst_weyl = 0.0
    n_done = 0
    while n_done < 20:
        base = _rand_global(rng)
        mu1, mu2 = lspace._mu_values(base)
        if abs(mu1) > 1.2 or abs(mu2) > 1.2:
            continue
        n_done += 1
        rep = lspace.curvature_at(base)
        numeric = lspace.riemann_component_numeric(base)
        worst_riem = max(worst_riem, abs(numeric - rep.riemann_nonzero))
        worst_scal = max(worst_scal, abs(rep.scalar))
        worst_weyl = max(worst_weyl, rep.weyl_norm)
    out.append(_check("kahler", "Riemann component closed vs numeric", FD, worst_riem, 1e-4, overrides))
    out.append(_check("kahler", "scalar curvature vanishes", FD, worst_scal, 1e-8, overrides))
    out.append(_check("kahler", "Weyl tensor vanishes", FD, worst_weyl, 1e-6, overrides))
    return out


# --- killing ---------------------------------------------------------------


def _lie_derivative_hyp(k: isometry.HypKilling, x: np.ndarray) -> float:
    """Residual of the metric Lie derivative along a candidate Killing field,
    normalized by the metric scale at the point."""

    def kvec(y):
        p = UhsPoint(y[0], complex(y[1], y[2]))
        return isometry.hyp_killing_vector(k, p).complexified().components.real

    x0 = x[0]
    dk = np.stack([fd.partial_d1_h4(kvec, x, i, h=1e-3) for i in range(3)])  # dk[a, c] = d_a K^c
    g = np.eye(3) / x0**2
    dg0 = -2.0 * np.eye(3) / x0**3  # only the x0-derivative is nonzero
    kx = kvec(x)
    lie = kx[0] * dg0 + dk @ g + (dk @ g).T
    return float(np.max(np.abs(lie))) * x0**2


def _lie_derivative_L(k: isometry.LKilling, x: np.ndarray) -> float:
    def kvec(y):
        base = GeodesicGlobal.from_mu(complex(y[0], y[1]), complex(y[2], y[3]))
        t = isometry.l_killing_vector(k, base)
        return np.array([t.a.real, t.a.imag, t.b.real, t.b.imag])

    g = lspace.metric_matrix_mu(x)
    dg = np.stack([fd.partial_d1_h4(lspace.metric_matrix_mu, x, i, h=1e-3) for i in range(4)])
    dk = np.stack([fd.partial_d1_h4(kvec, x, i, h=1e-3) for i in range(4)])
    kx = kvec(x)
    lie = np.einsum("c,cab->ab", kx, dg) + dk @ g + (dk @ g).T
    return float(np.max(np.abs(lie))) / max(float(np.max(np.abs(g))), 1e-12)


def suite_killing(seed: int, overrides) -> list:
    rng = _rng(seed, "killing")
    worst_h = worst_l = 0.0
    for _ in range(20):
        kh = isometry.HypKilling(*_rand_complex(rng, 3))
        kl = isometry.LKilling(*_rand_complex(rng, 3))
        for _ in range(50):
            p = UhsPoint(float(rng.uniform(0.3, 2.5)), _rand_complex(rng))
            worst_h = max(worst_h, _lie_derivative_hyp(kh, p.x))
            base = _rand_global(rng)
            mu1, mu2 = lspace._mu_values(base)
            x = np.array([mu1.real, mu1.imag, mu2.real, mu2.imag])
            worst_l = max(worst_l, _lie_derivative_L(kl, x))
    return [
        _check("killing", "hyperbolic Killing fields", FD, worst_h, 1e-6, overrides),
        _check("killing", "neutral-metric Killing fields", FD, worst_l, 1e-6, overrides),
    ]


# --- flows -----------------------------------------------------------------


def _action_metric_distortion(k, g, s, rng):
    """Worst relative change of G under the chart action, via FD pushforward."""

    def act(w):
        out = isometry.l_action(k, GeodesicUhs(complex(w[0], w[1]), complex(w[2], w[3])), s)
        return np.array([out.xi.real, out.xi.imag, out.eta.real, out.eta.imag])

    w0 = np.array([g.xi.real, g.xi.imag, g.eta.real, g.eta.imag])
    J = np.stack([fd.partial_d1_h4(act, w0, i, h=1e-4) for i in range(4)], axis=1)
    img = isometry.l_action(k, g, s)
    worst = 0.0
    for _ in range(4):
        w = rng.standard_normal(4)
        u = rng.standard_normal(4)
        X = LTangent(XI_ETA, complex(w[0], w[1]), complex(w[2], w[3]))
        Y = LTangent(XI_ETA, complex(u[0], u[1]), complex(u[2], u[3]))
        gw, gu = J @ w, J @ u
        Xi = LTangent(XI_ETA, complex(gw[0], gw[1]), complex(gw[2], gw[3]))
        Yi = LTangent(XI_ETA, complex(gu[0], gu[1]), complex(gu[2], gu[3]))
        before = lspace.metric_G(g, X, Y)
        after = lspace.metric_G(img, Xi, Yi)
        worst = max(worst, abs(after - before) / max(abs(before), 1.0))
    return worst


def suite_flows(seed: int, overrides) -> list:
    rng = _rng(seed, "flows")
    worst_group = worst_gen = worst_pres = worst_ind = 0.0
    n_done = 0
    while n_done < 20:
        k = isometry.HypKilling(*_rand_complex(rng, 3, scale=0.8))
        p = UhsPoint(float(rng.uniform(0.3, 2.0)), _rand_complex(rng))
        s1, s2 = rng.uniform(-0.6, 0.6, 2)

        q1 = isometry.hyp_flow(k, isometry.hyp_flow(k, p, s1), s2)
        q2 = isometry.hyp_flow(k, p, s1 + s2)
        worst_group = max(worst_group, abs(q1.t - q2.t), abs(q1.z - q2.z))

        def flow_of(s):
            q = isometry.hyp_flow(k, p, s)
            return np.array([q.t, q.z.real, q.z.imag])

        gen = fd.d1_h4(flow_of, 0.0, h=1e-3)
        v = isometry.hyp_killing_vector(k, p)
        worst_gen = max(
            worst_gen,
            float(np.max(np.abs(gen - np.array([v.u, v.v.real, v.v.imag])))),
        )

        g = _rand_chart_geodesic(rng)
        s = float(rng.uniform(-0.5, 0.5))
        # Killing components grow quadratically in mu, so the absolute FD
        # comparison is only sharp on a bounded chart region
        gm = lspace.mu_from_xieta(g)
        m1, m2 = lspace._mu_values(gm)
        if abs(m1) > 2.5 or abs(m2) > 2.5:
            continue
        try:
            worst_pres = max(worst_pres, _action_metric_distortion(k, g, s, rng))

            def mu_of(sv):
                out = lspace.mu_from_xieta(isometry.l_action(k, g, sv))
                m1, m2 = lspace._mu_values(out)
                return np.array([m1.real, m1.imag, m2.real, m2.imag])

            md = fd.d1_h4(mu_of, 0.0, h=1e-3)
            t = isometry.l_killing_vector(
                isometry.induced_killing(k), lspace.mu_from_xieta(g)
            )
            worst_ind = max(
                worst_ind,
                float(
                    np.max(np.abs(md - np.array([t.a.real, t.a.imag, t.b.real, t.b.imag])))
                ),
            )
        except (LeavesChart, ChartExit):
            continue
        n_done += 1
    return [
        _check("flows", "flow group law", CLOSED, worst_group, 1e-9, overrides),
        _check("flows", "flow generator matches field", FD, worst_gen, 1e-6, overrides),
        _check("flows", "induced action preserves G", FD, worst_pres, 1e-5, overrides),
        _check("flows", "induced generator correspondence", FD, worst_ind, 1e-6, overrides),
    ]


# --- geoflow ---------------------------------------------------------------


def suite_geoflow(seed: int, overrides) -> list:
    rng = _rng(seed, "geoflow")
    worst_dev = worst_norm = worst_mu = 0.0
    n_done = 0
    while n_done < 12:
        params = GeoParams(
            _rand_complex(rng, scale=0.5),
            _rand_complex(rng),
            _rand_complex(rng),
            _rand_complex(rng, scale=0.5),
        )
        if abs(params.b2) < 0.3 or abs(params.b3) < 0.3:
            continue
        t_end = 0.8 / max(1.0, abs(params.b2))
        # reject draws whose trajectory grazes the chart boundary, where the
        # coordinate expressions (and the integrator state) blow up
        healthy = True
        for tv in np.linspace(0.0, t_end, 33):
            u = params.b2 * tv + params.b1
            if abs(np.sinh(u)) < 0.3:
                healthy = False
                break
            gg = geodesic_G(params, float(tv))
            if abs(gg.xi) < 0.15 or abs(gg.xi) > 30.0 or abs(gg.eta) > 30.0:
                healthy = False
                break
        if not healthy:
            continue
        try:
            path = integrate_geodesic_numeric(
                geodesic_G(params, 0.0), geodesic_velocity(params, 0.0), t_end
            )
            norm0 = tangent_norm_constant(params)
            for tv, pt in zip(path.ts, path.points):
                closed = geodesic_G(params, float(tv))
                worst_dev = max(
                    worst_dev, abs(closed.xi - pt.xi), abs(closed.eta - pt.eta)
                )
                vel = geodesic_velocity(params, float(tv))
                worst_norm = max(
                    worst_norm,
                    abs(lspace.metric_G(closed, vel, vel) - norm0),
                )
            # velocity in boundary coordinates matches the Killing field
            kf = killing_of_geodesic(params)
            for tv in np.linspace(0.05, t_end, 7):

                def mu_of(s):
                    gg = geodesic_G_mu(params, float(s))
                    m1, m2 = lspace._mu_values(gg)
                    return np.array([m1.real, m1.imag, m2.real, m2.imag])

                # quadratic field growth in mu makes the absolute FD
                # comparison meaningful only on a bounded region
                m0 = mu_of(float(tv))
                if np.hypot(m0[0], m0[1]) > 2.5 or np.hypot(m0[2], m0[3]) > 2.5:
                    continue
                md = fd.d1_h4(mu_of, float(tv), h=1e-3)
                kt = isometry.l_killing_vector(kf, geodesic_G_mu(params, float(tv)))
                worst_mu = max(
                    worst_mu,
                    float(
                        np.max(
                            np.abs(
                                md
                                - np.array(
                                    [kt.a.real, kt.a.imag, kt.b.real, kt.b.imag]
                                )
                            )
                        )
                    ),
                )
        except (ChartExit, ValueError):
            continue
        n_done += 1
    return [
        _check("geoflow", "closed form vs integrator", CLOSED, worst_dev, 1e-7, overrides),
        _check("geoflow", "tangent G-length constant", CLOSED, worst_norm, 1e-9, overrides),
        _check("geoflow", "tangent restricts a Killing field", FD, worst_mu, 1e-6, overrides),
    ]


# --- ruled -----------------------------------------------------------------


def suite_ruled(seed: int, overrides) -> list:
    rng = _rng(seed, "ruled")
    # ten parameter draws: mixed random, real-null, imaginary-null
    draws = []
    for i in range(10):
        b1 = _rand_complex(rng, scale=0.5)
        if i < 6:
            b2 = _rand_complex(rng)
            if abs(b2) < 0.3:
                b2 = b2 + 0.5
        elif i < 8:
            b2 = complex(float(rng.uniform(0.5, 2.5)))
        else:
            b2 = complex(0.0, float(rng.uniform(0.5, 2.5)))
        b3 = _rand_complex(rng)
        if abs(b3) < 0.3:
            b3 = b3 + 0.5
        draws.append(GeoParams(b1, b2, b3, _rand_complex(rng, scale=0.5)))
    worst_h = 0.0
    for params in draws:
        patch = ruled.sample_patch(params)
        worst_h = max(worst_h, float(np.abs(patch.forms["H"])[patch.regular].max()))
    out = [_check("ruled", "ruled surfaces are minimal", FD, worst_h, 1e-6, overrides)]

    control = ruled.perturbed_ruling_curve(GeoParams(0.3 + 0.2j, 1.0, 1.0, 0.0))
    ctrl = max(
        abs(ruled.curve_fundamental_forms(control, r, t)["H"])
        for r in (-1.5, 0.0, 1.0)
        for t in (0.4, 1.2)
    )
    out.append(
        _check("ruled", "non-geodesic ruling control", FD, 1e-2 / max(ctrl, 1e-30), 1.0, overrides)
    )

    # totally geodesic exactly when the generating geodesic is null
    worst_null = 0.0
    smallest_nonnull = np.inf
    for b2 in (1.0, 1j, 2.0, 3j, 1 + 1j, np.exp(1j * np.pi / 4)):
        params = GeoParams(0.3 + 0.2j, complex(b2), 1.0, 0.0)
        patch = ruled.sample_patch(params, r_range=(-2.5, 2.5))
        reg = patch.regular
        k = max(
            float(np.abs(patch.forms["K_rt"])[reg].max()),
            float(np.abs(patch.forms["K_tt"])[reg].max()),
        )
        if ruled.is_totally_geodesic(params):
            worst_null = max(worst_null, k)
        else:
            smallest_nonnull = min(smallest_nonnull, k)
    out.append(_check("ruled", "null rulings are totally geodesic", FD, worst_null, 1e-8, overrides))
    out.append(
        _check(
            "ruled",
            "non-null rulings have second fundamental form",
            CLOSED,
            1e-8 / smallest_nonnull,
            1.0,
            overrides,
        )
    )

    # closed-form second fundamental form vs the numeric pipeline
    worst_closed = 0.0
    for params in draws[:4]:
        norm = ruled.normalize_geodesic(params)
        curve = ruled.ruling_curve(norm)
        for r in (-1.5, 0.0, 1.2):
            for t in (0.3, 1.0, 1.7):
                f = ruled.curve_fundamental_forms(curve, r, t)
                _, krt, ktt = ruled.second_fundamental_form_closed(norm, r, t)
                worst_closed = max(
                    worst_closed, abs(f["K_rt"] - krt), abs(f["K_tt"] - ktt)
                )
    out.append(
        _check("ruled", "closed second fundamental form vs numeric", FD, worst_closed, 1e-4, overrides)
    )
    return out


# --- driver ----------------------------------------------------------------

_SUITES = {
    "hyp3": suite_hyp3,
    "kahler": suite_kahler,
    "killing": suite_killing,
    "flows": suite_flows,
    "geoflow": suite_geoflow,
    "ruled": suite_ruled,
}


def run_suites(names=None, seed: int = 0, tol_closed=None, tol_fd=None):
    """Run verification suites and return their check results in suite order.

    names: iterable of suite names (default: all).  tol_closed / tol_fd
    override the default tolerance of every check of the matching kind.
    """
    if names is None:
        names = SUITE_NAMES
    names = list(names)
    for n in names:
        if n not in _SUITES:
            raise ValueError(f"unknown suite {n!r}; choose from {', '.join(SUITE_NAMES)}")
    overrides = {CLOSED: tol_closed, FD: tol_fd}
    workers = max(1, int(os.environ.get("GEODEX_THREADS", "4")))
    with ThreadPoolExecutor(max_workers=min(workers, len(names))) as pool:
        futures = [pool.submit(_SUITES[n], seed, overrides) for n in names]
        results = []
        for f in futures:
            results.extend(f.result())
    return results
