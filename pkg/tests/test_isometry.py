"""Tests for Killing fields, closed-form flows and the induced action."""

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from geodex import (
    GeodesicUhs,
    HypKilling,
    LKilling,
    UhsPoint,
    hyp_flow,
    hyp_killing_vector,
    induced_killing,
    l_action,
    l_killing_vector,
    mu_from_xieta,
)
from geodex import fd, isometry, lspace
from geodex.errors import TranslationCase


def flow_ode_oracle(k, p, s):
    """Integrate the flow equations directly; the closed form must match."""

    def rhs(_, y):
        t, z = y[0], complex(y[1], y[2])
        dz = k.beta + k.gamma * z - k.alpha * t**2 + np.conj(k.alpha) * z**2
        dt = t * (k.gamma + 2.0 * k.alpha * np.conj(z)).real
        return [dt, dz.real, dz.imag]

    sol = solve_ivp(rhs, (0.0, s), [p.t, p.z.real, p.z.imag], rtol=1e-12, atol=1e-14)
    return UhsPoint(sol.y[0, -1], complex(sol.y[1, -1], sol.y[2, -1]))


def test_closed_flow_matches_ode_oracle():
    k = HypKilling(0.12 + 0.3j, -0.4 + 0.1j, 0.25 - 0.2j)
    p = UhsPoint(0.8, 0.3 - 0.5j)
    q = hyp_flow(k, p, 0.7)
    # values pinned from the independent integration above
    assert q.t == pytest.approx(0.76062640899279, abs=1e-9)
    assert q.z == pytest.approx(-0.14054445951920 - 0.61476290511540j, abs=1e-9)
    o = flow_ode_oracle(k, p, 0.7)
    assert abs(q.t - o.t) < 1e-9
    assert abs(q.z - o.z) < 1e-9


def test_flow_group_law():
    rng = np.random.default_rng(3)
    for _ in range(20):
        k = HypKilling(*(complex(*rng.standard_normal(2)) * 0.8 for _ in range(3)))
        p = UhsPoint(rng.uniform(0.3, 2.0), complex(*rng.standard_normal(2)))
        s1, s2 = rng.uniform(-0.6, 0.6, 2)
        a = hyp_flow(k, hyp_flow(k, p, s1), s2)
        b = hyp_flow(k, p, s1 + s2)
        assert abs(a.t - b.t) < 1e-9
        assert abs(a.z - b.z) < 1e-9


def test_flow_generator_is_the_killing_field():
    rng = np.random.default_rng(7)
    for _ in range(20):
        k = HypKilling(*(complex(*rng.standard_normal(2)) * 0.8 for _ in range(3)))
        p = UhsPoint(rng.uniform(0.3, 2.0), complex(*rng.standard_normal(2)))

        def flow_of(s):
            q = hyp_flow(k, p, s)
            return np.array([q.t, q.z.real, q.z.imag])

        gen = fd.d1_h4(flow_of, 0.0, h=1e-3)
        v = hyp_killing_vector(k, p)
        assert np.max(np.abs(gen - [v.u, v.v.real, v.v.imag])) < 1e-6


def test_flow_preserves_the_hyperbolic_metric():
    k = HypKilling(0.2 - 0.1j, 0.5, -0.3 + 0.4j)
    p = UhsPoint(1.1, -0.2 + 0.6j)
    s = 0.45

    def flow_map(x):
        q = hyp_flow(k, UhsPoint(x[0], complex(x[1], x[2])), s)
        return np.array([q.t, q.z.real, q.z.imag])

    J = fd.jacobian(flow_map, p.x)
    q = hyp_flow(k, p, s)
    rng = np.random.default_rng(0)
    for _ in range(5):
        w = rng.standard_normal(3)
        before = float(w @ w) / p.t**2
        u = J @ w
        after = float(u @ u) / q.t**2
        assert after == pytest.approx(before, rel=1e-7)


def test_translation_case():
    k = HypKilling(0.0, 0.7 - 0.2j, 0.0)
    with pytest.raises(TranslationCase):
        isometry.flow_aux(k)
    q = hyp_flow(k, UhsPoint(1.0, 0.0), 2.0)
    assert q.t == 1.0
    assert q.z == pytest.approx(1.4 - 0.4j)


def test_small_exponent_series_branch():
    # gamma1 ~ 0 exercises the series form of (e^{gamma1 s} - 1)/gamma1
    k = HypKilling(0.0, 1.0, 1e-9)
    q = hyp_flow(k, UhsPoint(1.0, 0.0), 1.0)
    assert q.z == pytest.approx(1.0, abs=1e-7)


def test_action_consistent_with_endpoint_transport():
    """Pushing a geodesic through the flow moves its boundary endpoints by
    the boundary extension of the point flow."""
    k = HypKilling(0.15 + 0.1j, -0.2, 0.3 - 0.25j)
    g = GeodesicUhs(0.9 + 0.3j, -0.4 + 0.2j)
    s = 0.35
    from geodex import geodesic_point

    img = l_action(k, g, s)
    for r in (-6.0, 6.0):
        moved = hyp_flow(k, geodesic_point(g, r), s)
        # the moved point must lie on the image geodesic: recover the
        # parameter from the height and compare horizontal positions
        t, z = moved.t, moved.z
        c = 1.0 / (abs(img.xi) * t)
        assert c >= 1.0 - 1e-9
        rr = np.arccosh(max(c, 1.0))
        cands = [
            img.eta + np.tanh(sgn * rr) / np.conj(img.xi) for sgn in (+1, -1)
        ]
        assert min(abs(z - cand) for cand in cands) < 1e-7


def test_action_preserves_G():
    k = HypKilling(0.1 - 0.2j, 0.3 + 0.1j, -0.15 + 0.2j)
    g = GeodesicUhs(1.1 - 0.2j, 0.5 + 0.4j)
    s = 0.3

    def act(w):
        out = l_action(k, GeodesicUhs(complex(w[0], w[1]), complex(w[2], w[3])), s)
        return np.array([out.xi.real, out.xi.imag, out.eta.real, out.eta.imag])

    w0 = np.array([g.xi.real, g.xi.imag, g.eta.real, g.eta.imag])
    J = np.stack([fd.partial_d1_h4(act, w0, i, h=1e-4) for i in range(4)], axis=1)
    img = l_action(k, g, s)
    rng = np.random.default_rng(1)
    for _ in range(5):
        w, u = rng.standard_normal(4), rng.standard_normal(4)
        X = lspace.LTangent(lspace.XI_ETA, complex(w[0], w[1]), complex(w[2], w[3]))
        Y = lspace.LTangent(lspace.XI_ETA, complex(u[0], u[1]), complex(u[2], u[3]))
        gw, gu = J @ w, J @ u
        Xi = lspace.LTangent(lspace.XI_ETA, complex(gw[0], gw[1]), complex(gw[2], gw[3]))
        Yi = lspace.LTangent(lspace.XI_ETA, complex(gu[0], gu[1]), complex(gu[2], gu[3]))
        assert lspace.metric_G(img, Xi, Yi) == pytest.approx(
            lspace.metric_G(g, X, Y), abs=1e-5, rel=1e-5
        )


def test_induced_killing_correspondence():
    """d/ds of the action in boundary coordinates is the (c1, c2, c3) field
    with c = (-beta, gamma, -conj(alpha))."""
    k = HypKilling(0.2 + 0.1j, -0.3 + 0.4j, 0.1 - 0.2j)
    g = GeodesicUhs(0.8, 0.2 - 0.3j)
    ind = induced_killing(k)
    assert (ind.c1, ind.c2, ind.c3) == (-k.beta, k.gamma, -np.conj(k.alpha))

    def mu_of(s):
        out = mu_from_xieta(l_action(k, g, s))
        m1, m2 = lspace._mu_values(out)
        return np.array([m1.real, m1.imag, m2.real, m2.imag])

    md = fd.d1_h4(mu_of, 0.0, h=1e-3)
    t = l_killing_vector(ind, mu_from_xieta(g))
    assert np.max(np.abs(md - [t.a.real, t.a.imag, t.b.real, t.b.imag])) < 1e-6


def test_l_killing_vector_components():
    k = LKilling(1.0 + 2.0j, -0.5j, 0.25)
    base = lspace.GeodesicGlobal.from_mu(0.4 - 0.1j, -0.2 + 0.3j)
    t = l_killing_vector(k, base)
    mu1, mu2 = 0.4 - 0.1j, -0.2 + 0.3j
    assert t.a == pytest.approx(k.c1 + k.c2 * mu1 + k.c3 * mu1**2)
    assert t.b == pytest.approx(
        np.conj(k.c3) - np.conj(k.c2) * mu2 + np.conj(k.c1) * mu2**2
    )
