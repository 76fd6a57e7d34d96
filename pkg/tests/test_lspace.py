"""Tests for the geodesic-space charts, the Kahler triple and its curvature."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodex import (
    MU,
    XI_ETA,
    GeodesicGlobal,
    GeodesicUhs,
    LTangent,
    RSpherePoint,
    apply_J,
    curvature_at,
    endpoints_ball,
    geodesic_point,
    gram_matrix,
    metric_G,
    mu_from_xieta,
    omega,
    tangent_to_mu,
    tangent_to_xieta,
    uhs_to_ball,
    UhsPoint,
    xieta_from_mu,
)
from geodex import lspace
from geodex.errors import ChartMismatch, OutsideChartU, ReflectedDiagonal

cx = st.complex_numbers(
    min_magnitude=0.0, max_magnitude=2.0, allow_nan=False, allow_infinity=False
)


def rand_geodesic(rng):
    while True:
        xi = complex(*rng.standard_normal(2))
        if abs(xi) > 0.25:
            return GeodesicUhs(xi, complex(*rng.standard_normal(2)))


def test_sphere_point_round_trip():
    p = RSpherePoint.from_mu(0.4 - 1.3j)
    assert abs(p.mu - (0.4 - 1.3j)) < 1e-14
    assert RSpherePoint.infinity().is_infinity


def test_reflected_diagonal_is_excluded():
    # past endpoint antipodal-conjugate to the future endpoint
    with pytest.raises(ReflectedDiagonal):
        GeodesicGlobal(RSpherePoint((0.0, 0.0, -1.0)), RSpherePoint((0.0, 0.0, 1.0)))


@given(cx, cx)
@settings(max_examples=200, deadline=None)
def test_chart_round_trip(xi, eta):
    if abs(xi) < 0.2:
        return
    g = GeodesicUhs(xi, eta)
    try:
        back = xieta_from_mu(mu_from_xieta(g))
    except OutsideChartU:
        return
    scale = 1.0 + abs(xi) + abs(eta)
    assert abs(back.xi - xi) < 1e-9 * scale
    assert abs(back.eta - eta) < 1e-9 * scale


def test_vertical_geodesics_live_outside_chart_u():
    # geodesics through the half-space point at infinity have mu1 = infinity
    # (future endpoint there) or mu2 = 0 (past endpoint there)
    with pytest.raises(OutsideChartU):
        xieta_from_mu(GeodesicGlobal.from_mu(None, 0.5))
    with pytest.raises(OutsideChartU):
        xieta_from_mu(GeodesicGlobal.from_mu(0.3 + 0.4j, 0.0))


def test_reflected_diagonal_in_mu_coordinates():
    # mu2 = -1/conj(mu1) makes the two boundary endpoints coincide
    mu1 = 0.3 + 0.4j
    with pytest.raises(ReflectedDiagonal):
        GeodesicGlobal.from_mu(mu1, -1.0 / np.conj(mu1))


def test_endpoints_match_curve_limits():
    """The boundary-sphere endpoints agree with the ball-model limits of the
    unit-speed curve itself (values pinned from that independent check)."""
    g = GeodesicUhs(1.2 - 0.4j, 0.3 + 0.7j)
    gg = mu_from_xieta(g)
    past, future = endpoints_ball(gg)
    assert np.allclose(past, [-0.427553444181, 0.902612826603, 0.049881235154], atol=1e-11)
    assert np.allclose(future, [0.911062906725, 0.390455531453, 0.132321041215], atol=1e-11)
    # and against a fresh limit computation
    for r, target in ((-25.0, past), (25.0, future)):
        p = geodesic_point(g, r)
        q = uhs_to_ball(UhsPoint(p.t + 1e-12, p.z))
        assert np.allclose(q.array, target, atol=1e-9)


def test_tangent_chart_change_round_trip():
    rng = np.random.default_rng(5)
    for _ in range(30):
        g = rand_geodesic(rng)
        X = LTangent(XI_ETA, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        back = tangent_to_xieta(g, tangent_to_mu(g, X))
        assert abs(back.a - X.a) < 1e-9 * (1 + abs(X.a))
        assert abs(back.b - X.b) < 1e-9 * (1 + abs(X.b))


def test_tangent_chart_change_rejects_wrong_chart():
    g = GeodesicUhs(1.0, 0.0)
    with pytest.raises(ChartMismatch):
        tangent_to_mu(g, LTangent(MU, 1.0, 0.0))


def test_chart_change_respects_G_and_omega():
    # the metric and symplectic form are chart-invariant
    rng = np.random.default_rng(17)
    for _ in range(20):
        g = rand_geodesic(rng)
        gm = mu_from_xieta(g)
        X = LTangent(XI_ETA, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        Y = LTangent(XI_ETA, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        Xm, Ym = tangent_to_mu(g, X), tangent_to_mu(g, Y)
        assert metric_G(g, X, Y) == pytest.approx(metric_G(gm, Xm, Ym), abs=1e-9, rel=1e-9)
        assert omega(g, X, Y) == pytest.approx(omega(gm, Xm, Ym), abs=1e-9, rel=1e-9)


def test_J_squares_to_minus_identity():
    rng = np.random.default_rng(23)
    for _ in range(50):
        base = GeodesicGlobal.from_mu(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        X = LTangent(MU, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        JJX = apply_J(base, apply_J(base, X))
        assert abs(JJX.a + X.a) < 1e-14
        assert abs(JJX.b + X.b) < 1e-14


def test_kahler_compatibilities():
    rng = np.random.default_rng(29)
    for _ in range(50):
        base = GeodesicGlobal.from_mu(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        X = LTangent(MU, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        Y = LTangent(MU, complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        assert omega(base, apply_J(base, X), apply_J(base, Y)) == pytest.approx(
            omega(base, X, Y), abs=1e-12
        )
        assert metric_G(base, X, Y) == pytest.approx(
            omega(base, apply_J(base, X), Y), abs=1e-12
        )


def test_neutral_signature():
    rng = np.random.default_rng(31)
    for _ in range(40):
        base = GeodesicGlobal.from_mu(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        ev = np.linalg.eigvalsh(gram_matrix(base))
        assert int((ev > 0).sum()) == 2
        assert int((ev < 0).sum()) == 2


def test_omega_coefficients_are_closed():
    """In the mu chart, the antisymmetrized coordinate derivatives of the
    2-form coefficients vanish (the form is closed)."""
    rng = np.random.default_rng(37)
    from geodex import fd

    for _ in range(5):
        x = rng.standard_normal(4) * 0.7
        if abs(1 + complex(x[0], -x[1]) * complex(x[2], x[3])) < 0.4:
            continue
        dO = np.stack(
            [fd.partial_d1_h4(lspace.omega_matrix_mu, x, i, h=1e-3) for i in range(4)]
        )  # dO[l, k, n] = d_l Omega_{kn}
        ext = (
            dO
            + np.transpose(dO, (1, 2, 0))
            + np.transpose(dO, (2, 0, 1))
        )
        assert np.max(np.abs(ext)) < 1e-6


def test_riemann_closed_form_value():
    base = GeodesicGlobal.from_mu(0.3 + 0.1j, 0.2 - 0.4j)
    assert lspace.riemann_closed_form(base) == pytest.approx(
        1.8170167319330726 + 0.508365966536134j, abs=1e-12
    )


def test_curvature_closed_matches_numeric():
    rng = np.random.default_rng(41)
    done = 0
    while done < 6:
        mu1 = complex(*rng.standard_normal(2)) * 0.6
        mu2 = complex(*rng.standard_normal(2)) * 0.6
        if abs(1 + np.conj(mu1) * mu2) < 0.4:
            continue
        base = GeodesicGlobal.from_mu(mu1, mu2)
        closed = lspace.riemann_closed_form(base)
        numeric = lspace.riemann_component_numeric(base)
        assert abs(closed - numeric) < 1e-4
        done += 1


def test_scalar_flat_and_conformally_flat():
    rng = np.random.default_rng(43)
    done = 0
    while done < 6:
        mu1 = complex(*rng.standard_normal(2)) * 0.6
        mu2 = complex(*rng.standard_normal(2)) * 0.6
        if abs(1 + np.conj(mu1) * mu2) < 0.4 or abs(mu1) > 1.2 or abs(mu2) > 1.2:
            continue
        report = curvature_at(GeodesicGlobal.from_mu(mu1, mu2))
        assert abs(report.scalar) < 1e-8
        assert report.weyl_norm < 1e-6
        assert report.signature == (2, 2)
        done += 1
