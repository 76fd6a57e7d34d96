"""Tests for ruled minimal surfaces and the totally-geodesic classification."""

import io

import numpy as np
import pytest

from geodex import (
    GeoParams,
    export_csv,
    export_obj,
    is_totally_geodesic,
    mean_curvature,
    normalize_geodesic,
    sample_patch,
    second_fundamental_form,
    second_fundamental_form_closed,
    surface_point,
)
from geodex import ruled
from geodex.errors import DegenerateNormalizer


def test_normalizer_drops_b3_b4():
    p = normalize_geodesic(GeoParams(0.2 + 0.1j, 1.5 - 0.4j, 2.0 + 1.0j, 0.7))
    assert (p.b3, p.b4) == (1.0, 0.0)
    assert p.b1 == 0.2 + 0.1j and p.b2 == 1.5 - 0.4j


def test_normalizer_degenerate_shift():
    with pytest.raises(DegenerateNormalizer):
        normalize_geodesic(GeoParams(0.0, 1.0, 1.0, 0.5))


def test_surface_point_lies_on_the_ruling():
    p = GeoParams(0.3, 1.2, 1.0, 0.0)
    q = surface_point(p, 0.5, 0.8)
    xi = np.sinh(1.2 * 0.8 + 0.3) / 1.2
    assert q.t == pytest.approx(1.0 / (abs(xi) * np.cosh(0.5)))


@pytest.mark.parametrize(
    "b2", [1.3, 0.9 + 0.7j, 1j * 1.4, np.exp(1j * np.pi / 4)]
)
def test_surfaces_are_minimal(b2):
    p = GeoParams(0.25 + 0.15j, complex(b2), 1.0, 0.0)
    patch = sample_patch(p, r_range=(-3.0, 3.0), num_r=24, num_t=24)
    H = np.abs(patch.forms["H"])[patch.regular]
    assert H.max() < 1e-6


def test_non_geodesic_ruling_is_not_minimal():
    curve = ruled.perturbed_ruling_curve(GeoParams(0.3 + 0.2j, 1.0, 1.0, 0.0))
    worst = max(
        abs(ruled.curve_fundamental_forms(curve, r, t)["H"])
        for r in (-1.5, 0.0, 1.0)
        for t in (0.4, 1.2)
    )
    assert worst > 1e-2


def test_totally_geodesic_iff_null():
    assert is_totally_geodesic(GeoParams(0.0, 1.0, 1.0, 0.0))
    assert is_totally_geodesic(GeoParams(0.0, 3j, 1.0, 0.0))
    assert not is_totally_geodesic(GeoParams(0.0, 1 + 1j, 1.0, 0.0))

    # numeric second fundamental form agrees with the classification
    for b2, null in ((2.0, True), (1j, True), (np.exp(1j * np.pi / 4), False)):
        p = GeoParams(0.3 + 0.2j, complex(b2), 1.0, 0.0)
        patch = sample_patch(p, r_range=(-2.5, 2.5), num_r=24, num_t=24)
        reg = patch.regular
        k = max(
            float(np.abs(patch.forms["K_rt"])[reg].max()),
            float(np.abs(patch.forms["K_tt"])[reg].max()),
        )
        if null:
            assert k < 1e-8
        else:
            assert k > 1e-2


def test_closed_second_fundamental_form_matches_numeric():
    for b2 in (np.exp(1j * np.pi / 4), 1 + 0.5j, 0.8 + 1.1j):
        p = GeoParams(0.3 + 0.2j, complex(b2), 1.0, 0.0)
        curve = ruled.ruling_curve(p)
        for r in (-2.0, 0.0, 1.3):
            for t in (0.3, 1.0, 1.8):
                f = ruled.curve_fundamental_forms(curve, r, t)
                krr, krt, ktt = second_fundamental_form_closed(p, r, t)
                assert krr == 0.0
                assert abs(f["K_rt"] - krt) < 1e-4
                assert abs(f["K_tt"] - ktt) < 1e-4


def test_second_fundamental_form_entry_point():
    p = GeoParams(0.2, 1 + 1j, 1.0, 0.0)
    krr, krt, ktt = second_fundamental_form(p, 0.4, 0.9)
    assert abs(krr) < 1e-7
    assert abs(krt) > 1e-3  # non-null: genuinely curved inside the surface
    assert mean_curvature(p, 0.4, 0.9) == pytest.approx(0.0, abs=1e-7)


def test_patch_masks_parameterization_singularities():
    # purely imaginary b2: rulings cross the rotation axis, det -> 0 there
    p = GeoParams(0.0 + 0.25j, 2j, 1.0, 0.0)
    patch = sample_patch(p, num_r=32, num_t=32)
    assert not patch.regular.all()
    assert patch.regular.mean() > 0.8


def test_export_obj_and_csv():
    p = GeoParams(0.1, 1.0, 1.0, 0.0)
    patch = sample_patch(p, num_r=4, num_t=5)
    obj = io.StringIO()
    export_obj(patch, obj)
    lines = obj.getvalue().splitlines()
    nv = sum(1 for l in lines if l.startswith("v "))
    nf = sum(1 for l in lines if l.startswith("f "))
    assert nv == 4 * 5
    assert nf == 2 * 3 * 4  # two triangles per quad
    # all vertices inside the unit ball
    for l in lines:
        if l.startswith("v "):
            x = np.array([float(c) for c in l.split()[1:]])
            assert float(x @ x) < 1.0

    csv = io.StringIO()
    export_csv(patch, csv)
    rows = csv.getvalue().splitlines()
    assert rows[0] == "r,t,x,y,z,H,K_rt,K_tt"
    assert len(rows) == 1 + 4 * 5
