"""Command-line front end: structured JSON jobs, verification, mesh export.

Jobs read a JSON payload (``--input FILE`` or ``-`` for stdin) and write a
JSON/CSV/OBJ result (``--output``, default stdout).  Complex numbers
serialize as two-element ``[re, im]`` arrays; floats use full round-trip
precision.  Output is byte-identical for a fixed seed and tolerances.

Exit codes: 0 success, 1 malformed payload, 2 tolerance failure in verify.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

import numpy as np

from . import isometry, lspace, ruled, verify
from .errors import GeodexError
from .geoflow import (
    GeoParams,
    geodesic_G,
    geodesic_G_mu,
    geodesic_velocity,
    killing_of_geodesic,
    tangent_norm_constant,
)
from .hyp3 import BallPoint, GeodesicUhs, UhsPoint, ball_to_uhs, uhs_to_ball
from .lspace import MU, XI_ETA, GeodesicGlobal, LTangent

COMMANDS = (
    "convert",
    "endpoints",
    "metric",
    "curvature",
    "killing",
    "flow",
    "act",
    "geodesic",
    "surface",
    "verify",
)


class PayloadError(Exception):
    """Malformed job payload; the message names the offending field."""


def _c2j(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _j2c(value, path: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(v, (int, float)) for v in value)
    ):
        return complex(value[0], value[1])
    raise PayloadError(f"{path}: expected a number or [re, im] pair")


def _get(payload: dict, key: str, path: str = "payload"):
    if key not in payload:
        raise PayloadError(f"{path}.{key}: missing required field")
    return payload[key]


def _float(value, path: str) -> float:
    if not isinstance(value, (int, float)):
        raise PayloadError(f"{path}: expected a number")
    return float(value)


def _uhs_point(payload: dict, path: str = "payload") -> UhsPoint:
    t = _float(_get(payload, "t", path), f"{path}.t")
    z = _j2c(_get(payload, "z", path), f"{path}.z")
    try:
        return UhsPoint(t, z)
    except ValueError as e:
        raise PayloadError(f"{path}.t: {e}") from None


def _chart_geodesic(payload: dict, path: str = "payload") -> GeodesicUhs:
    xi = _j2c(_get(payload, "xi", path), f"{path}.xi")
    eta = _j2c(_get(payload, "eta", path), f"{path}.eta")
    try:
        return GeodesicUhs(xi, eta)
    except ValueError as e:
        raise PayloadError(f"{path}.xi: {e}") from None


def _global_geodesic(payload: dict, path: str = "payload") -> GeodesicGlobal:
    if "mu1" in payload and "mu2" in payload:
        mu1 = _j2c(payload["mu1"], f"{path}.mu1")
        mu2 = _j2c(payload["mu2"], f"{path}.mu2")
        return GeodesicGlobal.from_mu(mu1, mu2)
    return lspace.mu_from_xieta(_chart_geodesic(payload, path))


def _geo_params(payload: dict, path: str = "payload") -> GeoParams:
    b = _get(payload, "b", path)
    if not isinstance(b, (list, tuple)) or len(b) != 4:
        raise PayloadError(f"{path}.b: expected four complex constants")
    vals = [_j2c(v, f"{path}.b[{i}]") for i, v in enumerate(b)]
    try:
        return GeoParams(*vals)
    except ValueError as e:
        raise PayloadError(f"{path}.b: {e}") from None


def _hyp_killing(payload: dict, path: str = "payload") -> isometry.HypKilling:
    return isometry.HypKilling(
        _j2c(_get(payload, "alpha", path), f"{path}.alpha"),
        _j2c(_get(payload, "beta", path), f"{path}.beta"),
        _j2c(_get(payload, "gamma", path), f"{path}.gamma"),
    )


def _ltangent(payload: dict, chart: str, path: str) -> LTangent:
    return LTangent(
        chart,
        _j2c(_get(payload, "a", path), f"{path}.a"),
        _j2c(_get(payload, "b", path), f"{path}.b"),
    )


# --- command handlers ------------------------------------------------------


def cmd_convert(payload: dict, args) -> dict:
    if "ball" in payload:
        y = payload["ball"]
        if not isinstance(y, (list, tuple)) or len(y) != 3:
            raise PayloadError("payload.ball: expected a 3-vector")
        try:
            p = ball_to_uhs(BallPoint(tuple(float(c) for c in y)))
        except (ValueError, GeodexError) as e:
            raise PayloadError(f"payload.ball: {e}") from None
        return {"t": p.t, "z": _c2j(p.z)}
    q = uhs_to_ball(_uhs_point(payload))
    return {"ball": list(q.y)}


def cmd_endpoints(payload: dict, args) -> dict:
    g = _global_geodesic(payload)
    past, future = lspace.endpoints_ball(g)
    out = {
        "past": [float(c) for c in past],
        "future": [float(c) for c in future],
    }
    for key, sphere in (("mu1", g.mu1), ("mu2", g.mu2)):
        out[key] = None if sphere.is_infinity else _c2j(sphere.mu)
    return out


def cmd_metric(payload: dict, args) -> dict:
    chart = payload.get("chart", MU)
    if chart not in (MU, XI_ETA):
        raise PayloadError(f"payload.chart: expected {MU!r} or {XI_ETA!r}")
    if chart == MU:
        base = _global_geodesic(_get(payload, "base"), "payload.base")
        gram = lspace.gram_matrix(base)
    else:
        base = _chart_geodesic(_get(payload, "base"), "payload.base")
        gram = lspace.gram_matrix_xieta(base)
    out = {"gram": [[float(v) for v in row] for row in gram]}
    eig = np.linalg.eigvalsh(gram)
    out["signature"] = [int((eig > 0).sum()), int((eig < 0).sum())]
    if "X" in payload and "Y" in payload:
        X = _ltangent(_get(payload, "X"), chart, "payload.X")
        Y = _ltangent(_get(payload, "Y"), chart, "payload.Y")
        out["G"] = lspace.metric_G(base, X, Y)
        out["omega"] = lspace.omega(base, X, Y)
        JX = lspace.apply_J(base, X)
        out["JX"] = {"a": _c2j(JX.a), "b": _c2j(JX.b)}
    return out


def cmd_curvature(payload: dict, args) -> dict:
    base = _global_geodesic(payload)
    report = lspace.curvature_at(base)
    numeric = lspace.riemann_component_numeric(base)
    return {
        "riemann_closed": _c2j(report.riemann_nonzero),
        "riemann_numeric": _c2j(numeric),
        "scalar": report.scalar,
        "weyl_norm": report.weyl_norm,
        "signature": list(report.signature),
    }


def cmd_killing(payload: dict, args) -> dict:
    space = payload.get("space", "hyp")
    if space == "hyp":
        k = _hyp_killing(payload)
        p = _uhs_point(_get(payload, "point"), "payload.point")
        v = isometry.hyp_killing_vector(k, p)
        return {"v": _c2j(v.v), "u": float(v.u)}
    if space == "l":
        c = _get(payload, "c")
        if not isinstance(c, (list, tuple)) or len(c) != 3:
            raise PayloadError("payload.c: expected three complex constants")
        k = isometry.LKilling(*[_j2c(v, f"payload.c[{i}]") for i, v in enumerate(c)])
        base = _global_geodesic(payload)
        t = isometry.l_killing_vector(k, base)
        return {"a": _c2j(t.a), "b": _c2j(t.b)}
    raise PayloadError("payload.space: expected 'hyp' or 'l'")


def cmd_flow(payload: dict, args) -> dict:
    k = _hyp_killing(payload)
    p = _uhs_point(_get(payload, "point"), "payload.point")
    s = _float(_get(payload, "s"), "payload.s")
    q = isometry.hyp_flow(k, p, s)
    return {"t": q.t, "z": _c2j(q.z)}


def cmd_act(payload: dict, args) -> dict:
    k = _hyp_killing(payload)
    g = _chart_geodesic(_get(payload, "geodesic"), "payload.geodesic")
    s = _float(_get(payload, "s"), "payload.s")
    img = isometry.l_action(k, g, s)
    mu1, mu2 = lspace._mu_values(lspace.mu_from_xieta(img))
    ind = isometry.induced_killing(k)
    return {
        "xi": _c2j(img.xi),
        "eta": _c2j(img.eta),
        "mu1": _c2j(mu1),
        "mu2": _c2j(mu2),
        "induced_killing": [_c2j(ind.c1), _c2j(ind.c2), _c2j(ind.c3)],
    }


def cmd_geodesic(payload: dict, args) -> dict:
    params = _geo_params(payload)
    t_max = _float(payload.get("t_max", 1.0), "payload.t_max")
    num = payload.get("num", 9)
    if not isinstance(num, int) or num < 1:
        raise PayloadError("payload.num: expected a positive integer")
    samples = []
    for tv in np.linspace(0.0, t_max, num):
        entry = {"t": float(tv)}
        try:
            g = geodesic_G(params, float(tv))
            v = geodesic_velocity(params, float(tv))
            entry.update(
                {"xi": _c2j(g.xi), "eta": _c2j(g.eta), "dxi": _c2j(v.a), "deta": _c2j(v.b)}
            )
            gm = geodesic_G_mu(params, float(tv))
            mu1, mu2 = lspace._mu_values(gm)
            entry.update({"mu1": _c2j(mu1), "mu2": _c2j(mu2)})
        except GeodexError as e:
            entry["error"] = str(e)
        samples.append(entry)
    kf = killing_of_geodesic(params)
    return {
        "samples": samples,
        "norm_constant": tangent_norm_constant(params),
        "killing": [_c2j(kf.c1), _c2j(kf.c2), _c2j(kf.c3)],
    }


def cmd_surface(payload: dict, args):
    params = _geo_params(payload)
    grid = payload.get("grid", [64, 64])
    if (
        not isinstance(grid, (list, tuple))
        or len(grid) != 2
        or not all(isinstance(n, int) and n >= 2 for n in grid)
    ):
        raise PayloadError("payload.grid: expected [num_r, num_t] with entries >= 2")
    r_range = tuple(payload.get("r_range", (-5.0, 5.0)))
    t_range = tuple(payload.get("t_range", (0.1, 2.0)))
    patch = ruled.sample_patch(
        params, r_range=r_range, t_range=t_range, num_r=grid[0], num_t=grid[1]
    )
    if args.format == "obj":
        out = io.StringIO()
        ruled.export_obj(patch, out)
        return out.getvalue()
    if args.format == "csv":
        out = io.StringIO()
        ruled.export_csv(patch, out)
        return out.getvalue()
    H = np.abs(patch.forms["H"])
    return {
        "b_normalized": [
            _c2j(patch.params.b1),
            _c2j(patch.params.b2),
            _c2j(patch.params.b3),
            _c2j(patch.params.b4),
        ],
        "max_abs_H": float(H[patch.regular].max()),
        "totally_geodesic": ruled.is_totally_geodesic(patch.params),
        "regular_fraction": float(patch.regular.mean()),
        "grid": [int(grid[0]), int(grid[1])],
    }


def cmd_verify(payload: dict, args):
    names = None
    if args.suite is not None:
        names = [args.suite]
    elif "suite" in payload:
        names = [payload["suite"]]
    try:
        results = verify.run_suites(
            names, seed=args.seed, tol_closed=args.tol_closed, tol_fd=args.tol_fd
        )
    except ValueError as e:
        raise PayloadError(str(e)) from None
    report = {
        "seed": args.seed,
        "checks": [
            {
                "suite": r.suite,
                "name": r.name,
                "value": r.value,
                "tol": r.tol,
                "passed": r.passed,
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    return report


_HANDLERS = {
    "convert": cmd_convert,
    "endpoints": cmd_endpoints,
    "metric": cmd_metric,
    "curvature": cmd_curvature,
    "killing": cmd_killing,
    "flow": cmd_flow,
    "act": cmd_act,
    "geodesic": cmd_geodesic,
    "surface": cmd_surface,
    "verify": cmd_verify,
}


def _read_payload(args) -> dict:
    if args.input is None:
        return {}
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r") as f:
            text = f.read()
    if not text.strip():
        return {}
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise PayloadError(f"input is not valid JSON: {e}") from None
    if not isinstance(payload, dict):
        raise PayloadError("payload: expected a JSON object")
    return payload


def _write(args, text: str) -> None:
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as f:
            f.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodex",
        description="Hyperbolic 3-space, its oriented-geodesic space, and the "
        "neutral Kahler structure.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", default=None, help="JSON payload file, or - for stdin")
    parser.add_argument("--output", default=None, help="output file, or - for stdout")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    parser.add_argument(
        "--tol-closed",
        type=float,
        default=None,
        metavar="1e-9",
        help="override tolerance of closed-form checks in verify",
    )
    parser.add_argument(
        "--tol-fd",
        type=float,
        default=None,
        metavar="1e-6",
        help="override tolerance of finite-difference checks in verify",
    )
    parser.add_argument("--format", choices=("json", "csv", "obj"), default="json")
    parser.add_argument("--suite", default=None, help="verify: run a single suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _read_payload(args)
        result = _HANDLERS[args.command](payload, args)
    except PayloadError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except GeodexError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    if isinstance(result, str):
        _write(args, result)
        return 0
    text = json.dumps(result, sort_keys=True, indent=2) + "\n"
    _write(args, text)
    if args.command == "verify" and not result["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
