"""Command-line front end; a thin HTTP client of the rsvortex service.

By default requests run against an in-process instance of the service
(no network, one command per process); --server points the same client
at a remote deployment.  Subcommands:

    eval     print F, E, B and psi at a point
    extract  write the curve set of a diagnostic to CSV or PLY
    split    write positive/negative helicity field files
    boost    write the field as seen from a moving frame
    verify   run the full check suite and print the report
    serve    run the HTTP service

Exit status: 0 all good, 1 check failure or parse error, 2 degenerate
input.
"""

import argparse
import json
import sys

import httpx

from .verify import DEFAULT_TOLERANCES

_EXIT_OK = 0
_EXIT_FAIL = 1
_EXIT_DEGENERATE = 2


def _client(server):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # In-process transport: same request/response path, no sockets.
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _load_spec(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SystemExit(f"error: no such file: {path}")
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: {path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _post(client, path, payload):
    response = client.post(path, json=payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        if isinstance(detail, list):  # pydantic validation errors
            detail = "; ".join(
                f"{'.'.join(str(p) for p in err.get('loc', []))}: {err.get('msg')}" for err in detail
            )
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(_EXIT_FAIL)
    return response.json()


def _fmt_complex(pair):
    return f"{pair[0]:.15g} {pair[1]:+.15g}i"


def cmd_eval(args):
    spec = _load_spec(args.spec)
    with _client(args.server) as client:
        data = _post(client, "/eval", {"field": spec, "r": args.r, "t": args.time})
    print(f"r = ({args.r[0]:g}, {args.r[1]:g}, {args.r[2]:g})   t = {args.time:g}")
    for name in "FEB":
        comp = data[name]
        if name == "F":
            txt = ", ".join(_fmt_complex(c) for c in comp)
        else:
            txt = ", ".join(f"{c:.15g}" for c in comp)
        print(f"{name}   = ({txt})")
    print(f"psi = {_fmt_complex(data['psi'])}")
    return _EXIT_OK


def _grid_payload(args):
    return {"lo": args.grid_lo, "hi": args.grid_hi, "n": args.grid_n}


def cmd_extract(args):
    from .curveio import write_curves_csv, write_curves_ply
    from .extraction import Curve, CurveSet

    spec = _load_spec(args.spec)
    payload = {
        "field": spec,
        "diagnostic": args.diagnostic,
        "grid": _grid_payload(args),
        "t": args.time,
    }
    overrides = {
        name: getattr(args, f"tol_{name}")
        for name in ("value_rel", "fraction", "link_rel", "validation_rel")
        if getattr(args, f"tol_{name}") is not None
    }
    if overrides:
        payload["tolerances"] = overrides
    with _client(args.server) as client:
        data = _post(client, "/extract", payload)

    if data["status"] == "degenerate":
        print(f"DEGENERATE: {data['message']}", file=sys.stderr)
        if args.report:
            with open(args.report, "w") as fh:
                json.dump(data, fh, indent=2)
        return _EXIT_DEGENERATE

    import numpy as np

    curves = CurveSet(
        [Curve(c["id"], np.asarray(c["points"]), c["closed"]) for c in data["curves"]]
    )
    writer = write_curves_ply if args.format == "ply" else write_curves_csv
    writer(args.out, curves)
    n_pts = sum(len(c.points) for c in curves.curves)
    print(f"{args.diagnostic}: {len(curves)} curve(s), {n_pts} points -> {args.out}")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(data | {"curves": f"written to {args.out}"}, fh, indent=2)
    return _EXIT_OK


def cmd_split(args):
    spec = _load_spec(args.spec)
    with _client(args.server) as client:
        data = _post(client, "/split", {"field": spec})
    written = []
    for side in ("positive", "negative"):
        part = data.get(side)
        count = data[f"{side}_mode_count"]
        if part is None:
            print(f"{side}: no modes, file not written")
            continue
        path = f"{args.out_prefix}_{side}.json"
        with open(path, "w") as fh:
            json.dump(part, fh, indent=2)
            fh.write("\n")
        written.append(path)
        print(f"{side}: {count} mode(s) -> {path}")
    return _EXIT_OK


def cmd_boost(args):
    spec = _load_spec(args.spec)
    with _client(args.server) as client:
        data = _post(client, "/boost", {"field": spec, "beta": args.beta})
    with open(args.out, "w") as fh:
        json.dump(data["field"], fh, indent=2)
        fh.write("\n")
    sc = data["spot_check"]
    print(f"boosted field -> {args.out}")
    print(
        f"psi spot check at r=({sc['r'][0]:.6g}, {sc['r'][1]:.6g}, {sc['r'][2]:.6g}), t={sc['t']:.6g}:"
    )
    print(f"  lab frame:     {_fmt_complex(sc['psi_original'])}")
    print(f"  boosted frame: {_fmt_complex(sc['psi_boosted'])}")
    print(f"  relative error: {sc['relative_error']:.3e}")
    return _EXIT_OK


def cmd_verify(args):
    spec = _load_spec(args.spec)
    payload = {"field": spec}
    if args.grid_lo or args.grid_hi or args.grid_n:
        if not (args.grid_lo and args.grid_hi and args.grid_n):
            raise SystemExit("error: give all of --grid-lo/--grid-hi/--grid-n or none")
        payload["grid"] = _grid_payload(args)
    overrides = {
        name: getattr(args, f"tol_{name}")
        for name in DEFAULT_TOLERANCES
        if getattr(args, f"tol_{name}") is not None
    }
    if overrides:
        payload["tolerances"] = overrides
    with _client(args.server) as client:
        data = _post(client, "/verify", payload)

    for check in data["checks"]:
        worst = max(check["residuals"].values(), default=0.0)
        print(f"{check['status'].upper():10s} {check['name']:24s} worst residual {worst:.3e}")
    print(f"overall: {data['overall_status'].upper()}  ({data['wall_time_s']:.1f}s)")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=2)
        print(f"report -> {args.out}")
    return data["exit_code"]


def cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return _EXIT_OK


def _add_grid_flags(parser, required):
    parser.add_argument("--grid-lo", nargs=3, type=float, metavar=("X", "Y", "Z"), required=required)
    parser.add_argument("--grid-hi", nargs=3, type=float, metavar=("X", "Y", "Z"), required=required)
    parser.add_argument("--grid-n", nargs=3, type=int, metavar=("NX", "NY", "NZ"), required=required)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rsvortex",
        description="Singular curves of free electromagnetic fields.",
    )
    parser.add_argument("--server", default=None, help="URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate F, E, B and psi at a point")
    p.add_argument("spec", help="field description file (JSON)")
    p.add_argument("--r", nargs=3, type=float, default=[0.0, 0.0, 0.0], metavar=("X", "Y", "Z"))
    p.add_argument("--time", type=float, default=0.0)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("extract", help="extract singular curves on a grid")
    p.add_argument("spec")
    p.add_argument(
        "--diagnostic",
        choices=["vortex", "c-electric", "c-magnetic", "l-line", "time-avg"],
        default="vortex",
    )
    _add_grid_flags(p, required=True)
    p.add_argument("--time", type=float, default=0.0)
    p.add_argument("--out", required=True, help="output curve file")
    p.add_argument("--format", choices=["csv", "ply"], default="csv")
    p.add_argument("--report", default=None, help="also write a JSON report")
    p.add_argument("--tol-value-rel", dest="tol_value_rel", type=float, default=None,
                   help="degeneracy value threshold (default 1e-10 of scale)")
    p.add_argument("--tol-fraction", dest="tol_fraction", type=float, default=None,
                   help="degeneracy fraction threshold (default 0.5)")
    p.add_argument("--tol-link-rel", dest="tol_link_rel", type=float, default=None,
                   help="endpoint linking tolerance (default 1e-9 of spacing)")
    p.add_argument("--tol-validation-rel", dest="tol_validation_rel", type=float, default=None,
                   help="l-line validation bound (default 1e-6 of max |PxQ|)")
    p.set_defaults(fn=cmd_extract)

    p = sub.add_parser("split", help="split a field by helicity into two files")
    p.add_argument("spec")
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(fn=cmd_split)

    p = sub.add_parser("boost", help="view the field from a moving frame")
    p.add_argument("spec")
    p.add_argument("--beta", nargs=3, type=float, required=True, metavar=("BX", "BY", "BZ"))
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_boost)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("spec")
    _add_grid_flags(p, required=False)
    p.add_argument("--out", default=None, help="write the JSON report here")
    for name, default in DEFAULT_TOLERANCES.items():
        p.add_argument(
            f"--tol-{name.replace('_', '-')}",
            dest=f"tol_{name}",
            type=float,
            default=None,
            help=f"override (default {default:g})",
        )
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return _EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
