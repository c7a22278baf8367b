"""Command-line interface.

Exit codes: 0 success, 1 at least one FAIL verdict in a certificate,
2 usage or input errors, 3 internal-consistency violations (a cross-check
inside the analysis failed, which indicates a numerical fault rather than
a property of the input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import ENTRY_NAMES, entry, iterate_square_identity_check
from .config import RunConfig
from .fields import FieldContext, FieldError, field_configure
from .graphcurve import BasepointError, TrackingError, analyze
from .identities import (
    check_counterexample_triple,
    check_main1_relations,
    shared_iterate_search,
    sigma_f_quadratic,
)
from .measure import julia_raster, lit_fraction, same_measure_test
from .numeric import ConsistencyError
from .parser import ParseError, parse_binding_value, parse_map
from .powermaps import (
    RootOfUnity,
    is_periodic,
    period,
    radical,
    same_periodic_points_powermaps,
)
from .ratmaps import MapError, SizeBudgetError
from .serialize import dumps_report, map_from_json, map_to_json, moebius_to_json


class UsageError(ValueError):
    pass


def _context_from_args(args):
    field = getattr(args, "field", None)
    if not field:
        return FieldContext.rationals()
    try:
        coeffs = [Fraction(c) for c in field.split(",")]
    except ValueError as exc:
        raise UsageError("bad --field %r: %s" % (field, exc))
    return field_configure(coeffs)


def _bindings_from_args(ctx, args):
    out = {}
    for item in getattr(args, "bind", None) or []:
        if "=" not in item:
            raise UsageError("--bind expects name=value, got %r" % item)
        name, _, value = item.partition("=")
        name = name.strip()
        if len(name) != 1 or not name.isalpha():
            raise UsageError("symbols are single letters, got %r" % name)
        out[name] = parse_binding_value(ctx, value)
    return out


def _load_map(spec, args):
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            return map_from_json(json.load(fh))
    if spec.lstrip().startswith("{"):
        return map_from_json(json.loads(spec))
    ctx = _context_from_args(args)
    return parse_map(spec, ctx, _bindings_from_args(ctx, args))


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_bytes(args, blob):
    out = getattr(args, "out", None)
    if out:
        with open(out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.buffer.write(blob)


def _config(args):
    cfg = RunConfig(seed=getattr(args, "seed", 0))
    for name in ("depth",):
        if getattr(args, name, None) is not None:
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "count", None) is not None:
        cfg.cloud_count = args.count
    if getattr(args, "budget", None) is not None:
        cfg.max_composite_degree = args.budget
    return cfg.validate()


# -- subcommands --------------------------------------------------------------------


def _cmd_analyze_graph(args):
    f = _load_map(args.map, args)
    cfg = _config(args)
    report, _curve, _mon, certs = analyze(
        f, seed=cfg.seed, reconstruct=not args.no_reconstruct
    )
    report["config"] = cfg.as_dict()
    _emit(args, dumps_report(report))
    return 0


def _cmd_certify(args):
    cfg = _config(args)
    if args.R or args.S or args.T:
        if not (args.R and args.S and args.T):
            raise UsageError("certify needs all of --R, --S, --T (or --F and --G)")
        R, S, T = (_load_map(s, args) for s in (args.R, args.S, args.T))
        rep = check_counterexample_triple(R, S, T, seed=cfg.seed)
    elif args.F and args.G:
        rep = check_main1_relations(_load_map(args.F, args), _load_map(args.G, args))
    else:
        raise UsageError("certify needs --R/--S/--T or --F/--G")
    payload = rep.as_dict()
    payload["config"] = cfg.as_dict()
    _emit(args, dumps_report(payload))
    return 0 if rep.passed() else 1


def _cmd_measure(args):
    cfg = _config(args)
    f = _load_map(args.f, args)
    g = _load_map(args.g, args)
    rep = same_measure_test(f, g, count=cfg.cloud_count, depth=cfg.depth, seed=cfg.seed)
    payload = rep.as_dict()
    payload["config"] = cfg.as_dict()
    _emit(args, dumps_report(payload))
    return 0


def _cmd_render(args):
    cfg = _config(args)
    f = _load_map(args.map, args)
    try:
        window = tuple(float(v) for v in args.window.split(","))
        if len(window) != 4:
            raise ValueError
    except ValueError:
        raise UsageError("--window expects re_min,re_max,im_min,im_max")
    blob = julia_raster(
        f,
        args.width,
        args.height,
        window,
        count=cfg.cloud_count,
        depth=cfg.depth,
        seed=cfg.seed,
    )
    _emit_bytes(args, blob)
    if args.stats:
        print("lit_fraction=%.4f" % lit_fraction(blob), file=sys.stderr)
    return 0


def _cmd_powermap(args):
    report = {}
    if args.df and args.dg:
        report["df"], report["dg"] = args.df, args.dg
        report["radicals"] = [radical(args.df), radical(args.dg)]
        report["same_periodic_points"] = same_periodic_points_powermaps(args.df, args.dg)
    if args.root:
        try:
            a, _, b = args.root.partition("/")
            z = RootOfUnity.reduced(int(a), int(b))
        except (ValueError, TypeError):
            raise UsageError("--root expects a/b for e^(2*pi*i*a/b)")
        entry_ = {"root": "%d/%d" % (z.a, z.b)}
        for d in filter(None, (args.df, args.dg)):
            entry_["d=%d" % d] = {"periodic": is_periodic(z, d), "period": period(z, d)}
        report["root_of_unity"] = entry_
    if not report:
        raise UsageError("powermap needs --df/--dg and/or --root")
    _emit(args, dumps_report(report))
    return 0


def _cmd_catalog(args):
    if args.action == "list":
        _emit(args, dumps_report({"entries": list(ENTRY_NAMES)}))
        return 0
    if not args.name:
        raise UsageError("catalog run needs an entry name")
    params = {}
    for item in args.param or []:
        key, _, value = item.partition("=")
        params[key.strip()] = value.strip()
    e = entry(args.name, params)
    rep = e.run(seed=args.seed)
    payload = rep.as_dict()
    payload["entry"] = e.name
    payload["params"] = {k: str(v) for k, v in e.params.items()}
    payload["expected"] = [list(x) for x in e.expected]
    if e.name == "chebyshev-flower":
        payload["iterate_square_identity"] = iterate_square_identity_check(
            e.params["a"]
        )
    payload["seed"] = args.seed
    _emit(args, dumps_report(payload))
    return 0 if rep.passed() else 1


def _cmd_compose(args):
    f = _load_map(args.f, args)
    g = _load_map(args.g, args)
    _emit(args, dumps_report(map_to_json(f.compose(g))))
    return 0


def _cmd_iterate(args):
    cfg = _config(args)
    f = _load_map(args.map, args)
    if args.shared_with:
        g = _load_map(args.shared_with, args)
        pair = shared_iterate_search(f, g, budget=cfg.max_composite_degree)
        _emit(args, dumps_report({"shared_iterate": list(pair) if pair else None,
                                  "budget": cfg.max_composite_degree}))
        return 0
    _emit(args, dumps_report(map_to_json(f.iterate(args.n, budget=cfg.max_composite_degree))))
    return 0


def _cmd_sigma(args):
    f = _load_map(args.map, args)
    _emit(args, dumps_report(moebius_to_json(sigma_f_quadratic(f))))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mme",
        description="Certify relationships between rational maps sharing their "
        "measure of maximal entropy.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--field", help="minimal polynomial, ascending, e.g. '1,1,1'")
        p.add_argument("--bind", action="append", help="symbol binding, e.g. a=1+w")
        p.add_argument("--out", help="write the report to a file")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("analyze-graph", help="decompose the graph curve of a map")
    p.add_argument("--map", required=True)
    p.add_argument("--no-reconstruct", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_analyze_graph)

    p = sub.add_parser("certify", help="composition-identity certificates")
    for name in ("R", "S", "T", "F", "G"):
        p.add_argument("--" + name)
    common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("measure", help="compare empirical maximal-entropy measures")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--depth", type=int)
    common(p)
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("render", help="Julia-set raster (binary PPM)")
    p.add_argument("--map", required=True)
    p.add_argument("--width", type=int, default=400)
    p.add_argument("--height", type=int, default=400)
    p.add_argument("--window", default="-2.5,2.5,-2.5,2.5")
    p.add_argument("--count", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--stats", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("powermap", help="periodic-point criteria for z^d")
    p.add_argument("--df", type=int)
    p.add_argument("--dg", type=int)
    p.add_argument("--root", help="a/b for the root of unity e^(2*pi*i*a/b)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_powermap)

    p = sub.add_parser("catalog", help="built-in example families")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", help="e.g. a=1+w or n=2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("compose", help="exact composition f(g(z))")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    common(p, seed=False)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("iterate", help="exact iterate or shared-iterate search")
    p.add_argument("--map", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--budget", type=int)
    p.add_argument("--shared-with", help="search f^n = g^m instead")
    common(p, seed=False)
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("sigma", help="the degree-2 fiber involution sigma_f")
    p.add_argument("--map", required=True)
    common(p, seed=False)
    p.set_defaults(func=_cmd_sigma)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, MapError, FieldError, SizeBudgetError,
            json.JSONDecodeError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ConsistencyError,) as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return 3
    except (TrackingError, BasepointError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
