"""Command line: ``analyze``, ``enumerate`` and ``genus``."""
from __future__ import annotations

import argparse
import json
import sys

from .classify import ClassificationError
from .curves import (CurveModel, NotApplicable, genus_cover, genus_newton, genus_quasismooth)
from .report import (EXIT_INCONSISTENT, EXIT_INVALID, EXIT_OK, EXIT_UNDETERMINED, format_table,
                     run, run_family, to_json)
from .request import AnalysisRequest, Options, RequestError, parse_request


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise RequestError(f"cannot read {path}: {exc.strerror}") from None


def _emit(report, as_json):
    sys.stdout.write(to_json(report) if as_json else format_table(report))


def cmd_analyze(args):
    req = parse_request(_read(args.file))
    opts = req.options
    opts = Options(opts.check_nondegeneracy or args.check_nondegeneracy,
                   args.seed if args.seed is not None else opts.seed,
                   args.truncate if args.truncate is not None else opts.truncate)
    req = AnalysisRequest(req.terms, req.order, req.residues, req.tag,
                          "family" if args.family else req.mode, req.params, opts)
    report, code = run(req)
    _emit(report, args.json)
    return code


def _params(items):
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise RequestError(f"parameter {item!r} is not of the form name=<int>") from None
        if not sep:
            raise RequestError(f"parameter {item!r} is not of the form name=<int>")
    return out


def cmd_enumerate(args):
    report, code = run_family(args.type, _params(args.param))
    _emit(report, args.json)
    return code


def cmd_genus(args):
    try:
        weights = tuple(int(w) for w in args.weights.split(","))
    except ValueError:
        raise RequestError("weights must be integers like 1,2,3") from None
    req = parse_request(_read(args.poly))
    if req.nvars != 3 or len(weights) != 3:
        raise RequestError("a curve needs three weights and three exponents per term")
    order = req.order or 1
    residues = req.residues or (0, 0, 0)
    try:
        curve = CurveModel(req.polynomial, weights, order, residues)
        curve.degree
    except ValueError as exc:
        raise RequestError(str(exc)) from None
    results = {}
    for route in (genus_cover, genus_newton, genus_quasismooth):
        try:
            res = route(curve)
        except NotApplicable as exc:
            results[route.__name__] = {"applicable": False, "reason": str(exc)}
            continue
        results[route.__name__] = {"applicable": True, "genus": res.genus,
                                   "components": res.components,
                                   "hyperelliptic": res.hyperelliptic,
                                   "assumptions": list(res.assumptions)}
    genera = {r["genus"] for r in results.values() if r["applicable"]}
    if not genera:
        code, genus = EXIT_UNDETERMINED, None
    elif len(genera) > 1:
        code, genus = EXIT_INCONSISTENT, None
    else:
        code, genus = EXIT_OK, genera.pop()
    doc = {"weights": list(weights), "equation": str(req.polynomial), "genus": genus,
           "routes": results}
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"curve {doc['equation']} in P{tuple(weights)}"
                 + (f" / Z_{order}" if order > 1 else "")]
        for name, r in results.items():
            lines.append(f"  {name}: " + (f"genus {r['genus']}" if r["applicable"]
                                          else f"not applicable ({r['reason']})"))
        lines.append(f"genus {genus}" if genus is not None else "genus undetermined or inconsistent")
        sys.stdout.write("\n".join(lines) + "\n")
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="terminal-divisors",
                                description="Divisors of discrepancy at most 1 over "
                                            "non-Gorenstein terminal 3-fold points.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="analyze one singularity given in a request file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--family", action="store_true", help="list the family of the instance's type")
    a.add_argument("--seed", type=int, help="instantiate generic coefficients with this seed")
    a.add_argument("--check-nondegeneracy", action="store_true",
                   help="verify non-degeneracy on every compact face")
    a.add_argument("--truncate", type=int, metavar="D", help="drop terms of degree above D")
    a.set_defaults(func=cmd_analyze)
    e = sub.add_parser("enumerate", help="family mode for a type, without an equation")
    e.add_argument("--type", required=True)
    e.add_argument("--param", action="append", metavar="NAME=INT")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    g = sub.add_parser("genus", help="genus of a quasi-homogeneous plane curve")
    g.add_argument("--weights", required=True)
    g.add_argument("--poly", required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_genus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RequestError, ClassificationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
