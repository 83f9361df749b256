"""Run a request end to end and render the result as a table or JSON."""
from __future__ import annotations

import json
import random
from fractions import Fraction

from .analysis import INCONSISTENT, NOT_VERIFIED, VERIFIED, MAX_NONRATIONAL, analyze
from .classify import TYPES, action_for, classify
from .families import family_table
from .lattice import format_weight
from .newton import nondegenerate
from .qpoly import CyclicAction, QuasiPolynomial, is_generic
from .request import AnalysisRequest, RequestError

REPORT_SCHEMA = "terminal-divisors/report"
REPORT_VERSION = 1

EXIT_OK, EXIT_INVALID, EXIT_UNDETERMINED, EXIT_INCONSISTENT = 0, 2, 3, 4
EXIT_CODES = {VERIFIED: EXIT_OK, NOT_VERIFIED: EXIT_UNDETERMINED, INCONSISTENT: EXIT_INCONSISTENT}


def _s(x):
    """Exact values as strings, containers recursively; JSON-ready."""
    if isinstance(x, Fraction):
        return str(x)
    if is_generic(x):
        return str(x)
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else _key(k)): _s(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_s(v) for v in x]
    return x


def _key(k):
    if isinstance(k, tuple):
        return "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip("xyzu", k) if e) or "1"
    return str(k)


def _equation(req: AnalysisRequest, flags: list) -> QuasiPolynomial:
    phi = req.polynomial
    if req.options.truncate is not None:
        kept = {e: c for e, c in phi.terms.items() if sum(e) <= req.options.truncate}
        if len(kept) < len(phi.terms):
            flags.append(f"terms of degree above {req.options.truncate} dropped")
        phi = QuasiPolynomial(kept)
        if phi.is_zero():
            raise RequestError("truncation removed every term")
    if req.options.seed is not None and phi.has_generic():
        phi = phi.instantiate(random.Random(req.options.seed))
        flags.append(f"generic coefficients instantiated with seed {req.options.seed}")
    return phi


def _action(req: AnalysisRequest) -> CyclicAction:
    if req.order is not None:
        return CyclicAction(req.order, req.residues)
    if req.tag:
        return action_for(req.tag)
    raise RequestError("no quotient given and no type to infer it from")


def run(req: AnalysisRequest):
    """Return ``(report, exit_code)``; the report is a JSON-ready dict."""
    if req.mode == "family":
        if not req.terms:
            return run_family(req.tag, dict(req.params))
        inst = classify(_equation(req, []), _action(req), req.tag)
        params = {k: v for k, v in inst.params.items() if k in ("n", "k")}
        return run_family(inst.tag, {**params, **dict(req.params)})
    flags = []
    phi = _equation(req, flags)
    if phi.nvars != 4:
        raise RequestError("instance mode needs four exponents per term")
    inst = classify(phi, _action(req), req.tag)
    extra_problem = False
    if req.options.check_nondegeneracy:
        verdict = nondegenerate(phi)
        flags.extend(verdict.notes)
        if verdict.verdict != "yes":
            flags.append("equation is degenerate: face verdicts need not describe every divisor")
            extra_problem = True
    an = analyze(inst)
    check = an.theorem_check
    if extra_problem and check == VERIFIED:
        check = NOT_VERIFIED
    report = {
        "schema": REPORT_SCHEMA, "version": REPORT_VERSION, "mode": "instance",
        "type": inst.tag, "parameters": _s(inst.params), "equation": str(phi),
        "quotient": {"order": inst.action.m, "residues": list(inst.action.residues)},
        "bound": [str(b) for b in an.bound],
        "candidates": [_row(r) for r in an.reports],
        "theorem_check": {"status": check, "nonrational": an.nonrational_count,
                          "maximum": MAX_NONRATIONAL[inst.tag]},
        "flags": flags + an.flags,
    }
    return report, EXIT_CODES[check]


def _row(r):
    c = r.candidate
    return {
        "weight": c.label, "label": r.label, "k": r.k, "kind": c.kind,
        "quotient_order": c.group.order, "discrepancy": str(c.discrepancy),
        "face": str(c.face.polynomial), "verdict": r.verdict, "genus": r.genus,
        "genus_bound": r.bound,
        "components": [{
            "equation": str(p.equation), "multiplicity": p.multiplicity, "verdict": p.verdict,
            "rule": p.rule, "genus": p.genus, "hyperelliptic": p.hyperelliptic,
            "pieces": p.pieces, "notes": list(p.notes),
        } for p in r.components],
    }


def run_family(tag: str, params: dict):
    if tag not in TYPES:
        raise RequestError(f"unknown type {tag!r}")
    needed = {"cAx/4": "n", "cD/2-2": "n", "cAx/2": "k"}.get(tag)
    if needed and needed not in params:
        raise RequestError(f"{tag} needs the parameter {needed}")
    flags = []
    if tag == "cD/2-2":
        flags.append("listed (1,k,2,k) has discrepancy 2 and fails the system; (1,k,1,k) "
                     "passes with discrepancy 1 and is reported instead")
    if tag == "cE/2":
        flags.append("rows found by the genus engine over members of the family")
    rows = family_table(tag, params)
    for row in rows:
        if row.bound is not None and row.bound < 0:
            flags.append(f"{row.label} with k={row.k}: tabulated bound {row.bound} is negative, "
                         "read as never non-rational")
    report = {
        "schema": REPORT_SCHEMA, "version": REPORT_VERSION, "mode": "family",
        "type": tag, "parameters": _s(params), "equation": None, "quotient": {
            "order": action_for(tag).m, "residues": list(action_for(tag).residues)},
        "bound": None,
        "candidates": [{
            "weight": format_weight(row.weight), "label": row.label, "k": row.k,
            "kind": "weighted" if row.group_order == 1 else "pseudo",
            "quotient_order": row.group_order,
            "discrepancy": None if row.discrepancy is None else str(row.discrepancy),
            "genus": row.genus, "genus_bound": row.bound,
        } for row in rows],
        "theorem_check": {"status": "family", "nonrational": None,
                          "maximum": MAX_NONRATIONAL[tag]},
        "flags": flags,
    }
    return report, EXIT_OK


def to_json(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def format_table(report) -> str:
    out = [f"type {report['type']}  parameters {json.dumps(report['parameters'], sort_keys=True)}"]
    if report["equation"]:
        out.append(f"equation {report['equation']}")
    if report["bound"]:
        out.append("bound B = (" + ", ".join(report["bound"]) + ")")
    head = ("weight", "label", "kind", "|G|", "a", "verdict", "genus", "bound")
    rows = [head]
    for c in report["candidates"]:
        label = c["label"] or "-"
        if c["k"] is not None:
            label += f"[k={c['k']}]"
        rows.append((c["weight"], label, c["kind"], str(c["quotient_order"]),
                     c["discrepancy"] or "-", c.get("verdict", "-"),
                     "-" if c["genus"] is None else str(c["genus"]),
                     "-" if c["genus_bound"] is None else str(c["genus_bound"])))
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    for r in rows:
        out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    if report["mode"] == "instance":
        for c in report["candidates"]:
            if c["verdict"] != "rational":
                out.append(f"  {c['weight']}: face {c['face']}")
                for p in c["components"]:
                    out.append(f"    {p['equation']}: {p['verdict']} ({p['rule']})")
    tc = report["theorem_check"]
    if tc["status"] == "family":
        out.append(f"{len(report['candidates'])} candidate weights")
    else:
        out.append(f"{tc['nonrational']} non-rational divisors (at most {tc['maximum']}): {tc['status']}")
    for f in report["flags"]:
        out.append(f"flag: {f}")
    return "\n".join(out) + "\n"
