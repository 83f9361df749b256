"""Analysis requests: the line-oriented text format and its JSON twin.

Text format, one item per line (``#`` starts a comment)::

    quotient 4; 1 3 1 2          cyclic action (order; four residues)
    type cAx/4                   optional type tag
    mode instance                instance (default) or family
    param n = 7                  family parameters
    option seed 3                option lines, see OPTION_NAMES
    1 2 0 0 0                    coefficient then one exponent per variable

A coefficient is an integer, a fraction ``p/q`` or an identifier, which
is read as a generic nonzero coefficient.  Decimals are rejected.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .qpoly import VARIABLES, Generic, QuasiPolynomial, is_generic

OPTION_NAMES = ("check-nondegeneracy", "seed", "truncate")
MODES = ("instance", "family")
_INT = re.compile(r"-?\d+\Z")
_FRAC = re.compile(r"-?\d+/\d+\Z")
_IDENT = re.compile(r"-?[A-Za-z_][A-Za-z0-9_]*\Z")


class RequestError(ValueError):
    """Malformed request, with the position of the offending token."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Options:
    check_nondegeneracy: bool = False
    seed: int | None = None
    truncate: int | None = None


@dataclass(frozen=True)
class AnalysisRequest:
    terms: tuple = ()                 # sorted (exponent, coefficient) pairs
    order: int | None = None
    residues: tuple | None = None
    tag: str | None = None
    mode: str = "instance"
    params: tuple = ()                # sorted (name, value) pairs
    options: Options = field(default_factory=Options)

    @property
    def polynomial(self) -> QuasiPolynomial:
        return QuasiPolynomial(dict(self.terms), VARIABLES[:self.nvars])

    @property
    def nvars(self) -> int:
        return len(self.terms[0][0]) if self.terms else 4


def parse_coefficient(token: str, line=None, column=None):
    if _INT.match(token):
        return Fraction(int(token))
    if _FRAC.match(token):
        num, den = token.split("/")
        if int(den) == 0:
            raise RequestError("zero denominator", line, column)
        return Fraction(int(num), int(den))
    if _IDENT.match(token):
        return -Generic(token[1:]) if token.startswith("-") else Generic(token)
    raise RequestError(f"coefficient {token!r} is not an integer, fraction or name", line, column)


def format_coefficient(c) -> str:
    if is_generic(c):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _tokens(text: str):
    """``(token, column)`` pairs, columns 1-based."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"[^\s;=]+|;|=", text)]


def _int_token(tok, line, col, what):
    if not _INT.match(tok):
        raise RequestError(f"{what} must be an integer, got {tok!r}", line, col)
    return int(tok)


def _finish(terms, order, residues, tag, mode, params, options):
    if mode == "instance" and not terms:
        raise RequestError("the polynomial is empty")
    if mode == "family" and not tag:
        raise RequestError("family mode needs a type")
    merged = {}
    for e, c in terms:
        if e in merged:
            raise RequestError(f"exponent {e} appears twice")
        merged[e] = c
    lengths = {len(e) for e in merged}
    if len(lengths) > 1:
        raise RequestError("terms have different numbers of exponents")
    if residues is not None and lengths and len(residues) != lengths.pop():
        raise RequestError("quotient residues and exponents differ in length")
    return AnalysisRequest(tuple(sorted(merged.items())), order,
                           tuple(residues) if residues is not None else None, tag, mode,
                           tuple(sorted(params.items())), options)


def parse_text(text: str) -> AnalysisRequest:
    terms, params = [], {}
    order = residues = tag = None
    mode = "instance"
    opts = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        head, col = toks[0]
        if head == "quotient":
            vals = [t for t in toks[1:] if t[0] != ";"]
            if len(toks) < 3 or ";" not in [t[0] for t in toks]:
                raise RequestError("expected 'quotient m; r1 r2 ...'", ln, col)
            order = _int_token(vals[0][0], ln, vals[0][1], "group order")
            if order < 1:
                raise RequestError("group order must be positive", ln, vals[0][1])
            residues = tuple(_int_token(t, ln, c, "residue") % order for t, c in vals[1:])
        elif head == "type":
            if len(toks) != 2:
                raise RequestError("expected 'type <tag>'", ln, col)
            tag = toks[1][0]
        elif head == "mode":
            if len(toks) != 2 or toks[1][0] not in MODES:
                raise RequestError("expected 'mode instance' or 'mode family'", ln, col)
            mode = toks[1][0]
        elif head == "param":
            if len(toks) != 4 or toks[2][0] != "=":
                raise RequestError("expected 'param <name> = <int>'", ln, col)
            params[toks[1][0]] = _int_token(toks[3][0], ln, toks[3][1], "parameter")
        elif head == "option":
            opts.update(_parse_option(toks[1:], ln, col))
        else:
            coeff = parse_coefficient(head, ln, col)
            if len(toks) < 2:
                raise RequestError("a term needs exponents after the coefficient", ln, col)
            exps = []
            for t, c in toks[1:]:
                k = _int_token(t, ln, c, "exponent")
                if k < 0:
                    raise RequestError("exponents must be non-negative", ln, c)
                exps.append(k)
            if coeff != 0:
                terms.append((tuple(exps), coeff))
    return _finish(terms, order, residues, tag, mode, params, Options(**opts))


def _parse_option(toks, ln, col):
    if not toks:
        raise RequestError("expected an option name", ln, col)
    name, c = toks[0]
    if name not in OPTION_NAMES:
        raise RequestError(f"unknown option {name!r}", ln, c)
    if name == "check-nondegeneracy":
        if len(toks) != 1:
            raise RequestError("check-nondegeneracy takes no value", ln, c)
        return {"check_nondegeneracy": True}
    if len(toks) != 2:
        raise RequestError(f"option {name} needs one integer", ln, c)
    return {name: _int_token(toks[1][0], ln, toks[1][1], name)}


def format_text(req: AnalysisRequest) -> str:
    lines = []
    if req.order is not None:
        lines.append(f"quotient {req.order}; " + " ".join(map(str, req.residues)))
    if req.tag:
        lines.append(f"type {req.tag}")
    if req.mode != "instance":
        lines.append(f"mode {req.mode}")
    for name, value in req.params:
        lines.append(f"param {name} = {value}")
    if req.options.check_nondegeneracy:
        lines.append("option check-nondegeneracy")
    if req.options.seed is not None:
        lines.append(f"option seed {req.options.seed}")
    if req.options.truncate is not None:
        lines.append(f"option truncate {req.options.truncate}")
    for e, c in req.terms:
        lines.append(" ".join([format_coefficient(c)] + [str(k) for k in e]))
    return "\n".join(lines) + "\n"


# -- JSON -----------------------------------------------------------------------------

REQUEST_VERSION = 1


def _exact_json(value, where):
    """A coefficient from JSON: an int or a string, never a float."""
    if isinstance(value, bool) or isinstance(value, float):
        raise RequestError(f"{where}: coefficient {value!r} is not exact; write it as a fraction string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_coefficient(value.strip())
        except RequestError as exc:
            raise RequestError(f"{where}: {exc}") from None
    raise RequestError(f"{where}: coefficient must be an integer or a string")


def parse_json(text: str) -> AnalysisRequest:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RequestError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise RequestError("a request must be a JSON object")
    if doc.get("version", REQUEST_VERSION) != REQUEST_VERSION:
        raise RequestError(f"unsupported request version {doc.get('version')!r}")
    order = residues = None
    if doc.get("quotient") is not None:
        q = doc["quotient"]
        try:
            order = int(q["order"])
            residues = tuple(int(r) % order for r in q["residues"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise RequestError("quotient must be {\"order\": m, \"residues\": [...]}") from None
    terms = []
    for i, t in enumerate(doc.get("terms", [])):
        where = f"terms[{i}]"
        if not isinstance(t, dict) or "coeff" not in t or "exp" not in t:
            raise RequestError(f"{where}: expected {{\"coeff\": ..., \"exp\": [...]}}")
        exps = t["exp"]
        if not isinstance(exps, list) or not all(isinstance(k, int) and not isinstance(k, bool)
                                                 and k >= 0 for k in exps):
            raise RequestError(f"{where}: exponents must be non-negative integers")
        coeff = _exact_json(t["coeff"], where)
        if coeff != 0:
            terms.append((tuple(exps), coeff))
    mode = doc.get("mode", "instance")
    if mode not in MODES:
        raise RequestError(f"unknown mode {mode!r}")
    params = doc.get("params", {})
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in params.values()):
        raise RequestError("parameters must be integers")
    raw = doc.get("options", {})
    unknown = set(raw) - {"check_nondegeneracy", "seed", "truncate"}
    if unknown:
        raise RequestError(f"unknown options {sorted(unknown)}")
    return _finish(terms, order, residues, doc.get("type"), mode, dict(params), Options(**raw))


def to_json(req: AnalysisRequest) -> str:
    doc = {"version": REQUEST_VERSION}
    if req.order is not None:
        doc["quotient"] = {"order": req.order, "residues": list(req.residues)}
    if req.tag:
        doc["type"] = req.tag
    doc["mode"] = req.mode
    if req.params:
        doc["params"] = dict(req.params)
    opts = req.options
    doc["options"] = {"check_nondegeneracy": opts.check_nondegeneracy, "seed": opts.seed,
                      "truncate": opts.truncate}
    doc["terms"] = [{"coeff": format_coefficient(c), "exp": list(e)} for e, c in req.terms]
    return json.dumps(doc, indent=2) + "\n"


def parse_request(text: str) -> AnalysisRequest:
    """Read either format; a document starting with ``{`` is JSON."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)
