"""Recognition of terminal singularities given in standard form.

Variables are always ``(x, y, z, u)``.  Matching is purely syntactic: the
equation must already be written in one of the standard shapes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .qpoly import (CyclicAction, NotSemiInvariant, QuasiPolynomial, is_generic,
                    semi_invariant_character, series_weight)

TYPES = ("cAx/4", "cAx/2", "cD/3-1", "cD/3-2", "cD/3-3", "cD/2-1", "cD/2-2", "cE/2")

ACTIONS = {
    "cAx/4": CyclicAction(4, (1, 3, 1, 2)),
    "cAx/2": CyclicAction(2, (0, 1, 1, 1)),
    "cD/3": CyclicAction(3, (1, 2, 2, 0)),
    "cD/2": CyclicAction(2, (1, 1, 0, 1)),
    "cE/2": CyclicAction(2, (0, 1, 1, 1)),
}

X2, Y2 = (2, 0, 0, 0), (0, 2, 0, 0)
X3, Y3 = (3, 0, 0, 0), (0, 3, 0, 0)
U2 = (0, 0, 0, 2)
Y2Z = (0, 2, 1, 0)


class ClassificationError(ValueError):
    """The equation does not match the claimed standard form."""


class UnsupportedType(ClassificationError):
    pass


def action_for(tag: str) -> CyclicAction:
    return ACTIONS[tag.split("-")[0]]


@dataclass(frozen=True)
class SingularityInstance:
    tag: str
    equation: QuasiPolynomial
    action: CyclicAction
    params: dict = field(default_factory=dict, compare=False)
    flags: tuple = ()

    @property
    def index(self) -> int:
        return self.action.m


def _same_group(act: CyclicAction, ref: CyclicAction) -> bool:
    if act.m != ref.m:
        return False
    return any(tuple(k * a % ref.m for a in ref.residues) == act.residues
               for k in range(1, ref.m) if gcd(k, ref.m) == 1)


def _split(phi: QuasiPolynomial, required):
    """Check that each exponent in ``required`` occurs; return the rest."""
    for e in required:
        if e not in phi:
            raise ClassificationError(f"missing required monomial {_mono(e)}")
    return {e: c for e, c in phi.terms.items() if e not in required}


def _mono(e):
    return "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip("xyzu", e) if k) or "1"


def _only(rest, allowed, what):
    bad = [e for e in rest if not allowed(e)]
    if bad:
        raise ClassificationError(f"{what}: unexpected monomial {_mono(bad[0])}")


def classify(phi: QuasiPolynomial, act: CyclicAction, tag: str | None = None) -> SingularityInstance:
    """Validate ``phi`` in ``C^4 / Z_m`` against the standard forms.

    ``tag`` may name the expected type; otherwise it is inferred.
    """
    if phi.is_zero() or (0, 0, 0, 0) in phi:
        raise ClassificationError("equation must vanish at the origin")
    if (1, 1, 0, 0) in phi:
        raise UnsupportedType("unsupported type: xy + f(z,u) shape (cA/m)")
    if act.m not in (2, 3, 4):
        raise ClassificationError(f"group order {act.m} is not 2, 3 or 4")
    try:
        semi_invariant_character(phi, act)
    except NotSemiInvariant as exc:
        raise ClassificationError(f"equation is not semi-invariant: {exc}") from None
    tags = [tag] if tag else _guess(phi, act)
    errors = []
    for t in tags:
        if t not in TYPES:
            raise ClassificationError(f"unknown type tag {t}")
        if not _same_group(act, action_for(t)):
            errors.append(f"{t}: group action does not match")
            continue
        try:
            return _CHECKS[t](phi, act)
        except ClassificationError as exc:
            errors.append(f"{t}: {exc}")
    raise ClassificationError("; ".join(errors) or "no standard form matches")


def _guess(phi, act):
    if act.m == 4:
        return ["cAx/4"]
    if act.m == 3:
        return ["cD/3-1", "cD/3-2", "cD/3-3"]
    if X2 in phi and Y2 in phi:
        return ["cAx/2"]
    if _same_group(act, ACTIONS["cD/2"]):
        return ["cD/2-1", "cD/2-2"]
    return ["cE/2"]


def _xy_squares(phi):
    rest = _split(phi, [X2, Y2])
    _only(rest, lambda e: e[0] == 0 and e[1] == 0, "f must depend on z, u only")
    return QuasiPolynomial(rest)


def _cax4(phi, act):
    f = _xy_squares(phi)
    if (0, 0, 0, 1) in f:
        raise ClassificationError("u must not occur in f")
    if semi_invariant_character(f, act) != 2 and not f.is_zero():
        raise ClassificationError("f must have the character of x^2")
    odd = sorted(e[3] for e in f.terms if e[2] == 0 and e[3] % 2 == 1)
    if not odd:
        raise ClassificationError("f contains no odd power of u, so the singularity is not isolated")
    n = (odd[0] - 1) // 2
    return SingularityInstance("cAx/4", phi, act, {"n": n})


def _cax2(phi, act):
    f = _xy_squares(phi)
    if f.is_zero():
        raise ClassificationError("f is zero")
    if min(sum(e) for e in f.terms) < 4:
        raise ClassificationError("f must lie in (z,u)^4")
    if semi_invariant_character(f, act) != 0:
        raise ClassificationError("f must be invariant")
    k = cax2_k(f)
    return SingularityInstance("cAx/2", phi, act, {"k": k})


def cax2_k(f: QuasiPolynomial) -> int:
    """``w(f)`` for ``w(z) = w(u) = 1/2``: half the lowest degree of ``f``."""
    if len(f.variables) == 4 and any(e[0] or e[1] for e in f.terms):
        f = QuasiPolynomial({e: c for e, c in f.terms.items() if not (e[0] or e[1])})
    level = series_weight((1, 1, Fraction(1, 2), Fraction(1, 2)), f)
    if level.denominator != 1:
        raise ClassificationError("f has odd lowest degree")
    return int(level)


def _cd31(phi, act):
    rest = _split(phi, [U2, X3, (0, 2, 1, 0), (0, 1, 2, 0)])
    if rest:
        raise ClassificationError("extra terms beyond u^2 + x^3 + yz(y+z)")
    return SingularityInstance("cD/3-1", phi, act, {})


def _cd32(phi, act):
    rest = _split(phi, [U2, X3, (0, 1, 2, 0)])
    lam, mu = {}, {}
    for e, c in rest.items():
        if e[2] == 0 and e[3] == 0 and e[0] == 1 and (e[1] - 4) % 3 == 0 and e[1] >= 4:
            lam[(e[1] - 4) // 3] = c
        elif e[0] == 0 and e[2] == 0 and e[3] == 0 and (e[1] - 6) % 3 == 0 and e[1] >= 6:
            mu[(e[1] - 6) // 3] = c
        else:
            raise ClassificationError(f"unexpected monomial {_mono(e)}")
    flags = []
    l0, m0 = lam.get(0, Fraction(0)), mu.get(0, Fraction(0))
    if is_generic(l0) or is_generic(m0):
        flags.append("4*lambda^3 + 27*mu^2 != 0 assumed for generic coefficients")
    elif 4 * l0 ** 3 + 27 * m0 ** 2 == 0:
        raise ClassificationError("4*lambda^3 + 27*mu^2 vanishes")
    return SingularityInstance("cD/3-2", phi, act, {"lambda": lam, "mu": mu}, tuple(flags))


def _cd33(phi, act):
    rest = _split(phi, [U2, X3, Y3])
    shapes = {"alpha": ((1, 1), 3), "beta": ((1, 0), 4), "gamma": ((0, 1), 5), "delta": ((0, 0), 6)}
    data = {k: {} for k in shapes}
    for e, c in rest.items():
        for name, ((i, j), base) in shapes.items():
            if e[0] == i and e[1] == j and e[3] == 0 and e[2] >= base and (e[2] - base) % 3 == 0:
                data[name][(e[2] - base) // 3] = c
                break
        else:
            raise ClassificationError(f"unexpected monomial {_mono(e)}")
    if not rest:
        raise ClassificationError("u^2 + x^3 + y^3 alone is not an isolated singularity")
    return SingularityInstance("cD/3-3", phi, act, data)


def _cd21(phi, act):
    rest = _split(phi, [U2, (1, 1, 1, 0)])
    a = b = c = None
    for e in rest:
        if e[1:] == (0, 0, 0) and e[0] % 2 == 0:
            a = e[0] // 2
        elif e[0] == e[2] == e[3] == 0 and e[1] % 2 == 0:
            b = e[1] // 2
        elif e[0] == e[1] == e[3] == 0:
            c = e[2]
        else:
            raise ClassificationError(f"unexpected monomial {_mono(e)}")
    if len(rest) != 3 or None in (a, b, c):
        raise ClassificationError("needs exactly x^(2a), y^(2b), z^c besides u^2 + xyz")
    if a < 2 or b < 2 or c < 3:
        raise ClassificationError("requires a, b >= 2 and c >= 3")
    return SingularityInstance("cD/2-1", phi, act, {"a": a, "b": b, "c": c})


def _in_cd22_ideal(e):
    i, j = e[0], e[2]
    return i >= 4 or (i >= 2 and j >= 2) or j >= 3


def _cd22(phi, act):
    rest = _split(phi, [U2, Y2Z])
    lam = None
    g = {}
    for e, c in rest.items():
        if e[1] == 1 and e[2] == 0 and e[3] == 0 and e[0] % 2 == 1 and e[0] >= 3:
            if lam is not None:
                raise ClassificationError("more than one y*x^(2a+1) term")
            lam = (e[0], c)
        elif e[1] == 0 and e[3] == 0:
            if not _in_cd22_ideal(e):
                raise ClassificationError(f"g term {_mono(e)} is not in (x^4, x^2 z^2, z^3)")
            g[e] = c
        else:
            raise ClassificationError(f"unexpected monomial {_mono(e)}")
    zs = sorted(e[2] for e in g if e[0] == 0)
    if not zs:
        raise ClassificationError("g contains no pure power of z, so the singularity is not isolated")
    params = {"n": zs[0] + 1}
    if lam:
        params["a"] = (lam[0] - 1) // 2
        params["lambda"] = lam[1]
    return SingularityInstance("cD/2-2", phi, act, params)


def _ce2(phi, act):
    rest = _split(phi, [U2, X3])
    g, h = {}, {}
    for e, c in rest.items():
        if e[3] or e[0] > 1:
            raise ClassificationError(f"unexpected monomial {_mono(e)}")
        if e[1] + e[2] < 4:
            raise ClassificationError(f"{_mono(e)} is not in (y,z)^4")
        (g if e[0] == 1 else h)[e] = c
    if not any(e[1] + e[2] == 4 for e in h):
        raise ClassificationError("h must have a nonzero degree-4 part")
    quartic = {e[1] for e in h if e[1] + e[2] == 4}
    flags = []
    if not quartic & {4, 3, 2}:
        flags.append("degree-4 part of h lies in (z^3); swap y and z to normalise")
    return SingularityInstance("cE/2", phi, act, {"g": g, "h": h}, tuple(flags))


_CHECKS = {
    "cAx/4": _cax4, "cAx/2": _cax2, "cD/3-1": _cd31, "cD/3-2": _cd32,
    "cD/3-3": _cd33, "cD/2-1": _cd21, "cD/2-2": _cd22, "cE/2": _ce2,
}
