"""Family mode for cE/2: ``u^2 + x^3 + g(y,z) x + h(y,z)`` under 1/2(0,1,1,1).

There is no closed linear system for this type, so a weight qualifies when
some member of the family has discrepancy at most 1 along it and a face
that is a cone over a curve of positive genus modulo the quotient group.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .blowup import DivisorModel, integral_weights
from .divisor import classify_divisor
from .lattice import FractionalLattice, is_primitive, quotient_group_action
from .qpoly import Generic, QuasiPolynomial
from .region import Constraint, lattice_points

LATTICE = FractionalLattice(2, (0, 1, 1, 1))
U2, X3 = (0, 0, 0, 2), (3, 0, 0, 0)
QUARTIC_LEADS = ((0, 4, 0, 0), (0, 3, 1, 0), (0, 2, 2, 0))


def _weight(w, e):
    return sum(a * b for a, b in zip(w, e))


def optional_monomials(w, level):
    """Invariant monomials ``x y^i z^j`` and ``y^i z^j`` (``i + j`` even, at
    least 4) of weight at most ``level``."""
    out = []
    for xpow in (0, 1):
        d = 4
        while _weight(w, (xpow, 0, d, 0)) <= level or _weight(w, (xpow, d, 0, 0)) <= level:
            for i in range(d + 1):
                e = (xpow, i, d - i, 0)
                if _weight(w, e) <= level:
                    out.append(e)
            d += 2
    return out


def member_faces(w):
    """Faces of family members along ``w`` with discrepancy at most 1.

    Yields ``(level, face)``: the forced monomials of that weight plus any
    subset of the optional ones, all with generic coefficients.
    """
    total = sum(w)
    seen = set()
    for lead in QUARTIC_LEADS:
        forced = (U2, X3, lead)
        top = min(_weight(w, e) for e in forced)
        optional = optional_monomials(w, top)
        levels = {_weight(w, e) for e in forced + tuple(optional)}
        for level in sorted(levels):
            if level > top or total - 1 - level > 1:
                continue
            must = {e for e in forced if _weight(w, e) == level}
            maybe = sorted({e for e in optional if _weight(w, e) == level} - must)
            for r in range(len(maybe) + 1):
                for extra in combinations(maybe, r):
                    support = must | set(extra)
                    key = (level, frozenset(support))
                    if key in seen or len(support) < 2:
                        continue
                    seen.add(key)
                    terms = {e: Generic(f"c{n}") for n, e in enumerate(sorted(support))}
                    yield level, QuasiPolynomial(terms)


def witness(w):
    """``(level, genus)`` of the member face of largest genus that makes
    ``w`` qualify, or None."""
    w = tuple(Fraction(x) for x in w)
    group = quotient_group_action(w, LATTICE)
    weights = integral_weights(w)
    best = None
    for level, fc in member_faces(w):
        comps = classify_divisor(DivisorModel(fc, weights, group))
        genera = [c.genus for c in comps if c.nonrational]
        if genera and (best is None or max(genera) > best[1]):
            best = (level, max(genera))
    return best


def qualifies(w) -> bool:
    return witness(w) is not None


def _region():
    """Union over the forced monomial achieving the face level."""
    out = []
    for lead in QUARTIC_LEADS:
        forced = (U2, X3, lead)
        for v in forced:
            cons = [Constraint(tuple(1 - x for x in v), "<=", 2)]
            cons += [Constraint(tuple(a - b for a, b in zip(o, v)), ">=", 0) for o in forced if o != v]
            out.append(cons)
    return out


@lru_cache(maxsize=1)
def ce2_family_weights():
    found = set()
    for cons in _region():
        for W in lattice_points(LATTICE, cons):
            w = tuple(Fraction(x, 2) for x in W)
            if w in found or not is_primitive(w, LATTICE):
                continue
            if qualifies(w):
                found.add(w)
    return sorted(found)
