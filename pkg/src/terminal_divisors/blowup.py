"""Discrepancies, candidate enumeration and exceptional divisors of
weighted (pseudo) blowups."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .classify import U2, X2, X3, Y2, Y2Z, Y3, SingularityInstance
from .lattice import (CyclicGroupAction, FractionalLattice, as_fraction, format_weight,
                      is_primitive, quotient_group_action)
from .newton import Face, diagram, face
from .qpoly import QuasiPolynomial, series_weight
from .region import discrepancy_constraint, lattice_points, upper_bounds


def discrepancy(w: Sequence, phi: QuasiPolynomial) -> Fraction:
    """``sum(w) - 1 - w(phi)`` (the value for a reduced exceptional divisor)."""
    w = tuple(as_fraction(x) for x in w)
    if any(x <= 0 for x in w):
        raise ValueError("weights must be strictly positive")
    return sum(w) - 1 - series_weight(w, phi)


def lattice_of(inst: SingularityInstance) -> FractionalLattice:
    return FractionalLattice(inst.action.m, inst.action.residues)


@dataclass(frozen=True)
class BlowupCandidate:
    weight: tuple
    group: CyclicGroupAction
    discrepancy: Fraction
    face: Face
    screened_rational: str | None = None      # reason, when the shape alone forces rationality

    @property
    def kind(self) -> str:
        return "weighted" if self.group.order == 1 else "pseudo"

    @property
    def label(self) -> str:
        return format_weight(self.weight)


@dataclass(frozen=True)
class DivisorModel:
    """``{equation = 0}`` in ``P(weights) / group``."""

    equation: QuasiPolynomial
    weights: tuple[int, ...]
    group: CyclicGroupAction

    def __str__(self):
        amb = "P(" + ",".join(map(str, self.weights)) + ")"
        if self.group.order > 1:
            amb += f"/Z_{self.group.order}"
        return f"{{{self.equation} = 0}} in {amb}"


def integral_weights(w) -> tuple[int, ...]:
    """Coprime integers proportional to ``w``."""
    w = [as_fraction(x) for x in w]
    den = 1
    for x in w:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in w]
    g = gcd(*ints)
    return tuple(i // g for i in ints)


def exceptional_divisor(c: BlowupCandidate) -> DivisorModel:
    return DivisorModel(c.face.polynomial, integral_weights(c.weight), c.group)


# -- type-specific screening of face shapes ---------------------------------------

def screen(tag: str, support) -> str | None:
    """Reason why a face with this support gives a rational divisor, or None.

    These are the coarse shape conditions that single out the faces worth a
    closer look; everything they reject is rational for the reason given.
    """
    s = set(support)
    if tag in ("cAx/4", "cAx/2"):
        if X2 in s and Y2 in s:
            return "face contains x^2 + y^2: a pair of squares of equal weight"
        if X2 not in s and Y2 not in s:
            return "face contains neither x^2 nor y^2: no square to cover a curve"
    elif tag == "cD/3-3":
        if sum(e in s for e in (U2, X3, Y3)) < 2:
            return "face contains fewer than two of u^2, x^3, y^3"
    elif tag == "cD/2-2":
        if U2 not in s and Y2Z not in s:
            return "face contains neither u^2 nor y^2*z"
    elif tag == "cE/2":
        if U2 not in s and X3 not in s:
            return "face contains neither u^2 nor x^3"
    return None


# -- enumeration ------------------------------------------------------------------

def enumeration_region(phi: QuasiPolynomial):
    """Constraints ``a <= 1`` for every monomial of ``phi``, with the exact
    per-coordinate bound ``B`` of the region.

    For ``w >= 0`` every point of the Newton polyhedron satisfies the
    constraints of its vertices, so the region is built from the vertices
    and cached on them.
    """
    cons, bound = _region(tuple(diagram(phi).vertices))
    return list(cons), bound


@lru_cache(maxsize=4096)
def _region(vertices):
    cons = tuple(discrepancy_constraint(v) for v in vertices)
    return cons, upper_bounds(cons)


def make_candidate(w, phi, lattice, tag=None) -> BlowupCandidate:
    w = tuple(as_fraction(x) for x in w)
    fc = face(w, phi)
    return BlowupCandidate(w, quotient_group_action(w, lattice), discrepancy(w, phi), fc,
                           screen(tag, fc.support) if tag else None)


def enumerate_candidates(inst: SingularityInstance, include_screened: bool = False):
    """Every primitive ``w`` in ``N'`` with discrepancy at most 1.

    By default only the faces that pass the type's shape screen are kept;
    ``include_screened`` returns the rest too, tagged with the reason.
    Sorted lexicographically by weight.
    """
    lattice = lattice_of(inst)
    cons, bound = enumeration_region(inst.equation)
    out = []
    m = lattice.m
    for W in lattice_points(lattice, cons, bound):
        w = tuple(Fraction(x, m) for x in W)
        fc_support = _face_support(W, inst.equation)
        reason = screen(inst.tag, fc_support)
        if reason and not include_screened:
            continue
        if not is_primitive(w, lattice):
            continue
        out.append(make_candidate(w, inst.equation, lattice, inst.tag))
    out.sort(key=lambda c: c.weight)
    return out


def _face_support(w, phi):
    """Exponents on the face; ``w`` may be any positive multiple of the weight."""
    vals = {e: sum(a * b for a, b in zip(w, e)) for e in phi.terms}
    lo = min(vals.values())
    return [e for e, v in vals.items() if v == lo]


def enumeration_bound(inst: SingularityInstance):
    return enumeration_region(inst.equation)[1]
