"""Newton diagrams, weight-minimal faces and non-degeneracy."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from fractions import Fraction
from typing import Sequence

import sympy
from sympy import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.rings import ring

from . import _lp
from .lattice import as_fraction
from .qpoly import QuasiPolynomial, monomial_weight, series_weight


@dataclass(frozen=True)
class Face:
    """The part of ``f`` on which ``<w, .>`` attains its minimum ``level``."""

    weight: tuple[Fraction, ...]
    level: Fraction
    support: frozenset
    polynomial: QuasiPolynomial

    def vertices(self):
        return sorted(self.support)


def face(w: Sequence, f: QuasiPolynomial) -> Face:
    w = tuple(as_fraction(x) for x in w)
    if any(x <= 0 for x in w):
        raise ValueError("face weights must be strictly positive")
    level = series_weight(w, f)
    terms = {e: c for e, c in f.terms.items() if monomial_weight(w, e) == level}
    return Face(w, level, frozenset(terms), QuasiPolynomial(terms, f.variables))


# -- the diagram --------------------------------------------------------------

def _supporting_weight(points, inside, excluded, n):
    """Integral ``w >= 1`` with ``inside`` on the minimum and every point of
    ``excluded`` strictly above it; None if there is none."""
    base = inside[0]
    a_eq, b_eq, a_ub, b_ub = [], [], [], []
    # substitute w = 1 + x with x >= 0
    for t in inside[1:]:
        d = [ti - bi for ti, bi in zip(t, base)]
        a_eq.append(d)
        b_eq.append(-sum(d))
    for v in points:
        if v in inside:
            continue
        d = [vi - bi for vi, bi in zip(v, base)]
        need = 1 if v in excluded else 0
        a_ub.append([-x for x in d])
        b_ub.append(sum(d) - need)
    if not a_ub and not a_eq:
        return tuple(Fraction(1) for _ in range(n))
    x = _lp.feasible_point(a_ub, b_ub, a_eq, b_eq, n=n)
    if x is None:
        return None
    return tuple(1 + xi for xi in x)


def _minimal_face(points, inside, n):
    """Smallest compact face containing ``inside`` plus a relative-interior
    supporting weight, or None if no positive weight supports ``inside``."""
    w = _supporting_weight(points, inside, (), n)
    if w is None:
        return None
    level = min(monomial_weight(w, p) for p in points)
    if any(monomial_weight(w, p) != level for p in inside):
        return None
    members = set(inside)
    witness = list(w)
    for u in points:
        if u in members or monomial_weight(w, u) != level:
            continue
        wu = _supporting_weight(points, list(inside), {u}, n)
        if wu is None:
            members.add(u)
        else:
            witness = [a + b for a, b in zip(witness, wu)]
    return frozenset(members), tuple(witness)


@dataclass
class NewtonDiagram:
    """Compact faces of the Newton polyhedron ``conv(supp f) + R^n_{>=0}``."""

    support: list
    faces: list = field(default_factory=list)      # (frozenset, weight)

    @property
    def vertices(self):
        return sorted(next(iter(s)) for s, _ in self.faces if len(s) == 1)

    def maximal_faces(self):
        sets = [s for s, _ in self.faces]
        return [(s, w) for s, w in self.faces if not any(s < t for t in sets)]

    def dimension_of(self, members) -> int:
        pts = sorted(members)
        if len(pts) < 2:
            return 0
        base = pts[0]
        return sympy.Matrix([[a - b for a, b in zip(p, base)] for p in pts[1:]]).rank()


def diagram(f: QuasiPolynomial) -> NewtonDiagram:
    if f.is_zero():
        raise ValueError("zero polynomial")
    if (0,) * f.nvars in f.terms:
        raise ValueError("f(0) must vanish")
    points = tuple(sorted(f.terms))
    return NewtonDiagram(list(points), list(compact_faces(points, f.nvars)))


@lru_cache(maxsize=4096)
def compact_faces_lp(points, n):
    """Compact faces grown from vertices one point at a time, each step
    decided by an exact linear program."""
    found: dict = {}
    frontier = []
    for p in points:
        res = _minimal_face(points, [p], n)
        if res and res[0] not in found:
            found[res[0]] = res[1]
            frontier.append(res[0])
    while frontier:
        current = frontier.pop()
        for v in points:
            if v in current:
                continue
            res = _minimal_face(points, sorted(current) + [v], n)
            if res and res[0] not in found:
                found[res[0]] = res[1]
                frontier.append(res[0])
    order = sorted(found, key=lambda s: (min(sum(p) for p in s), sorted(s)))
    return tuple((s, found[s]) for s in order)


def _det(M):
    """Integer determinant by cofactor expansion (matrices here are tiny)."""
    if len(M) == 1:
        return M[0][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * _det(minor)
    return total


def _normal(rows, n):
    """Generalised cross product of ``n - 1`` integer vectors."""
    w = [(-1) ** j * _det([r[:j] + r[j + 1:] for r in rows]) for j in range(n)]
    g = gcd(*w)
    return tuple(x // g for x in w) if g else None


@lru_cache(maxsize=4096)
def compact_faces(points, n):
    """Compact faces of ``conv(points) + R^n_{>=0}`` with a positive supporting weight.

    Facets are spanned by points and coordinate rays; every face is an
    intersection of facets, compact exactly when it contains no ray.
    """
    points = tuple(points)
    rays = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    facets = {}
    for a in range(1, n + 1):
        for chosen in combinations(points, a):
            base = chosen[0]
            diffs = [[p - q for p, q in zip(v, base)] for v in chosen[1:]]
            for rs in combinations(range(n), n - a):
                w = _normal(diffs + [list(rays[k]) for k in rs], n)
                if w is None:
                    continue
                if all(x <= 0 for x in w):
                    w = tuple(-x for x in w)
                if any(x < 0 for x in w):
                    continue
                level = sum(x * y for x, y in zip(w, base))
                vals = [sum(x * y for x, y in zip(w, p)) for p in points]
                if min(vals) < level:
                    continue
                on = frozenset(p for p, v in zip(points, vals) if v == level)
                facets[w] = (on, frozenset(k for k in range(n) if w[k] == 0))
    faces = set(facets.values())
    frontier = list(faces)
    while frontier:
        new = []
        for f1 in frontier:
            for f2 in list(faces):
                meet = (f1[0] & f2[0], f1[1] & f2[1])
                if meet[0] and meet not in faces:
                    faces.add(meet)
                    new.append(meet)
        frontier = new
    out = {}
    for pts, rs in faces:
        if rs or pts in out:
            continue
        w = [0] * n
        for normal, (on, _) in facets.items():
            if pts <= on:
                w = [a + b for a, b in zip(w, normal)]
        out[pts] = tuple(Fraction(x) for x in w)
    order = sorted(out, key=lambda s: (min(sum(p) for p in s), sorted(s)))
    return tuple((s, out[s]) for s in order)


# -- non-degeneracy -----------------------------------------------------------

@dataclass
class NondegeneracyVerdict:
    verdict: str                 # "yes" | "no" | "undetermined"
    witness: object = None       # offending face polynomial for "no"
    assumed_generic: bool = False
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict == "yes"


def _blocks(p: QuasiPolynomial):
    """Split ``p`` into summands living in pairwise disjoint variable sets."""
    groups: list[tuple[set, dict]] = []
    for e, c in p.terms.items():
        vars_e = {i for i, k in enumerate(e) if k}
        merged_vars, merged_terms = set(vars_e), {e: c}
        rest = []
        for vs, ts in groups:
            if vs & merged_vars or (not vs and not merged_vars):
                merged_vars |= vs
                merged_terms.update(ts)
            else:
                rest.append((vs, ts))
        groups = rest + [(merged_vars, merged_terms)]
    return [QuasiPolynomial(ts, p.variables) for _, ts in groups]


def torus_singular(p: QuasiPolynomial) -> bool:
    """Does ``{p = 0}`` have a singular point with all coordinates nonzero?

    ``p`` must be quasi-homogeneous with positive weights and exact
    coefficients.
    """
    p = p.divide_monomial(p.content())
    for block in _blocks(p):
        if len(block) == 1:
            return False
    for block in _blocks(p):
        if not _block_singular(block):
            return False
    return True


def _block_singular(block: QuasiPolynomial) -> bool:
    ess = block.essential_variables()
    if len(ess) <= 2:
        from .binary import binary_form_from, has_repeated_torus_root
        return has_repeated_torus_root(binary_form_from(block, ess))
    n = block.nvars
    R, *gens = ring(f"x0:{n},t", QQ)
    f = R.from_dict({e + (0,): QQ(c.numerator, c.denominator) for e, c in block.terms.items()})
    used = R.from_dict({tuple(int(i in ess) for i in range(n)) + (0,): 1})
    eqs = [f] + [f.diff(gens[i]) for i in ess] + [R.one - gens[n] * used]
    return groebner([q for q in eqs if q], R) != [R.one]


def nondegenerate(f: QuasiPolynomial) -> NondegeneracyVerdict:
    """Check every compact face of the diagram for torus singularities."""
    verdict = NondegeneracyVerdict("yes")
    for members, w in diagram(f).faces:
        poly = QuasiPolynomial({e: f.terms[e] for e in members}, f.variables)
        if poly.has_generic():
            verdict.assumed_generic = True
            verdict.notes.append(f"face {poly} has generic coefficients; assumed non-degenerate")
            continue
        if torus_singular(poly):
            return NondegeneracyVerdict("no", witness=poly,
                                        notes=[f"face {poly} is singular on the torus"])
    return verdict
