"""Geometric genus of curves in weighted projective planes.

Three independent routes:

* :func:`genus_cover` treats ``v^p + h(s, t)`` as a cyclic cover of the
  projective line and applies Riemann-Hurwitz.  It works for singular curves
  and for quotients by a diagonal cyclic group, because both only change the
  lattice of degree-0 monomials.
* :func:`genus_quasismooth` counts monomials of degree ``d - a - b - c``.
* :func:`genus_newton` counts interior points of the Newton polygon of the
  curve restricted to its torus (valid when that restriction is
  non-degenerate).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

import sympy
from sympy import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.rings import ring

from .binary import polynomial_roots
from .lattice import integer_kernel
from .qpoly import QuasiPolynomial, is_generic, monomial_weight


class NotApplicable(ValueError):
    """The curve is outside the fragment a genus routine handles."""


@dataclass(frozen=True)
class CurveModel:
    """``{equation = 0}`` in ``P(weights)``, optionally modulo a cyclic group
    of order ``group_order`` acting with ``group_residues``."""

    equation: QuasiPolynomial
    weights: tuple[int, int, int]
    group_order: int = 1
    group_residues: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        if self.equation.nvars != 3 or len(self.weights) != 3:
            raise ValueError("a plane curve needs three coordinates")
        if min(self.weights) <= 0:
            raise ValueError("weights must be positive")

    @property
    def degree(self) -> int:
        levels = {monomial_weight(self.weights, e) for e in self.equation.terms}
        if len(levels) != 1:
            raise ValueError("equation is not quasi-homogeneous")
        return int(levels.pop())

    @property
    def quotient(self) -> bool:
        return self.group_order > 1


@dataclass
class GenusResult:
    genus: int
    components: int = 1
    method: str = ""
    hyperelliptic: bool = False
    assumptions: list = field(default_factory=list)


# -- cyclic covers ------------------------------------------------------------

@dataclass(frozen=True)
class CoverForm:
    """``v^p = R`` where ``v`` is coordinate ``index`` and ``rest`` the two
    remaining coordinates; ``h`` maps (exponent of rest[0], rest[1]) to the
    coefficient of ``-h/c_v``."""

    index: int
    power: int
    weights: tuple[int, int, int]
    residues: tuple[int, int, int]
    h: dict


def cover_form(curve: CurveModel) -> CoverForm:
    """Find a coordinate entering as a pure power ``v^p`` only, or complete
    the square when the equation is quadratic in some coordinate."""
    F = curve.equation
    for i in range(3):
        pure = [e for e in F.terms if e[i]]
        if len(pure) == 1 and all(k == 0 for j, k in enumerate(pure[0]) if j != i) and pure[0][i] >= 2:
            cv = F.terms[pure[0]]
            rest = [j for j in range(3) if j != i]
            h = {(e[rest[0]], e[rest[1]]): _neg_ratio(c, cv) for e, c in F.terms.items() if e != pure[0]}
            if not h:
                raise NotApplicable("equation is a single power; the curve is non-reduced")
            return CoverForm(i, pure[0][i], curve.weights, curve.group_residues, h)
    for i in range(3):
        if max(e[i] for e in F.terms) == 2:
            return _complete_square(curve, i)
    raise NotApplicable("no coordinate enters as a pure power or quadratically")


def _neg_ratio(c, cv):
    if is_generic(c) or is_generic(cv):
        return -c if not is_generic(cv) else (c * -1 if is_generic(c) else -1 * cv)
    return -c / cv


def _complete_square(curve: CurveModel, i: int) -> CoverForm:
    F = curve.equation
    rest = [j for j in range(3) if j != i]
    parts = {0: {}, 1: {}, 2: {}}
    for e, c in F.terms.items():
        parts[e[i]][(e[rest[0]], e[rest[1]])] = c
    A, B, C = (QuasiPolynomial(parts[k], ("s", "t")) for k in (2, 1, 0))
    if A.is_zero():
        raise NotApplicable("no square term")
    D = B * B - A * C * 4
    if D.is_zero():
        raise NotApplicable("discriminant vanishes: the curve is a double curve")
    a_v = curve.weights[i]
    deg = curve.degree
    new_w = list(curve.weights)
    new_w[i] = deg - a_v
    res = list(curve.group_residues)
    if curve.group_order > 1:
        a_exp = next(iter(A.terms))
        res[i] = (res[i] + a_exp[0] * res[rest[0]] + a_exp[1] * res[rest[1]]) % curve.group_order
    return CoverForm(i, 2, tuple(new_w), tuple(res), dict(D.terms))


def _ext_gcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def degree_zero_lattice(weights, residues=(0, 0, 0), order=1):
    """Basis of ``{m : <weights, m> = 0, <residues, m> = 0 mod order}``."""
    m1, m2 = integer_kernel(list(weights))
    if order == 1:
        return m1, m2
    chi = [sum(r * x for r, x in zip(residues, m)) % order for m in (m1, m2)]
    k1, k2 = integer_kernel([chi[0], chi[1], order])
    out = []
    for p, q, _ in (k1, k2):
        out.append(tuple(p * a + q * b for a, b in zip(m1, m2)))
    return tuple(out)


def _adapted_basis(l1, l2, index):
    """Basis ``(u1, u2)`` with ``u2[index] = 0`` and ``u1[index] > 0`` minimal."""
    a1, a2 = l1[index], l2[index]
    g, s, t = _ext_gcd(a1, a2)
    if g == 0:
        raise NotApplicable("cover coordinate does not occur in the function field")
    u1 = tuple(s * x + t * y for x, y in zip(l1, l2))
    u2 = tuple((a2 // g) * x - (a1 // g) * y for x, y in zip(l1, l2))
    return u1, u2


def kummer_data(form: CoverForm, order: int = 1):
    """Reduce the curve to ``Y^e = c * T^k0 * H(T)`` on a degree-0 torus.

    Returns ``(e, {k: coefficient})`` describing ``Y^e = sum c_k T^k``.
    """
    l1, l2 = degree_zero_lattice(form.weights, form.residues, order)
    u1, u2 = _adapted_basis(l1, l2, form.index)
    step = u1[form.index]
    if form.power % step:
        raise NotApplicable("equation is not invariant under the group")
    e = form.power // step
    rest = [j for j in range(3) if j != form.index]
    ks = {}
    for (j, k), c in form.h.items():
        mu = [0, 0, 0]
        mu[form.index] = -form.power
        mu[rest[0]], mu[rest[1]] = j, k
        diff = [a + e * b for a, b in zip(mu, u1)]
        pivot = next(i for i in range(3) if u2[i])
        kk, rem = divmod(diff[pivot], u2[pivot])
        if rem or any(d != kk * b for d, b in zip(diff, u2)):
            raise NotApplicable("equation is not semi-invariant under the group")
        ks[kk] = c
    return e, ks


def genus_cover(curve: CurveModel) -> GenusResult:
    """Genus of the normalisation of each component via Riemann-Hurwitz."""
    form = cover_form(curve)
    e, ks = kummer_data(form, curve.group_order)
    k0 = min(ks)
    top = max(ks)
    coeffs = [ks.get(k, Fraction(0)) for k in range(k0, top + 1)]
    roots = polynomial_roots(coeffs)
    deg = top - k0
    d = gcd(e, k0, *[mult for _, mult in roots])
    n = e // d
    points = [(1, k0 // d), (1, -(k0 + deg) // d)] + [(cnt, mult // d) for cnt, mult in roots]
    total = sum(cnt * (n - gcd(n, ordp)) for cnt, ordp in points)
    twice = total - 2 * n + 2
    if twice % 2:
        raise ArithmeticError("Riemann-Hurwitz produced a non-integral genus")
    result = GenusResult(twice // 2, d, "cyclic cover", hyperelliptic=(n == 2))
    if any(is_generic(x) for x in coeffs):
        result.assumptions.append("generic coefficients: roots assumed simple")
    return result


# -- adjunction ---------------------------------------------------------------

def monomials_of_degree(weights, degree):
    """All exponent vectors ``e >= 0`` with ``<weights, e> = degree``."""
    if degree < 0:
        return []
    a, b, c = weights
    out = []
    for i in range(degree // a + 1):
        for j in range((degree - a * i) // b + 1):
            r = degree - a * i - b * j
            if r % c == 0:
                out.append((i, j, r // c))
    return out


def well_formed(curve: CurveModel) -> CurveModel:
    """Rewrite the curve in a well-formed weighted plane.

    If ``q = gcd`` of two weights is coprime to the third weight, every
    monomial has the third exponent divisible by ``q`` and we substitute
    ``V = v^q``.
    """
    if curve.quotient:
        raise NotApplicable("well-forming is only done for curves without a group")
    F, w = curve.equation, list(curve.weights)
    common = gcd(*w)
    w = [x // common for x in w]
    changed = True
    while changed:
        changed = False
        for i in range(3):
            j, k = [x for x in range(3) if x != i]
            q = gcd(w[j], w[k])
            if q > 1:
                if any(e[i] % q for e in F.terms):
                    raise NotApplicable("curve is not quasi-smooth in a non-well-formed plane")
                F = QuasiPolynomial({tuple(x // q if t == i else x for t, x in enumerate(e)): c
                                     for e, c in F.terms.items()}, F.variables)
                w = [w[t] if t == i else w[t] // q for t in range(3)]
                common = gcd(*w)
                w = [x // common for x in w]
                changed = True
    return CurveModel(F, tuple(w))


def is_quasismooth(curve: CurveModel) -> bool:
    """Affine cone smooth away from the origin (exact, via Groebner bases)."""
    F = curve.equation
    if F.has_generic():
        return fletcher_quasismooth(F)
    return cone_smooth(F)


def cone_smooth(F: QuasiPolynomial) -> bool:
    """No common zero of the partials of ``F`` on any coordinate stratum
    of affine space minus the origin, decided by Groebner bases over Q."""
    n = F.nvars
    R, *gens = ring(f"x0:{n},t", QQ)
    f = R.from_dict({e + (0,): QQ(c.numerator, c.denominator) for e, c in F.terms.items()})
    grads = [f.diff(g) for g in gens[:n]]
    for r in range(1, n + 1):
        for alive in combinations(range(n), r):
            dead = [i for i in range(n) if i not in alive]
            eqs = [q for q in (_restrict(g, dead) for g in grads) if q]
            if not eqs:
                return False
            live = R.from_dict({tuple(int(i in alive) for i in range(n)) + (0,): 1})
            if groebner(eqs + [R.one - gens[n] * live], R) != [R.one]:
                return False
    return True


def _restrict(g, dead):
    """``g`` with the coordinates in ``dead`` set to zero."""
    return g.ring.from_dict({m: c for m, c in g.items() if all(m[i] == 0 for i in dead)})


def fletcher_quasismooth(F: QuasiPolynomial) -> bool:
    """Support-level quasi-smoothness test for general coefficients."""
    n = F.nvars
    support = list(F.terms)
    for r in range(1, n + 1):
        for I in combinations(range(n), r):
            if any(all(e[j] == 0 for j in range(n) if j not in I) for e in support):
                continue
            extra = set()
            for e in support:
                outside = [j for j in range(n) if j not in I and e[j]]
                if len(outside) == 1 and e[outside[0]] == 1:
                    extra.add(outside[0])
            if len(extra) < len(I):
                return False
    return True


def genus_quasismooth(curve: CurveModel) -> GenusResult:
    """Adjunction: ``g = #{monomials of degree d - sum(weights)}``."""
    if curve.quotient:
        raise NotApplicable("adjunction count is for curves without a group action")
    wf = well_formed(curve)
    if not is_quasismooth(wf):
        raise NotApplicable("curve is not quasi-smooth")
    d = wf.degree
    g = len(monomials_of_degree(wf.weights, d - sum(wf.weights)))
    return GenusResult(g, 1, "adjunction")


# -- Newton polygon -----------------------------------------------------------

def _torus_points(curve: CurveModel):
    """Exponents of ``F / m0`` in coordinates of the degree-0 (invariant) lattice."""
    l1, l2 = degree_zero_lattice(curve.weights, curve.group_residues, curve.group_order)
    base = next(iter(curve.equation.terms))
    M = sympy.Matrix([l1, l2]).T
    pts = {}
    for e, c in curve.equation.terms.items():
        diff = sympy.Matrix([a - b for a, b in zip(e, base)])
        sol, params = M.gauss_jordan_solve(diff)
        if params.shape[0] or any(not x.is_integer for x in sol):
            raise NotApplicable("equation is not semi-invariant under the group")
        pts[(int(sol[0]), int(sol[1]))] = c
    return pts


def _polygon(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def interior_points(hull) -> int:
    """Pick's theorem on a lattice polygon given counter-clockwise."""
    if len(hull) < 3:
        return 0
    area2 = abs(sum(hull[i][0] * hull[i - 1][1] - hull[i - 1][0] * hull[i][1] for i in range(len(hull))))
    boundary = sum(gcd(abs(hull[i][0] - hull[i - 1][0]), abs(hull[i][1] - hull[i - 1][1]))
                   for i in range(len(hull)))
    return (area2 - boundary + 2) // 2


def genus_newton(curve: CurveModel) -> GenusResult:
    pts = _torus_points(curve)
    hull = _polygon(list(pts))
    if len(hull) < 3:
        raise NotApplicable("Newton polygon is degenerate; components are rational")
    result = GenusResult(interior_points(hull), 1, "Newton polygon")
    if any(is_generic(c) for c in pts.values()):
        result.assumptions.append("generic coefficients: assumed non-degenerate")
        return result
    if not _polygon_nondegenerate(pts, hull):
        raise NotApplicable("curve is degenerate for its Newton polygon")
    return result


def _polygon_nondegenerate(pts, hull) -> bool:
    X, Y, t = sympy.symbols("X Y t")
    mi, mj = min(p[0] for p in pts), min(p[1] for p in pts)

    def build(subset):
        return sum(sympy.Rational(pts[p].numerator, pts[p].denominator) * X ** (p[0] - mi) * Y ** (p[1] - mj)
                   for p in subset)

    def singular(expr):
        eqs = [expr, sympy.diff(expr, X), sympy.diff(expr, Y), 1 - t * X * Y]
        basis = sympy.groebner(eqs, X, Y, t, order="grevlex", domain="QQ")
        return not (len(basis.exprs) == 1 and basis.exprs[0] == 1)

    for i in range(len(hull)):
        a, b = hull[i - 1], hull[i]
        on_edge = [p for p in pts if (b[0] - a[0]) * (p[1] - a[1]) == (b[1] - a[1]) * (p[0] - a[0])
                   and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])]
        if len(on_edge) > 2 and singular(build(on_edge)):
            return False
    return not singular(build(list(pts)))
