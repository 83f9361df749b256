"""Quasi-homogeneous binary forms.

A form ``h(s, t)`` whose monomials all have the same weighted degree for
weights ``(b, c)`` is, up to a monomial, a polynomial in the single degree-0
monomial ``T = s^(c/g) / t^(b/g)`` with ``g = gcd(b, c)``.  All the
structure the genus computations need (root multiplicities, the orders at
``s = 0`` and ``t = 0``) is read off from that polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy

from .qpoly import QuasiPolynomial, is_generic

_T = sympy.Symbol("T")


@dataclass(frozen=True)
class BinaryForm:
    terms: dict                  # (i, j) -> coefficient
    weights: tuple[int, int] | None = None

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) <= 1

    def has_generic(self) -> bool:
        return any(is_generic(c) for c in self.terms.values())


def binary_form_from(p: QuasiPolynomial, pair) -> BinaryForm:
    pair = tuple(pair)
    if len(pair) == 1:
        pair = (pair[0], next(i for i in range(p.nvars) if i != pair[0]))
    terms = {}
    for e, c in p.terms.items():
        if any(k for i, k in enumerate(e) if i not in pair):
            raise ValueError("polynomial involves more than two variables")
        terms[(e[pair[0]], e[pair[1]])] = c
    return BinaryForm(terms)


@dataclass(frozen=True)
class Dehomogenized:
    """``h = s^alpha t^beta * H(T)`` with ``H(0) != 0``; ``step`` is the
    exponent shift ``(c', -b')`` between consecutive powers of ``T``."""

    alpha: int
    beta: int
    step: tuple[int, int]
    coeffs: tuple            # H = sum coeffs[k] T^k

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def poly(self):
        return sympy.Poly([_sym(c) for c in reversed(self.coeffs)], _T, domain="QQ")


def _sym(c):
    return sympy.Rational(c.numerator, c.denominator)


def dehomogenize(form: BinaryForm) -> Dehomogenized:
    pts = sorted(form.terms)
    if len(pts) == 1:
        (i, j), = pts
        return Dehomogenized(i, j, (1, 0), (form.terms[pts[0]],))
    i0, j0 = pts[0]
    di, dj = pts[-1][0] - i0, pts[-1][1] - j0
    g = gcd(di, dj)
    step = (di // g, dj // g)
    coeffs = [Fraction(0)] * (g + 1)
    alpha, beta = i0, j0
    for (i, j), c in form.terms.items():
        k, rem = divmod(i - i0, step[0]) if step[0] else (0, 1)
        if rem or (j - j0) != k * step[1]:
            raise ValueError("form is not quasi-homogeneous")
        coeffs[k] = c
    return Dehomogenized(alpha, j0 + g * step[1], step, tuple(coeffs))


def root_structure(form: BinaryForm):
    """Multiplicities of the roots of ``H`` as ``[(count, multiplicity)]``.

    Exact square-free decomposition over Q; only counts are returned since
    the genus never needs the roots themselves.  Generic forms are treated
    as having simple roots.
    """
    d = dehomogenize(form)
    return polynomial_roots(d.coeffs)


def polynomial_roots(coeffs):
    """``[(count, multiplicity)]`` for the nonzero roots of ``sum c_k T^k``
    (``coeffs[0]`` must be nonzero)."""
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    if any(is_generic(c) for c in coeffs):
        return [(degree, 1)]
    _, factors = sympy.sqf_list(sympy.Poly([_sym(c) for c in reversed(coeffs)], _T, domain="QQ"))
    out = {}
    for fac, mult in factors:
        deg = sympy.Poly(fac, _T).degree()
        if deg:
            out[mult] = out.get(mult, 0) + deg
    return sorted((cnt, mult) for mult, cnt in out.items())


def has_repeated_torus_root(form: BinaryForm) -> bool:
    return any(mult > 1 for _, mult in root_structure(form))
