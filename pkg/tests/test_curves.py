from math import gcd, lcm

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from terminal_divisors.curves import (CurveModel, NotApplicable, degree_zero_lattice, genus_cover,
                                      genus_newton, genus_quasismooth, interior_points,
                                      is_quasismooth, monomials_of_degree, well_formed)
from terminal_divisors.divisor import curve_genus
from terminal_divisors.qpoly import QuasiPolynomial

VARS = ("v", "s", "t")


def curve(text, weights, order=1, residues=(0, 0, 0)):
    return CurveModel(QuasiPolynomial.parse(text, VARS), weights, order, residues)


ROUTES = (genus_cover, genus_newton, genus_quasismooth)


def applicable(c):
    out = {}
    for route in ROUTES:
        try:
            out[route.__name__] = route(c).genus
        except NotApplicable:
            pass
    return out


@pytest.mark.parametrize("text, weights, order, residues, genus", [
    ("v^2 + s^18 + t^9", (9, 1, 2), 1, (0, 0, 0), 4),
    ("v^2 + s^4 + t^12", (6, 3, 1), 1, (0, 0, 0), 1),
    ("v^3 + s^4 + t^12", (4, 3, 1), 1, (0, 0, 0), 3),
    ("v^2 + s^18 + s^6*t^6", (9, 1, 2), 1, (0, 0, 0), 2),
    ("v^2 + s^6*t^6 + t^15", (15, 3, 2), 1, (0, 0, 0), 1),
    ("v^2 + t^12 + t^6*s^6", (6, 1, 1), 2, (1, 1, 0), 1),
    ("v^2 + t^12 + t^6*s^6", (6, 1, 1), 1, (0, 0, 0), 2),
    ("v^2 + s^6 + t^6", (3, 1, 1), 1, (0, 0, 0), 2),
    ("v^3 + s^3 + t^3", (1, 1, 1), 1, (0, 0, 0), 1),
])
def test_known_genera_on_every_route(text, weights, order, residues, genus):
    c = curve(text, weights, order, residues)
    found = applicable(c)
    assert found, "no route applies"
    assert set(found.values()) == {genus}
    assert curve_genus(c).genus == genus


def test_non_quasihomogeneous_is_rejected():
    with pytest.raises(ValueError):
        curve("v^2 + s^2*t + t^12", (6, 1, 1)).degree


def test_hyperelliptic_flag_and_components():
    r = genus_cover(curve("v^2 + s^6 + t^6", (3, 1, 1)))
    assert r.hyperelliptic and r.components == 1
    split = genus_cover(curve("v^2 - s^2*t^4", (3, 1, 1)))
    assert split.components == 2 and split.genus == 0


def test_non_hyperelliptic_genus_three():
    r = genus_cover(curve("v^3 + s^4 + t^12", (4, 3, 1)))
    assert r.genus == 3 and r.hyperelliptic is False


def test_monomials_and_wellforming():
    assert sorted(monomials_of_degree((1, 1, 1), 2)) == sorted(
        [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)])
    c = well_formed(curve("v^2 + s^4 + t^12", (6, 3, 1)))
    assert all(gcd(*[w for j, w in enumerate(c.weights) if j != i]) == 1 for i in range(3))


def test_quasismooth_checks():
    assert is_quasismooth(curve("v^2 + s^6 + t^6", (3, 1, 1)))
    assert not is_quasismooth(curve("v^2 + s^3*t^3", (3, 1, 1)))


def test_interior_points_of_triangle():
    assert interior_points([(0, 0), (4, 0), (0, 4)]) == 3
    assert interior_points([(0, 0), (2, 0), (0, 2)]) == 0


def test_degree_zero_lattice_index():
    basis = degree_zero_lattice((1, 1, 1))
    assert len(basis) == 2
    for b in basis:
        assert sum(b) == 0


# -- properties against classical formulas -----------------------------------------

def square_free_form(coeffs):
    s, t = sympy.symbols("s t")
    return sum(c * s ** i * t ** (len(coeffs) - 1 - i) for i, c in enumerate(coeffs)), s, t


def distinct_branch_points(coeffs):
    """Count distinct zeros of the binary form on P^1 by numerical roots."""
    deg = len(coeffs) - 1
    x = sympy.symbols("x")
    poly = sympy.Poly(sum(c * x ** i for i, c in enumerate(coeffs)), x)
    at_infinity = deg - poly.degree()
    roots = sympy.Poly(poly, x).nroots(n=30) if poly.degree() > 0 else []
    distinct = []
    for r in roots:
        if all(abs(r - q) > 1e-12 for q in distinct):
            distinct.append(r)
    return len(distinct) + (1 if at_infinity else 0)


def binary_curve(coeffs, p):
    """v^p = sum c_i s^i t^(d-i) in P(d/p, 1, 1)."""
    d = len(coeffs) - 1
    terms = {(p, 0, 0): -1}
    terms.update({(0, i, d - i): c for i, c in enumerate(coeffs) if c})
    return CurveModel(QuasiPolynomial(terms, VARS), (d // p, 1, 1))


coeff_lists = st.integers(1, 6).flatmap(
    lambda k: st.lists(st.integers(-4, 4), min_size=2 * k + 3, max_size=2 * k + 3))


@settings(max_examples=15, deadline=None)
@given(coeff_lists)
def test_double_cover_genus_matches_branch_count(coeffs):
    assume(coeffs[0] != 0 and coeffs[-1] != 0)
    expr, s, t = square_free_form(coeffs)
    assume(sympy.discriminant(expr.subs(t, 1), s) != 0)
    branch = distinct_branch_points(coeffs)
    assert branch == len(coeffs) - 1
    c = binary_curve(coeffs, 2)
    assert genus_cover(c).genus == (branch - 2) // 2


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(1, 2), st.data())
def test_superelliptic_genus(p, mult, data):
    d = p * mult
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=d + 1, max_size=d + 1))
    assume(coeffs[0] != 0 and coeffs[-1] != 0)
    expr, s, t = square_free_form(coeffs)
    assume(sympy.discriminant(expr.subs(t, 1), s) != 0)
    c = binary_curve(coeffs, p)
    assert genus_cover(c).genus == (p - 1) * (d - 2) // 2


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(2, 7), st.integers(2, 7))
def test_fermat_type_curves_agree_across_routes(a, b, c):
    L = lcm(a, b, c)
    weights = (L // a, L // b, L // c)
    g = gcd(*weights)
    weights = tuple(w // g for w in weights)
    cv = CurveModel(QuasiPolynomial({(a, 0, 0): 1, (0, b, 0): 1, (0, 0, c): 1}, VARS), weights)
    found = applicable(cv)
    assert len(found) >= 2
    assert len(set(found.values())) == 1
