"""Three independent routes to the genus of a quasi-smooth curve.

Run with ``python demos/genus_routes.py``.
"""
from terminal_divisors.curves import (CurveModel, NotApplicable, genus_cover, genus_newton,
                                      genus_quasismooth)
from terminal_divisors.qpoly import QuasiPolynomial

CURVES = [
    # a double cover of P^1 branched in six points
    ("x^2 + y^6 + z^6", (3, 1, 1)),
    # the base curve of the genus 3 divisor over a cE/2 point
    ("x^3 + y^4 + z^12", (4, 3, 1)),
    # a plane quartic
    ("x^4 + y^4 + z^4 + x*y*z^2", (1, 1, 1)),
    # a curve with two singular points of P(1,2,3)
    ("x^6 + y^3 + z^2", (1, 2, 3)),
]

for text, weights in CURVES:
    curve = CurveModel(QuasiPolynomial.parse(text, "xyz"), weights)
    print(f"{text} in P{weights}")
    for route in (genus_cover, genus_newton, genus_quasismooth):
        try:
            print(f"  {route.__name__:<18} genus {route(curve).genus}")
        except NotApplicable as exc:
            print(f"  {route.__name__:<18} not applicable: {exc}")
