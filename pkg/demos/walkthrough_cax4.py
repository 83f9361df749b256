"""Walk through one cAx/4 point from equation to census.

Run with ``python demos/walkthrough_cax4.py``.
"""
from terminal_divisors.analysis import analyze
from terminal_divisors.blowup import enumeration_region
from terminal_divisors.classify import action_for, classify
from terminal_divisors.qpoly import QuasiPolynomial

# The equation lives in C^4 with coordinates x, y, z, u; the group is mu_4
# acting with residues (1, 3, 1, 2).
phi = QuasiPolynomial.parse("x^2 + y^2 + z^18 + z^6*u^6 + u^15")
inst = classify(phi, action_for("cAx/4"))
print(f"type {inst.tag}, parameters {inst.params}")

# Every candidate weight satisfies one linear inequality per vertex of the
# Newton polyhedron.  Their maxima give the box the scan runs over.
constraints, bound = enumeration_region(phi)
print(f"{len(constraints)} vertex constraints, box bound {[str(b) for b in bound]}")

an = analyze(inst)
print(f"{len(an.reports)} divisors with discrepancy at most 1:")
for r in an.reports:
    c = r.candidate
    genus = "-" if r.genus is None else r.genus
    print(f"  {c.label:<16} a = {str(c.discrepancy):<4} {r.label or '':<4} "
          f"{r.verdict:<16} genus {genus}")

# Only cones over positive-genus curves are non-rational.  Their count is
# checked against the most the type allows.
print(f"non-rational: {an.nonrational_count}, check: {an.theorem_check}")
for flag in an.flags:
    print(f"flag: {flag}")
