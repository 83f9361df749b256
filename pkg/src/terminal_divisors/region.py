"""Lattice points of ``N'`` inside a polytope given by linear constraints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Sequence

from . import _lp
from .lattice import FractionalLattice, as_fraction

OPS = ("<=", "<", "==", ">=", ">")


@dataclass(frozen=True)
class Constraint:
    """``<coeffs, w> op rhs``."""

    coeffs: tuple
    op: str
    rhs: Fraction

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown comparison {self.op}")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))

    def holds(self, w) -> bool:
        lhs = sum((c * as_fraction(x) for c, x in zip(self.coeffs, w)), Fraction(0))
        return {"<=": lhs <= self.rhs, "<": lhs < self.rhs, "==": lhs == self.rhs,
                ">=": lhs >= self.rhs, ">": lhs > self.rhs}[self.op]

    def as_upper(self):
        """Non-strict ``<=`` rows describing the closure."""
        c, r = list(self.coeffs), self.rhs
        if self.op in ("<=", "<"):
            return [(c, r)]
        if self.op in (">=", ">"):
            return [([-x for x in c], -r)]
        return [(c, r), ([-x for x in c], -r)]


def le(coeffs, rhs):
    return Constraint(tuple(coeffs), "<=", rhs)


def discrepancy_constraint(v):
    """``a <= 1`` at the monomial ``v``: ``<w, 1 - v> <= 2``."""
    return le([1 - x for x in v], 2)


def upper_bounds(constraints: Sequence[Constraint], n: int = 4) -> tuple[Fraction, ...]:
    """Exact maxima of each coordinate over the closure of the region.

    Raises ValueError when the region is unbounded in some direction.
    """
    rows = [r for c in constraints for r in c.as_upper()]
    A = [r[0] for r in rows]
    b = [r[1] for r in rows]
    out = []
    for i in range(n):
        obj = [int(j == i) for j in range(n)]
        try:
            value, _ = _lp.maximize(obj, A, b)
        except _lp.Unbounded:
            raise ValueError(f"region is unbounded in coordinate {i + 1}") from None
        except _lp.Infeasible:
            return tuple(Fraction(0) for _ in range(n))
        out.append(value)
    return tuple(out)


def _scaled(constraint: Constraint, m: int):
    den = lcm(*(c.denominator for c in constraint.coeffs), constraint.rhs.denominator)
    coeffs = [int(c * den) for c in constraint.coeffs]
    return coeffs, constraint.op, int(constraint.rhs * den * m)


def _interval(lo, hi, coeff, op, rhs):
    """Intersect ``[lo, hi]`` with ``{t : coeff * t op rhs}`` (integers)."""
    if coeff == 0:
        ok = {"<=": 0 <= rhs, "<": 0 < rhs, "==": rhs == 0, ">=": 0 >= rhs, ">": 0 > rhs}[op]
        return (lo, hi) if ok else (1, 0)
    if coeff < 0:
        coeff, rhs = -coeff, -rhs
        op = {"<=": ">=", "<": ">", "==": "==", ">=": "<=", ">": "<"}[op]
    if op == "<=":
        return lo, min(hi, rhs // coeff)
    if op == "<":
        return lo, min(hi, (rhs - 1) // coeff)
    if op == ">=":
        return max(lo, -(-rhs // coeff)), hi
    if op == ">":
        return max(lo, rhs // coeff + 1), hi
    if rhs % coeff:
        return 1, 0
    t = rhs // coeff
    return max(lo, t), min(hi, t)


def lattice_points(lattice: FractionalLattice, constraints: Sequence[Constraint], bounds=None):
    """Scaled points ``W = m * w`` of the lattice with every ``w_i > 0`` in the region.

    Yields integer 4-tuples; divide by ``lattice.m`` to get weights.
    """
    m = lattice.m
    bounds = bounds or upper_bounds(constraints, lattice.dimension)
    caps = [floor(b * m) for b in bounds]
    rows = [_scaled(c, m) for c in constraints]
    for k in range(lattice.order()):
        res = [k * a % m for a in lattice.residues]
        first = [r if r > 0 else m for r in res]
        yield from _walk(rows, caps, res, first, m)


def _walk(rows, caps, res, first, m):
    n = len(caps)
    ranges = [range(first[i], caps[i] + 1, m) for i in range(1, n)]

    def rec(i, tail):
        if i == n:
            lo, hi = first[0], caps[0]
            for coeffs, op, rhs in rows:
                rest = sum(c * t for c, t in zip(coeffs[1:], tail))
                lo, hi = _interval(lo, hi, coeffs[0], op, rhs - rest)
                if lo > hi:
                    return
            # align to residue class
            start = lo + ((res[0] - lo) % m)
            for w1 in range(start, hi + 1, m):
                yield (w1,) + tuple(tail)
            return
        for t in ranges[i - 1]:
            yield from rec(i + 1, tail + [t])

    yield from rec(1, [])
