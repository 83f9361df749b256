"""Fractional weight lattices ``Z^4 + (1/m)(a_1, ..., a_4) Z``.

Everything here is exact: weights are :class:`fractions.Fraction` and
index computations go through an integer Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from sympy import factorint


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE"):
            raise ValueError(f"non-exact literal {value!r}; write it as p/q")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


# -- integer normal forms ---------------------------------------------------

def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U * A * V = D`` diagonal.

    ``U`` and ``V`` are unimodular; the diagonal entries are non-negative and
    each divides the next.  Matrices are lists of lists of Python ints.
    """
    A = [list(map(int, row)) for row in matrix]
    rows, cols = len(A), len(A[0]) if A else 0
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, src, dst, k):
        M[dst] = [d + k * s for d, s in zip(M[dst], M[src])]

    def add_col(M, src, dst, k):
        for row in M:
            row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivots = [(abs(A[i][j]), i, j) for i in range(t, rows)
                      for j in range(t, cols) if A[i][j]]
            if not pivots:
                return _finish_snf(A, U, V)
            _, pi, pj = min(pivots)
            swap_rows(A, t, pi)
            swap_rows(U, t, pi)
            swap_cols(A, t, pj)
            swap_cols(V, t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    add_row(A, t, i, -q)
                    add_row(U, t, i, -q)
                clean &= A[i][t] == 0
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    add_col(A, t, j, -q)
                    add_col(V, t, j, -q)
                clean &= A[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(A, bad[0], t, 1)
            add_row(U, bad[0], t, 1)
    return _finish_snf(A, U, V)


def _finish_snf(A, U, V):
    for t in range(min(len(A), len(A[0]) if A else 0)):
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return A, U, V


def elementary_divisors(matrix) -> list[int]:
    D, _, _ = smith_normal_form(matrix)
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def integer_kernel(row: Sequence[int]) -> list[tuple[int, ...]]:
    """Basis of ``{v in Z^n : <row, v> = 0}``."""
    _, _, V = smith_normal_form([list(row)])
    n = len(row)
    nonzero = 1 if any(row) else 0
    return [tuple(V[i][j] for i in range(n)) for j in range(nonzero, n)]


# -- lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class FractionalLattice:
    """The lattice ``Z^n + (1/m)(a_1, ..., a_n) Z``."""

    m: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("lattice index m must be positive")
        object.__setattr__(self, "residues",
                           tuple(int(a) % self.m for a in self.residues))

    @property
    def dimension(self) -> int:
        return len(self.residues)

    @property
    def generator(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.m) for a in self.residues)

    def order(self) -> int:
        """Order of the generator in ``N'/Z^n``."""
        g = gcd(self.m, *self.residues)
        return self.m // g

    def step(self, w: Sequence) -> int | None:
        """The ``k`` with ``w = k * generator (mod Z^n)``, or None."""
        w = [as_fraction(x) for x in w]
        if len(w) != self.dimension:
            raise ValueError("dimension mismatch")
        if any(self.m % x.denominator for x in w):
            return None
        scaled = [int(x * self.m) % self.m for x in w]
        for k in range(self.order()):
            if all((k * a - s) % self.m == 0 for a, s in zip(self.residues, scaled)):
                return k
        return None

    def __contains__(self, w) -> bool:
        return self.step(w) is not None

    def points(self, bounds: Sequence[tuple[Fraction, Fraction]]):
        """All lattice points in a box, ``lo <= w_i <= hi``."""
        for k in range(self.order()):
            shift = [Fraction(k * a % self.m, self.m) for a in self.residues]
            ranges = []
            for (lo, hi), s in zip(bounds, shift):
                first = -((s - lo) // 1)  # ceil(lo - s)
                last = (hi - s) // 1
                ranges.append([s + i for i in range(int(first), int(last) + 1)])
            yield from _product(ranges)


def _product(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _product(ranges[1:]):
            yield (head, *tail)


def is_member(w: Sequence, lattice: FractionalLattice) -> bool:
    return w in lattice


def _check_member(w, lattice):
    if w not in lattice:
        raise ValueError(f"{format_weight(w)} is not in the lattice")
    if not any(as_fraction(x) for x in w):
        raise ValueError("the zero vector has no primitive direction")


def is_primitive(w: Sequence, lattice: FractionalLattice) -> bool:
    """True iff no ``w/d`` with ``d >= 2`` lies in the lattice."""
    _check_member(w, lattice)
    scaled = [int(as_fraction(x) * lattice.m) for x in w]
    content = gcd(*scaled)
    for p in factorint(content):
        if [Fraction(x) / p for x in w] in lattice:
            return False
    return True


def _generator_matrix(w, lattice):
    m = lattice.m
    rows = [[m * int(i == j) for j in range(lattice.dimension)]
            for i in range(lattice.dimension)]
    return rows, [int(as_fraction(x) * m) for x in w]


def sublattice_index(w: Sequence, lattice: FractionalLattice) -> int:
    """``[N' : N'']`` where ``N''`` is spanned by ``w`` and the unit vectors.

    Index 1 means ``w`` defines an honest weighted blowup, larger values a
    pseudo blowup whose exceptional divisor is a quotient by a cyclic group
    of that order.
    """
    _check_member(w, lattice)
    unit_rows, w_row = _generator_matrix(w, lattice)
    outer = unit_rows + [list(lattice.residues)]
    inner = unit_rows + [w_row]
    vol = lambda rows: _product_of(elementary_divisors(rows))
    return vol(inner) // vol(outer)


def _product_of(values):
    out = 1
    for v in values:
        out *= v
    return out


@dataclass(frozen=True)
class CyclicGroupAction:
    """A cyclic group of order ``order`` scaling coordinate ``i`` by
    ``exp(2 pi i residues[i] / order)``."""

    order: int
    residues: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.order == 1


def quotient_group_action(w: Sequence, lattice: FractionalLattice) -> CyclicGroupAction:
    """The group ``N'/N''`` acting on the homogeneous coordinates of ``P(w)``.

    The image of the lattice generator ``a/m`` generates ``N'/N''``.  If
    ``g * a/m = z + s * w`` with ``z`` integral, then ``a/m - (s/g) w = z/g``
    and the generator acts on ``P(w)`` with residues ``z mod g``.
    """
    g = sublattice_index(w, lattice)
    n = lattice.dimension
    if g == 1:
        return CyclicGroupAction(1, (0,) * n)
    w = [as_fraction(x) for x in w]
    gen = lattice.generator
    den = lcm(*(x.denominator for x in w))
    for s in range(den * lattice.m):
        z = [g * a - s * x for a, x in zip(gen, w)]
        if all(v.denominator == 1 for v in z):
            return CyclicGroupAction(g, tuple(int(v) % g for v in z))
    raise ArithmeticError("quotient group is not generated by the lattice generator")


def weight_from_scaled(numerators: Iterable[int], m: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, m) for x in numerators)


def format_weight(w: Sequence) -> str:
    """``1/4(9,11,1,2)`` style, or ``(2,2,1,3)`` when integral."""
    w = [as_fraction(x) for x in w]
    den = lcm(*(x.denominator for x in w))
    nums = ",".join(str(int(x * den)) for x in w)
    return f"({nums})" if den == 1 else f"1/{den}({nums})"


def parse_weight(text: str) -> tuple[Fraction, ...]:
    """Inverse of :func:`format_weight`; also accepts ``"1/4,3/4,..."``."""
    text = text.replace(" ", "")
    if "(" in text:
        head, body = text.split("(", 1)
        body = body.rstrip(")")
        scale = as_fraction(head) if head else Fraction(1)
        return tuple(scale * as_fraction(x) for x in body.split(","))
    return tuple(as_fraction(x) for x in text.split(","))
