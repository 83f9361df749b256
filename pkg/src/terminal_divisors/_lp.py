"""A tiny exact linear-programming routine over Fractions.

Dense two-phase simplex with Bland's rule.  The problems solved in this
package have at most a handful of variables and a few dozen constraints.
"""
from __future__ import annotations

from fractions import Fraction


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def maximize(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()):
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    Returns ``(value, x)`` with exact Fractions.  Raises :class:`Infeasible`
    or :class:`Unbounded`.
    """
    n = len(c)
    rows = []
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), "ub"))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), "eq"))
    # normalise to b >= 0; a flipped <= row becomes >=
    norm = []
    for a, b, kind in rows:
        if b < 0:
            a, b = [-v for v in a], -b
            kind = {"ub": "lb", "eq": "eq"}[kind]
        norm.append((a, b, kind))

    n_slack = sum(1 for _, _, k in norm if k != "eq")
    n_art = sum(1 for _, _, k in norm if k != "ub")
    width = n + n_slack + n_art
    tableau, basis = [], []
    s_col, a_col = n, n + n_slack
    art_cols = []
    for a, b, kind in norm:
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if kind == "ub":
            row[s_col] = Fraction(1)
            basis.append(s_col)
            s_col += 1
        else:
            if kind == "lb":
                row[s_col] = Fraction(-1)
                s_col += 1
            row[a_col] = Fraction(1)
            basis.append(a_col)
            art_cols.append(a_col)
            a_col += 1
        tableau.append(row)

    if art_cols:
        phase1 = [Fraction(0)] * width
        for j in art_cols:
            phase1[j] = Fraction(-1)
        value = _run(tableau, basis, phase1, width)
        if value < 0:
            raise Infeasible
        for i, bj in enumerate(basis):
            if bj in art_cols:
                pivot = next((j for j in range(n + n_slack) if tableau[i][j] != 0), None)
                if pivot is not None:
                    _pivot(tableau, basis, i, pivot)
        keep = [j for j in range(width) if j not in art_cols]
        tableau = [[row[j] for j in keep] + [row[-1]] for row in tableau]
        remap = {j: k for k, j in enumerate(keep)}
        basis = [remap.get(b, -1) for b in basis]
        width = len(keep)
        # drop redundant rows whose artificial stayed basic at zero
        pairs = [(r, b) for r, b in zip(tableau, basis) if b >= 0]
        tableau = [r for r, _ in pairs]
        basis = [b for _, b in pairs]

    obj = [Fraction(v) for v in c] + [Fraction(0)] * (width - n)
    value = _run(tableau, basis, obj, width)
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = tableau[i][-1]
    return value, x


def _pivot(tableau, basis, r, col):
    piv = tableau[r][col]
    tableau[r] = [v / piv for v in tableau[r]]
    for i, row in enumerate(tableau):
        if i != r and row[col] != 0:
            f = row[col]
            tableau[i] = [a - f * b for a, b in zip(row, tableau[r])]
    basis[r] = col


def _run(tableau, basis, obj, width):
    while True:
        # reduced costs of c_j - c_B B^-1 A_j
        reduced = []
        for j in range(width):
            rc = obj[j] - sum(obj[b] * row[j] for b, row in zip(basis, tableau))
            reduced.append(rc)
        enter = next((j for j in range(width) if reduced[j] > 0 and j not in basis), None)
        if enter is None:
            return sum(obj[b] * row[-1] for b, row in zip(basis, tableau))
        ratios = [(row[-1] / row[enter], basis[i], i)
                  for i, row in enumerate(tableau) if row[enter] > 0]
        if not ratios:
            raise Unbounded
        _, _, r = min(ratios)
        _pivot(tableau, basis, r, enter)


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), n=None):
    """Some ``x >= 0`` meeting the constraints, or None."""
    n = n if n is not None else len((list(A_ub) + list(A_eq))[0])
    try:
        _, x = maximize([0] * n, A_ub, b_ub, A_eq, b_eq)
    except Infeasible:
        return None
    return x
