"""Family mode: candidate weights for a whole type, labels of the named
blowups, their genus bounds and which pairs may be non-rational together."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .classify import action_for
from .lattice import FractionalLattice, format_weight, is_primitive
from .region import Constraint, lattice_points

F = Fraction


def _c(coeffs, op, rhs):
    return Constraint(tuple(coeffs), op, rhs)


@dataclass
class System:
    """One disjunct: linear constraints plus an optional exact side condition."""

    name: str
    constraints: list
    extra: Callable | None = None


# a <= 1 with the face level given by a monomial v: sum(w) - 1 - <w, v> <= 1
def _disc(v):
    return _c([1 - x for x in v], "<=", 2)


def _eq(v1, v2):
    return _c([a - b for a, b in zip(v1, v2)], "==", 0)


def _ge(v1, v2):
    return _c([a - b for a, b in zip(v1, v2)], ">=", 0)


def _gt(v1, v2):
    return _c([a - b for a, b in zip(v1, v2)], ">", 0)


X2, Y2, U2 = (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 0, 2)
X3, Y3, Y2Z = (3, 0, 0, 0), (0, 3, 0, 0), (0, 2, 1, 0)


def cax4_systems(n: int):
    u_odd = (0, 0, 0, 2 * n + 1)
    return [
        System("i", [_disc(X2), _gt(Y2, X2), _ge(u_odd, X2)]),
        System("ii", [_disc(Y2), _gt(X2, Y2), _ge(u_odd, Y2)]),
    ]


def _cd33_z_monomials(level_of):
    """Some optional monomial xyz^(3+3b), xz^(4+3b), yz^(5+3b), z^(6+3b)
    sits exactly at the face level."""
    def test(w):
        level = level_of(w)
        for (i, j, base) in ((1, 1, 3), (1, 0, 4), (0, 1, 5), (0, 0, 6)):
            rest = level - i * w[0] - j * w[1] - base * w[2]
            if rest >= 0 and (rest / w[2]).denominator == 1 and int(rest / w[2]) % 3 == 0:
                return True
        return False
    return test


def cd33_systems():
    lvl_u = lambda w: 2 * w[3]
    lvl_x = lambda w: 3 * w[0]
    return [
        System("i", [_disc(U2), _eq(U2, X3), _ge(Y3, U2)], _cd33_z_monomials(lvl_u)),
        System("ii", [_disc(U2), _gt(X3, U2), _eq(Y3, U2)], _cd33_z_monomials(lvl_u)),
        System("iii", [_disc(X3), _eq(X3, Y3), _gt(U2, X3)], _cd33_z_monomials(lvl_x)),
    ]


def cd22_systems(n: int):
    z_pow = (0, 0, n - 1, 0)
    return [
        System("i", [_disc(U2), _ge(Y2Z, U2), _ge(z_pow, U2)]),
        System("ii", [_disc(Y2Z), _gt(U2, Y2Z), _ge(z_pow, Y2Z)]),
    ]


def family_weights(tag: str, n: int | None = None):
    """Primitive weights satisfying one of the type's systems, sorted."""
    if tag == "cE/2":
        from .ce2 import ce2_family_weights
        return ce2_family_weights()
    systems = {"cAx/4": lambda: cax4_systems(n), "cD/3-3": cd33_systems,
               "cD/2-2": lambda: cd22_systems(n)}.get(tag)
    if systems is None:
        raise ValueError(f"no family system for {tag}")
    act = action_for(tag)
    lattice = FractionalLattice(act.m, act.residues)
    found = set()
    for system in systems():
        for W in lattice_points(lattice, system.constraints):
            w = tuple(F(x, act.m) for x in W)
            if system.extra and not system.extra(w):
                continue
            if is_primitive(w, lattice):
                found.add(w)
    return sorted(found)


# -- named blowups --------------------------------------------------------------

def _q(d, *xs):
    return tuple(F(x, d) for x in xs)


def cax4_named(n: int):
    out = {}
    for k in range(0, n // 2 + 1):
        out[_q(4, 4 * k + 1, 4 * k + 3, 1, 2)] = ("nu1", k)
        out[_q(4, 4 * k + 3, 4 * k + 1, 3, 2)] = ("nu4", k)
    for k in range(0, (n - 1) // 2 + 1):
        out[_q(4, 4 * k + 3, 4 * k + 5, 3, 2)] = ("nu2", k)
        out[_q(4, 4 * k + 5, 4 * k + 3, 1, 2)] = ("nu3", k)
    return out


def cd33_named():
    return {_q(3, 5, 4, 1, 6): ("nu1", None), _q(3, 2, 4, 1, 3): ("nu2", None),
            _q(3, 4, 5, 2, 6): ("nu3", None), _q(1, 2, 2, 1, 3): ("nu4", None)}


def cd22_named(n: int, printed_item4: bool = False):
    """Items of the cD_n/2-2 list.  ``k`` is the integer the bounds use."""
    out = {}
    for m in range(1, 2 * (n - 1) + 1, 2):
        k = (m + 1) // 2
        if m <= n - 1:
            out[_q(2, 1, m, 2, m)] = ("nu1", k)
        if m >= 3:
            out[_q(2, 1, m - 2, 4, m)] = ("nu2", k)
    for m in range(2, n, 2):
        out[_q(2, 1, m - 1, 2, m + 1)] = ("nu3", m // 2)
    for k in range(1, (n - 1) // 2 + 1):
        w = (1, k, 2, k) if printed_item4 else (1, k, 1, k)
        out[_q(1, *w)] = ("nu4", k)
    for k in range(2, n):
        out[_q(1, 1, k - 1, 2, k)] = ("nu5", k)
    for k in range(2, n // 2 + 1):
        out[_q(1, 1, k - 1, 1, k)] = ("nu6", k)
    return out


CE2_NAMED = {
    _q(2, 2, 3, 1, 3): ("nu1", None), _q(2, 2, 1, 3, 3): ("nu2", None),
    _q(2, 4, 3, 1, 5): ("nu3", None), _q(2, 4, 3, 1, 7): ("nu4", None),
    _q(2, 6, 5, 1, 9): ("nu5", None), _q(1, 2, 2, 1, 3): ("nu6", None),
    _q(1, 3, 2, 1, 4): ("nu7", None),
}


def named_blowups(tag: str, params: dict):
    if tag == "cAx/4":
        return cax4_named(params["n"])
    if tag == "cAx/2":
        k = params["k"]
        w = _q(2, k, k + 1, 1, 1) if k % 2 == 0 else _q(2, k + 1, k, 1, 1)
        return {w: ("nu0" if k % 2 == 0 else "nu1", k)}
    if tag == "cD/3-2":
        return {_q(3, 2, 1, 4, 3): ("nu", None)}
    if tag == "cD/3-3":
        return cd33_named()
    if tag == "cD/2-2":
        return cd22_named(params["n"])
    if tag == "cE/2":
        return dict(CE2_NAMED)
    return {}


# -- genus bounds -------------------------------------------------------------------

def genus_bound(tag: str, label: str, k: int | None = None):
    """Upper bound for the genus of the base curve of a named blowup.

    A negative value (cAx/4 nu2 at k = 0) means the blowup is never
    non-rational; the analysis flags such rows.
    """
    if tag == "cAx/4":
        m, r = divmod(k, 3)
        table = {
            "nu1": 2 * k,
            "nu2": {0: 2 * m - 1, 1: 2 * m + 1, 2: 2 * m + 2}[r],
            "nu3": 2 * k + 1,
            "nu4": 2 * m if r == 0 else 2 * m + 1,
        }
        return table[label]
    if tag == "cAx/2":
        return k - 1
    if tag in ("cD/3-2", "cD/3-3"):
        return 1
    if tag == "cD/2-2":
        table = {"nu1": k - 1, "nu3": k,
                 "nu4": k // 2 if k % 2 == 0 else (k - 1) // 2,
                 "nu6": (k - 1) // 2 if k % 2 else (k - 2) // 2}
        if label not in table:
            return 0
        return table[label]
    if tag == "cE/2":
        return 3 if label == "nu4" else 1
    raise ValueError(f"no genus bounds for {tag}")


# -- mutual exclusion ------------------------------------------------------------------

EXCLUDED = {
    "cAx/4": {frozenset(("nu1", "nu3")), frozenset(("nu2", "nu4"))},
    "cD/3-3": {frozenset(("nu1", "nu2")), frozenset(("nu1", "nu3"))},
    "cD/2-2": {frozenset(("nu1", "nu3")), frozenset(("nu4", "nu6"))},
}
CE2_ALLOWED = {frozenset(("nu1", "nu2")), frozenset(("nu1", "nu6"))}


def mutual_exclusion(tag: str, label1: str, label2: str) -> bool:
    """True if the two named blowups cannot both be non-rational."""
    if label1 == label2:
        return False
    pair = frozenset((label1, label2))
    if tag == "cE/2":
        return pair not in CE2_ALLOWED
    if tag in ("cAx/2", "cD/3-2"):
        return True
    if tag in ("cD/3-1", "cD/2-1"):
        return True
    return pair in EXCLUDED.get(tag, set())


def describe(w) -> str:
    return format_weight(w)


# -- family table ------------------------------------------------------------------------

FORCED = {
    "cAx/4": lambda p: [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 0, 2 * p["n"] + 1)],
    "cD/3-3": lambda p: [U2, X3, Y3],
    "cD/2-2": lambda p: [U2, Y2Z, (0, 0, p["n"] - 1, 0)],
    # z^(2k) stands for the part of f of weight k at w(z) = w(u) = 1/2
    "cAx/2": lambda p: [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2 * p["k"], 0)],
    "cD/3-2": lambda p: [U2, X3, (0, 1, 2, 0)],
}
SYSTEM_TYPES = ("cAx/4", "cD/3-3", "cD/2-2", "cE/2")


@dataclass
class FamilyRow:
    weight: tuple
    label: str | None
    k: int | None
    discrepancy: Fraction
    group_order: int
    genus: int | None
    bound: int | None


def family_table(tag: str, params: dict):
    """Rows for every weight the type's family system admits.

    Types without a system (their lists are single blowups or empty) fall
    back to the named list.
    """
    from .ce2 import witness
    from .lattice import quotient_group_action
    act = action_for(tag)
    lattice = FractionalLattice(act.m, act.residues)
    named = named_blowups(tag, params)
    if tag in SYSTEM_TYPES:
        weights = family_weights(tag, params.get("n"))
    else:
        weights = sorted(named)
    rows = []
    for w in weights:
        label, k = named.get(w, (None, None))
        genus = None
        if tag == "cE/2":
            level, genus = witness(w)
        elif tag in FORCED:
            level = min(sum(a * b for a, b in zip(w, e)) for e in FORCED[tag](params))
        else:
            level = None
        disc = sum(w) - 1 - level if level is not None else None
        bound = genus_bound(tag, label, k) if label else None
        rows.append(FamilyRow(w, label, k, disc, quotient_group_action(w, lattice).order,
                              genus, bound))
    return rows
