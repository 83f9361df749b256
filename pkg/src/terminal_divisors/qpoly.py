"""Polynomials with exact coefficients in four quasi-homogeneous variables.

Coefficients are Fractions or :class:`Generic` markers.  A generic marker
stands for an unspecified nonzero number (the coefficient functions of the
standard forms); the library never substitutes values for them itself.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .lattice import as_fraction

VARIABLES = ("x", "y", "z", "u")

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Generic:
    """A symbolic coefficient assumed to be nonzero."""

    name: str

    def __str__(self):
        return self.name

    def __mul__(self, other):
        if isinstance(other, Generic):
            return Generic(f"{self.name}*{other.name}")
        if other == 0:
            return Fraction(0)
        if other == 1:
            return self
        if other == -1:
            return -self
        return Generic(f"{other}*{self.name}")

    __rmul__ = __mul__

    def __neg__(self):
        if self.name.startswith("-"):
            return Generic(self.name[1:])
        return Generic(f"-{self.name}")


def _add_coeffs(a, b):
    if isinstance(a, Generic) or isinstance(b, Generic):
        if a == 0:
            return b
        if b == 0:
            return a
        return Generic(f"({a}+{b})")
    return a + b


def is_generic(c) -> bool:
    return isinstance(c, Generic)


@dataclass(frozen=True)
class CyclicAction:
    """``x_i -> eps^(a_i) x_i`` with ``eps`` a primitive ``m``-th root of 1."""

    m: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "residues", tuple(a % self.m for a in self.residues))

    def character(self, exponent: Sequence[int]) -> int:
        return sum(a * e for a, e in zip(self.residues, exponent)) % self.m


class NotSemiInvariant(ValueError):
    pass


@dataclass(frozen=True)
class QuasiPolynomial:
    """Finite sum of monomials; the support never stores zero coefficients.

    ``truncation`` records the total degree up to which the underlying series
    is known (None means the polynomial is exact).
    """

    terms: Mapping[Exponent, object]
    variables: tuple[str, ...] = VARIABLES
    truncation: int | None = None
    _key: tuple = field(init=False, repr=False, compare=True)

    def __post_init__(self):
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.variables) or min(exp) < 0:
                raise ValueError(f"bad exponent {exp}")
            if not is_generic(c):
                c = as_fraction(c)
                if c == 0:
                    continue
            clean[exp] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", tuple(sorted(clean.items(), key=lambda t: t[0])))
        object.__setattr__(self, "terms", dict(self._key))

    def __hash__(self):
        return hash((self._key, self.variables))

    # -- construction --------------------------------------------------------

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] = VARIABLES, truncation=None):
        return cls(parse_terms(text, variables), tuple(variables), truncation)

    @classmethod
    def monomial(cls, exponent, coeff=1, variables=VARIABLES):
        return cls({tuple(exponent): coeff}, tuple(variables))

    # -- basic queries --------------------------------------------------------

    @property
    def support(self) -> list[Exponent]:
        return list(self.terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __contains__(self, exponent) -> bool:
        return tuple(exponent) in self.terms

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def has_generic(self) -> bool:
        return any(is_generic(c) for c in self.terms.values())

    def essential_variables(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.nvars) if any(e[i] for e in self.terms))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def content(self) -> Exponent:
        """Largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    # -- arithmetic -----------------------------------------------------------

    def _like(self, terms, truncation=None):
        return QuasiPolynomial(terms, self.variables, truncation)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = _add_coeffs(out.get(e, Fraction(0)), c)
        return self._like(out, _min_trunc(self.truncation, other.truncation))

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()}, self.truncation)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return self._like({e: c * as_fraction(other) if not is_generic(c) else c * other
                               for e, c in self.terms.items()}, self.truncation)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = _add_coeffs(out.get(e, Fraction(0)), c1 * c2)
        return self._like(out)

    def __pow__(self, k: int):
        out = self._like({(0,) * self.nvars: 1})
        for _ in range(k):
            out = out * self
        return out

    def divide_monomial(self, exponent):
        return self._like({tuple(a - b for a, b in zip(e, exponent)): c
                           for e, c in self.terms.items()}, self.truncation)

    def instantiate(self, rng: random.Random | None = None, values=None,
                    low: int = -9, high: int = 9):
        """Replace generic markers by random nonzero rationals (or ``values``)."""
        rng = rng or random.Random(0)
        values = dict(values or {})
        out = {}
        for e, c in self.terms.items():
            if is_generic(c):
                name, sign = (c.name[1:], -1) if c.name.startswith("-") else (c.name, 1)
                if name not in values:
                    values[name] = _random_nonzero(rng, low, high)
                c = sign * values[name]
            out[e] = c
        return self._like(out, self.truncation)

    # -- display --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e)))
        parts = []
        for e in order:
            parts.append(_format_term(self.terms[e], e, self.variables))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _random_nonzero(rng, low, high):
    while True:
        num = rng.randint(low, high)
        den = rng.randint(1, 5)
        if num:
            return Fraction(num, den)


def _format_term(c, e, names):
    mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
    if is_generic(c):
        return f"{c}*{mono}" if mono else str(c)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-])|(\S))")


def parse_terms(text: str, variables: Sequence[str] = VARIABLES) -> dict:
    """Parse ``"x^2 + 3/2*y*z^4 - a0*u"`` into ``{exponent: coefficient}``.

    Identifiers other than the variable names become :class:`Generic`
    markers.  Decimal literals are rejected so that input stays exact.
    """
    if re.search(r"\d\.\d*|\.\d", text):
        raise ValueError("decimal coefficients are not exact; write them as p/q")
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(6):
            raise ValueError(f"unexpected character {m.group(6)!r} at column {m.start(6) + 1}")
        tokens.append(m.groups()[:5])
    if not tokens:
        raise ValueError("empty polynomial")
    terms: dict = {}
    index = {v: i for i, v in enumerate(variables)}
    pos = 0
    while pos < len(tokens):
        sign = 1
        while pos < len(tokens) and tokens[pos][4]:
            sign *= -1 if tokens[pos][4] == "-" else 1
            pos += 1
        if pos == len(tokens):
            raise ValueError("dangling operator at the end")
        coeff: object = Fraction(sign)
        exp = [0] * len(variables)
        expect_factor = True
        while pos < len(tokens) and expect_factor:
            num, ident, caret, star, pm = tokens[pos]
            if num:
                coeff = coeff * Fraction(num)
                pos += 1
            elif ident:
                pos += 1
                power = 1
                if pos < len(tokens) and tokens[pos][2]:
                    if pos + 1 >= len(tokens) or not tokens[pos + 1][0] or "/" in tokens[pos + 1][0]:
                        raise ValueError(f"bad exponent after {ident}")
                    power = int(tokens[pos + 1][0])
                    pos += 2
                if ident in index:
                    exp[index[ident]] += power
                else:
                    if power != 1:
                        raise ValueError(f"generic marker {ident} cannot carry a power")
                    coeff = Generic(ident) * coeff
            else:
                raise ValueError("dangling operator")
            expect_factor = pos < len(tokens) and bool(tokens[pos][3])
            if expect_factor:
                pos += 1
        if pos < len(tokens) and not tokens[pos][4]:
            raise ValueError("missing operator between terms")
        key = tuple(exp)
        terms[key] = _add_coeffs(terms.get(key, Fraction(0)), coeff)
    return terms


# -- weights ------------------------------------------------------------------

def monomial_weight(w: Sequence, v: Sequence[int]) -> Fraction:
    """The pairing ``<w, v> = sum w_i v_i``."""
    if len(w) != len(v):
        raise ValueError("dimension mismatch")
    return sum((as_fraction(a) * b for a, b in zip(w, v)), Fraction(0))


def series_weight(w: Sequence, f: QuasiPolynomial) -> Fraction:
    """``w(f)``: the minimum of ``<w, v>`` over the support of ``f``."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no weight")
    return min(monomial_weight(w, v) for v in f.terms)


def semi_invariant_character(f: QuasiPolynomial, action: CyclicAction) -> int:
    """Common character of all monomials of ``f``; raises if they disagree."""
    chars = {action.character(e) for e in f.terms}
    if len(chars) != 1:
        raise NotSemiInvariant(f"monomials carry characters {sorted(chars)} mod {action.m}")
    return chars.pop()


def restrict_to_support(f: QuasiPolynomial, keep: Callable[[Exponent], bool]) -> QuasiPolynomial:
    return QuasiPolynomial({e: c for e, c in f.terms.items() if keep(e)},
                           f.variables, f.truncation)


def weighted_degree(f: QuasiPolynomial, w: Sequence) -> Fraction | None:
    """Common weight of all terms, or None if ``f`` is not quasi-homogeneous."""
    levels = {monomial_weight(w, e) for e in f.terms}
    return levels.pop() if len(levels) == 1 else None
