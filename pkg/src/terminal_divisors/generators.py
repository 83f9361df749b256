"""Random non-degenerate instances of each type, reproducible from a seed.

Each generator draws a support in the standard form of its type with
generic markers on the free coefficients, then instantiates the markers
with random nonzero rationals.  Draws whose diagram has a degenerate face
are rejected.
"""
from __future__ import annotations

import random

from .classify import SingularityInstance, action_for, classify
from .newton import nondegenerate
from .qpoly import Generic, QuasiPolynomial


def _mono(x=0, y=0, z=0, u=0):
    return (x, y, z, u)


def _pick(rng, pool, most):
    pool = sorted(set(pool))
    return rng.sample(pool, min(len(pool), rng.randint(0, most)))


def _support_cax4(rng):
    n = rng.randint(1, 6)
    forced = [_mono(x=2), _mono(y=2), _mono(u=2 * n + 1), _mono(z=rng.choice((6, 10, 14, 18)))]
    mixed = [_mono(z=a, u=b) for a in range(1, 12) for b in range(1, 2 * n + 1)
             if (a + 2 * b) % 4 == 2 and 4 <= a + b <= 12]
    return forced, _pick(rng, mixed, 3)


def _support_cax2(rng):
    forced = [_mono(x=2), _mono(y=2), _mono(z=rng.choice((4, 6, 8, 10))),
              _mono(u=rng.choice((4, 6, 8, 10)))]
    mixed = [_mono(z=a, u=b) for a in range(1, 10) for b in range(1, 10)
             if (a + b) % 2 == 0 and 4 <= a + b <= 10]
    return forced, _pick(rng, mixed, 3)


def _support_cd31(rng):
    return [_mono(u=2), _mono(x=3)], [_mono(y=2, z=1), _mono(y=1, z=2)]


def _support_cd32(rng):
    optional = [_mono(x=1, y=4 + 3 * i) for i in range(2)] + [_mono(y=6 + 3 * i) for i in range(2)]
    chosen = _pick(rng, optional, 3)
    if not {_mono(x=1, y=4), _mono(y=6)} & set(chosen):
        chosen.append(rng.choice((_mono(x=1, y=4), _mono(y=6))))
    return [_mono(u=2), _mono(x=3)], [_mono(y=1, z=2)] + chosen


def _support_cd33(rng):
    forced = [_mono(u=2), _mono(x=3), _mono(y=3)]
    optional = [_mono(x=i, y=j, z=base + 3 * b)
                for (i, j, base) in ((1, 1, 3), (1, 0, 4), (0, 1, 5)) for b in range(3)]
    delta = _mono(z=6 + 3 * rng.randint(0, 2))
    return forced, [delta] + _pick(rng, optional, 3)


def _support_cd21(rng):
    a, b, c = rng.randint(2, 4), rng.randint(2, 4), rng.randint(3, 6)
    return [_mono(u=2), _mono(x=1, y=1, z=1)], [_mono(x=2 * a), _mono(y=2 * b), _mono(z=c)]


def _support_cd22(rng):
    zpow = rng.randint(3, 12)
    forced = [_mono(u=2), _mono(y=2, z=1), _mono(z=zpow), _mono(x=rng.choice((4, 6, 8)))]
    g = [_mono(x=i, z=j) for i in range(0, 9, 2) for j in range(0, 12)
         if (i >= 2 and j >= 2 or i >= 4 and j >= 1) and i + j <= 10]
    optional = _pick(rng, g, 2)
    if rng.random() < 0.5:
        optional.append(_mono(x=2 * rng.randint(1, 3) + 1, y=1))
    return forced, optional


def _support_ce2(rng):
    lead = rng.choice((_mono(y=4), _mono(y=3, z=1), _mono(y=2, z=2)))
    forced = [_mono(u=2), _mono(x=3)]
    free = [lead, _mono(z=rng.choice((6, 8, 10))), _mono(y=rng.choice((6, 8)))]
    even = [(i, d - i) for d in (4, 6, 8) for i in range(d + 1)]
    g = [_mono(x=1, y=i, z=j) for i, j in even]
    h = [_mono(y=i, z=j) for i, j in even if i + j > 4]
    return forced, sorted(set(free)) + _pick(rng, g, 1) + _pick(rng, h, 2)


SUPPORTS = {
    "cAx/4": _support_cax4, "cAx/2": _support_cax2, "cD/3-1": _support_cd31,
    "cD/3-2": _support_cd32, "cD/3-3": _support_cd33, "cD/2-1": _support_cd21,
    "cD/2-2": _support_cd22, "cE/2": _support_ce2,
}


def random_instance(tag: str, rng: random.Random, tries: int = 50) -> SingularityInstance:
    """A non-degenerate instance of type ``tag`` with rational coefficients."""
    for _ in range(tries):
        forced, free = SUPPORTS[tag](rng)
        terms = {e: 1 for e in forced}
        for i, e in enumerate(sorted(set(free) - set(forced))):
            terms[e] = Generic(f"c{i}")
        phi = QuasiPolynomial(terms).instantiate(rng)
        if not nondegenerate(phi):
            continue
        try:
            return classify(phi, action_for(tag), tag)
        except ValueError:
            continue
    raise RuntimeError(f"no non-degenerate {tag} instance after {tries} draws")


def random_instances(tag: str, count: int, seed: int = 0):
    rng = random.Random(f"{tag}:{seed}")
    return [random_instance(tag, rng) for _ in range(count)]
