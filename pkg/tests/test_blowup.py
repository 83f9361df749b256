from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from terminal_divisors.blowup import (discrepancy, enumerate_candidates, enumeration_bound,
                                      exceptional_divisor, integral_weights, screen)
from terminal_divisors.classify import classify
from terminal_divisors.generators import random_instance
from terminal_divisors.lattice import is_primitive
from terminal_divisors.qpoly import CyclicAction, QuasiPolynomial

Q = QuasiPolynomial.parse

CAX4 = classify(Q("x^2 + y^2 + z^18 + z^6*u^6 + u^15"), CyclicAction(4, (1, 3, 1, 2)))
CD22 = classify(Q("u^2 + y^2*z + z^12 + z^6*x^6 + x^18"), CyclicAction(2, (1, 1, 0, 1)))


def test_discrepancy_values():
    assert discrepancy((F(9, 4), F(11, 4), F(1, 4), F(1, 2)), CAX4.equation) == F(1, 4)
    assert discrepancy((F(15, 4), F(17, 4), F(3, 4), F(1, 2)), CAX4.equation) == F(3, 4)
    assert discrepancy((1, 6, 1, 6), CD22.equation) == 1
    with pytest.raises(ValueError):
        discrepancy((0, 1, 1, 1), CAX4.equation)


def test_bounds():
    assert enumeration_bound(CAX4) == (6, 6, 2, 2)
    assert enumeration_bound(CD22) == (2, 8, F(18, 5), 9)


def test_candidates_of_examples():
    ws = {c.weight: c for c in enumerate_candidates(CAX4)}
    assert (F(9, 4), F(11, 4), F(1, 4), F(1, 2)) in ws
    c = {x.weight: x for x in enumerate_candidates(CD22)}[(1, 6, 1, 6)]
    assert c.group.order == 2 and c.kind == "pseudo" and c.discrepancy == 1
    model = exceptional_divisor(c)
    assert model.weights == (1, 6, 1, 6)
    assert str(model).endswith("/Z_2")


def test_integral_weights():
    assert integral_weights((F(9, 4), F(11, 4), F(1, 4), F(1, 2))) == (9, 11, 1, 2)
    assert integral_weights((2, 4, 6, 2)) == (1, 2, 3, 1)


def test_screen_reasons():
    assert screen("cAx/4", [(2, 0, 0, 0), (0, 2, 0, 0)])
    assert screen("cAx/4", [(2, 0, 0, 0), (0, 0, 6, 6)]) is None
    assert screen("cD/3-1", [(0, 0, 0, 2)]) is None


def naive_candidates(inst):
    """Scan the box of side B over the lattice, independent of the walker."""
    B = enumeration_bound(inst)
    m = inst.action.m
    gen = [F(a, m) for a in inst.action.residues]
    out = set()
    for k in range(m):
        shift = [k * g - (k * g).__floor__() for g in gen]
        ranges = []
        for s, b in zip(shift, B):
            ranges.append([s + i for i in range(0, int(b - s) + 1) if s + i > 0])
        for w in product(*ranges):
            if discrepancy(w, inst.equation) <= 1 and is_primitive(w, _lat(inst)):
                out.add(tuple(w))
    return out


def _lat(inst):
    from terminal_divisors.blowup import lattice_of
    return lattice_of(inst)


@pytest.mark.parametrize("inst", [CAX4, CD22])
def test_enumeration_matches_naive_scan(inst):
    found = {c.weight for c in enumerate_candidates(inst, include_screened=True)}
    assert found == naive_candidates(inst)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["cAx/4", "cAx/2", "cD/3-2", "cD/3-3", "cD/2-1", "cD/2-2", "cE/2"]),
       st.integers(0, 10 ** 6))
def test_candidates_are_primitive_and_sorted(tag, seed):
    import random
    inst = random_instance(tag, random.Random(seed))
    cands = enumerate_candidates(inst, include_screened=True)
    weights = [c.weight for c in cands]
    assert weights == sorted(weights)
    for c in cands:
        assert c.discrepancy <= 1
        assert is_primitive(c.weight, _lat(inst))
        assert c.face.level + c.discrepancy == sum(c.weight) - 1
