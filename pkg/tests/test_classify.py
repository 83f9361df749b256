import pytest

from terminal_divisors.classify import (ClassificationError, UnsupportedType, action_for,
                                        cax2_k, classify)
from terminal_divisors.qpoly import CyclicAction, QuasiPolynomial

Q = QuasiPolynomial.parse


@pytest.mark.parametrize("text, act, tag, params", [
    ("x^2 + y^2 + z^18 + z^6*u^6 + u^15", (4, (1, 3, 1, 2)), "cAx/4", {"n": 7}),
    ("x^2 + y^2 + z^6 + u^6", (2, (0, 1, 1, 1)), "cAx/2", {"k": 3}),
    ("u^2 + x^3 + y^2*z + y*z^2", (3, (1, 2, 2, 0)), "cD/3-1", {}),
    ("u^2 + x*y*z + x^4 + y^6 + z^5", (2, (1, 1, 0, 1)), "cD/2-1", {"a": 2, "b": 3, "c": 5}),
])
def test_recognition(text, act, tag, params):
    inst = classify(Q(text), CyclicAction(*act))
    assert inst.tag == tag
    for k, v in params.items():
        assert inst.params[k] == v
    assert inst.index == act[0]


def test_cd22_parameters():
    inst = classify(Q("u^2 + y^2*z + z^12 + z^6*x^6 + x^18"), CyclicAction(2, (1, 1, 0, 1)))
    assert inst.tag == "cD/2-2" and inst.params["n"] == 13


def test_cd32_and_cd33():
    a = CyclicAction(3, (1, 2, 2, 0))
    assert classify(Q("u^2 + x^3 + y*z^2 + 2*x*y^4 + y^6"), a).tag == "cD/3-2"
    assert classify(Q("u^2 + x^3 + y^3 + z^6"), a).tag == "cD/3-3"
    with pytest.raises(ClassificationError):
        classify(Q("u^2 + x^3 + y^3"), a, "cD/3-3")


def test_cd32_discriminant():
    a = CyclicAction(3, (1, 2, 2, 0))
    # 4*l^3 + 27*m^2 = 0 for l = -3, m = 2
    with pytest.raises(ClassificationError):
        classify(Q("u^2 + x^3 + y*z^2 - 3*x*y^4 + 2*y^6"), a, "cD/3-2")
    inst = classify(Q("u^2 + x^3 + y*z^2 + l*x*y^4 + m*y^6"), a, "cD/3-2")
    assert inst.flags


def test_ce2_normalisation_flag():
    a = CyclicAction(2, (0, 1, 1, 1))
    inst = classify(Q("u^2 + x^3 + y*z^3 + z^4 + y^6"), a, "cE/2")
    assert inst.flags
    assert not classify(Q("u^2 + x^3 + y^4 + z^12"), a, "cE/2").flags


def test_rejections():
    with pytest.raises(UnsupportedType):
        classify(Q("x*y + z^4 + u^3"), CyclicAction(4, (1, 3, 1, 2)))
    with pytest.raises(ClassificationError):
        classify(Q("x^2 + y^2 + z^3 + u"), CyclicAction(4, (1, 3, 1, 2)))     # not semi-invariant
    with pytest.raises(ClassificationError):
        classify(Q("x^2 + y^2 + z^6 + u^6"), CyclicAction(5, (1, 2, 3, 4)))
    with pytest.raises(ClassificationError):
        classify(Q("x^2 + y^2 + z^2*u^2"), CyclicAction(4, (1, 3, 1, 2)))      # no odd u power


def test_group_generator_may_differ():
    # 1/4(3,1,3,2) generates the same group as 1/4(1,3,1,2)
    inst = classify(Q("x^2 + y^2 + z^6 + u^3"), CyclicAction(4, (3, 1, 3, 2)), "cAx/4")
    assert inst.params["n"] == 1


@pytest.mark.parametrize("text, k", [("z^6 + u^6", 3), ("z^4 + u^4", 2), ("z^5*u^3 + z^10", 4)])
def test_cax2_k(text, k):
    assert cax2_k(Q(text)) == k


def test_action_table():
    assert action_for("cD/3-2") == CyclicAction(3, (1, 2, 2, 0))
    assert action_for("cE/2").residues == (0, 1, 1, 1)
