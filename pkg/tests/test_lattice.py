from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from terminal_divisors.lattice import (FractionalLattice, as_fraction, elementary_divisors,
                                       format_weight, integer_kernel, is_primitive,
                                       parse_weight, quotient_group_action,
                                       smith_normal_form, sublattice_index)

LATTICES = [FractionalLattice(4, (1, 3, 1, 2)), FractionalLattice(2, (0, 1, 1, 1)),
            FractionalLattice(3, (1, 2, 2, 0)), FractionalLattice(2, (1, 1, 0, 1))]


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def brute_index(w, lattice):
    """Least g with g * generator in Z^n + Z w."""
    gen = lattice.generator
    for g in range(1, lattice.m + 1):
        for s in range(-lattice.m * 50, lattice.m * 50):
            if all((g * a - s * x).denominator == 1 for a, x in zip(gen, w)):
                return g
    raise AssertionError("no index found")


def brute_primitive(w, lattice):
    scaled = [int(x * lattice.m) for x in w]
    content = sympy.gcd_list(scaled)
    return not any([x / d for x in w] in lattice for d in range(2, int(content) + 1))


small_matrix = st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=2, max_size=4)


def test_as_fraction_refuses_floats():
    assert as_fraction("3/4") == F(3, 4)
    with pytest.raises(ValueError):
        as_fraction("0.5")
    with pytest.raises(TypeError):
        as_fraction(0.5)


@given(small_matrix)
def test_smith_form_is_a_factorisation(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and (b == 0 or (a != 0 and b % a == 0))


@given(small_matrix)
def test_elementary_divisors_agree_with_sympy(A):
    ours = elementary_divisors(A)
    M = sympy_snf(sympy.Matrix(A), domain=sympy.ZZ)
    theirs = [abs(M[i, i]) for i in range(min(M.shape))]
    assert ours == theirs


@given(st.lists(st.integers(-12, 12), min_size=2, max_size=5))
def test_integer_kernel(row):
    basis = integer_kernel(row)
    assert len(basis) == len(row) - (1 if any(row) else 0)
    for v in basis:
        assert sum(a * b for a, b in zip(row, v)) == 0
    if basis:
        assert sympy.Matrix(basis).rank() == len(basis)


def test_lattice_order_and_membership():
    lat = FractionalLattice(4, (1, 3, 1, 2))
    assert lat.order() == 4
    assert (F(9, 4), F(11, 4), F(1, 4), F(1, 2)) in lat
    assert (F(1, 4), F(1, 4), F(1, 4), F(1, 4)) not in lat
    assert FractionalLattice(4, (2, 2, 0, 2)).order() == 2


@pytest.mark.parametrize("lattice", LATTICES)
def test_primitivity_and_index_match_brute_force(lattice):
    box = [(F(1, lattice.m), F(3))] * 4
    seen = 0
    for w in lattice.points(box):
        assert is_primitive(w, lattice) == brute_primitive(w, lattice)
        if is_primitive(w, lattice):
            assert sublattice_index(w, lattice) == brute_index(w, lattice)
            seen += 1
    assert seen > 20


def test_known_indices():
    cd2 = FractionalLattice(2, (1, 1, 0, 1))
    assert sublattice_index((1, 6, 1, 6), cd2) == 2
    assert sublattice_index((F(1, 2), F(9, 2), 1, F(9, 2)), cd2) == 1
    cax4 = FractionalLattice(4, (1, 3, 1, 2))
    assert sublattice_index((F(9, 4), F(11, 4), F(1, 4), F(1, 2)), cax4) == 1
    assert not is_primitive((2, 2, 2, 2), cd2)
    assert is_primitive((1, 1, 1, 1), cd2)


@pytest.mark.parametrize("lattice", LATTICES)
def test_quotient_action_residues(lattice):
    box = [(F(1, lattice.m), F(2))] * 4
    for w in lattice.points(box):
        if not is_primitive(w, lattice):
            continue
        G = quotient_group_action(w, lattice)
        assert G.order == sublattice_index(w, lattice)
        if G.order == 1:
            assert G.trivial
            continue
        # some g * generator - s * w equals the residues modulo g
        found = False
        for s in range(lattice.m * 40):
            z = [G.order * a - s * x for a, x in zip(lattice.generator, w)]
            if all(v.denominator == 1 for v in z):
                found = tuple(int(v) % G.order for v in z) == G.residues
                break
        assert found


@given(st.integers(1, 6), st.tuples(*[st.integers(0, 5)] * 4), st.tuples(*[st.integers(1, 9)] * 4))
def test_format_parse_roundtrip(m, res, nums):
    w = tuple(F(n, m) for n in nums)
    assert parse_weight(format_weight(w)) == w


@settings(max_examples=60)
@given(st.sampled_from(LATTICES), st.tuples(*[st.integers(1, 8)] * 4), st.integers(0, 3))
def test_lattice_closed_under_addition(lattice, base, k):
    w = tuple(F(b) + k * g for b, g in zip(base, lattice.generator))
    v = tuple(F(b) + (k + 1) * g for b, g in zip(base, lattice.generator))
    assert w in lattice and v in lattice
    assert tuple(a + b for a, b in zip(w, v)) in lattice
    if is_primitive(w, lattice):
        assert not is_primitive(tuple(2 * x for x in w), lattice)
