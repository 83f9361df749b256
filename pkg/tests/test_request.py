from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from terminal_divisors.qpoly import Generic
from terminal_divisors.request import (AnalysisRequest, Options, RequestError, format_text,
                                       parse_coefficient, parse_json, parse_request, parse_text,
                                       to_json)

CAX4 = """# a comment
quotient 4; 1 3 1 2
1 2 0 0 0
1 0 2 0 0
1 0 0 18 0
1 0 0 6 6
-3/2 0 0 0 15
"""


def test_parse_text_example():
    req = parse_text(CAX4)
    assert req.order == 4 and req.residues == (1, 3, 1, 2)
    assert dict(req.terms)[(0, 0, 0, 15)] == F(-3, 2)
    assert str(req.polynomial).startswith("x^2")


def test_directives():
    req = parse_text("type cD/2-2\nmode family\nparam n = 6\noption seed 5\n"
                     "option check-nondegeneracy\noption truncate 20\n1 0 0 0 2\n")
    assert req.tag == "cD/2-2" and req.mode == "family" and dict(req.params) == {"n": 6}
    assert req.options == Options(True, 5, 20)


def test_generic_coefficients():
    req = parse_text("a 2 0 0 0\n-b 0 3 0 0\n")
    coeffs = [c for _, c in req.terms]
    assert all(isinstance(c, Generic) for c in coeffs)


@pytest.mark.parametrize("text, line, column", [
    ("0.5 2 0 0 0\n", 1, 1),
    ("1 2 0 0 0\n1 -1 0 0 0\n", 2, 3),
    ("quotient 0; 1 1 1 1\n1 2 0 0 0\n", 1, 10),
    ("1 2 0 0 0\noption colour 3\n", 2, 8),
    ("1 2 0 0 0\nparam n 3\n", 2, 1),
    ("1/0 2 0 0 0\n", 1, 1),
])
def test_errors_carry_position(text, line, column):
    with pytest.raises(RequestError) as exc:
        parse_text(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(exc.value)


@pytest.mark.parametrize("text", ["", "# nothing\n", "quotient 2; 0 1 1 1\n"])
def test_empty_polynomial_rejected(text):
    with pytest.raises(RequestError, match="empty"):
        parse_text(text)


def test_structural_errors():
    with pytest.raises(RequestError, match="twice"):
        parse_text("1 2 0 0 0\n2 2 0 0 0\n")
    with pytest.raises(RequestError, match="numbers of exponents"):
        parse_text("1 2 0 0 0\n1 2 0 0\n")
    with pytest.raises(RequestError, match="family mode"):
        parse_text("mode family\n1 2 0 0 0\n")


def test_json_rejects_floats_and_bad_versions():
    with pytest.raises(RequestError, match="not exact"):
        parse_json('{"version": 1, "terms": [{"coeff": 0.5, "exp": [2, 0, 0, 0]}]}')
    with pytest.raises(RequestError, match="version"):
        parse_json('{"version": 7, "terms": []}')
    with pytest.raises(RequestError) as exc:
        parse_json('{"version": 1,\n "terms": [}')
    assert exc.value.line == 2


def test_parse_coefficient():
    assert parse_coefficient("-7/3") == F(-7, 3)
    assert parse_coefficient("4/2") == 2
    with pytest.raises(RequestError):
        parse_coefficient("0.5")
    with pytest.raises(RequestError):
        parse_coefficient("1e3")


# -- round trips --------------------------------------------------------------------

coefficient = st.one_of(
    st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool),
    st.sampled_from(["a", "b", "c1", "-a"]).map(parse_coefficient))
terms = st.dictionaries(st.tuples(*[st.integers(0, 9)] * 4), coefficient, min_size=1, max_size=6)
requests = st.builds(
    lambda t, q, tag, p, o: AnalysisRequest(
        tuple(sorted(t.items())), q[0] if q else None, q[1] if q else None, tag,
        "family" if tag and p else "instance", tuple(sorted(p.items())) if tag else (), o),
    terms,
    st.one_of(st.none(), st.integers(1, 6).flatmap(
        lambda m: st.tuples(st.just(m), st.tuples(*[st.integers(0, m - 1)] * 4)))),
    st.one_of(st.none(), st.sampled_from(["cAx/4", "cD/2-2", "cE/2"])),
    st.dictionaries(st.sampled_from(["n", "k"]), st.integers(1, 30), max_size=2),
    st.builds(Options, st.booleans(), st.one_of(st.none(), st.integers(0, 99)),
              st.one_of(st.none(), st.integers(1, 40))))


@given(requests)
def test_text_round_trip(req):
    assert parse_text(format_text(req)) == req


@given(requests)
def test_json_round_trip(req):
    assert parse_json(to_json(req)) == req
    assert parse_request(to_json(req)) == parse_request(format_text(req))
