import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import GO_TEXT, HIRZ_TEXT, go
from mgdual import Polynomial, validate_grading
from mgdual.errors import NonHomogeneousGenerator, ParseError, UnknownVariable
from mgdual.io import emit_problem, parse_degree, parse_polynomial, parse_problem


@pytest.fixture
def g():
    return validate_grading([[1, 1]], var_names=["x", "y"])


def test_go_problem():
    prob = parse_problem(GO_TEXT)
    assert prob.vars == ("x1", "x2")
    assert list(prob.ideals) == ["I", "J"]
    assert list(prob.ideals["I"]) == list(go().generators)


def test_empty_ideal_section():
    prob = parse_problem("vars: x\ngrading:\n1\nideal Z:\n")
    assert prob.ideals["Z"] == ()


def test_non_homogeneous_generator():
    with pytest.raises(NonHomogeneousGenerator) as err:
        parse_problem("vars: x1 x2\ngrading:\n1 2\nideal I:\nx1 + x2\n")
    assert err.value.degrees == [(1,), (2,)] or set(err.value.degrees) == {(1,), (2,)}


def test_unknown_variable(g):
    with pytest.raises(UnknownVariable):
        parse_polynomial("x + z", g)


def test_implicit_multiplication(g):
    with pytest.raises(ParseError) as err:
        parse_polynomial("2 x", g)
    assert err.value.column is not None


def test_error_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_problem("vars: x\ngrading:\n1\nideal I:\nx +\n")
    assert err.value.line == 5


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-x^2", lambda x, y: -(x * x)),
        ("2*x^2^1", lambda x, y: 2 * x * x),
        ("x - y - x", lambda x, y: -y),
        ("x*y + 3/6*x^2", lambda x, y: x * y + x * x * 0.5),
        ("-(x + y)*2", lambda x, y: -2 * x - 2 * y),
        ("(x + y)^2", lambda x, y: x * x + 2 * x * y + y * y),
    ],
)
def test_precedence(g, text, expected):
    x, y = Polynomial.variable(g, 0), Polynomial.variable(g, 1)
    from fractions import Fraction

    want = expected(x, y)
    if not isinstance(want, Polynomial):
        want = Polynomial.constant(g, Fraction(want))
    assert parse_polynomial(text, g) == Polynomial(g, {a: Fraction(c) for a, c in want.terms.items()})


def test_negative_exponent_rejected(g):
    with pytest.raises(ParseError):
        parse_polynomial("x^-1", g)


def test_degrees():
    assert parse_degree("(4, -4)") == (4, -4)
    assert parse_degree("3") == (3,)
    with pytest.raises(ParseError):
        parse_degree("(1,2", 2)
    with pytest.raises(ParseError):
        parse_degree("(1,2)", 1)


@pytest.mark.parametrize("text", [GO_TEXT, HIRZ_TEXT, GO_TEXT + "query:\nhilbert I 4\nmember J x2\nquotient J 4 I\nsaturate I 3 x1\n"])
def test_round_trip(text):
    prob = parse_problem(text)
    assert parse_problem(emit_problem(prob)) == prob
    assert emit_problem(parse_problem(emit_problem(prob))) == emit_problem(prob)


coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=7)


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4)).map(lambda t: (t[0], 4 - t[0])), coeffs, max_size=5))
def test_polynomial_text_round_trip(terms):
    g = validate_grading([[1, 1]], var_names=["x", "y"])
    p = Polynomial(g, terms)
    assert parse_polynomial(str(p), g) == p
