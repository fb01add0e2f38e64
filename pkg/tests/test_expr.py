import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinpbw.errors import ParseError
from skeinpbw.expr import parse_expression, parse_scalar
from skeinpbw.laurent import Laurent, W
from skeinpbw.ncpoly import NCPolynomial, sg

letters = st.sampled_from([sg(a, s) for a in ("a", "b2") for s in ("pp", "pm", "mp", "mm")])
coeffs = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), min_size=1, max_size=3) \
    .map(Laurent).filter(bool)
polys = st.dictionaries(st.lists(letters, max_size=3).map(tuple), coeffs, max_size=4) \
    .map(NCPolynomial)


def test_examples():
    assert parse_expression("a[pm]*a[mp]") == NCPolynomial.word((sg("a", "pm"), sg("a", "mp")))
    x = parse_expression("w^-5*a[pm] + w^-1*a[mp]")
    assert x == (NCPolynomial.letter(sg("a", "pm"), W ** -5)
                 + NCPolynomial.letter(sg("a", "mp"), W ** -1))


def test_state_error_position():
    with pytest.raises(ParseError) as info:
        parse_expression("a[xy]")
    assert info.value.context["position"] == 2


@pytest.mark.parametrize("text", ["", "a[pp]*", "a[pp]^-1", "(w+1)^-1", "a[pp", "1 +* 2", "a[pp]]"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_alphabet_is_enforced():
    with pytest.raises(ParseError):
        parse_expression("z[pp]", alphabet=["a"])
    assert parse_expression("a[pp]", alphabet=["a"]) == NCPolynomial.letter(sg("a", "pp"))


def test_expansion():
    x = parse_expression("2*(a[pp] - w)^2")
    y = parse_expression("2*a[pp]*a[pp] - 4*w*a[pp] + 2*w^2")
    assert x == y


@given(polys)
def test_round_trip(p):
    assert parse_expression(str(p)) == p


@given(coeffs)
def test_scalar_round_trip(c):
    assert parse_scalar(str(c)) == c


def test_scalar_rejects_generators():
    with pytest.raises(ParseError):
        parse_scalar("a[pp]")
