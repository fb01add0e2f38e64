import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graph_presentation, one_generator
from skeinpbw.laurent import W
from skeinpbw.ncpoly import NCPolynomial, sg
from skeinpbw.presentation import GeneratorArc, Presentation, SOURCE_ABOVE
from skeinpbw.reflection import reflect_presentation, reflection_theta
from skeinpbw.relators import build_rewrite_system


def test_example():
    x = NCPolynomial.word((sg("a", "pp"), sg("b", "mm")), W)
    assert reflection_theta(x) == NCPolynomial.word((sg("b", "mm"), sg("a", "pp")), W ** -1)


def test_reflection_swaps_d_and_c():
    p = one_generator("d")
    assert reflect_presentation(p).generators[0].arc_type == "c"
    assert reflect_presentation(reflect_presentation(p)).generators[0].arc_type == "d"


def _systems(p):
    p, _ = p.normalized()
    r = reflect_presentation(p)
    return p, build_rewrite_system(p), r, build_rewrite_system(r)


def _loop_edge_c():
    gens = [GeneratorArc("x", ("u", 0), ("b", 2), None, 1),
            GeneratorArc("y", ("b", 0), ("b", 1), SOURCE_ABOVE, 0)]
    return Presentation(["b", "u"], gens)


CASES = {
    "one": lambda: one_generator("d"),
    "daisy1": lambda: graph_presentation("daisy1.json"),
    "daisy2": lambda: graph_presentation("daisy2.json"),
    "loop_edge": lambda: graph_presentation("loop_edge.json"),
    "loop_edge_v": _loop_edge_c,
    "theta": lambda: graph_presentation("theta.json"),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_theta_images_of_relators_vanish(name):
    p, rs, r, rr = _systems(CASES[name]())
    for rel in rs.relator_list():
        assert not rr.normal_form(reflection_theta(rel.as_polynomial())), rel.text()
    assert not rr.certify_confluence()["failures"]


@pytest.fixture(scope="module")
def daisy_pair():
    return _systems(graph_presentation("daisy1.json"))


@st.composite
def words(draw, size=8):
    n = draw(st.integers(0, 3))
    return draw(st.lists(st.integers(0, size - 1), min_size=n, max_size=n))


@given(words(), words())
def test_anti_multiplicative(daisy_pair, u, v):
    _, rs, _, rr = daisy_pair
    x = NCPolynomial.word(tuple(rs.alphabet[k] for k in u), W ** len(v))
    y = NCPolynomial.word(tuple(rs.alphabet[k] for k in v))
    left = rr.normal_form(reflection_theta(rs.multiply(x, y)))
    right = rr.multiply(reflection_theta(y), reflection_theta(x))
    assert left == right


def test_theta_is_an_involution():
    rng = random.Random(3)
    letters = [sg(a, s) for a in "ab" for s in ("pp", "pm", "mp", "mm")]
    for _ in range(50):
        x = NCPolynomial({tuple(rng.choice(letters) for _ in range(rng.randint(0, 4))):
                          W ** rng.randint(-3, 3) * rng.randint(1, 5) for _ in range(3)})
        assert reflection_theta(reflection_theta(x)) == x
