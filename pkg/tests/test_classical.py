import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import file_presentation, graph_presentation, load_json
from skeinpbw.classical import (evaluate_at_point, is_commutator, random_points, random_sl2,
                                relators_vanish, transport_relators, u_determinant,
                                u_generators, u_matrix, validate_spin, zero_spin)
from skeinpbw.elimination import eliminate_generator
from skeinpbw.errors import UnsupportedError, ValidationError
from skeinpbw.laurent import ONE, A, W
from skeinpbw.ncpoly import NCPolynomial, StatedGenerator
from skeinpbw.presentation import I2P, TARGET_ABOVE, GeneratorArc, n_matrix
from skeinpbw.relators import build_rewrite_system
from skeinpbw.rewrite import specialize


@pytest.fixture(scope="module")
def triangle():
    return file_presentation("triangle.json")


def test_spin_examples(triangle):
    assert validate_spin(triangle, {"al": 1, "be": 0, "ga": 0}) == (True, [])
    assert validate_spin(triangle, zero_spin(triangle)) == (False, [0])
    p = file_presentation("two_vertex.json")
    assert validate_spin(p, {"a": 1, "b": 1})[0]
    with pytest.raises(ValidationError):
        validate_spin(triangle, {"al": 1})


def test_u_of_type_d_with_even_spin_is_n(one_loop):
    p, _ = one_loop
    g = p.generators[0]
    assert u_matrix(g, 0) == n_matrix(g)


def test_u_needs_type_a_or_d():
    g = GeneratorArc("a", ("u", 0), ("u", 1), TARGET_ABOVE)
    with pytest.raises(UnsupportedError):
        u_matrix(g, 0)


@pytest.mark.parametrize("name,arc", [("two_vertex.json", "a"), ("one_loop", "a")])
def test_u_determinant_pulls_back_to_zero(name, arc):
    p = file_presentation(name) if name.endswith(".json") else graph_presentation(name + ".json")
    rs = build_rewrite_system(p)
    for parity in (0, 1):
        w = {g.id: parity for g in p.generators}
        _, from_u = u_generators(p, w)
        det = u_determinant(p, arc, w).substitute(from_u)
        assert not rs.normal_form(det)


def test_round_trip_between_letters(daisy1):
    p, rs = daisy1
    w = {"a": 1, "b": 0}
    to_u, from_u = u_generators(p, w)
    for g in rs.alphabet:
        back = NCPolynomial.letter(g).substitute(to_u).substitute(from_u)
        assert back == NCPolynomial.letter(g)


def test_trivial_loop_in_u_letters(triangle):
    # U(al) U(be) U(ga) = A^3 w^3 when the spin is odd on the relation
    w = {"al": 1, "be": 0, "ga": 0}
    small, subst = eliminate_generator(triangle)
    rs = build_rewrite_system(small)
    prod = I2P
    for name in triangle.relations[0]:
        prod = prod @ u_matrix(triangle.by_id[name], w[name])
    target = NCPolynomial.scalar(A ** 3 * W ** 3)
    for i in range(2):
        for j in range(2):
            e = prod[i, j] - (target if i == j else NCPolynomial())
            assert not rs.normal_form(e.substitute(subst))


@pytest.mark.parametrize("name", ["daisy1.json", "theta.json", "loop_edge.json"])
def test_commutators_at_one(name):
    p = graph_presentation(name)
    rs = specialize(build_rewrite_system(p), 1)
    for r in rs.relator_list():
        if r.leading[0].arc != r.leading[1].arc:
            assert is_commutator(r.as_polynomial()), r.text()


def test_not_commutative_at_two(type_a):
    _, rs = type_a
    rels = specialize(rs, 2).relator_list()
    assert not all(is_commutator(r.as_polynomial()) for r in rels)


@pytest.mark.parametrize("name", ["daisy1.json", "theta.json", "loop_edge.json"])
def test_random_points_annihilate_relators(name):
    p = graph_presentation(name)
    rs = build_rewrite_system(p)
    to_u, _ = u_generators(p, zero_spin(p))
    polys = transport_relators(rs, to_u)
    assert relators_vanish(polys, random_points(p, 20, seed=7)) == []


def test_fixed_point_example():
    p = file_presentation("two_vertex.json")
    to_u, _ = u_generators(p, zero_spin(p))
    polys = transport_relators(build_rewrite_system(p), to_u)
    pt = {"a": [[1, 1], [0, 1]], "b": [[1, 0], [1, 1]]}
    assert all(evaluate_at_point(x, pt) == 0 for x in polys)
    assert relators_vanish(polys, [load_json("points.json")]) == []


def test_letters_take_matrix_entries():
    pt = {"a": [[2, 1], [1, 1]], "b": [[1, 0], [0, 1]]}
    x = NCPolynomial.word((StatedGenerator("Ua", 0, 0), StatedGenerator("Ua", 1, 0)), W)
    assert evaluate_at_point(x, pt) == 2
    with pytest.raises(ValidationError):
        evaluate_at_point(NCPolynomial.letter(StatedGenerator("Uz", 0, 0)), pt)


def test_bad_points():
    x = NCPolynomial.scalar(ONE)
    with pytest.raises(ValidationError):
        evaluate_at_point(x, {"a": [[2, 0], [0, 1]]})
    with pytest.raises(ValidationError):
        evaluate_at_point(x, {"a": [[1, 0]]})
    with pytest.raises(ValidationError):
        evaluate_at_point(x, {"a": [["x", 0], [0, 1]]})


@given(st.integers(0, 10 ** 6))
def test_random_sl2_has_determinant_one(seed):
    m = random_sl2(random.Random(seed))
    assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == Fraction(1)
