import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinpbw.errors import UnsupportedError, ValidationError
from skeinpbw.laurent import w
from skeinpbw.ncpoly import NCPolynomial, sg
from skeinpbw.presentation import (SOURCE_ABOVE, TARGET_ABOVE, ArcView, GeneratorArc,
                                   Presentation, apply_moves, classify_type, dress,
                                   height_reversed_m, inverse_n, m_matrix, match_configuration,
                                   n_matrix, presentation_from_json, reverse_height,
                                   reverse_orientation)

ALL_TYPES = {
    "a": GeneratorArc("a", ("u", 0), ("v", 0)),
    "b": GeneratorArc("a", ("u", 1), ("u", 0), TARGET_ABOVE),
    "c": GeneratorArc("a", ("u", 0), ("u", 1), TARGET_ABOVE),
    "d": GeneratorArc("a", ("u", 0), ("u", 1), SOURCE_ABOVE),
    "e": GeneratorArc("a", ("u", 1), ("u", 0), SOURCE_ABOVE),
}


def letter(state, c=1):
    return NCPolynomial.letter(sg("a", state), c if not isinstance(c, int) else w(0) * c)


@pytest.mark.parametrize("t", sorted(ALL_TYPES))
def test_classification(t):
    assert classify_type(ALL_TYPES[t]) == t


def test_missing_height_is_rejected():
    with pytest.raises(ValidationError):
        classify_type(GeneratorArc("a", ("u", 0), ("u", 1)))


def test_dressed_matrix_examples():
    assert n_matrix(ALL_TYPES["a"]) == m_matrix("a")
    n = n_matrix(ALL_TYPES["d"])
    assert n[0, 0] == letter("mp", -w(-5))
    assert n[1, 1] == letter("pm", w(-1))


def test_orientation_reversal():
    v = reverse_orientation(ArcView.of(ALL_TYPES["a"]))
    assert all(v.m[i, j] == m_matrix("a")[j, i] for i in range(2) for j in range(2))
    twice = reverse_orientation(reverse_orientation(ArcView.of(ALL_TYPES["d"])))
    assert twice.m == m_matrix("a") and twice.arc_type == "d"
    assert reverse_orientation(ArcView.of(ALL_TYPES["d"])).arc_type == "e"
    assert reverse_orientation(ArcView.of(ALL_TYPES["c"])).arc_type == "b"


@pytest.mark.parametrize("t", "bcde")
def test_inversion_formula_matches_orientation_reversal(t):
    view = ArcView.of(ALL_TYPES[t])
    assert reverse_orientation(view).n() == inverse_n(t, view.n())


@pytest.mark.parametrize("t", "bcde")
def test_height_reversal_is_an_involution(t):
    view = ArcView.of(ALL_TYPES[t])
    once = reverse_height(view)
    assert once.arc_type == {"b": "e", "e": "b", "c": "d", "d": "c"}[t]
    assert reverse_height(once).m == m_matrix("a")


def test_height_reversal_of_d_is_c():
    assert reverse_height(ArcView.of(ALL_TYPES["d"])).arc_type == "c"
    with pytest.raises(UnsupportedError):
        reverse_height(ArcView.of(ALL_TYPES["a"]))
    with pytest.raises(UnsupportedError):
        height_reversed_m("a", m_matrix("a"))


@pytest.mark.parametrize("t", "bcde")
def test_moves_commute(t):
    view = ArcView.of(ALL_TYPES[t])
    oh = apply_moves(view, ("orientation", "height"))
    ho = apply_moves(view, ("height", "orientation"))
    assert oh.m == ho.m and oh.arc_type == ho.arc_type


def _arc(id_, s, t, h=None, k=0):
    return GeneratorArc(id_, s, t, h, k)


def test_configuration_examples():
    alpha = _arc("x", ("u", 0), ("v", 0), k=1)
    beta = _arc("y", ("w", 0), ("z", 0))
    m = match_configuration(alpha, beta)
    assert m.case == "i" and not any(m.recipe.values())
    alpha = _arc("x", ("u", 1), ("v", 0), k=1)
    beta = _arc("y", ("u", 0), ("w", 0))
    assert match_configuration(alpha, beta).case == "ii"
    # s(beta) < s(alpha) < t(beta) < t(alpha), both loops of type d
    alpha = _arc("x", ("b", 1), ("b", 3), SOURCE_ABOVE, 1)
    beta = _arc("y", ("b", 0), ("b", 2), SOURCE_ABOVE)
    m = match_configuration(alpha, beta)
    assert m.case == "viii" and not any(m.recipe.values())


def _two_arc_candidates():
    ends = [("u", 0), ("u", 1), ("v", 0), ("v", 1), ("w", 0), ("x", 0)]
    for e in itertools.permutations(ends, 4):
        if e[0][0] != e[1][0] and e[2][0] != e[3][0]:
            yield _arc("x", e[0], e[1], k=1), _arc("y", e[2], e[3])
    for pos in itertools.permutations(range(4)):
        for h1, h2 in itertools.product((SOURCE_ABOVE, TARGET_ABOVE), repeat=2):
            yield _arc("x", ("b", pos[0]), ("b", pos[1]), h1, 1), _arc("y", ("b", pos[2]), ("b", pos[3]), h2)
    for pa in range(3):
        for ls, lt in itertools.permutations([x for x in range(3) if x != pa], 2):
            for h in (SOURCE_ABOVE, TARGET_ABOVE):
                yield _arc("x", ("u", 0), ("b", pa), k=1), _arc("y", ("b", ls), ("b", lt), h)


def test_every_configuration_is_reached():
    cases = {match_configuration(a, b).case for a, b in _two_arc_candidates()}
    assert cases == {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"}


def test_presentation_validation():
    with pytest.raises(ValidationError):
        presentation_from_json({"generators": [{"id": "a", "source": ["u", 0], "target": ["v", 0]},
                                               {"id": "a", "source": ["u", 1], "target": ["v", 1]}]})
    with pytest.raises(ValidationError):
        presentation_from_json({"generators": [{"id": "a", "source": ["u", 0], "target": ["v", 0]},
                                               {"id": "b", "source": ["u", 0], "target": ["v", 1]}]})
    with pytest.raises(ValidationError):
        presentation_from_json({"generators": [{"id": "a", "source": ["u", 0], "target": ["v", 0]}],
                                "relations": [["a"]]})
    with pytest.raises(ValidationError):
        presentation_from_json({"generators": "nope"})


def test_normalisation_flips_b_and_e():
    p = Presentation(["u"], [ALL_TYPES["b"]])
    q, flips = p.normalized()
    assert flips == {"a"} and q.generators[0].arc_type == "c"


@given(st.permutations(["a", "b", "c"]))
def test_order_field_sets_alphabet(order):
    gens = [{"id": g, "source": [f"s{g}", 0], "target": [f"t{g}", 0]} for g in "abc"]
    p = presentation_from_json({"generators": gens, "order": order})
    assert [g.id for g in p.ordered()] == order
    assert presentation_from_json(p.to_json()).to_json() == p.to_json()


def test_dress_rejects_unknown_type():
    with pytest.raises(ValueError):
        dress("z", m_matrix("a"))
