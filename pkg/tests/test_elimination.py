import pytest

from conftest import file_presentation
from skeinpbw.elimination import (eliminate_generator, loop_identity_check, loop_residuals,
                                  transported_relators)
from skeinpbw.errors import UnsupportedError, ValidationError
from skeinpbw.presentation import SOURCE_ABOVE, GeneratorArc, Presentation
from skeinpbw.relators import build_rewrite_system


@pytest.fixture(scope="module")
def triangle():
    return file_presentation("triangle.json")


def test_default_eliminates_last_letter(triangle):
    small, subst = eliminate_generator(triangle)
    assert [g.id for g in small.ordered()] == ["al", "be"]
    assert not small.relations
    assert {g.arc for g in subst} == {"ga"}
    assert len(subst) == 4


@pytest.mark.parametrize("target", ["al", "be", "ga"])
def test_transported_relators_vanish(triangle, target):
    small, subst = eliminate_generator(triangle, {0: target})
    out = transported_relators(triangle, small, subst)
    # 7 same-arc relators plus 16 for each of the two exchange pairs
    assert len(out) == 39
    assert all(not image for _, image in out)


@pytest.mark.parametrize("shift", [0, 1, 2])
def test_rotated_relation_is_equivalent(triangle, shift):
    word = triangle.relations[0]
    rotated = Presentation(triangle.boundary_arcs, triangle.generators,
                           [word[shift:] + word[:shift]])
    small, subst = eliminate_generator(rotated)
    assert all(not image for _, image in transported_relators(rotated, small, subst))


def test_relation_holds_after_substitution(triangle):
    small, subst = eliminate_generator(triangle)
    rs = build_rewrite_system(small)
    res = loop_residuals(triangle.relations[0], triangle, rs, subst)
    assert all(not e for row in res for e in row)


def test_loop_identity_examples():
    p = Presentation(["u", "v"], [GeneratorArc("a", ("u", 0), ("v", 0))])
    rs = build_rewrite_system(p)
    assert loop_identity_check(["a^-1", "a"], p, rs)
    assert loop_identity_check(["a", "a^-1"], p, rs)
    assert not loop_identity_check(["a"], p, rs)


def test_single_generator_relation_is_rejected():
    p = Presentation(["u", "v"], [GeneratorArc("a", ("u", 0), ("v", 0))], [["a^-1", "a"]])
    with pytest.raises(ValidationError):
        eliminate_generator(p, {0: "a"})


def test_isolation_past_a_loop_is_unsupported():
    gens = [GeneratorArc("d", ("u", 0), ("u", 3), SOURCE_ABOVE, 0),
            GeneratorArc("x", ("v", 0), ("u", 1), None, 1),
            GeneratorArc("y", ("u", 2), ("v", 1), None, 2)]
    p = Presentation(["u", "v"], gens, [["d", "x", "y"]])
    with pytest.raises(UnsupportedError):
        eliminate_generator(p, {0: "y"})


def test_unknown_target(triangle):
    with pytest.raises(ValidationError):
        eliminate_generator(triangle, {0: "zz"})


def test_no_relations_is_identity():
    p = Presentation(["u", "v"], [GeneratorArc("a", ("u", 0), ("v", 0))])
    assert eliminate_generator(p) == (p, {})
