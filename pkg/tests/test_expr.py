import pytest
from hypothesis import given
from hypothesis import strategies as st

from twisted_steenrod.expr import (
    ParseError,
    Prod,
    Sq,
    Sum,
    Tensor,
    eval_steenrod,
    kind_of,
    parse,
    parse_bo,
    parse_poly,
    parse_steenrod,
    parse_twisted,
    render,
)
from twisted_steenrod.steenrod import AlgebraId, SteenrodElement, adem_normalize, basis
from twisted_steenrod.twisted import TwistedSubalgebraId, twisted_basis
from twisted_steenrod.unstable import K, PolyElement, basis_elements, sq_action


def test_word_product():
    assert parse("Sq2 Sq1") == Prod((Sq(2), Sq(1)))
    assert parse_steenrod("Sq2 Sq1") == adem_normalize((2, 1))


def test_two_twisted_terms():
    node = parse("i1^2 | Sq3 Sq1 + i2 | Sq2")
    assert isinstance(node, Sum) and all(isinstance(t, Tensor) for t in node.terms)
    assert len(parse_twisted("i1^2 | Sq3 Sq1 + i2 | Sq2").terms) == 2


@pytest.mark.parametrize(
    "text, pos",
    [
        ("Sq2 | i1", 0),
        ("i1 | w2", 5),
        ("Sq2 +", 5),
        ("(Sq2", 4),
        ("Sq2 # Sq1", 4),
        ("2", 0),
        ("i1 | Sq1 | Sq2", 9),
        ("i1 | Sq1 + Sq2", 11),
        ("i1^x", 3),
    ],
)
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_operator_needs_operand_in_poly_context():
    with pytest.raises(ParseError):
        parse_poly("i1 Sq1")


def test_sq_acts_on_the_right():
    i1, i2 = PolyElement.generator(K, 0), PolyElement.generator(K, 1)
    assert parse_poly("Sq1 i2") == sq_action(1, i2)
    assert parse_poly("i1 Sq1 i2") == i1 * sq_action(1, i2)
    assert parse_poly("Sq2 (i1 i2)") == sq_action(2, i1 * i2)
    assert parse_poly("(Sq1 + Sq2) i2") == sq_action(1, i2) + sq_action(2, i2)


def test_bo_expressions():
    x = parse_bo("Sq1 w2", 4)
    assert x == parse_bo("w1 w2 + w3", 4)
    with pytest.raises(ParseError):
        parse_bo("w5", 4)


def test_constants():
    assert parse_steenrod("1") == SteenrodElement.one()
    assert parse_steenrod("0") == SteenrodElement.zero()
    assert parse_steenrod("Sq0") == SteenrodElement.one()


def test_kinds():
    assert kind_of(parse("Sq2 Sq2")) == "steenrod"
    assert kind_of(parse("i1 + Sq1 i2")) == "k"
    assert kind_of(parse("w1 w2")) == "bo"
    assert kind_of(parse("1 | Sq1")) == "twisted"
    with pytest.raises(ParseError):
        kind_of(parse("i1 w1"))


def _rendered_outputs():
    out = [str(x) for d in range(9) for x in basis(AlgebraId.FullA, d)]
    out += [str(x) for d in range(7) for x in twisted_basis(TwistedSubalgebraId.FullTwisted, d)]
    out += [str(x) for d in range(10) for x in basis_elements(K, d)]
    return out


def test_render_parse_roundtrip_on_outputs():
    for s in _rendered_outputs():
        node = parse(s)
        assert parse(render(node)) == node


def test_element_roundtrip():
    for d in range(6):
        for x in twisted_basis(TwistedSubalgebraId.FullTwisted, d):
            assert parse_twisted(str(x)) == x
        for x in basis_elements(K, d + 3):
            assert parse_poly(str(x)) == x


atoms = st.sampled_from(["Sq1", "Sq2", "Sq3", "Sq4", "1", "(Sq2 + Sq1)"])
exprs = st.lists(st.lists(atoms, min_size=1, max_size=3).map(" ".join), min_size=1, max_size=3).map(" + ".join)


@given(exprs)
def test_render_roundtrip_random(text):
    node = parse(text)
    assert parse(render(node)) == node
    assert eval_steenrod(parse(render(node))) == eval_steenrod(node)
