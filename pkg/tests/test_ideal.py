import pytest
from hypothesis import given

from glicci.complex import SimplicialComplex
from glicci.errors import NotSubideal, ParseError, UnitIdeal, VariableCollision, VertexOutOfRange
from glicci.ideal import (
    SquarefreeMonomialIdeal as Ideal,
    bdl_compose,
    codim_report,
    colon_by_variable,
    complex_of_ideal,
    is_complete_intersection,
    parse_ideal_json,
    parse_ideal_text,
    stanley_reisner_ideal,
    variable_free_part,
)

from conftest import complexes
from oracles import all_faces, faces_avoiding

RP2 = [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6], [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]
PAIRS = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]


def ideal(n, gens):
    return Ideal.from_lists(n, gens)


def test_minimalization_and_zero_unit():
    assert ideal(3, [[1, 2], [1]]).gen_lists() == [[1]]
    zero, unit = ideal(3, []), ideal(3, [[]])
    assert zero.is_zero and not zero.is_unit
    assert unit.is_unit and not unit.is_zero
    assert zero != unit
    assert str(ideal(3, [[1, 2], [3]])) == "(x1x2, x3)"


def test_from_lists_rejects_bad_index():
    with pytest.raises(VertexOutOfRange):
        ideal(3, [[4]])


def test_stanley_reisner_ideal_examples(rp2, four_points):
    assert stanley_reisner_ideal(SimplicialComplex.simplex(4)).is_zero
    assert stanley_reisner_ideal(four_points).gen_lists() == PAIRS
    assert stanley_reisner_ideal(rp2).gen_lists() == RP2


def test_complex_of_ideal_examples(char_dep):
    assert complex_of_ideal(ideal(3, [])) == SimplicialComplex.simplex(3)
    assert complex_of_ideal(ideal(4, [[1], [2], [3], [4]])) == SimplicialComplex(4, [0])
    big = complex_of_ideal(ideal(7, RP2 + [[1, 7], [2, 7], [3, 7], [4, 7]]))
    assert big.is_pure() and big.dim + 1 == 3
    assert big == char_dep
    with pytest.raises(UnitIdeal):
        complex_of_ideal(ideal(3, [[]]))


@given(complexes())
def test_round_trip(cx):
    assert complex_of_ideal(stanley_reisner_ideal(cx)) == cx


@given(complexes())
def test_complex_of_ideal_matches_oracle(cx):
    gens = stanley_reisner_ideal(cx).gen_lists()
    assert all_faces(complex_of_ideal(ideal(cx.n, gens)).facet_lists()) == faces_avoiding(cx.n, gens)


def test_colon_examples(rp2):
    assert colon_by_variable(ideal(4, PAIRS), 4).gen_lists() == [[1], [2], [3]]
    assert colon_by_variable(ideal(4, []), 2).is_zero
    i = stanley_reisner_ideal(rp2)
    assert colon_by_variable(i, 1) == stanley_reisner_ideal(rp2.link([1]).cone(1))
    with pytest.raises(VertexOutOfRange):
        colon_by_variable(i, 7)


def test_variable_free_part_examples():
    assert variable_free_part(ideal(6, RP2), 1).gen_lists() == [[2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]
    assert variable_free_part(ideal(5, []), 3).is_zero
    assert variable_free_part(ideal(4, PAIRS), 4).gen_lists() == [[1, 2], [1, 3], [2, 3]]


def test_bdl_compose_examples():
    got = bdl_compose(ideal(4, [[1], [2], [3]]), ideal(4, [[1, 2], [1, 3], [2, 3]]), 4)
    assert got == ideal(4, PAIRS)
    char_dep = bdl_compose(ideal(7, [[1], [2], [3], [4]]), ideal(7, RP2), 7)
    assert char_dep == ideal(7, RP2 + [[1, 7], [2, 7], [3, 7], [4, 7]])
    J = ideal(4, [[1], [2, 3]])
    assert bdl_compose(J, ideal(4, []), 4).gen_lists() == [[1, 4], [2, 3, 4]]


def test_bdl_compose_errors():
    with pytest.raises(VariableCollision):
        bdl_compose(ideal(3, [[1, 3]]), ideal(3, []), 3)
    with pytest.raises(VariableCollision):
        bdl_compose(ideal(3, [[1]]), ideal(3, [[1, 3]]), 3)
    with pytest.raises(NotSubideal):
        bdl_compose(ideal(3, [[1]]), ideal(3, [[2]]), 3)


def test_codim_examples(shifted_nonlevel):
    rep = codim_report(ideal(6, RP2))
    assert (rep.codim, rep.unmixed, rep.dim_quotient) == (3, True, 3)
    rep = codim_report(ideal(7, [[1], [2], [3], [4]]))
    assert (rep.codim, rep.unmixed) == (4, True)
    rep = codim_report(stanley_reisner_ideal(shifted_nonlevel))
    assert (rep.codim, rep.unmixed) == (3, True)
    with pytest.raises(UnitIdeal):
        codim_report(ideal(3, [[]]))


def test_mixed_ideal_detected():
    # complex {12, 3}: not pure, so the ideal is mixed
    assert not codim_report(ideal(3, [[1, 3], [2, 3]])).unmixed


def test_complete_intersection():
    assert is_complete_intersection(ideal(3, [[1], [2], [3]]))
    assert is_complete_intersection(ideal(5, [[1, 2], [3, 4, 5]]))
    assert not is_complete_intersection(ideal(4, PAIRS))
    with pytest.raises(UnitIdeal):
        is_complete_intersection(ideal(2, [[]]))


@given(complexes())
def test_bdl_identity_every_vertex(cx):
    i = stanley_reisner_ideal(cx)
    for k in range(1, cx.n + 1):
        J, c = colon_by_variable(i, k), variable_free_part(i, k)
        assert J.contains_ideal(c)
        assert bdl_compose(J, c, k) == i


@given(complexes())
def test_colon_of_composition(cx):
    i = stanley_reisner_ideal(cx)
    for k in range(1, cx.n + 1):
        J, c = colon_by_variable(i, k), variable_free_part(i, k)
        composed = bdl_compose(J, c, k)
        assert colon_by_variable(composed, k) == Ideal(cx.n, list(J.gens) + list(c.gens))


@given(complexes())
def test_coning_keeps_codim(cx):
    bigger = SimplicialComplex(cx.n + 1, cx.facets)
    coned = bigger.cone(cx.n + 1)
    assert codim_report(stanley_reisner_ideal(coned)).codim == codim_report(stanley_reisner_ideal(cx)).codim


def test_parsers():
    i = parse_ideal_text("# rp2\n1 2 3\n\n2 3 6\n", 6)
    assert i.gen_lists() == [[1, 2, 3], [2, 3, 6]]
    assert parse_ideal_json('{"n": 4, "gens": [[1], [2, 3]]}').gen_lists() == [[1], [2, 3]]
    with pytest.raises(ParseError) as info:
        parse_ideal_text("1 2\n1 9\n", 4)
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_ideal_text("a b\n", 4)
    assert ideal(3, [[1, 2], [3]]).to_text() == "1 2\n3\n"
