import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glicci.complex import (
    SimplicialComplex,
    mask_of,
    parse_complex,
    parse_complex_json,
    parse_complex_text,
)
from glicci.errors import ApexExists, DimensionOutOfRange, EmptyInput, NotAFace, ParseError, VertexOutOfRange
from glicci.recognizers import relabel

from conftest import complexes, path3, triangle_boundary
from oracles import all_faces, faces_avoiding, facets_of, minimal_nonfaces

S = SimplicialComplex
RP2_IDEAL = [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6], [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]


def test_from_facets_path():
    p = path3()
    assert p.facet_lists() == [[1, 2], [2, 3]]
    assert p.dim == 1
    assert p.f_vector() == (1, 3, 2)


def test_from_facets_absorbs_and_dedups():
    assert S.from_facets(3, [[1, 2], [2], [1, 2]]).facet_lists() == [[1, 2]]


def test_rp2_from_ideal_oracle(rp2):
    expected = facets_of(faces_avoiding(6, RP2_IDEAL))
    assert rp2.facet_lists() == expected
    assert rp2.dim == 2
    assert rp2.f_vector() == (1, 6, 15, 10)


def test_from_facets_errors():
    with pytest.raises(VertexOutOfRange):
        S.from_facets(3, [[1, 4]])
    with pytest.raises(VertexOutOfRange):
        S.from_facets(3, [[0, 1]])
    with pytest.raises(EmptyInput):
        S.from_facets(3, [])


def test_empty_face_complex():
    cx = S(4, [0])
    assert cx.dim == -1
    assert cx.f_vector() == (1,)
    assert cx.facets == (0,)


def test_purity(rp2):
    assert path3().is_pure()
    assert not S.from_facets(3, [[1, 2], [3]]).is_pure()
    assert rp2.is_pure()


def test_link_examples(rp2):
    assert path3().link([2]).facet_lists() == [[1], [3]]
    assert rp2.link([]) == rp2
    lk = rp2.link([1])
    assert lk.vertex_list == (2, 3, 4, 5, 6)
    assert len(lk.facets) == 5
    assert all(sum(1 for f in lk.facets if f >> (v - 1) & 1) == 2 for v in lk.vertex_list)
    with pytest.raises(NotAFace):
        path3().link([1, 3])


def test_deletion_examples(rp2):
    assert path3().deletion([2]).facet_lists() == [[1], [3]]
    assert rp2.deletion([]) == rp2
    gens = [g for g in rp2.deletion([1]).minimal_nonfaces() if g != 1]
    listed = sorted(sorted(v + 1 for v in range(6) if g >> v & 1) for g in gens)
    assert listed == [[2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]


def test_cone_examples(rp2):
    assert S.from_facets(2, [[1]]).cone(2).facet_lists() == [[1, 2]]
    assert S(1, [0]).cone(1).facet_lists() == [[1]]
    lk = rp2.link([1])
    # ideal of the cone over lk 1 is the colon of I by x1
    from glicci.ideal import colon_by_variable, stanley_reisner_ideal

    assert stanley_reisner_ideal(lk.cone(1)) == colon_by_variable(stanley_reisner_ideal(rp2), 1)
    with pytest.raises(ApexExists):
        rp2.cone(1)


def test_is_cone_with_apex(rp2):
    assert S.from_facets(3, [[1, 2], [1, 3]]).is_cone_with_apex(1)
    assert not path3().is_cone_with_apex(1)
    assert not any(rp2.is_cone_with_apex(k) for k in range(1, 7))


def test_restriction(rp2):
    assert path3().restriction([1, 3]).facet_lists() == [[1], [3]]
    assert rp2.restriction(range(1, 7)) == rp2
    assert S(6, rp2.restriction([1, 2, 3]).facets).facet_lists() == [[1, 2], [1, 3], [2, 3]]


def test_skeleton(rp2):
    assert S.from_facets(3, [[1, 2, 3]]).skeleton(1) == triangle_boundary()
    assert rp2.skeleton(2) == rp2
    k6 = rp2.skeleton(1)
    assert len(k6.facets) == 15 and k6.dim == 1
    with pytest.raises(DimensionOutOfRange):
        rp2.skeleton(3)
    with pytest.raises(DimensionOutOfRange):
        rp2.skeleton(-2)


def test_minimal_nonfaces(rp2, four_points):
    assert S.simplex(3).minimal_nonfaces() == []
    pairs = [mask_of(p) for p in [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]]
    assert four_points.minimal_nonfaces() == pairs
    assert rp2.minimal_nonfaces() == [mask_of(g) for g in RP2_IDEAL]


def test_euler_examples(rp2):
    tri = triangle_boundary()
    assert tri.f_vector() == (1, 3, 3)
    assert tri.reduced_euler() == -1
    for n in range(1, 6):
        assert S.simplex(n).reduced_euler() == 0
    assert rp2.reduced_euler() == 0
    assert S(2, [0]).reduced_euler() == -1


@given(complexes())
def test_faces_match_oracle(cx):
    oracle = all_faces(cx.facet_lists())
    assert {frozenset(v + 1 for v in range(cx.n) if f >> v & 1) for f in cx.faces} == oracle
    assert len(cx.faces) == sum(cx.f_vector())


@given(complexes())
def test_minimal_nonfaces_oracle(cx):
    oracle = minimal_nonfaces(cx.n, all_faces(cx.facet_lists()))
    got = [[v + 1 for v in range(cx.n) if g >> v & 1] for g in cx.minimal_nonfaces()]
    assert sorted(got) == oracle


@given(complexes(), st.data())
def test_deletions_commute(cx, data):
    j = data.draw(st.integers(1, cx.n))
    k = data.draw(st.integers(1, cx.n))
    assert cx.deletion([j]).deletion([k]) == cx.deletion([k]).deletion([j])


@given(complexes(), st.data())
def test_link_of_link(cx, data):
    facet = data.draw(st.sampled_from(cx.facets))
    verts = [v + 1 for v in range(cx.n) if facet >> v & 1]
    f = data.draw(st.lists(st.sampled_from(verts), unique=True)) if verts else []
    g = [v for v in verts if v not in f]
    g = data.draw(st.lists(st.sampled_from(g), unique=True)) if g else []
    assert cx.link(f).link(g) == cx.link(f + g)


@given(complexes())
def test_restriction_to_existing_vertices(cx):
    assert cx.restriction(cx.existing_vertices) == cx


@given(complexes())
def test_face_split_at_vertex(cx):
    for k in cx.vertex_list:
        bit = 1 << (k - 1)
        dele = cx.deletion([k]).faces
        star = {g | bit for g in cx.link([k]).faces}
        assert not dele & star
        assert dele | star == cx.faces


@given(complexes())
def test_cone_then_delete_apex(cx):
    free = [v for v in range(1, cx.n + 1) if not cx.existing_vertices >> (v - 1) & 1]
    if not free:
        cx = S(cx.n + 1, cx.facets)
        free = [cx.n]
    apex = free[0]
    coned = cx.cone(apex)
    assert coned.is_cone_with_apex(apex)
    assert coned.deletion([apex]) == cx


@given(complexes(), st.data())
def test_canonical_form_is_invariant(cx, data):
    perm = data.draw(st.permutations(list(range(1, cx.n + 1))))
    assert relabel(cx, perm).canonical_form() == cx.canonical_form()


def test_canonical_form_separates():
    assert path3().canonical_form() != triangle_boundary().canonical_form()
    # ghost vertices do not change the key
    assert S.from_facets(5, [[2, 4]]).canonical_form() == S.from_facets(2, [[1, 2]]).canonical_form()


@given(complexes())
def test_text_and_json_round_trip(cx):
    assert parse_complex_text(cx.to_text()) == cx
    assert parse_complex_json(cx.to_json()) == cx
    assert parse_complex(cx.to_text()).to_text() == cx.to_text()


def test_text_format_details():
    text = "# a comment\nn 3\n2 1   # facets may be unsorted\n3 2\n"
    cx = parse_complex_text(text)
    assert cx.facet_lists() == [[1, 2], [2, 3]]
    assert cx.to_text() == "n 3\n1 2\n2 3\n"
    assert S(2, [0]).to_text() == "n 2\n{}\n"
    assert json.loads(cx.to_json()) == {"n": 3, "facets": [[1, 2], [2, 3]]}


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3\n1 2\n1 x\n", 3),
        ("n 3\n1 4\n", 2),
        ("3\n1 2\n", 1),
        ("n -1\n", 1),
    ],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_complex_text(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_errors_misc():
    with pytest.raises(ParseError):
        parse_complex_text("# nothing\n")
    with pytest.raises(ParseError):
        parse_complex_text("n 3\n")
    with pytest.raises(ParseError):
        parse_complex_json('{"n": 2}')
    with pytest.raises(ParseError):
        parse_complex_json('{"n": 2, "facets": [[3]]}')
