import json

import pytest
from hypothesis import given, settings

from glicci.complex import SimplicialComplex, mask_of
from glicci.errors import Not2CM, NotAShelling, NotCohenMacaulay, NotPure, SizeGuardExceeded, WrongCodim
from glicci.fields import GF2, QQ
from glicci.recognizers import find_shelling, is_2cm
from glicci.stanley import (
    StanleyDecomposition,
    StanleySpace,
    best_decomposition,
    depth_vs_sdepth,
    facet_partition,
    is_partitionable,
    partition_from_shelling,
    sdepth,
    sdepth_of,
    stanley_decomposition_2cm_codim3,
    stanley_decomposition_codim2,
    verify_decomposition,
)

from conftest import complexes, path3, triangle_boundary
from oracles import is_interval_partition, sdepth_bruteforce

S = SimplicialComplex
FIVE_CYCLE = S.from_facets(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])


def pairs(part):
    return [(d["F"], d["G"]) for d in part.to_dict()["intervals"]]


def test_simplex_decomposition():
    cx = S.simplex(3)
    dec = StanleyDecomposition.from_pairs(cx, [([], [1, 2, 3])])
    assert verify_decomposition(cx, dec)
    assert sdepth_of(dec) == 3


def test_four_points_decomposition(four_points):
    dec = StanleyDecomposition.from_pairs(four_points, [([], [1]), ([2], [2]), ([3], [3]), ([4], [4])])
    check = verify_decomposition(four_points, dec)
    assert check and check.hilbert_agrees
    assert sdepth_of(dec) == 1


def test_dropping_a_space_is_caught(four_points):
    dec = StanleyDecomposition.from_pairs(four_points, [([], [1]), ([3], [3]), ([4], [4])])
    check = verify_decomposition(four_points, dec)
    assert not check and check.face == (2,) and check.message == "face not covered"
    assert not check.hilbert_agrees
    dup = StanleyDecomposition.from_pairs(four_points, [([], [1]), ([1], [1]), ([2], [2]), ([3], [3]), ([4], [4])])
    assert verify_decomposition(four_points, dup).message == "face covered twice"
    with pytest.raises(ValueError):
        StanleySpace(mask_of([1]), mask_of([2]))


def test_sdepth_examples(four_points):
    for n in range(1, 5):
        assert sdepth(S.simplex(n))[0] == n
    value, dec = sdepth(four_points)
    assert value == 1 and verify_decomposition(four_points, dec)
    value, dec = sdepth(S(3, [0]))
    assert value == 0 and dec.to_dict() == {"spaces": [{"u": [], "Z": []}]}
    with pytest.raises(SizeGuardExceeded):
        sdepth(S.simplex(4), guard_n=3)


@settings(max_examples=30)
@given(complexes(max_n=5))
def test_sdepth_matches_oracle(cx):
    value, dec = sdepth(cx)
    assert value == sdepth_bruteforce(cx.facet_lists())
    assert verify_decomposition(cx, dec)
    assert sdepth_of(dec) == value


def test_2cm_codim3_examples(four_points):
    dec = stanley_decomposition_2cm_codim3(four_points, QQ)
    assert verify_decomposition(four_points, dec)
    assert sdepth_of(dec) >= 1
    point = S.from_facets(1, [[1]])
    with pytest.raises(WrongCodim):
        stanley_decomposition_2cm_codim3(point, QQ)


def test_2cm_codim3_single_vertex_base():
    # a point in 4 variables has codimension 3; the recursion bottoms out at once
    cx = S.from_facets(4, [[2]])
    with pytest.raises(Not2CM):
        stanley_decomposition_2cm_codim3(cx, QQ)
    from glicci.stanley import _codim3

    assert _codim3(cx, 0b1111, QQ, True) == [StanleySpace(0, mask_of([2]))]


def test_2cm_codim3_rejects(shifted_nonlevel):
    with pytest.raises(Not2CM):
        stanley_decomposition_2cm_codim3(shifted_nonlevel, QQ)


@settings(max_examples=40)
@given(complexes(max_n=6, pure=True))
def test_2cm_codim3_decompositions_verify(cx):
    if cx.n - cx.dim - 1 != 3 or not is_2cm(cx, QQ):
        return
    dec = stanley_decomposition_2cm_codim3(cx, QQ)
    assert verify_decomposition(cx, dec)
    assert sdepth_of(dec) >= depth_vs_sdepth(cx, QQ).depth


def test_codim2_examples():
    part = facet_partition(FIVE_CYCLE)
    assert len(part.intervals) == 5
    assert verify_decomposition(FIVE_CYCLE, part.as_decomposition(FIVE_CYCLE))
    assert pairs(part)[0] == ([], [1, 2])
    dec = stanley_decomposition_codim2(path3(), QQ)
    assert sorted((s.u, s.Z) for s in dec.spaces) == [(0, mask_of([1, 2])), (mask_of([3]), mask_of([2, 3]))]
    dec = stanley_decomposition_codim2(triangle_boundary(), QQ)
    assert len(dec.spaces) == 3 and sdepth_of(dec) == 2
    with pytest.raises(WrongCodim):
        stanley_decomposition_codim2(FIVE_CYCLE, QQ)
    with pytest.raises(NotCohenMacaulay):
        stanley_decomposition_codim2(S.from_facets(4, [[1, 2], [3, 4]]), QQ)


def test_partition_from_shelling(mt_complex):
    tri = triangle_boundary()
    part = partition_from_shelling(tri, [[1, 2], [1, 3], [2, 3]])
    assert pairs(part) == [([], [1, 2]), ([3], [1, 3]), ([2, 3], [2, 3])]
    single = partition_from_shelling(S.from_facets(3, [[1, 2, 3]]), [[1, 2, 3]])
    assert pairs(single) == [([], [1, 2, 3])]
    part = partition_from_shelling(mt_complex, find_shelling(mt_complex))
    assert len(part.intervals) == 10
    assert is_interval_partition(mt_complex.facet_lists(), pairs(part))
    with pytest.raises(NotAShelling):
        partition_from_shelling(S.from_facets(4, [[1, 2], [3, 4], [2, 3]]), [[1, 2], [3, 4], [2, 3]])


@settings(max_examples=40)
@given(complexes(max_n=5, pure=True))
def test_shelling_partitions_are_exact_covers(cx):
    order = find_shelling(cx)
    if order is None:
        return
    part = partition_from_shelling(cx, order)
    assert is_interval_partition(cx.facet_lists(), pairs(part))


def test_partitionable(four_points, rp2, mt_complex):
    v = is_partitionable(four_points)
    assert v and is_interval_partition(four_points.facet_lists(), [(d["F"], d["G"]) for d in v.witness["intervals"]])
    assert is_partitionable(rp2)
    assert is_partitionable(mt_complex)
    assert is_partitionable(rp2, use_shelling=False)
    with pytest.raises(NotPure):
        is_partitionable(S.from_facets(3, [[1, 2], [3]]))


def test_routes(four_points, rp2, shifted_nonlevel):
    assert best_decomposition(four_points, QQ)[0] == "2cm-codim3"
    assert best_decomposition(path3(), QQ)[0] == "cm-codim2"
    assert best_decomposition(shifted_nonlevel, QQ)[0] == "shelling"
    assert best_decomposition(rp2, QQ)[0] == "exhaustive"
    assert best_decomposition(S.from_facets(3, [[1, 2], [3]]), QQ)[0] == "exhaustive"


def test_depth_vs_sdepth(rp2):
    rep = depth_vs_sdepth(S(0, [0]), QQ)
    assert (rep.depth, rep.sdepth_lower_bound, rep.conjecture_holds) == (0, 0, True)
    rep = depth_vs_sdepth(rp2, GF2)
    assert rep.depth == 2 and rep.sdepth_lower_bound == 3 and rep.conjecture_holds
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["route"] == "exhaustive" and "spaces" in d


def test_sorted_output():
    dec = StanleyDecomposition.from_pairs(path3(), [([3], [2, 3]), ([], [1, 2])])
    assert json.loads(dec.to_json()) == {"spaces": [{"u": [], "Z": [1, 2]}, {"u": [3], "Z": [2, 3]}]}
