import pytest
from hypothesis import given, settings, strategies as st

from arapprox.errors import CycleDetected, InadmissibleRelation, UnknownVertex
from arapprox.quiver import (
    Path, Quiver, alternating_quiver, build_algebra, enumerate_paths, linear_quiver,
    path_algebra, underlying_line,
)
from oracles import count_paths


def test_single_vertex_has_one_path():
    assert enumerate_paths(Quiver(["1"])) == [Path("1", "1")]


def test_linear_a3_paths():
    paths = enumerate_paths(linear_quiver(3))
    assert len(paths) == 6
    names = {p.arrows for p in paths}
    assert names == {(), ("a32",), ("a21",), ("a32", "a21")}
    assert sum(1 for p in paths if p.length == 0) == 3
    assert paths[-1] == Path("3", "1", ("a32", "a21"))


def test_loop_is_a_cycle():
    with pytest.raises(CycleDetected):
        enumerate_paths(Quiver(["1"], [("b", "1", "1")]))
    with pytest.raises(CycleDetected):
        path_algebra(Quiver(["1", "2"], [("b", "1", "2"), ("c", "2", "1")]))


def test_unknown_vertex_in_arrow():
    with pytest.raises(UnknownVertex):
        Quiver(["1"], [("b", "1", "7")])


def test_dimension_of_kA3():
    assert path_algebra(linear_quiver(3)).dim == 6


def test_relation_drops_one_path():
    q = linear_quiver(3)
    alg = build_algebra(q, [[(1, ["a32", "a21"])]])
    assert alg.dim == 5
    assert alg.basis_paths("3", "1") == []
    assert alg.reduce(Path("3", "1", ("a32", "a21"))) == {}


def test_empty_quiver():
    assert path_algebra(Quiver([])).dim == 0


def test_commutativity_relation_on_a_square():
    q = Quiver(["1", "2", "3", "4"],
               [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
    alg = build_algebra(q, [[(1, ["a", "b"]), (-1, ["c", "d"])]])
    # 4 trivial + 4 arrows + one class of length-two paths
    assert alg.dim == 9
    ab = alg.coords(Path("1", "4", ("a", "b")), "1", "4")
    cd = alg.coords(Path("1", "4", ("c", "d")), "1", "4")
    assert ab == cd and len(ab) == 1


def test_inadmissible_relations():
    q = linear_quiver(3)
    with pytest.raises(InadmissibleRelation):
        build_algebra(q, [[(1, ["a32"])]])
    with pytest.raises(InadmissibleRelation):
        build_algebra(q, [[(1, ["a21", "a32"])]])
    with pytest.raises(InadmissibleRelation):
        build_algebra(q, [[(1, ["zz"])]])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_path_algebra_dimension_matches_dfs(n, data):
    # random acyclic quiver: arrows only from higher to lower index
    pairs = [(s, t) for s in range(1, n + 1) for t in range(1, s)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), max_size=7))
    arrows = [(f"x{k}", str(s), str(t)) for k, (s, t) in enumerate(chosen)]
    q = Quiver([str(i) for i in range(1, n + 1)], arrows)
    expected = count_paths(q.vertices, [(a.source, a.target) for a in q.arrows])
    assert path_algebra(q).dim == expected
    assert len(enumerate_paths(q)) == expected


def test_alternating_orientation():
    q = alternating_quiver(4)
    assert {(a.source, a.target) for a in q.arrows} == {("1", "2"), ("3", "2"), ("3", "4")}
    assert underlying_line(q) == ["1", "2", "3", "4"]
    assert path_algebra(q).dim == 7
