import pytest
from hypothesis import given, strategies as st

from orthoradial import fixtures as F
from orthoradial.errors import (DegreeExceeded, Disconnected, NonPlanarOrInconsistent, NotACycle,
                                NotSimple, PositionsNotOnFace, SelfLoop, UnknownEdge)
from orthoradial.plane_graph import PlaneGraph, Tag, interior_faces, split_closed_walk

from conftest import corpus_rep, planar_from_coords

SQUARE = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
K4 = {0: (0, 0), 1: (0, 1), 2: (-1, -1), 3: (1, -1)}
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]


def cycle4():
    return planar_from_coords(SQUARE, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_four_cycle_counts():
    g = cycle4()
    assert (g.num_vertices, g.num_darts, g.num_faces()) == (4, 8, 2)


def test_four_cycle_walks_opposite():
    g = cycle4()
    walks = [g.face_walk(f) for f in g.face_ids()]
    assert sorted(map(len, walks)) == [4, 4]
    a, b = walks
    assert {g.twin[d] for d in a} == set(b)


def test_single_edge_one_face():
    g = PlaneGraph.build(2, [[(1, 0)], [(0, 0)]])
    assert g.num_faces() == 1
    assert len(g.face_walk(g.face_ids()[0])) == 2


def test_path_walk_revisits_middle():
    g = PlaneGraph.build(3, [[(1, 0)], [(0, 0), (2, 0)], [(1, 0)]])
    (f,) = g.face_ids()
    walk = g.face_walk(f)
    assert len(walk) == 4
    assert [g.tail[d] for d in walk].count(1) == 2


def test_k4_four_triangles():
    g = planar_from_coords(K4, K4_EDGES)
    assert g.num_faces() == 4
    assert all(len(g.face_walk(f)) == 3 for f in g.face_ids())


def test_walk_rule():
    # consecutive darts uv, vw: vw directly follows vu in the ccw order at v
    g = planar_from_coords(K4, K4_EDGES)
    for f in g.face_ids():
        walk = g.face_walk(f)
        for a, b in zip(walk, walk[1:] + walk[:1]):
            assert g.nxt[g.twin[a]] == b


def test_build_errors():
    with pytest.raises(SelfLoop):
        PlaneGraph.build(1, [[(0, 0), (0, 0)]])
    with pytest.raises(DegreeExceeded):
        PlaneGraph.build(6, [[(i, 0) for i in range(1, 6)]] + [[(0, 0)]] * 5)
    with pytest.raises(Disconnected):
        PlaneGraph.build(4, [[(1, 0)], [(0, 0)], [(3, 0)], [(2, 0)]])
    with pytest.raises(NonPlanarOrInconsistent):
        PlaneGraph.build(2, [[(1, 0)], []])
    good = planar_from_coords(K4, K4_EDGES)
    rs = good.rotation_system()
    lists = [[(w, 0) for w in rs[v]] for v in range(4)]
    lists[0] = [lists[0][0], lists[0][2], lists[0][1]]  # wrong rotation at one vertex
    with pytest.raises(NonPlanarOrInconsistent):
        PlaneGraph.build(4, lists)


def test_parallel_edges_by_slot():
    g = PlaneGraph.build(2, [[(1, 0), (1, 1)], [(0, 1), (0, 0)]])
    assert g.num_edges == 2 and g.num_faces() == 2


def test_subdivide_counts_and_path():
    g = cycle4()
    d = g.find_dart(0, 1)
    z1 = g.subdivide(d)
    assert g.num_darts == 10 and g.num_faces() == 2
    z2 = g.subdivide(d)
    assert g.vtag[z1] == g.vtag[z2] == Tag.SUBDIVISION
    path = [0]
    while path[-1] != 1:
        nxt = [w for w in g.neighbors(path[-1]) if w not in path and w in (z1, z2, 1)]
        path.append(nxt[0])
    assert path == [0, z2, z1, 1]
    g.check_faces()


def test_subdivide_unknown():
    with pytest.raises(UnknownEdge):
        cycle4().subdivide(99)


def test_chord_splits_face():
    g = cycle4()
    inner = g.face[g.find_dart(0, 1)]
    # angles on the face: after dart a at tail(a), the angle opens onto face[nxt[a]]
    at0 = next(a for a in g.darts_at(0) if g.face[g.nxt[a]] == inner)
    at2 = next(a for a in g.darts_at(2) if g.face[g.nxt[a]] == inner)
    before = g.face_sets()
    e = g.insert_edge_in_face(inner, at0, at2)
    assert g.num_faces() == 3
    assert sorted(len(g.face_walk(f)) for f in g.face_ids()) == [3, 3, 4]
    assert g.etag[e] == Tag.AUGMENTATION
    g.check_faces()
    g.delete_edge(e)
    assert g.face_sets() == before


def test_chord_adjacent_gives_triangle():
    g = cycle4()
    f = g.face[g.find_dart(0, 1)]
    a = next(x for x in g.darts_at(0) if g.face[g.nxt[x]] == f)
    walk = g.face_walk(f)
    # vertex two steps along the walk from 0
    c_v = g.head(walk[(walk.index(g.find_dart(0, 1)) + 1) % 4])
    c = next(x for x in g.darts_at(c_v) if g.face[g.nxt[x]] == f)
    g.insert_edge_in_face(f, a, c)
    assert 3 in [len(g.face_walk(h)) for h in g.face_ids()]


def test_chord_positions_not_on_face():
    g = cycle4()
    f = g.face[g.find_dart(0, 1)]
    other = next(h for h in g.face_ids() if h != f)
    a = next(x for x in g.darts_at(0) if g.face[g.nxt[x]] == other)
    with pytest.raises(PositionsNotOnFace):
        g.insert_edge_in_face(f, a, a)


def test_interior_of_face_walk_is_that_face():
    g = planar_from_coords(K4, K4_EDGES)
    for f in g.face_ids():
        assert interior_faces(g, g.face_walk(f)) == {f}


def test_grid_boundary_interior():
    coords = {3 * i + j: (j, -i) for i in range(3) for j in range(3)}
    edges = [(3 * i + j, 3 * i + j + 1) for i in range(3) for j in range(2)]
    edges += [(3 * i + j, 3 * i + j + 3) for i in range(2) for j in range(3)]
    g = planar_from_coords(coords, edges)
    outer = max(g.face_ids(), key=lambda f: len(g.face_walk(f)))
    boundary = [g.twin[d] for d in reversed(g.face_walk(outer))]  # interior on the right
    inside = interior_faces(g, boundary)
    assert len(inside) == 4 and outer not in inside


def test_interior_errors():
    g = cycle4()
    with pytest.raises(NotACycle):
        interior_faces(g, [g.find_dart(0, 1), g.find_dart(2, 3)])
    d = g.find_dart(0, 1)
    with pytest.raises(NotSimple):
        interior_faces(g, [d, g.twin[d]])


def test_bridges_walks():
    rep = F.with_bridges()
    g = rep.graph
    walks = [g.face_walk(f) for f in g.face_ids()]
    assert any(len({g.tail[d] for d in w}) < len(w) for w in walks)  # a walk repeats a vertex
    assert sum(map(len, walks)) == g.num_darts
    w = next(w for w in walks if len({g.tail[d] for d in w}) < len(w))
    pieces = split_closed_walk(g, w)
    assert len(pieces) == 1 and len(pieces[0]) == 5  # the stub is dropped


@given(st.integers(0, 10_000))
def test_euler_and_degree_sum(seed):
    g = corpus_rep(seed).graph
    assert sum(g.degree(v) for v in range(g.num_vertices)) == 2 * g.num_edges
    assert g.num_vertices - g.num_edges + g.num_faces() == 2
    assert sorted(d for f in g.face_ids() for d in g.face_walk(f)) == list(range(g.num_darts))


@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_subdivide_smooth_inverse(seed, pick):
    g = corpus_rep(seed).graph
    rs, fs = g.rotation_system(), g.face_sets()
    z = g.subdivide(pick % g.num_darts)
    g.check_faces()
    g.smooth(z)
    assert g.rotation_system() == rs and g.face_sets() == fs


@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_insert_delete_inverse(seed, pick):
    g = corpus_rep(seed).graph
    fs = g.face_sets()
    f = g.face_ids()[pick % g.num_faces()]
    angles = [a for a in range(g.num_darts) if g.face[g.nxt[a]] == f]
    a = angles[pick % len(angles)]
    c = angles[(pick // 7) % len(angles)]
    if g.tail[a] == g.tail[c] or g.degree(g.tail[a]) == 4 or g.degree(g.tail[c]) == 4:
        return
    e = g.insert_edge_in_face(f, a, c)
    g.check_faces()
    assert g.num_faces() == len(fs) + 1
    g.delete_edge(e)
    assert g.face_sets() == fs


def test_mirrored_reverses_orbits():
    g = planar_from_coords(K4, K4_EDGES)
    m = g.mirrored()
    assert m.nxt == g.prv and m.prv == g.nxt
    assert m.face_sets() == {frozenset((b, a) for a, b in s) for s in g.face_sets()}
