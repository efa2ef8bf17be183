import random

import pytest
from hypothesis import given, strategies as st

from orthoradial import fixtures as F
from orthoradial.builders import rep_from_drawing
from orthoradial.errors import (CentralFaceStrictlyMonotone, InvalidReferencePath, NotOnOuterCycle,
                                RotationNonZero)
from orthoradial.labeling import centered_right, labels, outer_cycle
from orthoradial.plane_graph import PlaneGraph, interior_faces, reverse_path
from orthoradial.representation import (DOWN, LEFT, RIGHT, UP, OrthoRadialRep, change_reference_edge,
                                        check_local_consistency, degrees_to_rot, dir_along, directions,
                                        expected_face_rotation, face_rotation, flip, mirror, rot_angle,
                                        rot_cycle, rot_path, rot_to_degrees)
from orthoradial.validity import simple_cycles

from conftest import corpus_rep, essential_cycles


def test_degree_conversion():
    assert [degrees_to_rot(a) for a in (90, 180, 270, 360)] == [1, 0, -1, -2]
    assert [rot_to_degrees(r) for r in (1, 0, -1, -2)] == [90, 180, 270, 360]


def test_rot_angle_degree_four():
    rep = F.grid(3, 4)
    g = rep.graph
    v = 4 + 1  # middle ring, all four angles 90 degrees
    assert g.degree(v) == 4
    e1 = g.twin[g.darts_at(v)[0]]  # arrives at v
    sweep = g.twin[e1]
    e2 = g.nxt[g.nxt[g.nxt[sweep]]]  # three angles between
    assert rot_angle(rep, e1, e2) == 3 - 2 * 2
    assert rot_angle(rep, e1, g.nxt[sweep]) == rep.rot[sweep] == 1


def test_rot_angle_straight():
    rep = F.ring(4)
    g = rep.graph
    d = rep.ref
    nxt = next(x for x in g.darts_at(g.head(d)) if x != g.twin[d])
    assert rot_angle(rep, d, nxt) == 0


def zigzag():
    """Pendant path a p1 .. p7 with internal turns L R L L R R."""
    coords = {0: (0, 0), 1: (0, 20), 2: (20, 0), 3: (20, 20), 4: (0, 10),
              5: (2, 10), 6: (2, 12), 7: (4, 12), 8: (4, 14), 9: (2, 14), 10: (2, 16), 11: (6, 16)}
    edges = [(0, 4), (4, 1), (1, 0), (2, 3), (3, 2), (0, 2), (1, 3),
             (4, 5), (5, 6), (6, 7), (7, 8), (9, 8), (9, 10), (10, 11)]
    rep = rep_from_drawing(coords, edges)
    g = rep.graph
    chain = [4, 5, 6, 7, 8, 9, 10, 11]
    return rep, [g.find_dart(a, b) for a, b in zip(chain, chain[1:])]


def test_rot_path_zigzag():
    rep, path = zigzag()
    turns = [rot_angle(rep, a, b) for a, b in zip(path, path[1:])]
    assert turns == [-1, 1, -1, -1, 1, 1]
    assert rot_path(rep, path) == 0
    assert rot_path(rep, path[:1]) == 0


def random_path(rep, rng, length):
    g = rep.graph
    d = rng.randrange(g.num_darts)
    path = [d]
    for _ in range(length):
        options = [x for x in g.darts_at(g.head(path[-1])) if x != g.twin[path[-1]]]
        if not options:
            break
        path.append(rng.choice(options))
    return path


@given(st.integers(0, 10_000), st.integers(1, 12))
def test_rot_reverse_and_split(seed, length):
    rep = corpus_rep(seed)
    rng = random.Random(seed)
    path = random_path(rep, rng, length)
    g = rep.graph
    assert rot_path(rep, reverse_path(g, path)) == -rot_path(rep, path)
    if len(path) >= 3:
        k = rng.randrange(1, len(path) - 1)
        assert rot_path(rep, path) == rot_path(rep, path[:k + 1]) + rot_path(rep, path[k:])


def test_rot_cycle_fixtures():
    for rep in (F.grid(2, 4), F.l_shape(), F.comb_face(), F.with_bridges()):
        for c in simple_cycles(rep):
            right = interior_faces(rep.graph, c)
            if centered_right(rep, c, check=False):
                assert rot_cycle(rep, c) == 0
            elif rep.outer not in right and rep.central not in right:
                assert rot_cycle(rep, c) == 4


def test_outer_and_central_face():
    g = PlaneGraph.build(2, [[(1, 0)], [(0, 0)]])
    (f,) = g.face_ids()
    rep = OrthoRadialRep(g, [-2, -2], f, f, 0)
    assert face_rotation(rep, f) == expected_face_rotation(rep, f) == -4
    report = check_local_consistency(rep)
    assert not report.ok
    assert any("orthogonal" in line for line in report.lines())


def test_consistency_report():
    rep = F.grid(2, 4)
    assert check_local_consistency(rep).ok
    bad = rep.copy()
    bad.rot[0] += 1
    report = check_local_consistency(bad)
    assert report.vertex_violations and report.vertex_violations[0][0] == bad.graph.tail[0]


@given(st.integers(0, 10_000), st.integers(0, 1000))
def test_single_perturbation_detected(seed, pick):
    rep = corpus_rep(seed)
    bad = rep.copy()
    d = pick % rep.graph.num_darts
    bad.rot[d] += 1 if bad.rot[d] < 1 else -1
    assert not check_local_consistency(bad).ok


def test_dir_cases():
    rep = F.grid(1, 4)
    g = rep.graph
    e = rep.ref
    e2 = next(x for x in g.darts_at(g.head(e)) if x != g.twin[e])
    assert rot_path(rep, [e, e2]) == 0
    assert dir_along(rep, e, [], e2) == 0
    rep = F.grid(2, 4)
    g = rep.graph
    e = g.find_dart(0, 1)
    p = g.find_dart(0, 4)
    e2 = g.find_dart(4, 5)
    assert rot_path(rep, [g.twin[e], p, e2]) == -2
    assert dir_along(rep, e, [p], e2) == 0
    with pytest.raises(InvalidReferencePath):
        dir_along(rep, e, [e], e2)


def all_paths(g, s, t, limit=8):
    out = []

    def go(v, path, seen):
        if v == t:
            out.append(list(path))
            return
        if len(path) >= limit:
            return
        for d in g.darts_at(v):
            w = g.head(d)
            if w not in seen:
                seen.add(w)
                path.append(d)
                go(w, path, seen)
                path.pop()
                seen.discard(w)

    go(s, [], {s})
    return out


@pytest.mark.parametrize("rep", [F.grid(2, 3), F.l_shape(), F.with_bridges()], ids=["grid", "l", "bridges"])
def test_dir_path_independent(rep):
    g = rep.graph
    dirs = directions(rep, check=True)
    rng = random.Random(1)
    for _ in range(25):
        e, e2 = rng.randrange(g.num_darts), rng.randrange(g.num_darts)
        if g.edge_id(e) == g.edge_id(e2):
            continue
        banned = {g.edge_id(e), g.edge_id(e2)}
        values = set()
        for s in (g.head(e), g.tail[e]):
            for t in (g.tail[e2], g.head(e2)):
                for p in all_paths(g, s, t):
                    if p and all(g.edge_id(d) not in banned for d in p):
                        values.add(dir_along(rep, e, p, e2) % 4)
        if values:
            assert values == {(dirs[e2] - dirs[e]) % 4}


def test_directions_grid():
    rep = F.grid(2, 4)
    g = rep.graph
    dirs = directions(rep, check=True)
    assert dirs[rep.ref] == RIGHT
    for d in range(g.num_darts):
        a, b = g.tail[d], g.head(d)
        if a // 4 == b // 4:
            assert dirs[d] in (RIGHT, LEFT)
        else:
            assert dirs[d] == (DOWN if b > a else UP)


def label_map(rep):
    return {tuple(c): labels(rep, c).values for c in essential_cycles(rep)}


@pytest.mark.parametrize("seed", range(40))
def test_mirror_negates_labels(seed):
    rep = corpus_rep(seed, hi=10)
    m = mirror(rep)
    assert check_local_consistency(m).ok
    g = rep.graph
    for c in essential_cycles(rep):
        rc = reverse_path(g, c)
        assert centered_right(m, rc, check=False)
        lm = labels(m, rc).as_dict()
        lab = labels(rep, c).as_dict()
        assert all(lm[g.twin[d]] == -lab[d] for d in c)
    mm = mirror(m)
    assert label_map(mm) == label_map(rep)


@pytest.mark.parametrize("seed", range(40))
def test_flip_keeps_labels(seed):
    rep = corpus_rep(seed, hi=10)
    try:
        fl = flip(rep)
    except CentralFaceStrictlyMonotone:
        return
    assert check_local_consistency(fl).ok
    g = rep.graph
    for c in essential_cycles(rep):
        rc = reverse_path(g, c)
        assert centered_right(fl, rc, check=False)
        lf = labels(fl, rc).as_dict()
        lab = labels(rep, c).as_dict()
        assert all(lf[g.twin[d]] == lab[d] for d in c)
    try:
        ff = flip(fl)
    except CentralFaceStrictlyMonotone:
        return
    assert label_map(ff) == label_map(rep)


def test_flip_rejects_monotone_central_cycle():
    rep = F.staircase(0, 6)  # a tilted ring: the central cycle itself is monotone
    with pytest.raises(CentralFaceStrictlyMonotone):
        flip(rep)


def test_flip_horizontal_central_cycle_any_edge():
    rep = F.grid(2, 4)
    g = rep.graph
    fl = flip(rep)
    assert fl.ref == g.twin[g.face_walk(rep.central)[0]]  # first in walk order, all labels 0
    assert (fl.outer, fl.central) == (rep.central, rep.outer)


def test_change_reference_edge():
    rep = F.grid(2, 4)
    before = label_map(rep)
    assert label_map(change_reference_edge(rep, rep.ref)) == before
    c_o = outer_cycle(rep)
    assert label_map(change_reference_edge(rep, c_o[1])) == before
    rep2 = F.staircase(0, 6)
    c_o = outer_cycle(rep2)
    bent = next(d for d in c_o if abs(rot_path(rep2, c_o[:c_o.index(d) + 1])) == 1)
    with pytest.raises(RotationNonZero):
        change_reference_edge(rep2, bent)
    with pytest.raises(NotOnOuterCycle):
        change_reference_edge(rep, rep.graph.twin[rep.ref])
