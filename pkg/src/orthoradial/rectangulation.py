"""Augment a valid representation to a valid rectangular one.

Concave corners of regular faces are removed one at a time.  For a port u
(left turn followed by two right turns) an edge uz is added to a new vertex
z on a candidate edge.  Vertical ports take the first candidate; horizontal
ports search the candidate list for a valid choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .errors import PositionsNotOnFace, NotACandidate, NotRegular, NotValid
from .labeling import central_cycle, labels
from .plane_graph import Tag
from .representation import (
    DOWN,
    LEFT,
    RIGHT,
    UP,
    OrthoRadialRep,
    angle_for_direction,
    directions,
    flip,
    insert_edge,
    subdivide,
)
from .validity import MonotoneCycleWitness, fast_decreasing_test, find_decreasing_cycle, is_valid


class Strategy(str, Enum):
    NAIVE = "naive"
    FAST = "fast"
    BINARY_SEARCH = "binary_search"


@dataclass
class Port:
    vertex: int
    face: int
    in_dart: int  # x -> u on the face walk
    out_dart: int  # u -> y on the face walk
    direction: int  # direction of the new edge uz

    @property
    def kind(self) -> str:
        return "vertical" if self.direction % 2 else "horizontal"


@dataclass
class RectangulationConfig:
    strategy: Strategy = Strategy.BINARY_SEARCH
    debug: bool = False  # re-validate after every step and check search invariants
    cross_check_fast: bool = False  # compare every fast test with the full search
    check_input: bool = True


@dataclass
class RectangulationStats:
    augmentations: int = 0
    horizontal_insertions: int = 0
    vertical_ports: int = 0
    horizontal_ports: int = 0
    fast_tests: int = 0
    fast_agreements: int = 0
    fast_disagreements: list[tuple[int, bool, bool]] = field(default_factory=list)  # (step, fast, full)
    concave_history: list[int] = field(default_factory=list)


@dataclass
class RectangularRep:
    rep: OrthoRadialRep
    stats: RectangulationStats


# ----------------------------------------------------------------------
# small helpers
# ----------------------------------------------------------------------
def turns(rep: OrthoRadialRep, f: int) -> tuple[list[int], list[int]]:
    """Facial walk of ``f`` and the rotation at the head of each of its darts."""
    g = rep.graph
    walk = g.face_walk(f)
    return walk, [rep.rot[g.twin[d]] for d in walk]


def is_rectangle(rep: OrthoRadialRep, f: int) -> bool:
    return all(t >= 0 for t in turns(rep, f)[1])


def concave_corners(rep: OrthoRadialRep) -> int:
    g = rep.graph
    regular = set(rep.regular_faces())
    return sum(-r for d, r in enumerate(rep.rot) if r < 0 and g.face[g.nxt[d]] in regular)


def _insert_directed(rep: OrthoRadialRep, dirs: list[int], a: int | None, u: int,
                     c: int | None, v: int, d: int, tag: Tag) -> tuple[int, int, int]:
    """Insert u->v with direction ``d`` after darts ``a`` at u and ``c`` at v."""
    def split(x: int | None, want: int) -> tuple[int, int]:
        if x is None:
            return 0, -2
        span = 2 - rep.rot[x]
        k = (dirs[x] - want) % 4
        if not 0 < k < span:
            raise AssertionError(f"direction {want} does not fit the angle after dart {x}")
        return 2 - k, 2 - (span - k)

    r_a, r_p = split(a, d)
    r_c, r_q = split(c, (d + 2) % 4)
    res = insert_edge(rep, a, u, c, v, (r_a, r_p, r_c, r_q), tag)
    dirs.extend((d % 4, (d + 2) % 4))
    return res


def _subdivide_directed(rep: OrthoRadialRep, dirs: list[int], e: int, tag: Tag) -> int:
    z = subdivide(rep, e, tag)
    dirs.extend(((dirs[e] + 2) % 4, dirs[e]))
    return z


# ----------------------------------------------------------------------
# preprocessing
# ----------------------------------------------------------------------
def preprocess(rep: OrthoRadialRep, check: bool = True) -> OrthoRadialRep:
    """Insert horizontal triangles into the central and the outer face.

    The central triangle hangs below a new vertex on a label-0 edge of the
    central cycle; the outer triangle sits above a new vertex on e*.  The new
    reference edge lies on the outer triangle.
    """
    if check:
        res = is_valid(rep)
        if not res.valid:
            raise NotValid(res.witness)
    out = rep.copy()
    g = out.graph
    # the input is the reference point for provenance, whatever its history
    g.vtag = [Tag.ORIGINAL] * g.num_vertices
    g.etag = [Tag.ORIGINAL] * g.num_darts
    g.source_dart = list(range(g.num_darts))
    dirs = directions(out)
    lab = labels(out, central_cycle(out)).as_dict()
    e = next(d for d in g.face_walk(out.central) if lab.get(d) == 0)
    x = _subdivide_directed(out, dirs, e, Tag.SUBDIVISION)
    a_x, _, _ = angle_for_direction(out, x, DOWN, dirs, out.central)
    t1 = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, a_x, x, None, t1, DOWN, Tag.PREPROCESSING)
    t2 = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, _angle(out, dirs, t1, RIGHT), t1, None, t2, RIGHT, Tag.PREPROCESSING)
    t3 = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, _angle(out, dirs, t2, RIGHT), t2, None, t3, RIGHT, Tag.PREPROCESSING)
    _, inner, _ = _insert_directed(out, dirs, _angle(out, dirs, t3, RIGHT), t3,
                                   _angle(out, dirs, t1, LEFT), t1, RIGHT, Tag.PREPROCESSING)
    out.central = inner

    m = _subdivide_directed(out, dirs, out.ref, Tag.SUBDIVISION)
    a = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, _angle(out, dirs, m, UP, out.outer), m, None, a, UP, Tag.PREPROCESSING)
    b = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, _angle(out, dirs, a, RIGHT), a, None, b, RIGHT, Tag.PREPROCESSING)
    c = g.add_vertex(Tag.PREPROCESSING)
    _insert_directed(out, dirs, _angle(out, dirs, b, RIGHT), b, None, c, RIGHT, Tag.PREPROCESSING)
    p, _, top = _insert_directed(out, dirs, _angle(out, dirs, c, RIGHT), c,
                                 _angle(out, dirs, a, LEFT), a, RIGHT, Tag.PREPROCESSING)
    out.outer = top
    out.ref = p
    return out


def _angle(rep: OrthoRadialRep, dirs: list[int], v: int, d: int, face: int | None = None) -> int:
    a, _, _ = angle_for_direction(rep, v, d, dirs, face)
    return a


# ----------------------------------------------------------------------
# ports and candidates
# ----------------------------------------------------------------------
def find_port(rep: OrthoRadialRep, f: int, dirs: list[int] | None = None) -> Port | None:
    if f in (rep.outer, rep.central):
        raise NotRegular(f"face {f} is not regular")
    walk, rots = turns(rep, f)
    tokens: list[tuple[str, int]] = []  # (turn, walk index)
    for i, r in enumerate(rots):
        tokens.extend([("R", i)] if r == 1 else [("L", i)] * (-r))
    if all(t == "R" for t, _ in tokens):
        return None
    dirs = directions(rep) if dirs is None else dirs
    m = len(tokens)
    for k, (t, i) in enumerate(tokens):
        if t == "L" and tokens[(k + 1) % m][0] == "R" and tokens[(k + 2) % m][0] == "R":
            d_in = walk[i]
            d_out = walk[(i + 1) % len(walk)]
            r = rots[i]
            return Port(rep.graph.head(d_in), f, d_in, d_out, (dirs[d_in] + r + 1) % 4)
    raise AssertionError(f"regular face {f} without a port")


def candidates(rep: OrthoRadialRep, port: Port) -> list[int]:
    """Darts vw on the face with rot(f[u, vw]) = 2, in walk order after u."""
    walk, rots = turns(rep, port.face)
    m = len(walk)
    i = walk.index(port.in_dart)
    res = []
    acc = 0
    for step in range(1, m):
        j = (i + step) % m
        if step > 1:
            acc += rots[(j - 1) % m]
        if acc == 2:
            res.append(walk[j])
    return res


def _augment(rep: OrthoRadialRep, port: Port, e: int) -> tuple[OrthoRadialRep, int]:
    out = rep.copy()
    g = out.graph
    z = subdivide(out, e, Tag.SUBDIVISION)
    u = port.vertex
    a_u = g.twin[port.in_dart]
    r = out.rot[a_u]
    a_z = g.twin[e]  # e now ends at z; its twin z->v precedes z->w in ccw order
    p, _, _ = insert_edge(out, a_u, u, a_z, z, (r + 1, 1, 1, 1), Tag.AUGMENTATION)
    return out, p


def augment(rep: OrthoRadialRep, port: Port, e: int) -> OrthoRadialRep:
    if e not in candidates(rep, port):
        raise NotACandidate(f"dart {e} is not a candidate of the port at vertex {port.vertex}")
    return _augment(rep, port, e)[0]


# ----------------------------------------------------------------------
# horizontal ports
# ----------------------------------------------------------------------
def check_horizontal_path(rep: OrthoRadialRep, port: Port, e: int,
                          dirs: list[int] | None = None) -> int | None:
    """Other endpoint of the maximal horizontal path through the head of ``e``,
    provided the port vertex is its endpoint in the port's direction."""
    g = rep.graph
    dirs = directions(rep) if dirs is None else dirs
    ahead = port.direction % 4
    back = (ahead + 2) % 4

    def walk(x: int, d: int) -> int | None:
        start = x
        while True:
            nxt = next((h for h in g.darts_at(x) if dirs[h] == d), None)
            if nxt is None:
                return x
            x = g.head(nxt)
            if x == start:
                return None

    w = g.head(e)
    far = walk(w, back)
    near = walk(w, ahead)
    if far is None or near != port.vertex or far == port.vertex:
        return None
    return far


def _insert_horizontal(rep: OrthoRadialRep, port: Port, z: int) -> OrthoRadialRep | None:
    out = rep.copy()
    dirs = directions(out)
    d = port.direction
    try:
        a_z, _, _ = angle_for_direction(out, z, (d + 2) % 4, dirs, port.face)
    except PositionsNotOnFace:
        return None
    _insert_directed(out, dirs, out.graph.twin[port.in_dart], port.vertex, a_z, z, d, Tag.AUGMENTATION)
    return out


class _Tester:
    """Decreasing-cycle tests for the augmentations of one horizontal port."""

    def __init__(self, rep: OrthoRadialRep, port: Port, cands: list[int], cfg: RectangulationConfig,
                 stats: RectangulationStats):
        self.rep, self.port, self.cands, self.cfg, self.stats = rep, port, cands, cfg, stats
        # normalise so that uz points right; flipping keeps darts, faces and angles
        self.test_rep = flip(rep) if port.direction == LEFT else rep
        self.cache: dict[int, bool] = {}

    def decreasing(self, i: int) -> bool:
        if i in self.cache:
            return self.cache[i]
        aug, uz = _augment(self.test_rep, self.port, self.cands[i])
        if self.cfg.strategy == Strategy.NAIVE:
            found = find_decreasing_cycle(aug) is not None
        else:
            self.stats.fast_tests += 1
            found = fast_decreasing_test(aug, uz) is not None
            if self.cfg.cross_check_fast:
                full = find_decreasing_cycle(aug) is not None
                if full == found:
                    self.stats.fast_agreements += 1
                else:
                    self.stats.fast_disagreements.append((self.stats.augmentations, found, full))
        self.cache[i] = found
        return found


def resolve_horizontal_port(rep: OrthoRadialRep, port: Port, cfg: RectangulationConfig | None = None,
                            stats: RectangulationStats | None = None) -> OrthoRadialRep:
    cfg = cfg or RectangulationConfig()
    stats = stats or RectangulationStats()
    cands = candidates(rep, port)
    if cfg.strategy == Strategy.NAIVE:
        for e in cands:
            aug = _augment(rep, port, e)[0]
            if is_valid(aug).valid:
                return aug
        # every subdivision closes a monotone cycle: join u to the end of a horizontal path
        test_rep = flip(rep) if port.direction == LEFT else rep
        test_port = Port(port.vertex, port.face, port.in_dart, port.out_dart, RIGHT)
        for e in cands:
            z = check_horizontal_path(test_rep, test_port, e)
            out = None if z is None else _insert_horizontal(rep, port, z)
            if out is not None and is_valid(out).valid:
                stats.horizontal_insertions += 1
                return out
        raise AssertionError("no valid augmentation among the candidates")
    tester = _Tester(rep, port, cands, cfg, stats)
    if not tester.decreasing(0):
        return _augment(rep, port, cands[0])[0]
    k = len(cands)
    if cfg.strategy == Strategy.FAST:
        i = next((j - 1 for j in range(1, k) if not tester.decreasing(j)), None)
    else:
        lo, hi = 0, k - 1  # decreasing(lo) holds; the last candidate never has one
        if hi == lo or tester.decreasing(hi):
            raise AssertionError("last candidate produced a decreasing cycle")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if tester.decreasing(mid):
                lo = mid
            else:
                hi = mid
        if cfg.debug and not (tester.decreasing(lo) and not tester.decreasing(hi)):
            raise AssertionError("binary search invariant broken")
        i = lo
    if i is None:
        raise AssertionError("last candidate produced a decreasing cycle")
    dirs = directions(tester.test_rep)
    test_port = Port(port.vertex, port.face, port.in_dart, port.out_dart, RIGHT)
    z = check_horizontal_path(tester.test_rep, test_port, cands[i], dirs)
    if z is not None:
        out = _insert_horizontal(rep, port, z)
        if out is not None:
            stats.horizontal_insertions += 1
            return out
    return _augment(rep, port, cands[i + 1])[0]


# ----------------------------------------------------------------------
# main loop
# ----------------------------------------------------------------------
def _next_face(rep: OrthoRadialRep) -> int | None:
    for f in rep.regular_faces():
        if not is_rectangle(rep, f):
            return f
    return None


def rectangulate(rep: OrthoRadialRep, cfg: RectangulationConfig | None = None,
                 on_step: Callable[[OrthoRadialRep], None] | None = None) -> RectangularRep:
    cfg = cfg or RectangulationConfig()
    stats = RectangulationStats()
    cur = preprocess(rep, check=cfg.check_input)
    stats.concave_history.append(concave_corners(cur))
    while True:
        f = _next_face(cur)
        if f is None:
            break
        port = find_port(cur, f)
        if port.kind == "vertical":
            stats.vertical_ports += 1
            cur = _augment(cur, port, candidates(cur, port)[0])[0]
        else:
            stats.horizontal_ports += 1
            cur = resolve_horizontal_port(cur, port, cfg, stats)
        stats.augmentations += 1
        stats.concave_history.append(concave_corners(cur))
        if stats.concave_history[-1] >= stats.concave_history[-2]:
            raise AssertionError("augmentation did not remove a concave corner")
        if cfg.debug:
            res = is_valid(cur)
            if not res.valid:
                raise AssertionError(f"step {stats.augmentations} produced an invalid representation")
        if on_step is not None:
            on_step(cur)
    return RectangularRep(cur, stats)


def witness_of(exc: NotValid) -> MonotoneCycleWitness:
    return exc.witness
