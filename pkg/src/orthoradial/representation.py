"""Ortho-radial representations: angle rotations, directions, flip and mirror.

``rot[d]`` is the rotation of the combinatorial angle ``(d, nxt[d])`` at
``tail[d]``, i.e. ``2 - alpha/90`` for the drawn angle alpha.  That angle
belongs to the face ``face[nxt[d]]``.

Directions are integers mod 4: 0 right, 1 down (towards the center), 2 left,
3 up.  Going counterclockwise around a vertex the directions of consecutive
darts drop by the quarter turns between them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    InvalidReferencePath,
    NotAPath,
    NotACycle,
    NotIncident,
    NotOnOuterCycle,
    PositionsNotOnFace,
    RotationNonZero,
    CentralFaceStrictlyMonotone,
)
from .plane_graph import Face, PlaneGraph, Tag

RIGHT, DOWN, LEFT, UP = 0, 1, 2, 3
ROT_VALUES = (-2, -1, 0, 1)


def degrees_to_rot(alpha: int) -> int:
    if alpha not in (90, 180, 270, 360):
        raise ValueError(f"angle {alpha} is not a multiple of 90 in [90, 360]")
    return 2 - alpha // 90


def rot_to_degrees(r: int) -> int:
    if r not in ROT_VALUES:
        raise ValueError(f"rotation {r} out of range")
    return (2 - r) * 90


@dataclass
class OrthoRadialRep:
    graph: PlaneGraph
    rot: list[int]
    central: int
    outer: int
    ref: int

    def copy(self) -> "OrthoRadialRep":
        return OrthoRadialRep(self.graph.copy(), list(self.rot), self.central, self.outer, self.ref)

    def face_kind(self, f: int) -> str:
        if f == self.outer and f == self.central:
            return "outer-and-central"
        if f == self.outer:
            return "outer"
        if f == self.central:
            return "central"
        return "regular"

    def faces(self) -> list[Face]:
        return [Face(f.id, f.walk, self.face_kind(f.id)) for f in self.graph.faces()]

    def regular_faces(self) -> list[int]:
        return [f for f in self.graph.face_ids() if f != self.outer and f != self.central]


# ----------------------------------------------------------------------
# rotations
# ----------------------------------------------------------------------
def rot_angle(rep: OrthoRadialRep, e1: int, e2: int) -> int:
    """rot(uvw) for ``e1 = uv`` and ``e2 = vw``.

    Sums the angles swept counterclockwise from vu to vw.  A U-turn
    (``e2 = twin(e1)``) sweeps the full circle and gives -2.
    """
    g = rep.graph
    x = g.twin[e1]
    if g.tail[e2] != g.tail[x]:
        raise NotIncident(f"dart {e2} does not start where dart {e1} ends")
    total, k, y = 0, 1, x
    while True:
        total += rep.rot[y]
        y = g.nxt[y]
        k += 1
        if y == e2:
            break
    return total - 2 * (k - 2)


def rot_path(rep: OrthoRadialRep, path: Sequence[int]) -> int:
    """Sum of rotations at the internal vertices of a dart sequence."""
    g = rep.graph
    total = 0
    for a, b in zip(path, path[1:]):
        if g.head(a) != g.tail[b]:
            raise NotAPath(f"darts {a} and {b} are not consecutive")
        total += rot_angle(rep, a, b)
    return total


def rot_cycle(rep: OrthoRadialRep, cycle: Sequence[int]) -> int:
    if not cycle:
        raise NotACycle("empty cycle")
    g = rep.graph
    if g.head(cycle[-1]) != g.tail[cycle[0]]:
        raise NotACycle("cycle does not close")
    return rot_path(rep, list(cycle) + [cycle[0]])


def face_rotation(rep: OrthoRadialRep, f: int) -> int:
    g = rep.graph
    return sum(rep.rot[g.twin[d]] for d in g.face_walk(f))


def expected_face_rotation(rep: OrthoRadialRep, f: int) -> int:
    return {"regular": 4, "outer": 0, "central": 0, "outer-and-central": -4}[rep.face_kind(f)]


@dataclass
class ConsistencyReport:
    vertex_violations: list[tuple[int, int, int]] = field(default_factory=list)  # (v, sum, expected)
    face_violations: list[tuple[int, int, int]] = field(default_factory=list)  # (f, rot, expected)
    range_violations: list[tuple[int, int]] = field(default_factory=list)  # (dart, value)
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.vertex_violations or self.face_violations or self.range_violations or self.messages)

    def lines(self) -> list[str]:
        out = [f"vertex {v}: angle rotations sum to {s}, expected {x}" for v, s, x in self.vertex_violations]
        out += [f"face {f}: rotation {r}, expected {x}" for f, r, x in self.face_violations]
        out += [f"angle after dart {d}: rotation {r} not in {{-2,-1,0,1}}" for d, r in self.range_violations]
        return out + list(self.messages)

    def __str__(self) -> str:
        return "; ".join(self.lines()) if not self.ok else "locally consistent"


def check_local_consistency(rep: OrthoRadialRep) -> ConsistencyReport:
    g = rep.graph
    report = ConsistencyReport()
    if len(rep.rot) != g.num_darts:
        report.messages.append(f"{len(rep.rot)} angle values for {g.num_darts} angles")
        return report
    for d, r in enumerate(rep.rot):
        if r not in ROT_VALUES:
            report.range_violations.append((d, r))
    for v in range(g.num_vertices):
        ds = g.darts_at(v)
        s = sum(rep.rot[d] for d in ds)
        if s != 2 * (len(ds) - 2):
            report.vertex_violations.append((v, s, 2 * (len(ds) - 2)))
    for f in g.face_ids():
        r = face_rotation(rep, f)
        x = expected_face_rotation(rep, f)
        if r != x:
            report.face_violations.append((f, r, x))
    if rep.outer == rep.central:
        report.messages.append("central face equals outer face; use a classical orthogonal pipeline")
    if not 0 <= rep.ref < g.num_darts:
        report.messages.append(f"reference edge {rep.ref} does not exist")
    elif g.face[g.twin[rep.ref]] != rep.outer:
        report.messages.append("reference edge does not have the outer face on its left")
    elif g.face[rep.ref] == rep.outer:
        report.messages.append("reference edge is a bridge of the outer face")
    return report


# ----------------------------------------------------------------------
# directions
# ----------------------------------------------------------------------
def directions(rep: OrthoRadialRep, check: bool = False) -> list[int]:
    """Direction (mod 4) of every dart relative to the reference edge."""
    g = rep.graph
    dirs = [-1] * g.num_darts
    seen = [False] * g.num_vertices
    queue: deque[int] = deque()

    def settle(e: int, value: int) -> None:
        v = g.tail[e]
        if seen[v]:
            return
        seen[v] = True
        start = e
        dirs[e] = value % 4
        x = e
        while True:
            y = g.nxt[x]
            if y == start:
                break
            dirs[y] = (dirs[x] - (2 - rep.rot[x])) % 4
            x = y
        for y in g.darts_at(v):
            queue.append(g.twin[y])
            if dirs[g.twin[y]] < 0:
                dirs[g.twin[y]] = (dirs[y] + 2) % 4

    settle(rep.ref, RIGHT)
    while queue:
        t = queue.popleft()
        settle(t, dirs[t])
    if check:
        for d in range(g.num_darts):
            if dirs[g.twin[d]] != (dirs[d] + 2) % 4:
                raise InvalidReferencePath(f"directions inconsistent at dart {d}")
            if dirs[g.nxt[d]] != (dirs[d] - (2 - rep.rot[d])) % 4:
                raise InvalidReferencePath(f"directions inconsistent around vertex {g.tail[d]}")
    return dirs


def dir_along(rep: OrthoRadialRep, e: int, path: Sequence[int], e2: int) -> int:
    """Combinatorial direction of ``e2`` relative to ``e`` along ``path``.

    ``path`` must start at an endpoint of ``e`` and end at an endpoint of
    ``e2``; it may be empty when those endpoints coincide.
    """
    g = rep.graph
    e_edge, e2_edge = g.edge_id(e), g.edge_id(e2)
    if any(g.edge_id(d) in (e_edge, e2_edge) for d in path):
        raise InvalidReferencePath("reference path contains e or e2")
    if path:
        start, end = g.tail[path[0]], g.head(path[-1])
        if any(g.head(a) != g.tail[b] for a, b in zip(path, path[1:])):
            raise InvalidReferencePath("reference path is not a path")
        for a in (e, g.twin[e]):
            for b in (e2, g.twin[e2]):
                if g.head(a) == start and g.tail[b] == end:
                    return rot_path(rep, [a, *path, b]) + _case_offset(g, e, a, e2, b)
    else:
        for a in (e, g.twin[e]):
            for b in (e2, g.twin[e2]):
                if g.head(a) == g.tail[b]:
                    return rot_path(rep, [a, b]) + _case_offset(g, e, a, e2, b)
    raise InvalidReferencePath("path does not connect e and e2")


def _case_offset(g: PlaneGraph, e: int, a: int, e2: int, b: int) -> int:
    rev_e, rev_e2 = a != e, b != e2
    if rev_e and not rev_e2:
        return 2
    if rev_e2 and not rev_e:
        return -2
    return 0


# ----------------------------------------------------------------------
# transformations
# ----------------------------------------------------------------------
def mirror(rep: OrthoRadialRep) -> OrthoRadialRep:
    """Reverse all rotation orders; angle (e1, e2) becomes (rev e2, rev e1)."""
    g = rep.graph
    rot = [rep.rot[g.prv[d]] for d in range(g.num_darts)]
    return OrthoRadialRep(g.mirrored(), rot, rep.central, rep.outer, g.twin[rep.ref])


def flip(rep: OrthoRadialRep) -> OrthoRadialRep:
    """Exchange outer and central face; labels of essential cycles are kept."""
    from .labeling import central_cycle, labels

    lab = labels(rep, central_cycle(rep))
    if lab.klass.strictly_monotone:
        raise CentralFaceStrictlyMonotone(f"central cycle is {lab.klass.value}")
    label_of = dict(zip(lab.cycle, lab.values))
    g = rep.graph
    pick = next(d for d in g.face_walk(rep.central) if label_of.get(d) == 0)
    return OrthoRadialRep(g.copy(), list(rep.rot), rep.outer, rep.central, g.twin[pick])


def change_reference_edge(rep: OrthoRadialRep, new_ref: int) -> OrthoRadialRep:
    from .labeling import outer_cycle

    c_o = outer_cycle(rep)
    if new_ref not in c_o:
        raise NotOnOuterCycle(f"dart {new_ref} is not on the outer essential cycle")
    i, j = c_o.index(rep.ref), c_o.index(new_ref)
    seg = c_o[i:j + 1] if i <= j else c_o[i:] + c_o[:j + 1]
    r = rot_path(rep, seg)
    if r != 0:
        raise RotationNonZero(f"rotation from the reference edge to dart {new_ref} is {r}")
    out = rep.copy()
    out.ref = new_ref
    return out


# ----------------------------------------------------------------------
# in-place mutation helpers
# ----------------------------------------------------------------------
def subdivide(rep: OrthoRadialRep, d: int, tag: Tag = Tag.SUBDIVISION) -> int:
    """Split dart ``d``'s edge at a new vertex with two straight angles."""
    z = rep.graph.subdivide(d, tag)
    rep.rot.extend((0, 0))
    return z


def insert_edge(rep: OrthoRadialRep, a: int | None, u: int, c: int | None, v: int,
                rots: tuple[int, int, int, int], tag: Tag = Tag.AUGMENTATION) -> tuple[int, int, int]:
    """Insert u-v after dart ``a`` at u and after ``c`` at v.

    ``rots = (r_a, r_p, r_c, r_q)`` are the rotations of the four angles
    (a, p), (p, old), (c, q), (q, old); isolated endpoints ignore their pair.
    """
    g = rep.graph
    p, fp, fq = g.insert_edge(a, u, c, v, tag)
    q = g.twin[p]
    rep.rot.extend((0, 0))
    r_a, r_p, r_c, r_q = rots
    if a is None:
        rep.rot[p] = -2
    else:
        rep.rot[a], rep.rot[p] = r_a, r_p
    if c is None:
        rep.rot[q] = -2
    else:
        rep.rot[c], rep.rot[q] = r_c, r_q
    return p, fp, fq


def angle_for_direction(rep: OrthoRadialRep, v: int, d: int, dirs: Sequence[int],
                        face: int | None = None) -> tuple[int | None, int, int]:
    """Find the angle at ``v`` (in ``face``) that a new dart of direction ``d`` splits.

    Returns ``(a, r_a, r_new)``: insert after dart ``a``; the two resulting
    angles get rotations ``r_a`` and ``r_new``.  For an isolated vertex
    ``a`` is None.
    """
    g = rep.graph
    if g.out[v] < 0:
        return None, 0, -2
    for a in g.darts_at(v):
        if face is not None and g.face[g.nxt[a]] != face:
            continue
        span = 2 - rep.rot[a]  # quarter turns swept ccw from a to nxt[a]
        k = (dirs[a] - d) % 4
        if 0 < k < span:
            return a, 2 - k, 2 - (span - k)
    raise PositionsNotOnFace(f"no free direction {d} at vertex {v} in face {face}")
