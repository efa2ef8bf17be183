"""Rotation-system (half-edge) encoding of connected plane 4-graphs.

Darts are dense integers. ``tail[d]`` is the origin of dart ``d``, ``twin[d]``
its reverse and ``nxt[d]`` / ``prv[d]`` the counterclockwise successor and
predecessor around the origin.

Facial walks follow ``walk_next(d) = nxt[twin[d]]``.  The face lies to the
right of every dart of its walk, so bounded faces are traversed clockwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DegreeExceeded,
    NonPlanarOrInconsistent,
    NotACycle,
    NotSimple,
    PositionsNotOnFace,
    SelfLoop,
    UnknownEdge,
)

MAX_DEGREE = 4


class Tag(str, Enum):
    ORIGINAL = "original"
    SUBDIVISION = "subdivision"
    AUGMENTATION = "augmentation"
    PREPROCESSING = "preprocessing"


@dataclass
class Face:
    id: int
    walk: list[int]
    kind: str = "regular"


@dataclass
class PlaneGraph:
    tail: list[int] = field(default_factory=list)
    twin: list[int] = field(default_factory=list)
    nxt: list[int] = field(default_factory=list)
    prv: list[int] = field(default_factory=list)
    out: list[int] = field(default_factory=list)  # one outgoing dart per vertex, -1 if isolated
    face: list[int] = field(default_factory=list)  # face id of each dart
    face_dart: list[int] = field(default_factory=list)  # representative dart per face, -1 if dead
    vtag: list[Tag] = field(default_factory=list)
    etag: list[Tag] = field(default_factory=list)  # per dart, equal on twins
    source_dart: list[int] = field(default_factory=list)  # input dart this dart runs along, or -1

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def build(cls, n: int, adjacency: Sequence[Sequence[tuple[int, int]]]) -> "PlaneGraph":
        """Build from ccw neighbour lists.

        ``adjacency[v]`` lists ``(w, slot)`` in counterclockwise order. The
        entry ``(w, k)`` at ``v`` is paired with the entry ``(v, k)`` at ``w``;
        slots only matter for parallel edges.
        """
        if len(adjacency) != n:
            raise NonPlanarOrInconsistent(f"expected {n} adjacency lists, got {len(adjacency)}")
        g = cls()
        g.out = [-1] * n
        g.vtag = [Tag.ORIGINAL] * n
        position: dict[tuple[int, int, int], int] = {}
        for v in range(n):
            if len(adjacency[v]) > MAX_DEGREE:
                raise DegreeExceeded(f"vertex {v} has degree {len(adjacency[v])}")
            first = len(g.tail)
            for w, slot in adjacency[v]:
                if w == v:
                    raise SelfLoop(f"self-loop at vertex {v}")
                if not 0 <= w < n:
                    raise NonPlanarOrInconsistent(f"vertex {v} lists unknown neighbour {w}")
                key = (v, w, slot)
                if key in position:
                    raise NonPlanarOrInconsistent(f"duplicate entry {w} (slot {slot}) at vertex {v}")
                position[key] = len(g.tail)
                g.tail.append(v)
            k = len(g.tail) - first
            for i in range(k):
                g.nxt.append(first + (i + 1) % k)
                g.prv.append(first + (i - 1) % k)
            if k:
                g.out[v] = first
        g.twin = [-1] * len(g.tail)
        for (v, w, slot), d in position.items():
            t = position.get((w, v, slot))
            if t is None:
                raise NonPlanarOrInconsistent(f"edge {v}-{w} (slot {slot}) missing at vertex {w}")
            g.twin[d] = t
        m = len(g.tail)
        g.etag = [Tag.ORIGINAL] * m
        g.source_dart = list(range(m))
        if n == 0:
            raise NonPlanarOrInconsistent("empty graph")
        if not g.is_connected():
            raise Disconnected("graph is not connected")
        g.recompute_faces()
        if n - m // 2 + g.num_faces() != 2:
            raise NonPlanarOrInconsistent(
                f"Euler formula violated: V={n} E={m // 2} F={g.num_faces()}"
            )
        return g

    def copy(self) -> "PlaneGraph":
        return PlaneGraph(
            list(self.tail), list(self.twin), list(self.nxt), list(self.prv), list(self.out),
            list(self.face), list(self.face_dart), list(self.vtag), list(self.etag),
            list(self.source_dart),
        )

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.out)

    @property
    def num_darts(self) -> int:
        return len(self.tail)

    @property
    def num_edges(self) -> int:
        return len(self.tail) // 2

    def num_faces(self) -> int:
        return sum(1 for d in self.face_dart if d >= 0)

    def face_ids(self) -> list[int]:
        return [f for f, d in enumerate(self.face_dart) if d >= 0]

    def head(self, d: int) -> int:
        return self.tail[self.twin[d]]

    def walk_next(self, d: int) -> int:
        return self.nxt[self.twin[d]]

    def walk_prev(self, d: int) -> int:
        return self.twin[self.prv[d]]

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def darts_at(self, v: int) -> list[int]:
        """Outgoing darts of ``v`` in counterclockwise order."""
        start = self.out[v]
        if start < 0:
            return []
        res = [start]
        d = self.nxt[start]
        while d != start:
            res.append(d)
            d = self.nxt[d]
        return res

    def neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.darts_at(v)]

    def edge_id(self, d: int) -> int:
        return min(d, self.twin[d])

    def edges(self) -> list[int]:
        """One dart per edge (the smaller id)."""
        return [d for d in range(self.num_darts) if d < self.twin[d]]

    def find_dart(self, u: int, v: int, slot: int = 0) -> int:
        """The ``slot``-th dart from ``u`` to ``v`` in ccw order from ``out[u]``."""
        hits = [d for d in self.darts_at(u) if self.head(d) == v]
        if slot >= len(hits):
            raise UnknownEdge(f"no edge {u}->{v} with slot {slot}")
        return hits[slot]

    def walk_from(self, d: int) -> list[int]:
        res = [d]
        e = self.walk_next(d)
        while e != d:
            res.append(e)
            e = self.walk_next(e)
        return res

    def face_walk(self, f: int) -> list[int]:
        return self.walk_from(self.face_dart[f])

    def faces(self) -> list[Face]:
        return [Face(f, self.face_walk(f)) for f in self.face_ids()]

    def is_connected(self) -> bool:
        n = self.num_vertices
        if n == 0:
            return True
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for d in self.darts_at(v):
                w = self.head(d)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == n

    # ------------------------------------------------------------------
    # faces
    # ------------------------------------------------------------------
    def recompute_faces(self) -> None:
        """Assign fresh face ids by tracing every facial walk."""
        self.face = [-1] * self.num_darts
        self.face_dart = []
        for d in range(self.num_darts):
            if self.face[d] >= 0:
                continue
            f = len(self.face_dart)
            self.face_dart.append(d)
            e = d
            while self.face[e] < 0:
                self.face[e] = f
                e = self.walk_next(e)
            if e != d:
                raise NonPlanarOrInconsistent("facial walks do not close; rotation system is broken")

    def check_faces(self) -> None:
        """Debug check: incremental face data equals a full recomputation."""
        seen: set[int] = set()
        for f in self.face_ids():
            walk = self.face_walk(f)
            for d in walk:
                if self.face[d] != f:
                    raise NonPlanarOrInconsistent(f"dart {d} on walk of face {f} labelled {self.face[d]}")
                seen.add(d)
        if len(seen) != self.num_darts:
            raise NonPlanarOrInconsistent("some darts are not on any face walk")
        if self.num_vertices - self.num_edges + self.num_faces() != 2:
            raise NonPlanarOrInconsistent("Euler formula violated")

    def _relabel_walk(self, d: int, f: int) -> None:
        self.face_dart[f] = d
        for e in self.walk_from(d):
            self.face[e] = f

    # ------------------------------------------------------------------
    # mutation
    # ------------------------------------------------------------------
    def add_vertex(self, tag: Tag) -> int:
        """Add an isolated vertex; it must be connected by the next insert_edge."""
        self.out.append(-1)
        self.vtag.append(tag)
        return len(self.out) - 1

    def _new_dart(self, v: int, tag: Tag, source: int) -> int:
        d = len(self.tail)
        self.tail.append(v)
        self.twin.append(-1)
        self.nxt.append(d)
        self.prv.append(d)
        self.face.append(-1)
        self.etag.append(tag)
        self.source_dart.append(source)
        return d

    def _splice_after(self, a: int, d: int) -> None:
        b = self.nxt[a]
        self.nxt[a] = d
        self.prv[d] = a
        self.nxt[d] = b
        self.prv[b] = d

    def subdivide(self, d: int, tag: Tag = Tag.SUBDIVISION) -> int:
        """Split the edge of dart ``d`` (u->v) into u->z->v; returns z.

        Dart ``d`` becomes u->z and ``twin[d]`` becomes v->z, so the rotation
        orders at u and v are untouched.  Returns the new vertex.
        """
        if not 0 <= d < self.num_darts:
            raise UnknownEdge(f"unknown dart {d}")
        t = self.twin[d]
        z = self.add_vertex(tag)
        a = self._new_dart(z, self.etag[d], self.source_dart[t])  # z->u
        b = self._new_dart(z, self.etag[d], self.source_dart[d])  # z->v
        self.twin[d], self.twin[a] = a, d
        self.twin[t], self.twin[b] = b, t
        self.nxt[a], self.prv[a] = b, b
        self.nxt[b], self.prv[b] = a, a
        self.out[z] = a
        self.face[a] = self.face[t]
        self.face[b] = self.face[d]
        return z

    def insert_edge(self, a: int | None, u: int, c: int | None, v: int,
                    tag: Tag = Tag.AUGMENTATION) -> tuple[int, int, int]:
        """Insert edge u-v into a face.

        The new dart p = u->v goes right after ``a`` in the ccw order at u, the
        dart q = v->u right after ``c`` at v.  ``None`` is only allowed for an
        isolated endpoint.  Both angles must belong to the same face.

        Returns ``(p, face_of_p, face_of_q)``.  The face of ``q`` keeps the old
        face id; when the face splits, ``p`` gets a new one.
        """
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        fa = self._angle_face(a, u)
        fc = self._angle_face(c, v)
        if fa is None and fc is None:
            raise PositionsNotOnFace("cannot connect two isolated vertices")
        if fa is not None and fc is not None and fa != fc:
            raise PositionsNotOnFace(f"angles lie on different faces {fa} and {fc}")
        if self.degree(u) >= MAX_DEGREE or self.degree(v) >= MAX_DEGREE:
            raise DegreeExceeded(f"inserting {u}-{v} exceeds degree {MAX_DEGREE}")
        f = fa if fa is not None else fc
        p = self._new_dart(u, tag, -1)
        q = self._new_dart(v, tag, -1)
        self.twin[p], self.twin[q] = q, p
        for dart, anchor, x in ((p, a, u), (q, c, v)):
            if anchor is None:
                self.out[x] = dart
            else:
                self._splice_after(anchor, dart)
        walk_q = self.walk_from(q)
        if p in walk_q:
            for e in walk_q:
                self.face[e] = f
            self.face_dart[f] = q
            return p, f, f
        self._relabel_walk(q, f)
        g = len(self.face_dart)
        self.face_dart.append(p)
        self._relabel_walk(p, g)
        return p, g, f

    def _angle_face(self, a: int | None, v: int) -> int | None:
        if a is None:
            if self.out[v] >= 0:
                raise PositionsNotOnFace(f"vertex {v} is not isolated; an angle is required")
            return None
        if self.tail[a] != v:
            raise PositionsNotOnFace(f"dart {a} does not leave vertex {v}")
        return self.face[self.nxt[a]]

    def insert_edge_in_face(self, f: int, a: int, c: int, tag: Tag = Tag.AUGMENTATION) -> int:
        """Insert a chord into face ``f`` between the angles after darts ``a`` and ``c``."""
        for x in (a, c):
            if not 0 <= x < self.num_darts or self.face[self.nxt[x]] != f:
                raise PositionsNotOnFace(f"angle after dart {x} is not on face {f}")
        p, _, _ = self.insert_edge(a, self.tail[a], c, self.tail[c], tag)
        return self.edge_id(p)

    def delete_edge(self, d: int) -> None:
        """Remove the edge of dart ``d``; dart and face ids are renumbered."""
        t = self.twin[d]
        for x in (d, t):
            v = self.tail[x]
            if self.nxt[x] == x:
                self.out[v] = -1
            else:
                self.nxt[self.prv[x]] = self.nxt[x]
                self.prv[self.nxt[x]] = self.prv[x]
                if self.out[v] == x:
                    self.out[v] = self.nxt[x]
        self._drop(darts={d, t}, vertices=set())

    def smooth(self, z: int) -> None:
        """Undo a subdivision: merge the two edges at degree-2 vertex ``z``."""
        ds = self.darts_at(z)
        if len(ds) != 2:
            raise NotSimple(f"vertex {z} has degree {len(ds)}, cannot smooth")
        a, b = ds
        d, t = self.twin[a], self.twin[b]  # u->z and v->z
        self.twin[d], self.twin[t] = t, d
        self._drop(darts={a, b}, vertices={z})

    def _drop(self, darts: set[int], vertices: set[int]) -> None:
        keep_d = [x for x in range(self.num_darts) if x not in darts]
        keep_v = [x for x in range(self.num_vertices) if x not in vertices]
        dmap = {old: new for new, old in enumerate(keep_d)}
        vmap = {old: new for new, old in enumerate(keep_v)}
        self.tail = [vmap[self.tail[x]] for x in keep_d]
        self.twin = [dmap[self.twin[x]] for x in keep_d]
        self.nxt = [dmap[self.nxt[x]] for x in keep_d]
        self.prv = [dmap[self.prv[x]] for x in keep_d]
        self.etag = [self.etag[x] for x in keep_d]
        self.source_dart = [self.source_dart[x] for x in keep_d]
        self.out = [dmap[self.out[x]] if self.out[x] >= 0 else -1 for x in keep_v]
        self.vtag = [self.vtag[x] for x in keep_v]
        self.recompute_faces()

    # ------------------------------------------------------------------
    # derived structures
    # ------------------------------------------------------------------
    def mirrored(self) -> "PlaneGraph":
        """Reverse every rotation order.  Face ids follow the same edge sets."""
        g = self.copy()
        g.nxt, g.prv = list(self.prv), list(self.nxt)
        g.face = [self.face[self.twin[d]] for d in range(self.num_darts)]
        g.face_dart = [self.twin[d] if d >= 0 else -1 for d in self.face_dart]
        return g

    def rotation_system(self) -> dict[int, list[int]]:
        """Vertex -> ccw neighbour list, rotated to start at the smallest neighbour."""
        res = {}
        for v in range(self.num_vertices):
            nb = self.neighbors(v)
            if nb:
                i = min(range(len(nb)), key=lambda k: (nb[k], k))
                nb = nb[i:] + nb[:i]
            res[v] = nb
        return res

    def face_sets(self) -> set[frozenset[tuple[int, int]]]:
        """Faces as sets of (tail, head) pairs, independent of ids."""
        return {frozenset((self.tail[d], self.head(d)) for d in self.face_walk(f)) for f in self.face_ids()}


# ----------------------------------------------------------------------
# cycles
# ----------------------------------------------------------------------
def check_cycle(g: PlaneGraph, cycle: Sequence[int]) -> None:
    """Raise unless ``cycle`` is a closed, simple dart sequence."""
    if not cycle:
        raise NotACycle("empty cycle")
    k = len(cycle)
    for i, d in enumerate(cycle):
        if g.head(d) != g.tail[cycle[(i + 1) % k]]:
            raise NotACycle(f"darts {d} and {cycle[(i + 1) % k]} are not consecutive")
    verts = [g.tail[d] for d in cycle]
    if len(set(verts)) != k:
        raise NotSimple("cycle repeats a vertex")
    if k == 2 and g.twin[cycle[0]] == cycle[1]:
        raise NotSimple("cycle uses one edge twice")


def interior_faces(g: PlaneGraph, cycle: Sequence[int], check: bool = True) -> set[int]:
    """Faces to the right of a simple directed cycle (flood fill over the dual)."""
    if check:
        check_cycle(g, cycle)
    on_cycle = set(cycle)
    on_cycle.update(g.twin[d] for d in cycle)
    start = {g.face[d] for d in cycle}
    seen = set(start)
    stack = list(start)
    while stack:
        f = stack.pop()
        for d in g.face_walk(f):
            if d in on_cycle:
                continue
            h = g.face[g.twin[d]]
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return seen


def split_closed_walk(g: PlaneGraph, walk: Sequence[int]) -> list[list[int]]:
    """Decompose a closed walk into simple closed sub-walks at repeated vertices.

    Back-and-forth traversals of a single edge are dropped, so only genuine
    simple cycles remain.
    """
    pieces: list[list[int]] = []
    stack_v: list[int] = [g.tail[walk[0]]]
    stack_d: list[int] = []
    where = {stack_v[0]: 0}
    for d in walk:
        w = g.head(d)
        stack_d.append(d)
        if w in where:
            j = where[w]
            piece = stack_d[j:]
            del stack_d[j:]
            for x in stack_v[j + 1:]:
                del where[x]
            del stack_v[j + 1:]
            if not (len(piece) == 2 and g.twin[piece[0]] == piece[1]):
                pieces.append(piece)
        else:
            where[w] = len(stack_v)
            stack_v.append(w)
    return pieces


def reverse_path(g: PlaneGraph, path: Iterable[int]) -> list[int]:
    return [g.twin[d] for d in reversed(list(path))]
