"""Constructors for representations: from rotations, from directions, from grid drawings."""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping, Sequence

from .errors import NonPlanarOrInconsistent
from .labeling import outer_cycle
from .plane_graph import PlaneGraph
from .representation import DOWN, RIGHT, UP, OrthoRadialRep


def rep_from_rotations(
    n: int,
    adjacency: Sequence[Sequence[tuple[int, int]]],
    rotations: Sequence[Sequence[int]],
    outer: tuple[int, int, int],
    central: tuple[int, int, int],
    ref: tuple[int, int, int],
) -> OrthoRadialRep:
    """Faces are given by a dart (u, v, slot) on their walk, i.e. with the face on the right."""
    g = PlaneGraph.build(n, adjacency)
    rot = [0] * g.num_darts
    for v in range(n):
        ds = g.darts_at(v)
        if len(rotations[v]) != len(ds):
            raise NonPlanarOrInconsistent(f"vertex {v}: {len(rotations[v])} angles for degree {len(ds)}")
        for d, r in zip(ds, rotations[v]):
            rot[d] = r
    dart = {}
    for d in range(g.num_darts):
        v = g.tail[d]
        dart[(v, adjacency[v][g.darts_at(v).index(d)])] = d
    def lookup(x: tuple[int, int, int]) -> int:
        u, w, slot = x
        if (u, (w, slot)) not in dart:
            raise NonPlanarOrInconsistent(f"no dart {u}->{w} with slot {slot}")
        return dart[(u, (w, slot))]
    return OrthoRadialRep(g, rot, g.face[lookup(central)], g.face[lookup(outer)], lookup(ref))


def rep_from_directions(
    n: int,
    edges: Sequence[tuple[int, int, int]],
    ring: Sequence[int],
) -> OrthoRadialRep:
    """Build from edges ``(u, v, direction of u->v)`` of a bend-free drawing.

    ``ring`` gives each vertex's distance class from the outside and is only
    used to pick the outer face, the central face and an outlying reference
    edge.
    """
    out: dict[int, list[tuple[int, int, int]]] = defaultdict(list)  # v -> (dir, w, slot)
    count: dict[tuple[int, int], int] = defaultdict(int)
    for u, v, d in edges:
        key = (min(u, v), max(u, v))
        slot = count[key]
        count[key] += 1
        out[u].append((d % 4, v, slot))
        out[v].append(((d + 2) % 4, u, slot))
    adjacency, rotations = [], []
    for v in range(n):
        ds = sorted(out[v], key=lambda t: (-t[0]) % 4)
        if len({t[0] for t in ds}) != len(ds):
            raise NonPlanarOrInconsistent(f"two edges leave vertex {v} in the same direction")
        adjacency.append([(w, s) for _, w, s in ds])
        rots = []
        for i, (d, _, _) in enumerate(ds):
            q = (d - ds[(i + 1) % len(ds)][0]) % 4 or 4
            rots.append(2 - q)
        rotations.append(rots)
    g = PlaneGraph.build(n, adjacency)
    rot = [0] * g.num_darts
    dirs = [0] * g.num_darts
    for v in range(n):
        for i, d in enumerate(g.darts_at(v)):
            rot[d] = rotations[v][i]
    ordered = {v: sorted(out[v], key=lambda t: (-t[0]) % 4) for v in range(n)}
    for v in range(n):
        for i, d in enumerate(g.darts_at(v)):
            dirs[d] = ordered[v][i][0]
    horizontal = [d for d in range(g.num_darts) if dirs[d] == RIGHT]
    top = min(horizontal, key=lambda d: (ring[g.tail[d]], d))
    bottom = max(horizontal, key=lambda d: (ring[g.tail[d]], -d))
    rep = OrthoRadialRep(g, rot, g.face[bottom], g.face[g.twin[top]], -1)
    c_o = outer_cycle(rep)
    rep.ref = min((d for d in c_o if dirs[d] == RIGHT), key=lambda d: (ring[g.tail[d]], d))
    return rep


def rep_from_drawing(
    coords: Mapping[int, tuple[int, int]],
    edges: Sequence[tuple[int, int]],
) -> OrthoRadialRep:
    """Build from vertex ``(ring, tick)`` coordinates and straight edges.

    Edges on one tick are radial.  Edges on one ring are circular arcs and
    must be listed as ``(u, v)`` with u -> v running clockwise (rightwards).
    """
    n = len(coords)
    typed = []
    for u, v in edges:
        (ru, tu), (rv, tv) = coords[u], coords[v]
        if tu == tv and ru != rv:
            typed.append((u, v, DOWN if rv > ru else UP))
        elif ru == rv:
            typed.append((u, v, RIGHT))
        else:
            raise NonPlanarOrInconsistent(f"edge {u}-{v} is neither radial nor circular")
    return rep_from_directions(n, typed, [coords[v][0] for v in range(n)])


def tilt(rep: OrthoRadialRep, d: int, delta: int) -> bool:
    """Rotate the edge of dart ``d`` combinatorially, in place.

    At the tail the angle left of ``d`` grows by ``delta`` and the one on its
    right shrinks; at the head the opposite happens, so vertex sums and face
    rotations are unchanged.  Returns False (and changes nothing) when a value
    would leave the range or the edge has a degree-1 endpoint.
    """
    g = rep.graph
    t = g.twin[d]
    if g.nxt[d] == d or g.nxt[t] == t:
        return False
    changes = {}
    for x, s in ((d, delta), (g.prv[d], -delta), (g.prv[t], -delta), (t, delta)):
        changes[x] = changes.get(x, rep.rot[x]) + s
    if any(not -2 <= r <= 1 for r in changes.values()):
        return False
    for x, r in changes.items():
        rep.rot[x] = r
    return True
