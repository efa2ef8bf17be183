"""Edge lengths and central angles from two face-adjacency flow networks.

Vertical edges get their lengths from a circulation in N_ver, horizontal edges
their angular extents from a circulation in N_hor.  Every arc has lower bound
1 and upper bound U = number of arcs, which loses nothing: a feasible flow
exists iff every arc lies on a directed cycle, and one unit per such cycle
never exceeds U on any arc.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .errors import Infeasible, InconsistentIntegration, NotRectangular
from .labeling import central_cycle, classify, labels, outer_cycle
from .plane_graph import Tag
from .representation import DOWN, LEFT, RIGHT, UP, OrthoRadialRep, check_local_consistency, directions, rot_path


@dataclass
class Arc:
    tail: int
    head: int
    crossing: int | None  # dart of the crossed edge (upward / rightward), None for outer->central
    lower: int = 1
    upper: int = 1


@dataclass
class FlowNetwork:
    name: str
    nodes: list[int]
    arcs: list[Arc]


@dataclass
class Flow:
    values: list[int]

    def check(self, net: FlowNetwork) -> None:
        bal: dict[int, int] = defaultdict(int)
        for a, x in zip(net.arcs, self.values):
            if not a.lower <= x <= a.upper:
                raise Infeasible(set(), f"arc {a.tail}->{a.head} carries {x} outside [{a.lower}, {a.upper}]")
            bal[a.tail] -= x
            bal[a.head] += x
        bad = {v for v, b in bal.items() if b}
        if bad:
            raise Infeasible(bad, "flow conservation violated")


@dataclass
class EdgeGeometry:
    u: int
    v: int
    kind: str  # "radial" (u -> v towards the center) or "arc" (u -> v clockwise)
    extent: int
    tag: str = Tag.ORIGINAL.value
    dart: int = -1  # dart u -> v in the graph the drawing was made for


@dataclass
class OrthoRadialDrawing:
    ring: list[int]
    tick: list[int]
    phi: int
    edges: list[EdgeGeometry]
    vertices: list[int] = field(default_factory=list)  # ids present in the drawing
    vertex_tags: dict[int, str] = field(default_factory=dict)


# ----------------------------------------------------------------------
# networks
# ----------------------------------------------------------------------
def check_rectangular(rep: OrthoRadialRep) -> None:
    g = rep.graph
    for f in rep.regular_faces():
        rots = [rep.rot[g.twin[d]] for d in g.face_walk(f)]
        if any(r < 0 for r in rots):
            raise NotRectangular(f"face {f} has a concave corner")
    for name, cyc in (("outer", outer_cycle(rep)), ("central", central_cycle(rep))):
        if set(labels(rep, cyc).values) != {0}:
            raise NotRectangular(f"{name} cycle is not horizontal")
    for f in (rep.outer, rep.central):
        if len(set(g.face_walk(f))) != len(set(outer_cycle(rep) if f == rep.outer else central_cycle(rep))):
            raise NotRectangular("outer or central face is not bounded by a simple cycle")


def build_networks(rep: OrthoRadialRep, check: bool = True) -> tuple[FlowNetwork, FlowNetwork]:
    if check:
        check_rectangular(rep)
    g = rep.graph
    dirs = directions(rep)
    ver, hor = [], []
    for d in range(g.num_darts):
        if dirs[d] == UP:
            ver.append(Arc(g.face[g.twin[d]], g.face[d], d))
        elif dirs[d] == RIGHT:
            hor.append(Arc(g.face[d], g.face[g.twin[d]], d))
    hor.append(Arc(rep.outer, rep.central, None))
    for arcs in (ver, hor):
        for a in arcs:
            a.upper = len(arcs)
    faces = g.face_ids()
    n_ver = FlowNetwork("ver", [f for f in faces if f not in (rep.outer, rep.central)], ver)
    n_hor = FlowNetwork("hor", faces, hor)
    return n_ver, n_hor


def _dead_end(net: FlowNetwork) -> set[int] | None:
    """A node set with an entering arc but no leaving arc, if one exists."""
    dg = nx.DiGraph()
    dg.add_nodes_from(net.nodes)
    dg.add_edges_from((a.tail, a.head) for a in net.arcs)
    comp = {}
    for i, scc in enumerate(nx.strongly_connected_components(dg)):
        for v in scc:
            comp[v] = i
    for a in net.arcs:
        if comp[a.tail] != comp[a.head]:
            return {a.head} | nx.descendants(dg, a.head)
    return None


def feasible_flow(net: FlowNetwork, compact: bool = False) -> Flow:
    """Integer circulation with every arc value in [lower, upper].

    Parallel arcs are merged for the solver and split again afterwards.  With
    ``compact`` the total flow is minimised (min-cost flow, unit costs).
    """
    if not net.arcs:
        return Flow([])
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, a in enumerate(net.arcs):
        groups[(a.tail, a.head)].append(i)
    lo = {k: sum(net.arcs[i].lower for i in idx) for k, idx in groups.items()}
    hi = {k: sum(net.arcs[i].upper for i in idx) for k, idx in groups.items()}
    bal: dict[int, int] = defaultdict(int)  # out-lower minus in-lower
    for (u, v), low in lo.items():
        bal[u] += low
        bal[v] -= low
    dg = nx.DiGraph()
    dg.add_nodes_from(net.nodes)
    for (u, v) in groups:
        if u == v:
            continue
        dg.add_edge(u, v, capacity=hi[(u, v)] - lo[(u, v)], weight=1)
    if compact:
        for v in net.nodes:
            dg.nodes[v]["demand"] = bal[v]
        try:
            sol = nx.min_cost_flow(dg)
        except nx.NetworkXUnfeasible:
            raise Infeasible(_dead_end(net) or set())
        extra = {(u, v): sol[u][v] for (u, v) in groups if u != v}
    else:
        src, snk = ("source",), ("sink",)
        need = 0
        for v in net.nodes:
            if bal[v] < 0:
                dg.add_edge(src, v, capacity=-bal[v])
                need += -bal[v]
            elif bal[v] > 0:
                dg.add_edge(v, snk, capacity=bal[v])
        if need:
            value, sol = nx.maximum_flow(dg, src, snk)
            if value != need:
                raise Infeasible(_dead_end(net) or set())
            extra = {(u, v): sol[u][v] for (u, v) in groups if u != v}
        else:
            extra = {k: 0 for k in groups if k[0] != k[1]}
    values = [0] * len(net.arcs)
    for k, idx in groups.items():
        rest = extra.get(k, 0)
        for i in idx:
            a = net.arcs[i]
            add = min(rest, a.upper - a.lower)
            values[i] = a.lower + add
            rest -= add
    flow = Flow(values)
    flow.check(net)
    return flow


# ----------------------------------------------------------------------
# coordinates
# ----------------------------------------------------------------------
def _step(ring: int, tick: int, k: int, length: int, phi: int) -> tuple[int, int]:
    if k == UP:
        return ring - length, tick
    if k == DOWN:
        return ring + length, tick
    if k == RIGHT:
        return ring, (tick + length) % phi
    return ring, (tick - length) % phi


def _integrate(g, start: int, dirs: Sequence[int], length: Sequence[int], phi: int,
               vertices: Sequence[int] | None = None) -> tuple[list, list]:
    n = g.num_vertices
    ring: list[int | None] = [None] * n
    tick: list[int | None] = [None] * n
    ring[start], tick[start] = 0, 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for d in g.darts_at(u):
            v = g.head(d)
            r, t = _step(ring[u], tick[u], dirs[d], length[d], phi)
            if ring[v] is None:
                ring[v], tick[v] = r, t
                queue.append(v)
            elif (ring[v], tick[v]) != (r, t):
                raise InconsistentIntegration(
                    f"edge {u}->{v} does not close: {(r, t)} vs {(ring[v], tick[v])}")
    low = min(ring)
    return [r - low for r in ring], tick


def _geometry(g, dirs: Sequence[int], length: Sequence[int], darts: Sequence[int],
              tags: Sequence[str]) -> list[EdgeGeometry]:
    out = []
    for d, tag in zip(darts, tags):
        if dirs[d] in (UP, LEFT):
            d = g.twin[d]
        out.append(EdgeGeometry(g.tail[d], g.head(d), "radial" if dirs[d] == DOWN else "arc",
                                length[d], tag, d))
    return out


def flows_to_coordinates(rep: OrthoRadialRep, n_ver: FlowNetwork, f_ver: Flow,
                         n_hor: FlowNetwork, f_hor: Flow) -> OrthoRadialDrawing:
    """Integrate edge lengths from the source of the reference edge (ring 0, tick 0)."""
    g = rep.graph
    dirs = directions(rep)
    length = [0] * g.num_darts
    for net, flow in ((n_ver, f_ver), (n_hor, f_hor)):
        for a, x in zip(net.arcs, flow.values):
            if a.crossing is not None:
                length[a.crossing] = length[g.twin[a.crossing]] = x
    phi = sum(x for a, x in zip(n_hor.arcs, f_hor.values) if a.tail == rep.central)
    ring, tick = _integrate(g, g.tail[rep.ref], dirs, length, phi)
    darts = g.edges()
    edges = _geometry(g, dirs, length, darts, [g.etag[d].value for d in darts])
    n = g.num_vertices
    return OrthoRadialDrawing(ring, tick, phi, edges, list(range(n)),
                              {v: g.vtag[v].value for v in range(n)})


def project_back(drawing: OrthoRadialDrawing, rect: OrthoRadialRep,
                 original: OrthoRadialRep) -> OrthoRadialDrawing:
    """Drop synthetic elements and merge the pieces of every subdivided input edge.

    Input vertices keep their ids (synthetic ones are appended), and every
    rectangulation dart remembers the input dart it runs along.
    """
    g, og = rect.graph, original.graph
    n = og.num_vertices
    dirs = directions(rect)
    piece: dict[tuple[int, int], int] = {}
    for d in range(g.num_darts):
        if g.source_dart[d] >= 0:
            piece[(g.tail[d], g.source_dart[d])] = d
    extent = {e.dart: e.extent for e in drawing.edges}
    odirs = [0] * og.num_darts
    length = [0] * og.num_darts
    for d0 in range(og.num_darts):
        d = piece[(og.tail[d0], d0)]
        odirs[d0] = dirs[d]
        total = 0
        while True:
            if dirs[d] != odirs[d0]:
                raise AssertionError(f"subdivided edge {d0} is not straight")
            total += extent.get(d, extent.get(g.twin[d]))
            v = g.head(d)
            if v < n:
                break
            d = piece[(v, d0)]
        if v != og.head(d0):
            raise AssertionError(f"chain of input dart {d0} ends at {v}")
        length[d0] = total
    low = min(drawing.ring[v] for v in range(n))
    darts = og.edges()
    return OrthoRadialDrawing([drawing.ring[v] - low for v in range(n)], drawing.tick[:n], drawing.phi,
                              _geometry(og, odirs, length, darts, [Tag.ORIGINAL.value] * len(darts)),
                              list(range(n)))


def squeeze(drawing: OrthoRadialDrawing) -> OrthoRadialDrawing:
    """Remove rings and ticks that carry no vertex.

    Edges follow grid lines between vertices, so an empty ring or tick only
    lengthens the edges passing over it; dropping it keeps every angle and
    keeps the drawing plane.
    """
    vs = drawing.vertices
    rings = sorted({drawing.ring[v] for v in vs})
    ticks = sorted({drawing.tick[v] for v in vs})
    rmap = {r: i for i, r in enumerate(rings)}
    tmap = {t: i for i, t in enumerate(ticks)}
    ring, tick = list(drawing.ring), list(drawing.tick)
    for v in vs:
        ring[v], tick[v] = rmap[ring[v]], tmap[tick[v]]
    phi = len(ticks)
    edges = []
    for e in drawing.edges:
        if e.kind == "radial":
            ext = ring[e.v] - ring[e.u]
        else:
            ext = (tick[e.v] - tick[e.u]) % phi or phi
        edges.append(EdgeGeometry(e.u, e.v, e.kind, ext, e.tag, e.dart))
    return OrthoRadialDrawing(ring, tick, phi, edges, list(vs), dict(drawing.vertex_tags))


# ----------------------------------------------------------------------
# reading a drawing
# ----------------------------------------------------------------------
def drawn_directions(drawing: OrthoRadialDrawing, g) -> list[int]:
    """Direction of every dart, read off the drawing's geometry."""
    dirs = [-1] * g.num_darts
    for e in drawing.edges:
        r0, t0 = drawing.ring[e.u], drawing.tick[e.u]
        r1, t1 = drawing.ring[e.v], drawing.tick[e.v]
        if e.extent < 1:
            raise InconsistentIntegration(f"edge {e.u}-{e.v} has extent {e.extent}")
        if e.kind == "radial":
            if t0 != t1 or r1 - r0 != e.extent:
                raise InconsistentIntegration(f"radial edge {e.u}-{e.v} does not match its endpoints")
            k = DOWN
        else:
            if r0 != r1 or (t1 - t0 - e.extent) % drawing.phi or e.extent >= drawing.phi:
                raise InconsistentIntegration(f"arc {e.u}-{e.v} does not match its endpoints")
            k = RIGHT
        dirs[e.dart] = k
        dirs[g.twin[e.dart]] = (k + 2) % 4
    return dirs


def extract_rotations(drawing: OrthoRadialDrawing, rep: OrthoRadialRep) -> list[int]:
    """Angle assignment of the drawing, on the darts of ``rep``.

    Raises InconsistentIntegration if two edges leave a vertex in the same
    direction or the drawn cyclic order differs from the embedding.
    """
    g = rep.graph
    dirs = drawn_directions(drawing, g)
    rot = [0] * g.num_darts
    for v in range(g.num_vertices):
        ds = g.darts_at(v)
        if len({dirs[d] for d in ds}) != len(ds):
            raise InconsistentIntegration(f"two edges leave vertex {v} in the same direction")
        drawn = sorted(ds, key=lambda d: (dirs[ds[0]] - dirs[d]) % 4)
        if drawn != ds:
            raise InconsistentIntegration(f"drawn edge order at vertex {v} differs from the embedding")
        for d in ds:
            quarter = (dirs[d] - dirs[g.nxt[d]]) % 4 or 4
            rot[d] = 2 - quarter
    return rot


def crossings(drawing: OrthoRadialDrawing) -> list[tuple[str, str]]:
    """Pairs of drawn elements that overlap where they should not; empty iff plane.

    Elements are vertices ``v<i>`` and edges ``e<i>`` (index into drawing.edges).
    Quadratic, meant for checking.
    """
    phi = drawing.phi
    pos = {v: (drawing.ring[v], drawing.tick[v]) for v in drawing.vertices}
    bad: list[tuple[str, str]] = []
    seen: dict[tuple[int, int], int] = {}
    for v, p in pos.items():
        if p in seen:
            bad.append((f"v{seen[p]}", f"v{v}"))
        seen[p] = v

    def on(p: tuple[int, int], e: EdgeGeometry) -> bool:
        r, t = p
        if e.kind == "radial":
            return t == drawing.tick[e.u] and drawing.ring[e.u] <= r <= drawing.ring[e.v]
        return r == drawing.ring[e.u] and (t - drawing.tick[e.u]) % phi <= e.extent

    for i, e in enumerate(drawing.edges):
        for v, p in pos.items():
            if v not in (e.u, e.v) and on(p, e):
                bad.append((f"e{i}", f"v{v}"))
    for i, e in enumerate(drawing.edges):
        for j in range(i + 1, len(drawing.edges)):
            if _overlap(drawing, e, drawing.edges[j], pos, on):
                bad.append((f"e{i}", f"e{j}"))
    return bad


def _overlap(drawing: OrthoRadialDrawing, e: EdgeGeometry, f: EdgeGeometry, pos, on) -> bool:
    phi = drawing.phi
    if e.kind == "arc" and f.kind == "radial":
        e, f = f, e
    if e.kind == "radial" and f.kind == "radial":
        if drawing.tick[e.u] != drawing.tick[f.u]:
            return False
        lo = max(drawing.ring[e.u], drawing.ring[f.u])
        hi = min(drawing.ring[e.v], drawing.ring[f.v])
        return lo < hi  # a single common point is an end of both
    if e.kind == "radial":
        p = (drawing.ring[f.u], drawing.tick[e.u])
        if not (on(p, e) and on(p, f)):
            return False
        return not (p in {pos[e.u], pos[e.v]} and p in {pos[f.u], pos[f.v]})
    if drawing.ring[e.u] != drawing.ring[f.u]:
        return False
    k = (drawing.tick[f.u] - drawing.tick[e.u]) % phi
    return k < e.extent or k + f.extent > phi


def is_outlying(drawing: OrthoRadialDrawing, rep: OrthoRadialRep) -> bool:
    """Whether the reference edge is outlying in the drawing.

    Take an outermost right-pointing edge e_o of the outer cycle; the
    reference edge is outlying iff the outer-cycle path from e_o to it has
    rotation 0.
    """
    g = rep.graph
    dirs = drawn_directions(drawing, g)
    cyc = outer_cycle(rep)
    if rep.ref not in cyc:
        return False
    right = [d for d in cyc if dirs[d] == RIGHT]
    if not right:
        return False
    e_o = min(right, key=lambda d: (drawing.ring[g.tail[d]], cyc.index(d)))
    i, j = cyc.index(e_o), cyc.index(rep.ref)
    path = cyc[i:j + 1] if i <= j else cyc[i:] + cyc[:j + 1]
    return rot_path(rep, path) == 0
