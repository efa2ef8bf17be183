"""Deterministic random instances: cylinder grids, perturbed drawings, planted spirals."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from ..builders import rep_from_drawing, tilt
from ..errors import ParamsOutOfRange
from ..representation import RIGHT, OrthoRadialRep, directions
from .formats import dumps_instance

MODES = ("grid", "perturbed", "spiral")
SCALE = 4  # grid spacing in drawing units; leaves room for subdivisions and stubs


@dataclass
class GeneratorConfig:
    """Knobs of the ``perturbed`` mode."""

    max_rings: int = 3
    max_spokes: int = 4
    spoke_drop: float = 0.3
    ring_drop: float = 0.15
    stub_share: float = 0.5  # share of spare vertices spent on degree-1 stubs
    max_tilts: int = 4


def grid_shape(n: int) -> tuple[int, int]:
    """Rings x spokes with rings * spokes = n, as square as possible, spokes >= 2."""
    best = (1, n)
    for r in range(1, n + 1):
        if n % r == 0 and n // r >= 2 and r <= n // r:
            best = (r, n // r)
    return best


def _grid_geometry(rings: int, spokes: int):
    coords = {}
    edges = []
    for i in range(rings):
        for j in range(spokes):
            coords[i * spokes + j] = (SCALE * i, SCALE * j)
    for i in range(rings):
        for j in range(spokes):
            edges.append((i * spokes + j, i * spokes + (j + 1) % spokes))
            if i + 1 < rings:
                edges.append((i * spokes + j, (i + 1) * spokes + j))
    return coords, edges


def grid_rep(rings: int, spokes: int) -> OrthoRadialRep:
    """Cylinder grid: ``rings`` concentric cycles of ``spokes`` vertices, all angles flat or right."""
    if rings < 1 or spokes < 2:
        raise ParamsOutOfRange("grid needs rings >= 1 and spokes >= 2")
    coords, edges = _grid_geometry(rings, spokes)
    return rep_from_drawing(coords, edges)


class _Drawing:
    """Mutable grid drawing used while generating perturbed instances."""

    def __init__(self, coords, edges, period):
        self.coords = dict(coords)
        self.edges = list(edges)
        self.period = period

    def _on_edge(self, p, e) -> bool:
        (ru, tu), (rv, tv) = self.coords[e[0]], self.coords[e[1]]
        r, t = p
        if tu == tv and ru != rv:
            return t == tu and min(ru, rv) <= r <= max(ru, rv)
        if r != ru:
            return False
        length = (tv - tu) % self.period or self.period
        return (t - tu) % self.period <= length

    def free(self, p) -> bool:
        if p in self.coords.values():
            return False
        return not any(self._on_edge(p, e) for e in self.edges)

    def connected_without(self, k: int) -> bool:
        rest = self.edges[:k] + self.edges[k + 1:]
        adj = {v: [] for v in self.coords}
        for u, v in rest:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(self.coords)

    def subdivide(self, k: int) -> bool:
        u, v = self.edges[k]
        (ru, tu), (rv, tv) = self.coords[u], self.coords[v]
        if tu == tv and ru != rv:
            if abs(rv - ru) < 2:
                return False
            mid = ((ru + rv) // 2, tu)
        else:
            length = (tv - tu) % self.period or self.period
            if length < 2:
                return False
            mid = (ru, (tu + length // 2) % self.period)
        z = len(self.coords)
        self.coords[z] = mid
        self.edges[k:k + 1] = [(u, z), (z, v)]
        return True

    def add_stub(self, u: int, direction: int) -> bool:
        r, t = self.coords[u]
        p = {0: (r, (t + 1) % self.period), 1: (r + 1, t), 2: (r, (t - 1) % self.period),
             3: (r - 1, t)}[direction]
        if not self.free(p):
            return False
        z = len(self.coords)
        self.coords[z] = p
        self.edges.append((z, u) if direction == 2 else (u, z))
        return True


def perturbed_rep(rng: random.Random, n: int, cfg: GeneratorConfig | None = None) -> OrthoRadialRep:
    """Random small drawing (so a valid start), then random angle tilts.

    Tilts keep every vertex sum and face rotation, so the result is locally
    consistent; whether it is still valid is left to the caller to decide.
    """
    cfg = cfg or GeneratorConfig()
    shapes = [(r, s) for r in range(1, cfg.max_rings + 1) for s in range(2, cfg.max_spokes + 1)
              if r * s <= n]
    if not shapes:
        raise ParamsOutOfRange(f"n={n} too small for a perturbed instance")
    rings, spokes = rng.choice(shapes)
    coords, edges = _grid_geometry(rings, spokes)
    dr = _Drawing(coords, edges, SCALE * spokes)
    kept = rng.randrange(rings)
    for k in reversed(range(len(dr.edges))):
        u, v = dr.edges[k]
        radial = dr.coords[u][1] == dr.coords[v][1]
        ring_of = dr.coords[u][0] // SCALE
        p = cfg.spoke_drop if radial else (0.0 if ring_of == kept else cfg.ring_drop)
        if rng.random() < p and dr.connected_without(k):
            del dr.edges[k]
    spare = n - len(dr.coords)
    stubs = sum(1 for _ in range(spare) if rng.random() < cfg.stub_share)
    for _ in range(spare - stubs):
        dr.subdivide(rng.randrange(len(dr.edges)))
    for _ in range(stubs):
        base = [v for v in dr.coords if _degree(dr, v) < 4 and _degree(dr, v) > 1]
        if not base:
            break
        dr.add_stub(rng.choice(base), rng.randrange(4))
    rep = rep_from_drawing(dr.coords, dr.edges)
    for _ in range(rng.randint(0, cfg.max_tilts)):
        tilt(rep, rng.randrange(rep.graph.num_darts), rng.choice((-1, 1)))
    return rep


def _degree(dr: _Drawing, v: int) -> int:
    return sum(1 for e in dr.edges if v in e)


def spiral_rep(rng: random.Random, n: int) -> OrthoRadialRep:
    """Cylinder grid with one ring turned into a staircase: a planted decreasing cycle."""
    if n < 3:
        raise ParamsOutOfRange("spiral needs n >= 3")
    if n < 8:
        rep = grid_rep(1, n)
        ring = 0
    else:
        rings, spokes = grid_shape(n - 2)
        coords, edges = _grid_geometry(rings, spokes)
        ring = rng.randrange(rings)
        j = rng.randrange(spokes)
        k = edges.index((ring * spokes + j, ring * spokes + (j + 1) % spokes))
        dr = _Drawing(coords, edges, SCALE * spokes)
        dr.subdivide(k)
        dr.subdivide(k + 1)
        rep = rep_from_drawing(dr.coords, dr.edges)
    g = rep.graph
    dirs = directions(rep)
    steps = [d for d in range(g.num_darts) if dirs[d] == RIGHT and g.degree(g.tail[d]) == 2
             and g.degree(g.head(d)) == 2]
    d = rng.choice(steps)
    if not tilt(rep, d, -1):
        raise AssertionError("staircase tilt rejected")
    return rep


def generate_rep(seed: int, n: int, mode: str, rings: int | None = None,
                 spokes: int | None = None) -> OrthoRadialRep:
    if mode not in MODES:
        raise ParamsOutOfRange(f"unknown mode {mode!r}; expected one of {MODES}")
    if n < 3:
        raise ParamsOutOfRange("n must be at least 3")
    rng = random.Random(seed)
    if mode == "grid":
        if rings is None or spokes is None:
            rings, spokes = grid_shape(n)
        return grid_rep(rings, spokes)
    if mode == "perturbed":
        return perturbed_rep(rng, n)
    return spiral_rep(rng, n)


def generate(seed: int, n: int, mode: str, rings: int | None = None, spokes: int | None = None) -> str:
    """Instance file text; the same arguments always give the same bytes."""
    return dumps_instance(generate_rep(seed, n, mode, rings, spokes))
