import json
import math
import os
import random
from pathlib import Path

from hypothesis import HealthCheck, settings

from orthoradial.io_cli.formats import load_instance
from orthoradial.io_cli.generator import perturbed_rep
from orthoradial.plane_graph import PlaneGraph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def fixture_rep(name):
    return load_instance(str(FIXTURES / f"{name}.json")).rep


def planar_from_coords(coords, edges):
    """PlaneGraph of a straight-line drawing; ccw order by angle."""
    n = len(coords)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    lists = []
    for v in range(n):
        x0, y0 = coords[v]
        order = sorted(adj[v], key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0))
        lists.append([(w, 0) for w in order])
    return PlaneGraph.build(n, lists)


def corpus_rep(seed, lo=3, hi=12):
    rng = random.Random(seed)
    n = rng.randint(lo, hi)
    return perturbed_rep(rng, n)


def essential_cycles(rep):
    """Simple essential cycles, directed with the center on the right."""
    from orthoradial.labeling import centered_right
    from orthoradial.validity import simple_cycles

    return [c for c in simple_cycles(rep) if centered_right(rep, c, check=False)]


def rotate_to(cycle, d):
    i = cycle.index(d)
    return cycle[i:] + cycle[:i]


def all_exterior_paths(rep, cycle, e, limit=8):
    """Simple paths head(e*) -> tail(e) avoiding e*, e and the interior of ``cycle``."""
    from orthoradial.plane_graph import interior_faces

    g = rep.graph
    inner = interior_faces(g, cycle)
    banned = {g.edge_id(rep.ref), g.edge_id(e)}
    s, t = g.head(rep.ref), g.tail[e]
    out = []

    def go(v, path, seen):
        if v == t:
            out.append(list(path))
            return
        if len(path) >= limit:
            return
        for d in g.darts_at(v):
            w = g.head(d)
            if w in seen or g.edge_id(d) in banned:
                continue
            if g.face[d] in inner and g.face[g.twin[d]] in inner:
                continue
            seen.add(w)
            path.append(d)
            go(w, path, seen)
            path.pop()
            seen.discard(w)

    go(s, [], {s})
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
