"""Acceptance run over a generated corpus; prints one PASS/FAIL line per criterion.

    pytest tests/test_acceptance.py -s
"""

import math
import time
from functools import lru_cache

import numpy as np

from conftest import all_exterior_paths, corpus_rep
from orthoradial import properties as P
from orthoradial.compaction import (build_networks, crossings, extract_rotations, feasible_flow,
                                    flows_to_coordinates)
from orthoradial.errors import NotValid
from orthoradial.io_cli.generator import grid_rep
from orthoradial.labeling import central_cycle, classify, labels, outer_cycle
from orthoradial.pipeline import PipelineConfig, draw
from orthoradial.plane_graph import check_cycle, interior_faces
from orthoradial.rectangulation import RectangulationConfig, rectangulate, turns
from orthoradial.representation import DOWN, LEFT, RIGHT, UP, directions, rot_path
from orthoradial.validity import is_valid, oracle_validity, simple_cycles

CORPUS_SIZE = 1200
RESULTS = []


def report(k, ok, detail):
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    return ok


@lru_cache(maxsize=None)
def corpus():
    return [corpus_rep(seed, 3, 12) for seed in range(CORPUS_SIZE)]


@lru_cache(maxsize=None)
def verdicts():
    return [is_valid(rep) for rep in corpus()]


def witness_problems(rep, witness):
    """Re-verify a witness without the search code: simple, essential, strictly monotone."""
    g = rep.graph
    c = witness.labeling.cycle
    try:
        check_cycle(g, c)
    except Exception as exc:  # noqa: BLE001 - any failure is a problem here
        return [f"not a simple cycle: {exc}"]
    right = interior_faces(g, c, check=False)
    if rep.central not in right or rep.outer in right:
        return ["not essential with the center on the right"]
    paths = all_exterior_paths(rep, c, c[0], limit=g.num_vertices)
    if not paths:
        return ["no exterior reference path"]
    anchor = rot_path(rep, [rep.ref] + paths[0] + [c[0]])
    k = len(c)
    values = [anchor + rot_path(rep, c[:i + 1]) for i in range(k)]
    if values != witness.labeling.values:
        return [f"labels differ: {values} vs {witness.labeling.values}"]
    if not classify(values).strictly_monotone or classify(values) != witness.kind:
        return [f"labels {values} are not {witness.kind.value}"]
    return []


# ----------------------------------------------------------------------
def test_1_oracle_equivalence():
    t0 = time.perf_counter()
    reps = corpus()
    disagree, bad_witness = [], []
    for seed, (rep, res) in enumerate(zip(reps, verdicts())):
        if oracle_validity(rep).valid != res.valid:
            disagree.append(seed)
        if not res.valid and witness_problems(rep, res.witness):
            bad_witness.append(seed)
    dt = time.perf_counter() - t0
    invalid = sum(not r.valid for r in verdicts())
    ok = not disagree and not bad_witness and dt < 300 and len(reps) >= 1000
    assert report(1, ok, f"{len(reps)} instances ({invalid} invalid), {len(disagree)} disagreements, "
                  f"{len(bad_witness)} bad witnesses, {dt:.1f}s"), (disagree[:10], bad_witness[:10])


def test_2_characterization():
    drawn = rejected = 0
    failures = []
    for seed, (rep, res) in enumerate(zip(corpus(), verdicts())):
        try:
            out = draw(rep, PipelineConfig())
        except NotValid as exc:
            if res.valid or witness_problems(rep, exc.witness):
                failures.append((seed, "rejected"))
            rejected += 1
            continue
        except Exception as exc:  # noqa: BLE001 - the criterion counts every exception
            failures.append((seed, f"{type(exc).__name__}: {exc}"))
            continue
        if not res.valid or extract_rotations(out.drawing, rep) != rep.rot or crossings(out.drawing):
            failures.append((seed, "drawing"))
        drawn += 1
    assert report(2, not failures, f"{drawn} drawn with identical angles, {rejected} rejected with "
                  f"a monotone witness, {len(failures)} failures"), failures[:10]


def _rectangular_problems(rect):
    g = rect.graph
    bad = []
    for f in rect.regular_faces():
        t = turns(rect, f)[1]
        if t.count(1) != 4 or any(r < 0 for r in t):
            bad.append(f"face {f} turns {t}")
    for cyc in (outer_cycle(rect), central_cycle(rect)):
        if set(labels(rect, cyc).values) != {0}:
            bad.append("outer or central cycle not horizontal")
    n_ver, n_hor = build_networks(rect)
    f_ver, f_hor = feasible_flow(n_ver), feasible_flow(n_hor)
    for net, flow in ((n_ver, f_ver), (n_hor, f_hor)):
        flow.check(net)
        if min(flow.values, default=1) < 1:
            bad.append(f"{net.name} arc below 1")
    drawing = flows_to_coordinates(rect, n_ver, f_ver, n_hor, f_hor)
    length = [0] * g.num_darts
    for e in drawing.edges:
        length[e.dart] = length[g.twin[e.dart]] = e.extent
    dirs = directions(rect)
    for f in rect.regular_faces():
        walk = g.face_walk(f)
        side = {k: sum(length[d] for d in walk if dirs[d] == k) for k in (UP, DOWN, LEFT, RIGHT)}
        if side[UP] != side[DOWN] or side[LEFT] != side[RIGHT]:
            bad.append(f"face {f} sides {side}")
    return bad


def test_3_rectangular_invariants():
    checked = 0
    failures = []
    for seed, (rep, res) in enumerate(zip(corpus(), verdicts())):
        if not res.valid:
            continue
        rect = rectangulate(rep).rep
        bad = _rectangular_problems(rect)
        if bad:
            failures.append((seed, bad[:3]))
        checked += 1
    assert report(3, not failures, f"{checked} rectangulations, {len(failures)} with violations"), failures[:5]


def test_4_label_algebra():
    counts = dict.fromkeys(["difference", "mirror", "flip", "central", "horizontal", "inc/dec"], 0)
    cycles = 0
    for rep in corpus():
        labs = P.essential_labelings(rep)
        cycles += len(labs)
        counts["difference"] += len(P.label_difference_violations(rep, labs))
        counts["mirror"] += len(P.mirror_violations(rep, labs))
        counts["flip"] += len(P.flip_violations(rep, labs))
        counts["central"] += len(P.shared_central_label_violations(rep, labs))
        counts["horizontal"] += len(P.horizontal_sharing_violations(rep, labs))
        counts["inc/dec"] += len(P.inc_dec_sharing_violations(rep, labs))
    total = sum(counts.values())
    assert report(4, total == 0, f"{cycles} essential cycles, violations {counts}")


def test_5_rotation_constants():
    bad = 0
    cycles = 0
    for rep in corpus():
        cycles += len(simple_cycles(rep))
        bad += len(P.rotation_constant_violations(rep))
    assert report(5, bad == 0, f"{cycles} directed simple cycles, {bad} violations")


def test_6_fast_test_equivalence():
    cfg = RectangulationConfig(cross_check_fast=True)
    tests = agree = 0
    disagreements = []
    for seed, (rep, res) in enumerate(zip(corpus(), verdicts())):
        if not res.valid:
            continue
        stats = rectangulate(rep, cfg).stats
        tests += stats.fast_tests
        agree += stats.fast_agreements
        disagreements += [(seed, x) for x in stats.fast_disagreements]
    ok = not disagreements and tests == agree and tests > 0
    assert report(6, ok, f"{tests} fast tests, {agree} agree with the full search"), disagreements[:10]


SCALING_SHAPES = [(32, 32), (45, 45), (64, 64), (90, 91)]  # n ~ 1k, 2k, 4k, 8k, both sides scaled


def test_7_scaling():
    is_valid(grid_rep(4, 4))  # compile
    is_valid(grid_rep(32, 32))
    times = []
    for r, s in SCALING_SHAPES:
        rep = grid_rep(r, s)
        best = float("inf")
        for _ in range(5):
            t0 = time.process_time()
            assert is_valid(rep).valid
            best = min(best, time.process_time() - t0)
        times.append(best)
    sizes = [r * s for r, s in SCALING_SHAPES]
    # growth per exact doubling of n
    ratios = [(b / a) ** (1 / math.log2(m / n)) for a, b, n, m in zip(times, times[1:], sizes, sizes[1:])]
    ok = max(ratios) <= 5 and times[-1] < 60
    detail = ", ".join(f"n={n}: {t:.2f}s" for n, t in zip(sizes, times))
    assert report(7, ok, f"{detail}; ratios per doubling {[round(x, 2) for x in ratios]}")


def test_8_size_bound():
    sizes_in, sizes_out = [], []
    for rep, res in zip(corpus(), verdicts()):
        if not res.valid:
            continue
        rect = rectangulate(rep).rep
        sizes_in.append(rep.graph.num_vertices + rep.graph.num_darts // 2)
        sizes_out.append(rect.graph.num_vertices + rect.graph.num_darts // 2)
    ratio = max(o / i for i, o in zip(sizes_in, sizes_out))
    slope = float(np.polyfit(sizes_in, sizes_out, 1)[0])
    assert report(8, ratio <= 50, f"max output/input size {ratio:.2f}, fitted slope {slope:.2f}")
