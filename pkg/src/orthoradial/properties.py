"""Checkers for structural facts about labels, used by tests and scripts.

Each checker returns a list of violations (empty when the fact holds).
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import CentralFaceStrictlyMonotone
from .labeling import CycleClass, CycleLabeling, centered_right, labels
from .plane_graph import interior_faces, reverse_path
from .representation import OrthoRadialRep, flip, mirror, rot_cycle, rot_path
from .validity import simple_cycles


def essential_labelings(rep: OrthoRadialRep) -> list[CycleLabeling]:
    return [labels(rep, c) for c in simple_cycles(rep) if centered_right(rep, c, check=False)]


def label_difference_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    """l(e') - l(e) = rot(C[e, e']) for every pair of edges on every cycle."""
    bad = []
    for lab in labs:
        c, k = lab.cycle, len(lab.cycle)
        for i in range(k):
            for j in range(k):
                seg = c[i:j + 1] if i <= j else c[i:] + c[:j + 1]
                if lab.values[j] - lab.values[i] != rot_path(rep, seg):
                    bad.append((tuple(c), c[i], c[j]))
    return bad


def mirror_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    m = mirror(rep)
    g = rep.graph
    bad = []
    for lab in labs:
        other = labels(m, reverse_path(g, lab.cycle)).as_dict()
        if any(other[g.twin[d]] != -x for d, x in zip(lab.cycle, lab.values)):
            bad.append(tuple(lab.cycle))
    return bad


def flip_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    try:
        fl = flip(rep)
    except CentralFaceStrictlyMonotone:
        return []
    g = rep.graph
    bad = []
    for lab in labs:
        other = labels(fl, reverse_path(g, lab.cycle)).as_dict()
        if any(other[g.twin[d]] != x for d, x in zip(lab.cycle, lab.values)):
            bad.append(tuple(lab.cycle))
    return bad


def central_region(rep: OrthoRadialRep, darts: set[int]) -> set[int]:
    """Faces of G that form the central face of the subgraph with the given edges."""
    g = rep.graph
    blocked = darts | {g.twin[d] for d in darts}
    seen = {rep.central}
    stack = [rep.central]
    while stack:
        f = stack.pop()
        for d in g.face_walk(f):
            if d in blocked:
                continue
            h = g.face[g.twin[d]]
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return seen


def shared_central_label_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    """Edges on both cycles and on the central face of their union have equal labels."""
    g = rep.graph
    bad = []
    for a, b in combinations(labs, 2):
        la, lb = a.as_dict(), b.as_dict()
        shared = set(la) & set(lb)
        if not shared:
            continue
        region = central_region(rep, set(la) | set(lb))
        for d in shared:
            if (g.face[d] in region or g.face[g.twin[d]] in region) and la[d] != lb[d]:
                bad.append((tuple(a.cycle), tuple(b.cycle), d))
    return bad


def _vertices(rep: OrthoRadialRep, lab: CycleLabeling) -> set[int]:
    return {rep.graph.tail[d] for d in lab.cycle}


def horizontal_sharing_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    """A horizontal and a strictly monotone cycle never share a vertex."""
    hor = [x for x in labs if x.klass == CycleClass.HORIZONTAL]
    mono = [x for x in labs if x.klass.strictly_monotone]
    return [(tuple(h.cycle), tuple(m.cycle)) for h in hor for m in mono
            if _vertices(rep, h) & _vertices(rep, m)]


def inc_dec_sharing_violations(rep: OrthoRadialRep, labs: Sequence[CycleLabeling]) -> list:
    """An increasing and a decreasing cycle are vertex-disjoint."""
    inc = [x for x in labs if x.klass == CycleClass.INCREASING]
    dec = [x for x in labs if x.klass == CycleClass.DECREASING]
    return [(tuple(i.cycle), tuple(d.cycle)) for i in inc for d in dec
            if _vertices(rep, i) & _vertices(rep, d)]


def rotation_constant_violations(rep: OrthoRadialRep) -> list:
    """Simple cycles: rotation 0 if essential, 4 if not.

    Non-essential cycles are counted with their interior on the right; the
    opposite orientation must give -4.
    """
    g = rep.graph
    bad = []
    for c in simple_cycles(rep):
        right = interior_faces(g, c, check=False)
        if (rep.central in right) != (rep.outer in right):
            want = 0
        elif rep.outer not in right:
            want = 4
        else:
            want = -4
        if rot_cycle(rep, c) != want:
            bad.append((tuple(c), rot_cycle(rep, c), want))
    return bad
