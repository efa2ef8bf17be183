"""Labels of essential cycles and their classification.

An essential cycle is handled as a directed simple cycle with the central
face on its right.  The label of an edge e on C is
``rot(e* + P + e)`` for a path P from the head of the reference edge e* to
the tail of e that stays outside C.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import NoPathInExterior, NotEssential
from .plane_graph import check_cycle, interior_faces, split_closed_walk
from .representation import OrthoRadialRep, rot_path


class CycleClass(str, Enum):
    HORIZONTAL = "horizontal"
    DECREASING = "decreasing"
    INCREASING = "increasing"
    NON_MONOTONE = "non-monotone"
    MONOTONE_NONSTRICT = "monotone-nonstrict"

    @property
    def strictly_monotone(self) -> bool:
        return self in (CycleClass.DECREASING, CycleClass.INCREASING)


@dataclass
class CycleLabeling:
    cycle: list[int]
    values: list[int]
    klass: CycleClass

    def label(self, d: int) -> int:
        return self.values[self.cycle.index(d)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.cycle, self.values))


def classify(values: Sequence[int]) -> CycleClass:
    lo, hi = min(values), max(values)
    if lo == 0 and hi == 0:
        return CycleClass.HORIZONTAL
    if lo >= 0:
        return CycleClass.DECREASING
    if hi <= 0:
        return CycleClass.INCREASING
    return CycleClass.NON_MONOTONE


def centered_right(rep: OrthoRadialRep, cycle: Sequence[int], check: bool = True) -> bool:
    """True iff the cycle is essential and directed with the center on its right."""
    right = interior_faces(rep.graph, cycle, check=check)
    return rep.central in right and rep.outer not in right


def is_essential(rep: OrthoRadialRep, cycle: Sequence[int]) -> bool:
    """Whether the central face lies in the interior of a simple cycle.

    The interior is the side without the outer face, so this does not depend
    on the direction in which the cycle is given.
    """
    right = interior_faces(rep.graph, cycle)
    if rep.outer in right:
        return rep.central not in right
    return rep.central in right


def _essential_piece(rep: OrthoRadialRep, walk: Sequence[int], reverse: bool) -> list[int]:
    g = rep.graph
    found = []
    for piece in split_closed_walk(g, walk):
        if reverse:
            piece = [g.twin[d] for d in reversed(piece)]
        if centered_right(rep, piece, check=False):
            found.append(piece)
    if len(found) != 1:
        raise NotEssential(f"expected one essential cycle on the face boundary, found {len(found)}")
    return found[0]


def outer_cycle(rep: OrthoRadialRep) -> list[int]:
    """The essential cycle all of whose edges bound the outer face, starting at e*."""
    c = _essential_piece(rep, rep.graph.face_walk(rep.outer), reverse=True)
    if rep.ref in c:
        i = c.index(rep.ref)
        c = c[i:] + c[:i]
    return c


def central_cycle(rep: OrthoRadialRep) -> list[int]:
    """The essential cycle all of whose edges bound the central face, in walk order."""
    return _essential_piece(rep, rep.graph.face_walk(rep.central), reverse=False)


def reference_path(rep: OrthoRadialRep, cycle: Sequence[int], e: int) -> list[int]:
    """Path from the head of e* to the tail of ``e`` in the exterior of ``cycle``."""
    g = rep.graph
    cycle = list(cycle)
    if e not in cycle:
        raise NotEssential(f"dart {e} is not on the cycle")
    inner = interior_faces(g, cycle)
    on_c = {g.tail[d]: i for i, d in enumerate(cycle)}
    ref_edge = g.edge_id(rep.ref)
    start = g.head(rep.ref)
    parent = {start: -1}
    queue = deque([start])
    p = start if start in on_c else None
    while queue and p is None:
        v = queue.popleft()
        for d in g.darts_at(v):
            if g.edge_id(d) == ref_edge:
                continue
            if g.face[d] in inner and g.face[g.twin[d]] in inner:
                continue
            w = g.head(d)
            if w in parent:
                continue
            parent[w] = d
            if w in on_c:
                p = w
                break
            queue.append(w)
    if p is None:
        raise NoPathInExterior("no exterior path from the reference edge to the cycle")
    head: list[int] = []
    x = p
    while parent[x] != -1:
        head.append(parent[x])
        x = g.tail[parent[x]]
    head.reverse()
    i, j = on_c[p], cycle.index(e)
    tail = cycle[i:j] if i <= j else cycle[i:] + cycle[:j]
    return head + tail


def labels(rep: OrthoRadialRep, cycle: Sequence[int]) -> CycleLabeling:
    cycle = list(cycle)
    check_cycle(rep.graph, cycle)
    if not centered_right(rep, cycle, check=False):
        raise NotEssential("cycle is not essential with the center on its right")
    e0 = cycle[0]
    anchor = rot_path(rep, [rep.ref, *reference_path(rep, cycle, e0), e0])
    values = [anchor]
    for a, b in zip(cycle, cycle[1:]):
        values.append(values[-1] + rot_path(rep, [a, b]))
    return CycleLabeling(cycle, values, classify(values))
