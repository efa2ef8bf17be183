"""Validity test: search for strictly monotone essential cycles.

Decreasing cycles are found by a filtered left-first DFS from every dart;
increasing cycles by the same search in the mirrored representation.  Every
candidate is verified (rotation 0, center on the right, labels) before it is
reported, and the reported witness is re-checked with :mod:`labeling`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernel as K
from .errors import NotLocallyConsistent, TooLarge
from .labeling import CycleClass, CycleLabeling, centered_right, labels
from .representation import OrthoRadialRep, check_local_consistency

ORACLE_LIMIT = 14


@dataclass
class MonotoneCycleWitness:
    cycle: list[int]
    labeling: CycleLabeling
    kind: CycleClass

    def describe(self, rep: OrthoRadialRep, names: Sequence[str] | None = None) -> list[str]:
        g = rep.graph
        name = (lambda v: str(names[v])) if names is not None else str
        return [f"{name(g.tail[d])} -> {name(g.head(d))} : {lab}"
                for d, lab in zip(self.labeling.cycle, self.labeling.values)]


@dataclass
class ValidityResult:
    valid: bool
    witness: MonotoneCycleWitness | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass
class OracleResult:
    valid: bool
    witnesses: list[CycleLabeling] = field(default_factory=list)
    essential: list[CycleLabeling] = field(default_factory=list)


def _witness(rep: OrthoRadialRep, cycle: list[int], kind: CycleClass) -> MonotoneCycleWitness:
    lab = labels(rep, cycle)
    if lab.klass != kind:
        raise AssertionError(f"search witness classifies as {lab.klass.value}, expected {kind.value}")
    return MonotoneCycleWitness(cycle, lab, kind)


def left_first_dfs(rep: OrthoRadialRep, vw: int) -> list[int] | None:
    """Candidate cycle through ``vw`` found by the filtered left-first DFS, unverified."""
    arr = K.Arrays(rep)
    ws = arr.workspace()
    k = K.left_first_dfs(vw, arr.tail, arr.twin, arr.nxt, arr.prv, arr.rot, arr.deg, ws.vstamp,
                         ws.refd, ws.lab, ws.it_dart, ws.it_left, ws.stack, ws.cyc, 1)
    return [int(x) for x in ws.cyc[:k]] if k else None


def _search(arr: K.Arrays, starts: np.ndarray, jobs: int) -> list[int] | None:
    best = np.full(1, -1, dtype=K.INT)
    if jobs <= 1 or len(starts) < 2 * jobs:
        ws = arr.workspace()
        k = K.search(starts, *arr.args(), *ws.args(), best)
        return [int(x) for x in ws.cyc[:k]] if k else None

    def run(chunk: np.ndarray):
        ws = arr.workspace()
        k = K.search(chunk, *arr.args(), *ws.args(), best)
        return (int(chunk[0]) if k else -1, [int(x) for x in ws.cyc[:k]] if k else None)

    chunks = [starts[i::jobs] for i in range(jobs)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(run, chunks))
    found = [cyc for _, cyc in results if cyc is not None]
    if not found:
        return None
    return min(found, key=lambda c: c[0])


def find_decreasing_cycle(rep: OrthoRadialRep, jobs: int = 1) -> MonotoneCycleWitness | None:
    arr = K.Arrays(rep)
    cyc = _search(arr, np.arange(arr.nd, dtype=K.INT), jobs)
    return _witness(rep, cyc, CycleClass.DECREASING) if cyc else None


def find_increasing_cycle(rep: OrthoRadialRep, jobs: int = 1) -> MonotoneCycleWitness | None:
    arr = K.Arrays(rep, mirrored=True)
    cyc = _search(arr, np.arange(arr.nd, dtype=K.INT), jobs)
    if not cyc:
        return None
    twin = rep.graph.twin
    back = [twin[d] for d in reversed(cyc)]
    return _witness(rep, back, CycleClass.INCREASING)


def fast_decreasing_test(rep: OrthoRadialRep, uz: int) -> MonotoneCycleWitness | None:
    """Single left-first DFS from ``uz`` (search label 0) plus verification."""
    arr = K.Arrays(rep)
    cyc = _search(arr, np.array([uz], dtype=K.INT), 1)
    return _witness(rep, cyc, CycleClass.DECREASING) if cyc else None


def is_valid(rep: OrthoRadialRep, jobs: int = 1) -> ValidityResult:
    report = check_local_consistency(rep)
    if not report.ok:
        raise NotLocallyConsistent(report)
    w = find_decreasing_cycle(rep, jobs) or find_increasing_cycle(rep, jobs)
    return ValidityResult(w is None, w)


# ----------------------------------------------------------------------
# brute-force oracle
# ----------------------------------------------------------------------
def simple_cycles(rep: OrthoRadialRep) -> list[list[int]]:
    """All simple directed cycles as dart lists, each listed once per direction."""
    g = rep.graph
    n = g.num_vertices
    out: list[list[int]] = []
    for s in range(n):
        on_path = [False] * n
        on_path[s] = True
        path: list[int] = []

        def extend(x: int) -> None:
            for d in g.darts_at(x):
                w = g.head(d)
                if path and d == g.twin[path[-1]]:
                    continue
                if w == s:
                    out.append(path + [d])
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(d)
                    extend(w)
                    path.pop()
                    on_path[w] = False

        extend(s)
    return out


def oracle_validity(rep: OrthoRadialRep, limit: int = ORACLE_LIMIT) -> OracleResult:
    """Enumerate every simple essential cycle and report the strictly monotone ones."""
    if rep.graph.num_vertices > limit:
        raise TooLarge(f"{rep.graph.num_vertices} vertices exceed the oracle limit {limit}")
    res = OracleResult(True)
    for c in simple_cycles(rep):
        if not centered_right(rep, c, check=False):
            continue
        lab = labels(rep, c)
        res.essential.append(lab)
        if lab.klass.strictly_monotone:
            res.witnesses.append(lab)
    res.valid = not res.witnesses
    return res
