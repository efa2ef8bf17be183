"""Array kernels for the decreasing-cycle search.

The functions work on flat int32 arrays so numba can compile them; without
numba they run as plain Python.  All per-start bookkeeping uses stamp arrays
so nothing has to be cleared between starts.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    if os.environ.get("ORTHORADIAL_NO_JIT"):
        raise ImportError
    from numba import njit

    jit = njit(cache=True, nogil=True)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    def jit(f):
        return f

    HAVE_NUMBA = False

INT = np.int32  # half the memory traffic of int64; every index and stamp fits

class Arrays:
    """Flat snapshot of a representation (optionally mirrored)."""

    def __init__(self, rep, mirrored: bool = False):
        g = rep.graph
        twin = np.asarray(g.twin, dtype=INT)
        nxt = np.asarray(g.nxt, dtype=INT)
        prv = np.asarray(g.prv, dtype=INT)
        rot = np.asarray(rep.rot, dtype=INT)
        face = np.asarray(g.face, dtype=INT)
        ref = rep.ref
        if mirrored:
            rot = rot[prv]  # angle (d, old prv d) keeps its value
            nxt, prv = prv, nxt
            face = face[twin]
            ref = g.twin[ref]
        self.tail = np.asarray(g.tail, dtype=INT)
        self.twin, self.nxt, self.prv, self.rot, self.face = twin, nxt, prv, rot, face
        self.ref = int(ref)
        self.central = int(rep.central)
        self.outer = int(rep.outer)
        nv = g.num_vertices
        nf = len(g.face_dart)
        self.deg = np.bincount(self.tail, minlength=nv).astype(INT)
        order = np.argsort(face, kind="stable").astype(INT)
        counts = np.bincount(face, minlength=nf)
        self.fstart = np.zeros(nf + 1, dtype=INT)
        np.cumsum(counts, out=self.fstart[1:])
        self.fdarts = order
        self.nv, self.nf, self.nd = nv, nf, len(g.tail)

    def workspace(self) -> "Workspace":
        return Workspace(self.nv, self.nf, self.nd)

    def args(self):
        return (self.tail, self.twin, self.nxt, self.prv, self.rot, self.face, self.deg,
                self.fstart, self.fdarts, self.central, self.outer, self.ref)


class Workspace:
    def __init__(self, nv: int, nf: int, nd: int):
        self.vstamp = np.zeros(nv, dtype=INT)
        self.refd = np.zeros(nv, dtype=INT)
        self.lab = np.zeros(nv, dtype=INT)
        self.it_dart = np.zeros(nv, dtype=INT)
        self.it_left = np.zeros(nv, dtype=INT)
        self.stack = np.zeros(nv + 1, dtype=INT)
        self.cyc = np.zeros(nv + 1, dtype=INT)
        self.dstamp = np.zeros(nd, dtype=INT)
        self.fstamp = np.zeros(nf, dtype=INT)
        self.fqueue = np.zeros(nf + 1, dtype=INT)
        self.pstamp = np.zeros(nv, dtype=INT)
        self.vpos = np.zeros(nv, dtype=INT)
        self.bstamp = np.zeros(nv, dtype=INT)
        self.bparent = np.zeros(nv, dtype=INT)
        self.vqueue = np.zeros(nv + 1, dtype=INT)
        self.counter = np.zeros(1, dtype=INT)

    def args(self):
        return (self.vstamp, self.refd, self.lab, self.it_dart, self.it_left, self.stack, self.cyc,
                self.dstamp, self.fstamp, self.fqueue, self.pstamp, self.vpos, self.bstamp,
                self.bparent, self.vqueue, self.counter)


@jit
def turn(a, b, twin, nxt, rot):
    """rot(uvw) for consecutive darts a = uv, b = vw."""
    x = twin[a]
    total = 0
    k = 1
    y = x
    while True:
        total += rot[y]
        y = nxt[y]
        k += 1
        if y == b:
            break
    return total - 2 * (k - 2)


@jit
def left_first_dfs(s, tail, twin, nxt, prv, rot, deg, vstamp, refd, lab, it_dart, it_left,
                   stack, cyc, stamp):
    """Filtered left-first DFS from dart s = vw.  Returns the cycle length (0 if v unreached).

    On success ``cyc[0..k-1]`` holds the cycle starting with s, and
    ``lab[head(cyc[i])]`` the search label of ``cyc[i]``.
    """
    v = tail[s]
    w = tail[twin[s]]
    vstamp[w] = stamp
    refd[w] = s
    lab[w] = 0
    it_dart[w] = prv[twin[s]]
    it_left[w] = deg[w]
    top = 0
    stack[0] = w
    found = False
    while top >= 0:
        x = stack[top]
        if it_left[x] == 0:
            top -= 1
            continue
        e = it_dart[x]
        it_dart[x] = prv[e]
        it_left[x] -= 1
        y = tail[twin[e]]
        if vstamp[y] == stamp:
            continue
        le = lab[x] + turn(refd[x], e, twin, nxt, rot)
        if le < 0:
            continue
        vstamp[y] = stamp
        refd[y] = e
        lab[y] = le
        if y == v:
            found = True
            break
        it_dart[y] = prv[twin[e]]
        it_left[y] = deg[y]
        top += 1
        stack[top] = y
    if not found:
        return 0
    k = 0
    x = v
    while x != w:
        e = refd[x]
        cyc[k] = e
        k += 1
        x = tail[e]
    cyc[k] = s
    k += 1
    # reverse into cycle order s, ..., last
    i = 0
    j = k - 1
    while i < j:
        t = cyc[i]
        cyc[i] = cyc[j]
        cyc[j] = t
        i += 1
        j -= 1
    return k


@jit
def verify_decreasing(k, tail, twin, nxt, rot, face, fstart, fdarts, central, outer, ref,
                      lab, cyc, dstamp, fstamp, fqueue, pstamp, vpos, bstamp, bparent, vqueue,
                      stamp):
    """Check a DFS candidate.  Returns 1 if decreasing, 0 otherwise.

    The candidate's search labels are offsets from the true label of cyc[0]
    (the anchor), so the cycle is decreasing iff anchor >= 0 and
    anchor + max offset > 0.
    """
    s = cyc[0]
    last = cyc[k - 1]
    if lab[tail[s]] + turn(last, s, twin, nxt, rot) != 0:
        return 0  # rotation is not 0: not essential
    for i in range(k):
        dstamp[cyc[i]] = stamp
        dstamp[twin[cyc[i]]] = stamp
        pstamp[tail[cyc[i]]] = stamp
        vpos[tail[cyc[i]]] = i
    # faces right of the cycle
    qn = 0
    for i in range(k):
        f = face[cyc[i]]
        if fstamp[f] != stamp:
            fstamp[f] = stamp
            fqueue[qn] = f
            qn += 1
    qi = 0
    while qi < qn:
        f = fqueue[qi]
        qi += 1
        if f == outer:
            return 0
        for j in range(fstart[f], fstart[f + 1]):
            d = fdarts[j]
            if dstamp[d] == stamp:
                continue
            h = face[twin[d]]
            if fstamp[h] != stamp:
                fstamp[h] = stamp
                fqueue[qn] = h
                qn += 1
    if fstamp[central] != stamp:
        return 0
    # exterior BFS from head(ref) to the cycle
    ref_twin = twin[ref]
    start = tail[ref_twin]
    bstamp[start] = stamp
    bparent[start] = -1
    p = -1
    if pstamp[start] == stamp:
        p = start
    vqueue[0] = start
    qn = 1
    qi = 0
    while qi < qn and p < 0:
        x = vqueue[qi]
        qi += 1
        # walk the ccw orbit of x starting from any known dart at x
        if bparent[x] >= 0:
            first = twin[bparent[x]]
        else:
            first = ref_twin
        d = first
        while True:
            if d != ref and d != ref_twin:
                if not (fstamp[face[d]] == stamp and fstamp[face[twin[d]]] == stamp):
                    y = tail[twin[d]]
                    if bstamp[y] != stamp:
                        bstamp[y] = stamp
                        bparent[y] = d
                        if pstamp[y] == stamp:
                            p = y
                            break
                        vqueue[qn] = y
                        qn += 1
            d = nxt[d]
            if d == first:
                break
    if p < 0:
        return 0
    # rotation of ref + bfs path + C[p, v] + s
    total = 0
    nb = 0
    x = p
    while bparent[x] >= 0:
        vqueue[nb] = bparent[x]
        nb += 1
        x = tail[bparent[x]]
    prev = ref
    for i in range(nb - 1, -1, -1):
        total += turn(prev, vqueue[i], twin, nxt, rot)
        prev = vqueue[i]
    i0 = vpos[p]
    if i0 > 0:
        for i in range(i0, k):
            total += turn(prev, cyc[i], twin, nxt, rot)
            prev = cyc[i]
    total += turn(prev, s, twin, nxt, rot)
    anchor = total
    if anchor < 0:
        return 0
    mx = 0
    for i in range(k):
        lv = lab[tail[twin[cyc[i]]]] if i > 0 else 0
        if lv > mx:
            mx = lv
    if anchor + mx > 0:
        return 1
    return 0


@jit
def search(starts, tail, twin, nxt, prv, rot, face, deg, fstart, fdarts, central, outer, ref,
           vstamp, refd, lab, it_dart, it_left, stack, cyc, dstamp, fstamp, fqueue, pstamp,
           vpos, bstamp, bparent, vqueue, counter, best):
    """Run DFS + verification from each start in order.

    Returns the cycle length of the first decreasing witness (left in ``cyc``)
    or 0.  ``best[0]`` is the smallest start dart with a witness found by any
    worker so far; starts beyond it are skipped.
    """
    for idx in range(starts.shape[0]):
        s = starts[idx]
        if best[0] >= 0 and best[0] < s:
            return 0
        counter[0] += 1
        stamp = counter[0]
        k = left_first_dfs(s, tail, twin, nxt, prv, rot, deg, vstamp, refd, lab, it_dart,
                           it_left, stack, cyc, stamp)
        if k == 0:
            continue
        if verify_decreasing(k, tail, twin, nxt, rot, face, fstart, fdarts, central, outer, ref,
                             lab, cyc, dstamp, fstamp, fqueue, pstamp, vpos, bstamp, bparent,
                             vqueue, stamp):
            if best[0] < 0 or s < best[0]:
                best[0] = s
            return k
    return 0
