"""Bit-packed compiled kernels for the hot searches on 3-graphs with n <= 64.

Both kernels work on a dense link matrix: ``link[u, v]`` is the 64-bit mask
of vertices w such that {u, v, w} is an edge.  The surrounding package
falls back to the pure-Python equivalents when numba is unavailable, and
the test suite pins the two paths against each other.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    AVAILABLE = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(fn):
            return fn

        return wrap


_U1 = np.uint64(1)
_U0 = np.uint64(0)


@njit(cache=True, inline="always")
def _ctz(m):
    """Index of the lowest set bit; m must be nonzero."""
    v = 0
    if m & np.uint64(0xFFFFFFFF) == np.uint64(0):
        v += 32
        m >>= np.uint64(32)
    if m & np.uint64(0xFFFF) == np.uint64(0):
        v += 16
        m >>= np.uint64(16)
    if m & np.uint64(0xFF) == np.uint64(0):
        v += 8
        m >>= np.uint64(8)
    if m & np.uint64(0xF) == np.uint64(0):
        v += 4
        m >>= np.uint64(4)
    if m & np.uint64(0x3) == np.uint64(0):
        v += 2
        m >>= np.uint64(2)
    if m & np.uint64(0x1) == np.uint64(0):
        v += 1
    return v


@njit(cache=True, inline="always")
def _popcount(m):
    m = m - ((m >> np.uint64(1)) & np.uint64(0x5555555555555555))
    m = (m & np.uint64(0x3333333333333333)) + ((m >> np.uint64(2)) & np.uint64(0x3333333333333333))
    m = (m + (m >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (m * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _scan3_kernel(link, ea, eb, ec, bit, above, s_max, targets, found):
    """Tight-path DFS over all anchored starts; marks every target length hit.

    A path closes into a cycle of its current length when the two
    wraparound windows are edges.  Backtracking state lives in explicit
    per-depth candidate masks.
    """
    remaining = 0
    for s in range(targets.shape[0]):
        if targets[s]:
            remaining += 1
    if remaining == 0:
        return
    path = np.empty(s_max, np.int64)
    cand = np.zeros(s_max + 1, np.uint64)
    for i in range(ea.shape[0]):
        a = ea[i]
        for ori in range(2):
            if ori == 0:
                p1, p2 = eb[i], ec[i]
            else:
                p1, p2 = ec[i], eb[i]
            path[0] = a
            path[1] = p1
            path[2] = p2
            visited = bit[a] | bit[p1] | bit[p2]
            depth = 3
            if depth < s_max:
                cand[3] = link[p1, p2] & ~visited & above[a]
            else:
                cand[3] = np.uint64(0)
            while depth >= 3:
                m = cand[depth]
                if m == np.uint64(0):
                    depth -= 1
                    if depth >= 3:
                        visited &= ~bit[path[depth]]
                    continue
                v = _ctz(m)
                cand[depth] = m & (m - np.uint64(1))
                path[depth] = v
                visited |= bit[v]
                depth += 1
                if depth < targets.shape[0] and targets[depth] and not found[depth]:
                    if (link[path[depth - 2], path[depth - 1]] & bit[path[0]]) != np.uint64(0) and (
                        link[path[depth - 1], path[0]] & bit[path[1]]
                    ) != np.uint64(0):
                        found[depth] = 1
                        remaining -= 1
                        if remaining == 0:
                            return
                if depth < s_max:
                    cand[depth] = link[path[depth - 2], path[depth - 1]] & ~visited & above[a]
                else:
                    cand[depth] = np.uint64(0)


@njit(cache=True)
def _alpha3_kernel(link, n, best0):
    """Branch and bound for the maximum independent set of a 3-graph.

    Frames are (pool, chosen-length, vertex-to-record); including a vertex
    removes everything its pairs with the current chosen set would block.
    """
    best = best0
    chosen = np.empty(n, np.int64)
    cap = 4 * n + 16
    pools = np.empty(cap, np.uint64)
    clens = np.empty(cap, np.int64)
    newvs = np.empty(cap, np.int64)
    full = np.uint64(0xFFFFFFFFFFFFFFFF) >> np.uint64(64 - n)
    pools[0] = full
    clens[0] = 0
    newvs[0] = -1
    top = 1
    while top > 0:
        top -= 1
        pool = pools[top]
        clen = clens[top]
        nv = newvs[top]
        if nv >= 0:
            chosen[clen - 1] = nv
        if clen + np.int64(_popcount(pool)) <= best:
            continue
        if pool == np.uint64(0):
            best = clen
            continue
        v = _ctz(pool)
        rest = pool & (pool - np.uint64(1))
        pools[top] = rest
        clens[top] = clen
        newvs[top] = -1
        top += 1
        blocked = np.uint64(0)
        for i in range(clen):
            blocked |= link[chosen[i], v]
        pools[top] = rest & ~blocked
        clens[top] = clen + 1
        newvs[top] = v
        top += 1
    return best


def _link_matrix(H) -> np.ndarray:
    n = H.n
    link = np.zeros((n, n), np.uint64)
    for a, b, c in H.edges:
        link[a, b] |= _U1 << np.uint64(c)
        link[a, c] |= _U1 << np.uint64(b)
        link[b, c] |= _U1 << np.uint64(a)
    link |= link.T
    return link


def cycle_scan3(H, targets: set[int]) -> set[int]:
    """Tight-cycle lengths from ``targets`` present in the 3-graph H.

    Targets must lie in [4, n]; n must be at most 64.
    """
    if not H.edges or not targets:
        return set()
    n = H.n
    s_max = max(targets)
    link = _link_matrix(H)
    ea = np.array([e[0] for e in H.edges], np.int64)
    eb = np.array([e[1] for e in H.edges], np.int64)
    ec = np.array([e[2] for e in H.edges], np.int64)
    bit = np.array([1 << v for v in range(n)], np.uint64)
    full = (1 << n) - 1
    above = np.array([(full ^ ((1 << (v + 1)) - 1)) & full for v in range(n)], np.uint64)
    tflags = np.zeros(s_max + 1, np.uint8)
    for s in targets:
        tflags[s] = 1
    found = np.zeros(s_max + 1, np.uint8)
    _scan3_kernel(link, ea, eb, ec, bit, above, s_max, tflags, found)
    return {s for s in targets if found[s]}


def alpha3(link_rows: list[list[int]], n: int, best0: int) -> int:
    """Maximum independent set size given per-pair link masks (relabeled)."""
    if n == 0:
        return 0
    link = np.array(link_rows, np.uint64)
    return int(_alpha3_kernel(link, n, best0))
