"""Brute-force reference implementations used only by the tests.

Everything here is written for clarity over speed and is only ever run
on instances small enough to enumerate outright.
"""

from __future__ import annotations

import itertools

from ramseykit.hypergraph import Hypergraph
from ramseykit.rng import SplitMix64


def random_hypergraph(k: int, n: int, seed: int, eighths: int = 4) -> Hypergraph:
    """Each k-subset kept with probability eighths/8."""
    rng = SplitMix64(seed)
    edges = [
        e for e in itertools.combinations(range(n), k) if rng.next_below(8) < eighths
    ]
    return Hypergraph(k, n, edges)


def brute_has_tight_cycle(H: Hypergraph, s: int) -> bool:
    """Try every arrangement of every s-subset as a cyclic vertex order."""
    k = H.k
    if s < k or s > H.n:
        return False
    if s == k:
        return bool(H.edges)
    for subset in itertools.combinations(range(H.n), s):
        for perm in itertools.permutations(subset):
            ok = True
            for i in range(s):
                window = tuple(sorted(perm[(i + j) % s] for j in range(k)))
                if not H.has_edge(*window):
                    ok = False
                    break
            if ok:
                return True
    return False


def brute_spectrum(H: Hypergraph, s_max: int) -> set[int]:
    lo = 4 if H.k == 3 else H.k
    out = set()
    for s in range(lo, min(s_max, H.n) + 1):
        if brute_has_tight_cycle(H, s):
            out.add(s)
    return out


def brute_alpha(H: Hypergraph) -> int:
    for size in range(H.n, 0, -1):
        for subset in itertools.combinations(range(H.n), size):
            chosen = set(subset)
            if not any(set(e) <= chosen for e in H.edges):
                return size
    return 0


def brute_homomorphism(F: Hypergraph, G: Hypergraph):
    """Exhaust all vertex maps, demanding injectivity on every edge."""
    if F.n == 0:
        return ()
    for phi in itertools.product(range(G.n), repeat=F.n):
        ok = True
        for e in F.edges:
            image = tuple(sorted(phi[v] for v in e))
            if len(set(image)) != len(image) or not G.has_edge(*image):
                ok = False
                break
        if ok:
            return phi
    return None


def brute_ideals(P) -> list[int]:
    """All down-closed subsets as bitmasks, ascending."""
    out = []
    for mask in range(1 << P.p):
        closed = True
        for x in range(P.p):
            if mask >> x & 1 and P.down[x] & ~mask:
                closed = False
                break
        if closed:
            out.append(mask)
    return out


def brute_width(P) -> int:
    for size in range(P.p, 0, -1):
        for subset in itertools.combinations(range(P.p), size):
            if all(
                not P.less(a, b) and not P.less(b, a)
                for a, b in itertools.combinations(subset, 2)
            ):
                return size
    return 0
