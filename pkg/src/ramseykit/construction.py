"""Seeded random constructions whose cycle spectrum is forced modulo k.

The pipeline: sample a random (k-1)-uniform source graph with edge
probability 1/2, then lift it to a k-graph by an asymmetric local rule
that reads the natural integer order on vertices.  For k = 3 the rule is

    {i, j, k} with i < j < k is an edge  iff  ij and ik are present
    and jk is absent in the source graph,

and in general the (k-1)-subset omitting the minimum vertex must be
absent while every other (k-1)-subset is present.  A short parity
argument shows any tight cycle in the lifted graph has length divisible
by k, for every source graph, which the spectrum report certifies
empirically.

Also here: greedy partial Steiner triple packings, the union-bound
threshold for the clique side, and the seeded independence-number
experiment.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .hypergraph import Hypergraph, contains_tight_cycle, independence_number_exact
from .rng import SplitMix64, check_seed, derive_seed

# A pair graph is just a role-named hypergraph of the source uniformity.
PairGraph = Hypergraph


def sample_graph(order: int, n: int, seed: int) -> PairGraph:
    """Random order-uniform graph: each candidate edge kept with probability 1/2.

    Candidates are enumerated in lexicographic order and consume one fair
    bit each (bit 1 = keep) from the documented 64-bit generator, so the
    same (order, n, seed) gives a bit-identical graph on any platform.
    """
    if not 2 <= order:
        raise ValueError(f"order must be at least 2, got {order}")
    if order > n and n > 0:
        raise ValueError(f"order {order} exceeds vertex count {n}")
    check_seed(seed)
    rng = SplitMix64(seed)
    edges = [e for e in itertools.combinations(range(n), order) if rng.next_bit()]
    return Hypergraph(order, n, edges)


def adjacency_masks(G: PairGraph) -> list[int]:
    """Bitmask neighborhoods of a pair graph (order 2)."""
    if G.k != 2:
        raise ValueError(f"adjacency masks need order 2, got {G.k}")
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def build_h3(G: PairGraph) -> Hypergraph:
    """Lift a pair graph to the 3-graph of the asymmetric rule.

    For i < j < k the triple is an edge iff ij and ik are present and jk
    is absent.
    """
    if G.k != 2:
        raise ValueError(f"source graph must have order 2, got {G.k}")
    n = G.n
    adj = adjacency_masks(G)
    full = (1 << n) - 1
    edges = []
    for i in range(n):
        up_i = adj[i] & (full << (i + 1)) if i + 1 < n else 0
        m = up_i
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            cand = up_i & (full << (j + 1)) & ~adj[j]
            while cand:
                k = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                edges.append((i, j, k))
    return Hypergraph(3, n, edges)


def build_hk(G: PairGraph, k: int) -> Hypergraph:
    """Lift a (k-1)-graph to the k-graph of the general asymmetric rule.

    e = {i1 < ... < ik} is an edge iff the (k-1)-subset omitting the
    minimum vertex i1 is absent from the source and every other
    (k-1)-subset is present.  Specializes to build_h3 at k = 3.
    """
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if G.k != k - 1:
        raise ValueError(f"source order {G.k} does not match k-1 = {k - 1}")
    n = G.n
    present = G._edge_set
    edges = []
    # Enumerate by the forced-absent subset: it omits the minimum vertex.
    for tail in itertools.combinations(range(n), k - 1):
        if tail in present:
            continue
        for i1 in range(tail[0]):
            if all(
                tuple(sorted((i1,) + tail[:a] + tail[a + 1:])) in present
                for a in range(k - 1)
            ):
                edges.append((i1,) + tail)
    return Hypergraph(k, n, edges)


# ---------------------------------------------------------------------------
# spectrum report


@dataclass(frozen=True)
class SpectrumReport:
    """Per-length cycle presence for a lifted k-graph, with a verdict.

    verdict is PASS iff no tight cycle of length s with s not divisible
    by k was found among the scanned lengths.
    """

    k: int
    n: int
    s_max: int
    found: dict[int, bool] = field(compare=False)
    verdict: str = "PASS"

    @property
    def offending(self) -> tuple[int, ...]:
        return tuple(s for s, hit in sorted(self.found.items()) if hit and s % self.k != 0)

    def to_csv(self) -> str:
        lines = ["s,cycle_found"]
        for s in sorted(self.found):
            lines.append(f"{s},{'true' if self.found[s] else 'false'}")
        return "\n".join(lines) + "\n"


def mod_spectrum_report(H: Hypergraph, s_max: int) -> SpectrumReport:
    """Scan all cycle lengths up to s_max and judge the mod-k invariant."""
    from .hypergraph import cycle_spectrum

    k = H.k
    cap = min(s_max, H.n)
    lo = 4 if k == 3 else k
    spectrum = cycle_spectrum(H, cap)
    found = {s: (s in spectrum) for s in range(lo, cap + 1)}
    verdict = "PASS" if all(s % k == 0 or not hit for s, hit in found.items()) else "FAIL"
    return SpectrumReport(k=k, n=H.n, s_max=s_max, found=found, verdict=verdict)


# ---------------------------------------------------------------------------
# partial Steiner triple packings


@dataclass(frozen=True)
class TriplePacking:
    """A set of triples over [0, t) in which every pair lies in at most one."""

    t: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for tr in self.triples:
            if len(tr) != 3 or list(tr) != sorted(set(tr)):
                raise ValueError(f"malformed triple {tr}")
            if tr[0] < 0 or tr[2] >= self.t:
                raise ValueError(f"triple {tr} outside [0, {self.t})")
            for pair in itertools.combinations(tr, 2):
                if pair in seen:
                    raise ValueError(f"pair {pair} covered twice")
                seen.add(pair)

    def __len__(self) -> int:
        return len(self.triples)


def greedy_steiner_packing(t: int, seed: int) -> TriplePacking:
    """Randomized greedy triple packing with one improvement sweep.

    All triples are shuffled by the seed and added greedily whenever all
    three pairs are still free.  A single local pass then tries, for each
    chosen triple, to remove it and fit two leftover triples instead;
    profitable swaps are kept.
    """
    if t < 3:
        raise ValueError(f"need at least 3 points, got {t}")
    check_seed(seed)
    rng = SplitMix64(seed)
    pool = list(itertools.combinations(range(t), 3))
    rng.shuffle(pool)

    def pairs(tr):
        return ((tr[0], tr[1]), (tr[0], tr[2]), (tr[1], tr[2]))

    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, tr in enumerate(pool):
        for p in pairs(tr):
            by_pair.setdefault(p, []).append(i)

    # blocked[i] counts used pairs of pool[i]; a triple fits iff 0
    blocked = [0] * len(pool)
    chosen = [False] * len(pool)

    def mark(i: int, delta: int) -> None:
        for p in pairs(pool[i]):
            for j in by_pair[p]:
                blocked[j] += delta

    order: list[int] = []
    for i in range(len(pool)):
        if blocked[i] == 0:
            chosen[i] = True
            order.append(i)
            mark(i, +1)

    for i in order:
        chosen[i] = False
        mark(i, -1)
        # only triples sharing a pair with pool[i] can have come free
        local = sorted({j for p in pairs(pool[i]) for j in by_pair[p] if j != i})
        first = next((j for j in local if not chosen[j] and blocked[j] == 0), None)
        swapped = False
        if first is not None:
            chosen[first] = True
            mark(first, +1)
            second = next(
                (j for j in local if not chosen[j] and blocked[j] == 0), None
            )
            if second is not None:
                chosen[second] = True
                mark(second, +1)
                swapped = True
            else:
                chosen[first] = False
                mark(first, -1)
        if not swapped:
            chosen[i] = True
            mark(i, +1)

    triples = sorted(pool[i] for i in range(len(pool)) if chosen[i])
    return TriplePacking(t=t, triples=tuple(triples))


# ---------------------------------------------------------------------------
# union-bound threshold


def union_bound_threshold(n: int) -> int:
    """Least t >= 3 making the union bound go below 1.

    Evaluates log C(n, t) + (t^2 / 7) * log(7/8) in log space through
    log-gamma, so n up to 10^9 is fine.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    log78 = math.log(7.0 / 8.0)
    t = 3
    while True:
        if t > n:
            return t
        logc = (
            math.lgamma(n + 1) - math.lgamma(t + 1) - math.lgamma(n - t + 1)
        )
        if logc + (t * t / 7.0) * log78 < 0:
            return t
        t += 1


# ---------------------------------------------------------------------------
# independence experiment


@dataclass(frozen=True)
class AlphaRow:
    n: int
    seed: int
    alpha: Optional[int]
    alpha_over_log2n: Optional[float]
    error: Optional[str] = None


ALPHA_CSV_HEADER = "n,seed,alpha,alpha_over_log2n"


def alpha_experiment(
    n_values: Sequence[int],
    seeds_per_n: int,
    base_seed: int,
    cap: int = 64,
    max_threads: int = 1,
) -> list[AlphaRow]:
    """Exact independence numbers of lifted 3-graphs over a seed grid.

    Each (n, seed-index) cell derives its own child seed from the base
    seed, so the row set is identical however cells are scheduled.  Rows
    for n beyond the exact-search cap report an error instead of a value.
    """
    check_seed(base_seed)
    cells = [
        (n, derive_seed(base_seed, n, idx))
        for n in n_values
        for idx in range(seeds_per_n)
    ]

    def run(cell) -> AlphaRow:
        n, child = cell
        if n < 2:
            return AlphaRow(n, child, None, None, error=f"n={n} too small")
        if n > cap:
            return AlphaRow(n, child, None, None, error=f"n={n} exceeds cap {cap}")
        H = build_h3(sample_graph(2, n, child))
        a = independence_number_exact(H, cap=cap)
        return AlphaRow(n, child, a, a / math.log2(n))

    if max_threads > 1:
        with ThreadPoolExecutor(max_workers=max_threads) as pool:
            rows = list(pool.map(run, cells))
    else:
        rows = [run(c) for c in cells]
    return rows


def alpha_rows_to_csv(rows: Sequence[AlphaRow]) -> str:
    lines = [ALPHA_CSV_HEADER]
    for r in rows:
        if r.alpha is None:
            lines.append(f"{r.n},{r.seed},,")
        else:
            lines.append(f"{r.n},{r.seed},{r.alpha},{r.alpha_over_log2n:.6f}")
    return "\n".join(lines) + "\n"
