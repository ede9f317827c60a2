"""k-uniform hypergraphs with tight-cycle detection and exact independence search.

Vertices are the integers ``0..n-1``.  Edges are stored as ascending
k-tuples, so any permutation of the same k vertices produces the identical
stored edge.  Vertex sets are plain ascending tuples of ints throughout.

A tight cycle on ``s >= k`` cyclically ordered vertices has one edge per
window of ``k`` consecutive vertices.  For ``s == k`` the windows collapse
to a single k-set, so "contains a tight cycle of length k" degenerates to
plain edge existence; this module implements that reading.

The text format understood by :func:`from_text` / :func:`to_text`:
optional ``#`` comment lines, then a ``k n`` header line, then one edge
per line as k ascending space-separated 0-based vertex ids.  Writers emit
edges in lexicographic order; readers reject malformed lines with
line-numbered errors.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

_KERNEL_CAP = 64  # bit-packed fast paths cover k=3 instances up to this n


class Hypergraph:
    """Immutable k-uniform hypergraph on vertex set range(n)."""

    __slots__ = ("k", "n", "edges", "_edge_set", "_completions_cache", "_link_cache")

    def __init__(self, k: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if k < 2:
            raise ValueError(f"uniformity must be at least 2, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = set()
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != k or len(set(e)) != k:
                raise ValueError(f"edge {tuple(raw)} does not have {k} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside [0, {n})")
            normalized.add(e)
        self.k = k
        self.n = n
        self.edges = tuple(sorted(normalized))
        self._edge_set = frozenset(self.edges)
        self._completions_cache = None
        self._link_cache = None

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self._edge_set) == (other.k, other.n, other._edge_set)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, edges={len(self.edges)})"

    def has_edge(self, *vertices: int) -> bool:
        return tuple(sorted(vertices)) in self._edge_set

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def completions(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Map each (k-1)-subset of an edge to the vertices completing it."""
        if self._completions_cache is None:
            comp: dict[tuple[int, ...], list[int]] = {}
            for e in self.edges:
                for i in range(self.k):
                    rest = e[:i] + e[i + 1:]
                    comp.setdefault(rest, []).append(e[i])
            self._completions_cache = {key: tuple(vals) for key, vals in comp.items()}
        return self._completions_cache

    def link_masks(self) -> dict[tuple[int, int], int]:
        """For 3-graphs: symmetric map (u, v) -> bitmask of w with {u,v,w} an edge."""
        if self.k != 3:
            raise ValueError("link masks are defined for 3-graphs only")
        if self._link_cache is None:
            link: dict[tuple[int, int], int] = {}
            for a, b, c in self.edges:
                link[a, b] = link.get((a, b), 0) | (1 << c)
                link[a, c] = link.get((a, c), 0) | (1 << b)
                link[b, c] = link.get((b, c), 0) | (1 << a)
            for (u, v), mask in list(link.items()):
                link[v, u] = mask
            self._link_cache = link
        return self._link_cache


def complete(k: int, n: int) -> Hypergraph:
    """The complete k-graph on n vertices: all C(n, k) possible edges."""
    return Hypergraph(k, n, itertools.combinations(range(n), k))


def tight_cycle(k: int, s: int) -> Hypergraph:
    """The tight cycle on s vertices: the s cyclic windows of k consecutive residues.

    For s == k all windows coincide and the result is a single edge.
    """
    if s < k:
        raise ValueError(f"cycle length {s} is below the uniformity {k}")
    windows = (tuple((i + j) % s for j in range(k)) for i in range(s))
    return Hypergraph(k, s, windows)


def find_tight_cycle(H: Hypergraph, s: int) -> Optional[tuple[int, ...]]:
    """Search for a tight cycle witness: s distinct vertices, cyclically ordered.

    Returns the witness with the cycle's minimum vertex first, or None.
    Exact backtracking: the anchor is fixed as the minimum vertex of the
    cycle, killing rotational duplicates, and candidates are pruned through
    the (k-1)-subset completion table.
    """
    k = H.k
    if s < k:
        raise ValueError(f"cycle length {s} is below the uniformity {k}")
    if s > H.n:
        return None
    if s == k:
        return H.edges[0] if H.edges else None
    hits = _scan_cycles(H, {s})
    return hits.get(s)


def contains_tight_cycle(H: Hypergraph, s: int) -> bool:
    """True iff H contains a tight cycle on s distinct vertices."""
    k = H.k
    if s < k:
        raise ValueError(f"cycle length {s} is below the uniformity {k}")
    if s > H.n:
        return False
    if s == k:
        return bool(H.edges)
    if k == 3 and H.n <= _KERNEL_CAP:
        from . import kernels

        if kernels.AVAILABLE:
            return s in kernels.cycle_scan3(H, {s})
    return s in _scan_cycles(H, {s})


def cycle_spectrum(H: Hypergraph, s_max: int) -> set[int]:
    """All tight-cycle lengths present in H up to s_max.

    The scanned range is s in [k+1, s_max] together with s = k under the
    edge-existence reading, except that for 3-graphs the range starts at
    s = 4.  Lengths beyond n cannot occur and are skipped.
    """
    k = H.k
    cap = min(s_max, H.n)
    found: set[int] = set()
    if k != 3 and k <= cap and H.edges:
        found.add(k)
    targets = set(range(k + 1, cap + 1))
    if not targets:
        return found
    if k == 3 and H.n <= _KERNEL_CAP:
        from . import kernels

        if kernels.AVAILABLE:
            return found | kernels.cycle_scan3(H, targets)
    return found | set(_scan_cycles(H, targets))


def _scan_cycles(H: Hypergraph, targets: set[int]) -> dict[int, tuple[int, ...]]:
    """One backtracking sweep over tight paths, reporting a witness per length.

    ``targets`` must all lie in [k+1, n].  Paths grow from an anchored
    first window (the anchor is the path's and cycle's minimum vertex);
    a path of length s closes into a cycle when its k-1 wraparound
    windows are all edges.
    """
    k, n = H.k, H.n
    found: dict[int, tuple[int, ...]] = {}
    if not targets:
        return found
    s_max = max(targets)
    comp = H.completions()
    edge_set = H._edge_set
    path = [0] * s_max

    def extend(depth: int, visited: int, anchor: int) -> bool:
        """Grow the tight path; returns True once every target is witnessed."""
        if depth in targets and depth not in found:
            ok = True
            for i in range(depth - k + 1, depth):
                window = tuple(sorted(path[i:depth] + path[: k - depth + i]))
                if window not in edge_set:
                    ok = False
                    break
            if ok:
                found[depth] = tuple(path[:depth])
                if len(found) == len(targets):
                    return True
        if depth == s_max:
            return False
        suffix = tuple(sorted(path[depth - k + 1: depth]))
        for w in comp.get(suffix, ()):
            if w > anchor and not (visited >> w) & 1:
                path[depth] = w
                if extend(depth + 1, visited | (1 << w), anchor):
                    return True
        return False

    for first_window in H.edges:
        anchor = first_window[0]
        rest = first_window[1:]
        for perm in itertools.permutations(rest):
            path[0] = anchor
            path[1: k] = perm
            visited = (1 << anchor) | sum(1 << v for v in perm)
            if extend(k, visited, anchor):
                return found
    return found


def is_independent(H: Hypergraph, vertices: Iterable[int]) -> bool:
    """True iff no edge of H lies entirely inside the given vertex set."""
    S = set(vertices)
    for v in S:
        if not 0 <= v < H.n:
            raise ValueError(f"vertex {v} outside [0, {H.n})")
    if len(S) < H.k:
        return True
    return not any(S.issuperset(e) for e in H.edges)


def independence_greedy(H: Hypergraph) -> tuple[int, ...]:
    """Greedy independent set: scan vertices in ascending order, skip any
    vertex that would complete an edge inside the chosen set."""
    chosen: set[int] = set()
    incident: dict[int, list[tuple[int, ...]]] = {v: [] for v in range(H.n)}
    for e in H.edges:
        for v in e:
            incident[v].append(e)
    for v in range(H.n):
        if any(all(u in chosen for u in e if u != v) for e in incident[v]):
            continue
        chosen.add(v)
    return tuple(sorted(chosen))


def independence_number_exact(H: Hypergraph, cap: int = 64) -> int:
    """Exact maximum independent set size via branch and bound.

    Branches on vertices in order of decreasing degree; prunes with the
    remaining-vertex bound chosen + |pool| <= best.  Instances above
    ``cap`` vertices are refused since the search is worst-case
    exponential.
    """
    if H.n > cap:
        raise ValueError(f"instance too large: n={H.n} exceeds the cap {cap}")
    if H.n == 0:
        return 0
    if H.k == 3 and H.n <= _KERNEL_CAP:
        return _alpha3_bitmask(H)
    return _alpha_generic(H)


def _degree_order(H: Hypergraph) -> list[int]:
    deg = H.degrees()
    return sorted(range(H.n), key=lambda v: (-deg[v], v))


def _alpha3_bitmask(H: Hypergraph) -> int:
    """3-graph branch and bound over bit-packed vertex sets (n <= 64)."""
    n = H.n
    order = _degree_order(H)
    rank = {v: i for i, v in enumerate(order)}
    # link in relabeled coordinates: link[u][v] = mask of w blocking with pair (u, v)
    link = [[0] * n for _ in range(n)]
    for e in H.edges:
        a, b, c = (rank[v] for v in e)
        link[a][b] |= 1 << c
        link[b][a] |= 1 << c
        link[a][c] |= 1 << b
        link[c][a] |= 1 << b
        link[b][c] |= 1 << a
        link[c][b] |= 1 << a

    from . import kernels

    if kernels.AVAILABLE:
        return kernels.alpha3(link, n, len(independence_greedy(H)))

    best = len(independence_greedy(H))
    chosen: list[int] = []

    def rec(pool: int) -> None:
        nonlocal best
        depth = len(chosen)
        if depth + pool.bit_count() <= best:
            return
        if pool == 0:
            best = depth
            return
        v = (pool & -pool).bit_length() - 1
        rest = pool & ~(1 << v)
        blocked = 0
        row = link[v]
        for u in chosen:
            blocked |= row[u]
        chosen.append(v)
        rec(rest & ~blocked)
        chosen.pop()
        rec(rest)

    rec((1 << n) - 1)
    return best


def _alpha_generic(H: Hypergraph) -> int:
    """Branch and bound for arbitrary uniformity, set-based."""
    order = _degree_order(H)
    edges = [frozenset(e) for e in H.edges]
    incident: dict[int, list[int]] = {v: [] for v in range(H.n)}
    for i, e in enumerate(edges):
        for v in e:
            incident[v].append(i)
    best = len(independence_greedy(H))
    chosen: set[int] = set()

    def blocked_now(v: int) -> bool:
        return any(edges[i] <= chosen | {v} for i in incident[v])

    def rec(pool: list[int]) -> None:
        nonlocal best
        if len(chosen) + len(pool) <= best:
            return
        if not pool:
            best = len(chosen)
            return
        v, rest = pool[0], pool[1:]
        if not blocked_now(v):
            chosen.add(v)
            rec([w for w in rest if not blocked_now(w)])
            chosen.remove(v)
        rec(rest)

    rec(order)
    return best


# ---------------------------------------------------------------------------
# text format


def to_text(H: Hypergraph) -> str:
    lines = [f"{H.k} {H.n}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    k = n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {line!r}") from None
        if k is None:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: header must be 'k n', got {line!r}")
            k, n = values
            if k < 2 or n < 0:
                raise ValueError(f"line {lineno}: invalid header k={k} n={n}")
            continue
        if len(values) != k:
            raise ValueError(f"line {lineno}: expected {k} vertices, got {len(values)}")
        if any(values[i] >= values[i + 1] for i in range(k - 1)):
            raise ValueError(f"line {lineno}: vertices not strictly ascending")
        if values[0] < 0 or values[-1] >= n:
            raise ValueError(f"line {lineno}: vertex outside [0, {n})")
        e = tuple(values)
        if e in seen:
            raise ValueError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if k is None:
        raise ValueError("missing 'k n' header line")
    return Hypergraph(k, n, edges)


def save(H: Hypergraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(to_text(H))


def load(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())
