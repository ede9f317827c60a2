"""Online builder/painter game whose positions live on binary color labels.

The builder exposes vertices one at a time.  Each new vertex walks the
existing vertices in exposure order carrying a growing color label:
whenever it meets a vertex whose frozen label equals its current label,
that edge is exposed, the painter colors it R or B, and the digit is
appended.  The walk ends at the first unoccupied label, which freezes.
Labels therefore occupy a binary trie, and the edge structure is fully
determined by the labels: (u, v) is exposed iff label(u) is a proper
prefix of label(v), colored by the digit of label(v) at position
|label(u)|.

The builder hunts a red K4-minus (four vertices carrying the five red
edges v1v2, v1v3, v1v4, v2v3, v2v4 in exposure order) against a blue
clique on t-1 vertices.  Win detection runs after every single colored
edge and the insertion halts mid-walk on a win, so the resource counts
(vertices used, red edges, total edges) include the winning edge and
nothing after it.

Vertices are numbered from 0 in exposure order everywhere, including
transcripts and witnesses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .rng import SplitMix64, check_seed

RED = "R"
BLUE = "B"


class PainterAborted(Exception):
    """An interactive painter ran out of input."""


class GameAborted(Exception):
    """Game stopped before an outcome; carries partial stats and transcript."""

    def __init__(self, stats, transcript):
        super().__init__("game aborted by painter")
        self.stats = stats
        self.transcript = transcript


class SafetyCapReached(Exception):
    """The game exceeded its vertex cap while still running.

    This would contradict the guaranteed builder win, so it is surfaced
    loudly with the offending state attached.
    """

    def __init__(self, state, transcript):
        super().__init__(
            f"game still running after {len(state.labels)} vertices (cap hit)"
        )
        self.state = state
        self.transcript = transcript


class VerificationError(Exception):
    """Exhaustive search found a branch violating the claimed bounds."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript


@dataclass
class GameState:
    """Mutable single-owner state of one game."""

    t: int
    labels: list[str] = field(default_factory=list)
    edges: list[tuple[int, int, str]] = field(default_factory=list)
    status: str = "Running"
    witness: Optional[tuple[int, ...]] = None
    # earliest vertex index per frozen label; duplicates keep the first
    _by_label: dict[str, int] = field(default_factory=dict)

    @property
    def running(self) -> bool:
        return self.status == "Running"


@dataclass(frozen=True)
class GameStats:
    vertices_used: int
    red_edges: int
    total_edges: int
    outcome: str


# painter: callable (state, u, v) -> "R" | "B"
PainterStrategy = Callable[[GameState, int, int], str]


def edge_color(label_a: str, label_b: str) -> Optional[str]:
    """Color of the exposed edge between two labels, or None if unexposed."""
    if len(label_a) > len(label_b):
        label_a, label_b = label_b, label_a
    if len(label_a) < len(label_b) and label_b.startswith(label_a):
        return label_b[len(label_a)]
    return None


# ---------------------------------------------------------------------------
# win detectors


def detect_red_k4_minus(state: GameState) -> Optional[tuple[int, int, int, int]]:
    """Find four vertices in exposure order red on all pairs but the last.

    Trie form: a vertex u2 whose own label contains an R digit (giving an
    ancestor u1) and whose R-subtree holds at least two later vertices.
    Every candidate is re-verified against the edge colors before being
    returned, so the answer agrees with a brute-force scan.
    """
    labels = state.labels
    for i2, lab2 in enumerate(labels):
        p = lab2.find(RED)
        if p < 0:
            continue
        pref = lab2 + RED
        members = [j for j, l in enumerate(labels) if j != i2 and l.startswith(pref)]
        if len(members) < 2:
            continue
        anc = lab2[:p]
        for i1, l1 in enumerate(labels):
            if l1 == anc and i1 != i2:
                cand = tuple(sorted((i1, i2, members[0], members[1])))
                if _red_witness_ok(labels, cand):
                    return cand
    return None


def _red_witness_ok(labels, quad) -> bool:
    v1, v2, v3, v4 = quad
    need = [(v1, v2), (v1, v3), (v1, v4), (v2, v3), (v2, v4)]
    return all(edge_color(labels[x], labels[y]) == RED for x, y in need)


def detect_red_k4_minus_brute(state: GameState) -> Optional[tuple[int, int, int, int]]:
    """Direct scan over all 4-tuples; the oracle for the trie detector."""
    from itertools import combinations

    labels = state.labels
    for quad in combinations(range(len(labels)), 4):
        if _red_witness_ok(labels, quad):
            return quad
    return None


def detect_blue_clique(state: GameState, q: int) -> Optional[tuple[int, ...]]:
    """Find q vertices pairwise joined by exposed blue edges.

    Trie form: blue cliques are exactly prefix chains descending through
    B digits, so a vertex whose label carries at least q-1 B digits yields
    the clique of its B-ancestors plus itself.
    """
    if q < 1:
        raise ValueError(f"clique size must be positive, got {q}")
    labels = state.labels
    if q == 1:
        return (0,) if labels else None
    for i, lab in enumerate(labels):
        positions = [p for p, d in enumerate(lab) if d == BLUE]
        if len(positions) < q - 1:
            continue
        chain = []
        ok = True
        for p in positions[: q - 1]:
            anc = lab[:p]
            j = next((k for k, l in enumerate(labels) if l == anc and k != i), None)
            if j is None:
                ok = False
                break
            chain.append(j)
        if not ok:
            continue
        cand = tuple(sorted(chain + [i]))
        if len(set(cand)) == q and _blue_witness_ok(labels, cand):
            return cand
    return None


def _blue_witness_ok(labels, vs) -> bool:
    from itertools import combinations

    return all(edge_color(labels[x], labels[y]) == BLUE for x, y in combinations(vs, 2))


def detect_blue_clique_brute(state: GameState, q: int) -> Optional[tuple[int, ...]]:
    """Direct scan over all q-subsets; the oracle for the chain detector."""
    from itertools import combinations

    labels = state.labels
    if q < 1:
        raise ValueError(f"clique size must be positive, got {q}")
    if q == 1:
        return (0,) if labels else None
    for vs in combinations(range(len(labels)), q):
        if _blue_witness_ok(labels, vs):
            return vs
    return None


def _wins_red(new_label: str, frozen: Iterable[str]) -> bool:
    """Incremental red check after an R digit was appended.

    The walker completes a red K4-minus iff some R digit of its label at
    a non-first R position q has the prefix of length q+1 frozen: that
    frozen vertex is the second member of the R-subtree of the ancestor
    at q, whose own label already contains an R.  Equivalent to the full
    detectors whenever detection has run after every earlier edge.
    """
    first = new_label.find(RED)
    q = new_label.find(RED, first + 1)
    frozen_set = frozen if isinstance(frozen, (set, frozenset)) else set(frozen)
    while q >= 0:
        if new_label[: q + 1] in frozen_set:
            return True
        q = new_label.find(RED, q + 1)
    return False


def _wins_blue(new_label: str, t: int) -> bool:
    return new_label.count(BLUE) >= t - 2


# ---------------------------------------------------------------------------
# the walk


def insert_vertex(state: GameState, painter: PainterStrategy) -> list[dict]:
    """Expose one new vertex; returns the event records in order.

    The new vertex walks the trie from the empty label: each time its
    current label is frozen on an earlier vertex, that edge is exposed
    and painted, and the color digit extends the label.  Detection runs
    after every edge; a win freezes the partial label immediately.
    """
    if not state.running:
        raise ValueError(f"cannot insert into a finished game ({state.status})")
    v = len(state.labels)
    state.labels.append("")
    label = ""
    events: list[dict] = []
    while label in state._by_label:
        u = state._by_label[label]
        color = painter(state, u, v)
        if color not in (RED, BLUE):
            raise ValueError(f"painter returned {color!r}, need 'R' or 'B'")
        label += color
        state.labels[v] = label
        state.edges.append((u, v, color))
        events.append({"event": "edge", "u": u, "v": v, "color": color})
        if color == RED and _wins_red(label, state._by_label.keys()):
            state.status = "RedK4Minus"
            state.witness = detect_red_k4_minus(state)
            if state.witness is None:
                raise AssertionError("incremental red win without a witness")
            break
        if color == BLUE and _wins_blue(label, state.t):
            state.status = "BlueClique"
            state.witness = detect_blue_clique(state, state.t - 1)
            if state.witness is None:
                raise AssertionError("incremental blue win without a witness")
            break
    state.labels[v] = label
    if label not in state._by_label:
        state._by_label[label] = v
    events.append({"event": "vertex", "v": v, "label": label})
    if not state.running:
        events.append({"event": "win", "outcome": state.status})
    return events


def game_stats(state: GameState) -> GameStats:
    return GameStats(
        vertices_used=len(state.labels),
        red_edges=sum(1 for _, _, c in state.edges if c == RED),
        total_edges=len(state.edges),
        outcome=state.status,
    )


def run_game(
    t: int, painter: PainterStrategy, safety_cap: int = 10000
) -> tuple[GameStats, list[dict]]:
    """Play until the builder wins; returns exact stats and the transcript.

    Raises SafetyCapReached if the cap is hit while running (which would
    falsify the guaranteed win) and GameAborted if the painter stops
    answering; both carry the partial transcript.
    """
    if t < 3:
        raise ValueError(f"target t must be at least 3, got {t}")
    state = GameState(t=t)
    transcript: list[dict] = []
    step = 0

    def record(ev: dict) -> None:
        nonlocal step
        step += 1
        transcript.append({"step": step, **ev})

    while state.running:
        if len(state.labels) >= safety_cap:
            raise SafetyCapReached(state, transcript)
        try:
            for ev in insert_vertex(state, painter):
                record(ev)
        except PainterAborted:
            record({"event": "vertex", "v": len(state.labels) - 1,
                    "label": state.labels[-1]})
            raise GameAborted(game_stats(state), transcript) from None
    return game_stats(state), transcript


def transcript_to_jsonl(transcript: list[dict]) -> str:
    return "".join(json.dumps(rec) + "\n" for rec in transcript)


# ---------------------------------------------------------------------------
# painters


def all_red() -> PainterStrategy:
    return lambda state, u, v: RED


def all_blue() -> PainterStrategy:
    return lambda state, u, v: BLUE


def random_painter(seed: int, p_red: float = 0.5) -> PainterStrategy:
    """Seeded biased coin: one draw per query, R with probability p_red."""
    check_seed(seed)
    if not 0.0 <= p_red <= 1.0:
        raise ValueError(f"p_red must lie in [0, 1], got {p_red}")
    rng = SplitMix64(seed)

    def painter(state, u, v):
        return RED if rng.next_float() < p_red else BLUE

    return painter


def greedy_saver() -> PainterStrategy:
    """Answers B unless that instantly completes the blue clique, else R."""

    def painter(state, u, v):
        would_be_blues = state.labels[v].count(BLUE) + 1
        if 1 + would_be_blues >= state.t - 1:
            return RED
        return BLUE

    return painter


def scripted_painter(colors: Iterable[str]) -> PainterStrategy:
    """Replays a fixed color sequence; raises PainterAborted when exhausted."""
    queue = list(colors)
    pos = [0]

    def painter(state, u, v):
        if pos[0] >= len(queue):
            raise PainterAborted()
        c = queue[pos[0]]
        pos[0] += 1
        return c

    return painter


def interactive(input_stream=None, output_stream=None) -> PainterStrategy:
    """Reads R/B answers from the input stream, re-prompting on bad lines."""
    import sys

    inp = input_stream if input_stream is not None else sys.stdin
    out = output_stream if output_stream is not None else sys.stdout

    def painter(state, u, v):
        while True:
            out.write(f"edge ({u},{v}) color [R/B]> ")
            out.flush()
            line = inp.readline()
            if line == "":
                raise PainterAborted()
            answer = line.strip().upper()
            if answer in (RED, BLUE):
                return answer
            out.write("please answer R or B\n")

    return painter


# ---------------------------------------------------------------------------
# exhaustive verification


@dataclass(frozen=True)
class VerificationReport:
    """Worst cases over every painter behavior, plus the bound checks."""

    t: int
    branches: int
    max_vertices: int
    max_red: int
    max_edges: int
    vertex_bound: int  # asserted: max_vertices <= this
    red_slack: int  # asserted: red_edges <= 3*vertices + red_slack on every branch
    edge_slack: int  # asserted: total_edges <= (t+1)*vertices + edge_slack

    @property
    def ok(self) -> bool:
        return True  # construction raises instead of returning a bad report


def exhaustive_verify(
    t: int,
    caps: Optional[tuple[int, int]] = None,
    allow_t5: bool = False,
    memoize: Optional[bool] = None,
) -> VerificationReport:
    """Search every painter behavior and certify the builder always wins.

    Depth-first over the painter's binary choice at each exposed edge,
    with the builder playing its fixed walk strategy.  Asserts, on every
    branch, vertices <= 2*C(t,2)+1, red <= 3*vertices+1 and edges <=
    (t+1)*vertices+2, raising VerificationError with a counterexample
    transcript otherwise.  t=3 and t=4 run the raw tree; t=5 needs
    allow_t5 and memoizes on the frozen label set (deltas compose since
    play depends only on that set).
    """
    if t in (3, 4):
        use_memo = bool(memoize)
    elif t == 5:
        if not allow_t5:
            raise ValueError("t=5 search is heavy; pass allow_t5=True to run it")
        use_memo = True if memoize is None else memoize
    else:
        raise ValueError(f"exhaustive verification supports t in {{3,4,5}}, got {t}")

    vertex_bound = 2 * (t * (t - 1) // 2) + 1
    red_slack, edge_slack = 1, 2
    if caps is None:
        caps = (vertex_bound, (t + 1) * vertex_bound + edge_slack)
    cap_vertices, cap_edges = caps

    if use_memo:
        branches, dl, da, dm, rel_a, rel_m = _verify_memo(t, cap_vertices)
    else:
        branches, dl, da, dm, rel_a, rel_m = _verify_raw(t, cap_vertices, cap_edges)

    if dl > vertex_bound:
        raise VerificationError(
            f"t={t}: a branch used {dl} vertices, above the bound {vertex_bound}"
        )
    if rel_a > red_slack:
        raise VerificationError(
            f"t={t}: a branch broke red <= 3*vertices+{red_slack} by {rel_a - red_slack}"
        )
    if rel_m > edge_slack:
        raise VerificationError(
            f"t={t}: a branch broke edges <= (t+1)*vertices+{edge_slack} by {rel_m - edge_slack}"
        )
    return VerificationReport(
        t=t,
        branches=branches,
        max_vertices=dl,
        max_red=da,
        max_edges=dm,
        vertex_bound=vertex_bound,
        red_slack=red_slack,
        edge_slack=edge_slack,
    )


def _verify_raw(t: int, cap_vertices: int, cap_edges: int):
    """Plain DFS; every leaf is a win or the caps raise a counterexample."""
    branches = 0
    max_l = max_a = max_m = 0
    rel_a = rel_m = -(10**9)
    frozen: set[str] = set()
    choice_path: list[str] = []

    def leaf(ell, a, m):
        nonlocal branches, max_l, max_a, max_m, rel_a, rel_m
        branches += 1
        max_l = max(max_l, ell)
        max_a = max(max_a, a)
        max_m = max(max_m, m)
        rel_a = max(rel_a, a - 3 * ell)
        rel_m = max(rel_m, m - (t + 1) * ell)

    def walk(label, ell, a, m):
        # walker is mid-walk at `label`; ell counts it already
        if label not in frozen:
            frozen.add(label)
            if ell >= cap_vertices:
                raise VerificationError(
                    f"t={t}: still running after {ell} vertices",
                    transcript=_replay_choices(t, choice_path),
                )
            walk("", ell + 1, a, m)
            frozen.remove(label)
            return
        if m >= cap_edges:
            raise VerificationError(
                f"t={t}: still running after {m} edges",
                transcript=_replay_choices(t, choice_path),
            )
        for c in (RED, BLUE):
            new = label + c
            a2 = a + (1 if c == RED else 0)
            won = _wins_red(new, frozen) if c == RED else _wins_blue(new, t)
            choice_path.append(c)
            if won:
                leaf(ell, a2, m + 1)
            else:
                walk(new, ell, a2, m + 1)
            choice_path.pop()

    walk("", 1, 0, 0)
    return branches, max_l, max_a, max_m, rel_a, rel_m


def _replay_choices(t: int, choices: list[str]) -> list[dict]:
    """Turn a DFS choice path into a real transcript for error reports."""
    try:
        _, transcript = run_game(t, scripted_painter(choices), safety_cap=10**6)
    except GameAborted as ga:
        transcript = ga.transcript
    except SafetyCapReached as sc:
        transcript = sc.transcript
    return transcript


def _verify_memo(t: int, cap_vertices: int):
    """Memoized DFS on frozen label sets.

    Play from a frozen set onward never depends on how it was reached, so
    per-subtree deltas of (vertices, red, edges) and of the two slack
    functionals red-3*vertices and edges-(t+1)*vertices compose by
    shifting; branch counts add.
    """
    memo: dict[frozenset, tuple] = {}
    depth = [0]

    def between(frozen: set[str]):
        key = frozenset(frozen)
        hit = memo.get(key)
        if hit is not None:
            return hit
        depth[0] += 1
        if depth[0] > cap_vertices:
            raise VerificationError(f"t={t}: recursion beyond {cap_vertices} vertices")
        result = walk(frozen, "", 1, 0, 0)
        depth[0] -= 1
        memo[key] = result
        return result

    def walk(frozen: set[str], label: str, dl: int, da: int, dm: int):
        if label not in frozen:
            frozen.add(label)
            sub = between(frozen)
            frozen.remove(label)
            return (
                sub[0],
                dl + sub[1],
                da + sub[2],
                dm + sub[3],
                (da - 3 * dl) + sub[4],
                (dm - (t + 1) * dl) + sub[5],
            )
        out = None
        for c in (RED, BLUE):
            new = label + c
            da2 = da + (1 if c == RED else 0)
            won = _wins_red(new, frozen) if c == RED else _wins_blue(new, t)
            if won:
                piece = (1, dl, da2, dm + 1,
                         da2 - 3 * dl, (dm + 1) - (t + 1) * dl)
            else:
                piece = walk(frozen, new, dl, da2, dm + 1)
            if out is None:
                out = piece
            else:
                out = (
                    out[0] + piece[0],
                    max(out[1], piece[1]),
                    max(out[2], piece[2]),
                    max(out[3], piece[3]),
                    max(out[4], piece[4]),
                    max(out[5], piece[5]),
                )
        return out

    return between(set())


# ---------------------------------------------------------------------------
# the upper-bound formula


def upper_bound_estimate(
    t: int, vertices: int, red_edges: int, total_edges: int, alpha: float
) -> float:
    """Base-2 log of the clique-side bound for given game resources.

    log2(vertices) + red*log2(1/alpha) + (total-red)*log2(1/(1-alpha)),
    evaluated in log space.  alpha must lie in (0, 1/2].
    """
    import math

    if t < 3:
        raise ValueError(f"target t must be at least 3, got {t}")
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2], got {alpha}")
    if vertices < 1:
        raise ValueError(f"need at least one vertex, got {vertices}")
    if not 0 <= red_edges <= total_edges:
        raise ValueError(
            f"need 0 <= red <= total, got red={red_edges} total={total_edges}"
        )
    blue = total_edges - red_edges
    return (
        math.log2(vertices)
        - red_edges * math.log2(alpha)
        - blue * math.log2(1.0 - alpha)
    )
