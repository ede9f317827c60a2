import itertools

import pytest

from oracles import brute_alpha, brute_has_tight_cycle, brute_spectrum, random_hypergraph
from ramseykit import kernels
from ramseykit.hypergraph import (
    Hypergraph,
    complete,
    contains_tight_cycle,
    cycle_spectrum,
    find_tight_cycle,
    from_text,
    independence_greedy,
    independence_number_exact,
    is_independent,
    load,
    save,
    tight_cycle,
    to_text,
)


# ---------------------------------------------------------------------------
# construction and validation


def test_basic_shape():
    H = Hypergraph(3, 5, [(0, 1, 2), (2, 3, 4)])
    assert H.k == 3 and H.n == 5
    assert H.has_edge(0, 1, 2)
    assert not H.has_edge(0, 1, 3)
    assert H.degrees() == [1, 1, 2, 1, 1]


@pytest.mark.parametrize(
    "k,n,edges",
    [
        (1, 5, []),
        (3, -1, []),
        (3, 5, [(0, 1, 5)]),
        (3, 5, [(-1, 1, 2)]),
        (3, 5, [(0, 1, 1)]),
        (3, 5, [(0, 1)]),
    ],
)
def test_rejects_malformed(k, n, edges):
    with pytest.raises(ValueError):
        Hypergraph(k, n, edges)


def test_normalizes_edge_presentation():
    # permuted and repeated inputs collapse to one stored ascending edge
    H = Hypergraph(3, 5, [(2, 0, 1), (0, 1, 2)])
    assert H.edges == ((0, 1, 2),)


def test_equality_ignores_edge_order():
    a = Hypergraph(3, 4, [(0, 1, 2), (1, 2, 3)])
    b = Hypergraph(3, 4, [(1, 2, 3), (0, 1, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != Hypergraph(3, 4, [(0, 1, 2)])


def test_complete_and_cycle_shapes():
    K = complete(3, 5)
    assert len(K.edges) == 10
    C = tight_cycle(3, 5)
    assert len(C.edges) == 5
    assert C.has_edge(0, 3, 4) and C.has_edge(0, 1, 4)
    # degenerate cycle of length k is a single edge
    assert tight_cycle(4, 4).edges == ((0, 1, 2, 3),)
    with pytest.raises(ValueError):
        tight_cycle(3, 2)


def test_completions_index():
    H = Hypergraph(3, 5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    comp = H.completions()
    assert comp[(0, 1)] == (2, 3)
    assert comp[(2, 3)] == (4,)


# ---------------------------------------------------------------------------
# tight cycle detection against the brute oracle


def test_cycle_detection_matches_brute_k3():
    for seed in range(40):
        H = random_hypergraph(3, 7, seed, eighths=3 + seed % 4)
        for s in range(4, 8):
            assert contains_tight_cycle(H, s) == brute_has_tight_cycle(H, s), (
                seed,
                s,
            )


def test_cycle_detection_matches_brute_k4():
    for seed in range(15):
        H = random_hypergraph(4, 7, seed, eighths=5)
        for s in range(5, 8):
            assert contains_tight_cycle(H, s) == brute_has_tight_cycle(H, s), (
                seed,
                s,
            )


def test_witness_is_a_real_cycle():
    found_any = 0
    for seed in range(30):
        H = random_hypergraph(3, 7, seed, eighths=5)
        for s in range(4, 8):
            witness = find_tight_cycle(H, s)
            if witness is None:
                assert not contains_tight_cycle(H, s)
                continue
            found_any += 1
            assert len(witness) == s and len(set(witness)) == s
            for i in range(s):
                window = tuple(sorted(witness[(i + j) % s] for j in range(3)))
                assert H.has_edge(*window)
    assert found_any > 20


def test_cycle_edge_cases():
    H = random_hypergraph(3, 6, 1)
    with pytest.raises(ValueError):
        contains_tight_cycle(H, 2)
    assert not contains_tight_cycle(H, 7)  # longer than n
    assert contains_tight_cycle(H, 3) == bool(H.edges)


def test_spectrum_matches_brute():
    for seed in range(12):
        H = random_hypergraph(3, 7, seed, eighths=4)
        assert cycle_spectrum(H, 7) == brute_spectrum(H, 7), seed


def test_pure_scan_agrees_with_kernel(monkeypatch):
    if not kernels.AVAILABLE:
        pytest.skip("compiled kernels unavailable")
    cases = [(random_hypergraph(3, 9, seed, eighths=3), s) for seed in range(10) for s in (4, 5, 7)]
    with_kernel = [contains_tight_cycle(H, s) for H, s in cases]
    monkeypatch.setattr(kernels, "AVAILABLE", False)
    without = [contains_tight_cycle(H, s) for H, s in cases]
    assert with_kernel == without


# ---------------------------------------------------------------------------
# independent sets


def test_is_independent():
    H = Hypergraph(3, 5, [(0, 1, 2)])
    assert is_independent(H, [0, 1, 3])
    assert not is_independent(H, [0, 1, 2, 3])


def test_greedy_independent_set_is_valid():
    for seed in range(20):
        H = random_hypergraph(3, 10, seed, eighths=5)
        got = independence_greedy(H)
        assert list(got) == sorted(got)
        assert is_independent(H, got)


def test_exact_alpha_matches_brute():
    for seed in range(25):
        H = random_hypergraph(3, 8, seed, eighths=2 + seed % 5)
        assert independence_number_exact(H) == brute_alpha(H), seed
    for seed in range(6):
        H = random_hypergraph(4, 8, seed, eighths=4)
        assert independence_number_exact(H) == brute_alpha(H), seed


def test_exact_alpha_pure_path(monkeypatch):
    if not kernels.AVAILABLE:
        pytest.skip("compiled kernels unavailable")
    Hs = [random_hypergraph(3, 12, seed, eighths=3) for seed in range(6)]
    with_kernel = [independence_number_exact(H) for H in Hs]
    monkeypatch.setattr(kernels, "AVAILABLE", False)
    assert [independence_number_exact(H) for H in Hs] == with_kernel


def test_exact_alpha_size_cap():
    H = complete(3, 70)
    with pytest.raises(ValueError, match="too large"):
        independence_number_exact(H)
    assert independence_number_exact(H, cap=128) == 2


# ---------------------------------------------------------------------------
# text round trip


def test_round_trip_preserves_graph(tmp_path):
    H = random_hypergraph(3, 9, 77, eighths=3)
    path = tmp_path / "h.txt"
    save(H, path, comment="round trip probe")
    again = load(path)
    assert again == H
    text = path.read_text(encoding="utf-8")
    assert text.startswith("# round trip probe\n")
    assert "\r" not in text


def test_text_parses_comments_and_blank_lines():
    text = "# heading\n\n3 5\n0 1 2\n\n# mid comment\n2 3 4\n"
    H = from_text(text)
    assert H == Hypergraph(3, 5, [(0, 1, 2), (2, 3, 4)])
    assert from_text(to_text(H)) == H


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "header"),
        ("3\n", "header"),
        ("3 5\n0 1\n", "line 2"),
        ("3 5\n0 x 2\n", "line 2"),
        ("3 5\n0 2 1\n", "line 2"),
        ("3 5\n0 1 9\n", "line 2"),
        ("3 5\n0 1 2\n0 1 2\n", "line 3"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        from_text(text)
