import pytest

from oracles import brute_homomorphism, random_hypergraph
from ramseykit.homomorphism import (
    blowup,
    clone_vertex,
    embeds_in_blowup,
    exists_homomorphism,
    validate_homomorphism,
)
from ramseykit.hypergraph import Hypergraph, complete, tight_cycle


def test_validate_accepts_identity():
    C = tight_cycle(3, 5)
    assert validate_homomorphism(C, C, tuple(range(5)))


def test_validate_rejects():
    C = tight_cycle(3, 5)
    K = complete(3, 4)
    assert not validate_homomorphism(C, K, (0, 1, 2))  # wrong length
    assert not validate_homomorphism(C, K, (0, 1, 2, 3, 9))  # out of range
    # collapsing an edge breaks per-edge injectivity
    assert not validate_homomorphism(C, K, (0, 0, 1, 2, 3))
    assert not validate_homomorphism(C, complete(4, 6), (0, 1, 2, 3, 0))


def test_search_agrees_with_brute_force():
    for seed in range(25):
        F = random_hypergraph(3, 5, seed, eighths=3)
        G = random_hypergraph(3, 5, seed + 1000, eighths=5)
        got = exists_homomorphism(F, G)
        brute = brute_homomorphism(F, G)
        assert (got is None) == (brute is None), seed
        if got is not None:
            assert validate_homomorphism(F, G, got)


def test_identity_found_on_self():
    C = tight_cycle(3, 7)
    phi = exists_homomorphism(C, C)
    assert phi is not None
    assert validate_homomorphism(C, C, phi)


def test_cycle_to_clique_catalogue():
    K4 = complete(3, 4)
    assert exists_homomorphism(tight_cycle(3, 5), K4) is None
    for s in (4, 6, 7, 8, 9):
        phi = exists_homomorphism(tight_cycle(3, s), K4)
        assert phi is not None, s
        assert validate_homomorphism(tight_cycle(3, s), K4, phi)


def test_uniformity_mismatch_rejected():
    with pytest.raises(ValueError):
        exists_homomorphism(tight_cycle(3, 5), complete(4, 6))


def test_empty_cases():
    empty = Hypergraph(3, 0, [])
    assert exists_homomorphism(empty, complete(3, 4)) == ()
    assert exists_homomorphism(tight_cycle(3, 4), empty) is None
    loose = Hypergraph(3, 3, [])  # no edges: anything maps anywhere
    assert exists_homomorphism(loose, Hypergraph(3, 1, [])) == (0, 0, 0)


# ---------------------------------------------------------------------------
# blowups


def test_blowup_edges_follow_fibers():
    C = tight_cycle(3, 4)
    B = blowup(C, 2)
    assert B.n == 8
    # one pick per fiber of an original edge
    assert B.has_edge(0, 2, 4) and B.has_edge(1, 3, 5)
    # two picks from one fiber never form an edge
    assert not B.has_edge(0, 1, 2)
    with pytest.raises(ValueError):
        blowup(C, 0)


def test_blowup_p1_is_identity():
    C = tight_cycle(3, 6)
    assert blowup(C, 1) == C


def test_clone_vertex_duplicates_links():
    C = tight_cycle(3, 5)
    D = clone_vertex(C, 2)
    assert D.n == 6
    for e in C.edges:
        assert D.has_edge(*e)
        if 2 in e:
            clone_e = tuple(sorted(5 if v == 2 else v for v in e))
            assert D.has_edge(*clone_e)


def test_embeds_in_blowup_results():
    K4 = complete(3, 4)
    assert embeds_in_blowup(tight_cycle(3, 5), K4) is None
    got = embeds_in_blowup(tight_cycle(3, 6), K4)
    assert got is not None
    p, phi = got
    assert p >= 1
    assert validate_homomorphism(tight_cycle(3, 6), K4, phi)
    # fiber sizes actually reach p
    fibers = {}
    for v in phi:
        fibers[v] = fibers.get(v, 0) + 1
    assert max(fibers.values()) == p


def test_embeds_in_blowup_identity_case():
    C = tight_cycle(3, 7)
    got = embeds_in_blowup(C, C)
    assert got is not None
    assert got[0] == 1  # injective placement exists
