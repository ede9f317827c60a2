"""The compiled fast paths against their pure-Python twins.

The agreement tests in test_hypergraph already pin whole-function
behavior; these hit the kernel entry points directly on adversarial
masks and shapes.
"""

import numpy as np
import pytest

from oracles import random_hypergraph
from ramseykit import kernels
from ramseykit.hypergraph import (
    contains_tight_cycle,
    independence_number_exact,
)

pytestmark = pytest.mark.skipif(
    not kernels.AVAILABLE, reason="compiled kernels unavailable"
)


def test_bit_helpers_on_edge_masks():
    for value in (1, 2, 3, 1 << 63, (1 << 64) - 1, 0x8000000080000001):
        m = np.uint64(value)
        assert kernels._ctz(m) == (value & -value).bit_length() - 1
        assert kernels._popcount(m) == bin(value).count("1")


def test_link_matrix_is_symmetric():
    H = random_hypergraph(3, 20, 3, eighths=3)
    link = kernels._link_matrix(H)
    assert link.shape == (20, 20)
    assert np.array_equal(link, link.T)
    a, b, c = H.edges[0]
    assert int(link[a, b]) >> c & 1
    assert int(link[b, a]) >> c & 1


def test_cycle_scan_against_pure(monkeypatch):
    for seed in range(8):
        H = random_hypergraph(3, 16, seed, eighths=2)
        fast = {s: contains_tight_cycle(H, s) for s in range(4, 10)}
        monkeypatch.setattr(kernels, "AVAILABLE", False)
        slow = {s: contains_tight_cycle(H, s) for s in range(4, 10)}
        monkeypatch.undo()
        assert fast == slow, seed


def test_alpha_on_boundary_sizes():
    # n = 63 and 64 exercise the top bits of the packed masks
    for n in (63, 64):
        H = random_hypergraph(3, n, 11, eighths=1)
        got = independence_number_exact(H, cap=64)
        assert 3 <= got <= n


def test_alpha_dense_and_sparse_extremes():
    empty = random_hypergraph(3, 30, 0, eighths=0)
    assert independence_number_exact(empty) == 30
    from ramseykit.hypergraph import complete

    assert independence_number_exact(complete(3, 40)) == 2
