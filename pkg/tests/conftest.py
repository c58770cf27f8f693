"""Shared brute-force oracles and graph corpora for the test suite."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

import pytest

from turanweights import Graph, SplitMix64, graph_from_mask


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by adjacency mask order."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def is_clique_mask(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if (g.adj[v] | 1 << v) & mask != mask:
            return False
    return True


def brute_clique_masks(g: Graph) -> list[int]:
    """All nonempty cliques as vertex masks, by exhaustive subset check."""
    return [mask for mask in range(1, 1 << g.n) if is_clique_mask(g, mask)]


def brute_max_clique(g: Graph) -> int:
    best = 0
    for mask in brute_clique_masks(g):
        size = mask.bit_count()
        if size > best:
            best = size
    return best


def brute_edge_clique_number(g: Graph, u: int, v: int) -> int:
    need = (1 << u) | (1 << v)
    best = 0
    for mask in brute_clique_masks(g):
        if mask & need == need:
            best = max(best, mask.bit_count())
    return best


def random_rational_point(n: int, seed: int) -> tuple[Fraction, ...]:
    """Deterministic random simplex point with denominator-bounded coordinates."""
    rng = SplitMix64(seed)
    while True:
        nums = [rng.below(1000) for _ in range(n)]
        total = sum(nums)
        if total:
            return tuple(Fraction(k, total) for k in nums)


@pytest.fixture
def k4_minus_edge() -> Graph:
    """K4 with the edge (2,3) removed; two triangles sharing edge (0,1)."""
    from turanweights import from_edge_list

    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
