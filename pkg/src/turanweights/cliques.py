"""Exact maximum-clique search and clique enumeration over bitset graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph, vertices_of


@dataclass(frozen=True)
class CliqueSet:
    """Vertices of one clique, sorted ascending."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("clique vertices must be sorted and distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)


def _color_order(adj: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy coloring of the subgraph induced on ``cand``.

    Returns (vertex, color) pairs grouped by ascending color class; the color
    of a vertex bounds the size of any clique it can extend.
    """
    order: list[tuple[int, int]] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            avail &= ~adj[v]
            rest ^= 1 << v
            order.append((v, color))
    return order


def _expand(adj: Sequence[int], size: int, cand: int, best: int) -> int:
    # Tomita-style branch and bound: process candidates in decreasing color
    # order; size + color is an upper bound for the whole remaining subtree.
    for v, color in reversed(_color_order(adj, cand)):
        if size + color <= best:
            return best
        sub = cand & adj[v]
        if sub:
            best = _expand(adj, size + 1, sub, best)
        elif size + 1 > best:
            best = size + 1
        cand &= ~(1 << v)
    return best


def max_clique_size_masked(adj: Sequence[int], cand: int) -> int:
    """Exact clique number of the subgraph induced on the vertex mask."""
    if not cand:
        return 0
    return _expand(adj, 0, cand, 0)


def max_clique_size(g: Graph) -> int:
    """Exact clique number; 0 for the null graph, 1 for nonempty edgeless graphs."""
    return max_clique_size_masked(g.adj, (1 << g.n) - 1)


def edge_clique_number(g: Graph, u: int, v: int) -> int:
    """Size of the largest clique containing the edge (u, v); always >= 2."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return 2 + max_clique_size_masked(g.adj, g.adj[u] & g.adj[v])


def _iter_clique_tuples(adj: Sequence[int], cand: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        cur = prefix + (v,)
        yield cur
        yield from _iter_clique_tuples(adj, cand & adj[v], cur)


def enumerate_cliques(g: Graph) -> Iterator[CliqueSet]:
    """Every nonempty clique exactly once, lexicographic by sorted vertex list.

    Cliques are grown by recursive extension over candidates above the last
    vertex, so each clique is formed (and emitted) exactly once.
    """
    for tup in _iter_clique_tuples(g.adj, (1 << g.n) - 1, ()):
        yield CliqueSet(tup)


def _bron_kerbosch(adj: Sequence[int], grown: int, cand: int, excl: int,
                   out: list[tuple[int, ...]]) -> None:
    if not cand and not excl:
        out.append(vertices_of(grown))
        return
    # pivot with the most candidate neighbors; ties to the smallest index
    pool = cand | excl
    pivot = -1
    pivot_cnt = -1
    m = pool
    while m:
        u = (m & -m).bit_length() - 1
        m &= m - 1
        cnt = (cand & adj[u]).bit_count()
        if cnt > pivot_cnt:
            pivot, pivot_cnt = u, cnt
    ext = cand & ~adj[pivot]
    while ext:
        v = (ext & -ext).bit_length() - 1
        ext &= ext - 1
        bit = 1 << v
        _bron_kerbosch(adj, grown | bit, cand & adj[v], excl & adj[v], out)
        cand &= ~bit
        excl |= bit


def maximal_cliques(g: Graph) -> Iterator[CliqueSet]:
    """Inclusion-maximal cliques, each once, in lexicographic order."""
    if g.n == 0:
        return
    found: list[tuple[int, ...]] = []
    _bron_kerbosch(g.adj, 0, (1 << g.n) - 1, 0, found)
    for tup in sorted(found):
        yield CliqueSet(tup)
