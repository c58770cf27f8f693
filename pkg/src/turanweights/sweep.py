"""Exhaustive and randomized verification campaigns over graph families."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Graph, SplitMix64, from_edge_list, random_gnp, turan_graph, write_graph6
from .lagrangian import WeightScheme, lagrangian_maximum
from .weights import (
    CorollaryViolation,
    TheoremViolation,
    scaled_weight_table,
    turan_bound_check,
    weight_report,
    weight_scale,
)

DEFAULT_SWEEP_CAP = 7
DEFAULT_TIGHT_CAP = 10
DEFAULT_LAGRANGIAN_CAP = 12


@dataclass(frozen=True)
class SweepStats:
    """Exact aggregate of one verification campaign.

    For the edge-bound campaign (turan_bound_campaign) the totals are edge
    counts and the slack is against (1 - 1/r) n^2/2 instead of edge weights
    against n^2/4; all other fields keep their meaning.
    """

    n: int
    graphs_checked: int
    violations: int
    min_slack: Fraction
    tight_count: int
    tight_examples: tuple[str, ...]
    max_total_weight: Fraction


def mask_pairs(n: int) -> list[tuple[int, int]]:
    """Bit position -> vertex pair, lexicographic: bit 0 is (0,1), bit 1 is (0,2), ..."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = mask_pairs(n)
    adj = [0] * n
    while mask:
        b = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        u, v = pairs[b]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _clique_size_plain(adj: Sequence[int], cand: int, size: int, best: int) -> int:
    # popcount-pruned exact search; faster than the coloring engine on the
    # tiny candidate sets the sweep generates, and cross-checked against it
    if size > best:
        best = size
    while cand:
        if size + cand.bit_count() <= best:
            break
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        best = _clique_size_plain(adj, cand & adj[v], size + 1, best)
    return best


def _sweep_shard(args: tuple[int, int, int, int]) -> tuple[int, int, int, list[int], int | None]:
    """Check masks in [lo, hi); return (checked, tight, max_total_scaled,
    tight_masks up to cap, first violating mask or None)."""
    n, lo, hi, tight_cap = args
    pairs = mask_pairs(n)
    bit_u = [p[0] for p in pairs]
    bit_v = [p[1] for p in pairs]
    table = scaled_weight_table(n)
    scale = weight_scale(n)
    bound4 = n * n * scale  # slack >= 0  iff  4 * total_scaled <= bound4
    tight = 0
    max_total = 0
    tight_masks: list[int] = []
    for mask in range(lo, hi):
        adj = [0] * n
        mm = mask
        while mm:
            b = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            u, v = bit_u[b], bit_v[b]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        total = 0
        mm = mask
        while mm:
            b = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            common = adj[bit_u[b]] & adj[bit_v[b]]
            r = 2 + _clique_size_plain(adj, common, 0, 0) if common else 2
            total += table[r]
        quad = 4 * total
        if quad > bound4:
            return mask - lo, tight, max_total, tight_masks, mask
        if quad == bound4:
            tight += 1
            if len(tight_masks) < tight_cap:
                tight_masks.append(mask)
        if total > max_total:
            max_total = total
    return hi - lo, tight, max_total, tight_masks, None


def sweep_all_graphs(n: int, cap: int = DEFAULT_SWEEP_CAP, jobs: int = 1,
                     tight_cap: int = DEFAULT_TIGHT_CAP) -> SweepStats:
    """Verify the weight bound on every labeled graph on n vertices.

    Iterates all 2^(n(n-1)/2) adjacency masks, sharded over ``jobs`` worker
    processes; partial results merge in shard order, so the outcome is
    identical for any job count.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds the sweep cap of {cap}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total_masks = 1 << (n * (n - 1) // 2)
    jobs = max(1, jobs)
    shard_count = min(total_masks, jobs * 8)
    step = -(-total_masks // shard_count)
    shards = [(n, lo, min(lo + step, total_masks), tight_cap)
              for lo in range(0, total_masks, step)]
    if jobs == 1 or len(shards) == 1:
        partials = [_sweep_shard(s) for s in shards]
    else:
        with multiprocessing.Pool(jobs) as pool:
            partials = pool.map(_sweep_shard, shards)

    checked = 0
    tight_count = 0
    max_total = 0
    tight_masks: list[int] = []
    for part_checked, part_tight, part_max, part_masks, violation in partials:
        checked += part_checked
        tight_count += part_tight
        max_total = max(max_total, part_max)
        tight_masks.extend(part_masks)
        if violation is not None:
            g6 = write_graph6(graph_from_mask(n, violation))
            raise TheoremViolation(f"weight bound violated on n={n} graph {g6}",
                                   weight_report(graph_from_mask(n, violation)))
    scale = weight_scale(n)
    max_weight = Fraction(max_total, scale)
    bound = Fraction(n * n, 4)
    return SweepStats(
        n=n,
        graphs_checked=checked,
        violations=0,
        min_slack=bound - max_weight,
        tight_count=tight_count,
        tight_examples=tuple(write_graph6(graph_from_mask(n, m)) for m in tight_masks[:tight_cap]),
        max_total_weight=max_weight,
    )


def fuzz_random(n: int, p: Fraction | int, count: int, seed: int,
                lagrangian_cap: int = DEFAULT_LAGRANGIAN_CAP) -> SweepStats:
    """Verify the weight bound on ``count`` seeded G(n,p) draws.

    Per-graph seeds come from one SplitMix64 stream seeded with ``seed``, so
    the whole campaign is reproducible.  When n <= lagrangian_cap the exact
    simplex maximum m is also computed and the chain
    total/n^2 <= m <= 1/4 is checked; the weight bound is checked at every n.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    master = SplitMix64(seed)
    min_slack: Fraction | None = None
    max_total = Fraction(0)
    tight_count = 0
    tight_examples: list[str] = []
    quarter = Fraction(1, 4)
    for _ in range(count):
        g = random_gnp(n, p, master.next64())
        report = weight_report(g)
        if report.slack < 0:
            raise TheoremViolation(
                f"weight bound violated on G({n},{p}) draw {write_graph6(g)}", report)
        if n >= 1 and n <= lagrangian_cap:
            outcome = lagrangian_maximum(g, WeightScheme.clique_weighted())
            uniform_value = Fraction(report.total, n * n)
            if not uniform_value <= outcome.maximum <= quarter:
                raise TheoremViolation(
                    f"simplex-maximum chain broken on {write_graph6(g)}: "
                    f"{uniform_value} <= {outcome.maximum} <= 1/4 fails", report)
        if min_slack is None or report.slack < min_slack:
            min_slack = report.slack
        if report.total > max_total:
            max_total = report.total
        if report.slack == 0:
            tight_count += 1
            if len(tight_examples) < DEFAULT_TIGHT_CAP:
                tight_examples.append(write_graph6(g))
    return SweepStats(
        n=n,
        graphs_checked=count,
        violations=0,
        min_slack=min_slack if min_slack is not None else Fraction(0),
        tight_count=tight_count,
        tight_examples=tuple(tight_examples),
        max_total_weight=max_total,
    )


def turan_bound_campaign(n: int, r: int, count: int, seed: int) -> SweepStats:
    """Check the edge bound on random spanning subgraphs of the r-part Turan graph.

    Every draw keeps each edge independently with probability 1/2 (one
    Bernoulli draw per edge, lexicographic edge order, one stream for the
    whole campaign), yielding graphs with no clique of size r+1 by
    construction.
    """
    if r < 2:
        raise ValueError(f"part count must be >= 2, got {r}")
    if count < 1:
        raise ValueError("count must be >= 1")
    base = turan_graph(n, r)
    base_edges = list(base.edges())
    bound = (1 - Fraction(1, r)) * Fraction(n * n, 2)
    half = Fraction(1, 2)
    rng = SplitMix64(seed)
    min_slack: Fraction | None = None
    max_edges = 0
    tight_count = 0
    tight_examples: list[str] = []
    for _ in range(count):
        kept = [e for e in base_edges if rng.bernoulli(half)]
        sub = from_edge_list(n, kept)
        if not turan_bound_check(sub, r):
            raise CorollaryViolation(
                f"edge bound violated on subgraph {write_graph6(sub)} of T({n},{r})")
        slack = bound - len(kept)
        if min_slack is None or slack < min_slack:
            min_slack = slack
        max_edges = max(max_edges, len(kept))
        if slack == 0:
            tight_count += 1
            if len(tight_examples) < DEFAULT_TIGHT_CAP:
                tight_examples.append(write_graph6(sub))
    return SweepStats(
        n=n,
        graphs_checked=count,
        violations=0,
        min_slack=min_slack if min_slack is not None else Fraction(0),
        tight_count=tight_count,
        tight_examples=tuple(tight_examples),
        max_total_weight=Fraction(max_edges),
    )
