"""Clique-dependent edge weights and exact verification of the n^2/4 bound.

Every edge gets weight r/(2(r-1)) where r is the size of the largest clique
containing it; the total over all edges never exceeds n^2/4.  All arithmetic
is exact rational (fractions.Fraction); no floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cliques import edge_clique_number, max_clique_size
from .graphs import Graph


class InvariantViolation(Exception):
    """A proven mathematical invariant failed; always an implementation bug."""


class TheoremViolation(InvariantViolation):
    """Total edge weight exceeded n^2/4.  Carries the offending report."""

    def __init__(self, message: str, report: "WeightReport | None" = None) -> None:
        super().__init__(message)
        self.report = report


class CorollaryViolation(InvariantViolation):
    """A K_{r+1}-free graph exceeded the (1 - 1/r) n^2/2 edge bound."""


@dataclass(frozen=True)
class EdgeWeightRecord:
    u: int
    v: int
    r: int
    w: Fraction


@dataclass(frozen=True)
class WeightReport:
    """Per-edge clique numbers and weights with the exact bound comparison."""

    n: int
    records: tuple[EdgeWeightRecord, ...]
    total: Fraction
    bound: Fraction
    slack: Fraction

    @property
    def tight(self) -> bool:
        return self.slack == 0


def edge_weight(r: int) -> Fraction:
    """Weight r/(2(r-1)) of an edge whose largest clique has size r.

    Strictly decreasing in r, with values in (1/2, 1].
    """
    if r < 2:
        raise ValueError(f"edge clique number must be >= 2, got {r}")
    return Fraction(r, 2 * (r - 1))


def weight_scale(n: int) -> int:
    """Common denominator of all edge weights possible on n vertices."""
    if n < 2:
        return 1
    return lcm(*[2 * (r - 1) for r in range(2, n + 1)])


def scaled_weight_table(n: int) -> list[int]:
    """T[r] = weight_scale(n) * edge_weight(r), an exact integer, for r in 2..n."""
    scale = weight_scale(n)
    return [0, 0] + [scale * r // (2 * (r - 1)) for r in range(2, n + 1)]


def weight_report(g: Graph) -> WeightReport:
    weights = [Fraction(0), Fraction(0)] + [edge_weight(r) for r in range(2, max(g.n, 2) + 1)]
    records = []
    total = Fraction(0)
    for u, v in g.edges():
        r = edge_clique_number(g, u, v)
        w = weights[r]
        records.append(EdgeWeightRecord(u, v, r, w))
        total += w
    bound = Fraction(g.n * g.n, 4)
    return WeightReport(g.n, tuple(records), total, bound, bound - total)


def verify_theorem(g: Graph) -> Fraction:
    """Exact slack n^2/4 - total weight; raises if it is ever negative."""
    report = weight_report(g)
    if report.slack < 0:
        raise TheoremViolation(
            f"total weight {report.total} exceeds bound {report.bound} on n={report.n}",
            report,
        )
    return report.slack


def turan_bound_check(g: Graph, r: int) -> bool:
    """Edge-count bound e(G) <= (1 - 1/r) n^2/2 for K_{r+1}-free graphs.

    Precondition (checked): the graph has no clique of size r+1.
    """
    if r < 2:
        raise ValueError(f"clique bound must be >= 2, got {r}")
    omega = max_clique_size(g)
    if omega > r:
        raise ValueError(f"graph contains a clique of size {omega} > {r}")
    return Fraction(g.edge_count()) <= (1 - Fraction(1, r)) * Fraction(g.n * g.n, 2)
