"""Weighted quadratic form over the simplex: evaluation, support reduction,
and the exact global maximum via clique-restricted stationary-point solves.

The objective is f(x) = sum over edges uv of w(uv) x_u x_v, maximized over
nonnegative x summing to 1.  A maximizer always exists whose support induces
a clique: repeatedly shifting all mass of one of two non-adjacent positive
coordinates onto the other (the one with the larger weighted neighbor sum)
never decreases f and strictly shrinks the support.  The global maximum is
therefore the best value over per-clique stationary solutions, which this
module computes in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Iterator, Sequence

import numpy as np

from .cliques import CliqueSet, _iter_clique_tuples, edge_clique_number, max_clique_size
from .graphs import Graph
from .linsolve import solve_linear_system
from .weights import edge_weight

STATUS_INTERIOR = "interior-solution"
STATUS_NO_POSITIVE = "no-positive-solution"
STATUS_SINGULAR = "singular-skipped"

_INT64_SAFE = 1 << 62


def _as_exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point values are not allowed in exact computations")
    return Fraction(value)


@dataclass(frozen=True)
class WeightScheme:
    """Edge weighting: clique-number weights, or one constant for every edge."""

    mode: str
    c: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.mode not in ("clique", "constant"):
            raise ValueError(f"unknown weight mode {self.mode!r}")
        object.__setattr__(self, "c", _as_exact(self.c))
        if self.mode == "constant" and self.c <= 0:
            raise ValueError("constant weight must be positive")

    @staticmethod
    def clique_weighted() -> "WeightScheme":
        return WeightScheme("clique")

    @staticmethod
    def constant(c) -> "WeightScheme":
        return WeightScheme("constant", _as_exact(c))


@dataclass(frozen=True)
class SimplexPoint:
    """Exact barycentric coordinates: nonnegative rationals summing to 1.

    The zero-length point is allowed as the single (vacuous) point used for
    graphs with no vertices.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(_as_exact(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if any(c < 0 for c in coords):
            raise ValueError("simplex coordinates must be nonnegative")
        if coords and sum(coords) != 1:
            raise ValueError(f"simplex coordinates must sum to 1, got {sum(coords)}")

    @staticmethod
    def uniform(n: int) -> "SimplexPoint":
        if n < 1:
            raise ValueError("uniform point needs at least one coordinate")
        return SimplexPoint((Fraction(1, n),) * n)

    def __len__(self) -> int:
        return len(self.coords)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c > 0)

    def support_mask(self) -> int:
        m = 0
        for i, c in enumerate(self.coords):
            if c > 0:
                m |= 1 << i
        return m


@lru_cache(maxsize=128)
def _edge_weights(g: Graph, scheme: WeightScheme) -> tuple[tuple[int, int, Fraction], ...]:
    """(u, v, weight) per edge, u < v, lexicographic; cached per graph+scheme."""
    if scheme.mode == "constant":
        return tuple((u, v, scheme.c) for u, v in g.edges())
    table = [Fraction(0), Fraction(0)] + [edge_weight(r) for r in range(2, max(g.n, 2) + 1)]
    return tuple((u, v, table[edge_clique_number(g, u, v)]) for u, v in g.edges())


def weight_map(g: Graph, scheme: WeightScheme) -> dict[tuple[int, int], Fraction]:
    """Edge weights keyed by (u, v) with u < v."""
    return {(u, v): w for u, v, w in _edge_weights(g, scheme)}


def objective_value(g: Graph, scheme: WeightScheme, x: SimplexPoint) -> Fraction:
    """Exact value of the weighted quadratic form at x."""
    if len(x.coords) != g.n:
        raise ValueError(f"point has {len(x.coords)} coordinates, graph has {g.n} vertices")
    coords = x.coords
    total = Fraction(0)
    for u, v, w in _edge_weights(g, scheme):
        xu = coords[u]
        if xu:
            xv = coords[v]
            if xv:
                total += w * xu * xv
    return total


def side_sum(g: Graph, scheme: WeightScheme, x: SimplexPoint, i: int) -> Fraction:
    """Weighted neighbor sum at vertex i: the gradient component of f along x_i."""
    if not 0 <= i < g.n:
        raise IndexError(f"vertex {i} out of range for n={g.n}")
    if len(x.coords) != g.n:
        raise ValueError(f"point has {len(x.coords)} coordinates, graph has {g.n} vertices")
    return _side(_edge_weights(g, scheme), x.coords, i)


def _side(edge_weights, coords, i) -> Fraction:
    total = Fraction(0)
    for u, v, w in edge_weights:
        if u == i:
            total += w * coords[v]
        elif v == i:
            total += w * coords[u]
    return total


@dataclass(frozen=True)
class ReductionStep:
    """One mass shift: coordinate j is zeroed, its mass moves onto i.

    The pair is non-adjacent with both coordinates positive beforehand, and
    s_i >= s_j, so f_after - f_before = x_j (s_i - s_j) >= 0.
    """

    i: int
    j: int
    s_i: Fraction
    s_j: Fraction
    f_before: Fraction
    f_after: Fraction
    point_after: SimplexPoint


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[ReductionStep]:
        return iter(self.steps)


def _first_nonadjacent_positive_pair(adj: Sequence[int], pos: int) -> tuple[int, int] | None:
    m = pos
    while m:
        a = (m & -m).bit_length() - 1
        m &= m - 1
        others = m & ~adj[a]  # m holds only bits above a
        if others:
            return a, (others & -others).bit_length() - 1
    return None


def support_reduce(g: Graph, scheme: WeightScheme, x: SimplexPoint) -> tuple[SimplexPoint, ReductionTrace]:
    """Shift mass between non-adjacent positive pairs until the support is a clique.

    Pairs are chosen lexicographically; mass moves onto the endpoint with the
    larger weighted neighbor sum (ties toward the smaller index).  Each step
    recomputes f from scratch, so the recorded before/after values are honest
    evaluations rather than applications of the shift identity.
    """
    if len(x.coords) != g.n:
        raise ValueError(f"point has {len(x.coords)} coordinates, graph has {g.n} vertices")
    edge_weights = _edge_weights(g, scheme)
    coords = list(x.coords)
    pos = x.support_mask()
    f_before = objective_value(g, scheme, x)
    steps: list[ReductionStep] = []
    while True:
        pair = _first_nonadjacent_positive_pair(g.adj, pos)
        if pair is None:
            break
        a, b = pair
        s_a = _side(edge_weights, coords, a)
        s_b = _side(edge_weights, coords, b)
        if s_a >= s_b:
            i, j, s_i, s_j = a, b, s_a, s_b
        else:
            i, j, s_i, s_j = b, a, s_b, s_a
        coords[i] += coords[j]
        coords[j] = Fraction(0)
        pos &= ~(1 << j)
        point_after = SimplexPoint(tuple(coords))
        f_after = objective_value(g, scheme, point_after)
        steps.append(ReductionStep(i, j, s_i, s_j, f_before, f_after, point_after))
        f_before = f_after
    return SimplexPoint(tuple(coords)), ReductionTrace(tuple(steps))


@dataclass(frozen=True)
class CliqueCandidate:
    clique: CliqueSet
    status: str
    value: Fraction | None


@dataclass(frozen=True)
class LagrangianOutcome:
    """Exact simplex maximum with a witnessing point and the candidate ledger."""

    maximum: Fraction
    support: CliqueSet
    witness: SimplexPoint
    candidates: tuple[CliqueCandidate, ...] = field(repr=False)


def _solve_clique_stationary(wdict, clique: tuple[int, ...]):
    """Stationary point of f restricted to a clique's face.

    Solves { sum_{j in S, j != i} w_ij x_j = lambda for i in S; sum x_i = 1 }.
    With all coordinates positive the common gradient value lambda satisfies
    f = lambda/2, because sum_i x_i s_i counts every edge twice.
    """
    k = len(clique)
    rows = []
    rhs = []
    for i in clique:
        row = [wdict[(min(i, j), max(i, j))] if j != i else Fraction(0) for j in clique]
        row.append(Fraction(-1))
        rows.append(row)
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * k + [Fraction(0)])
    rhs.append(Fraction(1))
    sol = solve_linear_system(rows, rhs)
    if sol is None:
        return STATUS_SINGULAR, None, None
    xs = sol[:k]
    lam = sol[k]
    if all(xv > 0 for xv in xs):
        return STATUS_INTERIOR, lam / 2, xs
    return STATUS_NO_POSITIVE, None, None


def lagrangian_maximum(g: Graph, scheme: WeightScheme) -> LagrangianOutcome:
    """Exact global maximum of f over the simplex.

    Every clique is a candidate support (a maximizer with clique support
    always exists); each candidate contributes its interior stationary value.
    Singular stationary systems are skipped: any value attained on a
    positive-dimensional critical family is also attained in the closure at a
    point supported on a strictly smaller clique, which is enumerated
    separately.  Ties keep the first candidate in enumeration order.
    """
    if g.n == 0:
        return LagrangianOutcome(Fraction(0), CliqueSet(()), SimplexPoint(()), ())
    wdict = weight_map(g, scheme)
    candidates: list[CliqueCandidate] = []
    best_value: Fraction | None = None
    best_clique: tuple[int, ...] = ()
    best_coords: list[Fraction] = []
    for clique in _iter_clique_tuples(g.adj, (1 << g.n) - 1, ()):
        status, value, coords = _solve_clique_stationary(wdict, clique)
        candidates.append(CliqueCandidate(CliqueSet(clique), status, value))
        if value is not None and (best_value is None or value > best_value):
            best_value, best_clique, best_coords = value, clique, coords
    witness = [Fraction(0)] * g.n
    for vert, xv in zip(best_clique, best_coords):
        witness[vert] = xv
    return LagrangianOutcome(
        best_value if best_value is not None else Fraction(0),
        CliqueSet(best_clique),
        SimplexPoint(tuple(witness)),
        tuple(candidates),
    )


def motzkin_straus_value(g: Graph) -> Fraction:
    """Closed-form simplex maximum (1 - 1/omega)/2 of the unweighted form."""
    omega = max_clique_size(g)
    if omega <= 1:
        return Fraction(0)
    return Fraction(omega - 1, 2 * omega)


def _composition_tuples(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """All n-part compositions of ``total`` (stars and bars), lexicographic."""
    if n == 1:
        yield (total,)
        return
    for bars in combinations(range(total + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(total + n - 2 - prev)
        yield tuple(parts)


@lru_cache(maxsize=4)
def _cached_composition_array(n: int, total: int) -> np.ndarray:
    return np.array(list(_composition_tuples(n, total)), dtype=np.int64)


def _composition_chunks(n: int, total: int, count: int) -> Iterator[np.ndarray]:
    if count * n <= 8_000_000:
        yield _cached_composition_array(n, total)
        return
    buf: list[tuple[int, ...]] = []
    for t in _composition_tuples(n, total):
        buf.append(t)
        if len(buf) == 65536:
            yield np.array(buf, dtype=np.int64)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.int64)


def grid_oracle(g: Graph, scheme: WeightScheme, resolution: int,
                cap: int = 5_000_000) -> Fraction:
    """Exact maximum of f over simplex points with coordinates k/resolution.

    A lower-bound oracle for lagrangian_maximum that shares none of its code
    path: it exhaustively evaluates the scaled-integer quadratic form at every
    grid point.  Refuses when the number of grid points exceeds ``cap``.
    """
    if resolution < 1:
        raise ValueError(f"grid resolution must be >= 1, got {resolution}")
    n = g.n
    if n == 0:
        return Fraction(0)
    count = comb(resolution + n - 1, n - 1)
    if count > cap:
        raise ValueError(f"{count} grid points exceed the cap of {cap}")
    edge_weights = _edge_weights(g, scheme)
    if not edge_weights:
        return Fraction(0)
    scale = lcm(*[w.denominator for _, _, w in edge_weights])
    scaled = [(u, v, int(w * scale)) for u, v, w in edge_weights]
    max_entry = max(a for _, _, a in scaled)
    if max_entry * resolution * resolution < _INT64_SAFE:
        mat = np.zeros((n, n), dtype=np.int64)
        for u, v, a in scaled:
            mat[u, v] = a
            mat[v, u] = a
        best = 0
        for chunk in _composition_chunks(n, resolution, count):
            vals = (chunk @ mat * chunk).sum(axis=1)
            top = int(vals.max())
            if top > best:
                best = top
        return Fraction(best, 2 * scale * resolution * resolution)
    # big-integer fallback for weights whose scaled values could overflow int64
    best = 0
    for t in _composition_tuples(n, resolution):
        s = 0
        for u, v, a in scaled:
            s += a * t[u] * t[v]
        if s > best:
            best = s
    return Fraction(best, scale * resolution * resolution)
