"""
The two-row graph constructions: moves of the first and second kind on
row-standard tableaux, the affine graph they generate, the dual equivalence
graph of Knuth moves, the equal-row variants, and the finite graph on
standard tableaux.

A move swaps one entry of row 1 with one entry of row 2.  First kind:
mo(i) in row 1 trades places with mo(i+1) in row 2.  Second kind: mo(i) in
row 2 trades places with mo(j) in row 1, gated by the parity and cyclic
interval conditions (a)-(e) below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import (
    Partition,
    RowStandardTableau,
    affine_descents,
    enumerate_rsyt,
    enumerate_syt,
    finite_descents,
    is_knuth_move,
    mo,
    pint,
)
from .wgraph import LabeledWGraph, simple_component_ids

__all__ = [
    "Move", "first_kind_target", "second_kind_valid", "second_kind_target",
    "enumerate_moves", "build_affine_graph", "build_dual_equiv",
    "build_equal_variant", "build_finite_graph",
]


@dataclass(frozen=True)
class Move:
    kind: str  # "first" | "second"
    i: int
    j: int  # equals i + 1 for first-kind moves
    source: int
    target: int


def _require_two_row(shape: Partition) -> None:
    if not shape.is_two_row:
        raise ValueError(f"shape must have exactly two rows: {shape}")


def first_kind_target(s: RowStandardTableau, i: int) -> RowStandardTableau | None:
    """Swap mo(i) in row 1 with mo(i+1) in row 2, or None if not applicable."""
    _require_two_row(s.shape)
    n = s.n
    x, y = mo(i, n), mo(i + 1, n)
    if x in s.rows[0] and y in s.rows[1]:
        return s.with_swapped(x, y)
    return None


def second_kind_valid(s: RowStandardTableau, i: int, j: int) -> bool:
    """
    Decide conditions (a)-(e) for the second-kind swap of mo(i) in row 2
    with mo(j) in row 1.  Raises if (s, i, j) is not even a candidate.
    """
    _require_two_row(s.shape)
    n = s.n
    row1, row2 = set(s.rows[0]), set(s.rows[1])
    if mo(i, n) not in row2 or mo(j, n) not in row1 or mo(i, n) == mo(j + 1, n):
        raise ValueError(f"not a second-kind candidate: i={i}, j={j} on {s}")
    d = mo(j - i, n)
    # (a) cyclic distance from i to j is odd
    if d % 2 == 0:
        return False
    # (b)
    if mo(i + 1, n) not in row1 or mo(j - 1, n) not in row2:
        return False
    # (c)
    if mo(i - 1, n) not in row1 and mo(j + 1, n) not in row2:
        return False
    # (d)
    for k in range(1, (d - 3) // 2 + 1):
        window = pint(mo(j - 1 - 2 * k, n), mo(j - 2, n), n)
        if len(row2 & window) < k:
            return False
    # (e); for d == 3 the interval is empty by the pint convention
    if mo(j, n) != mo(i + 1, n):
        window = pint(mo(i + 2, n), mo(j - 2, n), n)
        if len(row2 & window) != (d - 3) // 2:
            return False
    return True


def second_kind_target(s: RowStandardTableau, i: int, j: int) -> RowStandardTableau | None:
    """The result of the second-kind move, or None when (a)-(e) fail."""
    if second_kind_valid(s, i, j):
        return s.with_swapped(mo(i, s.n), mo(j, s.n))
    return None


def enumerate_moves(shape: Partition) -> list[Move]:
    """
    All moves between row-standard tableaux of the shape, with source and
    target given as indices into enumerate_rsyt(shape).
    """
    _require_two_row(shape)
    n = shape.n
    vertices = enumerate_rsyt(shape)
    index = {t: k for k, t in enumerate(vertices)}
    moves: list[Move] = []
    for src, s in enumerate(vertices):
        row1, row2 = set(s.rows[0]), set(s.rows[1])
        for i in range(1, n + 1):
            t = first_kind_target(s, i)
            if t is not None:
                moves.append(Move("first", i, mo(i + 1, n), src, index[t]))
        for i in range(1, n + 1):
            if mo(i, n) not in row2:
                continue
            for j in range(1, n + 1):
                if mo(j, n) not in row1 or mo(i, n) == mo(j + 1, n):
                    continue
                if second_kind_valid(s, i, j):
                    t = s.with_swapped(mo(i, n), mo(j, n))
                    moves.append(Move("second", i, j, src, index[t]))
    return moves


def build_affine_graph(shape: Partition) -> LabeledWGraph:
    """The [1,n]-labeled graph on RSYT(shape) generated by the two moves."""
    _require_two_row(shape)
    n = shape.n
    vertices = tuple(enumerate_rsyt(shape))
    weights = {(m.source, m.target): 1 for m in enumerate_moves(shape)}
    return LabeledWGraph(
        n=n,
        index_set=frozenset(range(1, n + 1)),
        vertices=vertices,
        tau=tuple(affine_descents(t) for t in vertices),
        weights=weights,
    )


def build_dual_equiv(shape: Partition) -> LabeledWGraph:
    """The graph of Knuth moves on RSYT(shape), all edges mutual of weight 1."""
    _require_two_row(shape)
    n = shape.n
    vertices = tuple(enumerate_rsyt(shape))
    weights: dict[tuple[int, int], int] = {}
    for u in range(len(vertices)):
        for v in range(u + 1, len(vertices)):
            if is_knuth_move(vertices[u], vertices[v]):
                weights[(u, v)] = 1
                weights[(v, u)] = 1
    return LabeledWGraph(
        n=n,
        index_set=frozenset(range(1, n + 1)),
        vertices=vertices,
        tau=tuple(affine_descents(t) for t in vertices),
        weights=weights,
    )


def build_equal_variant(shape: Partition, p: int) -> LabeledWGraph:
    """
    For shape (a,a): the affine graph with every directed edge joining the
    two simple components re-weighted to p (p=0 removes them, p=1 is the
    affine graph itself).
    """
    if not shape.is_equal_row:
        raise ValueError(f"shape must have two equal rows: {shape}")
    if p < 0:
        raise ValueError(f"variant weight must be nonnegative: {p}")
    g = build_affine_graph(shape)
    comp = simple_component_ids(g)
    weights = {}
    for (u, v), w in g.weights.items():
        if comp[u] != comp[v]:
            if p == 0:
                continue
            w = p
        weights[(u, v)] = w
    return LabeledWGraph(g.n, g.index_set, g.vertices, g.tau, weights)


def _finite_second_kind_valid(s: RowStandardTableau, i: int, j: int) -> bool:
    """Non-cyclic conditions (a)-(e): plain intervals, 1 < i < j <= n."""
    n = s.n
    row1, row2 = set(s.rows[0]), set(s.rows[1])
    if not (1 < i < j <= n) or (j - i) % 2 == 0:
        return False
    if i not in row2 or j not in row1:
        return False
    if i + 1 not in row1 or j - 1 not in row2:
        return False
    # j+1 is not in row 2 by convention when j = n
    if i - 1 not in row1 and (j == n or j + 1 not in row2):
        return False
    for m in range(1, (j - i - 3) // 2 + 1):
        if sum(1 for e in row2 if j - 1 - 2 * m <= e <= j - 2) < m:
            return False
    if j != i + 1:
        if sum(1 for e in row2 if i + 2 <= e <= j - 2) != (j - i - 3) // 2:
            return False
    return True


def build_finite_graph(shape: Partition) -> LabeledWGraph:
    """
    The [1,n-1]-labeled graph on the standard tableaux of the shape.

    Moves whose target is not standard produce no edge.  One-row shapes give
    the single-vertex graph (the restriction cells of the affine graph are
    keyed by such shapes as well).
    """
    if shape.length > 2:
        raise ValueError(f"shape must have at most two rows: {shape}")
    n = shape.n
    vertices = tuple(enumerate_syt(shape))
    index = {t: k for k, t in enumerate(vertices)}
    weights: dict[tuple[int, int], int] = {}
    if shape.is_two_row:
        for src, s in enumerate(vertices):
            row1, row2 = set(s.rows[0]), set(s.rows[1])
            for i in range(1, n):
                if i in row1 and i + 1 in row2:
                    t = s.with_swapped(i, i + 1)
                    if t in index:
                        weights[(src, index[t])] = 1
            for i in sorted(row2):
                for j in sorted(row1):
                    if _finite_second_kind_valid(s, i, j):
                        t = s.with_swapped(i, j)
                        if t in index:
                            weights[(src, index[t])] = 1
    return LabeledWGraph(
        n=n,
        index_set=frozenset(range(1, n)),
        vertices=vertices,
        tau=tuple(finite_descents(t) for t in vertices),
        weights=weights,
    )
