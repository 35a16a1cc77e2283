"""
Two independent ways to certify that a labeled graph is a W-graph, plus the
restriction-cell classifier.

The four local rules (compatibility, simplicity, bonding, polygon)
characterize the nb-admissible reduced graphs carrying a Hecke module; the
matrix check instead builds the generator action

    T_i(u) = q*u                                    if i not in tau(u)
    T_i(u) = -u + v * sum m(u > w) * w over w with i not in tau(w)
                                                    if i in tau(u)

and verifies the quadratic, commutation and braid relations on every basis
vector.  Rule checkers report every witness they find.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import ONE, Q, V, ZERO, LaurentPoly, lp_monomial
from .rsk import rsk
from .tableaux import Partition
from .tworow import build_affine_graph
from .wgraph import (
    LabeledWGraph,
    cells,
    dynkin_adjacent,
    out_neighbors,
    restrict_parabolic,
)

__all__ = [
    "RuleReport", "check_compatibility", "check_simplicity", "check_bonding",
    "check_polygon", "check_all_rules", "rules_hold",
    "hecke_matrices", "check_hecke_relations", "hecke_holds",
    "classify_restriction_cells", "CellMismatchError",
]


@dataclass(frozen=True)
class RuleReport:
    rule: str
    passed: bool
    witnesses: tuple = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "passed": self.passed,
            "witnesses": [list(w) for w in self.witnesses],
        }


def _report(rule: str, witnesses: list) -> RuleReport:
    return RuleReport(rule, not witnesses, tuple(sorted(witnesses)))


def check_compatibility(g: LabeledWGraph) -> RuleReport:
    """Every edge only separates Dynkin-adjacent pairs of tau labels."""
    witnesses = []
    for (u, v) in g.weights:
        for i in g.tau[u] - g.tau[v]:
            for j in g.tau[v] - g.tau[u]:
                if not dynkin_adjacent(g, i, j):
                    witnesses.append((u, v, i, j))
    return _report("compatibility", witnesses)


def check_simplicity(g: LabeledWGraph) -> RuleReport:
    """One-way edges go strictly down in tau; incomparable edges are mutual of weight 1."""
    witnesses = []
    for (u, v), w in g.weights.items():
        tu, tv = g.tau[u], g.tau[v]
        if tu > tv:
            if g.weights.get((v, u), 0) != 0:
                witnesses.append((u, v))
        elif not (tu <= tv or tv <= tu):
            if w != 1 or g.weights.get((v, u), 0) != 1:
                witnesses.append((u, v))
        else:
            witnesses.append((u, v))  # tau(u) <= tau(v): not even reduced
    return _report("simplicity", witnesses)


def check_bonding(g: LabeledWGraph) -> RuleReport:
    """Adjacent i,j: each u in V_{i/j} has exactly one mutual partner in V_{j/i}."""
    witnesses = []
    pairs = [
        (i, j)
        for i in sorted(g.index_set)
        for j in sorted(g.index_set)
        if i < j and dynkin_adjacent(g, i, j)
    ]
    for i, j in pairs:
        for u in range(len(g.vertices)):
            for a, b in ((i, j), (j, i)):
                if a not in g.tau[u] or b in g.tau[u]:
                    continue
                partners = [
                    v
                    for v in range(len(g.vertices))
                    if b in g.tau[v]
                    and a not in g.tau[v]
                    and g.weights.get((u, v), 0) != 0
                    and g.weights.get((v, u), 0) != 0
                ]
                if len(partners) != 1:
                    witnesses.append((u, a, b, len(partners)))
    return _report("bonding", witnesses)


def check_polygon(g: LabeledWGraph) -> RuleReport:
    """
    N^2_{ij}(u,v) = N^2_{ji}(u,v) for all i != j, and N^3 agreement when i,j
    are adjacent, over all u with i,j in tau(u) and v with i,j outside tau(v).
    """
    witnesses = []
    count = len(g.vertices)
    adj = out_neighbors(g)
    generators = sorted(g.index_set)

    def paths2(i: int, j: int, u: int) -> dict[int, int]:
        """v -> sum over w in V_{i/j} of m(u>w) m(w>v)."""
        totals: dict[int, int] = {}
        for w, wt1 in adj[u]:
            if i in g.tau[w] and j not in g.tau[w]:
                for v, wt2 in adj[w]:
                    totals[v] = totals.get(v, 0) + wt1 * wt2
        return totals

    def paths3(i: int, j: int, u: int) -> dict[int, int]:
        """v -> sum over w1 in V_{i/j}, w2 in V_{j/i} of the 3-step products."""
        totals: dict[int, int] = {}
        for w1, wt1 in adj[u]:
            if i not in g.tau[w1] or j in g.tau[w1]:
                continue
            for w2, wt2 in adj[w1]:
                if j not in g.tau[w2] or i in g.tau[w2]:
                    continue
                for v, wt3 in adj[w2]:
                    totals[v] = totals.get(v, 0) + wt1 * wt2 * wt3
        return totals

    for ai, i in enumerate(generators):
        for j in generators[ai + 1:]:
            sources = [u for u in range(count) if i in g.tau[u] and j in g.tau[u]]
            sinks = [v for v in range(count) if i not in g.tau[v] and j not in g.tau[v]]
            if not sources or not sinks:
                continue
            adjacent = dynkin_adjacent(g, i, j)
            for u in sources:
                n2_ij = paths2(i, j, u)
                n2_ji = paths2(j, i, u)
                n3_ij = paths3(i, j, u) if adjacent else {}
                n3_ji = paths3(j, i, u) if adjacent else {}
                for v in sinks:
                    if n2_ij.get(v, 0) != n2_ji.get(v, 0):
                        witnesses.append((u, v, i, j, 2, n2_ij.get(v, 0), n2_ji.get(v, 0)))
                    if adjacent and n3_ij.get(v, 0) != n3_ji.get(v, 0):
                        witnesses.append((u, v, i, j, 3, n3_ij.get(v, 0), n3_ji.get(v, 0)))
    return _report("polygon", witnesses)


def check_all_rules(g: LabeledWGraph) -> list[RuleReport]:
    return [
        check_compatibility(g),
        check_simplicity(g),
        check_bonding(g),
        check_polygon(g),
    ]


def rules_hold(g: LabeledWGraph) -> bool:
    return all(r.passed for r in check_all_rules(g))


def _hecke_columns(g: LabeledWGraph) -> dict[int, list[dict[int, LaurentPoly]]]:
    """Sparse columns of each T_i: columns[i][u] maps row index to coefficient."""
    adj = out_neighbors(g)
    columns: dict[int, list[dict[int, LaurentPoly]]] = {}
    for i in sorted(g.index_set):
        cols = []
        for u in range(len(g.vertices)):
            if i not in g.tau[u]:
                cols.append({u: Q})
                continue
            col = {u: lp_monomial(-1, 0)}
            for w, wt in adj[u]:
                if i not in g.tau[w]:
                    col[w] = col.get(w, ZERO) + V.scale(wt)
            cols.append({k: c for k, c in col.items() if c})
        columns[i] = cols
    return columns


def _apply(cols: list[dict[int, LaurentPoly]], vec: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    out: dict[int, LaurentPoly] = {}
    for u, coeff in vec.items():
        for w, c in cols[u].items():
            s = out.get(w, ZERO) + coeff * c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def hecke_matrices(g: LabeledWGraph) -> dict[int, list[list[LaurentPoly]]]:
    """Dense matrix of each generator: matrix[row][col] in the vertex basis."""
    count = len(g.vertices)
    matrices = {}
    for i, cols in _hecke_columns(g).items():
        matrix = [[ZERO] * count for _ in range(count)]
        for u, col in enumerate(cols):
            for w, c in col.items():
                matrix[w][u] = c
        matrices[i] = matrix
    return matrices


def _hecke_witnesses(g: LabeledWGraph, stop_on_first: bool):
    columns = _hecke_columns(g)
    generators = sorted(g.index_set)
    count = len(g.vertices)
    one_minus_q = ONE - Q

    for i in generators:
        cols = columns[i]
        for u in range(count):
            base = {u: ONE}
            first = _apply(cols, base)
            residual = _apply(cols, first)
            for w, c in first.items():
                s = residual.get(w, ZERO) + one_minus_q * c
                if s:
                    residual[w] = s
                else:
                    residual.pop(w, None)
            s = residual.get(u, ZERO) - Q
            if s:
                residual[u] = s
            else:
                residual.pop(u, None)
            if residual:
                yield ("quadratic", i, i, u)
                if stop_on_first:
                    return

    for ai, i in enumerate(generators):
        for j in generators[ai + 1:]:
            ci, cj = columns[i], columns[j]
            adjacent = dynkin_adjacent(g, i, j)
            relation = "braid" if adjacent else "commutation"
            for u in range(count):
                base = {u: ONE}
                if adjacent:
                    left = _apply(ci, _apply(cj, _apply(ci, base)))
                    right = _apply(cj, _apply(ci, _apply(cj, base)))
                else:
                    left = _apply(ci, _apply(cj, base))
                    right = _apply(cj, _apply(ci, base))
                if left != right:
                    yield (relation, i, j, u)
                    if stop_on_first:
                        return


def check_hecke_relations(g: LabeledWGraph) -> RuleReport:
    """
    Verify (T_i - q)(T_i + 1) = 0 for every generator, commutation for
    non-adjacent pairs and the length-3 braid relation for adjacent ones,
    on every basis vector.  Witnesses are (relation, i, j, basis vertex).
    """
    return _report("hecke", list(_hecke_witnesses(g, stop_on_first=False)))


def hecke_holds(g: LabeledWGraph) -> bool:
    """Same as check_hecke_relations but stops at the first failure."""
    return next(_hecke_witnesses(g, stop_on_first=True), None) is None


class CellMismatchError(RuntimeError):
    """The SCC partition of the restriction disagrees with the RSK fibers."""


def classify_restriction_cells(shape: Partition) -> dict[Partition, LabeledWGraph]:
    """
    Restrict the affine graph of the shape to [1, n-1], check that its cells
    are exactly the fibers of the RSK recording tableau, and return them
    keyed by the insertion shape (which determines the recording tableau
    for two-row content).
    """
    g = build_affine_graph(shape)
    restricted = restrict_parabolic(g, range(1, shape.n))
    fibers: dict[tuple, set[int]] = {}
    keys: dict[tuple, Partition] = {}
    for k, t in enumerate(restricted.vertices):
        pair = rsk(t)
        label = (pair.q.shape, pair.q.rows)
        fibers.setdefault(label, set()).add(k)
        keys[label] = pair.q.shape
    cell_sets = {frozenset(ids) for ids in fibers.values()}
    scc_list = cells(restricted)
    index = restricted.vertex_index()
    scc_sets = {frozenset(index[t] for t in c.vertices) for c in scc_list}
    if cell_sets != scc_sets:
        raise CellMismatchError(
            f"RSK fibers differ from strongly connected components for {shape}"
        )
    by_vertices = {
        frozenset(index[t] for t in c.vertices): c for c in scc_list
    }
    result = {keys[label]: by_vertices[frozenset(ids)] for label, ids in fibers.items()}
    if len(result) != len(fibers):
        raise CellMismatchError(f"insertion shapes do not separate the fibers for {shape}")
    return result
