"""
I-labeled graphs: tableau vertices, descent labels tau, and a sparse
nonnegative integer weight map, together with the structural operations
(parabolic restriction, simple underlying graph, cells, simple components,
reducedness, nb-admissibility) and JSON/DOT export.

The index set is {1..n} for affine graphs and {1..n-1} for finite ones;
all orderings are canonical so exports are byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import (
    RowStandardTableau,
    tableau_from_json,
    tableau_text,
    tableau_to_json,
)

__all__ = [
    "LabeledWGraph", "full_subgraph",
    "restrict_parabolic", "simple_underlying", "cells", "simple_components",
    "simple_component_ids", "is_reduced", "is_nb_admissible", "dynkin_adjacent",
    "out_neighbors", "in_neighbors",
    "graph_to_json", "graph_from_json", "graph_to_dot",
]


@dataclass(frozen=True)
class LabeledWGraph:
    n: int
    index_set: frozenset[int]
    vertices: tuple[RowStandardTableau, ...]
    tau: tuple[frozenset[int], ...]
    weights: dict[tuple[int, int], int]  # (src, dst) -> nonzero weight

    def __post_init__(self):
        for (u, v), w in self.weights.items():
            if w == 0:
                raise ValueError(f"stored weight must be nonzero: {(u, v)}")
        for s in self.tau:
            if not s <= self.index_set:
                raise ValueError(f"tau value {set(s)} outside index set")

    @property
    def is_affine(self) -> bool:
        return self.n in self.index_set

    def weight(self, u: int, v: int) -> int:
        return self.weights.get((u, v), 0)

    def vertex_index(self) -> dict[RowStandardTableau, int]:
        return {t: k for k, t in enumerate(self.vertices)}


def dynkin_adjacent(g: LabeledWGraph, i: int, j: int) -> bool:
    """
    Type-A adjacency of two generators: cyclic distance 1 for the affine
    index set {1..n}, |i-j| = 1 for the finite one.
    """
    if g.is_affine:
        return (i - j) % g.n in (1, g.n - 1)
    return abs(i - j) == 1


def out_neighbors(g: LabeledWGraph) -> list[list[tuple[int, int]]]:
    """Per-vertex list of (target, weight)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in g.vertices]
    for (u, v), w in sorted(g.weights.items()):
        adj[u].append((v, w))
    return adj


def in_neighbors(g: LabeledWGraph) -> list[list[tuple[int, int]]]:
    """Per-vertex list of (source, weight)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in g.vertices]
    for (u, v), w in sorted(g.weights.items()):
        adj[v].append((u, w))
    return adj


def full_subgraph(g: LabeledWGraph, vertex_ids: list[int]) -> LabeledWGraph:
    """Subgraph on the given vertices keeping all internal weights."""
    ids = sorted(vertex_ids)
    renumber = {old: new for new, old in enumerate(ids)}
    weights = {
        (renumber[u], renumber[v]): w
        for (u, v), w in g.weights.items()
        if u in renumber and v in renumber
    }
    return LabeledWGraph(
        n=g.n,
        index_set=g.index_set,
        vertices=tuple(g.vertices[k] for k in ids),
        tau=tuple(g.tau[k] for k in ids),
        weights=weights,
    )


def restrict_parabolic(g: LabeledWGraph, j_set) -> LabeledWGraph:
    """
    Intersect every tau with J and delete each edge u->v whose restricted
    label tau'(u) became a subset of tau'(v).
    """
    j_set = frozenset(j_set)
    if not j_set <= g.index_set:
        raise ValueError(f"J = {set(j_set)} is not a subset of the index set")
    tau = tuple(s & j_set for s in g.tau)
    weights = {
        (u, v): w for (u, v), w in g.weights.items() if not tau[u] <= tau[v]
    }
    return LabeledWGraph(g.n, j_set, g.vertices, tau, weights)


def simple_underlying(g: LabeledWGraph) -> LabeledWGraph:
    """Keep exactly the pairs joined by weight 1 in both directions."""
    weights = {
        (u, v): 1
        for (u, v), w in g.weights.items()
        if u != v and w == 1 and g.weights.get((v, u)) == 1
    }
    return LabeledWGraph(g.n, g.index_set, g.vertices, g.tau, weights)


def _scc_partition(g: LabeledWGraph) -> list[list[int]]:
    """Strongly connected components (iterative Tarjan), sorted canonically."""
    count = len(g.vertices)
    adj = out_neighbors(g)
    index = [-1] * count
    lowlink = [0] * count
    on_stack = [False] * count
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(count):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pos < len(adj[v]):
                w = adj[v][pos][0]
                pos += 1
                if index[w] == -1:
                    work[-1] = (v, pos)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    comps.sort(key=lambda c: c[0])
    return comps


def cells(g: LabeledWGraph) -> list[LabeledWGraph]:
    """Strongly connected components as full subgraphs, by least vertex."""
    return [full_subgraph(g, comp) for comp in _scc_partition(g)]


def _undirected_components(g: LabeledWGraph) -> list[list[int]]:
    count = len(g.vertices)
    adj: list[set[int]] = [set() for _ in range(count)]
    for (u, v) in g.weights:
        adj[u].add(v)
        adj[v].add(u)
    seen = [False] * count
    comps = []
    for root in range(count):
        if seen[root]:
            continue
        comp = []
        frontier = [root]
        seen[root] = True
        while frontier:
            v = frontier.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def simple_components(g: LabeledWGraph) -> list[LabeledWGraph]:
    """Connected components of the simple underlying graph, as full subgraphs of g."""
    return [full_subgraph(g, comp) for comp in _undirected_components(simple_underlying(g))]


def simple_component_ids(g: LabeledWGraph) -> list[int]:
    """Per-vertex component number in the simple underlying graph."""
    ids = [0] * len(g.vertices)
    for k, comp in enumerate(_undirected_components(simple_underlying(g))):
        for v in comp:
            ids[v] = k
    return ids


def is_reduced(g: LabeledWGraph) -> bool:
    """No nonzero weight u->v with tau(u) a subset of tau(v)."""
    return all(not g.tau[u] <= g.tau[v] for (u, v) in g.weights)


def is_nb_admissible(g: LabeledWGraph) -> bool:
    """
    Nonnegative integer weights, and symmetric weights on every pair whose
    tau-labels are incomparable (bipartiteness is not required).
    """
    if any(w < 0 for w in g.weights.values()):
        return False
    for (u, v), w in g.weights.items():
        tu, tv = g.tau[u], g.tau[v]
        if not (tu <= tv or tv <= tu) and g.weights.get((v, u), 0) != w:
            return False
    return True


def graph_to_json(g: LabeledWGraph) -> dict:
    return {
        "n": g.n,
        "index_set": sorted(g.index_set),
        "vertices": [tableau_to_json(t) for t in g.vertices],
        "tau": [sorted(s) for s in g.tau],
        "edges": [
            {"src": u, "dst": v, "w": w}
            for (u, v), w in sorted(g.weights.items())
        ],
    }


def graph_from_json(data: dict) -> LabeledWGraph:
    return LabeledWGraph(
        n=data["n"],
        index_set=frozenset(data["index_set"]),
        vertices=tuple(tableau_from_json(t) for t in data["vertices"]),
        tau=tuple(frozenset(s) for s in data["tau"]),
        weights={(e["src"], e["dst"]): e["w"] for e in data["edges"]},
    )


def graph_to_dot(g: LabeledWGraph, name: str = "wgraph") -> str:
    """
    DOT rendering: mutual weight-1 pairs appear once with dir=none, one-way
    edges as arrows, vertex labels = compact tableau text plus tau.
    """
    lines = [f'digraph "{name}" {{', '  node [shape=box fontname="monospace"];']
    for k, t in enumerate(g.vertices):
        tau = "{" + ",".join(str(i) for i in sorted(g.tau[k])) + "}"
        lines.append(f'  v{k} [label="{tableau_text(t)}\\n{tau}"];')
    mutual = []
    arrows = []
    for (u, v), w in sorted(g.weights.items()):
        if w == 1 and g.weights.get((v, u)) == 1:
            if u < v:
                mutual.append((u, v))
        else:
            arrows.append((u, v, w))
    for u, v in mutual:
        lines.append(f"  v{u} -> v{v} [dir=none];")
    for u, v, w in arrows:
        attr = "" if w == 1 else f' [label="{w}"]'
        lines.append(f"  v{u} -> v{v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
