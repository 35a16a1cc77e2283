"""
The full property regression: every verifiable claim about the two-row
graphs, runnable from the command line and mirrored by the test suite.

Each check returns a RegressResult; names are stable so CI can key on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affperm import (
    inverse,
    left_descents,
    min_coset_reps,
    upsilon,
)
from .fixtures import load_fixture, load_fixture_json
from .rsk import finsh, rsk
from .tableaux import (
    Partition,
    RowStandardTableau,
    affine_descents,
    enumerate_rsyt,
    finite_descents,
    is_standard,
    mo,
    omega_shift,
)
from .tworow import (
    build_affine_graph,
    build_dual_equiv,
    build_equal_variant,
    build_finite_graph,
    first_kind_target,
)
from .verify import (
    check_all_rules,
    check_hecke_relations,
    classify_restriction_cells,
    hecke_holds,
    rules_hold,
)
from .wgraph import (
    LabeledWGraph,
    graph_from_json,
    restrict_parabolic,
    simple_component_ids,
    simple_components,
    simple_underlying,
)

__all__ = ["RegressResult", "run_regression", "two_row_shapes", "same_graph", "ALL_CHECKS"]


@dataclass(frozen=True)
class RegressResult:
    name: str
    passed: bool
    detail: str = ""


def two_row_shapes(min_n: int = 3, max_n: int = 8) -> list[Partition]:
    shapes = []
    for n in range(min_n, max_n + 1):
        for b in range(1, n // 2 + 1):
            shapes.append(Partition((n - b, b)))
    return shapes


def same_graph(g: LabeledWGraph, h: LabeledWGraph) -> bool:
    """Equality up to vertex order, matching vertices by content."""
    if g.n != h.n or g.index_set != h.index_set:
        return False
    if sorted(g.vertices, key=lambda t: t.rows) != sorted(h.vertices, key=lambda t: t.rows):
        return False
    to_g = g.vertex_index()
    remap = [to_g[t] for t in h.vertices]
    if any(g.tau[remap[k]] != h.tau[k] for k in range(len(h.vertices))):
        return False
    return g.weights == {(remap[u], remap[v]): w for (u, v), w in h.weights.items()}


def check_fixtures() -> RegressResult:
    """The builders reproduce the hand-transcribed reference graphs exactly."""
    targets = [
        ("gamma_3_2", build_affine_graph(Partition((3, 2)))),
        ("gamma_4_2", build_affine_graph(Partition((4, 2)))),
        ("gamma_3_3", build_affine_graph(Partition((3, 3)))),
        ("gamma_prime_3_3", build_equal_variant(Partition((3, 3)), 0)),
    ]
    bad = [name for name, built in targets if not same_graph(built, load_fixture(name))]
    return RegressResult("fixtures", not bad, "mismatch: " + ", ".join(bad) if bad else "4 graphs")


def check_verification_sweep(max_n: int = 8) -> RegressResult:
    """Both verification paths pass on the affine graph of every shape."""
    bad = []
    for shape in two_row_shapes(3, max_n):
        g = build_affine_graph(shape)
        reports = check_all_rules(g) + [check_hecke_relations(g)]
        for report in reports:
            if not report.passed:
                bad.append(f"{shape}:{report.rule}")
    return RegressResult(
        "verification_sweep", not bad,
        ", ".join(bad) if bad else f"{len(two_row_shapes(3, max_n))} shapes, rules + module relations",
    )


def check_equal_variants() -> RegressResult:
    """Cross-component weight 0 for a in 2..4 and weight 2 for a in 2..3 verify."""
    cases = [(a, 0) for a in (2, 3, 4)] + [(a, 2) for a in (2, 3)]
    bad = []
    for a, p in cases:
        g = build_equal_variant(Partition((a, a)), p)
        if not (rules_hold(g) and hecke_holds(g)):
            bad.append(f"(a={a}, p={p})")
    return RegressResult("equal_variants", not bad, ", ".join(bad) if bad else "p in {0,2}")


def check_mutation_sensitivity(max_n: int = 6) -> RegressResult:
    """Deleting any single within-component directed edge breaks verification."""
    silent = []
    total = 0
    for shape in two_row_shapes(3, max_n):
        g = build_affine_graph(shape)
        comp = simple_component_ids(g)
        for edge in sorted(g.weights):
            if comp[edge[0]] != comp[edge[1]]:
                continue
            total += 1
            weights = dict(g.weights)
            del weights[edge]
            mutated = LabeledWGraph(g.n, g.index_set, g.vertices, g.tau, weights)
            if rules_hold(mutated) and hecke_holds(mutated):
                silent.append(f"{shape}:{edge}")
    return RegressResult(
        "mutation_sensitivity", not silent,
        ", ".join(silent) if silent else f"{total} single-edge deletions all detected",
    )


def check_underlying_and_omega(max_n: int = 8) -> RegressResult:
    """Simple underlying graph is the Knuth graph; the shift is an automorphism."""
    bad = []
    for shape in two_row_shapes(3, max_n):
        g = build_affine_graph(shape)
        if simple_underlying(g).weights != build_dual_equiv(shape).weights:
            bad.append(f"{shape}:underlying")
        index = g.vertex_index()
        sigma = [index[omega_shift(t)] for t in g.vertices]
        shifted = {(sigma[u], sigma[v]): w for (u, v), w in g.weights.items()}
        if shifted != g.weights:
            bad.append(f"{shape}:shift")
        for k, t in enumerate(g.vertices):
            expected = frozenset(mo(i + 1, g.n) for i in g.tau[k])
            if g.tau[sigma[k]] != expected:
                bad.append(f"{shape}:shift-tau")
                break
    return RegressResult(
        "underlying_and_omega", not bad, ", ".join(bad) if bad else f"n <= {max_n}"
    )


def check_rsk_vector() -> RegressResult:
    """The worked insertion example for shape (4,3,2)."""
    t = RowStandardTableau(((2, 4, 5, 7), (3, 6, 9), (1, 8)))
    pair = rsk(t)
    ok = (
        pair.p.rows == ((1, 2, 4, 5, 7), (3, 6, 9), (8,))
        and pair.q.rows == ((1, 1, 2, 2, 3), (2, 3, 3), (3,))
        and finsh(t) == Partition((5, 3, 1))
    )
    return RegressResult("rsk_vector", ok, "P, Q, insertion shape (5,3,1)")


def _cells_isomorphic_to_finite(shape: Partition) -> list[str]:
    """Check every restriction cell against the finite graph of its key."""
    bad = []
    for key, cell in classify_restriction_cells(shape).items():
        target = build_finite_graph(key)
        to_target = target.vertex_index()
        try:
            remap = [to_target[rsk(t).p] for t in cell.vertices]
        except KeyError:
            bad.append(f"{shape}:{key}:insertion-image")
            continue
        if sorted(remap) != list(range(len(target.vertices))):
            bad.append(f"{shape}:{key}:not-bijective")
            continue
        if any(
            cell.tau[k] != target.tau[remap[k]] for k in range(len(cell.vertices))
        ):
            bad.append(f"{shape}:{key}:tau")
        mapped = {(remap[u], remap[v]): w for (u, v), w in cell.weights.items()}
        if mapped != target.weights:
            bad.append(f"{shape}:{key}:weights")
    return bad


def check_restriction_cells(max_n: int = 8) -> RegressResult:
    """
    Cells of the restriction to [1, n-1] are the recording-tableau fibers
    and each is isomorphic, via insertion, to the finite graph of its key;
    the (3,2) restriction matches the transcribed reference.
    """
    bad = []
    for shape in two_row_shapes(3, max_n):
        try:
            bad.extend(_cells_isomorphic_to_finite(shape))
        except Exception as exc:  # CellMismatchError carries the detail
            bad.append(f"{shape}:{exc}")
    fixture = load_fixture_json("restriction_3_2")
    restricted = restrict_parabolic(build_affine_graph(Partition((3, 2))), range(1, 5))
    golden = graph_from_json(fixture)
    if not same_graph(restricted, golden):
        bad.append("(3,2):restriction-fixture")
    index = restricted.vertex_index()
    to_golden = {t: k for k, t in enumerate(golden.vertices)}
    remap = {index[t]: to_golden[t] for t in restricted.vertices}
    cell_map = classify_restriction_cells(Partition((3, 2)))
    built_cells = {
        ",".join(str(p) for p in key.parts): sorted(
            remap[index[t]] for t in cell.vertices
        )
        for key, cell in cell_map.items()
    }
    if built_cells != fixture["cells"]:
        bad.append("(3,2):cell-partition")
    return RegressResult(
        "restriction_cells", not bad, ", ".join(bad) if bad else f"n <= {max_n}"
    )


def check_finite_move_labels(max_n: int = 9) -> RegressResult:
    """
    Every move between standard tableaux surviving the restriction swaps
    j out of row 1 and i out of row 2 with j >= i - 1.
    """
    bad = []
    checked = 0
    for shape in two_row_shapes(3, max_n):
        g = build_affine_graph(shape)
        restricted = restrict_parabolic(g, range(1, shape.n))
        for (u, v) in sorted(restricted.weights):
            tu, tv = restricted.vertices[u], restricted.vertices[v]
            if not (is_standard(tu) and is_standard(tv)):
                continue
            j = next(iter(set(tu.rows[0]) - set(tv.rows[0])))
            i = next(iter(set(tu.rows[1]) - set(tv.rows[1])))
            checked += 1
            if j < i - 1:
                bad.append(f"{shape}:{(u, v)}:j={j},i={i}")
    return RegressResult(
        "finite_move_labels", not bad,
        ", ".join(bad) if bad else f"{checked} moves, all with j >= i-1",
    )


def _finsh_pair(t: RowStandardTableau) -> tuple[int, int]:
    parts = finsh(t).parts
    return (parts[0], parts[1] if len(parts) > 1 else 0)


def check_shift_suite(max_n: int = 8) -> RegressResult:
    """
    The insertion-shape case table under the shift, the standardization
    properties for unequal and equal rows, first-kind cross-component edges,
    and the two components of the equal-row Knuth graph swapped by the shift.
    """
    bad = []
    for shape in two_row_shapes(3, max_n):
        n = shape.n
        lam = (shape.parts[0], shape.parts[1])
        for t in enumerate_rsyt(shape):
            a, b = _finsh_pair(t)
            sa, sb = _finsh_pair(omega_shift(t))
            top = n in t.rows[0]
            if (a, b) == lam:
                expected = lam if top else (a + 1, b - 1)
            elif b == 0:
                if not top:
                    bad.append(f"{shape}:{t}:full-row-top")
                    continue
                expected = (n - 1, 1)
            else:
                expected = (a - 1, b + 1) if top else (a + 1, b - 1)
            if (sa, sb) != expected:
                bad.append(f"{shape}:{t}:case-table")
            if (sa, sb) == (a, b) and not (is_standard(t) and is_standard(omega_shift(t))):
                bad.append(f"{shape}:{t}:equal-implies-standard")
        orbit_bad = _check_standardization(shape)
        bad.extend(orbit_bad)
        if shape.is_equal_row:
            bad.extend(_check_equal_row_components(shape))
    return RegressResult(
        "shift_suite", not bad, ", ".join(bad[:4]) if bad else f"n <= {max_n}"
    )


def _check_standardization(shape: Partition) -> list[str]:
    bad = []
    unequal = shape.parts[0] > shape.parts[1]
    for t in enumerate_rsyt(shape):
        orbit = [t]
        for _ in range(shape.n - 1):
            orbit.append(omega_shift(orbit[-1]))
        flags = [is_standard(u) for u in orbit]
        if unequal:
            if not any(flags[k] and flags[(k + 1) % shape.n] for k in range(shape.n)):
                bad.append(f"{shape}:{t}:no-consecutive-standard")
        elif not any(flags):
            bad.append(f"{shape}:{t}:no-standard")
    return bad


def _check_equal_row_components(shape: Partition) -> list[str]:
    bad = []
    g = build_affine_graph(shape)
    comp = simple_component_ids(g)
    if len(simple_components(g)) != 2:
        return [f"{shape}:component-count"]
    if len(simple_components(build_dual_equiv(shape))) != 2:
        return [f"{shape}:knuth-component-count"]
    index = g.vertex_index()
    for k, t in enumerate(g.vertices):
        if comp[index[omega_shift(t)]] == comp[k]:
            bad.append(f"{shape}:{t}:shift-preserves-component")
    for (u, v) in sorted(g.weights):
        if comp[u] == comp[v]:
            continue
        tu, tv = g.vertices[u], g.vertices[v]
        x = next(iter(set(tu.rows[0]) - set(tv.rows[0])))
        y = next(iter(set(tu.rows[1]) - set(tv.rows[1])))
        if y != mo(x + 1, shape.n) or first_kind_target(tu, x) != tv:
            bad.append(f"{shape}:{(u, v)}:not-first-kind")
    return bad


def check_coset_suite(max_n: int = 8) -> RegressResult:
    """
    The map w -> w applied to the canonical tableau is a bijection from the
    minimal coset representatives onto the row-standard tableaux, matching
    finite descents to left descents and the affine descent n to the
    two-condition window characterization.
    """
    bad = []
    for shape in two_row_shapes(3, max_n):
        n = shape.n
        reps = min_coset_reps(shape)
        images = [upsilon(w, shape) for w in reps]
        vertices = enumerate_rsyt(shape)
        if len(set(images)) != len(reps) or set(images) != set(vertices):
            bad.append(f"{shape}:not-bijective")
            continue
        for w, image in zip(reps, images):
            fin = finite_descents(image)
            ld = left_descents(w)
            if fin != frozenset(i for i in ld if i < n):
                bad.append(f"{shape}:{w}:finite-descents")
            winv = inverse(w)
            split_rows = image.row_of(1) != image.row_of(n)
            affine_marked = n in affine_descents(image)
            if affine_marked != (split_rows and winv(1) < winv(n)):
                bad.append(f"{shape}:{w}:affine-descent")
    return RegressResult(
        "coset_suite", not bad, ", ".join(bad[:4]) if bad else f"n <= {max_n}"
    )


ALL_CHECKS = (
    "fixtures",
    "verification_sweep",
    "equal_variants",
    "mutation_sensitivity",
    "underlying_and_omega",
    "rsk_vector",
    "restriction_cells",
    "finite_move_labels",
    "shift_suite",
    "coset_suite",
)


def run_regression(max_n: int = 8, jobs: int = 1) -> list[RegressResult]:
    """
    Run every check.  max_n bounds the shape sweeps; the finite move-label
    check runs one size higher, and mutation sensitivity is capped at n = 6.
    """
    tasks = [
        ("fixtures", check_fixtures, ()),
        ("verification_sweep", check_verification_sweep, (max_n,)),
        ("equal_variants", check_equal_variants, ()),
        ("mutation_sensitivity", check_mutation_sensitivity, (min(max_n, 6),)),
        ("underlying_and_omega", check_underlying_and_omega, (max_n,)),
        ("rsk_vector", check_rsk_vector, ()),
        ("restriction_cells", check_restriction_cells, (max_n,)),
        ("finite_move_labels", check_finite_move_labels, (max_n + 1,)),
        ("shift_suite", check_shift_suite, (max_n,)),
        ("coset_suite", check_coset_suite, (max_n,)),
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, *args) for _, fn, args in tasks]
            return [f.result() for f in futures]
    return [fn(*args) for _, fn, args in tasks]
