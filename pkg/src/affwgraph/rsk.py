"""
Robinson-Schensted-Knuth insertion on row-standard tableaux.

The biword of a tableau T has the reading word of T (bottom row to top row)
as its second row; the first row records, for each entry, the number of
rows of T minus the row number plus one, so the bottom row is labeled 1.
P is the insertion tableau of the reading word (standard), Q the recording
tableau (semistandard of content sh(T) reversed).
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import Partition, RowStandardTableau

__all__ = ["RskPair", "rsk", "finsh", "component_index"]


@dataclass(frozen=True)
class RskPair:
    p: RowStandardTableau
    q: RowStandardTableau


def _row_insert(rows: list[list[int]], labels: list[list[int]], entry: int, label: int) -> None:
    """Bump `entry` through `rows`, recording `label` at the new box."""
    a = 0
    while True:
        if a == len(rows):
            rows.append([entry])
            labels.append([label])
            return
        row = rows[a]
        pos = None
        for c, e in enumerate(row):
            if e > entry:
                pos = c
                break
        if pos is None:
            row.append(entry)
            labels[a].append(label)
            return
        row[pos], entry = entry, row[pos]
        a += 1


def rsk(t: RowStandardTableau) -> RskPair:
    """Insertion and recording tableaux of the biword of t."""
    depth = len(t.rows)
    rows: list[list[int]] = []
    labels: list[list[int]] = []
    for a in range(depth, 0, -1):
        for entry in t.rows[a - 1]:
            _row_insert(rows, labels, entry, depth + 1 - a)
    p = RowStandardTableau(tuple(tuple(row) for row in rows))
    q = RowStandardTableau(tuple(tuple(row) for row in labels), semistandard=True)
    return RskPair(p, q)


def finsh(t: RowStandardTableau) -> Partition:
    """The shape of the insertion tableau of t."""
    return rsk(t).p.shape


def component_index(t: RowStandardTableau) -> int:
    """
    For equal-row shapes (a,a): 0 when the second row of finsh(t) has the
    same parity as a, else 1.  Constant on connected components of the
    Knuth-move graph, and 0 exactly on the component of the standard tableaux.
    """
    shape = t.shape
    if not shape.is_equal_row:
        raise ValueError(f"shape must have two equal rows: {shape}")
    a = shape.parts[0]
    fs = finsh(t).parts
    second = fs[1] if len(fs) > 1 else 0
    return (a - second) % 2
