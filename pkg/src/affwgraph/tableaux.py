"""
Partitions, row-standard Young tableaux, cyclic residues and intervals,
descent sets, Knuth moves, and the cyclic-shift action.

Conventions: rows are numbered from the top starting at 1, a "higher" row
has a smaller row number, and every tableau stores its rows sorted.
Residues live in {1, ..., n}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

__all__ = [
    "Partition", "RowStandardTableau",
    "mo", "pint", "affine_descents", "finite_descents",
    "omega_shift", "is_knuth_move", "enumerate_rsyt", "enumerate_syt",
    "dominance_leq", "is_standard",
    "tableau_text", "tableau_to_json", "tableau_from_json",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts summing to n >= 3."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if sum(parts) < 3:
            raise ValueError(f"partition size must be at least 3: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def op(self) -> tuple[int, ...]:
        """The reversed sequence (a composition, not a partition in general)."""
        return tuple(reversed(self.parts))

    @property
    def is_two_row(self) -> bool:
        return len(self.parts) == 2

    @property
    def is_equal_row(self) -> bool:
        return len(self.parts) == 2 and self.parts[0] == self.parts[1]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def dominance_leq(mu: Partition, nu: Partition) -> bool:
    """True when every prefix sum of mu is at most the one of nu."""
    if mu.n != nu.n:
        raise ValueError(f"sizes differ: {mu} vs {nu}")
    total_mu = total_nu = 0
    for k in range(max(mu.length, nu.length)):
        total_mu += mu.parts[k] if k < mu.length else 0
        total_nu += nu.parts[k] if k < nu.length else 0
        if total_mu > total_nu:
            return False
    return True


@dataclass(frozen=True)
class RowStandardTableau:
    """
    Rows of a Young diagram filled with {1..n}, each row strictly increasing.

    With semistandard=True the row condition relaxes to weakly increasing,
    columns must strictly increase, and entries may repeat (used for RSK
    recording tableaux, whose content is a composition).
    """

    rows: tuple[tuple[int, ...], ...]
    semistandard: bool = field(default=False, compare=True)

    def __post_init__(self):
        rows = tuple(tuple(sorted(row)) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(row) for row in rows)
        Partition(shape)  # validates weakly decreasing, size >= 3
        if self.semistandard:
            for a in range(1, len(rows)):
                for c in range(len(rows[a])):
                    if rows[a][c] <= rows[a - 1][c]:
                        raise ValueError(f"columns must strictly increase: {rows}")
            if any(e <= 0 for row in rows for e in row):
                raise ValueError(f"entries must be positive: {rows}")
        else:
            entries = sorted(e for row in rows for e in row)
            if entries != list(range(1, len(entries) + 1)):
                raise ValueError(f"entries must be exactly 1..n: {rows}")

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def row_of(self, entry: int) -> int:
        """1-based row number containing the entry."""
        for a, row in enumerate(self.rows, start=1):
            if entry in row:
                return a
        raise ValueError(f"{entry} not in tableau {self.rows}")

    def reading_word(self) -> tuple[int, ...]:
        """Concatenation of the rows from bottom to top."""
        word: list[int] = []
        for row in reversed(self.rows):
            word.extend(row)
        return tuple(word)

    def with_swapped(self, x: int, y: int) -> "RowStandardTableau":
        """The tableau with entries x and y interchanged, rows re-sorted."""
        swapped = tuple(
            tuple(y if e == x else x if e == y else e for e in row)
            for row in self.rows
        )
        return RowStandardTableau(swapped)

    def __str__(self) -> str:
        return tableau_text(self)


def mo(k: int, n: int) -> int:
    """The unique element of {1..n} congruent to k modulo n."""
    return (k - 1) % n + 1


def pint(a: int, b: int, n: int) -> frozenset[int]:
    """
    Cyclic interval of residues from a to b.

    Empty when b is congruent to a-1 (so the interval from a+1 to a is empty
    rather than everything); otherwise {mo(a+x) : 0 <= x <= (b-a) mod n}.
    """
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"residues out of range: a={a}, b={b}, n={n}")
    if mo(a, n) == mo(b + 1, n):
        return frozenset()
    return frozenset(mo(a + x, n) for x in range((b - a) % n + 1))


def affine_descents(t: RowStandardTableau) -> frozenset[int]:
    """Residues i such that mo(i) sits in a strictly higher row than mo(i+1)."""
    n = t.n
    row = {}
    for a, entries in enumerate(t.rows, start=1):
        for e in entries:
            row[e] = a
    return frozenset(i for i in range(1, n + 1) if row[mo(i, n)] < row[mo(i + 1, n)])


def finite_descents(t: RowStandardTableau) -> frozenset[int]:
    """The affine descent set with n removed."""
    return affine_descents(t) - {t.n}


def omega_shift(t: RowStandardTableau) -> RowStandardTableau:
    """Replace every entry i with mo(i+1) and re-sort the rows."""
    n = t.n
    return RowStandardTableau(tuple(tuple(mo(e + 1, n) for e in row) for row in t.rows))


def is_knuth_move(t: RowStandardTableau, u: RowStandardTableau) -> bool:
    """
    True when u arises from t by interchanging mo(i) and mo(i+1) for some i
    and the affine descent sets of t and u are incomparable.
    """
    if t.shape != u.shape:
        raise ValueError("tableaux must have the same shape")
    dt, du = affine_descents(t), affine_descents(u)
    if dt <= du or du <= dt:
        return False
    n = t.n
    for i in range(1, n + 1):
        x, y = mo(i, n), mo(i + 1, n)
        if t.row_of(x) != t.row_of(y) and t.with_swapped(x, y) == u:
            return True
    return False


def enumerate_rsyt(shape: Partition) -> list[RowStandardTableau]:
    """
    All row-standard tableaux of the shape, sorted by reading word.

    The order is the canonical vertex order used by every graph builder.
    """
    n = shape.n

    def fill(remaining: frozenset[int], parts: tuple[int, ...]):
        if not parts:
            yield ()
            return
        for row in combinations(sorted(remaining), parts[0]):
            for rest in fill(remaining - set(row), parts[1:]):
                yield (row,) + rest

    tabs = [RowStandardTableau(rows) for rows in fill(frozenset(range(1, n + 1)), shape.parts)]
    tabs.sort(key=lambda t: t.reading_word())
    return tabs


def is_standard(t: RowStandardTableau) -> bool:
    """Rows and columns strictly increasing, entries exactly {1..n}."""
    if t.semistandard:
        return False
    for a in range(1, len(t.rows)):
        for c in range(len(t.rows[a])):
            if t.rows[a][c] <= t.rows[a - 1][c]:
                return False
    return True


def enumerate_syt(shape: Partition) -> list[RowStandardTableau]:
    """All standard tableaux of the shape, in the enumerate_rsyt order."""
    return [t for t in enumerate_rsyt(shape) if is_standard(t)]


def tableau_text(t: RowStandardTableau) -> str:
    """Compact one-line form, e.g. "123/45" (rows separated by "/")."""
    if t.rows and max(e for row in t.rows for e in row) > 9:
        return "/".join(" ".join(str(e) for e in row) for row in t.rows)
    return "/".join("".join(str(e) for e in row) for row in t.rows)


def tableau_to_json(t: RowStandardTableau) -> dict:
    return {"rows": [list(row) for row in t.rows], "n": t.n}


def tableau_from_json(data: dict) -> RowStandardTableau:
    return RowStandardTableau(tuple(tuple(row) for row in data["rows"]))
