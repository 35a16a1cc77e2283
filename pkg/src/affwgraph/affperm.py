"""
Window-notation arithmetic for the extended affine symmetric group, the
minimal coset representatives of S_n modulo a row-stabilizer, and the
coset/tableau correspondence sending a representative w to w applied to
the canonical tableau.

A window [w(1), ..., w(n)] extends to all of Z by w(k+n) = w(k)+n; the
group element lies in the non-extended affine symmetric group exactly when
the window sums to n(n+1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .tableaux import Partition, RowStandardTableau, mo

__all__ = [
    "AffinePermutation", "identity", "simple_reflection", "cyclic_shift",
    "compose", "inverse", "right_descents", "left_descents",
    "min_coset_reps", "canonical_tableau", "upsilon",
    "s0_tableau_action", "tableau_action",
]


@dataclass(frozen=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if sorted(mo(w, n) for w in window) != list(range(1, n + 1)):
            raise ValueError(f"window entries must have distinct residues: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def is_affine(self) -> bool:
        """Member of the non-extended affine group (zero total shift)."""
        n = self.n
        return sum(self.window) == n * (n + 1) // 2

    def __call__(self, k: int) -> int:
        """Value at any integer, via the periodic extension."""
        r = mo(k, self.n)
        return self.window[r - 1] + (k - r)

    def __str__(self) -> str:
        return "[" + ",".join(str(w) for w in self.window) + "]"

    def to_json(self) -> dict:
        return {"window": list(self.window)}

    @staticmethod
    def from_json(data: dict) -> "AffinePermutation":
        return AffinePermutation(tuple(data["window"]))


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def simple_reflection(i: int, n: int) -> AffinePermutation:
    """s_i for 1 <= i <= n-1; s_0 = s_n is [0, 2, ..., n-1, n+1]."""
    r = mo(i, n)
    window = list(range(1, n + 1))
    if r == n:
        window[0], window[n - 1] = 0, n + 1
    else:
        window[r - 1], window[r] = r + 1, r
    return AffinePermutation(tuple(window))


def cyclic_shift(n: int) -> AffinePermutation:
    """The element [2, 3, ..., n+1] whose conjugation realizes omega."""
    return AffinePermutation(tuple(range(2, n + 2)))


def compose(u: AffinePermutation, w: AffinePermutation) -> AffinePermutation:
    """(u o w)(k) = u(w(k))."""
    if u.n != w.n:
        raise ValueError(f"sizes differ: {u.n} vs {w.n}")
    return AffinePermutation(tuple(u(w(k)) for k in range(1, u.n + 1)))


def inverse(w: AffinePermutation) -> AffinePermutation:
    n = w.n
    window = [0] * n
    for i in range(1, n + 1):
        value = w(i)
        r = mo(value, n)
        window[r - 1] = i + (r - value)
    return AffinePermutation(tuple(window))


def right_descents(w: AffinePermutation) -> frozenset[int]:
    """{i in [1,n] : w(i) > w(i+1)}, reading i = n through the extension."""
    return frozenset(i for i in range(1, w.n + 1) if w(i) > w(i + 1))


def left_descents(w: AffinePermutation) -> frozenset[int]:
    return right_descents(inverse(w))


def min_coset_reps(shape: Partition) -> list[AffinePermutation]:
    """
    All finite windows increasing on each block, sorted lexicographically.
    These are the shortest representatives of the cosets modulo the
    stabilizer of the canonical tableau.
    """
    n = shape.n
    reps: list[tuple[int, ...]] = []

    def distribute(remaining: frozenset[int], sizes: tuple[int, ...], prefix: tuple[int, ...]):
        if not sizes:
            reps.append(prefix)
            return
        for chosen in combinations(sorted(remaining), sizes[0]):
            distribute(remaining - set(chosen), sizes[1:], prefix + chosen)

    distribute(frozenset(range(1, n + 1)), shape.op, ())
    reps.sort()
    return [AffinePermutation(w) for w in reps]


def canonical_tableau(shape: Partition) -> RowStandardTableau:
    """The tableau whose reading word (bottom row first) is 1, 2, ..., n."""
    rows = []
    stop = shape.n
    for size in shape.parts:
        rows.append(tuple(range(stop - size + 1, stop + 1)))
        stop -= size
    return RowStandardTableau(tuple(rows))


def tableau_action(w: AffinePermutation, t: RowStandardTableau) -> RowStandardTableau:
    """
    Entry-wise action e -> mo(w(e)) with rows re-sorted.  On the finite
    group this permutes entries; s_0 switches 1 and n; the cyclic-shift
    element acts as the omega shift.
    """
    n = t.n
    if w.n != n:
        raise ValueError(f"sizes differ: {w.n} vs {n}")
    return RowStandardTableau(tuple(tuple(mo(w(e), n) for e in row) for row in t.rows))


def upsilon(w: AffinePermutation, shape: Partition) -> RowStandardTableau:
    """Apply w to the canonical tableau of the shape."""
    return tableau_action(w, canonical_tableau(shape))


def s0_tableau_action(t: RowStandardTableau) -> RowStandardTableau:
    """Switch the entries 1 and n, re-sorting rows."""
    return t.with_swapped(1, t.n)
