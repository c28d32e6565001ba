"""Partitions, staircases and one-box moves between them.

Partitions are plain tuples of positive ints without trailing zeros, so
``()`` is the empty partition. Staircases are tuples of length ``n`` (the
height) and keep their zeros. Exact values throughout the package are
:class:`fractions.Fraction`.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

Partition = tuple[int, ...]
Staircase = tuple[int, ...]
TypeVector = tuple[int, ...]

ExactRational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Trailing zeros are dropped; anything else that is not a weakly
    decreasing sequence of nonnegative ints raises :class:`DomainError`.
    """
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p < 1 for p in lam):
        raise DomainError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"partition is not weakly decreasing: {lam}")
    return lam


def as_staircase(entries: Iterable[int], height: int | None = None) -> Staircase:
    gam = tuple(int(e) for e in entries)
    if height is not None and len(gam) != height:
        raise DomainError(f"staircase {gam} does not have height {height}")
    if not gam:
        raise DomainError("staircase height must be positive")
    if any(a < b for a, b in zip(gam, gam[1:])):
        raise DomainError(f"staircase is not weakly decreasing: {gam}")
    return gam


def as_type_vector(steps: Iterable[int]) -> TypeVector:
    eps = tuple(int(e) for e in steps)
    if any(e not in (1, -1) for e in eps):
        raise DomainError(f"type vector entries must be +1 or -1: {eps}")
    return eps


def size(lam: Sequence[int]) -> int:
    """|lambda|, or the weight of a staircase."""
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def boxes(lam: Partition) -> list[tuple[int, int]]:
    """Boxes of the Young diagram as 1-based ``(row, col)`` pairs, row-major."""
    return [(i, j) for i, p in enumerate(lam, 1) for j in range(1, p + 1)]


def hook_length(lam: Partition, box: tuple[int, int]) -> int:
    i, j = box
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise DomainError(f"box {box} is not in the diagram of {lam}")
    arm = lam[i - 1] - j
    leg = sum(1 for p in lam[i:] if p >= j)
    return arm + leg + 1


def partitions_of(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    out: list[Partition] = []

    def rec(rem: int, cap: int, prefix: tuple[int, ...]) -> None:
        if rem == 0:
            out.append(prefix)
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, prefix + (p,))

    rec(m, m, ())
    return out


def partition_neighbors(lam: Partition, max_length: int | None = None) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding or removing one box.

    With ``max_length`` set, results longer than ``max_length`` rows are
    dropped. Removals come first, then additions, each in row order, so
    ``partition_neighbors((1,))`` is ``[(), (2,), (1, 1)]``.
    """
    lam = as_partition(lam)
    if max_length is not None and len(lam) > max_length:
        raise DomainError(f"{lam} has more than {max_length} rows")
    removals, additions = [], []
    for i in range(len(lam) + 1):
        cur = lam[i] if i < len(lam) else 0
        if i < len(lam) and (i + 1 == len(lam) or lam[i + 1] < cur):
            removals.append(as_partition(lam[:i] + (cur - 1,) + lam[i + 1:]))
        if i == 0 or lam[i - 1] > cur:
            mu = lam[:i] + (cur + 1,) + lam[i + 1:]
            if max_length is None or len(mu) <= max_length:
                additions.append(mu)
    return removals + additions


def staircase_neighbors(gam: Staircase) -> list[Staircase]:
    """Staircases of the same height differing from ``gam`` by +-1 in one entry.

    Additions come first (in row order), then removals (in row order).
    """
    gam = as_staircase(gam)
    n = len(gam)
    ups, downs = [], []
    for i in range(n):
        if i == 0 or gam[i - 1] > gam[i]:
            ups.append(gam[:i] + (gam[i] + 1,) + gam[i + 1:])
        if i == n - 1 or gam[i + 1] < gam[i]:
            downs.append(gam[:i] + (gam[i] - 1,) + gam[i + 1:])
    return ups + downs


def staircase_moves(gam: Staircase, step: int) -> list[Staircase]:
    """Neighbors of ``gam`` whose weight differs from it by ``step`` (+1 or -1)."""
    w = sum(gam)
    return [g for g in staircase_neighbors(gam) if sum(g) - w == step]
