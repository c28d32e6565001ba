"""Counting up-down tableaux and up-down staircase tableaux.

``count_updown`` and ``count_staircase`` are forward dynamic programs over
the shape lattice; ``brute_force_updown`` and ``brute_force_staircase``
enumerate walks one at a time and are kept only as oracles for the DPs.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .algebra import (
    DomainError,
    Partition,
    Staircase,
    TypeVector,
    as_partition,
    as_staircase,
    as_type_vector,
    partition_neighbors,
    staircase_moves,
)

BRUTE_FORCE_MAX_STEPS = 10


def _l1(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    m = max(len(a), len(b))
    a = a + (0,) * (m - len(a))
    b = b + (0,) * (m - len(b))
    return sum(abs(x - y) for x, y in zip(a, b))


@lru_cache(maxsize=None)
def updown_counts(r: int, height_bound: int | None = None) -> dict[Partition, int]:
    """Number of length-``r`` up-down tableaux ending at each shape.

    Returns a dict keyed by every shape reachable from the empty partition
    in ``r`` one-box moves (with at most ``height_bound`` rows throughout).
    Callers must not mutate the result; it is cached.
    """
    if r < 0:
        raise DomainError("r must be nonnegative")
    layer: dict[Partition, int] = {(): 1}
    for _ in range(r):
        nxt: dict[Partition, int] = defaultdict(int)
        for lam, c in layer.items():
            for mu in partition_neighbors(lam, height_bound):
                nxt[mu] += c
        layer = dict(nxt)
    return layer


def count_updown(shape: Partition, r: int, height_bound: int | None = None) -> int:
    """f_r^shape, or f_r^shape(n) when ``height_bound=n``."""
    target = as_partition(shape)
    if r < 0:
        raise DomainError("r must be nonnegative")
    if height_bound is not None:
        if height_bound < 1:
            raise DomainError("height_bound must be positive")
        if len(target) > height_bound:
            raise DomainError(f"{target} has more than {height_bound} rows")
    if len(target) > r or sum(target) > r or (r - sum(target)) % 2:
        return 0
    layer: dict[Partition, int] = {(): 1}
    for t in range(r):
        remaining = r - t - 1
        nxt: dict[Partition, int] = defaultdict(int)
        for lam, c in layer.items():
            for mu in partition_neighbors(lam, height_bound):
                # every step moves one box, so the L1 distance bounds the steps left
                if _l1(mu, target) <= remaining:
                    nxt[mu] += c
        layer = nxt
    return layer.get(target, 0)


def staircase_counts(height: int, type_vector: TypeVector) -> dict[Staircase, int]:
    """Number of up-down staircase tableaux of the given type ending at each staircase."""
    if height < 1:
        raise DomainError("height must be positive")
    eps = as_type_vector(type_vector)
    layer: dict[Staircase, int] = {(0,) * height: 1}
    for step in eps:
        nxt: dict[Staircase, int] = defaultdict(int)
        for gam, c in layer.items():
            for g in staircase_moves(gam, step):
                nxt[g] += c
        layer = dict(nxt)
    return layer


def count_staircase(shape: Staircase, type_vector: TypeVector) -> int:
    """c_j^shape(type) for staircases of height ``len(shape)``."""
    target = as_staircase(shape)
    eps = as_type_vector(type_vector)
    if sum(target) != sum(eps):
        return 0
    layer: dict[Staircase, int] = {(0,) * len(target): 1}
    for t, step in enumerate(eps):
        remaining = len(eps) - t - 1
        nxt: dict[Staircase, int] = defaultdict(int)
        for gam, c in layer.items():
            for g in staircase_moves(gam, step):
                if _l1(g, target) <= remaining:
                    nxt[g] += c
        layer = nxt
    return layer.get(target, 0)


def brute_force_updown(shape: Partition, r: int, height_bound: int | None = None) -> int:
    """Count up-down tableaux by enumerating every walk explicitly.

    Moves are generated by trying +-1 on every row and keeping the results
    that are still partitions, independently of :func:`partition_neighbors`.
    """
    target = as_partition(shape)
    if r > BRUTE_FORCE_MAX_STEPS:
        raise DomainError(f"brute force refused for r={r} > {BRUTE_FORCE_MAX_STEPS}")
    if height_bound is not None and len(target) > height_bound:
        raise DomainError(f"{target} has more than {height_bound} rows")

    def is_partition(rows: list[int]) -> bool:
        return all(x >= 0 for x in rows) and all(a >= b for a, b in zip(rows, rows[1:]))

    def walk(rows: list[int], steps_left: int) -> int:
        if steps_left == 0:
            return int(tuple(x for x in rows if x) == target)
        total = 0
        for i in range(len(rows) + 1):
            for delta in (1, -1):
                cand = rows + [0] if i == len(rows) else list(rows)
                cand[i] += delta
                if not is_partition(cand):
                    continue
                cand = [x for x in cand if x]
                if height_bound is not None and len(cand) > height_bound:
                    continue
                total += walk(cand, steps_left - 1)
        return total

    return walk([], r)


def brute_force_staircase(shape: Staircase, type_vector: TypeVector) -> int:
    """Count up-down staircase tableaux by explicit walk enumeration."""
    target = as_staircase(shape)
    eps = as_type_vector(type_vector)
    if len(eps) > BRUTE_FORCE_MAX_STEPS:
        raise DomainError(
            f"brute force refused for length {len(eps)} > {BRUTE_FORCE_MAX_STEPS}"
        )
    n = len(target)

    def walk(cur: tuple[int, ...], idx: int) -> int:
        if idx == len(eps):
            return int(cur == target)
        total = 0
        for i in range(n):
            cand = list(cur)
            cand[i] += eps[idx]
            if all(a >= b for a, b in zip(cand, cand[1:])):
                total += walk(tuple(cand), idx + 1)
        return total

    return walk((0,) * n, 0)
