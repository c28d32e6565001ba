"""Dimensions of irreducible representations of Sp(2n), SO(2n), SO(2n+1), U(n).

Each non-unitary dimension is computed twice, once from the Weyl product
over positive roots and once from the El-Samra--King hook-content product,
and the two results must agree exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    DomainError,
    Partition,
    Staircase,
    as_partition,
    as_staircase,
    boxes,
    conjugate,
    hook_length,
)


class Kind(enum.Enum):
    SYMPLECTIC = "sp"
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"
    UNITARY = "u"


@dataclass(frozen=True)
class GroupFamily:
    """A compact classical group with rank parameter ``n``.

    ``matrix_size`` is 2n for Sp(2n) and SO(2n), 2n+1 for SO(2n+1) and n for U(n).
    """

    kind: Kind
    n: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1:
            raise DomainError(f"rank parameter must be positive, got {self.n}")

    @property
    def matrix_size(self) -> int:
        if self.kind is Kind.UNITARY:
            return self.n
        if self.kind is Kind.SO_ODD:
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def is_real_trace(self) -> bool:
        return self.kind is not Kind.UNITARY

    def __str__(self) -> str:
        names = {Kind.SYMPLECTIC: "Sp", Kind.SO_EVEN: "SO", Kind.SO_ODD: "SO", Kind.UNITARY: "U"}
        return f"{names[self.kind]}({self.matrix_size})"


class DimensionMismatch(RuntimeError):
    """The Weyl and hook-content routes disagree; indicates a bug."""


# --- Weyl route ---------------------------------------------------------


def _positive_roots(kind: Kind, n: int) -> list[tuple[int, ...]]:
    def e(*pairs: tuple[int, int]) -> tuple[int, ...]:
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    roots = [e((i, 1), (j, -1)) for i in range(n) for j in range(i + 1, n)]
    if kind is Kind.UNITARY:
        return roots
    roots += [e((i, 1), (j, 1)) for i in range(n) for j in range(i + 1, n)]
    if kind is Kind.SO_ODD:
        roots += [e((i, 1)) for i in range(n)]
    elif kind is Kind.SYMPLECTIC:
        roots += [e((i, 2)) for i in range(n)]
    return roots


def _twice_rho(kind: Kind, n: int) -> list[int]:
    # doubled so that B_n's half-integer rho stays integral
    if kind is Kind.SYMPLECTIC:
        return [2 * (n - i) for i in range(n)]
    if kind is Kind.SO_ODD:
        return [2 * (n - i) - 1 for i in range(n)]
    return [2 * (n - i - 1) for i in range(n)]


def weyl_dimension(kind: Kind, weight: tuple[int, ...]) -> int:
    """Weyl product prod <weight + rho, a> / <rho, a> over positive roots a.

    ``weight`` has one entry per rank (padded with zeros by the caller).
    """
    n = len(weight)
    rho = _twice_rho(kind, n)
    shifted = [2 * w + p for w, p in zip(weight, rho)]
    num = den = 1
    for a in _positive_roots(kind, n):
        num *= sum(c * x for c, x in zip(a, shifted) if c)
        den *= sum(c * x for c, x in zip(a, rho) if c)
    if num % den or num // den < 1:
        raise DimensionMismatch(
            f"Weyl product for {kind} {weight} is not a positive integer: {Fraction(num, den)}"
        )
    return num // den


# --- hook-content route -------------------------------------------------


def _content_symplectic(lam: Partition, conj: Partition, i: int, j: int) -> int:
    li = lam[i - 1] if i <= len(lam) else 0
    lj = lam[j - 1] if j <= len(lam) else 0
    ci = conj[i - 1] if i <= len(conj) else 0
    cj = conj[j - 1] if j <= len(conj) else 0
    if i > j:
        return li + lj - i - j + 2
    return i + j - ci - cj


def _content_orthogonal(lam: Partition, conj: Partition, i: int, j: int) -> int:
    li = lam[i - 1] if i <= len(lam) else 0
    lj = lam[j - 1] if j <= len(lam) else 0
    ci = conj[i - 1] if i <= len(conj) else 0
    cj = conj[j - 1] if j <= len(conj) else 0
    if i >= j:
        return li + lj - i - j
    return i + j - ci - cj - 2


def hook_content_dimension(lam: Partition, defining_size: int, symplectic: bool) -> int:
    """El-Samra--King product prod_x (N + c(x)) / h(x) with N the defining dimension."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    content = _content_symplectic if symplectic else _content_orthogonal
    val = Fraction(1)
    for i, j in boxes(lam):
        val *= Fraction(defining_size + content(lam, conj, i, j), hook_length(lam, (i, j)))
    if val.denominator != 1 or val < 1:
        raise DimensionMismatch(f"hook-content product for {lam} is not a positive integer: {val}")
    return int(val)


# --- public dimension functions ----------------------------------------


def _padded(lam: Partition, n: int) -> tuple[int, ...]:
    return lam + (0,) * (n - len(lam))


@lru_cache(maxsize=None)
def _checked(kind: Kind, lam: Partition, n: int) -> int:
    weyl = weyl_dimension(kind, _padded(lam, n))
    if kind is Kind.SYMPLECTIC:
        ek = hook_content_dimension(lam, 2 * n, symplectic=True)
    elif kind is Kind.SO_EVEN:
        ek = hook_content_dimension(lam, 2 * n, symplectic=False)
    else:
        ek = hook_content_dimension(lam, 2 * n + 1, symplectic=False)
    if weyl != ek:
        raise DimensionMismatch(f"{kind.value} {lam} n={n}: Weyl {weyl} != hook-content {ek}")
    return weyl


def dim_symplectic(lam: Partition, n: int) -> int:
    lam = as_partition(lam)
    if n < 1 or len(lam) > n:
        raise DomainError(f"Sp({2 * n}) has no irrep labelled {lam}")
    return _checked(Kind.SYMPLECTIC, lam, n)


def dim_so_even(lam: Partition, n: int) -> int:
    """Dimension of the SO(2n) irrep labelled ``lam``.

    Labels with exactly ``n`` rows restrict from O(2n) as a sum of two
    SO(2n) irreps and are refused.
    """
    lam = as_partition(lam)
    if n < 1 or len(lam) >= n:
        raise DomainError(f"SO({2 * n}) labels need fewer than {n} rows, got {lam}")
    return _checked(Kind.SO_EVEN, lam, n)


def dim_so_odd(lam: Partition, n: int) -> int:
    lam = as_partition(lam)
    if n < 1 or len(lam) > n:
        raise DomainError(f"SO({2 * n + 1}) has no irrep labelled {lam}")
    return _checked(Kind.SO_ODD, lam, n)


def dim_unitary(gam: Staircase, n: int) -> int:
    """prod_{i<j} (g_i - g_j + j - i) / (j - i)."""
    gam = as_staircase(gam)
    if len(gam) != n:
        raise DomainError(f"staircase {gam} does not have height {n}")
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= gam[i] - gam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def dimension(group: GroupFamily, label: tuple[int, ...]) -> int:
    """Dispatch to the dimension function of ``group``'s family."""
    return {
        Kind.SYMPLECTIC: dim_symplectic,
        Kind.SO_EVEN: dim_so_even,
        Kind.SO_ODD: dim_so_odd,
        Kind.UNITARY: dim_unitary,
    }[group.kind](label, group.n)
