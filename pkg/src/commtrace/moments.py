"""Exact moments of the trace of a product of k Haar commutators.

For Sp and SO the r-th moment is sum_lambda f_r^lambda / d_lambda^(2k-1),
with f counting up-down tableaux; for U(n) the mixed moment E[T^r conj(T)^s]
is sum_gamma c^gamma / d_gamma^(2k-1) over up-down staircase tableaux of
type (+1)^r (-1)^s. All sums are exact :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import DomainError
from .repdims import GroupFamily, Kind, dim_so_even, dim_so_odd, dim_symplectic, dim_unitary
from .tableaux import staircase_counts, updown_counts


class RegimeError(DomainError):
    """The moment formula is not valid for these parameters (e.g. SO with n <= r)."""


@dataclass(frozen=True)
class MomentQuery:
    group: GroupFamily
    k: int
    r: int
    s: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("k must be at least 1")
        if self.r < 0 or self.s < 0:
            raise DomainError("r and s must be nonnegative")
        if self.group.kind is not Kind.UNITARY and self.s != 0:
            raise DomainError("s is only meaningful for the unitary group")


@dataclass(frozen=True)
class MomentReport:
    query: MomentQuery
    exact: Fraction
    limit: Fraction
    gap: Fraction
    term_count: int


def _check(n: int, k: int, r: int, s: int = 0) -> None:
    if n < 1:
        raise DomainError("n must be positive")
    if k < 1:
        raise DomainError("k must be at least 1")
    if r < 0 or s < 0:
        raise DomainError("r and s must be nonnegative")


def moment_terms(group: GroupFamily, k: int, r: int, s: int = 0) -> list[tuple[tuple[int, ...], int, int]]:
    """The nonzero terms ``(label, count, dimension)`` of the moment sum."""
    n = group.n
    _check(n, k, r, s)
    kind = group.kind
    if kind is Kind.UNITARY:
        counts = staircase_counts(n, (1,) * r + (-1,) * s)
        return [(g, c, dim_unitary(g, n)) for g, c in counts.items() if c]
    if s:
        raise DomainError("s is only meaningful for the unitary group")
    if kind is Kind.SYMPLECTIC:
        counts = updown_counts(r, n)
        return [(lam, c, dim_symplectic(lam, n)) for lam, c in counts.items() if c]
    if n <= r:
        raise RegimeError(f"{group} moments need n > r (n={n}, r={r})")
    dim = dim_so_even if kind is Kind.SO_EVEN else dim_so_odd
    return [(lam, c, dim(lam, n)) for lam, c in updown_counts(r, None).items() if c]


def _moment_sum(terms, k: int) -> Fraction:
    e = 2 * k - 1
    return sum((Fraction(c, d**e) for _, c, d in terms), Fraction(0))


def moment(group: GroupFamily, k: int, r: int, s: int = 0) -> Fraction:
    return _moment_sum(moment_terms(group, k, r, s), k)


def moment_symplectic(n: int, k: int, r: int) -> Fraction:
    """E[Tr(w)^r] for w a product of k commutators of Haar elements of Sp(2n)."""
    return moment(GroupFamily(Kind.SYMPLECTIC, n), k, r)


def moment_so_even(n: int, k: int, r: int) -> Fraction:
    """E[Tr(w)^r] over SO(2n); requires n > r."""
    return moment(GroupFamily(Kind.SO_EVEN, n), k, r)


def moment_so_odd(n: int, k: int, r: int) -> Fraction:
    """E[Tr(w)^r] over SO(2n+1); requires n > r."""
    return moment(GroupFamily(Kind.SO_ODD, n), k, r)


def moment_unitary(n: int, k: int, r: int, s: int = 0) -> Fraction:
    """E[Tr(w)^r conj(Tr(w))^s] over U(n)."""
    return moment(GroupFamily(Kind.UNITARY, n), k, r, s)


def gaussian_moment(r: int) -> int:
    """E[X^r] for a standard real normal: (r-1)!! for even r, 0 for odd r."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if r % 2:
        return 0
    return math.prod(range(r - 1, 0, -2))


def complex_gaussian_moment(r: int, s: int) -> int:
    """E[Z^r conj(Z)^s] for a standard complex normal."""
    if r < 0 or s < 0:
        raise DomainError("r and s must be nonnegative")
    return math.factorial(r) if r == s else 0


def limit_moment(kind: Kind, r: int, s: int = 0) -> int:
    if kind is Kind.UNITARY:
        return complex_gaussian_moment(r, s)
    return gaussian_moment(r)


def moment_report(group: GroupFamily, k: int, r: int, s: int = 0) -> MomentReport:
    query = MomentQuery(group, k, r, s)
    terms = moment_terms(group, k, r, s)
    exact = _moment_sum(terms, k)
    limit = Fraction(limit_moment(group.kind, r, s))
    return MomentReport(query, exact, limit, abs(exact - limit), len(terms))


def clt_report(kind: Kind | str, k: int, r: int, s: int, n_list) -> list[MomentReport]:
    """Exact moment, Gaussian limit and gap for each n in ``n_list``.

    Regime violations raise; the CLI catches them per row.
    """
    kind = Kind(kind)
    n_list = list(n_list)
    if not n_list:
        raise DomainError("n_list must be nonempty")
    return [moment_report(GroupFamily(kind, n), k, r, s) for n in n_list]


def gaps_weakly_decreasing(reports: list[MomentReport]) -> bool:
    """True if the nonzero gaps never increase along the list."""
    gaps = [rep.gap for rep in reports if rep.gap]
    return all(a >= b for a, b in zip(gaps, gaps[1:]))
