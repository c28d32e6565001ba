"""Exact moments and Monte Carlo checks for traces of products of commutators
of Haar-random elements of U(n), Sp(2n), SO(2n) and SO(2n+1)."""

from .algebra import DomainError, Partition, Staircase, TypeVector, hook_length, partition_neighbors, staircase_neighbors
from .finite_groups import BUILTIN_GROUPS, FiniteGroup, finite_commutator_average
from .haar import (
    EmpiricalMoments,
    GroupElement,
    commutator_product_trace,
    estimate_moments,
    is_member,
    sample,
)
from .moments import (
    MomentQuery,
    MomentReport,
    RegimeError,
    clt_report,
    complex_gaussian_moment,
    gaussian_moment,
    moment_so_even,
    moment_so_odd,
    moment_symplectic,
    moment_unitary,
)
from .repdims import GroupFamily, Kind, dim_so_even, dim_so_odd, dim_symplectic, dim_unitary
from .tableaux import brute_force_staircase, brute_force_updown, count_staircase, count_updown

__version__ = "0.1.0"
