from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from commtrace.algebra import partitions_of
from commtrace.moments import (
    RegimeError,
    clt_report,
    complex_gaussian_moment,
    gaps_weakly_decreasing,
    gaussian_moment,
    moment_so_even,
    moment_so_odd,
    moment_symplectic,
    moment_unitary,
    moment_terms,
)
from commtrace.repdims import GroupFamily, Kind, dim_so_even, dim_symplectic, dim_unitary
from commtrace.tableaux import brute_force_staircase, brute_force_updown


def oracle_symplectic(n, k, r):
    """Moment sum rebuilt from the brute-force walk counter."""
    total = Fraction(0)
    for m in range(r % 2, r + 1, 2):
        for lam in partitions_of(m):
            if len(lam) <= n:
                f = brute_force_updown(lam, r, n)
                total += Fraction(f, dim_symplectic(lam, n) ** (2 * k - 1))
    return total


class TestSymplectic:
    @pytest.mark.parametrize("n", [1, 3, 7])
    def test_zeroth_moment(self, n):
        assert moment_symplectic(n, 2, 0) == 1

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_first_moment(self, n, k):
        assert moment_symplectic(n, k, 1) == Fraction(1, (2 * n) ** (2 * k - 1))

    def test_second_moment_rank_three(self):
        assert moment_symplectic(3, 1, 2) == 1 + Fraction(1, 21) + Fraction(1, 14)

    @pytest.mark.parametrize("n,k,r", [(1, 1, 4), (2, 1, 5), (2, 2, 6), (4, 1, 6), (3, 3, 3)])
    def test_against_brute_force_oracle(self, n, k, r):
        assert moment_symplectic(n, k, r) == oracle_symplectic(n, k, r)


class TestOrthogonal:
    def test_zeroth(self):
        assert moment_so_even(3, 1, 0) == 1
        assert moment_so_odd(3, 1, 0) == 1

    def test_so8(self):
        assert moment_so_even(4, 1, 1) == Fraction(1, 8)
        assert moment_so_even(4, 1, 2) == 1 + Fraction(1, 35) + Fraction(1, 28)

    def test_so11_second(self):
        assert moment_so_odd(5, 1, 2) == 1 + Fraction(1, 65) + Fraction(1, 55)

    @pytest.mark.parametrize("func", [moment_so_even, moment_so_odd])
    def test_regime(self, func):
        with pytest.raises(RegimeError):
            func(2, 1, 3)
        with pytest.raises(RegimeError):
            func(3, 1, 3)


class TestUnitary:
    def test_zeroth(self):
        assert moment_unitary(4, 2, 0, 0) == 1

    def test_u5_mixed(self):
        assert moment_unitary(5, 1, 1, 1) == 1 + Fraction(1, 24)

    @pytest.mark.parametrize("k", [1, 2])
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_first(self, n, k):
        assert moment_unitary(n, k, 1, 0) == Fraction(1, n ** (2 * k - 1))

    def test_conjugation_symmetry(self):
        for n in range(1, 6):
            for r in range(4):
                for s in range(4):
                    assert moment_unitary(n, 1, r, s) == moment_unitary(n, 1, s, r)

    def test_against_brute_force_oracle(self):
        n, r, s = 3, 2, 2
        eps = (1,) * r + (-1,) * s
        total = Fraction(0)
        for gam, c, d in moment_terms(GroupFamily(Kind.UNITARY, n), 1, r, s):
            assert brute_force_staircase(gam, eps) == c
            assert dim_unitary(gam, n) == d
            total += Fraction(c, d)
        assert total == moment_unitary(n, 1, r, s)


class TestGaussian:
    def test_values(self):
        assert gaussian_moment(0) == 1
        assert gaussian_moment(4) == 3
        assert gaussian_moment(6) == 15
        assert gaussian_moment(7) == 0
        assert complex_gaussian_moment(3, 3) == 6
        assert complex_gaussian_moment(2, 1) == 0
        assert complex_gaussian_moment(0, 0) == 1

    @pytest.mark.parametrize("r", range(9))
    def test_real_against_quadrature(self, r):
        val, _ = integrate.quad(lambda x: x**r * np.exp(-x * x / 2) / np.sqrt(2 * np.pi), -np.inf, np.inf)
        assert val == pytest.approx(gaussian_moment(r), abs=1e-8)

    @pytest.mark.parametrize("r,s", [(1, 1), (2, 2), (2, 1), (3, 1), (3, 3), (0, 2)])
    def test_complex_against_quadrature(self, r, s):
        # Z = rho e^{i theta} with density (1/pi) e^{-rho^2} rho
        def radial(rho):
            return rho ** (r + s) * np.exp(-rho * rho) * rho / np.pi

        def angular(t):
            return np.cos((r - s) * t)

        rad, _ = integrate.quad(radial, 0, np.inf)
        ang, _ = integrate.quad(angular, 0, 2 * np.pi)
        assert rad * ang == pytest.approx(complex_gaussian_moment(r, s), abs=1e-8)


class TestIdentityEvaluation:
    def test_symplectic(self):
        for n in range(1, 7):
            for r in range(7):
                terms = moment_terms(GroupFamily(Kind.SYMPLECTIC, n), 1, r)
                assert sum(c * d for _, c, d in terms) == (2 * n) ** r

    def test_so_even(self):
        for r in range(6):
            for n in range(r + 1, 8):
                terms = moment_terms(GroupFamily(Kind.SO_EVEN, n), 1, r)
                assert sum(c * d for _, c, d in terms) == (2 * n) ** r


class TestCLTReport:
    def test_symplectic_gaps(self):
        reps = clt_report(Kind.SYMPLECTIC, 1, 2, 0, [3, 6, 12])
        assert reps[0].gap == Fraction(1, 21) + Fraction(1, 14)
        assert reps[0].gap > reps[1].gap > reps[2].gap
        assert gaps_weakly_decreasing(reps)
        assert [rep.term_count for rep in reps] == [3, 3, 3]

    def test_unitary_gaps(self):
        reps = clt_report("u", 1, 1, 0, [2, 4])
        assert [rep.gap for rep in reps] == [Fraction(1, 2), Fraction(1, 4)]

    @pytest.mark.parametrize("kind", list(Kind))
    def test_r0(self, kind):
        for rep in clt_report(kind, 2, 0, 0, [2, 4, 8]):
            assert rep.gap == 0
            assert rep.exact == rep.limit == 1

    def test_regime_error_propagates(self):
        with pytest.raises(RegimeError):
            clt_report(Kind.SO_ODD, 1, 4, 0, [3, 8])

    @pytest.mark.parametrize("kind", list(Kind))
    @pytest.mark.parametrize("k", [1, 2])
    def test_gap_bounded_by_constant_over_size(self, kind, k):
        # measured against the matrix size N: n * gap is not monotone for SO(2n+1)
        for r in range(7):
            ns = list(range(r + 1, r + 25))
            sizes = [GroupFamily(kind, n).matrix_size for n in ns]
            reps = clt_report(kind, k, r, 0, ns)
            const = reps[0].gap * sizes[0]
            for size, rep in zip(sizes, reps):
                assert rep.gap <= const / size

    def test_gaps_decrease_for_unitary_diagonal(self):
        for r in range(1, 4):
            reps = clt_report(Kind.UNITARY, 1, r, r, range(2 * r, 2 * r + 10))
            assert gaps_weakly_decreasing(reps)
            assert reps[-1].limit == complex_gaussian_moment(r, r)


def test_terms_use_dims_from_repdims():
    for lam, _, d in moment_terms(GroupFamily(Kind.SO_EVEN, 5), 1, 4):
        assert d == dim_so_even(lam, 5)
