import random

import pytest
from hypothesis import given, settings, strategies as st

from commtrace.algebra import DomainError, partitions_of, staircase_neighbors
from commtrace.tableaux import (
    brute_force_staircase,
    brute_force_updown,
    count_staircase,
    count_updown,
    staircase_counts,
    updown_counts,
)


def shapes_up_to(m):
    return [lam for j in range(m + 1) for lam in partitions_of(j)]


class TestCountUpdown:
    def test_empty_r2(self):
        assert count_updown((), 2) == 1

    def test_box_r3(self):
        assert count_updown((1,), 3) == 3

    def test_empty_r6_is_double_factorial(self):
        assert count_updown((), 6) == 15

    def test_box_r3_one_row(self):
        assert count_updown((1,), 3, 1) == 2

    def test_parity(self):
        assert count_updown((1,), 2) == 0
        assert count_updown((), 1) == 0

    def test_too_long_for_bound(self):
        with pytest.raises(DomainError):
            count_updown((1, 1), 4, 1)

    def test_layer_matches_single_counts(self):
        layer = updown_counts(6)
        for lam in shapes_up_to(6):
            assert layer.get(lam, 0) == count_updown(lam, 6)

    @pytest.mark.parametrize("r", range(9))
    def test_vanishing_and_bound(self, r):
        for lam in shapes_up_to(r + 2):
            f = count_updown(lam, r)
            if sum(lam) > r or (r - sum(lam)) % 2:
                assert f == 0
            assert f <= (2 * r) ** r

    @pytest.mark.parametrize("r", range(9))
    def test_stabilizes_in_height_bound(self, r):
        for lam in shapes_up_to(r):
            free = count_updown(lam, r)
            for n in range(max(r, len(lam), 1), r + 3):
                assert count_updown(lam, r, n) == free

    def test_bounded_counts_increase_with_bound(self):
        for lam in shapes_up_to(6):
            vals = [count_updown(lam, 6, n) for n in range(max(1, len(lam)), 8)]
            assert vals == sorted(vals)


class TestBruteForceUpdown:
    def test_examples(self):
        assert brute_force_updown((), 1) == 0
        assert brute_force_updown((2, 1), 3) == 2
        assert brute_force_updown((1,), 3) == 3
        assert brute_force_updown((1,), 3, 1) == 2

    def test_refuses_long_walks(self):
        with pytest.raises(DomainError):
            brute_force_updown((), 12)

    @pytest.mark.parametrize("bound", [1, 2, 3])
    def test_matches_dp_bounded(self, bound):
        for r in range(7):
            for lam in shapes_up_to(r):
                if len(lam) <= bound:
                    assert count_updown(lam, r, bound) == brute_force_updown(lam, r, bound)


WORKED_WALK = [(0, 0, 0), (0, 0, -1), (1, 0, -1), (1, 0, 0), (1, 1, 0), (1, 1, -1)]


class TestCountStaircase:
    def test_worked_walk_is_counted(self):
        eps = (-1, 1, 1, 1, -1)
        for prev, nxt, step in zip(WORKED_WALK, WORKED_WALK[1:], eps):
            assert nxt in staircase_neighbors(prev)
            assert sum(nxt) - sum(prev) == step
        assert count_staircase((1, 1, -1), eps) >= 1
        assert count_staircase((1, 1, -1), eps) == brute_force_staircase((1, 1, -1), eps)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_up_down(self, n):
        assert count_staircase((0,) * n, (1, -1)) == 1

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_two_up_two_down(self, n):
        assert count_staircase((0,) * n, (1, 1, -1, -1)) == 2

    def test_weight_mismatch(self):
        assert count_staircase((1, 0), (1, 1)) == 0

    def test_layer_matches_single_counts(self):
        eps = (1, -1, 1, 1, -1)
        for gam, c in staircase_counts(3, eps).items():
            assert count_staircase(gam, eps) == c


class TestBruteForceStaircase:
    def test_examples(self):
        assert brute_force_staircase((0, 0), (-1, 1)) == 1
        assert brute_force_staircase((0,), (1, -1, 1, -1)) == 1

    def test_refuses_long_types(self):
        with pytest.raises(DomainError):
            brute_force_staircase((0,), (1, -1) * 6)


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 4),
    st.lists(st.sampled_from([1, -1]), min_size=0, max_size=6),
    st.randoms(use_true_random=False),
)
def test_type_permutation_invariance(height, eps, rnd):
    eps = tuple(eps)
    shuffled = list(eps)
    rnd.shuffle(shuffled)
    assert staircase_counts(height, eps) == staircase_counts(height, tuple(shuffled))


def test_reachable_shapes_fit_in_r():
    for lam in updown_counts(7):
        assert len(lam) <= 7 and sum(lam) <= 7


def test_random_staircase_targets_match_brute_force():
    rnd = random.Random(5)
    for _ in range(50):
        n = rnd.randint(1, 4)
        eps = tuple(rnd.choice((1, -1)) for _ in range(rnd.randint(0, 7)))
        for gam in staircase_counts(n, eps):
            assert count_staircase(gam, eps) == brute_force_staircase(gam, eps)
