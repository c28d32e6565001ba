import itertools
from fractions import Fraction

import pytest

from commtrace.algebra import DomainError
from commtrace.finite_groups import BUILTIN_GROUPS, finite_commutator_average, get_group


def literal_average(group, character, k):
    """Sum the character over every 2k-tuple, one tuple at a time."""
    chi = group.characters[character]
    total = 0
    for tup in itertools.product(range(group.order), repeat=2 * k):
        w = group.identity
        for y, z in zip(tup[0::2], tup[1::2]):
            w = group.mul(w, group.commutator(y, z))
        total += chi[w]
    return Fraction(total, group.order ** (2 * k))


@pytest.mark.parametrize("name", sorted(BUILTIN_GROUPS))
def test_tables_are_valid(name):
    group = get_group(name)
    group.validate()
    assert sum(d * d for d in group.dimensions) == group.order


def test_orders():
    assert get_group("s3").order == 6
    assert get_group("Q8").order == 8
    assert sorted(get_group("q8").dimensions) == [1, 1, 1, 1, 2]


def test_unknown_group():
    with pytest.raises(DomainError):
        get_group("a5")


def test_s3_examples():
    s3 = get_group("s3")
    trivial = s3.character_names.index("trivial")
    standard = s3.character_names.index("standard")
    assert finite_commutator_average(s3, trivial, 1) == 1
    assert finite_commutator_average(s3, standard, 1) == Fraction(1, 2)
    assert finite_commutator_average(s3, standard, 2) == Fraction(1, 8)


@pytest.mark.parametrize("name,k", [("s3", 1), ("s3", 2), ("q8", 1)])
def test_regrouped_sum_equals_literal_enumeration(name, k):
    group = get_group(name)
    for idx in range(len(group.characters)):
        assert finite_commutator_average(group, idx, k) == literal_average(group, idx, k)


@pytest.mark.parametrize("name", sorted(BUILTIN_GROUPS))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_inverse_dimension_power(name, k):
    group = get_group(name)
    for idx, d in enumerate(group.dimensions):
        assert finite_commutator_average(group, idx, k) == Fraction(1, d ** (2 * k - 1))


def test_guard():
    with pytest.raises(DomainError):
        finite_commutator_average(get_group("s3"), 0, 6)
    with pytest.raises(DomainError):
        finite_commutator_average(get_group("s3"), 0, 0)


def test_broken_table_is_rejected():
    import dataclasses

    s3 = get_group("s3")
    bad = dataclasses.replace(s3, characters=s3.characters[:2])
    with pytest.raises(ValueError):
        bad.validate()
