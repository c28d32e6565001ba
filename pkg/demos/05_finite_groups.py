"""Averages of irreducible characters over commutator products in S3 and Q8."""
from fractions import Fraction

from commtrace.finite_groups import BUILTIN_GROUPS, commutator_product_distribution, finite_commutator_average

for name, group in BUILTIN_GROUPS.items():
    group.validate()
    print(name, "order", group.order, "dims", group.dimensions)
    # how often each element occurs as a single commutator
    print(" ", dict(commutator_product_distribution(group, 1)))
    for k in (1, 2, 3):
        row = []
        for idx, d in enumerate(group.dimensions):
            avg = finite_commutator_average(group, idx, k)
            row.append(f"{avg}{'' if avg == Fraction(1, d ** (2 * k - 1)) else '!'}")
        print("  k =", k, row)
