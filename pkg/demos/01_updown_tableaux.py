"""Up-down tableaux: walks on Young diagrams that add or remove one box per step."""
from commtrace.algebra import partition_neighbors
from commtrace.tableaux import brute_force_updown, count_updown, updown_counts

# From the empty diagram the only move is to add a box; from (1) there are three.
print(partition_neighbors(()))
print(partition_neighbors((1,)))

# With at most one row, (1,1) is out of reach.
print(partition_neighbors((1,), max_length=1))

# Walks that return to the empty diagram pair their steps into matchings,
# so their number is (r-1)!! for even r and 0 for odd r.
for r in range(9):
    print(r, count_updown((), r))

# The full final layer of the dynamic program for r = 4.
for shape, count in sorted(updown_counts(4).items()):
    print(shape, count)

# The explicit enumerator agrees, and a height bound only matters once r
# exceeds it.
print(count_updown((2, 1), 5), brute_force_updown((2, 1), 5))
for n in range(2, 7):
    print("at most", n, "rows:", count_updown((2, 1), 5, n))
