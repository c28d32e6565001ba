"""Irrep dimensions for Sp(2n), SO(2n), SO(2n+1) and U(n), computed two ways."""
from commtrace.repdims import (
    Kind,
    dim_so_even,
    dim_so_odd,
    dim_symplectic,
    dim_unitary,
    hook_content_dimension,
    weyl_dimension,
)

# Defining and second-power representations of Sp(6).
print(dim_symplectic((1,), 3), dim_symplectic((2,), 3), dim_symplectic((1, 1), 3))

# The Weyl product over positive roots and the hook-content product give the
# same integer; every public dimension call checks this.
lam = (3, 2, 1)
for n in range(3, 7):
    weyl = weyl_dimension(Kind.SYMPLECTIC, lam + (0,) * (n - 3))
    hook = hook_content_dimension(lam, 2 * n, symplectic=True)
    print(n, weyl, hook)

# Orthogonal groups: the traceless symmetric square of SO(N) has dimension
# (N-1)(N+2)/2.
for n in range(2, 6):
    print(2 * n, dim_so_even((2,), n), 2 * n + 1, dim_so_odd((2,), n))

# Unitary labels may be negative; shifting every entry is a determinant
# twist and leaves the dimension alone.
print(dim_unitary((1, 0, 0, 0, -1), 5), dim_unitary((2, 1, 1, 1, 0), 5))

# Dimensions of nontrivial labels grow at least linearly in n. This is what
# makes every term except the empty one vanish in the limit.
for n in (4, 8, 16, 32):
    print(n, dim_symplectic((2, 1), n), dim_symplectic((2, 1), n) / n)
