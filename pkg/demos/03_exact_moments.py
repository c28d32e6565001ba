"""Exact moments of Tr([x1,y1]...[xk,yk]) and their distance to Gaussian moments."""
from commtrace.moments import (
    clt_report,
    gaussian_moment,
    moment_so_odd,
    moment_symplectic,
    moment_terms,
    moment_unitary,
)
from commtrace.repdims import GroupFamily, Kind

# Second moment for Sp(6), one commutator: 1 + 1/21 + 1/14.
print(moment_symplectic(3, 1, 2))
for label, count, dim in moment_terms(GroupFamily(Kind.SYMPLECTIC, 3), 1, 2):
    print(label, count, dim)

# The mean is 1/(2n)^(2k-1): more commutators push it to zero faster.
for k in (1, 2, 3):
    print(k, moment_symplectic(5, k, 1))

# Odd orthogonal and unitary analogues.
print(moment_so_odd(5, 1, 2))
print(moment_unitary(10, 1, 1, 1), moment_unitary(10, 1, 2, 2))

# Gap to the standard normal moments as n grows.
for r in (2, 3, 4, 6):
    reps = clt_report(Kind.SYMPLECTIC, 1, r, 0, [r + 1, 2 * (r + 1), 4 * (r + 1), 8 * (r + 1)])
    print(f"r={r} limit={gaussian_moment(r)}", [f"{float(rep.gap):.2e}" for rep in reps])

# For U(n) the limit is the standard complex normal: E[Z^r conj(Z)^s] = r! if r == s.
for r, s in ((1, 1), (2, 2), (3, 3), (2, 1)):
    reps = clt_report(Kind.UNITARY, 1, r, s, [8, 16, 32])
    print((r, s), [f"{float(rep.exact):.5f}" for rep in reps], reps[0].limit)
