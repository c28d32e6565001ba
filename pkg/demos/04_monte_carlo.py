"""Sampling Haar elements and comparing empirical moments with the exact ones."""
import numpy as np

from commtrace.haar import estimate_moments, membership_residuals, sample, standardized_shape
from commtrace.moments import moment
from commtrace.repdims import GroupFamily, Kind

rng = np.random.default_rng(0)

# Each sampler lands in its group up to rounding.
for group in (GroupFamily(Kind.UNITARY, 4), GroupFamily(Kind.SO_ODD, 3), GroupFamily(Kind.SYMPLECTIC, 2)):
    g = sample(group, rng)
    print(group, membership_residuals(group, g.matrix))

# Empirical against exact moments. Smaller sample counts than the test suite
# keep this quick; the standard errors show how far off a run can be.
for group in (GroupFamily(Kind.SYMPLECTIC, 5), GroupFamily(Kind.SO_EVEN, 5)):
    em = estimate_moments(group, k=1, r_max=4, sample_count=20_000, seed=1)
    for est in em.moments[1:]:
        exact = float(moment(group, 1, est.r))
        print(group, est.r, f"{est.mean.real:.4f} +- {est.stderr:.4f}", f"exact {exact:.4f}")

em = estimate_moments(GroupFamily(Kind.UNITARY, 10), k=2, r_max=2, s_max=2, sample_count=20_000, seed=1)
for est in em.moments:
    exact = float(moment(GroupFamily(Kind.UNITARY, 10), 2, est.r, est.s))
    print((est.r, est.s), f"{est.mean.real:+.4f}{est.mean.imag:+.4f}j +- {est.stderr:.4f}", f"exact {exact:.4f}")

# Shape of the distribution for Sp(20).
em = estimate_moments(GroupFamily(Kind.SYMPLECTIC, 10), k=1, r_max=0, sample_count=20_000, seed=2)
print(standardized_shape(em.traces.real))

# A coarse text histogram of the real part of the trace.
counts = np.array(em.histogram_re.counts[:80]).reshape(16, 5).sum(axis=1)
for i, c in enumerate(counts):
    lo = -4.05 + 0.5 * i
    print(f"{lo:+.2f} {'#' * int(60 * c / counts.max())}")
