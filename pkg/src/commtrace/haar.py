"""Haar sampling on U(n), SO(N) and the compact symplectic group USp(2n).

Samplers orthonormalize a Gaussian matrix with QR and then rotate each
column by the phase of the matching diagonal entry of R, which makes the
result exactly Haar distributed rather than merely orthonormal.

Compact symplectic elements are 2n x 2n complex matrices of the form
[[A, B], [-conj(B), conj(A)]], satisfying U^T J U = J with J = [[0, I], [-I, 0]].
A quaternion a + bi + cj + dk sits in that form as [[a+bi, c+di], [-c+di, a-bi]].

Monte Carlo sample ``i`` always draws from its own Philox stream keyed by
``(seed, i)``, and chunks are laid out by sample index only, so results do
not depend on how many worker processes are used.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import DomainError
from .repdims import GroupFamily, Kind

MAX_RESAMPLES = 10
CHUNK_SIZE = 2000

HIST_LOW = -4.05
HIST_HIGH = 4.05
HIST_BINS = 81


@dataclass(frozen=True, eq=False)
class GroupElement:
    group: GroupFamily
    matrix: np.ndarray

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.matrix.conj().T)


def symplectic_form(n: int) -> np.ndarray:
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Counter-based generator for Monte Carlo sample ``index``."""
    if not 0 <= seed < 2**64:
        raise DomainError("seed must fit in an unsigned 64-bit integer")
    return np.random.Generator(np.random.Philox(key=(index << 64) | seed))


# --- samplers --------------------------------------------------------------


def _gaussian(group: GroupFamily, rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` Gaussian matrices over the base field of ``group``."""
    if group.kind is Kind.UNITARY:
        n = group.n
        return rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    if group.kind is Kind.SYMPLECTIC:
        n = group.n
        a, b, c, d = rng.standard_normal((4, count, n, n))
        top = a + 1j * b
        off = c + 1j * d
        return np.concatenate(
            [np.concatenate([top, off], axis=2), np.concatenate([-off.conj(), top.conj()], axis=2)],
            axis=1,
        )
    size = group.matrix_size
    return rng.standard_normal((count, size, size))


def _interleave(n: int) -> np.ndarray:
    perm = np.empty(2 * n, dtype=int)
    perm[0::2] = np.arange(n)
    perm[1::2] = np.arange(n, 2 * n)
    return perm


def _orthonormalize(group: GroupFamily, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Phase-corrected Q factors of a stack of Gaussian matrices, plus a degeneracy mask."""
    if group.kind is Kind.SYMPLECTIC:
        # columns j and n+j together form one quaternionic column; ordering them
        # adjacently makes complex QR coincide with quaternionic QR
        perm = _interleave(group.n)
        q, r = np.linalg.qr(z[:, :, perm])
    else:
        q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=1, axis2=2)
    mag = np.abs(diag)
    scale = np.abs(z).max(axis=(1, 2))
    bad = mag.min(axis=1) <= 1e-12 * scale
    phase = np.where(mag > 0, diag / np.where(mag > 0, mag, 1), 1)
    q = q * phase[:, None, :]
    if group.kind is Kind.SYMPLECTIC:
        q = q[:, :, np.argsort(perm)]
    elif group.kind in (Kind.SO_EVEN, Kind.SO_ODD):
        # negating a fixed column maps Haar on the det=-1 coset onto Haar on SO
        flip = np.linalg.det(q) < 0
        q[flip, :, 0] *= -1
    return q, bad


def sample_batch(group: GroupFamily, rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` independent Haar elements of ``group`` as a (count, N, N) array."""
    z = _gaussian(group, rng, count)
    q, bad = _orthonormalize(group, z)
    for _ in range(MAX_RESAMPLES):
        if not bad.any():
            return q
        idx = np.flatnonzero(bad)
        q_new, bad_new = _orthonormalize(group, _gaussian(group, rng, len(idx)))
        q[idx] = q_new
        bad[idx] = bad_new
    raise RuntimeError(f"{group}: Gaussian matrix stayed rank-deficient after {MAX_RESAMPLES} redraws")


def sample(group: GroupFamily, rng: np.random.Generator) -> GroupElement:
    """One Haar-distributed element of ``group``."""
    return GroupElement(group, sample_batch(group, rng, 1)[0])


def membership_residuals(group: GroupFamily, m: np.ndarray) -> dict[str, float]:
    """Max-norm residuals of the defining equations of ``group`` at ``m``."""
    m = np.asarray(m)
    size = group.matrix_size
    if m.shape != (size, size):
        raise DomainError(f"expected a {size}x{size} matrix for {group}, got {m.shape}")
    eye = np.eye(size)
    out = {"unitarity": float(np.abs(m.conj().T @ m - eye).max())}
    if group.kind in (Kind.SO_EVEN, Kind.SO_ODD):
        out["imaginary"] = float(np.abs(np.imag(m)).max())
        out["determinant"] = float(abs(np.linalg.det(m) - 1))
    elif group.kind is Kind.SYMPLECTIC:
        j = symplectic_form(group.n)
        out["symplectic"] = float(np.abs(m.T @ j @ m - j).max())
    return out


TOLERANCES = {"unitarity": 1e-10, "imaginary": 0.0, "determinant": 1e-8, "symplectic": 1e-8}


def is_member(group: GroupFamily, m: np.ndarray) -> bool:
    return all(v <= TOLERANCES[key] for key, v in membership_residuals(group, m).items())


# --- commutator traces ----------------------------------------------------


def commutator_product_trace(xs, ys) -> complex:
    """Tr([x1,y1]...[xk,yk]) with [x,y] = x^-1 y^-1 x y.

    Accepts :class:`GroupElement` lists; inverses are conjugate transposes.
    """
    if len(xs) != len(ys) or not xs:
        raise DomainError("xs and ys must be nonempty lists of equal length")
    group = xs[0].group
    size = group.matrix_size
    for g in list(xs) + list(ys):
        if g.group != group or g.matrix.shape != (size, size):
            raise DomainError("all elements must come from the same group")
    w = np.eye(size, dtype=complex)
    for x, y in zip(xs, ys):
        x, y = x.matrix, y.matrix
        w = w @ x.conj().T @ y.conj().T @ x @ y
    return complex(np.trace(w))


def _batch_commutator_traces(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Traces for stacks xs, ys of shape (batch, k, N, N)."""
    w = None
    for i in range(xs.shape[1]):
        x, y = xs[:, i], ys[:, i]
        c = np.swapaxes(x.conj(), 1, 2) @ np.swapaxes(y.conj(), 1, 2) @ x @ y
        w = c if w is None else w @ c
    return np.trace(w, axis1=1, axis2=2)


def _chunk_traces(args) -> np.ndarray:
    kind, n, k, seed, start, stop = args
    group = GroupFamily(Kind(kind), n)
    size = group.matrix_size
    dtype = float if group.kind in (Kind.SO_EVEN, Kind.SO_ODD) else complex
    mats = np.empty((stop - start, 2 * k, size, size), dtype=dtype)
    for row, i in enumerate(range(start, stop)):
        mats[row] = sample_batch(group, sample_rng(seed, i), 2 * k)
    return _batch_commutator_traces(mats[:, 0::2], mats[:, 1::2]).astype(complex)


def sample_commutator_traces(
    group: GroupFamily, k: int, sample_count: int, seed: int, worker_count: int = 1
) -> np.ndarray:
    """Traces of ``sample_count`` independent commutator products, in sample order."""
    if sample_count < 1:
        raise DomainError("sample_count must be at least 1")
    if k < 1:
        raise DomainError("k must be at least 1")
    if worker_count < 1:
        raise DomainError("worker_count must be at least 1")
    chunks = [
        (group.kind.value, group.n, k, seed, start, min(start + CHUNK_SIZE, sample_count))
        for start in range(0, sample_count, CHUNK_SIZE)
    ]
    if worker_count == 1 or len(chunks) == 1:
        parts = [_chunk_traces(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=worker_count) as pool:
            parts = list(pool.map(_chunk_traces, chunks))
    traces = np.concatenate(parts)
    if group.is_real_trace:
        # Sp and SO traces are real; drop rounding noise in the imaginary part
        traces = traces.real.astype(complex)
    return traces


# --- moment estimation ----------------------------------------------------


@dataclass
class MomentEstimate:
    r: int
    s: int
    mean: complex
    stderr: float | None


@dataclass
class Histogram:
    underflow: int
    counts: list[int]
    overflow: int
    low: float = HIST_LOW
    high: float = HIST_HIGH

    @classmethod
    def of(cls, values: np.ndarray) -> "Histogram":
        edges = np.linspace(HIST_LOW, HIST_HIGH, HIST_BINS + 1)
        counts, _ = np.histogram(values, bins=edges)
        return cls(
            underflow=int(np.count_nonzero(values < HIST_LOW)),
            counts=[int(c) for c in counts],
            overflow=int(np.count_nonzero(values > HIST_HIGH)),
        )

    def to_dict(self) -> dict:
        return {
            "low": self.low,
            "high": self.high,
            "bins": len(self.counts),
            "underflow": self.underflow,
            "counts": self.counts,
            "overflow": self.overflow,
        }


@dataclass
class EmpiricalMoments:
    group: GroupFamily
    k: int
    sample_count: int
    seed: int
    moments: list[MomentEstimate]
    histogram_re: Histogram
    histogram_im: Histogram
    traces: np.ndarray = field(repr=False, default=None)

    def get(self, r: int, s: int = 0) -> MomentEstimate:
        for m in self.moments:
            if (m.r, m.s) == (r, s):
                return m
        raise KeyError((r, s))

    def to_dict(self) -> dict:
        return {
            "group": self.group.kind.value,
            "n": self.group.n,
            "k": self.k,
            "seed": self.seed,
            "samples": self.sample_count,
            "moments": [
                {
                    "r": m.r,
                    "s": m.s,
                    "mean_re": float(m.mean.real),
                    "mean_im": float(m.mean.imag),
                    "stderr": m.stderr,
                }
                for m in self.moments
            ],
            "histogram_re": self.histogram_re.to_dict(),
            "histogram_im": self.histogram_im.to_dict(),
        }


def mean_and_stderr(values: np.ndarray) -> tuple[complex, float | None]:
    """Sample mean and its standard error (None for a single sample).

    Uses two passes with numpy's pairwise summation.
    """
    values = np.asarray(values, dtype=complex)
    count = len(values)
    mean = complex(np.sum(values) / count)
    if count < 2:
        return mean, None
    dev = np.abs(values - mean) ** 2
    sd = math.sqrt(float(np.sum(dev)) / (count - 1))
    return mean, sd / math.sqrt(count)


def estimate_moments(
    group: GroupFamily,
    k: int,
    r_max: int,
    s_max: int = 0,
    sample_count: int = 10_000,
    seed: int = 0,
    worker_count: int = 1,
) -> EmpiricalMoments:
    """Empirical E[T^r conj(T)^s] for r <= r_max, s <= s_max with standard errors.

    For Sp and SO the trace is real and ``s_max`` is forced to 0.
    """
    if r_max < 0 or s_max < 0:
        raise DomainError("r_max and s_max must be nonnegative")
    if group.is_real_trace:
        s_max = 0
    traces = sample_commutator_traces(group, k, sample_count, seed, worker_count)
    conj = traces.conj()
    estimates = []
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            mean, se = mean_and_stderr(traces**r * conj**s)
            estimates.append(MomentEstimate(r, s, mean, se))
    return EmpiricalMoments(
        group=group,
        k=k,
        sample_count=sample_count,
        seed=seed,
        moments=estimates,
        histogram_re=Histogram.of(traces.real),
        histogram_im=Histogram.of(traces.imag),
        traces=traces,
    )


def standardized_shape(values: np.ndarray) -> dict[str, float]:
    """Sample skewness and kurtosis of real data with their large-sample Gaussian standard errors."""
    x = np.asarray(values, dtype=float)
    count = len(x)
    c = x - x.mean()
    m2 = np.mean(c**2)
    return {
        "skewness": float(np.mean(c**3) / m2**1.5),
        "skewness_se": math.sqrt(6 / count),
        "kurtosis": float(np.mean(c**4) / m2**2),
        "kurtosis_se": math.sqrt(24 / count),
    }


def variance_with_stderr(values: np.ndarray) -> tuple[float, float]:
    """Unbiased sample variance and its standard error sqrt((m4 - m2^2) / N)."""
    x = np.asarray(values, dtype=float)
    count = len(x)
    c = x - x.mean()
    m2 = float(np.mean(c**2))
    m4 = float(np.mean(c**4))
    return m2 * count / (count - 1), math.sqrt(max(m4 - m2 * m2, 0.0) / count)
