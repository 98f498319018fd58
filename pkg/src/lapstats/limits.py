"""Coefficient-distribution statistics: mean and variance from the spectrum,
normalized probabilities from exact coefficients, and the distances used to
diagnose normal versus Poisson limiting behavior.

Probabilities are always computed in the log domain so that coefficient
vectors with tens of thousands of bits normalize without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graphs import Graph, max_degree
from .spectra import Spectrum

_SQRT5 = math.sqrt(5.0)

FAMILY_LIMIT_CONSTANTS = {
    "path": (1.0 / (2.0 * _SQRT5), 1.0 / (5.0 * _SQRT5)),
    "cycle": (1.0 / _SQRT5, 2.0 / (5.0 * _SQRT5)),
}


@dataclass(frozen=True)
class LimitStats:
    """Mean and variance of the coefficient distribution of a degree-n
    polynomial with nonnegative real roots."""

    mu: float
    sigma2: float
    n: int

    @property
    def sigma(self) -> float:
        return math.sqrt(self.sigma2)


def mean_variance(s: Spectrum) -> LimitStats:
    """mu = sum 1/(1 + lam), sigma2 = sum lam/(1 + lam)^2 over the spectrum.

    Compensated summation keeps the result independent of summation order.
    """
    for v in s.values:
        if v < 0.0:
            raise InputError(f"negative eigenvalue {v!r}")
    mu = math.fsum(1.0 / (1.0 + v) for v in s.values)
    sigma2 = math.fsum(v / ((1.0 + v) * (1.0 + v)) for v in s.values)
    return LimitStats(mu=mu, sigma2=sigma2, n=len(s))


def normalized_probabilities(coeffs) -> list[float]:
    """p[k] = c[k] / sum(c), computed as exp(log c[k] - logsumexp).

    Zero coefficients map to exactly 0.0. Exact integer inputs of any size
    are fine; math.log takes arbitrary-precision integers directly.
    """
    logs: list[float | None] = []
    for c in coeffs:
        if c < 0:
            raise InputError(f"negative coefficient {c!r}")
        logs.append(math.log(c) if c > 0 else None)
    finite = [l for l in logs if l is not None]
    if not finite:
        raise InputError("all coefficients are zero")
    top = max(finite)
    lse = top + math.log(math.fsum(math.exp(l - top) for l in finite))
    return [math.exp(l - lse) if l is not None else 0.0 for l in logs]


def probabilities_from_spectrum(s: Spectrum) -> list[float]:
    """Normalized coefficient distribution of prod(x + lam), expanded in the
    log domain straight from the eigenvalues.

    Serves families whose spectra are known in closed form at sizes where
    exact coefficient formulas are not available.
    """
    logc = np.array([0.0])
    for lam in sorted(s.values):
        if lam < 0.0:
            raise InputError(f"negative eigenvalue {lam!r}")
        shifted = np.concatenate(([-np.inf], logc))
        if lam > 0.0:
            shifted[:-1] = np.logaddexp(shifted[:-1], logc + math.log(lam))
        logc = shifted
    top = float(np.max(logc))
    lse = top + math.log(float(np.sum(np.exp(logc - top))))
    probs = np.exp(logc - lse)
    return [float(p) if math.isfinite(lc) else 0.0 for p, lc in zip(probs, logc)]


def _gauss_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def _gauss_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def clt_distance(probs, stats: LimitStats) -> float:
    """Kolmogorov distance between the discrete CDF and the Gaussian with
    the distribution's own mean and standard deviation.

    The supremum over the real line is attained just before or at a jump of
    the step CDF, so both one-sided gaps are checked at every k.
    """
    if stats.sigma2 <= 0.0:
        raise InputError("degenerate variance")
    sigma = stats.sigma
    worst = 0.0
    cdf = 0.0
    for k, pk in enumerate(probs):
        before = cdf
        cdf += pk
        gauss = _gauss_cdf((k - stats.mu) / sigma)
        worst = max(worst, abs(cdf - gauss), abs(before - gauss))
    return worst


def llt_distance(probs, stats: LimitStats) -> float:
    """Sup-norm gap between sigma * p(floor(mu + x * sigma)) and the
    standard Gaussian density.

    Evaluated on the grid of cell boundaries x_k = (k - mu)/sigma for
    k = 0..n+1 (both one-sided limits), at x = 0 when it falls inside a
    cell, and via the density tails beyond the support. This is a grid
    approximation bounding the true supremum from below.
    """
    if stats.sigma2 <= 0.0:
        raise InputError("degenerate variance")
    sigma = stats.sigma
    n = len(probs) - 1
    worst = 0.0
    for k in range(n + 2):
        x = (k - stats.mu) / sigma
        density = _gauss_pdf(x)
        at_k = probs[k] if k <= n else 0.0
        left_of_k = probs[k - 1] if k >= 1 else 0.0
        worst = max(worst, abs(sigma * at_k - density), abs(sigma * left_of_k - density))
    mode_cell = math.floor(stats.mu)
    if 0 <= mode_cell <= n:
        worst = max(worst, abs(sigma * probs[mode_cell] - _gauss_pdf(0.0)))
    return worst


def poisson_reference(mean: float, k_shift: int, length: int) -> list[float]:
    """Shifted Poisson reference r[k] = exp(-mean) mean^(k-shift)/(k-shift)!
    for k >= shift, else 0."""
    if mean <= 0.0:
        raise InputError("mean must be positive")
    if k_shift < 0:
        raise InputError("k_shift must be nonnegative")
    ref = [0.0] * length
    term = math.exp(-mean)
    for k in range(k_shift, length):
        ref[k] = term
        term *= mean / (k - k_shift + 1)
    return ref


def poisson_distance(probs, mean: float, k_shift: int) -> float:
    ref = poisson_reference(mean, k_shift, len(probs))
    return max(abs(p - r) for p, r in zip(probs, ref))


def variance_lower_bound(g: Graph) -> float:
    """2|E| / (1 + 2 * max degree)^2, a lower bound on sigma2."""
    delta = max_degree(g)
    return 2.0 * g.edge_count / (1.0 + 2.0 * delta) ** 2


def cone_variance_lower_bound(base_n: int, d: int) -> float:
    """Lower bound on sigma2 of the cone over a d-regular graph on base_n
    vertices: (base_n - 1)(1 + 2d)/(2 + 2d)^2."""
    return (base_n - 1) * (1.0 + 2.0 * d) / (2.0 + 2.0 * d) ** 2


def hypercube_variance_lower_bound(d: int) -> float:
    """Lower bound 2d(2^d - 1)/(1 + 2d)^2 on sigma2 of the d-cube."""
    return 2.0 * d * (2 ** d - 1) / (1.0 + 2.0 * d) ** 2


def family_limit_constants(family: str) -> tuple[float, float]:
    """Advertised per-vertex limits (mu/n, sigma2/n) for paths and cycles."""
    try:
        return FAMILY_LIMIT_CONSTANTS[family]
    except KeyError:
        raise InputError(f"no limit constants for family {family!r}") from None
