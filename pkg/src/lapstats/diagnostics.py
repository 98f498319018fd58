"""Per-graph diagnostic rows and family sweeps.

A row bundles the structural facts (edges, max degree), the spectrum-side
statistics, the distribution distances and a regime verdict. Sweeps map a
family over a size ladder; ladder entries may be computed concurrently but
rows are always assembled in ascending size order, so output never depends
on scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import exact, limits, spectra
from .errors import InputError
from .graphs import FamilySpec, Graph, make_family, max_degree

# families whose coefficient sequence stays Poisson-like (bounded variance);
# every other named family has variance growing with size
POISSON_FAMILIES = frozenset({"complete", "complete_bipartite"})

# largest vertex count for which the dense exact pipeline is used when no
# closed-form coefficient formula exists; the O(n^4) integer charpoly gets
# painful quickly, and the log-domain spectral expansion is accurate far
# beyond what the reported distances resolve
_EXACT_COEFF_CAP = 64

VERDICT_POISSON = "poisson-regime"
VERDICT_NORMAL = "normal-regime"
VERDICT_UNKNOWN = "indeterminate"


@dataclass
class DiagnosticsRow:
    family: str | None
    n: int
    edges: int
    max_degree: int
    mu: float
    sigma2: float
    sigma2_lower_bound: float
    clt_distance: float
    llt_distance: float
    poisson_distance: float | None
    verdict: str
    mu_per_vertex_err: float | None = None
    sigma2_per_vertex_err: float | None = None
    elapsed: float = 0.0  # seconds; never serialized


def _family_params(family: str, size: int | tuple[int, ...]) -> tuple[int, ...]:
    if isinstance(size, tuple):
        return size
    if family == "complete_bipartite":
        return (size, size)
    return (size,)


def _family_spectrum(family: str, params: tuple[int, ...], g: Graph) -> spectra.Spectrum:
    if family in spectra.CLOSED_FORM_SPECTRUM_FAMILIES:
        return spectra.closed_form_spectrum(family, *params)
    return spectra.numeric_spectrum(exact.laplacian_matrix(g))


def _family_probabilities(family: str, params: tuple[int, ...], g: Graph,
                          spectrum: spectra.Spectrum) -> list[float]:
    if family in exact.CLOSED_FORM_COEFF_FAMILIES:
        return limits.normalized_probabilities(exact.closed_form_coefficients(family, *params))
    if g.n <= _EXACT_COEFF_CAP:
        return limits.normalized_probabilities(exact.laplacian_coefficients(g))
    return limits.probabilities_from_spectrum(spectrum)


def _poisson_reference_for(family: str | None, params: tuple[int, ...]) -> tuple[float, int] | None:
    if family == "complete":
        return (1.0, 1)
    if family == "complete_bipartite" and params[0] == params[1]:
        return (2.0, 1)
    return None


def diagnose_family(family: str, size: int | tuple[int, ...],
                    seed: int | None = None) -> DiagnosticsRow:
    """Full diagnostic row for one family member."""
    started = time.perf_counter()
    params = _family_params(family, size)
    g = make_family(FamilySpec(family, params, seed))
    spectrum = _family_spectrum(family, params, g)
    stats = limits.mean_variance(spectrum)
    probs = _family_probabilities(family, params, g, spectrum)
    clt = limits.clt_distance(probs, stats)
    llt = limits.llt_distance(probs, stats)
    reference = _poisson_reference_for(family, params)
    poisson = None
    if reference is not None:
        poisson = limits.poisson_distance(probs, reference[0], reference[1])
    verdict = VERDICT_POISSON if family in POISSON_FAMILIES else VERDICT_NORMAL
    row = DiagnosticsRow(
        family=family,
        n=g.n,
        edges=g.edge_count,
        max_degree=max_degree(g),
        mu=stats.mu,
        sigma2=stats.sigma2,
        sigma2_lower_bound=limits.variance_lower_bound(g),
        clt_distance=clt,
        llt_distance=llt,
        poisson_distance=poisson,
        verdict=verdict,
    )
    if family in limits.FAMILY_LIMIT_CONSTANTS:
        mu_c, s2_c = limits.family_limit_constants(family)
        row.mu_per_vertex_err = abs(stats.mu / g.n - mu_c)
        row.sigma2_per_vertex_err = abs(stats.sigma2 / g.n - s2_c)
    row.elapsed = time.perf_counter() - started
    return row


def diagnose_graph(g: Graph) -> DiagnosticsRow:
    """Diagnostic row for an arbitrary graph (no family knowledge)."""
    started = time.perf_counter()
    spectrum = spectra.numeric_spectrum(exact.laplacian_matrix(g))
    stats = limits.mean_variance(spectrum)
    if g.n <= _EXACT_COEFF_CAP:
        probs = limits.normalized_probabilities(exact.laplacian_coefficients(g))
    else:
        probs = limits.probabilities_from_spectrum(spectrum)
    row = DiagnosticsRow(
        family=None,
        n=g.n,
        edges=g.edge_count,
        max_degree=max_degree(g),
        mu=stats.mu,
        sigma2=stats.sigma2,
        sigma2_lower_bound=limits.variance_lower_bound(g),
        clt_distance=limits.clt_distance(probs, stats),
        llt_distance=limits.llt_distance(probs, stats),
        poisson_distance=None,
        verdict=VERDICT_UNKNOWN,
    )
    row.elapsed = time.perf_counter() - started
    return row


def run_sweep(family: str, ladder, seed: int | None = None,
              jobs: int = 1) -> list[DiagnosticsRow]:
    """One diagnostic row per ladder entry, ordered by ascending size."""
    sizes = sorted(ladder)
    if not sizes:
        raise InputError("sweep ladder must be nonempty")
    if jobs < 1:
        raise InputError("jobs must be >= 1")
    if jobs == 1:
        return [diagnose_family(family, size, seed) for size in sizes]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(diagnose_family, family, size, seed) for size in sizes]
        return [f.result() for f in futures]
