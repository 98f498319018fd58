"""Laplacian spectra: a dense symmetric eigensolver, closed forms for named
families, spectral transforms for joins and cones, and eigenvalue bounds.

The numeric solver is a cyclic Jacobi iteration. It is plenty at desk scale
(dense n up to a few hundred), keeps an explicit off-diagonal tolerance and
sweep cap, and fails loudly instead of returning junk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InputError
from .graphs import Graph, max_degree

DEFAULT_TOL = 1e-12
SWEEP_CAP = 100
ZERO_MATCH_TOL = 1e-8

CLOSED_FORM_SPECTRUM_FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete",
    "hypercube",
    "matching_union",
    "complete_bipartite",
    "wheel",
)


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted descending; ``exact`` marks integer-valued
    closed forms (no floating error in the values)."""

    values: tuple[float, ...]
    exact: bool = False

    def __len__(self) -> int:
        return len(self.values)


def _sorted_spectrum(values, exact: bool) -> Spectrum:
    return Spectrum(tuple(sorted((float(v) for v in values), reverse=True)), exact)


def numeric_spectrum(matrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.

    Iterates full sweeps until the off-diagonal Frobenius norm drops below
    tol * scale (scale = Frobenius norm of the input) or the sweep cap is
    hit. Tiny negative results within 10 * tol * scale of zero are snapped
    to 0, since the matrices of interest are positive semi-definite.
    """
    if tol <= 0:
        raise InputError(f"tolerance must be positive, got {tol}")
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise InputError("matrix must be symmetric")
    n = a.shape[0]
    if n == 0:
        return Spectrum((), exact=False)
    if n == 1:
        return Spectrum((float(a[0, 0]),), exact=False)
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return Spectrum((0.0,) * n, exact=False)
    indices = np.arange(n)
    off_diag = ~np.eye(n, dtype=bool)
    for _ in range(SWEEP_CAP):
        # norm of the actual off-diagonal entries; subtracting the diagonal
        # mass from the total would cancel catastrophically near convergence
        off = float(np.linalg.norm(a[off_diag]))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                app, aqq = float(a[p, p]), float(a[q, q])
                tau = (aqq - app) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 1.0 / (2.0 * tau)
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                rest = (indices != p) & (indices != q)
                aip = a[rest, p].copy()
                aiq = a[rest, q].copy()
                a[rest, p] = a[p, rest] = c * aip - s * aiq
                a[rest, q] = a[q, rest] = s * aip + c * aiq
    else:
        raise ConvergenceError(
            f"Jacobi sweep cap {SWEEP_CAP} reached (off-diagonal norm {off:.3e})"
        )
    snap = 10.0 * tol * scale
    values = [0.0 if -snap < v < 0.0 else float(v) for v in np.diag(a)]
    return _sorted_spectrum(values, exact=False)


def closed_form_spectrum(family: str, *params: int) -> Spectrum:
    """Known spectrum of a named family; exact where the values are integers,
    double-precision trigonometric values for paths, cycles and wheels."""
    if family == "path":
        (n,) = params
        if n < 1:
            raise InputError("path needs n >= 1")
        return _sorted_spectrum(
            (4.0 * math.sin(j * math.pi / (2 * n)) ** 2 for j in range(n)), exact=False
        )
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise InputError("cycle needs n >= 3")
        return _sorted_spectrum(
            (4.0 * math.sin(j * math.pi / n) ** 2 for j in range(n)), exact=False
        )
    if family == "star":
        (n,) = params
        if n < 1:
            raise InputError("star needs n >= 1")
        if n == 1:
            return Spectrum((0.0,), exact=True)
        return _sorted_spectrum([0, n] + [1] * (n - 2), exact=True)
    if family == "complete":
        (n,) = params
        if n < 1:
            raise InputError("complete needs n >= 1")
        return _sorted_spectrum([0] + [n] * (n - 1), exact=True)
    if family == "hypercube":
        (d,) = params
        values: list[int] = []
        for k in range(d + 1):
            values.extend([2 * k] * math.comb(d, k))
        return _sorted_spectrum(values, exact=True)
    if family == "matching_union":
        (copies,) = params
        if copies < 1:
            raise InputError("matching_union needs >= 1 copies")
        return _sorted_spectrum([0] * copies + [2] * copies, exact=True)
    if family == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise InputError("complete_bipartite needs both parts >= 1")
        return _sorted_spectrum([0, m + n] + [n] * (m - 1) + [m] * (n - 1), exact=True)
    if family == "wheel":
        (n,) = params
        if n < 3:
            raise InputError("wheel needs rim size >= 3")
        return cone_spectrum(closed_form_spectrum("cycle", n), n)
    raise InputError(f"no closed-form spectrum for family {family!r}")


def _drop_one_zero(s: Spectrum, tol: float, what: str) -> list[float]:
    values = list(s.values)
    smallest = values[-1]
    if abs(smallest) > tol:
        raise InputError(f"{what} spectrum has no zero eigenvalue (smallest {smallest!r})")
    return values[:-1]


def join_spectrum(s1: Spectrum, n1: int, s2: Spectrum, n2: int,
                  tol: float = ZERO_MATCH_TOL) -> Spectrum:
    """Laplacian spectrum of the join, from the two input spectra.

    Consumes exactly one zero eigenvalue of each input (the smallest), adds
    0 and n1 + n2, and shifts the remaining eigenvalues by the opposite
    vertex count.
    """
    if len(s1) != n1 or len(s2) != n2:
        raise InputError("spectrum length must equal the stated vertex count")
    if n1 < 1 or n2 < 1:
        raise InputError("join needs nonempty parts")
    rest1 = _drop_one_zero(s1, tol, "first")
    rest2 = _drop_one_zero(s2, tol, "second")
    values = [0.0, float(n1 + n2)]
    values.extend(n2 + v for v in rest1)
    values.extend(n1 + v for v in rest2)
    return _sorted_spectrum(values, exact=s1.exact and s2.exact)


def cone_spectrum(s: Spectrum, n: int, tol: float = ZERO_MATCH_TOL) -> Spectrum:
    """Spectrum of the cone over a graph with the given spectrum."""
    return join_spectrum(s, n, Spectrum((0.0,), exact=True), 1, tol=tol)


def gershgorin_bound(g: Graph) -> int:
    """Upper bound 2 * max degree on every Laplacian eigenvalue."""
    return 2 * max_degree(g)


def anderson_morley_bound(g: Graph) -> int:
    """Upper bound max(deg u + deg v) over edges on the largest eigenvalue."""
    if not g.edges:
        raise InputError("anderson_morley_bound needs at least one edge")
    deg = g.degrees()
    return max(deg[u] + deg[v] for u, v in g.edges)


def trace_check(s: Spectrum, g: Graph) -> float:
    """|sum of eigenvalues - 2|E||, a solver health metric."""
    return abs(math.fsum(s.values) - 2.0 * g.edge_count)


def expand_from_spectrum(values) -> list[float]:
    """Float coefficients of prod(x + lam); for reconstruction cross-checks."""
    coeffs = [1.0]
    for lam in values:
        lam = float(lam)
        longer = [0.0] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            longer[i + 1] += a
            longer[i] += a * lam
        coeffs = longer
    return coeffs
