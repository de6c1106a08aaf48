"""Spectra and energies of path and adjacency matrices.

Eigenvalues come from numpy's symmetric solver (deterministic for identical
input). Sign classification uses a per-matrix tolerance eps = 1e-8 * n *
max|entry|: integer matrices have algebraic eigenvalues well separated from
solver noise at desk scale. Values within (eps, 10*eps] of zero are treated
as borderline by downstream consumers rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disjoint import PathMatrix, path_matrix
from .graphs import Graph, is_connected

SIGN_TOL_COEFF = 1e-8
BORDERLINE_FACTOR = 10.0


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues sorted descending, plus the sign-classification tolerance."""

    values: tuple[float, ...]
    tol: float

    def __post_init__(self) -> None:
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum values must be sorted descending")
        if self.tol < 0:
            raise ValueError("tolerance must be nonnegative")

    @property
    def energy(self) -> float:
        return float(sum(abs(x) for x in self.values))

    @property
    def radius(self) -> float:
        return float(max((abs(x) for x in self.values), default=0.0))

    def borderline_values(self) -> tuple[float, ...]:
        """Nonzero-classified eigenvalues too close to zero to trust exactly."""
        hi = BORDERLINE_FACTOR * self.tol
        return tuple(x for x in self.values if self.tol < abs(x) <= hi)


@dataclass(frozen=True)
class EnergyReport:
    path_energy: float
    graph_energy: float
    path_spectral_radius: float
    positive_count: int
    negative_count: int
    zero_count: int


def default_sign_tolerance(matrix: np.ndarray) -> float:
    n = matrix.shape[0]
    scale = float(np.max(np.abs(matrix))) if matrix.size else 0.0
    return SIGN_TOL_COEFF * n * scale


def symmetric_eigenvalues(matrix, tol: float | None = None) -> Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Rejects non-finite entries and asymmetry beyond the tolerance.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    if n < 1:
        raise ValueError("matrix must be at least 1 x 1")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    if tol is None:
        tol = default_sign_tolerance(a)
    asym = float(np.max(np.abs(a - a.T)))
    if asym > max(tol, 1e-12):
        raise ValueError(f"matrix asymmetric beyond tolerance ({asym:g})")
    vals = np.linalg.eigvalsh((a + a.T) / 2.0)
    return Spectrum(tuple(float(x) for x in vals[::-1]), float(tol))


def count_signs(s: Spectrum) -> tuple[int, int, int]:
    """(positive, zero, negative) counts under the spectrum's tolerance."""
    pos = sum(1 for x in s.values if x > s.tol)
    neg = sum(1 for x in s.values if x < -s.tol)
    return pos, len(s.values) - pos - neg, neg


def path_spectrum(g: Graph, tol: float | None = None, pm: PathMatrix | None = None) -> Spectrum:
    if g.n == 0:
        return Spectrum((), 0.0)
    if pm is None:
        pm = path_matrix(g)
    return symmetric_eigenvalues(np.array(pm.entries, dtype=float), tol)


def path_energy(g: Graph) -> float:
    return path_spectrum(g).energy


def path_spectral_radius(g: Graph) -> float:
    return path_spectrum(g).radius


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def adjacency_spectrum(g: Graph, tol: float | None = None) -> Spectrum:
    if g.n == 0:
        return Spectrum((), 0.0)
    return symmetric_eigenvalues(adjacency_matrix(g), tol)


def graph_energy(g: Graph) -> float:
    return adjacency_spectrum(g).energy


def energy_report(g: Graph, pm: PathMatrix | None = None) -> EnergyReport:
    ps = path_spectrum(g, pm=pm)
    pos, zero, neg = count_signs(ps)
    return EnergyReport(
        path_energy=ps.energy,
        graph_energy=graph_energy(g),
        path_spectral_radius=ps.radius,
        positive_count=pos,
        negative_count=neg,
        zero_count=zero,
    )


@dataclass(frozen=True)
class SinglePositiveCheck:
    """Outcome of the one-positive-eigenvalue identity PE = 2 * rho."""

    holds_precondition: bool
    pe_equals_2rho: bool
    positive_is_radius: bool
    path_energy: float
    spectral_radius: float
    positive_count: int


def verify_single_positive_identity(g: Graph, pm: PathMatrix | None = None) -> SinglePositiveCheck:
    """For connected graphs with exactly one positive path eigenvalue,
    check that it is the spectral radius and that PE = 2 * rho."""
    if not is_connected(g):
        raise ValueError("identity check requires a connected graph")
    s = path_spectrum(g, pm=pm)
    pos, _, _ = count_signs(s)
    pe = s.energy
    rho = s.radius
    if pos != 1:
        return SinglePositiveCheck(False, False, False, pe, rho, pos)
    atol = max(s.tol * max(len(s.values), 1), 1e-12)
    return SinglePositiveCheck(
        holds_precondition=True,
        pe_equals_2rho=abs(pe - 2.0 * rho) <= atol,
        positive_is_radius=abs(s.values[0] - rho) <= atol,
        path_energy=pe,
        spectral_radius=rho,
        positive_count=pos,
    )
