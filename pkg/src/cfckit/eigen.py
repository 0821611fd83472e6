"""Spectral decompositions: Hermitian eigensolver, its extension to normal
matrices via simultaneous diagonalization of the commuting Hermitian parts,
and eigenvalue clustering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import (
    EPS_FLOOR,
    NotNormal,
    adjoint,
    as_matrix,
    fro_norm,
    is_selfadjoint,
    is_star_normal,
)
from .scalars import DEFAULT_TOL

# Clusters are cut at this fraction of ||a|| unless the caller overrides.
DEFAULT_CLUSTER_REL = 1e-8


class NotSelfadjoint(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralDecomposition:
    """a = u . diag(lam) . u*  with u unitary."""

    u: np.ndarray
    lam: np.ndarray
    residual: float

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.lam) @ adjoint(self.u)


@dataclass(frozen=True)
class ClusteredSpectrum:
    points: tuple
    multiplicities: tuple
    cluster_tol: float

    @property
    def size(self) -> int:
        return len(self.points)


def default_cluster_tol(a) -> float:
    return DEFAULT_CLUSTER_REL * fro_norm(a)


def _eigh(h):
    try:
        return np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def hermitian_eigen(h, tol: float = DEFAULT_TOL) -> SpectralDecomposition:
    """Eigendecomposition of a selfadjoint matrix; eigenvalues real, ascending.

    Real symmetric input stays in real arithmetic so downstream values keep
    exactly zero imaginary parts.
    """
    h = as_matrix(h)
    report = is_selfadjoint(h, tol)
    if not report.holds:
        raise NotSelfadjoint(f"matrix is not selfadjoint (residual {report.residual:.3e})")
    hh = (h + adjoint(h)) / 2
    if np.all(hh.imag == 0.0):
        w, u = _eigh(hh.real)
        u = u.astype(np.complex128)
    else:
        w, u = _eigh(hh)
    residual = fro_norm(h - (u * w) @ adjoint(u)) / max(fro_norm(h), EPS_FLOOR)
    return SpectralDecomposition(u=u, lam=np.asarray(w, dtype=np.float64), residual=residual)


def _contiguous_clusters(sorted_reals, cluster_tol):
    """Index groups of an ascending real sequence, split at gaps > cluster_tol."""
    groups = [[0]]
    for i in range(1, len(sorted_reals)):
        if sorted_reals[i] - sorted_reals[i - 1] <= cluster_tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def normal_spectral_decomposition(
    a, tol: float = DEFAULT_TOL, cluster_tol: float | None = None
) -> SpectralDecomposition:
    """Unitary diagonalization of a normal matrix.

    Writes a = h + i k with commuting Hermitian parts, diagonalizes h, then
    diagonalizes the compression of k inside each eigenvalue cluster of h.
    Eigenvalues come back sorted lexicographically by (re, im).
    """
    a = as_matrix(a)
    report = is_star_normal(a, tol)
    if not report.holds:
        raise NotNormal(f"matrix is not normal (residual {report.residual:.3e})")
    n = a.shape[0]
    if n == 1:
        return SpectralDecomposition(
            u=np.eye(1, dtype=np.complex128), lam=np.array([a[0, 0]]), residual=0.0
        )
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(a)
    h = (a + adjoint(a)) / 2
    k = (a - adjoint(a)) / 2j
    k = (k + adjoint(k)) / 2
    if np.all(h.imag == 0.0):
        wh, u = _eigh(h.real)
        u = u.astype(np.complex128)
    else:
        wh, u = _eigh(h)
    for idx in _contiguous_clusters(wh, cluster_tol):
        if len(idx) == 1:
            continue
        cols = u[:, idx]
        kc = adjoint(cols) @ k @ cols
        kc = (kc + adjoint(kc)) / 2
        _, v = _eigh(kc)
        u[:, idx] = cols @ v
    lam = np.diag(adjoint(u) @ a @ u).copy()
    order = np.lexsort((lam.imag, lam.real))
    u = u[:, order]
    lam = lam[order]
    residual = fro_norm(a - (u * lam) @ adjoint(u)) / max(fro_norm(a), EPS_FLOOR)
    return SpectralDecomposition(u=u, lam=lam, residual=residual)


def cluster_eigenvalues(lam, cluster_tol: float) -> ClusteredSpectrum:
    spec, _ = cluster_with_labels(lam, cluster_tol)
    return spec


def cluster_with_labels(lam, cluster_tol: float):
    """Single-linkage clustering of eigenvalues in the complex plane.

    Returns the clustered spectrum (representatives = cluster means, sorted
    by (re, im)) together with a label array mapping each input eigenvalue
    to its cluster.
    """
    if cluster_tol < 0:
        raise ValueError("cluster_tol must be nonnegative")
    lam = np.asarray(lam, dtype=np.complex128)
    m = len(lam)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if abs(lam[i] - lam[j]) <= cluster_tol:
                parent[find(i)] = find(j)

    roots = {}
    labels = np.empty(m, dtype=np.intp)
    for i in range(m):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        labels[i] = roots[r]
    k = len(roots)
    points = np.zeros(k, dtype=np.complex128)
    mults = np.zeros(k, dtype=np.intp)
    for i in range(m):
        points[labels[i]] += lam[i]
        mults[labels[i]] += 1
    points /= mults
    order = np.lexsort((points.imag, points.real))
    remap = np.empty(k, dtype=np.intp)
    remap[order] = np.arange(k)
    labels = remap[labels]
    spec = ClusteredSpectrum(
        points=tuple(complex(z) for z in points[order]),
        multiplicities=tuple(int(c) for c in mults[order]),
        cluster_tol=float(cluster_tol),
    )
    return spec, labels
