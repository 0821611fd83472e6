"""Dense complex matrices: adjoint, operator norm, the three element
predicates (normal / selfadjoint / nonnegative) and star-subalgebra machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scalars import DEFAULT_TOL, ScalarRing

# Floor for relative residuals so the zero matrix passes every predicate exactly.
EPS_FLOOR = 1e-300


class DimensionMismatch(ValueError):
    pass


class NotNormal(ValueError):
    pass


class NotInSubalgebra(ValueError):
    pass


def as_matrix(a) -> np.ndarray:
    """Coerce to a square complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def zeros(n: int) -> np.ndarray:
    return np.zeros((n, n), dtype=np.complex128)


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def frobenius_inner(x, y) -> complex:
    """trace(x* y), the Frobenius inner product."""
    return complex(np.vdot(x, y))


def fro_norm(a) -> float:
    return float(np.linalg.norm(a))


def operator_norm(a) -> float:
    """Largest singular value, via the Hermitian eigenproblem for a* a."""
    a = as_matrix(a)
    gram = adjoint(a) @ a
    gram = (gram + adjoint(gram)) / 2
    w = np.linalg.eigvalsh(gram)
    return float(np.sqrt(max(w[-1], 0.0)))


@dataclass(frozen=True)
class PredicateReport:
    predicate: str
    holds: bool
    residual: float
    tol_used: float


def is_star_normal(a, tol: float = DEFAULT_TOL) -> PredicateReport:
    """Does a commute with its adjoint?  Residual relative to ||a||^2."""
    a = as_matrix(a)
    ah = adjoint(a)
    residual = fro_norm(ah @ a - a @ ah) / max(fro_norm(a) ** 2, EPS_FLOOR)
    return PredicateReport("normal", residual <= tol, residual, tol)


def is_selfadjoint(a, tol: float = DEFAULT_TOL) -> PredicateReport:
    a = as_matrix(a)
    residual = fro_norm(a - adjoint(a)) / max(fro_norm(a), EPS_FLOOR)
    return PredicateReport("selfadjoint", residual <= tol, residual, tol)


def is_nonneg(a, tol: float = DEFAULT_TOL) -> PredicateReport:
    """Selfadjoint with spectrum in [0, inf); equivalent to a = b* b in M_n."""
    a = as_matrix(a)
    sa = is_selfadjoint(a, tol)
    scale = max(fro_norm(a), EPS_FLOOR)
    if not sa.holds:
        return PredicateReport("nonneg", False, sa.residual, tol)
    h = (a + adjoint(a)) / 2
    w = np.linalg.eigvalsh(h)
    neg = max(-float(w[0]), 0.0) / scale
    residual = max(sa.residual, neg)
    return PredicateReport("nonneg", residual <= tol, residual, tol)


def predicate_for_ring(a, ring: ScalarRing, tol: float = DEFAULT_TOL) -> PredicateReport:
    """The element predicate a scalar ring demands of its calculus inputs."""
    if ring is ScalarRing.COMPLEX:
        return is_star_normal(a, tol)
    if ring is ScalarRing.REAL:
        return is_selfadjoint(a, tol)
    return is_nonneg(a, tol)


@dataclass(frozen=True)
class StarSubalgebra:
    """A star- and multiplication-closed subspace of M_n, carried by an
    orthonormal (Frobenius) basis.  `unital` records whether I was adjoined.
    """

    ambient_dim: int
    basis: tuple
    unital: bool

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, x) -> np.ndarray:
        return np.array([frobenius_inner(b, x) for b in self.basis])

    def project(self, x) -> np.ndarray:
        out = zeros(self.ambient_dim)
        for c, b in zip(self.coordinates(x), self.basis):
            out += c * b
        return out

    def contains(self, x, tol: float = DEFAULT_TOL):
        """(membership, relative projection residual)."""
        x = as_matrix(x)
        if x.shape[0] != self.ambient_dim:
            raise DimensionMismatch(
                f"element is {x.shape[0]}x{x.shape[0]}, subalgebra ambient "
                f"dimension is {self.ambient_dim}"
            )
        residual = fro_norm(x - self.project(x)) / max(fro_norm(x), EPS_FLOOR)
        return residual <= tol, residual


def subalgebra_contains(B: StarSubalgebra, x, tol: float = DEFAULT_TOL):
    return B.contains(x, tol)


def _orthonormalize(candidates, rank_tol: float):
    """Modified Gram-Schmidt with a relative rank cutoff."""
    basis = []
    scale = max((fro_norm(c) for c in candidates), default=0.0)
    for cand in candidates:
        r = cand.astype(np.complex128, copy=True)
        for b in basis:
            r -= frobenius_inner(b, r) * b
        nrm = fro_norm(r)
        if nrm > rank_tol * max(scale, fro_norm(cand), EPS_FLOOR):
            basis.append(r / nrm)
    return basis


def elemental_subalgebra(a, unital: bool = True, tol: float = DEFAULT_TOL) -> StarSubalgebra:
    """Orthonormal basis of the star-subalgebra generated by a normal element.

    Built by closing the span of words in a and a* under right multiplication
    by the generators (every word extends a shorter one).  For a normal with
    k distinct eigenvalues the unital dimension is k; the non-unital one drops
    to k - 1 when 0 is an eigenvalue.
    """
    a = as_matrix(a)
    report = is_star_normal(a, tol)
    if not report.holds:
        raise NotNormal(f"element is not normal (residual {report.residual:.3e})")
    n = a.shape[0]
    ah = adjoint(a)
    rank_tol = max(tol, 1e-12)
    seeds = [identity(n)] if unital else [a, ah]
    basis = _orthonormalize(seeds, rank_tol)
    frontier = list(basis)
    for _ in range(n * n):
        new = []
        for b in frontier:
            for cand in (b @ a, b @ ah):
                r = cand.astype(np.complex128, copy=True)
                for e in basis + new:
                    r -= frobenius_inner(e, r) * e
                nrm = fro_norm(r)
                if nrm > rank_tol * max(fro_norm(cand), EPS_FLOOR):
                    new.append(r / nrm)
        if not new:
            break
        basis.extend(new)
        frontier = new
    return StarSubalgebra(ambient_dim=n, basis=tuple(basis), unital=unital)


def subalgebra_from_matrices(mats, unital: bool = False, tol: float = DEFAULT_TOL) -> StarSubalgebra:
    """Orthonormalize an explicit spanning set (CLI basis files)."""
    mats = [as_matrix(m) for m in mats]
    if not mats:
        raise ValueError("subalgebra basis must contain at least one matrix")
    n = mats[0].shape[0]
    for m in mats:
        if m.shape[0] != n:
            raise DimensionMismatch("basis matrices have mixed dimensions")
    basis = _orthonormalize(mats, max(tol, 1e-12))
    return StarSubalgebra(ambient_dim=n, basis=tuple(basis), unital=unital)
