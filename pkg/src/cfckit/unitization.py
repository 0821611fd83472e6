"""Minimal unitization C x A with the pair multiplication
(z, a)(w, b) = (zw, zb + wa + ab), star (conj z, a*) and the norm
max{|z|, ||m -> z m + a m||}, plus a faithful 2n x 2n block representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import DimensionMismatch, adjoint, as_matrix, identity, operator_norm


@dataclass(frozen=True)
class UnitizationElement:
    z: complex
    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "a", as_matrix(self.a))

    @property
    def n(self) -> int:
        return self.a.shape[0]


def uni_unit(n: int) -> UnitizationElement:
    return UnitizationElement(1.0, np.zeros((n, n)))


def uni_add(x: UnitizationElement, y: UnitizationElement) -> UnitizationElement:
    _check_dims(x, y)
    return UnitizationElement(x.z + y.z, x.a + y.a)


def uni_mul(x: UnitizationElement, y: UnitizationElement) -> UnitizationElement:
    _check_dims(x, y)
    return UnitizationElement(x.z * y.z, x.z * y.a + y.z * x.a + x.a @ y.a)


def uni_star(x: UnitizationElement) -> UnitizationElement:
    return UnitizationElement(x.z.conjugate(), adjoint(x.a))


def uni_norm(x: UnitizationElement) -> float:
    """max(|z|, ||z I + a||); for M_n the left-regular norm collapses to this."""
    return max(abs(x.z), operator_norm(x.z * identity(x.n) + x.a))


def uni_norm_via_map(x: UnitizationElement) -> float:
    """The defining formula: operator norm of m -> z m + a m on M_n,
    materialized as an n^2 x n^2 matrix (row-major vec)."""
    n = x.n
    lmap = x.z * np.eye(n * n, dtype=np.complex128) + np.kron(x.a, np.eye(n))
    return max(abs(x.z), operator_norm(lmap))


def uni_represent(x: UnitizationElement) -> np.ndarray:
    """(z, a) -> z I  (+)  (z I + a), a faithful star-homomorphism into M_2n."""
    n = x.n
    out = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    out[:n, :n] = x.z * identity(n)
    out[n:, n:] = x.z * identity(n) + x.a
    return out


def _check_dims(x: UnitizationElement, y: UnitizationElement):
    if x.n != y.n:
        raise DimensionMismatch(f"unitization dimensions differ: {x.n} vs {y.n}")
