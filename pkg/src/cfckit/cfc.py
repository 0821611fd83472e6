"""The functional calculus itself: unital `cfc` over each scalar ring with
junk-value semantics (failed predicate or unevaluable function yields the
zero matrix, never an exception), the non-unital `cfc_n` with its f(0) = 0
guard, and named derived constructions (sqrt, abs, exp, log, inv, powers,
positive/negative parts).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .eigen import cluster_with_labels, default_cluster_tol, hermitian_eigen, normal_spectral_decomposition
from .matrix_core import (
    NotInSubalgebra,
    StarSubalgebra,
    adjoint,
    as_matrix,
    fro_norm,
    predicate_for_ring,
    zeros,
)
from .scalars import DEFAULT_TOL, RestrictionFailure, ScalarRing, restrict_scalar


@dataclass(frozen=True)
class ScalarFunction:
    """A scalar function together with its ring discipline.

    `eval` may raise at points outside its domain (e.g. log at 0); on a finite
    spectrum that is the only way the continuity hypothesis can fail.
    """

    eval: Callable
    ring: ScalarRing = ScalarRing.COMPLEX
    name: Optional[str] = None

    def __call__(self, x):
        return self.eval(x)


@dataclass(frozen=True)
class CfcOutcome:
    value: np.ndarray
    junk: bool
    reason: Optional[str] = None  # predicate_failed | eval_failed | zero_condition_failed


class _EvalFailed(Exception):
    pass


def _junk(n: int, reason: str) -> CfcOutcome:
    return CfcOutcome(value=zeros(n), junk=True, reason=reason)


def _decompose(a, ring, tol, cluster_tol):
    if ring is ScalarRing.COMPLEX:
        return normal_spectral_decomposition(a, tol, cluster_tol)
    return hermitian_eigen(a, tol)


def _eval_at(f: ScalarFunction, x, tol: float):
    """Evaluate f with ring discipline; any failure raises _EvalFailed.

    NNReal inputs arrive clamped; NNReal outputs within -tol of zero are
    clamped, larger violations fail.  Real outputs must have imaginary part
    within tol.
    """
    try:
        out = f.eval(x)
    except Exception as exc:  # domain errors are data, not bugs
        raise _EvalFailed(str(exc)) from exc
    out = complex(out)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise _EvalFailed(f"non-finite value at {x!r}")
    if f.ring is ScalarRing.COMPLEX:
        return out
    if abs(out.imag) > tol:
        raise _EvalFailed(f"value {out!r} is not real at {x!r}")
    if f.ring is ScalarRing.NNREAL:
        if out.real < -tol:
            raise _EvalFailed(f"value {out!r} is negative at {x!r}")
        return complex(max(out.real, 0.0))
    return complex(out.real)


def _spectral_values(f, dec, ring, tol, cluster_tol, scale, zero_to_zero=False):
    """f applied once per eigenvalue cluster, broadcast back to eigenvalues."""
    spec, labels = cluster_with_labels(dec.lam, cluster_tol)
    rtol = tol * max(1.0, scale)
    fvals = []
    for rep in spec.points:
        if zero_to_zero and abs(rep) <= max(cluster_tol, rtol):
            fvals.append(0.0 + 0.0j)
            continue
        x = restrict_scalar(rep, ring, rtol)
        fvals.append(_eval_at(f, x, tol))
    return np.array([fvals[labels[i]] for i in range(len(dec.lam))])


def cfc(
    f: ScalarFunction, a, ring: ScalarRing = ScalarRing.COMPLEX,
    tol: float = DEFAULT_TOL, cluster_tol: float | None = None,
) -> CfcOutcome:
    """Apply f to a through the spectral decomposition: u diag(f(lam)) u*.

    Total: if the ring predicate fails, or f fails to evaluate at some
    spectral point, the outcome is the zero matrix flagged as junk.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if not predicate_for_ring(a, ring, tol).holds:
        return _junk(n, "predicate_failed")
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(a)
    dec = _decompose(a, ring, tol, cluster_tol)
    try:
        fvals = _spectral_values(f, dec, ring, tol, cluster_tol, fro_norm(a))
    except RestrictionFailure:
        return _junk(n, "predicate_failed")
    except _EvalFailed:
        return _junk(n, "eval_failed")
    value = (dec.u * fvals) @ adjoint(dec.u)
    return CfcOutcome(value=value, junk=False)


def cfc_n(
    f: ScalarFunction, a, B: StarSubalgebra | None = None,
    ring: ScalarRing = ScalarRing.COMPLEX, tol: float = DEFAULT_TOL,
    cluster_tol: float | None = None,
) -> CfcOutcome:
    """Non-unital calculus: additionally requires f(0) = 0 (within tol),
    since 0 always belongs to the quasispectrum.

    When a subalgebra B is supplied, membership of a is a precondition and
    membership of the result is asserted (range containment).
    """
    a = as_matrix(a)
    n = a.shape[0]
    if B is not None:
        inside, residual = B.contains(a, max(tol, 1e-8))
        if not inside:
            raise NotInSubalgebra(f"element not in subalgebra (residual {residual:.3e})")
    if not predicate_for_ring(a, ring, tol).holds:
        return _junk(n, "predicate_failed")
    zero = 0.0 if ring is not ScalarRing.COMPLEX else 0.0 + 0.0j
    try:
        f0 = _eval_at(f, zero, tol)
    except _EvalFailed:
        return _junk(n, "eval_failed")
    if abs(f0) > tol:
        return _junk(n, "zero_condition_failed")
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(a)
    dec = _decompose(a, ring, tol, cluster_tol)
    try:
        fvals = _spectral_values(
            f, dec, ring, tol, cluster_tol, fro_norm(a), zero_to_zero=True
        )
    except RestrictionFailure:
        return _junk(n, "predicate_failed")
    except _EvalFailed:
        return _junk(n, "eval_failed")
    value = (dec.u * fvals) @ adjoint(dec.u)
    if B is not None:
        inside, residual = B.contains(value, max(tol, 1e-8))
        if not inside:
            raise NotInSubalgebra(
                f"calculus value escaped the subalgebra (residual {residual:.3e})"
            )
    return CfcOutcome(value=value, junk=False)


def pos_part(a, tol: float = DEFAULT_TOL) -> CfcOutcome:
    f = ScalarFunction(lambda x: max(x, 0.0), ScalarRing.REAL, "pos")
    return cfc_n(f, a, None, ScalarRing.REAL, tol)


def neg_part(a, tol: float = DEFAULT_TOL) -> CfcOutcome:
    f = ScalarFunction(lambda x: max(-x, 0.0), ScalarRing.REAL, "neg")
    return cfc_n(f, a, None, ScalarRing.REAL, tol)


def identity_function(ring: ScalarRing = ScalarRing.COMPLEX) -> ScalarFunction:
    return ScalarFunction(lambda x: x, ring, "id")


def constant_function(c, ring: ScalarRing = ScalarRing.COMPLEX) -> ScalarFunction:
    return ScalarFunction(lambda x: c, ring, f"const {c}")


_BUILTIN_NAMES = ("sqrt", "abs", "exp", "log", "inv", "pow", "rpow", "id")


def builtin_function(name: str, ring: ScalarRing = ScalarRing.COMPLEX,
                     k: int | None = None, t: float | None = None) -> ScalarFunction:
    """Named scalar functions shared by the library and the CLI."""
    real = ring is not ScalarRing.COMPLEX
    if name == "id":
        fn = lambda x: x
    elif name == "sqrt":
        fn = (lambda x: math.sqrt(x)) if real else cmath.sqrt
    elif name == "abs":
        fn = abs
    elif name == "exp":
        fn = math.exp if real else cmath.exp
    elif name == "log":
        if real:
            fn = math.log
        else:
            def fn(x):
                if x == 0:
                    raise ValueError("log of zero")
                return cmath.log(x)
    elif name == "inv":
        fn = lambda x: 1.0 / x
    elif name == "pow":
        if k is None:
            raise ValueError("builtin 'pow' requires integer exponent k")
        kk = int(k)
        fn = lambda x: x ** kk
    elif name == "rpow":
        if t is None:
            raise ValueError("builtin 'rpow' requires real exponent t")
        tt = float(t)
        if real:
            def fn(x):
                if x < 0:
                    raise ValueError("rpow of a negative real")
                if x == 0 and tt < 0:
                    raise ZeroDivisionError("rpow at zero with negative exponent")
                return x ** tt
        else:
            def fn(x):
                if x == 0 and tt < 0:
                    raise ZeroDivisionError("rpow at zero with negative exponent")
                return x ** tt
    else:
        raise ValueError(f"unknown builtin {name!r} (expected one of {_BUILTIN_NAMES})")
    return ScalarFunction(fn, ring, name)


def cfc_builtin(name: str, a, ring: ScalarRing = ScalarRing.COMPLEX,
                tol: float = DEFAULT_TOL, k: int | None = None,
                t: float | None = None) -> CfcOutcome:
    return cfc(builtin_function(name, ring, k=k, t=t), a, ring, tol)


def loewner_le(f: ScalarFunction, g: ScalarFunction, a,
               ring: ScalarRing = ScalarRing.REAL, tol: float = DEFAULT_TOL) -> bool:
    """Forward direction of the order law: f <= g pointwise on the spectrum
    implies cfc(g, a) - cfc(f, a) is nonnegative."""
    from .matrix_core import is_nonneg

    lhs = cfc(f, a, ring, tol)
    rhs = cfc(g, a, ring, tol)
    if lhs.junk or rhs.junk:
        return False
    return is_nonneg(rhs.value - lhs.value, max(tol, 1e-8) * 100).holds
