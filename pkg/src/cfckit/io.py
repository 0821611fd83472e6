"""JSON wire formats: matrices, subalgebra bases and function specs."""

from __future__ import annotations

import json

import numpy as np

from .cfc import ScalarFunction, builtin_function
from .matrix_core import as_matrix, subalgebra_from_matrices
from .oracle import StarPolynomial
from .scalars import ScalarRing


class FormatError(ValueError):
    """Malformed input file or spec; the message names the offending field."""


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    n = a.shape[0]
    return {
        "n": n,
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise FormatError("matrix object must be a JSON object with 'n' and 'entries'")
    if "n" not in obj:
        raise FormatError("matrix object missing field 'n'")
    if "entries" not in obj:
        raise FormatError("matrix object missing field 'entries'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("field 'n' must be a positive integer")
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != n * n:
        raise FormatError(f"field 'entries' must hold exactly n^2 = {n * n} pairs")
    flat = np.empty(n * n, dtype=np.complex128)
    for i, pair in enumerate(entries):
        if (not isinstance(pair, list)) or len(pair) != 2:
            raise FormatError(f"field 'entries[{i}]' must be a [re, im] pair")
        flat[i] = complex(float(pair[0]), float(pair[1]))
    try:
        return as_matrix(flat.reshape(n, n))
    except ValueError as exc:
        raise FormatError(f"field 'entries': {exc}") from exc


def load_matrix(path: str) -> np.ndarray:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    try:
        return matrix_from_json(obj)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_basis(path: str, tol: float):
    """Subalgebra basis file: {"unital": bool, "matrices": [matrix, ...]}
    or a bare JSON array of matrix objects (non-unital)."""
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    unital = False
    if isinstance(obj, dict):
        unital = bool(obj.get("unital", False))
        mats = obj.get("matrices")
        if mats is None:
            raise FormatError(f"{path}: basis object missing field 'matrices'")
    else:
        mats = obj
    if not isinstance(mats, list) or not mats:
        raise FormatError(f"{path}: field 'matrices' must be a nonempty array")
    matrices = []
    for i, m in enumerate(mats):
        try:
            matrices.append(matrix_from_json(m))
        except FormatError as exc:
            raise FormatError(f"{path}: matrices[{i}]: {exc}") from exc
    return subalgebra_from_matrices(matrices, unital=unital, tol=tol)


def function_from_spec(spec: str, ring: ScalarRing) -> ScalarFunction:
    """Parse a function spec:  {"builtin": name[, "k": int][, "t": float]}
    | {"poly": [[re, im], ...]}  | {"poly2": [[k, m, re, im], ...]}."""
    try:
        obj = json.loads(spec)
    except json.JSONDecodeError as exc:
        raise FormatError(f"function spec is not valid JSON ({exc})") from exc
    if not isinstance(obj, dict):
        raise FormatError("function spec must be a JSON object")
    if "builtin" in obj:
        try:
            return builtin_function(
                obj["builtin"], ring, k=obj.get("k"), t=obj.get("t")
            )
        except ValueError as exc:
            raise FormatError(f"field 'builtin': {exc}") from exc
    if "poly" in obj:
        coeffs = obj["poly"]
        if not isinstance(coeffs, list):
            raise FormatError("field 'poly' must be an array of [re, im] pairs")
        terms = []
        for d, pair in enumerate(coeffs):
            if (not isinstance(pair, list)) or len(pair) != 2:
                raise FormatError(f"field 'poly[{d}]' must be a [re, im] pair")
            terms.append((d, 0, complex(float(pair[0]), float(pair[1]))))
        return _poly_function(StarPolynomial(tuple(terms)), ring)
    if "poly2" in obj:
        rows = obj["poly2"]
        if not isinstance(rows, list):
            raise FormatError("field 'poly2' must be an array of [k, m, re, im] rows")
        terms = []
        for i, row in enumerate(rows):
            if (not isinstance(row, list)) or len(row) != 4:
                raise FormatError(f"field 'poly2[{i}]' must be a [k, m, re, im] row")
            terms.append((int(row[0]), int(row[1]),
                          complex(float(row[2]), float(row[3]))))
        try:
            return _poly_function(StarPolynomial(tuple(terms)), ring)
        except ValueError as exc:
            raise FormatError(f"field 'poly2': {exc}") from exc
    raise FormatError("function spec needs one of the fields 'builtin', 'poly', 'poly2'")


def _poly_function(p: StarPolynomial, ring: ScalarRing) -> ScalarFunction:
    # ring discipline (real/nonnegative values) is enforced at evaluation time
    return p.as_function(ring)


def dump_json(obj, out_path=None) -> str:
    text = json.dumps(obj, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    return text
