"""Dense matrix primitives: norms, exact SVD, and seeded randomness.

All matrices are 2-D float64 numpy arrays in row-major (C) order, with
rows = input dimension and columns = output dimension. Everything here is
pure and deterministic; random streams come from the counter-based Philox
generator so that a seed reproduces the same trace on any platform.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "ShapeError",
    "SvdError",
    "SvdResult",
    "as_matrix",
    "make_rng",
    "column_norms",
    "row_norms",
    "svd_exact",
    "matmul",
    "transpose",
    "frobenius_norm",
    "axpy",
    "inner_product",
]


class ShapeError(ValueError):
    """Operands have incompatible or invalid shapes."""


class SvdError(RuntimeError):
    """The SVD routine failed to converge."""


class SvdResult(NamedTuple):
    u: np.ndarray      # m x r, orthonormal columns
    sigma: np.ndarray  # r nonnegative values, descending
    vt: np.ndarray     # r x n, orthonormal rows


def as_matrix(a) -> np.ndarray:
    """Validate and return `a` as a finite 2-D float64 array."""
    m = np.ascontiguousarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def make_rng(seed: int) -> np.random.Generator:
    """Seeded counter-based generator (Philox4x64) with platform-stable streams."""
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def column_norms(g: np.ndarray) -> np.ndarray:
    """Euclidean norm of each column (one value per output unit)."""
    g = as_matrix(g)
    return np.linalg.norm(g, axis=0)


def row_norms(g: np.ndarray) -> np.ndarray:
    """Euclidean norm of each row (one value per input unit)."""
    g = as_matrix(g)
    return np.linalg.norm(g, axis=1)


def svd_exact(g: np.ndarray) -> SvdResult:
    """Thin SVD, g = u @ diag(sigma) @ vt, with sigma descending.

    Raises SvdError if the underlying LAPACK driver does not converge.
    """
    g = as_matrix(g)
    try:
        u, s, vt = np.linalg.svd(g, full_matrices=False)
    except np.linalg.LinAlgError as e:
        raise SvdError(f"SVD did not converge for shape {g.shape}: {e}") from e
    return SvdResult(u, s, vt)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul shape mismatch: {a.shape} @ {b.shape}")
    return a @ b


def transpose(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(as_matrix(a).T)


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(as_matrix(a)))


def axpy(alpha: float, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """alpha * x + y, elementwise."""
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ShapeError(f"axpy shape mismatch: {x.shape} vs {y.shape}")
    return alpha * x + y


def inner_product(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius inner product <a, b> = sum_ij a_ij b_ij."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"inner_product shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a * b))
