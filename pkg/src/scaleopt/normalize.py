"""Gradient normalizations as linear minimization oracles over matrix-norm balls.

Steepest descent under a matrix norm replaces the raw gradient G with the
minimizer of <G, D> over the unit ball of that norm; the four supported
normalizations correspond to four operator norms:

    spectral (2->2)      -> U V^T with G = U S V^T          "singular-value"
    max column norm (1->2)  -> each column scaled to unit norm  "column-wise"
    max row norm (2->inf)   -> each row scaled to unit norm     "row-wise"
    max entry (1->inf)      -> entrywise sign                   "sign"

``normalize`` returns the direction D with ||D|| <= 1 such that -D attains
the minimum; ``dual_norm`` returns the attained value <G, D>, which equals
the dual norm of G (nuclear norm, sum of column norms, sum of row norms,
or entrywise l1, respectively).

The singular-value direction is also available through an approximate
Newton-Schulz polynomial iteration that avoids the SVD entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import as_matrix, svd_exact

__all__ = [
    "NormKind",
    "NsConfig",
    "DEFAULT_NS",
    "EPS_NORM_GUARD",
    "normalize",
    "dual_norm",
    "in_unit_ball",
    "sample_in_ball",
    "lmo_optimality_check",
]

# Columns/rows with norm below this guard are scaled by 1/guard instead of
# 1/norm, so an exactly-zero column maps to zero and nothing divides by zero.
EPS_NORM_GUARD = 1e-8


class NormKind(Enum):
    SINGULAR_VALUE = "singular_value"
    SINGULAR_VALUE_NS = "singular_value_ns"
    COLUMN_WISE = "column_wise"
    ROW_WISE = "row_wise"
    SIGN = "sign"


@dataclass(frozen=True)
class NsConfig:
    """Newton-Schulz iteration settings for approximate orthogonalization.

    The quintic iterate is X <- a X + b (X X^T) X + c (X X^T)^2 X after
    pre-scaling X by its Frobenius norm. The default coefficients trade
    exact convergence to U V^T for a fast, bounded singular-value band.
    """

    steps: int = 5
    a: float = 3.4445
    b: float = -4.7750
    c: float = 2.0315

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("NsConfig.steps must be >= 1")
        for coeff in (self.a, self.b, self.c):
            if not np.isfinite(coeff):
                raise ValueError("NsConfig coefficients must be finite")


DEFAULT_NS = NsConfig()


def _scale_columns(g: np.ndarray, axis: int) -> np.ndarray:
    norms = np.linalg.norm(g, axis=axis, keepdims=True)
    return g / np.maximum(norms, EPS_NORM_GUARD)


def _orthogonalize_exact(g: np.ndarray) -> np.ndarray:
    if not np.any(g):
        return np.zeros_like(g)  # all-zero input: direction is defined as zero
    u, _, vt = svd_exact(g)
    return u @ vt


def _orthogonalize_ns(g: np.ndarray, ns: NsConfig) -> np.ndarray:
    # float32 iterate: matches the half-precision reference behaviour and
    # keeps the polynomial path well below the cost of an exact SVD.
    x = g.astype(np.float32)
    flipped = x.shape[0] < x.shape[1]
    if flipped:
        x = x.T
    x = x / (np.linalg.norm(x) + np.float32(EPS_NORM_GUARD))
    a, b, c = np.float32(ns.a), np.float32(ns.b), np.float32(ns.c)
    for _ in range(ns.steps):
        xxt = x @ x.T
        x = a * x + (b * xxt + c * (xxt @ xxt)) @ x
    if flipped:
        x = x.T
    return x.astype(np.float64)


def normalize(kind: NormKind, g: np.ndarray, ns: NsConfig = DEFAULT_NS) -> np.ndarray:
    """Direction D with ||D||_kind <= 1 whose negation minimizes <G, .> on the ball.

    Sign maps zero entries to zero; column/row variants map zero columns/rows
    to zero; an all-zero input under the singular-value kinds returns zero.
    The Newton-Schulz variant is approximate: its singular values land in a
    band around 1 rather than exactly on it.
    """
    g = as_matrix(g)
    if kind is NormKind.SIGN:
        return np.sign(g)
    if kind is NormKind.COLUMN_WISE:
        return _scale_columns(g, axis=0)
    if kind is NormKind.ROW_WISE:
        return _scale_columns(g, axis=1)
    if kind is NormKind.SINGULAR_VALUE:
        return _orthogonalize_exact(g)
    if kind is NormKind.SINGULAR_VALUE_NS:
        return _orthogonalize_ns(g, ns)
    raise ValueError(f"unknown normalization kind: {kind!r}")


def dual_norm(kind: NormKind, g: np.ndarray) -> float:
    """Value of max <G, D> over the kind's unit ball (the dual norm of G)."""
    g = as_matrix(g)
    if kind is NormKind.SIGN:
        return float(np.sum(np.abs(g)))
    if kind is NormKind.COLUMN_WISE:
        return float(np.sum(np.linalg.norm(g, axis=0)))
    if kind is NormKind.ROW_WISE:
        return float(np.sum(np.linalg.norm(g, axis=1)))
    if kind in (NormKind.SINGULAR_VALUE, NormKind.SINGULAR_VALUE_NS):
        return float(np.sum(svd_exact(g).sigma))
    raise ValueError(f"unknown normalization kind: {kind!r}")


def in_unit_ball(kind: NormKind, d: np.ndarray, tol: float = 1e-9) -> bool:
    """Membership test for the kind's unit norm ball."""
    d = as_matrix(d)
    if kind is NormKind.SIGN:
        return bool(np.max(np.abs(d)) <= 1.0 + tol)
    if kind is NormKind.COLUMN_WISE:
        return bool(np.max(np.linalg.norm(d, axis=0)) <= 1.0 + tol)
    if kind is NormKind.ROW_WISE:
        return bool(np.max(np.linalg.norm(d, axis=1)) <= 1.0 + tol)
    if kind in (NormKind.SINGULAR_VALUE, NormKind.SINGULAR_VALUE_NS):
        return bool(np.linalg.norm(d, 2) <= 1.0 + tol)
    raise ValueError(f"unknown normalization kind: {kind!r}")


def sample_in_ball(kind: NormKind, shape: tuple[int, int], rng: np.random.Generator) -> np.ndarray:
    """Random feasible point of the kind's unit ball (not uniform, just inside)."""
    m, n = shape
    if kind is NormKind.SIGN:
        return rng.uniform(-1.0, 1.0, size=(m, n))
    if kind is NormKind.COLUMN_WISE:
        d = rng.standard_normal((m, n))
        radii = rng.uniform(0.0, 1.0, size=n)
        norms = np.linalg.norm(d, axis=0)
        return d * (radii / np.maximum(norms, 1e-300))
    if kind is NormKind.ROW_WISE:
        d = rng.standard_normal((m, n))
        radii = rng.uniform(0.0, 1.0, size=(m, 1))
        norms = np.linalg.norm(d, axis=1, keepdims=True)
        return d * (radii / np.maximum(norms, 1e-300))
    if kind in (NormKind.SINGULAR_VALUE, NormKind.SINGULAR_VALUE_NS):
        d = rng.standard_normal((m, n))
        top = np.linalg.norm(d, 2)
        return d * (rng.uniform(0.0, 1.0) / max(top, 1e-300))
    raise ValueError(f"unknown normalization kind: {kind!r}")


def lmo_optimality_check(
    kind: NormKind,
    g: np.ndarray,
    trials: int,
    rng: np.random.Generator,
    tol: float = 1e-9,
) -> bool:
    """Monte-Carlo check that -normalize(kind, g) minimizes <G, .> on the ball.

    Samples `trials` feasible directions and returns True iff none beats the
    oracle direction by more than `tol`. Zero trials is vacuously true.
    """
    g = as_matrix(g)
    d = normalize(kind, g)
    best = -float(np.sum(g * d))
    for _ in range(trials):
        cand = sample_in_ball(kind, g.shape, rng)
        if not in_unit_ball(kind, cand):
            continue  # defensive: sampler guarantees feasibility already
        if best > float(np.sum(g * cand)) + tol:
            return False
    return True
