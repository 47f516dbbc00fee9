"""Regularized dense least-squares solvers and conditioning reports.

Two methods are exposed.  Truncated SVD discards singular values below
eps * sigma_max and returns the minimal-2-norm least-squares solution over the
retained spectrum.  Threshold column-pivoted QR drops pivot columns whose
|r_jj| falls below eps * |r_11|, zeroes their coefficients, and solves the
retained triangular block by back-substitution.  Thresholds are relative
(to sigma_max, resp. |r_11|): the assembled matrices are O(1)-normalized by
the basis scaling, so a relative threshold is the scale-invariant reading of
an absolute one.

The reported condition number is sigma_max / sigma_min with sigma_min the
smallest computed singular value, even when that sits at the double-precision
noise floor; conditioning studies past 1e16 only make sense this way.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

import numpy as np
import scipy.linalg

from .assembly import LinearSystem

_DEFAULT_EPSILON = {"tsvd": 1e-14, "cpqr": 2e-13}


@dataclasses.dataclass(frozen=True)
class SolverOptions:
    method: str = "tsvd"
    epsilon: Optional[float] = None

    def __post_init__(self) -> None:
        if self.method not in _DEFAULT_EPSILON:
            raise ValueError(f"unknown solver method {self.method!r}")
        if self.epsilon is not None and not 0.0 < self.epsilon < 1.0:
            raise ValueError("threshold must lie in (0, 1)")

    @property
    def threshold(self) -> float:
        return self.epsilon if self.epsilon is not None else _DEFAULT_EPSILON[self.method]


@dataclasses.dataclass(frozen=True)
class SolveReport:
    coefficients: np.ndarray
    residual_norm: float
    coef_norm: float
    condition_number: float
    numerical_rank: int


def _validate(matrix: np.ndarray, rhs: np.ndarray) -> None:
    if not np.isfinite(matrix).all() or not np.isfinite(rhs).all():
        raise ValueError("system contains non-finite entries")


def _tsvd_coefficients(matrix: np.ndarray, rhs: np.ndarray, eps: float):
    u, s, vh = np.linalg.svd(matrix, full_matrices=False)
    if s[0] == 0.0:
        return np.zeros(matrix.shape[1], dtype=np.complex128), 0, s
    keep = s >= eps * s[0]
    rank = int(np.count_nonzero(keep))
    coeffs = vh[keep].conj().T @ ((u[:, keep].conj().T @ rhs) / s[keep])
    return coeffs, rank, s


def _cpqr_coefficients(matrix: np.ndarray, rhs: np.ndarray, eps: float):
    q, r, piv = scipy.linalg.qr(matrix, mode="economic", pivoting=True)
    rdiag = np.abs(np.diag(r))
    n = matrix.shape[1]
    if rdiag.size == 0 or rdiag[0] == 0.0:
        return np.zeros(n, dtype=np.complex128), 0
    small = rdiag < eps * rdiag[0]
    rank = int(np.argmax(small)) if small.any() else rdiag.size
    coeffs = np.zeros(n, dtype=np.complex128)
    if rank > 0:
        y = q[:, :rank].conj().T @ rhs
        x = scipy.linalg.solve_triangular(r[:rank, :rank], y)
        coeffs[piv[:rank]] = x
    return coeffs, rank


def solve(system: LinearSystem, options: SolverOptions) -> SolveReport:
    matrix = np.ascontiguousarray(system.matrix, dtype=np.complex128)
    rhs = np.ascontiguousarray(system.rhs, dtype=np.complex128)
    _validate(matrix, rhs)
    eps = options.threshold
    if options.method == "tsvd":
        coeffs, rank, svals = _tsvd_coefficients(matrix, rhs, eps)
    else:
        coeffs, rank = _cpqr_coefficients(matrix, rhs, eps)
        svals = np.linalg.svd(matrix, compute_uv=False)
    cond = np.inf if svals[-1] == 0.0 else float(svals[0] / svals[-1])
    return SolveReport(
        coefficients=coeffs,
        residual_norm=float(np.linalg.norm(matrix @ coeffs - rhs)),
        coef_norm=float(np.linalg.norm(coeffs)),
        condition_number=cond,
        numerical_rank=rank,
    )


def condition_number(system: LinearSystem) -> float:
    """sigma_max / sigma_min from a full SVD; infinity for a zero matrix."""
    _validate(system.matrix, system.rhs)
    svals = np.linalg.svd(np.asarray(system.matrix, dtype=np.complex128), compute_uv=False)
    if svals[-1] == 0.0:
        return np.inf
    return float(svals[0] / svals[-1])
