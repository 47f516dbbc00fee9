"""Dense linear system assembly for both boundary formulations.

Collocation enforces the boundary condition at M = ceil(gamma N) equispaced
parameter points, one row per point.  The weighted-residual formulation
projects the boundary residual onto the basis functions themselves, with the
boundary integrals approximated by the periodic trapezoidal rule including
the arc-length Jacobian |f'(t)|:

    Neumann:    a_ij = (2 pi / Q) sum_q  Phi_i(s_q) dPhi_j/dn(s_q) |f'(t_q)|
    Dirichlet:  a_ij = (2 pi / Q) sum_q  Phi_i(s_q) Phi_j(s_q) |f'(t_q)|

and the right-hand side pairs Phi_i with the boundary data the same way.
The weighting functions enter unconjugated, which is what makes the Neumann
matrix symmetric for a Trefftz basis.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Optional

import numpy as np

from .boundarydata import (
    BoundaryCondition,
    boundary_traces,
    validate_source_distance,
)
from .geometry import BoundaryCurve, sample_boundary
from .wavebasis import WaveBasisSpec, normal_derivative_matrix, values_matrix

DEFAULT_QUADRATURE_FACTOR = 20
MIN_QUADRATURE_COUNT = 400


@dataclasses.dataclass(frozen=True)
class LinearSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    formulation: str  # "weighted-residual" | "collocation"
    gamma: Optional[float] = None
    quadrature_count: Optional[int] = None

    def __post_init__(self) -> None:
        if self.matrix.ndim != 2 or self.rhs.ndim != 1:
            raise ValueError("matrix must be 2-D and rhs 1-D")
        if self.matrix.shape[0] != self.rhs.shape[0]:
            raise ValueError("matrix and rhs row counts differ")

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]


def _validate_inputs(
    spec: WaveBasisSpec, curve: BoundaryCurve, bc: BoundaryCondition
) -> None:
    if not spec.box.contains_curve(curve):
        raise ValueError("boundary curve is not contained in the basis bounding box")
    validate_source_distance(bc.field, curve)


def collocation_system(
    spec: WaveBasisSpec,
    curve: BoundaryCurve,
    bc: BoundaryCondition,
    gamma: float,
    row_weighting: bool = False,
) -> LinearSystem:
    """Oversampled point collocation: M = ceil(gamma N) rows, gamma > 1."""
    if gamma <= 1.0:
        raise ValueError("oversampling factor gamma must exceed 1")
    _validate_inputs(spec, curve, bc)
    m = math.ceil(gamma * spec.n)
    sample = sample_boundary(curve, m)
    if bc.type == "dirichlet":
        matrix = values_matrix(spec, sample.points)
    else:
        matrix = normal_derivative_matrix(spec, sample.points, sample.normals)
    rhs = boundary_traces(bc, sample)
    if row_weighting:
        w = np.sqrt(2.0 * np.pi * sample.speeds / m)
        matrix = matrix * w[:, None]
        rhs = rhs * w
    return LinearSystem(
        matrix=matrix, rhs=rhs, formulation="collocation", gamma=float(gamma)
    )


def weighted_residual_system(
    spec: WaveBasisSpec,
    curve: BoundaryCurve,
    bc: BoundaryCondition,
    q: Optional[int] = None,
) -> LinearSystem:
    """Square Galerkin-type system with trapezoidal boundary quadrature."""
    if q is None:
        q = max(DEFAULT_QUADRATURE_FACTOR * spec.n, MIN_QUADRATURE_COUNT)
    if q < 2 * spec.n:
        raise ValueError("quadrature count must be at least 2N")
    _validate_inputs(spec, curve, bc)
    sample = sample_boundary(curve, q)
    weights = (2.0 * np.pi / q) * sample.speeds
    values = values_matrix(spec, sample.points)
    if bc.type == "dirichlet":
        paired = values
    else:
        paired = normal_derivative_matrix(spec, sample.points, sample.normals)
    matrix = values.T @ (paired * weights[:, None])
    rhs = values.T @ (boundary_traces(bc, sample) * weights)
    return LinearSystem(
        matrix=matrix,
        rhs=rhs,
        formulation="weighted-residual",
        quadrature_count=int(q),
    )
