"""Analytic incident fields and their Dirichlet/Neumann boundary traces.

Three field kinds cover the experiments: a plane wave e^{+ik d.x} with
direction d = (cos theta, sin theta), a point source H1_0(k r) centered
outside or inside the domain, and a constant (pure boundary data, not a
Helmholtz solution, so it is only admitted as Dirichlet data).
"""

from __future__ import annotations

import dataclasses
from typing import Tuple, Union

import numpy as np

from .geometry import BoundaryCurve, BoundarySample, TWO_PI
from .specfun import hankel1_0, hankel1_1

_MIN_SOURCE_DISTANCE = 1e-9


@dataclasses.dataclass(frozen=True)
class PlaneWave:
    k: float
    angle: float


@dataclasses.dataclass(frozen=True)
class PointSource:
    k: float
    location: complex


@dataclasses.dataclass(frozen=True)
class ConstantField:
    value: complex


AnalyticField = Union[PlaneWave, PointSource, ConstantField]


@dataclasses.dataclass(frozen=True)
class BoundaryCondition:
    type: str  # "dirichlet" | "neumann"
    field: AnalyticField

    def __post_init__(self) -> None:
        if self.type not in ("dirichlet", "neumann"):
            raise ValueError(f"unknown boundary condition type {self.type!r}")
        if self.type == "neumann" and isinstance(self.field, ConstantField):
            raise ValueError("a constant is not a Helmholtz solution; Neumann data undefined")


def _as_complex(p) -> complex:
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return complex(p[0], p[1])
    return complex(p)


def field_value(field: AnalyticField, p):
    """Field value at a complex point or array of points."""
    pts = np.asarray(p, dtype=np.complex128)
    if isinstance(field, ConstantField):
        out = np.full(pts.shape, field.value, dtype=np.complex128)
    elif isinstance(field, PlaneWave):
        d = pts.real * np.cos(field.angle) + pts.imag * np.sin(field.angle)
        out = np.exp(1j * field.k * d)
    else:
        r = np.abs(pts - field.location)
        out = hankel1_0(field.k * np.atleast_1d(r))
        out = out.reshape(pts.shape) if pts.shape else out
    if pts.shape == ():
        return complex(out) if np.ndim(out) == 0 else complex(out[0])
    return out


def field_gradient(field: AnalyticField, p) -> Tuple[complex, complex]:
    """(d/dx, d/dy) of the field; vectorized like field_value."""
    pts = np.asarray(p, dtype=np.complex128)
    scalar = pts.shape == ()
    pts1 = np.atleast_1d(pts)
    if isinstance(field, ConstantField):
        gx = np.zeros(pts1.shape, dtype=np.complex128)
        gy = np.zeros(pts1.shape, dtype=np.complex128)
    elif isinstance(field, PlaneWave):
        d = pts1.real * np.cos(field.angle) + pts1.imag * np.sin(field.angle)
        v = np.exp(1j * field.k * d)
        gx = 1j * field.k * np.cos(field.angle) * v
        gy = 1j * field.k * np.sin(field.angle) * v
    else:
        dz = pts1 - field.location
        r = np.abs(dz)
        radial = -field.k * hankel1_1(field.k * r)
        gx = radial * dz.real / r
        gy = radial * dz.imag / r
    if scalar:
        return complex(gx[0]), complex(gy[0])
    return gx, gy


def trace(bc: BoundaryCondition, p, normal) -> complex:
    """Boundary trace: the value for Dirichlet, gradient . n for Neumann."""
    if bc.type == "dirichlet":
        return field_value(bc.field, _as_complex(p))
    n = _as_complex(normal)
    gx, gy = field_gradient(bc.field, _as_complex(p))
    return gx * n.real + gy * n.imag


def boundary_traces(bc: BoundaryCondition, sample: BoundarySample) -> np.ndarray:
    """Vectorized trace over a BoundarySample."""
    if bc.type == "dirichlet":
        return np.asarray(field_value(bc.field, sample.points), dtype=np.complex128)
    gx, gy = field_gradient(bc.field, sample.points)
    return gx * sample.normals.real + gy * sample.normals.imag


def validate_source_distance(
    field: AnalyticField, curve: BoundaryCurve, n: int = 2048
) -> None:
    """Reject point sources sitting (numerically) on the boundary."""
    if not isinstance(field, PointSource):
        return
    ts = np.linspace(0.0, TWO_PI, n, endpoint=False)
    dist = np.abs(curve.point(ts) - field.location).min()
    if dist <= _MIN_SOURCE_DISTANCE:
        raise ValueError(
            f"point source at {field.location} lies on the boundary (distance {dist:.2e})"
        )
