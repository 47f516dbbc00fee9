"""Wave function set for interior 2D Helmholtz problems on a bounding box.

The set contains four families of Trefftz functions on a box with sides
Lx, Ly (coordinates relative to the box origin):

    families 1-2:  cos(kx x) e^{-i ky y},  kx = m pi / Lx,  ky = +-sqrt(k^2-kx^2)
    families 3-4:  e^{-i kx x} cos(ky y),  ky = n pi / Ly,  kx = +-sqrt(k^2-ky^2)

Each function satisfies the homogeneous Helmholtz equation exactly.  When the
square root turns imaginary the function is evanescent; the two members of a
pair are chosen to decay from opposite box edges, and the growing one is
normalized by its sup over the box so every scaled function has unit sup-norm.

Truncation follows N_m = ceil(k T Lx / pi), N_n = ceil(k T Ly / pi), giving
N = 2(N_m+1) + 2(N_n+1) functions in total.
"""

from __future__ import annotations

import dataclasses
import math
from typing import List, Tuple, Union

import numpy as np

from . import _basis_kernels
from .geometry import BoundingBox


@dataclasses.dataclass(frozen=True)
class WaveBasisSpec:
    box: BoundingBox
    k: float
    t: float
    nm: int
    nn: int
    n: int


@dataclasses.dataclass(frozen=True)
class BasisIndex:
    family: int  # 1..4
    order: int  # 0..Nm (families 1-2) or 0..Nn (families 3-4)


def truncation_counts(k: float, t: float, box: BoundingBox) -> Tuple[int, int]:
    if k <= 0.0 or t <= 0.0:
        raise ValueError("wavenumber and truncation parameter must be positive")
    nm = math.ceil(k * t * box.lx / math.pi)
    nn = math.ceil(k * t * box.ly / math.pi)
    return nm, nn


def make_spec(k: float, t: float, box: BoundingBox) -> WaveBasisSpec:
    nm, nn = truncation_counts(k, t, box)
    return WaveBasisSpec(
        box=box, k=float(k), t=float(t), nm=nm, nn=nn, n=2 * (nm + 1) + 2 * (nn + 1)
    )


def basis_indices(spec: WaveBasisSpec) -> List[BasisIndex]:
    """All indices in coefficient-vector order: family 1, 2, 3, then 4."""
    out = []
    for family, top in ((1, spec.nm), (2, spec.nm), (3, spec.nn), (4, spec.nn)):
        out.extend(BasisIndex(family, order) for order in range(top + 1))
    return out


def _check_index(spec: WaveBasisSpec, idx: BasisIndex) -> None:
    if idx.family not in (1, 2, 3, 4):
        raise IndexError(f"family must be 1..4, got {idx.family}")
    top = spec.nm if idx.family in (1, 2) else spec.nn
    if not 0 <= idx.order <= top:
        raise IndexError(f"order {idx.order} out of range 0..{top} for family {idx.family}")


def wavenumbers(spec: WaveBasisSpec, idx: BasisIndex) -> Tuple[complex, complex]:
    """Wavenumber components (kx, ky) with kx^2 + ky^2 = k^2.

    The evanescent branch signs make family 1 (3) decay away from the y=0
    (x=0) edge and family 2 (4) decay away from the opposite edge once scaled.
    """
    _check_index(spec, idx)
    k = spec.k
    if idx.family in (1, 2):
        grid = idx.order * math.pi / spec.box.lx
    else:
        grid = idx.order * math.pi / spec.box.ly
    if grid <= k:
        s = math.sqrt(k * k - grid * grid)
        other = complex(s if idx.family in (1, 3) else -s, 0.0)
    else:
        beta = math.sqrt(grid * grid - k * k)
        other = complex(0.0, -beta if idx.family in (1, 3) else beta)
    if idx.family in (1, 2):
        return complex(grid, 0.0), other
    return other, complex(grid, 0.0)


def evanescent_scale(spec: WaveBasisSpec, idx: BasisIndex) -> float:
    """Normalization sigma: reciprocal of the sup of the exponential factor.

    Decaying members already have sup 1; the growing members (families 2 and 4
    in the evanescent regime) are scaled by e^{-beta L} so the scaled function
    peaks at the far box edge with unit modulus.
    """
    kx, ky = wavenumbers(spec, idx)
    if idx.family == 2 and ky.imag > 0.0:
        return math.exp(-ky.imag * spec.box.ly)
    if idx.family == 4 and kx.imag > 0.0:
        return math.exp(-kx.imag * spec.box.lx)
    return 1.0


def _column(spec: WaveBasisSpec, idx: BasisIndex) -> Tuple[int, float, complex, float]:
    kx, ky = wavenumbers(spec, idx)
    if idx.family in (1, 2):
        return 0, kx.real, -1j * ky, evanescent_scale(spec, idx)
    return 1, ky.real, -1j * kx, evanescent_scale(spec, idx)


def _as_xy(p) -> Tuple[float, float]:
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return float(p[0]), float(p[1])
    z = complex(p)
    return z.real, z.imag


def evaluate(spec: WaveBasisSpec, idx: BasisIndex, p) -> complex:
    """Scaled basis function value at a point (absolute coordinates)."""
    axis, c, q, sigma = _column(spec, idx)
    x, y = _as_xy(p)
    u = x - spec.box.origin_x
    v = y - spec.box.origin_y
    if axis == 1:
        u, v = v, u
    return sigma * math.cos(c * u) * complex(np.exp(q * v))


def gradient(spec: WaveBasisSpec, idx: BasisIndex, p) -> Tuple[complex, complex]:
    """Analytic (d/dx, d/dy) of the scaled basis function."""
    axis, c, q, sigma = _column(spec, idx)
    x, y = _as_xy(p)
    u = x - spec.box.origin_x
    v = y - spec.box.origin_y
    if axis == 1:
        u, v = v, u
    e = sigma * complex(np.exp(q * v))
    du = -c * math.sin(c * u) * e
    dv = q * math.cos(c * u) * e
    return (du, dv) if axis == 0 else (dv, du)


def normal_derivative(spec: WaveBasisSpec, idx: BasisIndex, p, normal) -> complex:
    """Gradient dotted with an outward unit normal (given as nx + i ny)."""
    nx, ny = _as_xy(normal)
    if abs(math.hypot(nx, ny) - 1.0) > 1e-8:
        raise ValueError("normal must have unit length")
    gx, gy = gradient(spec, idx, p)
    return gx * nx + gy * ny


def values_matrix(spec: WaveBasisSpec, points) -> np.ndarray:
    """(len(points), N) matrix of scaled basis values at complex points."""
    return _basis_kernels.values(spec, points)


def normal_derivative_matrix(spec: WaveBasisSpec, points, normals) -> np.ndarray:
    """(len(points), N) matrix of normal derivatives at complex points."""
    return _basis_kernels.normal_derivatives(spec, points, normals)
