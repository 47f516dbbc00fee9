"""Analytic boundary curves, bounding boxes, and singularity bookkeeping.

Curves are closed 2pi-periodic parameterizations t -> f(t) of the boundary of
a simply connected domain, represented as complex numbers x + iy.  Three kinds
are provided: circles, a crescent family f(t) = z0 + e^{it} - a/(e^{it}+b),
and an inverted-ellipse family f(t) = z0 + e^{it}/(1+tau e^{2it}).  Derivatives
are implemented in closed form because the arc-length quadrature weights need
them exactly; finite differences are reserved for tests.

Orientation is normalized at construction: the discrete signed enclosed area is
computed on a dense parameter grid and the parameterization is reversed if it
comes out negative, so the outward unit normal is always the unit tangent
rotated by -pi/2.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

TWO_PI = 2.0 * np.pi

# |f'(t)| at or below this is treated as a degenerate parameterization
_DEGENERACY_TOL = 1e-12
_ORIENTATION_SAMPLES = 4096
_DISTANCE_SAMPLES = 10000
_CONTAINMENT_TOL = 1e-12

ArrayLike = Union[float, np.ndarray]


class DegenerateCurveError(ValueError):
    """Raised when |f'(t)| vanishes (numerically) somewhere on the curve."""


def _as_complex_point(p) -> complex:
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return complex(p[0], p[1])
    return complex(p)


def _as_t(t: ArrayLike) -> Tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=np.float64)
    return np.atleast_1d(arr), arr.ndim == 0


@dataclasses.dataclass(frozen=True)
class BoundarySample:
    """Equispaced-parameter boundary sample: nodes, points, outward normals, |f'|."""

    t: np.ndarray
    points: np.ndarray
    normals: np.ndarray
    speeds: np.ndarray

    def __len__(self) -> int:
        return self.t.size

    def __iter__(self) -> Iterator[Tuple[float, complex, complex, float]]:
        for j in range(self.t.size):
            yield (
                float(self.t[j]),
                complex(self.points[j]),
                complex(self.normals[j]),
                float(self.speeds[j]),
            )


@dataclasses.dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box with a free origin; basis coordinates are relative to it."""

    origin_x: float
    origin_y: float
    lx: float
    ly: float

    def __post_init__(self) -> None:
        if not (self.lx > 0.0 and self.ly > 0.0):
            raise ValueError("box side lengths must be positive")

    def local_xy(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        pts = np.asarray(points, dtype=np.complex128)
        return pts.real - self.origin_x, pts.imag - self.origin_y

    def contains(self, points: np.ndarray, tol: float = _CONTAINMENT_TOL) -> bool:
        u, v = self.local_xy(points)
        return bool(
            (u >= -tol).all()
            and (u <= self.lx + tol).all()
            and (v >= -tol).all()
            and (v <= self.ly + tol).all()
        )

    def contains_curve(
        self, curve: "BoundaryCurve", n: int = 2048, tol: float = _CONTAINMENT_TOL
    ) -> bool:
        ts = np.linspace(0.0, TWO_PI, n, endpoint=False)
        return self.contains(curve.point(ts), tol=tol)


@dataclasses.dataclass(frozen=True)
class Singularity:
    """One singularity of the curve's Schwartz function."""

    location: complex
    kind: str  # "pole" or "branch-point"
    inside_box: Optional[bool]
    distance_to_curve: float


class BoundaryCurve:
    """Base class: subclasses provide the raw parameterization and derivative."""

    kind = "abstract"

    def __init__(self) -> None:
        ts = np.linspace(0.0, TWO_PI, _ORIENTATION_SAMPLES, endpoint=False)
        d = self._raw_derivative(ts)
        if np.abs(d).min() <= _DEGENERACY_TOL:
            raise DegenerateCurveError(
                f"{self.kind}: |f'(t)| vanishes on the parameter grid"
            )
        pts = self._raw_point(ts)
        area = 0.5 * np.sum(np.imag(np.conj(pts) * d)) * (TWO_PI / _ORIENTATION_SAMPLES)
        self._sign = 1.0 if area >= 0.0 else -1.0

    def _raw_point(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _raw_derivative(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def point(self, t: ArrayLike) -> Union[complex, np.ndarray]:
        ts, scalar = _as_t(t)
        out = self._raw_point(self._sign * ts)
        return complex(out[0]) if scalar else out

    def derivative(self, t: ArrayLike) -> Union[complex, np.ndarray]:
        ts, scalar = _as_t(t)
        out = self._sign * self._raw_derivative(self._sign * ts)
        return complex(out[0]) if scalar else out

    def unit_normal(self, t: ArrayLike) -> Union[complex, np.ndarray]:
        ts, scalar = _as_t(t)
        d = self._sign * self._raw_derivative(self._sign * ts)
        speeds = np.abs(d)
        if speeds.min() <= _DEGENERACY_TOL:
            raise DegenerateCurveError(f"{self.kind}: |f'(t)| ~ 0 at requested t")
        out = -1j * d / speeds
        return complex(out[0]) if scalar else out


class Disk(BoundaryCurve):
    """Circle of given center and radius, f(t) = c + r e^{it}."""

    kind = "disk"

    def __init__(self, center, radius: float) -> None:
        if radius <= 0.0:
            raise ValueError("radius must be positive")
        self.center = _as_complex_point(center)
        self.radius = float(radius)
        super().__init__()

    def _raw_point(self, t: np.ndarray) -> np.ndarray:
        return self.center + self.radius * np.exp(1j * t)

    def _raw_derivative(self, t: np.ndarray) -> np.ndarray:
        return 1j * self.radius * np.exp(1j * t)


class Crescent(BoundaryCurve):
    """Crescent family f(t) = z0 + e^{it} - a/(e^{it}+b)."""

    kind = "crescent"

    def __init__(self, z0, a: float, b: float) -> None:
        if a <= 0.0 or b <= 0.0:
            raise ValueError("crescent parameters a, b must be positive")
        self.z0 = _as_complex_point(z0)
        self.a = float(a)
        self.b = float(b)
        super().__init__()

    def _raw_point(self, t: np.ndarray) -> np.ndarray:
        w = np.exp(1j * t)
        return self.z0 + w - self.a / (w + self.b)

    def _raw_derivative(self, t: np.ndarray) -> np.ndarray:
        w = np.exp(1j * t)
        return 1j * w * (1.0 + self.a / (w + self.b) ** 2)


class InvertedEllipse(BoundaryCurve):
    """Inverted-ellipse family f(t) = z0 + e^{it}/(1 + tau e^{2it})."""

    kind = "inverted-ellipse"

    def __init__(self, z0, tau: float) -> None:
        if not 0.0 < tau < 1.0:
            raise ValueError("tau must lie in (0, 1)")
        self.z0 = _as_complex_point(z0)
        self.tau = float(tau)
        super().__init__()

    def _raw_point(self, t: np.ndarray) -> np.ndarray:
        w = np.exp(1j * t)
        return self.z0 + w / (1.0 + self.tau * w * w)

    def _raw_derivative(self, t: np.ndarray) -> np.ndarray:
        w = np.exp(1j * t)
        q = self.tau * w * w
        return 1j * w * (1.0 - q) / (1.0 + q) ** 2


def point(curve: BoundaryCurve, t: ArrayLike) -> Union[complex, np.ndarray]:
    return curve.point(t)


def unit_normal(curve: BoundaryCurve, t: ArrayLike) -> Union[complex, np.ndarray]:
    return curve.unit_normal(t)


def sample_boundary(curve: BoundaryCurve, m: int) -> BoundarySample:
    """Sample at the m equispaced parameter nodes t_j = 2 pi j / m."""
    if m < 1:
        raise ValueError("need at least one boundary point")
    ts = TWO_PI * np.arange(m, dtype=np.float64) / m
    pts = curve.point(ts)
    normals = curve.unit_normal(ts)
    speeds = np.abs(curve.derivative(ts))
    return BoundarySample(t=ts, points=pts, normals=normals, speeds=speeds)


def _distance_to_curve(curve: BoundaryCurve, z: complex) -> float:
    ts = np.linspace(0.0, TWO_PI, _DISTANCE_SAMPLES, endpoint=False)
    return float(np.abs(curve.point(ts) - z).min())


def schwartz_singularities(
    curve: BoundaryCurve, box: Optional[BoundingBox] = None
) -> List[Singularity]:
    """Closed-form singularities of the curve's Schwartz function.

    For the crescent these are a pole at z0 - a/b and branch points at
    z0 - b +- 2i sqrt(a); for the inverted ellipse, branch points at
    z0 +- sqrt(1/(4 tau)).  Disks have none relevant here.  The inside-box
    flag is None when no box is supplied.
    """
    raw: List[Tuple[complex, str]] = []
    if isinstance(curve, Crescent):
        raw.append((curve.z0 - curve.a / curve.b, "pole"))
        root = 2.0 * np.sqrt(curve.a)
        raw.append((curve.z0 - curve.b + 1j * root, "branch-point"))
        raw.append((curve.z0 - curve.b - 1j * root, "branch-point"))
    elif isinstance(curve, InvertedEllipse):
        offset = np.sqrt(1.0 / (4.0 * curve.tau))
        raw.append((curve.z0 + offset, "branch-point"))
        raw.append((curve.z0 - offset, "branch-point"))
    out = []
    for loc, kind in raw:
        inside = box.contains(np.array([loc])) if box is not None else None
        out.append(
            Singularity(
                location=loc,
                kind=kind,
                inside_box=inside,
                distance_to_curve=_distance_to_curve(curve, loc),
            )
        )
    return out
