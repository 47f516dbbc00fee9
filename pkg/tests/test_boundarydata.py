"""Incident field and boundary trace tests."""

import numpy as np
import pytest

from wbm2d.boundarydata import (
    BoundaryCondition,
    ConstantField,
    PlaneWave,
    PointSource,
    boundary_traces,
    field_gradient,
    field_value,
    trace,
    validate_source_distance,
)
from wbm2d.geometry import Disk, sample_boundary

K = 0.924
H0_AT_K = complex(0.7976790427030204, 0.026305221915290673)  # H1_0(0.924)


def test_plane_wave_values():
    f = PlaneWave(k=K, angle=0.3)
    assert field_value(f, 0.0j) == pytest.approx(1.0)
    p = 1.2 + 0.4j
    d = np.cos(0.3) * p.real + np.sin(0.3) * p.imag
    assert field_value(f, p) == pytest.approx(np.exp(1j * K * d), rel=1e-14)


def test_constant_value():
    f = ConstantField(value=1.0)
    assert field_value(f, 2.3 + 9.9j) == 1.0
    assert field_value(ConstantField(value=2.0 - 1.0j), 0.5j) == 2.0 - 1.0j


def test_point_source_value_unit_distance():
    f = PointSource(k=K, location=1.5 + 1.5j)
    assert field_value(f, 2.5 + 1.5j) == pytest.approx(H0_AT_K, rel=1e-13)
    assert field_value(f, 1.5 + 0.5j) == pytest.approx(H0_AT_K, rel=1e-13)


def test_point_source_at_source_rejected():
    f = PointSource(k=K, location=1.0 + 1.0j)
    with pytest.raises(ValueError):
        field_value(f, 1.0 + 1.0j)
    with pytest.raises(ValueError):
        field_gradient(f, 1.0 + 1.0j)


def test_plane_wave_gradient_at_origin():
    f = PlaneWave(k=K, angle=0.3)
    gx, gy = field_gradient(f, 0.0j)
    assert gx == pytest.approx(1j * K * np.cos(0.3))
    assert gy == pytest.approx(1j * K * np.sin(0.3))


def test_constant_gradient_zero():
    gx, gy = field_gradient(ConstantField(value=3.0), 1.0 + 2.0j)
    assert gx == 0.0 and gy == 0.0


@pytest.mark.parametrize(
    "field",
    [PlaneWave(k=K, angle=0.3), PointSource(k=K, location=-0.7 - 0.2j)],
)
def test_gradient_matches_finite_differences(field):
    rng = np.random.default_rng(23)
    h = 1e-6
    for _ in range(100):
        p = complex(rng.uniform(0.6, 3.0), rng.uniform(0.6, 3.0))
        gx, gy = field_gradient(field, p)
        fx = (field_value(field, p + h) - field_value(field, p - h)) / (2 * h)
        fy = (field_value(field, p + 1j * h) - field_value(field, p - 1j * h)) / (2 * h)
        scale = abs(gx) + abs(gy) + K
        assert abs(gx - fx) <= 1e-7 * scale
        assert abs(gy - fy) <= 1e-7 * scale


@pytest.mark.parametrize(
    "field",
    [PlaneWave(k=K, angle=1.1), PointSource(k=K, location=0.0j)],
)
def test_fields_satisfy_helmholtz(field):
    rng = np.random.default_rng(29)
    h = 1e-4
    for _ in range(40):
        p = complex(rng.uniform(0.6, 2.5), rng.uniform(0.6, 2.5))
        v = field_value(field, p)
        lap = (
            field_value(field, p + h)
            + field_value(field, p - h)
            + field_value(field, p + 1j * h)
            + field_value(field, p - 1j * h)
            - 4.0 * v
        ) / (h * h)
        assert abs(lap + K * K * v) <= 1e-6 * K * K * abs(v)


def test_neumann_trace_perpendicular_normal_vanishes():
    bc = BoundaryCondition("neumann", PlaneWave(k=K, angle=0.3))
    disk = Disk(0.0j, 1.0)
    t = 0.3 + np.pi / 2
    val = trace(bc, disk.point(t), disk.unit_normal(t))
    assert abs(val) <= 1e-13


def test_neumann_trace_parallel_normal():
    bc = BoundaryCondition("neumann", PlaneWave(k=K, angle=0.3))
    p = complex(np.cos(0.3), np.sin(0.3))
    n = complex(np.cos(0.3), np.sin(0.3))
    val = trace(bc, p, n)
    assert val == pytest.approx(1j * K * np.exp(1j * K), rel=1e-12)
    h = 1e-6
    f = bc.field
    fd = (field_value(f, p + h * n) - field_value(f, p - h * n)) / (2 * h)
    assert val == pytest.approx(fd, rel=1e-9)


def test_dirichlet_constant_trace():
    bc = BoundaryCondition("dirichlet", ConstantField(value=1.0))
    for t in (0.0, 1.0, 4.0):
        d = Disk(1.5 + 1.5j, 1.0)
        assert trace(bc, d.point(t), d.unit_normal(t)) == 1.0


def test_trace_linear_in_constant_scaling():
    d = Disk(1.5 + 1.5j, 1.0)
    p, n = d.point(0.8), d.unit_normal(0.8)
    base = trace(BoundaryCondition("dirichlet", ConstantField(value=1.0)), p, n)
    for c in (2.0, -0.5 + 3.0j, 1e-3j):
        scaled = trace(BoundaryCondition("dirichlet", ConstantField(value=c)), p, n)
        assert abs(scaled - c * base) <= 1e-14 * abs(c)


def test_neumann_constant_rejected():
    with pytest.raises(ValueError):
        BoundaryCondition("neumann", ConstantField(value=1.0))
    with pytest.raises(ValueError):
        BoundaryCondition("robin", ConstantField(value=1.0))


def test_boundary_traces_vectorized():
    disk = Disk(1.5 + 1.5j, 1.0)
    sample = sample_boundary(disk, 37)
    for bc in (
        BoundaryCondition("neumann", PlaneWave(k=K, angle=0.3)),
        BoundaryCondition("dirichlet", PointSource(k=K, location=-1.0 + 1.5j)),
        BoundaryCondition("dirichlet", ConstantField(value=1.0)),
    ):
        vec = boundary_traces(bc, sample)
        ref = np.array(
            [trace(bc, p, n) for _, p, n, _ in sample], dtype=np.complex128
        )
        np.testing.assert_allclose(vec, ref, rtol=1e-13, atol=1e-15)


def test_source_distance_validation():
    disk = Disk(1.5 + 1.5j, 1.0)
    validate_source_distance(PointSource(k=K, location=1.5 + 1.5j), disk)
    on_boundary = PointSource(k=K, location=2.5 + 1.5j)
    with pytest.raises(ValueError):
        validate_source_distance(on_boundary, disk)
    # non-point-source fields pass trivially
    validate_source_distance(PlaneWave(k=K, angle=0.0), disk)
