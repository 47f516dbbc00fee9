"""Linear system assembly tests for both formulations."""

import numpy as np
import pytest

from wbm2d.assembly import (
    LinearSystem,
    collocation_system,
    weighted_residual_system,
)
from wbm2d.boundarydata import (
    BoundaryCondition,
    ConstantField,
    PlaneWave,
    PointSource,
)
from wbm2d.geometry import BoundingBox, Crescent, Disk
from wbm2d.wavebasis import (
    basis_indices,
    evaluate,
    make_spec,
    normal_derivative,
)

K = 0.924
BOX3 = BoundingBox(0.0, 0.0, 3.0, 3.0)
DISK = Disk(1.5 + 1.5j, 1.0)
NEUMANN_PW = BoundaryCondition("neumann", PlaneWave(k=K, angle=0.3))
DIRICHLET_ONE = BoundaryCondition("dirichlet", ConstantField(value=1.0))

# closed form for the weighted-residual rhs entry of the (family 1, m=0)
# basis function with constant unit Dirichlet data on the unit circle
# centered at (1.5, 1.5): integral of e^{-i k y(t)} ds = 2 pi J0(k) e^{-1.5 i k}
RHS_M0_DISK = complex(0.9209302288242461, -4.926629993230243)


def test_collocation_shapes():
    spec = make_spec(K, 2.0, BOX3)
    sys = collocation_system(spec, DISK, NEUMANN_PW, gamma=2.0)
    assert spec.n == 12
    assert sys.matrix.shape == (24, 12)
    assert sys.rhs.shape == (24,)
    assert sys.formulation == "collocation"
    sys4 = collocation_system(spec, DISK, DIRICHLET_ONE, gamma=4.0)
    assert sys4.matrix.shape == (48, 12)


def test_collocation_gamma_must_oversample():
    spec = make_spec(K, 2.0, BOX3)
    with pytest.raises(ValueError):
        collocation_system(spec, DISK, NEUMANN_PW, gamma=1.0)


def test_collocation_entries_match_basis():
    spec = make_spec(K, 3.0, BOX3)
    idx = basis_indices(spec)
    rng = np.random.default_rng(31)
    for bc in (NEUMANN_PW, DIRICHLET_ONE):
        sys = collocation_system(spec, DISK, bc, gamma=2.0)
        m = sys.matrix.shape[0]
        ts = 2 * np.pi * np.arange(m) / m
        for _ in range(50):
            i = int(rng.integers(0, m))
            j = int(rng.integers(0, spec.n))
            p = DISK.point(ts[i])
            if bc.type == "dirichlet":
                ref = evaluate(spec, idx[j], p)
            else:
                ref = normal_derivative(spec, idx[j], p, DISK.unit_normal(ts[i]))
            assert abs(sys.matrix[i, j] - ref) <= 1e-15 * max(1.0, abs(ref))


def test_collocation_constant_rhs_is_ones():
    spec = make_spec(K, 2.0, BOX3)
    sys = collocation_system(spec, DISK, DIRICHLET_ONE, gamma=2.0)
    np.testing.assert_array_equal(sys.rhs, np.ones(24, dtype=np.complex128))


def test_collocation_row_weighting_flag():
    spec = make_spec(K, 2.0, BOX3)
    plain = collocation_system(spec, DISK, NEUMANN_PW, gamma=2.0)
    weighted = collocation_system(
        spec, DISK, NEUMANN_PW, gamma=2.0, row_weighting=True
    )
    m = plain.matrix.shape[0]
    w = np.sqrt(2 * np.pi * 1.0 / m)  # unit disk: |f'| = 1
    np.testing.assert_allclose(weighted.matrix, w * plain.matrix, rtol=1e-14)
    np.testing.assert_allclose(weighted.rhs, w * plain.rhs, rtol=1e-14)


def test_weighted_residual_square_and_symmetric():
    spec = make_spec(K, 2.0, BOX3)
    sys = weighted_residual_system(spec, DISK, NEUMANN_PW, q=240)
    assert sys.matrix.shape == (12, 12)
    assert sys.quadrature_count == 240
    amax = np.abs(sys.matrix).max()
    assert np.abs(sys.matrix - sys.matrix.T).max() <= 1e-10 * amax


def test_weighted_residual_dirichlet_symmetric():
    spec = make_spec(K, 2.0, BOX3)
    crescent = Crescent(1.5 + 1.5j, 0.5, 0.5)
    sys = weighted_residual_system(spec, crescent, DIRICHLET_ONE, q=240)
    amax = np.abs(sys.matrix).max()
    assert np.abs(sys.matrix - sys.matrix.T).max() <= 1e-10 * amax


def test_weighted_residual_quadrature_self_convergence():
    spec = make_spec(K, 2.0, BOX3)
    a10 = weighted_residual_system(spec, DISK, NEUMANN_PW, q=10 * spec.n).matrix
    a20 = weighted_residual_system(spec, DISK, NEUMANN_PW, q=20 * spec.n).matrix
    # entrywise relative change, with negligible entries measured against the
    # matrix scale
    floor = np.maximum(np.abs(a20), np.abs(a20).max())
    assert (np.abs(a10 - a20) / floor).max() < 1e-12


def test_weighted_residual_rhs_oracle():
    spec = make_spec(K, 2.0, BOX3)
    sys = weighted_residual_system(spec, DISK, DIRICHLET_ONE, q=400)
    assert abs(sys.rhs[0] - RHS_M0_DISK) <= 1e-12


def test_rhs_linear_in_boundary_data():
    spec = make_spec(K, 2.0, BOX3)
    c = -0.7 + 2.2j
    # collocation rows are plain trace evaluations, so scaling is exact
    one = collocation_system(spec, DISK, DIRICHLET_ONE, gamma=2.0)
    scaled = collocation_system(
        spec, DISK, BoundaryCondition("dirichlet", ConstantField(value=c)), gamma=2.0
    )
    np.testing.assert_array_equal(scaled.rhs, c * one.rhs)
    np.testing.assert_array_equal(scaled.matrix, one.matrix)
    # the quadrature reduction reorders roundoff; entries that are exact zeros
    # of the integral carry noise at the 1e-16 level, hence the scale floor
    one_wr = weighted_residual_system(spec, DISK, DIRICHLET_ONE, q=240)
    scaled_wr = weighted_residual_system(
        spec, DISK, BoundaryCondition("dirichlet", ConstantField(value=c)), q=240
    )
    floor = 5e-15 * abs(c) * np.abs(one_wr.rhs).max()
    np.testing.assert_allclose(
        scaled_wr.rhs, c * one_wr.rhs, rtol=5e-15, atol=floor
    )
    np.testing.assert_array_equal(scaled_wr.matrix, one_wr.matrix)


def test_weighted_residual_minimum_quadrature():
    spec = make_spec(K, 2.0, BOX3)
    with pytest.raises(ValueError):
        weighted_residual_system(spec, DISK, NEUMANN_PW, q=2 * spec.n - 1)


def test_default_quadrature_count():
    spec = make_spec(K, 2.0, BOX3)
    sys = weighted_residual_system(spec, DISK, NEUMANN_PW)
    assert sys.quadrature_count == 400  # max(20N, 400) with N=12
    spec_big = make_spec(K, 12.0, BOX3)
    sys_big = weighted_residual_system(spec_big, DISK, NEUMANN_PW)
    assert sys_big.quadrature_count == 20 * spec_big.n


def test_curve_must_fit_in_box():
    small_box = BoundingBox(0.0, 0.0, 2.0, 3.0)
    spec = make_spec(K, 2.0, small_box)
    with pytest.raises(ValueError):
        collocation_system(spec, DISK, NEUMANN_PW, gamma=2.0)
    with pytest.raises(ValueError):
        weighted_residual_system(spec, DISK, NEUMANN_PW)


def test_source_on_boundary_rejected():
    spec = make_spec(K, 2.0, BOX3)
    bc = BoundaryCondition("dirichlet", PointSource(k=K, location=2.5 + 1.5j))
    with pytest.raises(ValueError):
        collocation_system(spec, DISK, bc, gamma=2.0)


def test_linear_system_validation():
    with pytest.raises(ValueError):
        LinearSystem(
            matrix=np.zeros((3, 2), dtype=np.complex128),
            rhs=np.zeros(4, dtype=np.complex128),
            formulation="collocation",
        )
