"""Hot evaluation kernels for the wave function set.

Every basis function reduces to one column template

    sigma * cos(c*u) * exp(q*v)

where (u, v) is (x, y) for the x-cosine families and (y, x) for the y-cosine
families, c is the real cosine wavenumber, q = -i * k_exp collects the
exponential wavenumber, and sigma is the evanescent normalization.  The loop
kernels are compiled with numba when available; the broadcast versions are the
pure-numpy fallback and the cross-check in tests.
"""

from __future__ import annotations

import functools

import numpy as np

from .jitconfig import JIT_ENABLED, maybe_njit


def _values_fill(xs, ys, axis, c, q, sigma, out):
    for i in range(xs.shape[0]):
        for j in range(c.shape[0]):
            if axis[j] == 0:
                u = xs[i]
                v = ys[i]
            else:
                u = ys[i]
                v = xs[i]
            out[i, j] = sigma[j] * np.cos(c[j] * u) * np.exp(q[j] * v)


def _normal_derivative_fill(xs, ys, nx, ny, axis, c, q, sigma, out):
    for i in range(xs.shape[0]):
        for j in range(c.shape[0]):
            if axis[j] == 0:
                u = xs[i]
                v = ys[i]
            else:
                u = ys[i]
                v = xs[i]
            e = sigma[j] * np.exp(q[j] * v)
            du = -c[j] * np.sin(c[j] * u) * e
            dv = q[j] * np.cos(c[j] * u) * e
            if axis[j] == 0:
                out[i, j] = du * nx[i] + dv * ny[i]
            else:
                out[i, j] = dv * nx[i] + du * ny[i]


values_fill = maybe_njit(cache=True)(_values_fill)
normal_derivative_fill = maybe_njit(cache=True)(_normal_derivative_fill)


def values_numpy(xs, ys, axis, c, q, sigma):
    u = np.where(axis[None, :] == 0, xs[:, None], ys[:, None])
    v = np.where(axis[None, :] == 0, ys[:, None], xs[:, None])
    return sigma[None, :] * np.cos(c[None, :] * u) * np.exp(q[None, :] * v)


def normal_derivative_numpy(xs, ys, nx, ny, axis, c, q, sigma):
    first = axis[None, :] == 0
    u = np.where(first, xs[:, None], ys[:, None])
    v = np.where(first, ys[:, None], xs[:, None])
    e = sigma[None, :] * np.exp(q[None, :] * v)
    du = -c[None, :] * np.sin(c[None, :] * u) * e
    dv = q[None, :] * np.cos(c[None, :] * u) * e
    gx = np.where(first, du, dv)
    gy = np.where(first, dv, du)
    return gx * nx[:, None] + gy * ny[:, None]


@functools.lru_cache(maxsize=128)
def column_params(spec):
    """Per-column (axis, c, q, sigma) arrays for a WaveBasisSpec."""
    from .wavebasis import basis_indices, evanescent_scale, wavenumbers

    idx = basis_indices(spec)
    axis = np.empty(len(idx), dtype=np.int64)
    c = np.empty(len(idx), dtype=np.float64)
    q = np.empty(len(idx), dtype=np.complex128)
    sigma = np.empty(len(idx), dtype=np.float64)
    for j, ix in enumerate(idx):
        kx, ky = wavenumbers(spec, ix)
        if ix.family in (1, 2):
            axis[j] = 0
            c[j] = kx.real
            q[j] = -1j * ky
        else:
            axis[j] = 1
            c[j] = ky.real
            q[j] = -1j * kx
        sigma[j] = evanescent_scale(spec, ix)
    return axis, c, q, sigma


def values(spec, points):
    xs, ys = spec.box.local_xy(np.asarray(points, dtype=np.complex128))
    axis, c, q, sigma = column_params(spec)
    if JIT_ENABLED:
        out = np.empty((xs.shape[0], c.shape[0]), dtype=np.complex128)
        values_fill(xs, ys, axis, c, q, sigma, out)
        return out
    return values_numpy(xs, ys, axis, c, q, sigma)


def normal_derivatives(spec, points, normals):
    xs, ys = spec.box.local_xy(np.asarray(points, dtype=np.complex128))
    nrm = np.asarray(normals, dtype=np.complex128)
    axis, c, q, sigma = column_params(spec)
    if JIT_ENABLED:
        out = np.empty((xs.shape[0], c.shape[0]), dtype=np.complex128)
        normal_derivative_fill(xs, ys, nrm.real, nrm.imag, axis, c, q, sigma, out)
        return out
    return normal_derivative_numpy(xs, ys, nrm.real, nrm.imag, axis, c, q, sigma)
