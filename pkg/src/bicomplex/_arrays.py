"""Low-level float64 kernels shared by the scalar, vector, and operator layers.

Everything in the package is backed by the four real coefficients
(a, b, c, d) of w = a + b*i1 + c*i2 + d*j, stored along the trailing axis
of a numpy array.  The idempotent ("hat") coordinates

    h1 = (a + d) + (b - c)*i,    h2 = (a - d) + (b + c)*i

diagonalize multiplication: products act componentwise on (h1, h2).
Keeping these kernels in one place guarantees that every code path,
including the verification harness and its witness replays, rounds
identically.
"""

from __future__ import annotations

import numpy as np

SQRT2 = float(np.sqrt(2.0))


def as_coeffs(data, ndim: int, what: str = "value") -> np.ndarray:
    """Coerce to a float64 coefficient array with `ndim` axes, trailing axis 4."""
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != ndim or arr.shape[-1] != 4:
        raise ValueError(f"{what}: expected shape {'(...,' * (ndim - 1)}4{')' * (ndim - 1)}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what}: coefficients must be finite")
    return arr


def freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.float64, copy=True)
    arr.setflags(write=False)
    return arr


def hat_split(C: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients (..., 4) -> complex hat components (h1, h2), each (...)."""
    a, b, c, d = C[..., 0], C[..., 1], C[..., 2], C[..., 3]
    return (a + d) + 1j * (b - c), (a - d) + 1j * (b + c)


def hat_merge(h1, h2) -> np.ndarray:
    """Inverse of hat_split; exact up to one rounding per coefficient."""
    h1 = np.asarray(h1, dtype=np.complex128)
    h2 = np.asarray(h2, dtype=np.complex128)
    a = 0.5 * (h1.real + h2.real)
    b = 0.5 * (h1.imag + h2.imag)
    c = 0.5 * (h2.imag - h1.imag)
    d = 0.5 * (h1.real - h2.real)
    return np.stack([a, b, c, d], axis=-1)


def mul4(U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Bilinear product of coefficient arrays, expanded over the real basis
    with i1^2 = i2^2 = -1 and j^2 = +1.  Broadcasts like numpy arithmetic."""
    au, bu, cu, du = U[..., 0], U[..., 1], U[..., 2], U[..., 3]
    av, bv, cv, dv = V[..., 0], V[..., 1], V[..., 2], V[..., 3]
    return np.stack(
        [
            au * av - bu * bv - cu * cv + du * dv,
            au * bv + bu * av - cu * dv - du * cv,
            au * cv + cu * av - bu * dv - du * bv,
            au * dv + du * av + bu * cv + cu * bv,
        ],
        axis=-1,
    )


def norm4(C: np.ndarray) -> np.ndarray:
    """Euclidean norm over the trailing coefficient axis: (..., 4) -> (...)."""
    return np.sqrt(np.sum(C * C, axis=-1))


def vec_norm4(C: np.ndarray) -> np.ndarray:
    """Euclidean norm over the trailing (entries, 4) axes: (..., n, 4) -> (...)."""
    return np.sqrt(np.sum(C * C, axis=(-2, -1)))


def unit_multiples(C: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coefficient arrays of (i1*C, i2*C, j*C).  Pure sign shuffles, exact."""
    a, b, c, d = C[..., 0], C[..., 1], C[..., 2], C[..., 3]
    i1c = np.stack([-b, a, -d, c], axis=-1)
    i2c = np.stack([-c, -d, a, b], axis=-1)
    jc = np.stack([d, -c, -b, a], axis=-1)
    return i1c, i2c, jc


def real_block_matrix(C: np.ndarray) -> np.ndarray:
    """Realify an (m, n, 4) operator into the (4m, 4n) matrix acting on the
    stacked real coefficients.  Used by sampling oracles; deliberately avoids
    the hat decomposition so it is an independent evaluation path."""
    m, n = C.shape[0], C.shape[1]
    a, b, c, d = C[..., 0], C[..., 1], C[..., 2], C[..., 3]
    block = np.empty((m, 4, n, 4), dtype=np.float64)
    block[:, 0, :, 0] = a
    block[:, 0, :, 1] = -b
    block[:, 0, :, 2] = -c
    block[:, 0, :, 3] = d
    block[:, 1, :, 0] = b
    block[:, 1, :, 1] = a
    block[:, 1, :, 2] = -d
    block[:, 1, :, 3] = -c
    block[:, 2, :, 0] = c
    block[:, 2, :, 1] = -d
    block[:, 2, :, 2] = a
    block[:, 2, :, 3] = -b
    block[:, 3, :, 0] = d
    block[:, 3, :, 1] = c
    block[:, 3, :, 2] = b
    block[:, 3, :, 3] = a
    return block.reshape(4 * m, 4 * n)


def orthonormal_columns(M: np.ndarray, rel_tol: float | None = None) -> np.ndarray:
    """Orthonormal basis of the column space of M via SVD, with a relative
    rank cutoff (default: max(shape) * machine eps)."""
    if M.size == 0:
        return M.reshape(M.shape[0], 0)
    u, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return u[:, :0]
    if rel_tol is None:
        rel_tol = max(M.shape) * np.finfo(np.float64).eps
    rank = int(np.sum(s > rel_tol * s[0]))
    return u[:, :rank]


def fmt17(v: float) -> str:
    """Format a float at up to 17 significant digits (lossless round trip).
    Negative zero is normalized so output is canonical."""
    return format(float(v) + 0.0, ".17g")
