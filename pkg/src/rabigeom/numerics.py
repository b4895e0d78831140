"""Dense real-symmetric eigensolves, constant-Hamiltonian propagation and quadrature.

Every Hamiltonian in this package is real symmetric in its chosen basis, so a
single eigensolver with a deterministic sign convention serves all modules.
Energies and times are expressed in units of the field frequency (omega_c = 1).
"""

from typing import NamedTuple

import numpy as np


class InvalidMatrix(ValueError):
    """Matrix is not finite, not square, or not exactly symmetric."""


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class InvalidGrid(ValueError):
    """Quadrature abscissae are not strictly increasing."""


#: threshold below which a vector component does not count as "first nonzero"
SIGN_EPS = 1e-12


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # ascending
    eigenvectors: np.ndarray  # orthonormal columns, same order


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip eigenvector signs so the first component above SIGN_EPS is positive."""
    out = np.array(vectors, copy=True)
    for j in range(out.shape[1]):
        col = out[:, j]
        nz = np.flatnonzero(np.abs(col) > SIGN_EPS)
        if nz.size and col[nz[0]] < 0.0:
            out[:, j] = -col
    return out


def eigh(matrix) -> EigenDecomposition:
    """Full spectrum of a real symmetric matrix, ascending, deterministic signs.

    Ties between degenerate eigenvalues keep the (deterministic) order produced
    by the underlying LAPACK driver; every eigenvector is normalized so that its
    first nonzero component is positive, which makes repeated runs and CSV
    goldens reproducible.
    """
    H = np.asarray(matrix, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] < 1:
        raise InvalidMatrix(f"expected a square matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise InvalidMatrix("matrix has non-finite entries")
    if not np.array_equal(H, H.T):
        raise InvalidMatrix("matrix is not exactly symmetric")
    values, vectors = np.linalg.eigh(H)
    return EigenDecomposition(values, _fix_signs(vectors))


def propagate(decomp: EigenDecomposition, state, t: float) -> np.ndarray:
    """Evolve ``state`` for time ``t`` under the diagonalized Hamiltonian.

    Returns sum_j exp(-i E_j t) v_j (v_j . state).  Exact up to roundoff, so no
    integrator tolerance enters downstream phase bookkeeping.
    """
    values, vectors = decomp
    psi = np.asarray(state, dtype=complex)
    if psi.shape != (vectors.shape[0],):
        raise DimensionError(
            f"state has shape {psi.shape}, expected ({vectors.shape[0]},)")
    amps = vectors.T @ psi
    return vectors @ (np.exp(-1j * values * t) * amps)


def trapezoid_integral(x, y) -> float:
    """Composite trapezoid rule on an ordered grid; exact for affine integrands."""
    xg = np.asarray(x, dtype=float)
    yg = np.asarray(y, dtype=float)
    if xg.ndim != 1 or xg.size < 2 or yg.shape != xg.shape:
        raise InvalidGrid("need at least two (x, f(x)) samples of equal length")
    dx = np.diff(xg)
    if np.any(dx <= 0.0):
        raise InvalidGrid("abscissae must be strictly increasing")
    return float(np.sum(0.5 * (yg[1:] + yg[:-1]) * dx))
