"""Dense complex matrix services used by every oracle in the package.

Thin validated wrappers over LAPACK (via numpy.linalg) and scipy's expm.
Matrices here are small (at most a few hundred rows), so robustness and
clear error messages matter more than speed.

Tolerances are fixed once, here, and imported by the other modules:
SYMMETRY_TOL for Hermiticity checks, DECOMP_TOL for decomposition residuals.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

SYMMETRY_TOL = 1e-12
DECOMP_TOL = 1e-10


class LinalgDomainError(ValueError):
    """Raised when an input violates a documented precondition."""


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise LinalgDomainError("expected a nonempty 2-d matrix, got shape %r" % (a.shape,))
    return a


def is_hermitian(m, tol: float = SYMMETRY_TOL) -> bool:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        return False
    scale = max(np.abs(a).max(), 1.0)
    return np.abs(a - a.conj().T).max() <= tol * scale


def dagger(m) -> np.ndarray:
    return as_matrix(m).conj().T


def commutator(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    return a @ b - b @ a


def hermitian_eigvals(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    Input must be square and Hermitian within SYMMETRY_TOL (relative to the
    largest entry). The eigenvalue sum is checked against the trace.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise LinalgDomainError("hermitian_eigvals: matrix is %dx%d, not square" % a.shape)
    if not is_hermitian(a):
        dev = np.abs(a - a.conj().T).max()
        raise LinalgDomainError("hermitian_eigvals: not Hermitian (max |M - M^dag| = %.3e)" % dev)
    vals = np.linalg.eigvalsh(a)
    tr = a.trace().real
    scale = max(abs(tr), np.abs(vals).sum(), 1.0)
    if abs(vals.sum() - tr) > DECOMP_TOL * scale:
        raise LinalgDomainError("hermitian_eigvals: eigenvalue sum disagrees with trace")
    return vals


def hermitian_eigh(m):
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1] or not is_hermitian(a):
        raise LinalgDomainError("hermitian_eigh: input must be square Hermitian")
    return np.linalg.eigh(a)


def operator_norm(m) -> float:
    """Largest singular value, i.e. sqrt of the top eigenvalue of M^dag M."""
    a = as_matrix(m)
    return float(np.linalg.norm(a, 2))


def trace_norm(m) -> float:
    """Sum of singular values."""
    a = as_matrix(m)
    return float(np.linalg.svd(a, compute_uv=False).sum())


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(as_matrix(m)))


def singular_triplets(m):
    """SVD as (u, s, vh) with s descending; convenience for subgradients."""
    return np.linalg.svd(as_matrix(m))


def matrix_exp(m) -> np.ndarray:
    """exp(M) for square M, checked against exp(M)exp(-M) = I."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise LinalgDomainError("matrix_exp: matrix is %dx%d, not square" % a.shape)
    e = scipy.linalg.expm(a)
    resid = np.abs(e @ scipy.linalg.expm(-a) - np.eye(a.shape[0])).max()
    if resid > DECOMP_TOL:
        raise LinalgDomainError("matrix_exp: inverse check failed (residual %.3e)" % resid)
    return e
