"""Fuzzy sphere configuration space and its operator algebra.

The space at spin label n is the (2n+1)-dimensional irrep of su(2) with
position operators x1, x2, x3 obeying [xi, xj] = i lam eps_ijk xk and fixed
Casimir lam^2 n(n+1). Basis vectors are ordered by n3 descending, row 0
holding n3 = +n, which is the standard angular momentum convention.

Also provides the truncated two-oscillator (Jordan-Schwinger) construction
used as an independent cross-check of the matrices, and winding-number
bookkeeping for oscillator monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfint import HalfInteger, ladder_radicand
from .linalg import SYMMETRY_TOL, as_matrix, commutator


class SphereDomainError(ValueError):
    pass


def _halfint(value) -> HalfInteger:
    if isinstance(value, HalfInteger):
        return value
    if isinstance(value, str):
        return HalfInteger.parse(value)
    return HalfInteger.from_value(value)


class FuzzySphere:
    """Immutable container for the spin-n matrix coordinates at scale lam."""

    def __init__(self, n, lam: float = 1.0):
        n = _halfint(n)
        if n.twice < 1:
            raise SphereDomainError("need n >= 1/2, got n = %s" % n)
        if not lam > 0:
            raise SphereDomainError("lambda must be positive, got %r" % lam)
        self.n = n
        self.lam = float(lam)
        self.dim = n.twice + 1
        self.casimir = float(n.times_self_plus_one())  # n(n+1)
        self.radius = self.lam * math.sqrt(self.casimir)

        two_n = n.twice
        # x3 diagonal: n3 = n - row index
        self.x3 = self.lam * np.diag([(two_n - 2 * i) / 2.0 for i in range(self.dim)]).astype(complex)
        xp = np.zeros((self.dim, self.dim), dtype=complex)
        for i in range(1, self.dim):
            low = HalfInteger(two_n - 2 * i)  # n3 of the column state
            rad = ladder_radicand(n, low)     # n(n+1) - n3(n3+1), exact
            xp[i - 1, i] = self.lam * math.sqrt(float(rad))
        self.xplus = xp
        self.xminus = xp.conj().T.copy()
        self.x1 = (self.xplus + self.xminus) / 2.0
        self.x2 = (self.xplus - self.xminus) / 2.0j
        self._check_invariants()

    def _check_invariants(self):
        lam2 = self.lam ** 2
        xs = (self.x1, self.x2, self.x3)
        for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            dev = np.abs(commutator(xs[i], xs[j]) - 1j * self.lam * xs[k]).max()
            if dev > SYMMETRY_TOL * lam2 * self.casimir:
                raise SphereDomainError("su(2) closure failed at (%d,%d): %.3e" % (i, j, dev))
        cas = self.x1 @ self.x1 + self.x2 @ self.x2 + self.x3 @ self.x3
        dev = np.abs(cas - lam2 * self.casimir * np.eye(self.dim)).max()
        if dev > SYMMETRY_TOL * lam2 * max(self.casimir, 1.0):
            raise SphereDomainError("Casimir check failed: %.3e" % dev)

    def n3_values(self):
        """All n3 labels, descending, matching row order."""
        return [HalfInteger(self.n.twice - 2 * i) for i in range(self.dim)]

    def index_of(self, n3) -> int:
        n3 = _halfint(n3)
        t = self.n.twice - n3.twice
        if t < 0 or t % 2 != 0 or t // 2 >= self.dim:
            raise SphereDomainError("n3 = %s out of range for n = %s" % (n3, self.n))
        return t // 2

    def __repr__(self):
        return "FuzzySphere(n=%s, lam=%g)" % (self.n, self.lam)


def build_space(n, lam: float = 1.0) -> FuzzySphere:
    """Construct the spin-n space; raises SphereDomainError on bad input."""
    return FuzzySphere(n, lam)


@dataclass
class HSOperator:
    """A dense matrix regarded as an element of the spin-n operator algebra."""

    sphere: FuzzySphere
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape != (self.sphere.dim, self.sphere.dim):
            raise SphereDomainError(
                "operator shape %r does not match sphere dim %d" % (m.shape, self.sphere.dim))
        self.matrix = m

    def check_density(self, tol: float = SYMMETRY_TOL):
        m = self.matrix
        if np.abs(m - m.conj().T).max() > tol:
            raise SphereDomainError("density matrix is not Hermitian")
        if abs(m.trace() - 1.0) > tol:
            raise SphereDomainError("density matrix trace != 1")
        if np.linalg.eigvalsh(m).min() < -tol:
            raise SphereDomainError("density matrix has a negative eigenvalue")
        return self

    def is_pure(self, tol: float = SYMMETRY_TOL) -> bool:
        m = self.matrix
        return bool(np.abs(m @ m - m).max() <= tol)


def pure_state(sphere: FuzzySphere, n3) -> HSOperator:
    """Projector |n,n3><n,n3|."""
    i = sphere.index_of(n3)
    m = np.zeros((sphere.dim, sphere.dim), dtype=complex)
    m[i, i] = 1.0
    return HSOperator(sphere, m)


def adjacent_drho(sphere: FuzzySphere, n3) -> HSOperator:
    """|n3+1><n3+1| - |n3><n3|, the displacement between neighbouring pure states."""
    n3 = _halfint(n3)
    up = n3 + HalfInteger(2)
    if up.twice > sphere.n.twice:
        raise SphereDomainError("n3 + 1 exceeds +n (n3 = %s, n = %s)" % (n3, sphere.n))
    m = pure_state(sphere, up).matrix - pure_state(sphere, n3).matrix
    return HSOperator(sphere, m)


# ---------------------------------------------------------------------------
# winding-number bookkeeping for oscillator monomials

@dataclass(frozen=True)
class FockMonomial:
    """Exponents of a two-mode monomial chi1^dag^m1 chi2^dag^m2 chi1^n1 chi2^n2."""

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        for v in (self.m1, self.m2, self.n1, self.n2):
            if not isinstance(v, int) or v < 0:
                raise SphereDomainError("monomial exponents must be nonnegative ints")


def winding_number(mono: FockMonomial) -> int:
    """Net creation count m1 + m2 - n1 - n2; the monopole index of the monomial."""
    return mono.m1 + mono.m2 - mono.n1 - mono.n2


# ---------------------------------------------------------------------------
# truncated two-mode Fock space and the oscillator realization

class TwoModeFock:
    """Two bosonic modes truncated at `cutoff` quanta per mode.

    The oscillators are normalized so [chi_a, chi_b^dag] = (lam/2) delta_ab,
    i.e. matrix elements sqrt(lam/2) sqrt(count). State (k1, k2) sits at
    flat index k1 * cutoff + k2.
    """

    def __init__(self, cutoff: int, lam: float = 1.0):
        if cutoff < 2:
            raise SphereDomainError("cutoff must be at least 2")
        if not lam > 0:
            raise SphereDomainError("lambda must be positive")
        self.cutoff = int(cutoff)
        self.lam = float(lam)
        a = np.zeros((cutoff, cutoff), dtype=complex)
        for k in range(1, cutoff):
            a[k - 1, k] = math.sqrt(lam / 2.0) * math.sqrt(k)
        eye = np.eye(cutoff)
        self.chi1 = np.kron(a, eye)
        self.chi2 = np.kron(eye, a)
        self.number_op = (self.chi1.conj().T @ self.chi1
                          + self.chi2.conj().T @ self.chi2)

    def flat_index(self, k1: int, k2: int) -> int:
        return k1 * self.cutoff + k2

    def interior_indices(self):
        """Flat indices of states untouched by the truncation boundary."""
        c = self.cutoff
        return [self.flat_index(k1, k2)
                for k1 in range(c - 1) for k2 in range(c - 1)]

    def sphere_block_indices(self, n) -> list:
        """Flat indices of the n1+n2 = 2n block, n1 descending.

        With n1 descending, n3 = (n1 - n2)/2 runs from +n down to -n, matching
        the FuzzySphere row order.
        """
        n = _halfint(n)
        two_n = n.twice
        if self.cutoff < two_n + 2:
            raise SphereDomainError(
                "cutoff %d too small for n = %s (need >= %d)" % (self.cutoff, n, two_n + 2))
        return [self.flat_index(k1, two_n - k1) for k1 in range(two_n, -1, -1)]

    def embed_sphere_operator(self, sphere: FuzzySphere, op) -> np.ndarray:
        """Lift a dim x dim sphere operator into the full Fock space."""
        idx = self.sphere_block_indices(sphere.n)
        m = as_matrix(op)
        if m.shape != (sphere.dim, sphere.dim):
            raise SphereDomainError("operator does not match the sphere dimension")
        out = np.zeros((self.cutoff ** 2, self.cutoff ** 2), dtype=complex)
        for a, ia in enumerate(idx):
            for b, ib in enumerate(idx):
                out[ia, ib] = m[a, b]
        return out

    def position_operators(self):
        """x_i = chi^dag sigma_i chi on the full truncated space."""
        chis = (self.chi1, self.chi2)
        dags = tuple(c.conj().T for c in chis)
        paulis = _pauli()
        out = []
        for s in paulis:
            x = np.zeros_like(self.chi1)
            for a in range(2):
                for b in range(2):
                    if s[a, b] != 0:
                        x = x + s[a, b] * (dags[a] @ chis[b])
            out.append(x)
        return out


def _pauli():
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    s3 = np.array([[1, 0], [0, -1]], dtype=complex)
    return (s1, s2, s3)


def k_adjoint_action(cutoff: int, op, lam: float = 1.0) -> np.ndarray:
    """[N, op] on the truncated two-mode space.

    Algebra basis elements |n,n3><n,n3'| (winding 0) give zero away from the
    truncation boundary; a net-creation monomial of winding k gives
    k*(lam/2)*op there.
    """
    fock = TwoModeFock(cutoff, lam)
    m = as_matrix(op)
    if m.shape != (cutoff ** 2, cutoff ** 2):
        raise SphereDomainError(
            "operator shape %r does not match Fock dimension %d" % (m.shape, cutoff ** 2))
    return commutator(fock.number_op, m)


def jordan_schwinger_check(n, lam: float = 1.0, cutoff: int | None = None) -> dict:
    """Rebuild the sphere matrices from oscillator bilinears and compare.

    Returns {"max_deviation": float, "block_dim": int}. The restriction of
    chi^dag sigma_i chi to the 2n-quanta block must reproduce build_space
    up to floating point noise.
    """
    n = _halfint(n)
    if cutoff is None:
        cutoff = n.twice + 2
    fock = TwoModeFock(cutoff, lam)
    idx = fock.sphere_block_indices(n)
    sphere = build_space(n, lam)
    worst = 0.0
    for x_full, x_direct in zip(fock.position_operators(), (sphere.x1, sphere.x2, sphere.x3)):
        block = x_full[np.ix_(idx, idx)]
        worst = max(worst, float(np.abs(block - x_direct).max()))
    return {"max_deviation": worst, "block_dim": len(idx)}
