"""Distance engines on the configuration space.

Three routes to the spectral distance between states:

* the closed form for neighbouring basis states,
* the general lower-bound formula tr(drho^2)/||[D, pi(drho)]||, and
* a projected subgradient ascent over the Lipschitz ball for the true
  supremum, which certifies that the lower bound is (numerically) attained.

Plus the quantized polar angle and the continuum arc-length comparator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .halfint import HalfInteger, ladder_radicand
from .linalg import singular_triplets
from .sphere import HSOperator, SphereDomainError, _halfint
from .triple import SpectralTriple, dirac_commutator, lipschitz_seminorm


class OptimizerError(RuntimeError):
    """Ascent failed to converge; .best_value still holds a valid lower bound."""

    def __init__(self, message, best_value=None):
        super().__init__(message)
        self.best_value = best_value


@dataclass
class DistanceResult:
    value: float
    method: str  # closed_form | norm_pipeline | optimizer
    certificate: Optional[np.ndarray] = None
    ball_residual: Optional[float] = None


def _check_adjacent_range(n: HalfInteger, n3: HalfInteger):
    if n3.twice < -n.twice or n3.twice > n.twice - 2:
        raise SphereDomainError("need -n <= n3 <= n-1, got n3 = %s at n = %s" % (n3, n))


def adjacent_distance_closed_form(n, n3, lam: float = 1.0) -> float:
    """Distance between |n3+1> and |n3> pure states: lam sqrt(n(n+1)) / sqrt(n(n+1) - n3(n3+1))."""
    n = _halfint(n)
    n3 = _halfint(n3)
    _check_adjacent_range(n, n3)
    nn1 = float(n.times_self_plus_one())
    rad = float(ladder_radicand(n, n3))
    return lam * math.sqrt(nn1) / math.sqrt(rad)


def distance_lower_bound(triple: SpectralTriple, rho, rho2) -> DistanceResult:
    """tr(drho^2)/||[D, pi(drho)]|| with drho = rho2 - rho.

    Also returns the scaled displacement as a certificate sitting exactly on
    the Lipschitz ball boundary.
    """
    a = rho.matrix if isinstance(rho, HSOperator) else np.asarray(rho, dtype=complex)
    b = rho2.matrix if isinstance(rho2, HSOperator) else np.asarray(rho2, dtype=complex)
    drho = b - a
    num = float(np.real(np.trace(drho @ drho)))
    if num == 0.0 and np.abs(drho).max() == 0.0:
        return DistanceResult(0.0, "norm_pipeline", None, None)
    h = lipschitz_seminorm(triple, drho)
    if h == 0.0:
        # cannot happen for the k=0 triples (irreducibility); treat as corruption
        raise ArithmeticError("nonzero displacement with zero seminorm: infinite distance")
    cert = drho / h
    return DistanceResult(num / h, "norm_pipeline", cert, abs(lipschitz_seminorm(triple, cert) - 1.0))


def quantized_polar_angle(n, n3) -> float:
    """arcsin(n3 / sqrt(n(n+1))), the latitude carried by basis state n3.

    Note this measures from the equator; the conventional polar angle would
    use arccos. Kept as is deliberately.
    """
    n = _halfint(n)
    n3 = _halfint(n3)
    if abs(n3.twice) > n.twice:
        raise SphereDomainError("n3 = %s out of range at n = %s" % (n3, n))
    return math.asin(float(n3) / math.sqrt(float(n.times_self_plus_one())))


def arc_length_step(n, n3, lam: float = 1.0) -> float:
    """Continuum arc length for a unit step in n3: lam sqrt(n(n+1)) / sqrt(n(n+1) - n3^2)."""
    n = _halfint(n)
    n3 = _halfint(n3)
    nn1 = float(n.times_self_plus_one())
    rad = nn1 - float(n3) ** 2
    if rad <= 0:
        raise SphereDomainError("|n3| >= sqrt(n(n+1)): arc step undefined")
    return lam * math.sqrt(nn1) / math.sqrt(rad)


# ---------------------------------------------------------------------------
# projected subgradient ascent for the Connes supremum

def _hermitize_traceless(a):
    h = (a + a.conj().T) / 2.0
    d = h.shape[0]
    return h - (np.trace(h) / d) * np.eye(d)


def _spinor_block_sum(m):
    half = m.shape[0] // 2
    return m[:half, :half] + m[half:, half:]


def _seminorm_subgradient(triple, a, degeneracy_rtol=1e-8):
    """Hermitian traceless G with d||[D,pi(a)]|| = <G, da> at smooth points.

    Degenerate top singular values are averaged, which handles the symmetric
    points where the largest value is multiple.
    """
    M = dirac_commutator(triple, a)
    u, s, vh = singular_triplets(M)
    top = s[0]
    grads = []
    for i in range(len(s)):
        if s[i] < top * (1.0 - degeneracy_rtol):
            break
        W = np.outer(u[:, i], vh[i, :].conj())
        Q = _spinor_block_sum(W.conj().T @ triple.dirac - triple.dirac @ W.conj().T)
        grads.append(_hermitize_traceless(Q))
    G = sum(grads) / len(grads)
    return G, top


def connes_distance_optimized(triple: SpectralTriple, rho, rho2, max_iters: int = 20000,
                              tol: float = 1e-10, seed: int = 42,
                              restarts: int = 8) -> DistanceResult:
    """Maximize tr(drho a) over Hermitian a with ||[D, pi(a)]|| <= 1.

    The objective is linear and the constraint positively homogeneous, so we
    ascend R(a) = tr(drho a)/||[D, pi(a)]|| on the unit Frobenius sphere of
    traceless Hermitian matrices and rescale at the end. Starts from the
    displacement itself plus seeded random directions.
    """
    a0 = rho.matrix if isinstance(rho, HSOperator) else np.asarray(rho, dtype=complex)
    b0 = rho2.matrix if isinstance(rho2, HSOperator) else np.asarray(rho2, dtype=complex)
    drho = b0 - a0
    if np.abs(drho).max() == 0.0:
        return DistanceResult(0.0, "optimizer", None, None)
    dim = triple.algebra_dim

    rng = np.random.default_rng(seed)
    starts = [_normalize(_hermitize_traceless(drho))]
    for _ in range(restarts):
        z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        starts.append(_normalize(_hermitize_traceless(z)))

    def ratio(a):
        G, h = _seminorm_subgradient(triple, a)
        val = float(np.real(np.trace(drho @ a)))
        return val / h, G, h, val

    best_a, best_R = None, -np.inf
    converged = False
    for a in starts:
        R, G, h, val = ratio(a)
        step = 0.1
        stall = 0
        for _ in range(max_iters):
            R_prev = R
            # gradient of the ratio, then tangent projection on the sphere
            grad = (drho.astype(complex) * h - val * G) / (h * h)
            grad = _hermitize_traceless(grad)
            grad = grad - float(np.real(np.vdot(a, grad))) * a
            gn = np.linalg.norm(grad)
            if gn == 0.0:
                converged = True
                break
            improved = False
            for _bt in range(30):
                cand = _normalize(a + step * grad)
                Rc, Gc, hc, valc = ratio(cand)
                if Rc > R:
                    a, R, G, h, val = cand, Rc, Gc, hc, valc
                    step *= 1.3
                    improved = True
                    break
                step *= 0.5
            if not improved or (R - R_prev) / max(abs(R), 1.0) < tol:
                stall += 1
            else:
                stall = 0
            if stall >= 50:
                converged = True
                break
        if R > best_R:
            best_R, best_a = R, a
    if best_a is None or not np.isfinite(best_R):
        raise OptimizerError("ascent produced no finite ratio", best_value=None)
    if not converged and best_R <= 0:
        raise OptimizerError("no feasible ascent direction found", best_value=best_R)

    h = lipschitz_seminorm(triple, best_a)
    a_star = best_a / h
    value = float(np.real(np.trace(drho @ a_star)))
    residual = abs(lipschitz_seminorm(triple, a_star) - 1.0)
    return DistanceResult(value, "optimizer", a_star, residual)


def _normalize(a):
    return a / np.linalg.norm(a)
