"""Spin-flip and entanglement quantifiers for parity (x) spin two-qubit states.

The flip sigma_y (x) sigma_y is realized as -i gamma^2. Quantities that are
squares of concurrences (Tr[rho rhotilde], the rank-2 trace formula) are
only known to roundoff relative to ``|rho| |rhotilde|``; values inside that
band are reported as zero and the discarded amount goes to ``residual``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .clifford import flip_operator, gamma
from .density import BlochDecomposition, SpinParityDensity, partial_trace, trace_power
from .errors import (
    InvalidArgumentError,
    NumericConsistencyError,
    PreconditionError,
    UnsupportedConventionError,
)
from .linalg import small_eigenvalues

__all__ = [
    "ConcurrenceResult",
    "Method",
    "binary_entropy",
    "concurrence_from_bloch",
    "concurrence_pure",
    "concurrence_rank2",
    "concurrence_wootters",
    "entanglement_entropy",
    "eof_from_concurrence",
    "spin_flip",
    "von_neumann_entropy",
]

EPS = np.finfo(float).eps
NOISE_FACTOR = 64.0
PURITY_TOL = 1e-8
RANK_TOL = 1e-8
PSD_TOL = 1e-10
EIGEN_RESIDUE_TOL = 1e-8


class Method(str, enum.Enum):
    PURE_TRACE = "pure_trace"
    RANK2_TRACE = "rank2_trace"
    WOOTTERS = "wootters"
    BLOCH = "bloch"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    method: Method
    residual: float = 0.0

    def __float__(self):
        return self.value


def spin_flip(rho: SpinParityDensity) -> np.ndarray:
    """Qubit-flipped partner of ``rho``.

    Hermitian: (-i g2) rho* (-i g2). Covariant: (-i g2)(rhobar g0)* (-i g2) g0,
    which maps +-u u^dagger g0 to +-(-i g2) u* u^T (-i g2) g0. Since
    (-i g2) g0 (-i g2) = -g0, the covariant result has trace -Tr[rhobar].
    """
    y = flip_operator()
    if rho.is_covariant:
        g0 = gamma(0)
        return y @ np.conj(rho.matrix @ g0) @ y @ g0
    return y @ np.conj(rho.matrix) @ y


def _noise_floor(rho: np.ndarray, flipped: np.ndarray) -> float:
    return NOISE_FACTOR * EPS * np.linalg.norm(rho) * np.linalg.norm(flipped)


def _root_of_square(square: complex, floor: float, method: Method) -> ConcurrenceResult:
    re = float(np.real(square))
    residual = abs(float(np.imag(square)))
    if re <= floor:
        return ConcurrenceResult(0.0, method, max(residual, abs(re)))
    return ConcurrenceResult(float(np.sqrt(re)), method, residual)


def _singular_values(rho: SpinParityDensity) -> np.ndarray:
    return np.linalg.svd(rho.matrix, compute_uv=False)


def concurrence_pure(rho: SpinParityDensity) -> ConcurrenceResult:
    """C = sqrt(Tr[rho rhotilde]) for a pure state in either convention."""
    if rho.is_covariant:
        sv = _singular_values(rho)
        if sv[0] ** 2 < (1 - RANK_TOL) * np.sum(sv**2):
            raise PreconditionError("covariant input is not rank one")
    else:
        purity = trace_power(rho, 2)
        if abs(purity - 1) > PURITY_TOL:
            raise PreconditionError(f"state is not pure: Tr[rho^2] = {purity:.12g}")
    flipped = spin_flip(rho)
    overlap = np.trace(rho.matrix @ flipped)
    return _root_of_square(overlap, _noise_floor(rho.matrix, flipped), Method.PURE_TRACE)


def concurrence_rank2(rho: SpinParityDensity) -> ConcurrenceResult:
    """C^2 = Tr[R] - sqrt(2 {Tr[R]^2 - Tr[R^2]}), R = rho rhotilde, for rank <= 2."""
    sv = _singular_values(rho)
    if sv[0] ** 2 + sv[1] ** 2 < (1 - RANK_TOL) * np.sum(sv**2):
        raise PreconditionError("state has rank greater than two")
    flipped = spin_flip(rho)
    r = rho.matrix @ flipped
    t1 = np.trace(r)
    t2 = np.trace(r @ r)
    radicand = complex(2 * (t1 * t1 - t2))
    # radicand = 4 w1^2 w2^2 is only resolved to ~eps |t1|^2; below that it is w2 = 0
    dropped = 0.0
    if abs(radicand) <= NOISE_FACTOR * EPS * abs(t1) ** 2:
        dropped, radicand = abs(radicand), 0j
    square = t1 - np.sqrt(radicand)
    res = _root_of_square(square, _noise_floor(rho.matrix, flipped), Method.RANK2_TRACE)
    return ConcurrenceResult(res.value, res.method, max(res.residual, dropped))


def _wootters_omegas_svd(rho: SpinParityDensity) -> tuple[np.ndarray, float]:
    # rho = X X^dagger; the omegas are the singular values of X^T Y X
    evals, evecs = np.linalg.eigh(rho.matrix)
    if evals[0] < -PSD_TOL:
        raise PreconditionError(f"state is not positive semi-definite (eigenvalue {evals[0]:.3e})")
    clamped = max(0.0, float(-evals[0]))
    x = evecs * np.sqrt(np.clip(evals, 0.0, None))
    tau = x.T @ flip_operator() @ x
    return np.linalg.svd(tau, compute_uv=False), clamped


def _wootters_omegas_charpoly(rho: SpinParityDensity) -> tuple[np.ndarray, float]:
    lam = small_eigenvalues(rho.matrix @ spin_flip(rho))
    residue = float(max(np.max(np.abs(lam.imag)), -min(np.min(lam.real), 0.0)))
    if residue > EIGEN_RESIDUE_TOL:
        raise NumericConsistencyError(f"eigenvalues of rho rhotilde have residue {residue:.3e}")
    return np.sort(np.sqrt(np.clip(lam.real, 0.0, None)))[::-1], residue


def concurrence_wootters(rho: SpinParityDensity, route: str = "svd") -> ConcurrenceResult:
    """Wootters concurrence max(w1 - w2 - w3 - w4, 0) of a Hermitian-convention state.

    ``route="svd"`` (default) factors rho = X X^dagger and takes the singular
    values of X^T (sigma_y (x) sigma_y) X, which are exactly the square roots of
    the eigenvalues of rho rhotilde and stay accurate for rank-deficient
    states. ``route="charpoly"`` gets the eigenvalues of rho rhotilde from the
    characteristic polynomial and a quartic solve; it loses about half the
    digits on the zero eigenvalues of rank-deficient states.
    """
    if rho.is_covariant:
        raise UnsupportedConventionError("the Wootters eigenvalue formula is not defined for covariant densities")
    if route == "svd":
        omegas, residual = _wootters_omegas_svd(rho)
    elif route == "charpoly":
        omegas, residual = _wootters_omegas_charpoly(rho)
    else:
        raise InvalidArgumentError(f"unknown route {route!r}")
    value = max(omegas[0] - omegas[1] - omegas[2] - omegas[3], 0.0)
    return ConcurrenceResult(float(value), Method.WOOTTERS, residual)


def concurrence_from_bloch(d: BlochDecomposition) -> ConcurrenceResult:
    """C = sqrt(1 - a.a) for the Bloch data of a pure Hermitian state."""
    a2, b2 = d.a_squared.real, d.b_squared.real
    if abs(a2 - b2) > PURITY_TOL:
        raise PreconditionError(f"|a|^2 = {a2:.12g} and |b|^2 = {b2:.12g} differ; state is not pure")
    return _root_of_square(1.0 - a2, NOISE_FACTOR * EPS, Method.BLOCH)


def binary_entropy(lam: float) -> float:
    """-l log2 l - (1-l) log2(1-l), with 0 log 0 = 0."""
    return float(sum(-x * np.log2(x) for x in (lam, 1.0 - lam) if x > 0))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation of a two-qubit state with concurrence ``c``."""
    if not (0.0 <= c <= 1.0 + 1e-9):
        raise InvalidArgumentError(f"concurrence must lie in [0, 1], got {c!r}")
    c = min(float(c), 1.0)
    return binary_entropy((1.0 - np.sqrt(1.0 - c * c)) / 2.0)


def von_neumann_entropy(rho2: np.ndarray) -> float:
    """Base-2 von Neumann entropy of a small Hermitian density matrix."""
    evals = np.linalg.eigvalsh(rho2)
    return float(sum(-x * np.log2(x) for x in evals if x > 0))


def entanglement_entropy(rho: SpinParityDensity) -> float:
    """Entropy of either reduced state of a pure Hermitian state."""
    if rho.is_covariant:
        raise UnsupportedConventionError("entanglement entropy needs the hermitian convention")
    purity = trace_power(rho, 2)
    if abs(purity - 1) > PURITY_TOL:
        raise PreconditionError(f"state is not pure: Tr[rho^2] = {purity:.12g}")
    s_parity = von_neumann_entropy(partial_trace(rho, "parity"))
    s_spin = von_neumann_entropy(partial_trace(rho, "spin"))
    if abs(s_parity - s_spin) > 1e-8:
        raise NumericConsistencyError(f"reduced entropies differ: {s_parity!r} vs {s_spin!r}")
    return s_spin
