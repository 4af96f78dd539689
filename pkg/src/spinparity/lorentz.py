"""Spinor representations of boosts and rotations, and the density transformation laws."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .clifford import I4, dirac_operator, gamma
from .errors import InvalidArgumentError, NumericConsistencyError
from .spinors import Z_HAT, FourMomentum, unit_vector

__all__ = [
    "BoostParameters",
    "RotationParameters",
    "boost_operator",
    "rapidity_of",
    "rotation_operator",
    "spacetime_boost",
    "spacetime_rotation",
    "spinor_inverse",
    "spinor_operator",
    "transform_covariant",
    "transform_hermitian",
]

CROSS_CHECK_TOL = 1e-12


@dataclass(frozen=True)
class BoostParameters:
    rapidity: float
    direction: tuple[float, float, float] = Z_HAT

    def __post_init__(self):
        eta = float(self.rapidity)
        if not np.isfinite(eta) or eta < 0:
            raise InvalidArgumentError(f"rapidity must be finite and non-negative, got {self.rapidity!r}")
        object.__setattr__(self, "rapidity", eta)
        object.__setattr__(self, "direction", tuple(unit_vector(self.direction)))


@dataclass(frozen=True)
class RotationParameters:
    angle: float
    axis: tuple[float, float, float] = Z_HAT

    def __post_init__(self):
        if not np.isfinite(self.angle):
            raise InvalidArgumentError("rotation angle must be finite")
        object.__setattr__(self, "angle", float(self.angle))
        object.__setattr__(self, "axis", tuple(unit_vector(self.axis, "axis")))


Transformation = Union[FourMomentum, BoostParameters, RotationParameters]


def rapidity_of(p: FourMomentum) -> BoostParameters:
    """Boost taking a particle at rest to momentum ``p``: eta = arcsinh(|p|/m)."""
    return BoostParameters(float(np.arcsinh(p.magnitude / p.m)), tuple(p.direction))


def _as_boost(t: FourMomentum | BoostParameters) -> BoostParameters:
    return rapidity_of(t) if isinstance(t, FourMomentum) else t


def _dot(name: str, v) -> np.ndarray:
    return sum(float(c) * dirac_operator(name, j + 1) for j, c in enumerate(v))


def boost_operator(t: FourMomentum | BoostParameters) -> np.ndarray:
    """S(Lambda) = cosh(eta/2) + gamma^5 (Sigma . n) sinh(eta/2).

    The result is cross-checked against the closed form
    ``(pslash gamma^0 + m) / sqrt(2m(m+E))``, written here per unit mass as
    ``(1 + cosh eta + sinh eta alpha.n) / sqrt(2(1 + cosh eta))``.
    """
    b = _as_boost(t)
    eta, n = b.rapidity, np.asarray(b.direction)
    g5_sigma = gamma(5) @ _dot("big_sigma", n)
    s = np.cosh(eta / 2) * I4 + np.sinh(eta / 2) * g5_sigma

    ch = np.cosh(eta)
    closed = ((1 + ch) * I4 + np.sinh(eta) * _dot("alpha", n)) / np.sqrt(2 * (1 + ch))
    err = np.max(np.abs(s - closed))
    if err > CROSS_CHECK_TOL * max(1.0, np.cosh(eta / 2)):
        raise NumericConsistencyError(f"boost operator forms disagree by {err:.3e}")
    return s


def rotation_operator(r: RotationParameters) -> np.ndarray:
    """S = cos(theta/2) + i (Sigma . axis) sin(theta/2); unitary, commutes with gamma^0."""
    return np.cos(r.angle / 2) * I4 + 1j * np.sin(r.angle / 2) * _dot("big_sigma", r.axis)


def spinor_operator(t: Transformation) -> np.ndarray:
    if isinstance(t, RotationParameters):
        return rotation_operator(t)
    return boost_operator(t)


def spinor_inverse(s: np.ndarray) -> np.ndarray:
    """S^-1 = gamma^0 S^dagger gamma^0, exact for boosts and rotations."""
    g0 = gamma(0)
    return g0 @ np.conj(s).T @ g0


def spacetime_boost(t: FourMomentum | BoostParameters) -> np.ndarray:
    """Symmetric boost matrix Lambda^mu_nu mapping (m, 0) to (E, p)."""
    b = _as_boost(t)
    n = np.asarray(b.direction)
    ch, sh = np.cosh(b.rapidity), np.sinh(b.rapidity)
    lam = np.eye(4)
    lam[0, 0] = ch
    lam[0, 1:] = lam[1:, 0] = sh * n
    lam[1:, 1:] += (ch - 1) * np.outer(n, n)
    return lam


def spacetime_rotation(r: RotationParameters) -> np.ndarray:
    """Lambda^mu_nu of the spatial rotation paired with :func:`rotation_operator`.

    With S = exp(+i theta Sigma.n / 2) the relation S^-1 gamma^mu S = Lambda^mu_nu gamma^nu
    holds for the rotation by -theta about n (Rodrigues formula).
    """
    n = np.asarray(r.axis)
    k = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    th = -r.angle
    lam = np.eye(4)
    lam[1:, 1:] = np.eye(3) + np.sin(th) * k + (1 - np.cos(th)) * k @ k
    return lam


def _conjugate(s: np.ndarray, rho: np.ndarray, s_inv: np.ndarray) -> np.ndarray:
    return s @ np.asarray(rho) @ s_inv


def transform_hermitian(rho, t: Transformation) -> np.ndarray:
    """rho' = cosh^-1(eta) S rho S^dagger (the factor is 1 for rotations).

    The renormalization uses the rapidity of the applied transformation only;
    chains of boosts get one factor per application.
    """
    s = spinor_operator(t)
    factor = 1.0 if isinstance(t, RotationParameters) else 1.0 / np.cosh(_as_boost(t).rapidity)
    return factor * _conjugate(s, rho, np.conj(s).T)


def transform_covariant(rho_bar, t: Transformation) -> np.ndarray:
    """rhobar' = S rhobar S^-1 with S^-1 = gamma^0 S^dagger gamma^0."""
    s = spinor_operator(t)
    s_inv = spinor_inverse(s)
    err = np.max(np.abs(s @ s_inv - I4))
    if err > CROSS_CHECK_TOL * max(1.0, np.max(np.abs(s))) ** 2:
        raise NumericConsistencyError(f"gamma0 S^dagger gamma0 is not the inverse of S (error {err:.3e})")
    return _conjugate(s, rho_bar, s_inv)
