"""Two-component spinors, on-shell momenta and free Dirac bispinors.

Bispinors are plain complex arrays of shape (4,) in the parity (x) spin basis
and carry the textbook normalization 1/sqrt(2m(E+m)), so that
``u^dagger u = E/m`` while the Dirac-adjoint product ``ubar u = +-1`` is
frame independent.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .clifford import I4, gamma, pauli
from .errors import InvalidArgumentError

__all__ = [
    "FourMomentum",
    "Sign",
    "SpinorLabel",
    "as_sign",
    "closure_closed_form",
    "closure_matrix",
    "dirac_adjoint",
    "free_bispinor",
    "rest_bispinor",
    "slash",
    "spherical_angles",
    "two_spinor",
    "unit_vector",
]

UNIT_TOL = 1e-12
Z_HAT = (0.0, 0.0, 1.0)


class Sign(enum.IntEnum):
    """Energy branch / intrinsic parity of a Dirac eigenstate."""

    PLUS = 1
    MINUS = -1

    def __str__(self):
        return self.name.lower()


SignLike = Union[Sign, int, str]

_SIGN_NAMES = {"plus": Sign.PLUS, "+": Sign.PLUS, "minus": Sign.MINUS, "-": Sign.MINUS}


def as_sign(value: SignLike) -> Sign:
    """Coerce ``+1``/``-1``, ``"plus"``/``"minus"`` or a :class:`Sign`."""
    if isinstance(value, str):
        try:
            return _SIGN_NAMES[value.lower()]
        except KeyError:
            raise InvalidArgumentError(f"unknown sign {value!r}") from None
    try:
        return Sign(value)
    except ValueError:
        raise InvalidArgumentError(f"sign must be +1 or -1, got {value!r}") from None


def _check_spin(s: int) -> int:
    if s not in (1, 2):
        raise InvalidArgumentError(f"spin label must be 1 or 2, got {s!r}")
    return int(s)


@dataclass(frozen=True)
class SpinorLabel:
    sign: Sign
    s: int

    def __post_init__(self):
        object.__setattr__(self, "sign", as_sign(self.sign))
        object.__setattr__(self, "s", _check_spin(self.s))


def unit_vector(v: Sequence[float], name: str = "direction") -> np.ndarray:
    """Validate that ``v`` is a unit 3-vector (to 1e-12) and return it as an array."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} must be a finite 3-vector")
    if abs(np.linalg.norm(arr) - 1.0) > UNIT_TOL:
        raise InvalidArgumentError(f"{name} must have unit length, |{name}| = {np.linalg.norm(arr)!r}")
    return arr


@dataclass(frozen=True)
class FourMomentum:
    """On-shell momentum of a particle of mass ``m``; the energy is derived."""

    m: float
    p: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        m = float(self.m)
        p = tuple(float(c) for c in self.p)
        if len(p) != 3:
            raise InvalidArgumentError("momentum must have three components")
        if not (np.isfinite(m) and m > 0):
            raise InvalidArgumentError(f"mass must be positive and finite, got {self.m!r}")
        if not np.all(np.isfinite(p)):
            raise InvalidArgumentError("momentum components must be finite")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p", p)

    @classmethod
    def from_rapidity(cls, m: float, eta: float, direction: Sequence[float] = Z_HAT) -> "FourMomentum":
        n = unit_vector(direction)
        return cls(m, tuple(m * np.sinh(eta) * n))

    @property
    def vec(self) -> np.ndarray:
        return np.array(self.p)

    @property
    def magnitude(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def e(self) -> float:
        return float(np.hypot(self.m, self.magnitude))

    @property
    def direction(self) -> np.ndarray:
        """p/|p|, or z-hat at rest."""
        mag = self.magnitude
        return self.vec / mag if mag > 0 else np.array(Z_HAT)

    def contravariant(self) -> np.ndarray:
        """(E, px, py, pz)."""
        return np.array([self.e, *self.p])

    def covariant(self) -> np.ndarray:
        """p_mu = (E, -p)."""
        return np.array([self.e, *(-c for c in self.p)])


def slash(p: FourMomentum) -> np.ndarray:
    """gamma^mu p_mu = E gamma^0 - p . gamma."""
    out = p.e * gamma(0)
    for j, c in enumerate(p.p):
        out = out - c * gamma(j + 1)
    return out


def _sigma_dot(v: Sequence[float]) -> np.ndarray:
    return sum(float(c) * pauli(j + 1) for j, c in enumerate(v))


def spherical_angles(khat: Sequence[float]) -> tuple[float, float]:
    """Polar and azimuthal angle of a unit vector."""
    k = unit_vector(khat, "khat")
    return float(np.arccos(np.clip(k[2], -1.0, 1.0))), float(np.arctan2(k[1], k[0]))


def two_spinor(s: int, theta: float, phi: float) -> np.ndarray:
    """Spin-up (s=1) or spin-down (s=2) 2-spinor along the axis (theta, phi)."""
    _check_spin(s)
    c, sn = np.cos(theta / 2), np.sin(theta / 2)
    if s == 1:
        return np.array([c, np.exp(1j * phi) * sn])
    return np.array([-np.exp(-1j * phi) * sn, c + 0j])


def _axis_spinor(s: int, khat) -> np.ndarray:
    return two_spinor(s, *spherical_angles(khat))


def rest_bispinor(label: SpinorLabel, khat: Sequence[float] = Z_HAT) -> np.ndarray:
    """u_{+-,s}(0): chi_s(khat) in the upper (plus) or lower (minus) parity block."""
    chi = _axis_spinor(label.s, khat)
    zero = np.zeros(2, dtype=complex)
    return np.concatenate([chi, zero] if label.sign is Sign.PLUS else [zero, chi])


def free_bispinor(label: SpinorLabel, p: FourMomentum, khat: Sequence[float] | None = None) -> np.ndarray:
    """Positive (sign=plus) or negative (sign=minus) energy solution u_{+-,s}(p).

    The spin axis ``khat`` defaults to the momentum direction (z-hat at rest),
    which makes ``s`` a helicity label. Any other unit axis is accepted.
    """
    if khat is None:
        khat = p.direction
    chi = _axis_spinor(label.s, khat)
    m, e = p.m, p.e
    # written so that p = 0 reproduces rest_bispinor exactly
    large = np.sqrt((e + m) / (2 * m)) * chi
    small = _sigma_dot(p.p) @ chi / np.sqrt(2 * m * (e + m))
    return np.concatenate([large, small] if label.sign is Sign.PLUS else [small, large])


def dirac_adjoint(w: np.ndarray) -> np.ndarray:
    """wbar = w^dagger gamma^0, returned as a row of length 4."""
    return np.conj(np.asarray(w)) @ gamma(0)


def closure_matrix(sign: SignLike, p: FourMomentum) -> np.ndarray:
    """+-sum_s u_{+-,s}(p) ubar_{+-,s}(p), the projector (1 +- pslash/m)/2."""
    sign = as_sign(sign)
    out = np.zeros((4, 4), dtype=complex)
    for s in (1, 2):
        u = free_bispinor(SpinorLabel(sign, s), p)
        out += np.outer(u, dirac_adjoint(u))
    return int(sign) * out


def closure_closed_form(sign: SignLike, p: FourMomentum) -> np.ndarray:
    return 0.5 * (I4 + int(as_sign(sign)) * slash(p) / p.m)
