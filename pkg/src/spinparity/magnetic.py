"""Dirac particle in a uniform magnetic field: H = gamma^0 (m + mu Sigma.B).

Rest eigenstates are the parity (x) spin product projectors with the spin
quantized along B-hat. Boosted densities are always obtained by numerically
transforming those rest states. The closed-form expressions below are only
valid for boosts parallel to B and serve as cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import I4, dirac_operator, gamma, kron, pauli
from .density import Convention, SpinParityDensity, as_convention, mix, rest_projector
from .errors import DegenerateFieldError, InvalidArgumentError, PreconditionError
from .spinors import FourMomentum, Sign, SignLike, as_sign

__all__ = [
    "MagneticSetup",
    "boosted_magnetic_density",
    "closed_form_bloch",
    "helicity_projection_closed_form",
    "magnetic_eigenvalue",
    "magnetic_hamiltonian",
    "magnetic_rest_density",
    "parity_projection_closed_form",
    "projected_mixture",
]

PARALLEL_TOL = 1e-10


@dataclass(frozen=True)
class MagneticSetup:
    m: float
    mu: float
    b: tuple[float, float, float]

    def __post_init__(self):
        if not (np.isfinite(self.m) and self.m > 0):
            raise InvalidArgumentError(f"mass must be positive, got {self.m!r}")
        b = tuple(float(c) for c in self.b)
        if len(b) != 3 or not np.all(np.isfinite(b)) or not np.isfinite(self.mu):
            raise InvalidArgumentError("mu and the 3-vector b must be finite")
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "b", b)

    @property
    def bmag(self) -> float:
        return float(np.linalg.norm(self.b))

    @property
    def bhat(self) -> np.ndarray:
        if self.bmag == 0:
            raise DegenerateFieldError("field direction is undefined for B = 0")
        return np.asarray(self.b) / self.bmag


def _sigma_dot(v) -> np.ndarray:
    return sum(c * pauli(j + 1) for j, c in enumerate(v))


def _big_sigma_dot(v) -> np.ndarray:
    return sum(c * dirac_operator("big_sigma", j + 1) for j, c in enumerate(v))


def magnetic_hamiltonian(setup: MagneticSetup) -> np.ndarray:
    """m sigma_z (x) I + mu sigma_z (x) sigma.B."""
    sz = pauli(3)
    return setup.m * kron(sz, np.eye(2)) + setup.mu * kron(sz, _sigma_dot(setup.b))


def magnetic_eigenvalue(sign: SignLike, s: int, setup: MagneticSetup) -> float:
    """+-(m + (-1)^(s-1) mu |B|)."""
    return int(as_sign(sign)) * (setup.m + (-1) ** (s - 1) * setup.mu * setup.bmag)


def magnetic_rest_density(sign: SignLike, s: int, setup: MagneticSetup, convention=Convention.HERMITIAN) -> SpinParityDensity:
    """1/4 (1 +- gamma^0)(1 + (-1)^(s-1) Sigma.B-hat); the same matrix in both conventions."""
    return SpinParityDensity(rest_projector(sign, s, setup.bhat), as_convention(convention))


def boosted_magnetic_density(
    sign: SignLike,
    s: int,
    setup: MagneticSetup,
    p: FourMomentum,
    convention=Convention.HERMITIAN,
) -> SpinParityDensity:
    if abs(p.m - setup.m) > 1e-12 * setup.m:
        raise InvalidArgumentError(f"momentum mass {p.m!r} does not match setup mass {setup.m!r}")
    return magnetic_rest_density(sign, s, setup, convention).transformed(p)


def _require_parallel(setup: MagneticSetup, p: FourMomentum) -> float:
    bhat = setup.bhat
    transverse = np.linalg.norm(np.cross(p.vec, bhat))
    if transverse > PARALLEL_TOL * max(1.0, p.magnitude):
        raise PreconditionError("closed forms require the momentum to be parallel to B")
    return float(p.vec @ bhat)


def closed_form_bloch(
    setup: MagneticSetup,
    p: FourMomentum,
    convention=Convention.HERMITIAN,
    sign: SignLike = Sign.PLUS,
    s: int = 1,
) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form Bloch vectors (a, b) of the boosted eigenstate, p parallel to B.

    The triples are usually listed as a = (m, 0, p.B)/E and
    abar = (E, i p.B, 0)/m. Those lists are (a_z, -a_y, a_x), with a_z the
    gamma^0 axis of the parity qubit. Here they are returned as Cartesian
    (x, y, z) arrays, matching :func:`bloch_decompose`. ``sign`` and ``s``
    give the factors +-1 and (-1)^(s-1) that the (+, 1) expressions omit.
    """
    conv = as_convention(convention)
    p_par = _require_parallel(setup, p)
    eps = int(as_sign(sign))
    spin = (-1) ** (s - 1)
    m, e, bhat, pv = setup.m, p.e, setup.bhat, p.vec
    if conv is Convention.HERMITIAN:
        a = np.array([spin * p_par / e, 0.0, eps * m / e], dtype=complex)
        b = spin * (m * bhat + pv * p_par / (e + m)) / e
    else:
        a = np.array([0.0, -1j * eps * spin * p_par / m, eps * e / m], dtype=complex)
        b = spin * (e * bhat - pv * p_par / (e + m)) / m
    return a, b.astype(complex)


def projected_mixture(
    kind: str,
    fixed,
    setup: MagneticSetup,
    p: FourMomentum,
    q: float,
    convention=Convention.COVARIANT,
) -> SpinParityDensity:
    """Rank-2 mixtures of boosted magnetic eigenstates.

    ``parity_mix``: q rho^s_+ + (1-q) rho^s_- with ``fixed`` the spin label s.
    ``helicity_mix``: q rho^1_+- + (1-q) rho^2_+- with ``fixed`` the sign.
    """
    if not 0 < q < 1:
        raise InvalidArgumentError(f"q must lie strictly between 0 and 1, got {q!r}")
    if kind == "parity_mix":
        labels = [(Sign.PLUS, fixed), (Sign.MINUS, fixed)]
    elif kind == "helicity_mix":
        labels = [(as_sign(fixed), 1), (as_sign(fixed), 2)]
    else:
        raise InvalidArgumentError(f"kind must be 'parity_mix' or 'helicity_mix', got {kind!r}")
    terms = [
        (w, boosted_magnetic_density(sg, s, setup, p, convention))
        for w, (sg, s) in zip((q, 1 - q), labels)
    ]
    return mix(terms)


def parity_projection_closed_form(s: int, setup: MagneticSetup, p: FourMomentum) -> np.ndarray:
    """1/4 {1 + (-1)^(s-1) [(E/m) Sigma.B-hat - (p.B-hat/m) Sigma.p/(E+m)]}, p parallel to B."""
    p_par = _require_parallel(setup, p)
    m, e = p.m, p.e
    inner = (e / m) * _big_sigma_dot(setup.bhat) - (p_par / m) * _big_sigma_dot(p.p) / (e + m)
    return 0.25 * (I4 + (-1) ** (s - 1) * inner)


def helicity_projection_closed_form(sign: SignLike, p: FourMomentum) -> np.ndarray:
    """1/4 {1 +- gamma^0 (E - gamma^5 Sigma.p)/m}; exact for any boost direction."""
    g0, g5 = gamma(0), gamma(5)
    return 0.25 * (I4 + int(as_sign(sign)) * g0 @ (p.e * I4 - g5 @ _big_sigma_dot(p.p)) / p.m)
