"""Pauli and Dirac matrices built as Kronecker products.

Every 4x4 operator in the package lives in the parity (x) spin product
space, ordered as ``|+,up>, |+,down>, |-,up>, |-,down>``: the first Kronecker
factor acts on intrinsic parity, the second on spin. The Dirac matrices are
in the standard (Dirac) representation with metric signature (+,-,-,-).

Cached matrices are returned read-only; arithmetic on them yields fresh
arrays as usual.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import InvalidArgumentError

if TYPE_CHECKING:
    from .spinors import FourMomentum

__all__ = [
    "FieldValues",
    "METRIC",
    "I2",
    "I4",
    "dirac_operator",
    "flip_operator",
    "free_hamiltonian",
    "gamma",
    "general_hamiltonian",
    "kron",
    "pauli",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


I2 = _frozen(np.eye(2))
I4 = _frozen(np.eye(4))

_PAULI = (
    _frozen([[0, 1], [1, 0]]),
    _frozen([[0, -1j], [1j, 0]]),
    _frozen([[1, 0], [0, -1]]),
)


def pauli(i: int) -> np.ndarray:
    """Return sigma_x, sigma_y or sigma_z for ``i`` = 1, 2, 3."""
    if i not in (1, 2, 3):
        raise InvalidArgumentError(f"Pauli index must be 1, 2 or 3, got {i!r}")
    return _PAULI[i - 1]


def kron(parity_factor: np.ndarray, spin_factor: np.ndarray) -> np.ndarray:
    """Kronecker product with the parity factor first and the spin factor second."""
    return np.kron(parity_factor, spin_factor)


@lru_cache(maxsize=None)
def _gamma(idx: int) -> np.ndarray:
    beta = kron(_PAULI[2], I2)
    if idx == 0:
        return _frozen(beta)
    if idx in (1, 2, 3):
        return _frozen(beta @ kron(_PAULI[0], _PAULI[idx - 1]))
    # idx == 5: i g0 g1 g2 g3, evaluated rather than hard-coded
    return _frozen(1j * _gamma(0) @ _gamma(1) @ _gamma(2) @ _gamma(3))


def gamma(idx: int) -> np.ndarray:
    """Dirac gamma matrix gamma^idx for idx in {0, 1, 2, 3, 5}.

    gamma^0 is beta = sigma_z (x) I, gamma^i = beta alpha^i and gamma^5 is the
    product i gamma^0 gamma^1 gamma^2 gamma^3, which works out to
    sigma_x (x) I in this representation.
    """
    if idx not in (0, 1, 2, 3, 5):
        raise InvalidArgumentError(f"gamma index must be one of 0, 1, 2, 3, 5; got {idx!r}")
    return _gamma(idx)


@lru_cache(maxsize=None)
def _dirac_operator(name: str, j: int) -> np.ndarray:
    if name == "alpha":
        return _frozen(kron(_PAULI[0], _PAULI[j - 1]))
    if name == "big_sigma":
        return _frozen(_gamma(5) @ _dirac_operator("alpha", j))
    # boost generator K5^j = (i/4) [gamma^j, gamma^0]
    gj, g0 = _gamma(j), _gamma(0)
    return _frozen(0.25j * (gj @ g0 - g0 @ gj))


def dirac_operator(name: str, j: int) -> np.ndarray:
    """alpha^j, Sigma^j = gamma^5 alpha^j, or the boost generator K5^j.

    ``name`` is one of ``"alpha"``, ``"big_sigma"``, ``"k5"``.
    """
    if name not in ("alpha", "big_sigma", "k5"):
        raise InvalidArgumentError(f"unknown Dirac operator {name!r}")
    if j not in (1, 2, 3):
        raise InvalidArgumentError(f"Dirac operator index must be 1, 2 or 3, got {j!r}")
    return _dirac_operator(name, j)


def flip_operator() -> np.ndarray:
    """The two-qubit flip sigma_y (x) sigma_y, identical to -i gamma^2 (real)."""
    return _flip()


@lru_cache(maxsize=None)
def _flip() -> np.ndarray:
    return _frozen(-1j * _gamma(2))


def _dot_operators(name: str, v: Sequence[float]) -> np.ndarray:
    return sum(float(c) * _dirac_operator(name, j + 1) for j, c in enumerate(v))


def free_hamiltonian(p: "FourMomentum") -> np.ndarray:
    """H = p . alpha + m beta for an on-shell momentum; eigenvalues are +-E (twice each)."""
    return _dot_operators("alpha", p.p) + p.m * _gamma(0)


@dataclass(frozen=True)
class FieldValues:
    """External fields evaluated at a single point (natural units).

    The names follow the coupling they enter: ``a0``/``a`` vector potential,
    ``phi_s`` scalar, ``mu_ps`` pseudoscalar, ``q_pv``/``w`` pseudovector
    time/space parts, ``b_field``/``e_field`` with anomalous couplings
    ``kappa_a`` and ``zeta_a``.
    """

    a0: float = 0.0
    a: tuple[float, float, float] = (0.0, 0.0, 0.0)
    phi_s: float = 0.0
    mu_ps: float = 0.0
    q_pv: float = 0.0
    w: tuple[float, float, float] = (0.0, 0.0, 0.0)
    b_field: tuple[float, float, float] = (0.0, 0.0, 0.0)
    e_field: tuple[float, float, float] = (0.0, 0.0, 0.0)
    kappa_a: float = 0.0
    zeta_a: float = 0.0

    def __post_init__(self):
        for name in ("a", "w", "b_field", "e_field"):
            vec = tuple(float(c) for c in getattr(self, name))
            if len(vec) != 3:
                raise InvalidArgumentError(f"{name} must have three components")
            object.__setattr__(self, name, vec)
        values = [self.a0, self.phi_s, self.mu_ps, self.q_pv, self.kappa_a, self.zeta_a]
        values += [*self.a, *self.w, *self.b_field, *self.e_field]
        if not np.all(np.isfinite(values)):
            raise InvalidArgumentError("field values must be finite")


def general_hamiltonian(
    m: float,
    fields: FieldValues,
    momentum: Sequence[float] = (0.0, 0.0, 0.0),
) -> np.ndarray:
    """Assemble the Dirac Hamiltonian with the full catalogue of external couplings.

    The momentum operator is replaced by the numeric 3-vector ``momentum``
    (plane-wave evaluation at the point where ``fields`` were sampled)::

        A0 + beta (m + phi_S) + alpha.(p - A) + i beta g5 mu - g5 q + g5 alpha.W
           + i gamma.(zeta_a B + kappa_a E) + g5 gamma.(kappa_a B - zeta_a E)

    A pure magnetic coupling ``gamma^0 mu Sigma.B`` corresponds to
    ``kappa_a = -mu`` with ``zeta_a = 0``, since g5 gamma^i = -gamma^0 Sigma^i.
    """
    if not m > 0:
        raise InvalidArgumentError(f"mass must be positive, got {m!r}")
    p = np.asarray(momentum, dtype=float)
    if p.shape != (3,):
        raise InvalidArgumentError("momentum must be a 3-vector")
    g0, g5 = _gamma(0), _gamma(5)
    gvec = [_gamma(j) for j in (1, 2, 3)]
    b = np.asarray(fields.b_field)
    e = np.asarray(fields.e_field)

    h = fields.a0 * I4 + (m + fields.phi_s) * g0
    h = h + _dot_operators("alpha", p - np.asarray(fields.a))
    h = h + 1j * fields.mu_ps * g0 @ g5 - fields.q_pv * g5
    h = h + g5 @ _dot_operators("alpha", fields.w)
    odd = fields.zeta_a * b + fields.kappa_a * e
    axial = fields.kappa_a * b - fields.zeta_a * e
    for j in range(3):
        h = h + 1j * odd[j] * gvec[j] + axial[j] * g5 @ gvec[j]
    return h
