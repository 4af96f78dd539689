"""Spin-parity density matrices in the Hermitian and covariant conventions.

Hermitian convention: rho = (m/E) u u^dagger, boosted as
cosh^-1(eta) S rho S^dagger. It stays Hermitian and positive but its higher
trace powers drift with the boost.

Covariant convention: rhobar = +-u u^dagger gamma^0 (i.e. +-P gamma^0),
boosted by similarity S rhobar S^-1. It is generally not Hermitian once
|p| > 0, yet every Tr[rhobar^n] equals 1 in every frame.

At rest the two coincide.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .clifford import I2, I4, dirac_operator, gamma, kron, pauli
from .errors import ConstructionError, InvalidArgumentError, NumericConsistencyError, UnsupportedConventionError
from .lorentz import Transformation, transform_covariant, transform_hermitian
from .spinors import Z_HAT, FourMomentum, SignLike, as_sign, unit_vector

__all__ = [
    "BlochDecomposition",
    "Convention",
    "SpinParityDensity",
    "bell_density",
    "bloch_decompose",
    "density_from_bispinor",
    "mix",
    "partial_trace",
    "pure_density",
    "rest_projector",
    "trace_power",
]

TRACE_TOL = 1e-10
CHAIN_TRACE_TOL = 1e-8
HERMITIAN_TOL = 1e-10
MAX_TRACE_POWER = 8


class Convention(str, enum.Enum):
    HERMITIAN = "hermitian"
    COVARIANT = "covariant"

    def __str__(self):
        return self.value


def as_convention(value) -> Convention:
    try:
        return Convention(value)
    except ValueError:
        raise InvalidArgumentError(f"unknown convention {value!r}") from None


@dataclass(frozen=True, eq=False)
class SpinParityDensity:
    """A 4x4 density matrix tagged with its normalization convention.

    Both conventions require unit trace. The Hermitian tag additionally
    requires a Hermitian, positive semi-definite matrix; covariant matrices
    are stored as given.
    """

    matrix: np.ndarray
    convention: Convention
    trace_tol: float = field(default=TRACE_TOL, repr=False)

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.shape != (4, 4):
            raise ConstructionError(f"density matrix must be 4x4, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise ConstructionError("density matrix has non-finite entries")
        conv = as_convention(self.convention)
        tr = np.trace(mat)
        if abs(tr - 1) > self.trace_tol:
            raise ConstructionError(f"trace must be 1, got {tr:.12g}")
        if conv is Convention.HERMITIAN:
            herm_err = np.max(np.abs(mat - mat.conj().T))
            if herm_err > HERMITIAN_TOL:
                raise ConstructionError(f"hermitian-convention matrix is not Hermitian (error {herm_err:.3e})")
            lowest = np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))[0]
            if lowest < -HERMITIAN_TOL:
                raise ConstructionError(f"hermitian-convention matrix has eigenvalue {lowest:.3e} < 0")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "convention", conv)

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def is_covariant(self) -> bool:
        return self.convention is Convention.COVARIANT

    def transformed(self, t: Transformation) -> "SpinParityDensity":
        """Apply a boost or rotation with the transformation law of this convention."""
        law = transform_covariant if self.is_covariant else transform_hermitian
        return SpinParityDensity(law(self.matrix, t), self.convention, trace_tol=CHAIN_TRACE_TOL)


@dataclass(frozen=True)
class BlochDecomposition:
    """rho = 1/4 [I + a.(sigma (x) I) + b.(I (x) sigma) + sum t_ij sigma_i (x) sigma_j].

    ``a`` belongs to the parity qubit and ``b`` to the spin qubit. Components
    are complex in general; they are real for Hermitian inputs.
    """

    a: np.ndarray
    b: np.ndarray
    t: np.ndarray

    def reconstruct(self) -> np.ndarray:
        out = I4.astype(complex)
        for i in range(3):
            out = out + self.a[i] * kron(pauli(i + 1), I2) + self.b[i] * kron(I2, pauli(i + 1))
            for j in range(3):
                out = out + self.t[i, j] * kron(pauli(i + 1), pauli(j + 1))
        return out / 4

    @property
    def a_squared(self) -> complex:
        """a.a without complex conjugation (Lorentz-invariant for covariant states)."""
        return complex(self.a @ self.a)

    @property
    def b_squared(self) -> complex:
        return complex(self.b @ self.b)


def bloch_decompose(rho) -> BlochDecomposition:
    mat = np.asarray(rho)
    a = np.array([np.trace(mat @ kron(pauli(i), I2)) for i in (1, 2, 3)])
    b = np.array([np.trace(mat @ kron(I2, pauli(j))) for j in (1, 2, 3)])
    t = np.array([[np.trace(mat @ kron(pauli(i), pauli(j))) for j in (1, 2, 3)] for i in (1, 2, 3)])
    return BlochDecomposition(a, b, t)


def _sigma_dot_k(khat) -> np.ndarray:
    return sum(c * dirac_operator("big_sigma", j + 1) for j, c in enumerate(khat))


def rest_projector(sign: SignLike, s: int, khat: Sequence[float] = Z_HAT) -> np.ndarray:
    """P^s_+- = 1/4 (I + (-1)^(s-1) Sigma.khat)(I +- gamma^0)."""
    sign = as_sign(sign)
    if s not in (1, 2):
        raise InvalidArgumentError(f"spin label must be 1 or 2, got {s!r}")
    k = unit_vector(khat, "khat")
    spin = I4 + (-1) ** (s - 1) * _sigma_dot_k(k)
    return 0.25 * spin @ (I4 + int(sign) * gamma(0))


def density_from_bispinor(
    u: np.ndarray,
    sign: SignLike,
    convention,
    p: FourMomentum | None = None,
) -> SpinParityDensity:
    """Pure-state density of a bispinor carrying the 1/sqrt(2m(E+m)) normalization.

    Hermitian: (m/E) u u^dagger, where m/E is taken from ``p`` when given and
    from 1/(u^dagger u) otherwise. Covariant: +-u u^dagger gamma^0.
    """
    u = np.asarray(u, dtype=complex)
    sign = as_sign(sign)
    conv = as_convention(convention)
    outer = np.outer(u, u.conj())
    if conv is Convention.HERMITIAN:
        scale = p.m / p.e if p is not None else 1.0 / np.real(u.conj() @ u)
        mat = scale * outer
    else:
        mat = int(sign) * outer @ gamma(0)
    return SpinParityDensity(mat, conv, trace_tol=CHAIN_TRACE_TOL)


def pure_density(w: Sequence[complex]) -> SpinParityDensity:
    """Hermitian density |w><w| / <w|w> for an arbitrary two-qubit vector."""
    w = np.asarray(w, dtype=complex)
    return SpinParityDensity(np.outer(w, w.conj()) / np.real(w.conj() @ w), Convention.HERMITIAN)


_BELL = {
    "phi+": (1, 0, 0, 1),
    "phi-": (1, 0, 0, -1),
    "psi+": (0, 1, 1, 0),
    "psi-": (0, 1, -1, 0),
}


def bell_density(name: str) -> SpinParityDensity:
    """Projector on a Bell state of the parity and spin qubits (``phi+``, ``psi-``, ...)."""
    try:
        return pure_density(_BELL[name])
    except KeyError:
        raise InvalidArgumentError(f"unknown Bell state {name!r}") from None


def _require_hermitian(rho, what: str) -> SpinParityDensity:
    if not isinstance(rho, SpinParityDensity):
        raise InvalidArgumentError(f"{what} needs a SpinParityDensity")
    if rho.is_covariant:
        raise UnsupportedConventionError(f"{what} is only defined for the hermitian convention")
    return rho


def partial_trace(rho: SpinParityDensity, keep: str) -> np.ndarray:
    """Reduced 2x2 state of the ``"parity"`` or ``"spin"`` qubit."""
    _require_hermitian(rho, "partial_trace")
    r = rho.matrix.reshape(2, 2, 2, 2)
    if keep == "parity":
        return np.einsum("ijkj->ik", r)
    if keep == "spin":
        return np.einsum("ijil->jl", r)
    raise InvalidArgumentError(f"keep must be 'parity' or 'spin', got {keep!r}")


def trace_power(rho, n: int, residue_tol: float = 1e-10) -> float:
    """Re Tr[rho^n]; the imaginary part must vanish to ``residue_tol``."""
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_TRACE_POWER:
        raise InvalidArgumentError(f"power must be an integer in 1..{MAX_TRACE_POWER}, got {n!r}")
    tr = np.trace(np.linalg.matrix_power(np.asarray(rho), int(n)))
    if abs(tr.imag) > residue_tol:
        raise NumericConsistencyError(f"Tr[rho^{n}] has imaginary part {tr.imag:.3e}")
    return float(tr.real)


def mix(terms: Iterable[tuple[float, SpinParityDensity]]) -> SpinParityDensity:
    """Convex combination of densities sharing one convention."""
    terms = list(terms)
    if not terms:
        raise InvalidArgumentError("mix needs at least one term")
    conventions = {rho.convention for _, rho in terms}
    if len(conventions) != 1:
        raise InvalidArgumentError("cannot mix densities of different conventions")
    weights = np.array([w for w, _ in terms], dtype=float)
    if np.any(weights < 0) or abs(weights.sum() - 1) > 1e-12:
        raise InvalidArgumentError(f"weights must be non-negative and sum to 1, got {weights.tolist()}")
    mat = sum(w * rho.matrix for w, rho in terms)
    return SpinParityDensity(mat, conventions.pop(), trace_tol=CHAIN_TRACE_TOL)
