"""Seeded random inputs for property checks."""
from __future__ import annotations

import numpy as np

from .density import Convention, SpinParityDensity
from .lorentz import BoostParameters, RotationParameters
from .spinors import FourMomentum


def unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def momentum(rng: np.random.Generator, m: float = 1.0, max_ratio: float = 10.0) -> FourMomentum:
    """On-shell momentum with |p| uniform in [0, max_ratio * m] and isotropic direction."""
    return FourMomentum(m, tuple(rng.uniform(0, max_ratio * m) * unit(rng)))


def boost(rng: np.random.Generator, max_ratio: float = 10.0) -> BoostParameters:
    return BoostParameters(float(np.arcsinh(rng.uniform(0, max_ratio))), tuple(unit(rng)))


def rotation(rng: np.random.Generator) -> RotationParameters:
    return RotationParameters(float(rng.uniform(0, 4 * np.pi)), tuple(unit(rng)))


def transformation(rng: np.random.Generator, max_ratio: float = 10.0):
    """A boost or a rotation with equal probability."""
    return boost(rng, max_ratio) if rng.random() < 0.5 else rotation(rng)


def complex_vector(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def pure_state(rng: np.random.Generator) -> SpinParityDensity:
    w = complex_vector(rng)
    w /= np.linalg.norm(w)
    return SpinParityDensity(np.outer(w, w.conj()), Convention.HERMITIAN)


def rank2_state(rng: np.random.Generator) -> SpinParityDensity:
    """Hermitian PSD rank-2 state: two random orthonormal vectors with random weights."""
    q, _ = np.linalg.qr(np.column_stack([complex_vector(rng), complex_vector(rng)]))
    w = rng.uniform(0.05, 1.0)
    mat = w * np.outer(q[:, 0], q[:, 0].conj()) + (1 - w) * np.outer(q[:, 1], q[:, 1].conj())
    return SpinParityDensity(mat, Convention.HERMITIAN)
