"""Named state families used by the command-line sweeps."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .concurrence import (
    ConcurrenceResult,
    Method,
    concurrence_from_bloch,
    concurrence_pure,
    concurrence_rank2,
    concurrence_wootters,
)
from .density import Convention, SpinParityDensity, bell_density, bloch_decompose, density_from_bispinor, mix
from .errors import InvalidArgumentError, UnsupportedConventionError
from .magnetic import MagneticSetup, boosted_magnetic_density, projected_mixture
from .spinors import FourMomentum, Sign, SpinorLabel, free_bispinor

FAMILIES = ("free", "magnetic", "parity_mix", "helicity_mix", "bell_mix")
PURE_FAMILIES = ("free", "magnetic")
PARAMETERS = ("eta", "q", "angle")


def _unit(v: Sequence[float], name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    norm = np.linalg.norm(arr)
    if arr.shape != (3,) or norm == 0:
        raise InvalidArgumentError(f"{name} must be a non-zero 3-vector")
    return arr / norm


def tilt(reference: np.ndarray, toward: np.ndarray, angle: float) -> np.ndarray:
    """Unit vector at ``angle`` from ``reference``, in the plane containing ``toward``.

    Falls back to an arbitrary perpendicular when ``toward`` is parallel to
    ``reference``.
    """
    perp = toward - (toward @ reference) * reference
    if np.linalg.norm(perp) < 1e-12:
        trial = np.eye(3)[np.argmin(np.abs(reference))]
        perp = trial - (trial @ reference) * reference
    perp /= np.linalg.norm(perp)
    return np.cos(angle) * reference + np.sin(angle) * perp


@dataclass(frozen=True)
class FamilyParams:
    """Fixed parameters of a state family; one of eta/q/angle is swept."""

    family: str = "free"
    convention: Convention = Convention.HERMITIAN
    m: float = 1.0
    mu: float = 0.3
    bmag: float = 1.0
    eta: float = 0.0
    q: float = 0.5
    angle: float | None = None
    sign: Sign = Sign.PLUS
    spin: int = 1
    spin_axis: tuple[float, float, float] = (1.0, 0.0, 0.0)
    field_axis: tuple[float, float, float] = (0.0, 0.0, 1.0)
    boost_axis: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidArgumentError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "convention", Convention(self.convention))

    def with_param(self, name: str, value: float) -> "FamilyParams":
        if name not in PARAMETERS:
            raise InvalidArgumentError(f"unknown sweep parameter {name!r}")
        return replace(self, **{name: float(value)})

    def momentum(self) -> FourMomentum:
        boost_dir = _unit(self.boost_axis, "boost axis")
        if self.family != "free" and self.angle is not None:
            field_dir = _unit(self.field_axis, "field axis")
            boost_dir = tilt(field_dir, boost_dir, self.angle)
        return FourMomentum.from_rapidity(self.m, self.eta, boost_dir)

    def setup(self) -> MagneticSetup:
        return MagneticSetup(self.m, self.mu, tuple(self.bmag * _unit(self.field_axis, "field axis")))


def build_state(params: FamilyParams) -> SpinParityDensity:
    fam = params.family
    if fam == "bell_mix":
        if params.convention is not Convention.HERMITIAN:
            raise UnsupportedConventionError("bell_mix is only available in the hermitian convention")
        return mix([(params.q, bell_density("phi+")), (1 - params.q, bell_density("phi-"))])
    p = params.momentum()
    if fam == "free":
        khat = _unit(params.spin_axis, "spin axis")
        if params.angle is not None:
            khat = tilt(p.direction, khat, params.angle)
        u = free_bispinor(SpinorLabel(params.sign, params.spin), p, khat)
        return density_from_bispinor(u, params.sign, params.convention, p)
    if fam == "magnetic":
        return boosted_magnetic_density(params.sign, params.spin, params.setup(), p, params.convention)
    fixed = params.spin if fam == "parity_mix" else params.sign
    return projected_mixture(fam, fixed, params.setup(), p, params.q, params.convention)


def default_method(params: FamilyParams) -> Method:
    if params.family in PURE_FAMILIES:
        return Method.PURE_TRACE
    if params.convention is Convention.COVARIANT:
        return Method.RANK2_TRACE
    return Method.WOOTTERS


def concurrence(rho: SpinParityDensity, method: Method) -> ConcurrenceResult:
    method = Method(method)
    if method is Method.PURE_TRACE:
        return concurrence_pure(rho)
    if method is Method.RANK2_TRACE:
        return concurrence_rank2(rho)
    if method is Method.WOOTTERS:
        return concurrence_wootters(rho)
    if rho.is_covariant:
        raise UnsupportedConventionError("Bloch-vector concurrence needs the hermitian convention")
    return concurrence_from_bloch(bloch_decompose(rho))
