"""Spin-parity entanglement of Dirac bispinors in two density-matrix conventions."""
from .clifford import FieldValues, dirac_operator, flip_operator, free_hamiltonian, gamma, general_hamiltonian
from .concurrence import (
    ConcurrenceResult,
    Method,
    concurrence_from_bloch,
    concurrence_pure,
    concurrence_rank2,
    concurrence_wootters,
    entanglement_entropy,
    eof_from_concurrence,
    spin_flip,
)
from .density import (
    BlochDecomposition,
    Convention,
    SpinParityDensity,
    bell_density,
    bloch_decompose,
    density_from_bispinor,
    mix,
    partial_trace,
    pure_density,
    rest_projector,
    trace_power,
)
from .errors import (
    ConstructionError,
    DegenerateFieldError,
    InvalidArgumentError,
    NumericConsistencyError,
    PreconditionError,
    SpinParityError,
    UnsupportedConventionError,
)
from .lorentz import (
    BoostParameters,
    RotationParameters,
    boost_operator,
    rotation_operator,
    spacetime_boost,
    spacetime_rotation,
    spinor_inverse,
    spinor_operator,
    transform_covariant,
    transform_hermitian,
)
from .magnetic import MagneticSetup, boosted_magnetic_density, magnetic_hamiltonian, magnetic_rest_density, projected_mixture
from .spinors import FourMomentum, Sign, SpinorLabel, dirac_adjoint, free_bispinor, rest_bispinor, slash

__version__ = "0.1.0"

__all__ = [
    "BlochDecomposition",
    "BoostParameters",
    "ConcurrenceResult",
    "ConstructionError",
    "Convention",
    "DegenerateFieldError",
    "FieldValues",
    "FourMomentum",
    "InvalidArgumentError",
    "MagneticSetup",
    "Method",
    "NumericConsistencyError",
    "PreconditionError",
    "RotationParameters",
    "Sign",
    "SpinParityDensity",
    "SpinParityError",
    "SpinorLabel",
    "UnsupportedConventionError",
    "bell_density",
    "bloch_decompose",
    "boost_operator",
    "boosted_magnetic_density",
    "concurrence_from_bloch",
    "concurrence_pure",
    "concurrence_rank2",
    "concurrence_wootters",
    "density_from_bispinor",
    "dirac_adjoint",
    "dirac_operator",
    "entanglement_entropy",
    "eof_from_concurrence",
    "flip_operator",
    "free_bispinor",
    "free_hamiltonian",
    "gamma",
    "general_hamiltonian",
    "magnetic_hamiltonian",
    "magnetic_rest_density",
    "mix",
    "partial_trace",
    "projected_mixture",
    "pure_density",
    "rest_bispinor",
    "rest_projector",
    "rotation_operator",
    "slash",
    "spacetime_boost",
    "spacetime_rotation",
    "spin_flip",
    "spinor_inverse",
    "spinor_operator",
    "trace_power",
    "transform_covariant",
    "transform_hermitian",
]
