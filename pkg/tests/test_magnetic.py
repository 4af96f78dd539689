import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinparity import sampling
from spinparity.clifford import gamma
from spinparity.concurrence import concurrence_pure, concurrence_rank2, spin_flip
from spinparity.density import bloch_decompose
from spinparity.errors import DegenerateFieldError, InvalidArgumentError, PreconditionError
from spinparity.magnetic import (
    MagneticSetup,
    boosted_magnetic_density,
    closed_form_bloch,
    helicity_projection_closed_form,
    magnetic_eigenvalue,
    magnetic_hamiltonian,
    magnetic_rest_density,
    parity_projection_closed_form,
    projected_mixture,
)
from spinparity.spinors import FourMomentum, Sign

LABELS = [(sg, s) for sg in Sign for s in (1, 2)]
SETUP = MagneticSetup(1.0, 0.3, (0.0, 0.0, 1.0))


def maxabs(a):
    return float(np.max(np.abs(a)))


def random_setup(rng):
    return MagneticSetup(1.0, rng.uniform(-1, 1), tuple(rng.uniform(0.2, 3) * sampling.unit(rng)))


def parallel_momentum(rng, setup, max_ratio=10.0):
    return FourMomentum(setup.m, tuple(rng.uniform(-max_ratio, max_ratio) * setup.m * setup.bhat))


def test_hamiltonian_examples():
    assert np.array_equal(magnetic_hamiltonian(MagneticSetup(1.3, 0.0, (0, 0, 1))), 1.3 * gamma(0))
    h = magnetic_hamiltonian(MagneticSetup(1.0, 0.5, (0, 0, 0.6)))
    assert np.allclose(h, np.diag([1.3, 0.7, -1.3, -0.7]), atol=1e-15)


def test_setup_validation():
    with pytest.raises(InvalidArgumentError):
        MagneticSetup(0.0, 0.3, (0, 0, 1))
    with pytest.raises(InvalidArgumentError):
        MagneticSetup(1.0, np.nan, (0, 0, 1))
    with pytest.raises(DegenerateFieldError):
        magnetic_rest_density(Sign.PLUS, 1, MagneticSetup(1.0, 0.3, (0, 0, 0)))


def test_rest_density_examples():
    rho = magnetic_rest_density(Sign.PLUS, 1, SETUP)
    assert np.array_equal(rho.matrix, np.diag([1, 0, 0, 0]))
    h = magnetic_hamiltonian(SETUP)
    assert abs(np.trace(rho.matrix @ h) - 1.3) < 1e-15
    assert abs(np.trace(magnetic_rest_density(Sign.PLUS, 2, SETUP).matrix @ h) - 0.7) < 1e-15


def test_rest_eigenvalues_all_labels(rng):
    for _ in range(20):
        setup = random_setup(rng)
        h = magnetic_hamiltonian(setup)
        assert maxabs(h - h.conj().T) == 0
        for sg, s in LABELS:
            expected = int(sg) * (setup.m + (-1) ** (s - 1) * setup.mu * setup.bmag)
            assert magnetic_eigenvalue(sg, s, setup) == pytest.approx(expected, abs=1e-15)
            for conv in ("hermitian", "covariant"):
                rho = magnetic_rest_density(sg, s, setup, conv)
                assert maxabs(rho.matrix @ rho.matrix - rho.matrix) < 1e-12
                assert abs(np.trace(rho.matrix @ h) - expected) < 1e-12
                # eigenprojector: H rho = E rho
                assert maxabs(h @ rho.matrix - expected * rho.matrix) < 1e-12


def test_boosted_density_rules(rng):
    setup = random_setup(rng)
    rest = magnetic_rest_density(Sign.MINUS, 2, setup)
    assert maxabs(boosted_magnetic_density(Sign.MINUS, 2, setup, FourMomentum(1.0)).matrix - rest.matrix) == 0
    with pytest.raises(InvalidArgumentError):
        boosted_magnetic_density(Sign.PLUS, 1, setup, FourMomentum(2.0, (0, 0, 1)))


def test_closed_form_bloch_matches_numeric(rng):
    for _ in range(30):
        setup = random_setup(rng)
        p = parallel_momentum(rng, setup)
        for sg, s in LABELS:
            for conv in ("hermitian", "covariant"):
                d = bloch_decompose(boosted_magnetic_density(sg, s, setup, p, conv))
                a, b = closed_form_bloch(setup, p, conv, sg, s)
                assert maxabs(d.a - a) < 1e-9
                assert maxabs(d.b - b) < 1e-9


def test_closed_form_bloch_listed_triples():
    # the listed (m, 0, p.B)/E and (E, i p.B, 0)/m triples are (a_z, -a_y, a_x)
    p = FourMomentum(1.0, (0, 0, 0.75))
    a, _ = closed_form_bloch(SETUP, p, "hermitian")
    assert np.allclose([a[2], -a[1], a[0]], np.array([1.0, 0.0, 0.75]) / 1.25, atol=1e-15)
    abar, _ = closed_form_bloch(SETUP, p, "covariant")
    assert np.allclose([abar[2], -abar[1], abar[0]], [1.25, 0.75j, 0.0], atol=1e-15)
    assert abs(abar @ abar - 1) < 1e-15
    assert abs(a @ a - 1) < 1e-15
    d = bloch_decompose(boosted_magnetic_density(Sign.PLUS, 1, SETUP, p, "covariant"))
    assert abs(d.a[1].imag) > 0.1
    a0, _ = closed_form_bloch(SETUP, FourMomentum(1.0), "hermitian")
    assert np.allclose(a0, [0, 0, 1])


def test_closed_form_requires_parallel():
    with pytest.raises(PreconditionError):
        closed_form_bloch(SETUP, FourMomentum(1.0, (0.1, 0, 0.75)))


def test_covariant_bloch_norms(rng):
    for _ in range(50):
        setup = random_setup(rng)
        p = parallel_momentum(rng, setup)
        for sg, s in LABELS:
            d = bloch_decompose(boosted_magnetic_density(sg, s, setup, p, "covariant"))
            assert abs(d.a_squared - 1) < 1e-9 and abs(d.b_squared - 1) < 1e-9


def test_covariant_concurrence_zero_any_direction(rng):
    for _ in range(50):
        setup = random_setup(rng)
        p = sampling.momentum(rng)
        for sg, s in LABELS:
            assert concurrence_pure(boosted_magnetic_density(sg, s, setup, p, "covariant")).value < 1e-9


@given(st.floats(0, np.pi), st.floats(0, 3))
def test_hermitian_concurrence_angle_law(angle, eta):
    # oracle: C = (|p|/E) |sin angle(p, B)|; C below sqrt(64 eps) ~ 1.2e-7 is reported as 0
    p = FourMomentum.from_rapidity(1.0, eta, (np.sin(angle), 0.0, np.cos(angle)))
    for sg, s in LABELS:
        c = concurrence_pure(boosted_magnetic_density(sg, s, SETUP, p, "hermitian")).value
        assert abs(c - np.tanh(eta) * abs(np.sin(angle))) < 1.5e-7


def test_hermitian_perpendicular_witness():
    p = FourMomentum(1.0, (0.75, 0.0, 0.0))
    c = concurrence_pure(boosted_magnetic_density(Sign.PLUS, 1, SETUP, p, "hermitian")).value
    assert abs(c - 0.6) < 1e-9


def test_projected_mixture_validation():
    p = FourMomentum(1.0)
    for q in (0.0, 1.0, -0.2):
        with pytest.raises(InvalidArgumentError):
            projected_mixture("parity_mix", 1, SETUP, p, q)
    with pytest.raises(InvalidArgumentError):
        projected_mixture("spin_mix", 1, SETUP, p, 0.5)


def test_half_projections_match_closed_forms(rng):
    for _ in range(30):
        setup = random_setup(rng)
        p = parallel_momentum(rng, setup)
        for s in (1, 2):
            mixed = projected_mixture("parity_mix", s, setup, p, 0.5)
            assert maxabs(mixed.matrix - parity_projection_closed_form(s, setup, p)) < 1e-9
            assert np.linalg.matrix_rank(mixed.matrix, tol=1e-9) == 2
        for sg in Sign:
            mixed = projected_mixture("helicity_mix", sg, setup, p, 0.5)
            assert maxabs(mixed.matrix - helicity_projection_closed_form(sg, p)) < 1e-9


def test_helicity_closed_form_any_direction(rng):
    for _ in range(20):
        setup = random_setup(rng)
        p = sampling.momentum(rng)
        for sg in Sign:
            mixed = projected_mixture("helicity_mix", sg, setup, p, 0.5)
            assert maxabs(mixed.matrix - helicity_projection_closed_form(sg, p)) < 1e-9


def test_half_projection_concurrence(rng):
    for _ in range(30):
        setup = random_setup(rng)
        p = parallel_momentum(rng, setup)
        for s in (1, 2):
            assert concurrence_rank2(projected_mixture("parity_mix", s, setup, p, 0.5)).value < 1e-9
        for sg in Sign:
            assert concurrence_rank2(projected_mixture("helicity_mix", sg, setup, p, 0.5)).value < 1e-9


def test_projection_traces_invariant_along_field(rng):
    for kind, fixed in (("parity_mix", 1), ("parity_mix", 2), ("helicity_mix", Sign.PLUS), ("helicity_mix", Sign.MINUS)):
        rest = projected_mixture(kind, fixed, SETUP, FourMomentum(1.0), 0.5)
        r0 = rest.matrix @ spin_flip(rest)
        ref = (np.trace(r0), np.trace(r0 @ r0))
        for eta in np.linspace(0, 3, 7):
            moved = projected_mixture(kind, fixed, SETUP, FourMomentum.from_rapidity(1.0, eta), 0.5)
            r = moved.matrix @ spin_flip(moved)
            assert abs(np.trace(r) - ref[0]) < 1e-9
            assert abs(np.trace(r @ r) - ref[1]) < 1e-9
