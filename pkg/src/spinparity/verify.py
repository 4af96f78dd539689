"""Registry of numerical invariants run by ``spinparity verify``.

Each check returns the largest deviation it measured; a check passes when
that deviation is finite and within its tolerance. Every check draws from its
own generator seeded by ``(seed, index)``, so the report depends on the seed
only.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import sampling
from .errors import SpinParityError
from .clifford import I4, METRIC, dirac_operator, flip_operator, free_hamiltonian, gamma, kron, pauli
from .concurrence import (
    concurrence_from_bloch,
    concurrence_pure,
    concurrence_rank2,
    concurrence_wootters,
    entanglement_entropy,
    eof_from_concurrence,
    spin_flip,
)
from .density import (
    Convention,
    SpinParityDensity,
    bell_density,
    bloch_decompose,
    density_from_bispinor,
    mix,
    rest_projector,
    trace_power,
)
from .lorentz import (
    BoostParameters,
    boost_operator,
    rapidity_of,
    rotation_operator,
    spacetime_boost,
    spinor_inverse,
)
from .magnetic import (
    MagneticSetup,
    boosted_magnetic_density,
    magnetic_eigenvalue,
    magnetic_hamiltonian,
    magnetic_rest_density,
    projected_mixture,
)
from .spinors import FourMomentum, Sign, SpinorLabel, closure_closed_form, closure_matrix, dirac_adjoint, free_bispinor, rest_bispinor, slash

LABELS = [SpinorLabel(sg, s) for sg in (Sign.PLUS, Sign.MINUS) for s in (1, 2)]


@dataclass
class Context:
    rng: np.random.Generator
    samples: int
    perturb: float = 0.0

    def boost(self, t) -> np.ndarray:
        """Boost operator, optionally corrupted by the fault-injection noise."""
        s = boost_operator(t)
        if self.perturb:
            s = s + self.perturb * (self.rng.normal(size=(4, 4)) + 1j * self.rng.normal(size=(4, 4)))
        return s


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: float


@dataclass
class RunReport:
    seed: int
    samples: int
    perturb: float
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def to_json(self) -> str:
        return json.dumps(
            {
                "seed": self.seed,
                "samples": self.samples,
                "perturb": self.perturb,
                "passed": self.passed,
                "checks": [asdict(r) for r in self.results],
            },
            indent=2,
        )

    def table(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = [f"{'check':<{width}}  status  {'residual':>10}  {'tolerance':>9}"]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.name:<{width}}  {status:<6}  {r.residual:10.3e}  {r.tolerance:9.1e}")
        lines.append(f"{sum(r.passed for r in self.results)}/{len(self.results)} checks passed")
        return "\n".join(lines)


CHECKS: list[tuple[str, float, Callable[[Context], float]]] = []


def check(name: str, tolerance: float):
    def register(fn):
        CHECKS.append((name, tolerance, fn))
        return fn

    return register


def _maxabs(a) -> float:
    return float(np.max(np.abs(a)))


# -- Clifford algebra -----------------------------------------------------


@check("clifford.gamma_anticommutation", 1e-12)
def _(ctx):
    return max(
        _maxabs(gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu) - 2 * METRIC[mu, nu] * I4)
        for mu in range(4)
        for nu in range(4)
    )


@check("clifford.alpha_beta_relations", 1e-12)
def _(ctx):
    alpha = [dirac_operator("alpha", j) for j in (1, 2, 3)]
    beta = gamma(0)
    errs = [_maxabs(beta @ beta - I4)]
    for i in range(3):
        errs.append(_maxabs(alpha[i] @ beta + beta @ alpha[i]))
        for j in range(3):
            errs.append(_maxabs(alpha[i] @ alpha[j] + alpha[j] @ alpha[i] - 2 * (i == j) * I4))
    return max(errs)


@check("clifford.gamma2_and_flip", 1e-12)
def _(ctx):
    g2 = gamma(2)
    flip = -1j * g2
    return max(
        _maxabs(g2 @ g2 + I4),
        _maxabs(flip.imag),
        _maxabs(flip - kron(pauli(2), pauli(2))),
        _maxabs(flip - flip_operator()),
    )


@check("clifford.gamma5", 1e-12)
def _(ctx):
    g5 = gamma(5)
    errs = [_maxabs(g5 - kron(pauli(1), np.eye(2)))]
    errs += [_maxabs(g5 @ gamma(mu) + gamma(mu) @ g5) for mu in range(4)]
    return max(errs)


@check("clifford.free_hamiltonian_spectrum", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        h = free_hamiltonian(p)
        evals = np.linalg.eigvalsh(h)
        errs += [_maxabs(h - h.conj().T), abs(np.trace(h)), _maxabs(evals - [-p.e, -p.e, p.e, p.e]) / p.e]
    return max(errs)


# -- spinors ----------------------------------------------------------------


@check("spinors.dirac_equation", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        khat = sampling.unit(ctx.rng)
        for lab in LABELS:
            u = free_bispinor(lab, p, khat)
            residual = (slash(p) - int(lab.sign) * p.m * I4) @ u
            errs.append(np.linalg.norm(residual) / p.e)
    return max(errs)


@check("spinors.normalization", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        minus_p = FourMomentum(p.m, tuple(-c for c in p.p))
        for sg in (Sign.PLUS, Sign.MINUS):
            for s in (1, 2):
                u_s = free_bispinor(SpinorLabel(sg, s), p)
                for r in (1, 2):
                    u_r = free_bispinor(SpinorLabel(sg, r), p)
                    errs.append(abs(u_s.conj() @ u_r - (p.e / p.m) * (s == r)) / (p.e / p.m))
                    errs.append(abs(dirac_adjoint(u_s) @ u_r - int(sg) * (s == r)))
                # the opposite branch at -p shares the helicity axis up to sign
                other = free_bispinor(SpinorLabel(Sign(-sg), s), minus_p, p.direction)
                same = free_bispinor(SpinorLabel(sg, s), p, p.direction)
                errs.append(abs(same.conj() @ other) / (p.e / p.m))
    return max(errs)


@check("spinors.closure", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        scale = p.e / p.m
        for sg in (Sign.PLUS, Sign.MINUS):
            c = closure_matrix(sg, p)
            errs.append(_maxabs(c - closure_closed_form(sg, p)) / scale)
            errs.append(_maxabs(c @ c - c) / scale**2)
        errs.append(_maxabs(closure_matrix(Sign.PLUS, p) + closure_matrix(Sign.MINUS, p) - I4) / scale)
    return max(errs)


# -- Lorentz ----------------------------------------------------------------


@check("lorentz.boost_forms", 1e-12)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        s = boost_operator(p)
        pslash_g0 = slash(p) @ gamma(0)
        closed = (pslash_g0 + p.m * I4) / np.sqrt(2 * p.m * (p.m + p.e))
        errs.append(_maxabs(s - closed) / max(1.0, _maxabs(s)))
    return max(errs)


@check("lorentz.consistency_relation", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        s = ctx.boost(p)
        s_inv = np.linalg.inv(s)
        lam = spacetime_boost(p)
        for mu in range(4):
            target = sum(lam[mu, z] * gamma(z) for z in range(4))
            errs.append(_maxabs(s_inv @ gamma(mu) @ s - target) / np.cosh(rapidity_of(p).rapidity))
    return max(errs)


@check("lorentz.boost_of_rest_states", 1e-12)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        khat = sampling.unit(ctx.rng)
        s = ctx.boost(p)
        for lab in LABELS:
            ref = free_bispinor(lab, p, khat)
            errs.append(_maxabs(s @ rest_bispinor(lab, khat) - ref) / max(1.0, _maxabs(ref)))
    return max(errs)


@check("lorentz.group_identities", 1e-12)
def _(ctx):
    errs = []
    g0 = gamma(0)
    for _ in range(ctx.samples):
        s = ctx.boost(sampling.boost(ctx.rng))
        scale = _maxabs(s) ** 2
        errs.append(_maxabs(s - s.conj().T) / scale)
        errs.append(_maxabs(spinor_inverse(s) - np.linalg.inv(s)) / scale)
        errs.append(abs(np.linalg.det(s) - 1) / scale)
        r = rotation_operator(sampling.rotation(ctx.rng))
        errs.append(_maxabs(r.conj().T @ r - I4))
        errs.append(_maxabs(r @ g0 - g0 @ r))
        errs.append(_maxabs(spinor_inverse(r) - r.conj().T))
    return max(errs)


@check("lorentz.flip_intertwining", 1e-12)
def _(ctx):
    y = flip_operator()
    errs = []
    for _ in range(ctx.samples):
        for s in (ctx.boost(sampling.boost(ctx.rng)), rotation_operator(sampling.rotation(ctx.rng))):
            scale = max(1.0, _maxabs(s))
            errs.append(_maxabs(y @ s - s.conj() @ y) / scale)
            errs.append(_maxabs(y @ s.conj().T - s.T @ y) / scale)
    return max(errs)


@check("lorentz.boost_composition", 1e-10)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        n = tuple(sampling.unit(ctx.rng))
        e1, e2 = ctx.rng.uniform(0, 1.5, size=2)
        whole = boost_operator(BoostParameters(e1 + e2, n))
        parts = boost_operator(BoostParameters(e1, n)) @ boost_operator(BoostParameters(e2, n))
        errs.append(_maxabs(whole - parts) / _maxabs(whole))
    return max(errs)


# -- densities --------------------------------------------------------------


def _rest_covariant(ctx) -> SpinParityDensity:
    lab = LABELS[ctx.rng.integers(4)]
    return SpinParityDensity(int(lab.sign) * rest_projector(lab.sign, lab.s, sampling.unit(ctx.rng)) @ gamma(0), "covariant")


@check("density.unipotent_covariant_traces", 1e-10)
def _(ctx):
    errs = []
    for k in range(2 * ctx.samples):
        rho = _rest_covariant(ctx)
        if k % 2:
            s = rotation_operator(sampling.rotation(ctx.rng))
        else:
            s = ctx.boost(sampling.boost(ctx.rng))
        boosted = s @ rho.matrix @ spinor_inverse(s)
        for n in (1, 2, 3, 4):
            errs.append(abs(np.trace(np.linalg.matrix_power(boosted, n)) - 1))
    return max(errs)


@check("density.hermitian_purity_counterexample", 1e-9)
def _(ctx):
    p = FourMomentum(1.0, (0.0, 0.0, 0.75))
    terms = [(0.5, SpinParityDensity(rest_projector(sg, 1, (0, 0, 1)), "hermitian")) for sg in (1, -1)]
    rest = mix(terms)
    boosted = rest.transformed(p)
    return max(abs(trace_power(rest, 2) - 0.5), abs(trace_power(boosted, 2) - 0.68))


@check("density.bloch_roundtrip", 1e-12)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        rho = _rest_covariant(ctx).transformed(sampling.transformation(ctx.rng, max_ratio=3.0))
        errs.append(_maxabs(bloch_decompose(rho).reconstruct() - rho.matrix) / max(1.0, _maxabs(rho.matrix)))
        herm = sampling.rank2_state(ctx.rng)
        errs.append(_maxabs(bloch_decompose(herm).reconstruct() - herm.matrix))
    return max(errs)


@check("density.rest_conventions_agree", 1e-12)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        khat = sampling.unit(ctx.rng)
        for lab in LABELS:
            u = rest_bispinor(lab, khat)
            proj = rest_projector(lab.sign, lab.s, khat)
            for conv in Convention:
                errs.append(_maxabs(density_from_bispinor(u, lab.sign, conv).matrix - proj))
    return max(errs)


# -- concurrence --------------------------------------------------------------


def _flip_traces(ctx, convention):
    for _ in range(ctx.samples):
        p = sampling.momentum(ctx.rng)
        lab = LABELS[ctx.rng.integers(4)]
        u = free_bispinor(lab, p, sampling.unit(ctx.rng))
        rho = density_from_bispinor(u, lab.sign, convention, p)
        yield np.trace(spin_flip(rho)).real, np.trace(rho.matrix).real


@check("concurrence.flip_trace_hermitian", 1e-10)
def _(ctx):
    return max(abs(t_flip - t) for t_flip, t in _flip_traces(ctx, "hermitian"))


@check("concurrence.flip_trace_covariant", 1e-10)
def _(ctx):
    # (-i g2) g0 (-i g2) = -g0, so the covariant flip has trace -Tr[rhobar]
    return max(abs(t_flip + t) for t_flip, t in _flip_traces(ctx, "covariant"))


def _covariant_family_samples(ctx):
    setup = MagneticSetup(1.0, 0.3, tuple(sampling.unit(ctx.rng)))
    lab = LABELS[ctx.rng.integers(4)]
    p0 = FourMomentum(1.0, (0.0, 0.0, 0.0))
    u = free_bispinor(lab, sampling.momentum(ctx.rng), sampling.unit(ctx.rng))
    yield "pure", density_from_bispinor(u, lab.sign, "covariant")
    yield "pure", magnetic_rest_density(lab.sign, lab.s, setup, "covariant")
    yield "rank2", projected_mixture("parity_mix", lab.s, setup, p0, ctx.rng.uniform(0.05, 0.95))
    yield "rank2", projected_mixture("helicity_mix", lab.sign, setup, p0, ctx.rng.uniform(0.05, 0.95))
    # unrelated eigenstates: the flip traces are nonzero here, unlike the product families above
    terms = []
    for w, sg, s in ((0.3, Sign.PLUS, 1), (0.7, Sign.MINUS, 2)):
        v = free_bispinor(SpinorLabel(sg, s), sampling.momentum(ctx.rng, max_ratio=2.0), sampling.unit(ctx.rng))
        terms.append((w, density_from_bispinor(v, sg, "covariant")))
    yield "rank2", mix(terms)


def _flip_traces_of(rho: SpinParityDensity) -> np.ndarray:
    r = rho.matrix @ spin_flip(rho)
    return np.array([np.trace(r).real, np.trace(r @ r).real])


def _squared(kind: str, rho: SpinParityDensity) -> float:
    c = concurrence_pure(rho) if kind == "pure" else concurrence_rank2(rho)
    return c.value**2


@check("concurrence.covariant_invariance", 1e-9)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        for kind, rho in _covariant_family_samples(ctx):
            moved = rho.transformed(sampling.transformation(ctx.rng))
            errs.append(abs(_squared(kind, moved) - _squared(kind, rho)))
            errs.append(_maxabs(_flip_traces_of(moved) - _flip_traces_of(rho)))
    return max(errs)


@check("concurrence.hermitian_boost_witness", 1e-9)
def _(ctx):
    p = FourMomentum(1.0, (0.0, 0.0, 0.75))
    khat = (1.0, 0.0, 0.0)
    lab = SpinorLabel(Sign.PLUS, 1)
    rest = density_from_bispinor(rest_bispinor(lab, khat), lab.sign, "hermitian")
    moving = density_from_bispinor(free_bispinor(lab, p, khat), lab.sign, "hermitian", p)
    return max(concurrence_pure(rest).value, abs(concurrence_pure(moving).value - p.magnitude / p.e))


@check("concurrence.rank2_matches_wootters", 1e-8)
def _(ctx):
    errs = []
    for _ in range(2 * ctx.samples):
        rho = sampling.rank2_state(ctx.rng)
        errs.append(abs(concurrence_rank2(rho).value - concurrence_wootters(rho).value))
    return max(errs)


@check("concurrence.bell_mixture", 1e-10)
def _(ctx):
    errs = []
    for q in np.linspace(0.0, 1.0, 21):
        rho = mix([(q, bell_density("phi+")), (1 - q, bell_density("phi-"))])
        errs.append(abs(concurrence_wootters(rho).value - abs(2 * q - 1)))
    return max(errs)


# -- magnetic example -----------------------------------------------------------


@check("magnetic.rest_eigenvalues", 1e-12)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        setup = MagneticSetup(ctx.rng.uniform(0.5, 2.0), ctx.rng.uniform(-1, 1), tuple(ctx.rng.normal(size=3)))
        h = magnetic_hamiltonian(setup)
        for lab in LABELS:
            for conv in Convention:
                rho = magnetic_rest_density(lab.sign, lab.s, setup, conv)
                errs.append(abs(np.trace(rho.matrix @ h) - magnetic_eigenvalue(lab.sign, lab.s, setup)))
    return max(errs)


@check("magnetic.covariant_bloch_norms", 1e-9)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        setup = MagneticSetup(1.0, 0.3, tuple(sampling.unit(ctx.rng)))
        p = FourMomentum(1.0, tuple(ctx.rng.uniform(-10, 10) * setup.bhat))
        lab = LABELS[ctx.rng.integers(4)]
        d = bloch_decompose(boosted_magnetic_density(lab.sign, lab.s, setup, p, "covariant"))
        errs += [abs(d.a_squared - 1), abs(d.b_squared - 1)]
    return max(errs)


@check("magnetic.projection_concurrence", 1e-9)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        setup = MagneticSetup(1.0, 0.3, tuple(sampling.unit(ctx.rng)))
        p = FourMomentum(1.0, tuple(ctx.rng.uniform(-10, 10) * setup.bhat))
        errs.append(concurrence_rank2(projected_mixture("parity_mix", int(ctx.rng.integers(1, 3)), setup, p, 0.5)).value)
        errs.append(concurrence_rank2(projected_mixture("helicity_mix", LABELS[ctx.rng.integers(4)].sign, setup, p, 0.5)).value)
        lab = LABELS[ctx.rng.integers(4)]
        any_p = sampling.momentum(ctx.rng)
        errs.append(concurrence_pure(boosted_magnetic_density(lab.sign, lab.s, setup, any_p, "covariant")).value)
    return max(errs)


# -- quantifier consistency -------------------------------------------------------


@check("quantifiers.pure_state_consistency", 1e-8)
def _(ctx):
    errs = []
    for _ in range(ctx.samples):
        rho = sampling.pure_state(ctx.rng)
        c = concurrence_pure(rho).value
        errs.append(abs(entanglement_entropy(rho) - eof_from_concurrence(c)))
        errs.append(abs(concurrence_from_bloch(bloch_decompose(rho)).value - c))
        errs.append(abs(concurrence_wootters(rho).value - c))
    return max(errs)


def run(seed: int = 0, samples: int = 100, perturb: float = 0.0) -> RunReport:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    report = RunReport(seed, samples, perturb)
    for index, (name, tol, fn) in enumerate(CHECKS):
        ctx = Context(np.random.default_rng([seed, index]), samples, perturb)
        try:
            residual = float(fn(ctx))
        except (ArithmeticError, SpinParityError, np.linalg.LinAlgError):  # fault injection can break preconditions
            residual = float("inf")
        passed = bool(np.isfinite(residual) and residual <= tol)
        report.results.append(CheckResult(name, passed, residual, tol))
    return report
