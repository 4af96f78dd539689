"""Small dense kernels: Faddeev-LeVerrier characteristic polynomial and a quartic solver."""
from __future__ import annotations

import cmath

import numpy as np

__all__ = ["charpoly", "cubic_roots", "polish_roots", "quartic_roots", "small_eigenvalues"]


def charpoly(a: np.ndarray) -> np.ndarray:
    """Coefficients [1, c1, ..., cn] of det(x I - A) by the Faddeev-LeVerrier recursion."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.zeros_like(a)
    eye = np.eye(n)
    for k in range(1, n + 1):
        m = a @ m + coeffs[k - 1] * eye
        coeffs[k] = -np.trace(a @ m) / k
    return coeffs


def _cbrt(z: complex) -> complex:
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3)


def cubic_roots(a: complex, b: complex, c: complex) -> list[complex]:
    """Roots of z^3 + a z^2 + b z + c (Cardano, complex arithmetic)."""
    p = b - a * a / 3
    q = 2 * a**3 / 27 - a * b / 3 + c
    disc = cmath.sqrt(q * q / 4 + p**3 / 27)
    # larger-magnitude branch avoids cancellation in u
    w = -q / 2 + disc if abs(-q / 2 + disc) >= abs(-q / 2 - disc) else -q / 2 - disc
    u = _cbrt(w)
    omega = complex(-0.5, np.sqrt(3) / 2)
    roots = []
    for k in range(3):
        uk = u * omega**k
        t = uk - p / (3 * uk) if uk != 0 else 0j
        roots.append(t - a / 3)
    return roots


def _polyval(coeffs, x):
    acc = 0j
    for c in coeffs:
        acc = acc * x + c
    return acc


def polish_roots(coeffs, roots, steps: int = 1) -> list[complex]:
    """Newton refinement of polynomial roots; a step is kept only if it lowers |f|.

    Near multiple roots f and f' are both roundoff, so raw Newton steps there
    are noise; the acceptance test rejects them.
    """
    coeffs = [complex(c) for c in coeffs]
    deriv = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    out = []
    for x in roots:
        for _ in range(steps):
            fx, d = _polyval(coeffs, x), _polyval(deriv, x)
            if d == 0:
                break
            trial = x - fx / d
            if abs(_polyval(coeffs, trial)) >= abs(fx):
                break
            x = trial
        out.append(x)
    return out


def quartic_roots(coeffs) -> list[complex]:
    """Roots of c0 x^4 + c1 x^3 + c2 x^2 + c3 x + c4 (Ferrari), Newton-polished once."""
    c0, c1, c2, c3, c4 = (complex(c) for c in coeffs)
    if c0 == 0:
        raise ValueError("leading coefficient must be non-zero")
    a, b, c, d = c1 / c0, c2 / c0, c3 / c0, c4 / c0
    p = b - 3 * a * a / 8
    q = c - a * b / 2 + a**3 / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a**4 / 256
    shift = -a / 4

    if abs(q) <= 1e-14 * max(1.0, abs(p), abs(r)) ** 1.5:
        disc = cmath.sqrt(p * p - 4 * r)
        ys = []
        for y2 in ((-p + disc) / 2, (-p - disc) / 2):
            s = cmath.sqrt(y2)
            ys += [s, -s]
    else:
        # resolvent cubic 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0, largest |m| for stability
        m = max(cubic_roots(p, p * p / 4 - r, -q * q / 8), key=abs)
        s2m = cmath.sqrt(2 * m)
        ys = []
        for sign in (1, -1):
            inner = cmath.sqrt(-(2 * p + 2 * m + sign * np.sqrt(2) * q / cmath.sqrt(m)))
            ys += [(sign * s2m + inner) / 2, (sign * s2m - inner) / 2]
    roots = [y + shift for y in ys]
    return polish_roots([1, a, b, c, d], roots)


def small_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of a 4x4 matrix from its characteristic polynomial."""
    a = np.asarray(a)
    if a.shape != (4, 4):
        raise ValueError("small_eigenvalues expects a 4x4 matrix")
    return np.array(quartic_roots(charpoly(a)))
