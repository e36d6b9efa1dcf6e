"""Simultaneous complex root finding (Aberth-Ehrlich iteration)."""

from __future__ import annotations

import cmath
import random

from jacsys.algebra.unipoly import UniPoly
from jacsys.errors import RootFindingError

MAX_ITER = 1000
TOL = 1e-12


def _horner_with_derivative(coeffs, z):
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def roots_numeric(f: UniPoly, tolerance: float = TOL, seed: int = 0, max_iter: int = MAX_ITER):
    """All complex roots of ``f`` with multiplicity.

    The starting points lie on a circle of Cauchy-bound radius with a
    small random perturbation drawn from ``seed``; the result is therefore
    deterministic for a given seed.  Each returned root satisfies
    ``|f(z)| / (1 + max|coeff|) < tolerance`` after the iteration, otherwise
    :class:`RootFindingError` is raised carrying the last iterate.
    """
    coeffs = [complex(c) for c in f.coeffs]
    if not coeffs or all(c == 0 for c in coeffs):
        raise ValueError("zero polynomial has no finite root set")
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    radius = 1 + max(abs(c) for c in monic[:-1])
    rng = random.Random(seed)
    zs = []
    for k in range(deg):
        angle = 2 * cmath.pi * k / deg + 0.4 + rng.uniform(-0.1, 0.1)
        zs.append(radius * rng.uniform(0.5, 1.0) * cmath.exp(1j * angle))

    tol = tolerance
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    scale = 1 + max(abs(c) for c in coeffs)
    step_tol = min(tol, 1e-12) * 1e-2
    for _ in range(max_iter):
        biggest = 0.0
        for i in range(deg):
            z = zs[i]
            p, dp = _horner_with_derivative(monic, z)
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else complex(tol, tol)
            s = sum(1 / (z - zs[j]) for j in range(deg) if j != i and z != zs[j])
            denom = 1 - ratio * s
            w = ratio / denom if denom != 0 else ratio
            zs[i] = z - w
            biggest = max(biggest, abs(w) / (1 + abs(zs[i])))
        if biggest < step_tol:
            break
    zs = [_newton_polish(monic, z) for z in zs]
    bad = [z for z in zs if abs(f(z)) / scale >= tol]
    if bad:
        raise RootFindingError(
            f"root iteration did not converge for {len(bad)} of {deg} roots", partial=zs
        )
    return sorted(zs, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def _newton_polish(coeffs, z, steps: int = 3):
    for _ in range(steps):
        p, dp = _horner_with_derivative(coeffs, z)
        if dp == 0 or p == 0:
            break
        nz = z - p / dp
        if abs(nz - z) > 1e-6 * (1 + abs(z)):
            break
        z = nz
    return z
