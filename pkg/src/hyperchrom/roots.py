"""Chromatic roots and the root-radius bounds ``7.04 e t D`` and ``8 e t D``."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .chromatic import chromatic_polynomial_auto
from .hypercore import Hypergraph
from .polynomial import IntPolynomial

DEFAULT_TOL = 1e-8
MAX_ITER = 1000
BOUND_SLACK = 1e-9
C_CONSTANT = "7.04"


class RootFindingError(ArithmeticError):
    """Simultaneous iteration did not reach the residual tolerance."""


@dataclass(frozen=True)
class Root:
    value: complex
    residual: float


def _working_bits(coeffs) -> int:
    top = max(abs(a).bit_length() for a in coeffs)
    return 128 + 2 * top


def relative_residual(coeffs, z) -> mpmath.mpf:
    """``|P(z)| / (max |a_i| * max(1, |z|)^deg)``."""
    val = mpmath.polyval(list(reversed(coeffs)), z)
    scale = max(abs(a) for a in coeffs) * max(mpmath.mpf(1), abs(z)) ** (len(coeffs) - 1)
    return abs(val) / scale


def _aberth(coeffs, bits, max_iter):
    """Roots of the integer polynomial ``coeffs`` (constant first, nonzero constant term)."""
    d = len(coeffs) - 1
    lead = mpmath.mpf(coeffs[-1])
    a = [mpmath.mpf(c) / lead for c in coeffs]  # monic, constant first
    high = list(reversed(a))
    deriv = [high[i] * (d - i) for i in range(d)]
    z = _starting_points(coeffs, a, d)
    eps = mpmath.mpf(2) ** (-(bits // 2))
    scale = max(abs(c) for c in a)
    for _ in range(max_iter):
        done = True
        for i in range(d):
            zi = z[i]
            p = mpmath.polyval(high, zi)
            if abs(p) <= eps * scale * max(1, abs(zi)) ** d:
                continue
            dp = mpmath.polyval(deriv, zi)
            ratio = p / dp if dp != 0 else p
            repel = mpmath.fsum(1 / (zi - z[j]) for j in range(d) if j != i and zi != z[j])
            step = ratio / (1 - ratio * repel)
            z[i] = zi - step
            if abs(step) > eps * max(1, abs(zi)):
                done = False
        if done:
            return z, True
    return z, False


def _starting_points(coeffs, a, d):
    """Companion-matrix estimates when the coefficients fit a double, else a circle."""
    if max(abs(c) for c in coeffs).bit_length() < 900:
        est = np.roots([float(c) for c in reversed(coeffs)])
        if len(est) == d and np.all(np.isfinite(est)):
            # nudge coincident estimates apart so the repulsion term stays finite
            return [mpmath.mpc(complex(w)) + mpmath.mpc(0, 1e-7 * k) for k, w in enumerate(est)]
    radius = 2 * max(abs(a[i]) ** (mpmath.mpf(1) / (d - i)) for i in range(d))
    return [radius * mpmath.expj(2 * mpmath.pi * k / d + mpmath.mpf("0.4")) for k in range(d)]


def _newton_polish(coeffs, z, steps=3):
    high = [mpmath.mpf(c) for c in reversed(coeffs)]
    d = len(high) - 1
    deriv = [high[i] * (d - i) for i in range(d)]
    for _ in range(steps):
        dp = mpmath.polyval(deriv, z)
        if dp == 0:
            break
        nz = z - mpmath.polyval(high, z) / dp
        if relative_residual(coeffs, nz) > relative_residual(coeffs, z):
            break
        z = nz
    return z


def find_roots(P: IntPolynomial, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> list[Root]:
    """All complex roots of P with multiplicity.

    Zero roots are split off exactly first; the rest come from an Aberth
    iteration in binary precision well above the coefficient size,
    followed by Newton polishing.  Raises :class:`RootFindingError` if any
    root misses ``tol`` in relative residual.
    """
    coeffs = list(P.coeffs)
    if len(coeffs) < 2:
        raise ValueError("root finding needs degree >= 1")
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    rest = coeffs[zeros:]
    out = [Root(0j, 0.0) for _ in range(zeros)]
    if len(rest) == 1:
        return out
    bits = _working_bits(rest)
    with mpmath.workprec(bits):
        z, converged = _aberth(rest, bits, max_iter)
        z = [_newton_polish(rest, zi) for zi in z]
        found = []
        worst = mpmath.mpf(0)
        for zi in z:
            res = relative_residual(coeffs, zi)
            worst = max(worst, res)
            found.append(Root(complex(zi), float(res)))
    if worst > tol:
        state = "converged" if converged else f"stopped after {max_iter} iterations"
        raise RootFindingError(f"worst relative residual {float(worst):.3e} > {tol} ({state})")
    found.sort(key=lambda r: (round(r.value.real, 9), round(r.value.imag, 9)))
    return out + found


@dataclass(frozen=True)
class RootBoundReport:
    roots: tuple[Root, ...]
    max_modulus: float
    t: int
    D: int
    bound_8etD: float
    bound_cR: float
    ok_8etD: bool
    ok_cR: bool
    slack: float = BOUND_SLACK

    @property
    def ok(self) -> bool:
        return self.ok_8etD and self.ok_cR

    def to_dict(self) -> dict:
        return {
            "roots": [[r.value.real, r.value.imag, r.residual] for r in self.roots],
            "max_modulus": self.max_modulus,
            "t": self.t,
            "D": self.D,
            "bound_8etD": self.bound_8etD,
            "bound_cR": self.bound_cR,
            "c": float(C_CONSTANT),
            "slack": self.slack,
            "ok_8etD": self.ok_8etD,
            "ok_cR": self.ok_cR,
        }


def check_root_bound(H: Hypergraph, tol: float = DEFAULT_TOL, P: IntPolynomial | None = None) -> RootBoundReport:
    """Compare the largest chromatic root modulus with ``7.04 e t D`` and ``8 e t D``.

    For a hypergraph with mixed edge sizes t is the largest edge size.
    """
    if P is None:
        P = chromatic_polynomial_auto(H)
    t = H.uniformity or H.rank_t
    D = H.max_degree
    if P.degree >= 1:
        roots = tuple(find_roots(P, tol))
    else:
        roots = ()
    with mpmath.workdps(50):
        max_mod = max((mpmath.mpf(abs(r.value)) for r in roots), default=mpmath.mpf(0))
        etD = mpmath.e * t * D
        b8 = 8 * etD
        bc = mpmath.mpf(C_CONSTANT) * etD
        ok8 = max_mod <= b8 * (1 + mpmath.mpf(BOUND_SLACK))
        okc = max_mod <= bc * (1 + mpmath.mpf(BOUND_SLACK))
        return RootBoundReport(roots, float(max_mod), t, D, float(b8), float(bc), bool(ok8), bool(okc))
