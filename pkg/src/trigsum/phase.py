"""Conjugate phase-pair evaluation of the series.

Writing p = cos(phi) + i sin(phi) and q for its conjugate (so pq = 1), a
power series Delta applied at p and q recovers the two trigonometric
series at once:

    cosine sum = (Delta(p) + Delta(q)) / 2
    sine sum   = (Delta(p) - Delta(q)) / (2i)

For the binomial row this collapses further to (1+p)**n, giving a second,
independent evaluation path for integer exponents.  Complex arithmetic is
kept in-module as explicit real pairs so every rounding site sits under
the cancellation checks below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ConjugacyError

#: Relative bound on the imaginary residue of a conjugate combination.
RESIDUE_BOUND = 1e-12


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __add__(self, other: "ComplexValue") -> "ComplexValue":
        return ComplexValue(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexValue") -> "ComplexValue":
        return ComplexValue(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexValue") -> "ComplexValue":
        return ComplexValue(self.re * other.re - self.im * other.im,
                            self.im * other.re + self.re * other.im)

    def conj(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def abs2(self) -> float:
        return self.re * self.re + self.im * self.im


ONE = ComplexValue(1.0, 0.0)


@dataclass(frozen=True)
class PhasePair:
    p: ComplexValue
    q: ComplexValue
    phi: float


def make_phase_pair(phi: float) -> PhasePair:
    """Unit-circle point at angle phi together with its conjugate."""
    p = ComplexValue(math.cos(phi), math.sin(phi))
    return PhasePair(p, p.conj(), phi)


def half_angle_point(phi: float) -> ComplexValue:
    """Principal square root of the phase point, valid for phi in (-pi, pi)."""
    return ComplexValue(math.cos(0.5 * phi), math.sin(0.5 * phi))


def pow_int(z: ComplexValue, exponent: int) -> ComplexValue:
    """z raised to a nonnegative integer power by binary exponentiation."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    result = ONE
    base = z
    e = exponent
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def _horner(coeffs: list[float], z: ComplexValue) -> ComplexValue:
    acc = ComplexValue(coeffs[-1], 0.0)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + ComplexValue(c, 0.0)
    return acc


def series_at_phase(coeffs, phi: float) -> tuple[float, float]:
    """Cosine and sine sums of a finite coefficient row via the phase pair.

    Evaluates the polynomial at p and q by Horner accumulation and takes
    the conjugate combinations.  The imaginary part of the cosine
    combination must cancel; if its residue exceeds RESIDUE_BOUND times
    the coefficient mass the evaluation itself is broken and a
    ConjugacyError is raised.
    """
    coeffs = [float(c) for c in coeffs]
    if not coeffs:
        raise ValueError("need at least one coefficient")
    if not all(math.isfinite(c) for c in coeffs):
        raise ValueError("coefficients must be finite")
    pair = make_phase_pair(phi)
    dp = _horner(coeffs, pair.p)
    dq = _horner(coeffs, pair.q)
    scale = sum(abs(c) for c in coeffs)
    cos_residue = abs(dp.im + dq.im) / 2.0
    sin_residue = abs(dp.re - dq.re) / 2.0
    if max(cos_residue, sin_residue) > RESIDUE_BOUND * scale:
        raise ConjugacyError(
            f"imaginary residue {max(cos_residue, sin_residue):.3e} exceeds "
            f"{RESIDUE_BOUND:.0e} * {scale:.3e}")
    cos_sum = (dp.re + dq.re) / 2.0
    sin_sum = (dp.im - dq.im) / 2.0
    return cos_sum, sin_sum


def binomial_phase_power(n: int, phi: float) -> tuple[float, float]:
    """(cosine sum, sine sum) of the full binomial row as (1 + p)**n.

    The real and imaginary parts of (1+p)**n are exactly the two series
    sums by conjugate symmetry.  Only integer n in 0..64 is accepted.
    """
    if not float(n).is_integer():
        raise ValueError("n must be an integer")
    n = int(n)
    if not 0 <= n <= 64:
        raise ValueError("n must be in 0..64")
    pair = make_phase_pair(phi)
    z = pow_int(ComplexValue(1.0 + pair.p.re, pair.p.im), n)
    return z.re, z.im
