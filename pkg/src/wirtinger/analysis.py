"""Sampling pipeline: convergence sweeps, tail-energy diagnostic, Fourier recovery.

Sampling a 2*pi-periodic C^1 function at t_j = 2*pi*j/n and feeding the
piecewise-linear machinery recovers the classical zero-mean inequality
(integral of f^2 <= integral of f'^2) in the n -> infinity limit, and the
block projections recover the Fourier coefficients of f.
"""

import math
import time
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .core import center_normalize, fsum
from .errors import InvalidSize, NonFinite, RangeError
from .inequality import check_inequality
from .pwl import basis_norm, energy_h1, energy_l2, inner_product
from .quadrature import adaptive_simpson
from .spectral import aligned_harmonics, block_energies, build_basis

TWO_PI = 2.0 * math.pi

PROBE_POINTS = 17
PERIODICITY_TOL = 1e-10
DERIVATIVE_PROBE_STEP = 1e-5
DERIVATIVE_PROBE_TOL = 1e-6


@dataclass(frozen=True)
class PeriodicFunction:
    """A 2*pi-periodic C^1 function with its derivative.

    Construction probes periodicity of both callables and checks the
    derivative against central differences at a few points, so mismatched
    user input fails fast instead of polluting convergence tables.
    """

    value: Callable[[float], float]
    derivative: Callable[[float], float]
    label: str = ""

    def __post_init__(self):
        probes = TWO_PI * (np.arange(PROBE_POINTS) + 0.31) / PROBE_POINTS
        for t in probes:
            v = self.value(t)
            if abs(self.value(t + TWO_PI) - v) > PERIODICITY_TOL:
                raise ValueError(f"value is not 2*pi-periodic at t={t:.6g}")
            d = self.derivative(t)
            if abs(self.derivative(t + TWO_PI) - d) > PERIODICITY_TOL:
                raise ValueError(f"derivative is not 2*pi-periodic at t={t:.6g}")
            h = DERIVATIVE_PROBE_STEP
            central = (self.value(t + h) - self.value(t - h)) / (2.0 * h)
            if abs(central - d) > DERIVATIVE_PROBE_TOL:
                raise ValueError(
                    f"derivative disagrees with central differences at t={t:.6g}: "
                    f"{d:.10g} vs {central:.10g}"
                )


def sample(f: PeriodicFunction, n: int) -> np.ndarray:
    """Sample vector x_j = f(2*pi*j/n), j = 1..n."""
    if n < 4:
        raise InvalidSize(f"need n >= 4, got {n}")
    out = np.fromiter((f.value(TWO_PI * j / n) for j in range(1, n + 1)), dtype=float, count=n)
    if not np.all(np.isfinite(out)):
        raise NonFinite(f"function {f.label!r} produced non-finite samples")
    return out


def tail_energy(f: PeriodicFunction, n: int) -> float:
    """(1/n) * sum over blocks k >= 2 of the squared projection of the samples.

    Vanishes as n grows exactly when f is a pure first harmonic; needs
    n >= 5 (odd) or n >= 6 (even) so that blocks with k >= 2 exist.
    """
    if n < 5 or (n % 2 == 0 and n < 6):
        raise InvalidSize(f"no blocks k >= 2 for n={n}")
    x = sample(f, n)
    energies = block_energies(x, build_basis(n))
    return math.fsum(e for k, e in energies.items() if k >= 2) / n


@dataclass(frozen=True)
class SweepRow:
    n: int
    mean: float
    energy_l2: float
    energy_h1: float
    slack: float
    tail_energy: float
    elapsed_ms: float


@dataclass(frozen=True)
class ConvergenceReport:
    label: str
    rows: tuple = field(default_factory=tuple)


def rayleigh_sweep(f: PeriodicFunction, ns) -> ConvergenceReport:
    """Convergence table for the centered interpolants of f over the given n.

    Per n: samples f, centers by the sample mean, and records both interpolant
    energies, the discrete slack of the normalized sample vector, and the
    tail energy.  Energies converge to the integrals of f^2 and f'^2.
    """
    rows = []
    for n in sorted(set(int(n) for n in ns)):
        start = time.perf_counter()
        x = sample(f, n)
        mean = fsum(x) / n
        centered = x - mean
        e2 = energy_l2(centered)
        h1 = energy_h1(centered)
        slack = check_inequality(center_normalize(x)).slack
        tail = tail_energy(f, n) if n >= 5 else 0.0
        elapsed = (time.perf_counter() - start) * 1e3
        rows.append(
            SweepRow(
                n=n,
                mean=mean,
                energy_l2=e2,
                energy_h1=h1,
                slack=slack,
                tail_energy=tail,
                elapsed_ms=elapsed,
            )
        )
    return ConvergenceReport(label=f.label, rows=tuple(rows))


@dataclass(frozen=True)
class FourierTable:
    """Coefficients (j, a_j, b_j) for j = 1..jmax, plus how they were obtained."""

    coefficients: tuple
    method: str  # "discrete-projection" or "quadrature"

    @property
    def jmax(self) -> int:
        return max(j for j, _, _ in self.coefficients)

    def coefficient(self, j: int) -> tuple[float, float]:
        for jj, a, b in self.coefficients:
            if jj == j:
                return a, b
        raise RangeError(f"no coefficient j={j} in table (jmax={self.jmax})")


def fourier_discrete(f: PeriodicFunction, n: int, jmax: int) -> FourierTable:
    """Fourier coefficients of f from interpolant inner products at grid size n.

    For each harmonic j the samples of cos(jt), sin(jt) span the invariant
    plane H_j; projecting the interpolant of the samples of f onto the
    interpolants of those reference vectors and dividing by their common
    squared norm gives

        a_j = 3 <L_X, L_{cos j}> / (pi * (2 + cos(2*pi*j/n)))

    and the same for b_j with sin.  Requires n >= 2*jmax + 2 so the first
    jmax harmonics occupy distinct blocks (aliasing guard).
    """
    if jmax < 1:
        raise InvalidSize(f"need jmax >= 1, got {jmax}")
    if n < 2 * jmax + 2:
        raise InvalidSize(f"need n >= 2*jmax+2 = {2 * jmax + 2} to resolve jmax={jmax}, got n={n}")
    x = sample(f, n)
    coeffs = []
    for j in range(1, jmax + 1):
        cos_ref, sin_ref = aligned_harmonics(n, j)
        scale = (2.0 / n) / basis_norm(n, j)
        coeffs.append((j, scale * inner_product(x, cos_ref), scale * inner_product(x, sin_ref)))
    return FourierTable(coefficients=tuple(coeffs), method="discrete-projection")


def fourier_quadrature(f: PeriodicFunction, jmax: int, tol: float = 1e-10) -> FourierTable:
    """Fourier coefficients a_j = (1/pi) * integral of f(t) cos(jt),
    b_j = (1/pi) * integral of f(t) sin(jt), by adaptive quadrature."""
    if jmax < 1:
        raise InvalidSize(f"need jmax >= 1, got {jmax}")
    coeffs = []
    for j in range(1, jmax + 1):
        a = adaptive_simpson(lambda t: f.value(t) * math.cos(j * t), 0.0, TWO_PI, tol=tol) / math.pi
        b = adaptive_simpson(lambda t: f.value(t) * math.sin(j * t), 0.0, TWO_PI, tol=tol) / math.pi
        coeffs.append((j, a, b))
    return FourierTable(coefficients=tuple(coeffs), method="quadrature")


def partial_sum(table: FourierTable, order: int) -> PeriodicFunction:
    """Trigonometric polynomial summing the table's harmonics up to `order`."""
    if not 0 <= order <= table.jmax:
        raise RangeError(f"order must lie in 0..{table.jmax}, got {order}")
    kept = [(j, a, b) for j, a, b in table.coefficients if j <= order]
    js = np.array([j for j, _, _ in kept], dtype=float)
    a = np.array([a for _, a, _ in kept])
    b = np.array([b for _, _, b in kept])

    def value(t: float) -> float:
        return float(np.dot(a, np.cos(js * t)) + np.dot(b, np.sin(js * t)))

    def derivative(t: float) -> float:
        return float(np.dot(js * b, np.cos(js * t)) - np.dot(js * a, np.sin(js * t)))

    return PeriodicFunction(value=value, derivative=derivative, label=f"partial_sum(J={order})")


def harmonic_mix(coefficients) -> PeriodicFunction:
    """Trigonometric polynomial from a flat list a1, b1, a2, b2, ..."""
    flat = [float(c) for c in coefficients]
    if not flat:
        raise ValueError("need at least one coefficient")
    if len(flat) % 2 == 1:
        flat.append(0.0)
    a = np.array(flat[0::2])
    b = np.array(flat[1::2])
    js = np.arange(1, a.size + 1, dtype=float)

    def value(t: float) -> float:
        return float(np.dot(a, np.cos(js * t)) + np.dot(b, np.sin(js * t)))

    def derivative(t: float) -> float:
        return float(np.dot(js * b, np.cos(js * t)) - np.dot(js * a, np.sin(js * t)))

    label = "harmonics(" + ",".join(f"{c:g}" for c in flat) + ")"
    return PeriodicFunction(value=value, derivative=derivative, label=label)


def _cubic_odd() -> PeriodicFunction:
    # t(2*pi - t)(pi - t)/pi^3 on [0, 2*pi]: zero-mean, C^1 across the seam
    # (the slope is 2*pi^2/pi^3 at both ends), odd about t = pi.
    scale = math.pi**3

    def value(t: float) -> float:
        u = t % TWO_PI
        return u * (TWO_PI - u) * (math.pi - u) / scale

    def derivative(t: float) -> float:
        u = t % TWO_PI
        return (2.0 * math.pi**2 - 6.0 * math.pi * u + 3.0 * u * u) / scale

    return PeriodicFunction(value=value, derivative=derivative, label="cubicodd")


def named_function(name: str) -> PeriodicFunction:
    """Look up one of the bundled test functions by name."""
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown function {name!r}; available: {', '.join(sorted(_REGISTRY))}")


_REGISTRY = {
    "sin1": lambda: PeriodicFunction(math.sin, math.cos, label="sin1"),
    "cos1": lambda: PeriodicFunction(math.cos, lambda t: -math.sin(t), label="cos1"),
    "sin2": lambda: PeriodicFunction(
        lambda t: math.sin(2.0 * t), lambda t: 2.0 * math.cos(2.0 * t), label="sin2"
    ),
    "mix13": lambda: PeriodicFunction(
        lambda t: math.sin(t) + 0.5 * math.cos(3.0 * t),
        lambda t: math.cos(t) - 1.5 * math.sin(3.0 * t),
        label="mix13",
    ),
    "cubicodd": _cubic_odd,
}

FUNCTION_NAMES = tuple(sorted(_REGISTRY))
