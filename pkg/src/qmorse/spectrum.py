"""Deformed Morse oscillator: potential, bound spectrum, and an independent
finite-difference eigenvalue check.

The working medium is a diatomic molecule in the two-exponential well

    V_q(x) = De * (exp(-2 xi x) - 2 q exp(-xi x)),    x = (r - re)/re,

with xi = alpha * re and deformation q in (0, 1]; q = 1 recovers the
standard Morse potential.  With the kinetic scale p = hbar^2 / (2 mu re^2)
and lam = sqrt(De / (xi^2 p)), the bound levels are

    E_n = -xi^2 p (lam q - n - 1/2)^2,    n = 0 .. n_max,

where n_max is the largest integer with lam q - n - 1/2 > 0.  States at the
dissociation threshold (E = 0 exactly) are not normalizable and are
excluded, so every retained level is strictly negative.

Default unit system: hbar = mu = re = 1 (so p = 1/2 and xi = alpha); all
scales stay explicit fields so physical units can be supplied instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import GridError, InvalidModelError, RangeError, SpectrumError

_EXP_MAX = 700.0  # exp argument ceiling well inside IEEE range


@dataclass(frozen=True)
class MorseModel:
    """Immutable parameter set of one deformed Morse oscillator.

    Construction fails unless the well supports at least one bound level,
    i.e. lam * q > 1/2.
    """

    De: float              # dissociation energy, > 0
    alpha: float           # inverse-length well-width parameter, > 0
    q: float               # deformation, in (0, 1]
    re: float = 1.0        # equilibrium bond length, > 0
    mu: float = 1.0        # reduced mass, > 0
    hbar: float = 1.0      # action scale, > 0

    def __post_init__(self) -> None:
        for name in ("De", "alpha", "re", "mu", "hbar"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise InvalidModelError(f"{name} must be finite and > 0, got {v!r}")
        if not (isinstance(self.q, (int, float)) and math.isfinite(self.q)
                and 0.0 < self.q <= 1.0):
            raise InvalidModelError(f"q must lie in (0, 1], got {self.q!r}")
        if self.lam * self.q - 0.5 <= 0.0:
            raise InvalidModelError(
                f"model supports no bound level: lam*q = {self.lam * self.q:.6g} "
                "<= 1/2 (increase De or q, or decrease alpha)")

    @property
    def xi(self) -> float:
        """Dimensionless width parameter alpha * re."""
        return self.alpha * self.re

    @property
    def p(self) -> float:
        """Kinetic energy scale hbar^2 / (2 mu re^2)."""
        return self.hbar**2 / (2.0 * self.mu * self.re**2)

    @property
    def lam(self) -> float:
        """Dimensionless well-depth parameter sqrt(De / (xi^2 p))."""
        return math.sqrt(self.De / (self.xi**2 * self.p))

    @property
    def ladder_top(self) -> float:
        """lam * q - 1/2; positive part counts the bound levels."""
        return self.lam * self.q - 0.5


@dataclass(frozen=True)
class BoundSpectrum:
    """Ordered bound levels E_0 < E_1 < ... < E_{n_max}, all strictly < 0."""

    levels: tuple[float, ...]
    n_max: int


def potential_value(model: MorseModel, x: float) -> float:
    """V_q at dimensionless displacement x; -> 0 as x -> +inf."""
    if not math.isfinite(x):
        raise InvalidModelError(f"x must be finite, got {x!r}")
    arg = -2.0 * model.xi * x
    if arg > _EXP_MAX:
        raise RangeError(
            f"potential overflows at x = {x} (repulsive wall)",
            value=arg, threshold=_EXP_MAX)
    return model.De * (math.exp(arg) - 2.0 * model.q * math.exp(0.5 * arg))


def potential_minimum(model: MorseModel) -> tuple[float, float]:
    """Location and value of the well minimum: (ln(1/q)/xi, -De q^2).

    Setting dV/dx = 0 gives exp(-xi x0) = q, i.e. x0 = -ln(q)/xi, which is
    >= 0 for q <= 1: weakening the attractive term pushes the minimum
    outward.  Substituting back, V(x0) = -De q^2.
    """
    return -math.log(model.q) / model.xi, -model.De * model.q**2


def harmonic_expansion(model: MorseModel) -> tuple[float, float, float, float]:
    """Quadratic expansion of V_q about x = 0 plus the q -> 1 spring constant.

    Returns (c0, c1, c2, k_spring) with

        V_q(x) = c0 + c1 x + c2 x^2 + O(x^3),
        c0 = De (1 - 2q),  c1 = 2 xi De (q - 1),  c2 = xi^2 De (2 - q),

    and k_spring = 2 xi^2 De.  For q < 1 the linear term survives because
    the true minimum sits at x0 = ln(q)/xi, not at the origin; only in the
    q -> 1 limit is this expansion a harmonic approximation.
    """
    De, xi, q = model.De, model.xi, model.q
    return (De * (1.0 - 2.0 * q),
            2.0 * xi * De * (q - 1.0),
            xi**2 * De * (2.0 - q),
            2.0 * xi**2 * De)


def n_max(model: MorseModel) -> int:
    """Highest bound quantum number: largest n with lam q - n - 1/2 > 0.

    A state with lam q - n - 1/2 = 0 exactly would sit at E = 0; it is not
    counted (see module docstring).
    """
    return math.ceil(model.ladder_top) - 1


def eigenvalue(model: MorseModel, n: int) -> float:
    """Bound level E_n = -xi^2 p (lam q - n - 1/2)^2, strictly negative."""
    top = n_max(model)
    if not (isinstance(n, (int, np.integer)) and 0 <= n <= top):
        raise SpectrumError(f"level index {n!r} outside 0..{top} (n_max = {top})")
    return -model.xi**2 * model.p * (model.ladder_top - n)**2


def bound_spectrum(model: MorseModel) -> BoundSpectrum:
    """All bound levels in increasing order."""
    top = n_max(model)
    return BoundSpectrum(
        levels=tuple(eigenvalue(model, k) for k in range(top + 1)),
        n_max=top)


def fd_schrodinger_oracle(model: MorseModel, x_min: float, x_max: float,
                          grid_points: int = 4000,
                          boundary_tol: float = 1e-4) -> list[float]:
    """Bound levels from direct diagonalization, independent of the formula.

    Discretizes  -p psi'' + V_q(x) psi = E psi  with the central second
    difference on a uniform grid and Dirichlet walls, then returns the
    negative eigenvalues (ascending).  Demands that every bound eigenvector
    has negligible relative amplitude at the walls; otherwise the domain is
    too narrow and a GridError carries the measured boundary amplitude.
    """
    if grid_points < 2000:
        raise GridError(f"grid_points must be >= 2000, got {grid_points}")
    x0 = potential_minimum(model)[0]
    if not (x_min < x0 < x_max):
        raise GridError(
            f"domain [{x_min}, {x_max}] must bracket the well minimum x0 = {x0:.4g}")

    x = np.linspace(x_min, x_max, grid_points + 2)[1:-1]
    h = x[1] - x[0]
    v = model.De * (np.exp(-2.0 * model.xi * x)
                    - 2.0 * model.q * np.exp(-model.xi * x))
    p = model.p
    diag = 2.0 * p / h**2 + v
    off = np.full(grid_points - 1, -p / h**2)

    v_min = -model.De * model.q**2
    w, vec = eigh_tridiagonal(diag, off, select="v",
                              select_range=(v_min * (1.0 + 1e-9) - 1.0, 0.0))
    keep = w < 0.0
    w, vec = w[keep], vec[:, keep]
    if w.size == 0:
        raise GridError("no negative eigenvalue found; domain or grid inadequate",
                        boundary_amplitude=float("nan"))

    edge = np.max(np.abs(vec[[0, -1], :]), axis=0) / np.max(np.abs(vec), axis=0)
    worst = float(edge.max())
    if worst > boundary_tol:
        raise GridError(
            f"bound state leaks into the boundary (relative amplitude "
            f"{worst:.2e} > {boundary_tol:.0e}); widen [{x_min}, {x_max}]",
            boundary_amplitude=worst)
    return [float(e) for e in w]
