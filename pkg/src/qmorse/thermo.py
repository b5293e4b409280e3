"""Canonical thermodynamics of one oscillator at one temperature.

Two evaluation routes are kept strictly separate:

* the **sum route** (authoritative): the truncated Boltzmann sum over the
  bound ladder defines Z, the occupations, U and S exactly;
* the **closed route**: the continuum approximation obtained by replacing
  the level sum with an integral over the quantum number, which turns the
  quadratic spectrum into erfi expressions.  For the reduced variables

      a = sqrt(beta xi^2 p),      u = (lam q - 1/2) a,

  the closed partition value and entropy read

      Z_c   = sqrt(pi) erfi(u) / (2 a),
      S_c/k = ln Z_c + 1/2 - u e^{u^2} / (sqrt(pi) erfi(u)),

  the second being ln Z_c + beta U_c with U_c = -d(ln Z_c)/d(beta).  The
  formal derivation passes through erfc of an imaginary argument; the
  identity erfc(-iu) = 1 + i erfi(u) reduces it to the real axis, and the
  discarded imaginary remainder (-sqrt(pi)/(2a) inside Z) is exposed via
  ``partition_closed_formal`` so consumers can report it.

The closed route is quantitatively good only when many levels fit inside
k_B T (dense-spectrum regime); elsewhere it can be badly off and the sum
route must be used.  Ratios u e^{u^2}/erfi(u) are always computed through
``erfi_scaled`` so the closed entropy stays finite far past the erfi
overflow point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RangeError
from .specfun import SQRT_PI, erfi, erfi_scaled
from .spectrum import MorseModel, bound_spectrum

_EXP_MAX = 700.0


@dataclass(frozen=True)
class ThermalEnvironment:
    """A heat bath: temperature plus the Boltzmann constant in use."""

    T: float
    kB: float = 1.0

    def __post_init__(self) -> None:
        for name in ("T", "kB"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")

    @property
    def beta(self) -> float:
        return 1.0 / (self.kB * self.T)


@dataclass(frozen=True)
class ThermalState:
    """Diagonal Gibbs state over the bound ladder (sum route, exact)."""

    beta: float
    Z: float
    occupations: tuple[float, ...]   # P_0 .. P_{n_max}, sums to 1
    U: float                         # internal energy, sum P_n E_n
    S: float                         # entropy in units of kB


@dataclass(frozen=True)
class ReducedVariables:
    """Dimensionless arguments of the closed-form expressions."""

    a: float   # sqrt(beta xi^2 p)
    u: float   # (lam q - 1/2) * a


def reduced_variables(model: MorseModel, env: ThermalEnvironment) -> ReducedVariables:
    a = math.sqrt(env.beta * model.xi**2 * model.p)
    return ReducedVariables(a=a, u=model.ladder_top * a)


def partition_sum(model: MorseModel, env: ThermalEnvironment) -> float:
    """Z = sum_n exp(-beta E_n) over bound levels only.

    The ground-state factor is pulled out so the inner sum never exceeds
    n_max + 1; all levels are negative, hence Z > n_max + 1 always.
    """
    levels = bound_spectrum(model).levels
    beta = env.beta
    e0 = levels[0]
    if -beta * e0 > _EXP_MAX:
        raise RangeError(
            f"partition sum overflows: beta*|E_0| = {-beta * e0:.4g}",
            value=-beta * e0, threshold=_EXP_MAX)
    rest = math.fsum(math.exp(-beta * (e - e0)) for e in levels)
    z = math.exp(-beta * e0) * rest
    if not math.isfinite(z):
        raise RangeError(
            f"partition sum overflows: beta*|E_0| = {-beta * e0:.4g}",
            value=-beta * e0, threshold=_EXP_MAX)
    return z


def thermal_state(model: MorseModel, env: ThermalEnvironment) -> ThermalState:
    """Occupations, internal energy and entropy from the exact level sum."""
    levels = bound_spectrum(model).levels
    beta = env.beta
    e0 = levels[0]
    weights = [math.exp(-beta * (e - e0)) for e in levels]
    norm = math.fsum(weights)
    occ = tuple(w / norm for w in weights)
    u_int = math.fsum(p * e for p, e in zip(occ, levels))
    entropy = -math.fsum(p * math.log(p) for p in occ)
    return ThermalState(beta=beta, Z=partition_sum(model, env),
                        occupations=occ, U=u_int, S=entropy)


def partition_closed(model: MorseModel, env: ThermalEnvironment) -> float:
    """Continuum approximation sqrt(pi) erfi(u) / (2a) of the level sum.

    High-temperature limit: u -> 0 gives lam q - 1/2, the integral of a flat
    weight over the bound range.  RangeError propagates from erfi once
    u > 26.5; use ``log_partition_closed`` in that regime.
    """
    rv = reduced_variables(model, env)
    return SQRT_PI * erfi(rv.u) / (2.0 * rv.a)


def partition_closed_formal(model: MorseModel, env: ThermalEnvironment) -> complex:
    """Closed partition value before discarding the imaginary remainder.

    Real part equals ``partition_closed``; the imaginary part, an artifact
    of the erfc-of-imaginary-argument form, is reported by the verification
    harness rather than silently dropped.
    """
    rv = reduced_variables(model, env)
    return complex(SQRT_PI * erfi(rv.u) / (2.0 * rv.a), -SQRT_PI / (2.0 * rv.a))


def log_partition_closed(model: MorseModel, env: ThermalEnvironment) -> float:
    """ln of the closed partition value, overflow-safe for any u."""
    rv = reduced_variables(model, env)
    return (math.log(SQRT_PI / (2.0 * rv.a)) + rv.u * rv.u
            + math.log(erfi_scaled(rv.u)))


def internal_energy_closed(model: MorseModel, env: ThermalEnvironment) -> float:
    """-d(ln Z_c)/d(beta) in closed form: (1/2 - u e^{u^2}/(sqrt(pi) erfi u))/beta."""
    rv = reduced_variables(model, env)
    return (0.5 - rv.u / (SQRT_PI * erfi_scaled(rv.u))) / env.beta


def entropy_closed(model: MorseModel, env: ThermalEnvironment) -> float:
    """Closed-form entropy ln Z_c + beta U_c, in units of kB.

    Evaluated through erfi_scaled so it remains finite for arbitrarily deep
    wells or low temperatures, where erfi itself would overflow.
    """
    rv = reduced_variables(model, env)
    return (log_partition_closed(model, env) + 0.5
            - rv.u / (SQRT_PI * erfi_scaled(rv.u)))
