"""Quantum Carnot cycle with a deformed Morse working medium.

The cycle runs two isothermal strokes (hot bath T_h, cold bath T_c) joined
by two adiabats.  Because the adiabats preserve entropy, the whole cycle is
fixed by the two evaluated states: the medium at the end of the hot
isotherm (``model_hot`` at T_h) and at the end of the cold isotherm
(``model_cold`` at T_c).  With dS = S_hot - S_cold,

    Q_h = kB T_h dS,    Q_c = -kB T_c dS,    W = kB (T_h - T_c) dS,

and the efficiency W/Q_h collapses to 1 - T_c/T_h identically.

Adiabats that merely rescale the width parameter alpha at fixed De change
the spectrum's shape as well as its scale, so they are only approximately
entropy-preserving.  Exact preservation needs the gap-ratio condition

    E_n(C) - E_m(C) = (T_c/T_h) [E_n(B) - E_m(B)],

which the quadratic spectrum satisfies exactly only when De is co-scaled by
T_c/T_h along with alpha^2 (keeping lam fixed).  ``CarnotSpec.mode``
selects between the two conventions:

* ``paper``  - De held constant across the adiabats, only alpha scaled;
* ``strict`` - De co-scaled so the gap-ratio condition holds exactly.

``verify_reversibility`` measures how badly a given model pair breaks the
condition instead of hiding the gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .cycles import CycleResult, build_result
from .errors import DomainError, InvalidModelError, SpectrumError
from .specfun import SQRT_PI, erfi_scaled
from .spectrum import MorseModel, bound_spectrum, n_max
from .thermo import ThermalEnvironment, entropy_closed, reduced_variables, thermal_state

CarnotMode = Literal["paper", "strict"]

_SHARED_FIELDS = ("q", "re", "mu", "hbar")


@dataclass(frozen=True)
class CarnotSpec:
    """One Carnot cycle: two baths plus the medium at the two evaluated points."""

    hot: ThermalEnvironment
    cold: ThermalEnvironment
    model_hot: MorseModel    # medium at the end of the hot isotherm
    model_cold: MorseModel   # medium at the end of the cold isotherm
    mode: CarnotMode = "paper"

    def __post_init__(self) -> None:
        if self.hot.T <= self.cold.T:
            raise DomainError(
                f"need T_h > T_c, got T_h = {self.hot.T}, T_c = {self.cold.T}")
        if self.hot.kB != self.cold.kB:
            raise DomainError("hot and cold baths must share kB")
        for name in _SHARED_FIELDS:
            if getattr(self.model_hot, name) != getattr(self.model_cold, name):
                raise InvalidModelError(
                    f"models must share {name}; only alpha (and De in strict "
                    "mode) may differ across the adiabats")
        ratio = self.cold.T / self.hot.T
        if self.mode == "paper":
            if self.model_hot.De != self.model_cold.De:
                raise InvalidModelError("paper mode keeps De constant")
        elif self.mode == "strict":
            want = self.model_hot.De * ratio
            if not math.isclose(self.model_cold.De, want, rel_tol=1e-9):
                raise InvalidModelError(
                    f"strict mode needs De_cold = De_hot * T_c/T_h = {want:.9g}, "
                    f"got {self.model_cold.De:.9g}")
            if not math.isclose(self.model_cold.lam, self.model_hot.lam,
                                rel_tol=1e-9):
                raise InvalidModelError(
                    "strict mode needs lam invariant; scale alpha by "
                    "sqrt(T_c/T_h) together with De")
        else:
            raise DomainError(f"unknown mode {self.mode!r}")


def reversibility_alpha(alpha_b: float, t_h: float, t_c: float) -> float:
    """Width at the cold end of an adiabat: alpha_C = alpha_B sqrt(T_c/T_h)."""
    if not all(math.isfinite(v) and v > 0 for v in (alpha_b, t_h, t_c)):
        raise DomainError("alpha_b, t_h, t_c must be finite and > 0")
    if t_c > t_h:
        raise DomainError(f"need T_h >= T_c, got {t_h} < {t_c}")
    return alpha_b * math.sqrt(t_c / t_h)


@dataclass(frozen=True)
class ReversibilityReport:
    """Gap-ratio deviation of a candidate adiabat over all common level pairs."""

    max_rel_deviation: float
    pairs_checked: int
    passed: bool


def verify_reversibility(model_b: MorseModel, model_c: MorseModel,
                         ratio: float, tol: float = 1e-12) -> ReversibilityReport:
    """Check E_n(C) - E_m(C) = ratio * (E_n(B) - E_m(B)) over all pairs.

    Exact (deviation 0) when lam is shared and xi_C^2 = ratio * xi_B^2; with
    De held constant instead, the deviation quantifies the approximation.
    """
    if model_b.q != model_c.q:
        raise InvalidModelError("gap-ratio check requires a shared q")
    if not (math.isfinite(ratio) and ratio > 0):
        raise DomainError(f"ratio must be finite and > 0, got {ratio!r}")
    top = min(n_max(model_b), n_max(model_c))
    if top < 1:
        raise SpectrumError(
            "need at least two common bound levels to form a gap "
            f"(common n_max = {top})")
    eb = bound_spectrum(model_b).levels
    ec = bound_spectrum(model_c).levels
    worst = 0.0
    pairs = 0
    for n in range(1, top + 1):
        for m in range(n):
            gap_b = eb[n] - eb[m]
            gap_c = ec[n] - ec[m]
            worst = max(worst, abs(gap_c / gap_b - ratio) / ratio)
            pairs += 1
    return ReversibilityReport(max_rel_deviation=worst, pairs_checked=pairs,
                               passed=worst <= tol)


def carnot_cycle_sum(spec: CarnotSpec) -> CycleResult:
    """Heats, work and regime from exact (sum-route) entropies."""
    kb = spec.hot.kB
    s_hot = thermal_state(spec.model_hot, spec.hot).S
    s_cold = thermal_state(spec.model_cold, spec.cold).S
    ds = s_hot - s_cold
    q_h = kb * spec.hot.T * ds
    q_c = -kb * spec.cold.T * ds
    return build_result(q_h, q_c, q_h + q_c)


def carnot_cycle_closed(spec: CarnotSpec) -> CycleResult:
    """Heats, work and regime from closed-form (continuum) entropies."""
    kb = spec.hot.kB
    ds = (entropy_closed(spec.model_hot, spec.hot)
          - entropy_closed(spec.model_cold, spec.cold))
    q_h = kb * spec.hot.T * ds
    q_c = -kb * spec.cold.T * ds
    return build_result(q_h, q_c, q_h + q_c)


def carnot_work_closed(spec: CarnotSpec) -> float:
    """Closed-form work, transcribed term by term from the analytic expression.

    Written in the erfi reduction: with L_i = ln(erfi(u_i)/a_i) and
    G_i = u_i e^{u_i^2} / (sqrt(pi) erfi(u_i)) (both via erfi_scaled),

        W = kB (T_c - T_h) [ (L_c - L_h) + G_h - G_c ],

    which is algebraically kB (T_h - T_c)(S_hot - S_cold); the independently
    coded ``carnot_cycle_closed`` route cross-checks the transcription.
    """
    rv_h = reduced_variables(spec.model_hot, spec.hot)
    rv_c = reduced_variables(spec.model_cold, spec.cold)

    def log_term(rv):
        return rv.u * rv.u + math.log(erfi_scaled(rv.u)) - math.log(rv.a)

    def ratio_term(rv):
        return rv.u / (SQRT_PI * erfi_scaled(rv.u))

    bracket = (log_term(rv_c) - log_term(rv_h)
               + ratio_term(rv_h) - ratio_term(rv_c))
    return spec.hot.kB * (spec.cold.T - spec.hot.T) * bracket


def carnot_efficiency(spec: CarnotSpec) -> float:
    """1 - T_c/T_h, independent of every medium parameter."""
    return 1.0 - spec.cold.T / spec.hot.T


def carnot_from_widths(De: float, q: float, alpha_hot: float, alpha_cold: float,
                       t_hot: float, t_cold: float, mode: CarnotMode = "paper",
                       *, re: float = 1.0, mu: float = 1.0, hbar: float = 1.0,
                       kB: float = 1.0) -> CarnotSpec:
    """Build a CarnotSpec from the two stroke widths.

    In strict mode De of the cold-stroke model is co-scaled by T_c/T_h and
    ``alpha_cold`` is ignored in favor of the exact adiabatic image
    alpha_hot * sqrt(T_c/T_h).
    """
    hot = ThermalEnvironment(T=t_hot, kB=kB)
    cold = ThermalEnvironment(T=t_cold, kB=kB)
    if mode == "strict":
        ratio = t_cold / t_hot
        model_cold = MorseModel(De=De * ratio, alpha=alpha_hot * math.sqrt(ratio),
                                q=q, re=re, mu=mu, hbar=hbar)
    else:
        model_cold = MorseModel(De=De, alpha=alpha_cold, q=q, re=re, mu=mu, hbar=hbar)
    model_hot = MorseModel(De=De, alpha=alpha_hot, q=q, re=re, mu=mu, hbar=hbar)
    return CarnotSpec(hot=hot, cold=cold, model_hot=model_hot,
                      model_cold=model_cold, mode=mode)
