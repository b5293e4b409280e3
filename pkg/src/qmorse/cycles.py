"""Shared cycle-evaluation result type and operating-regime classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

Regime = Literal["engine", "refrigerator", "heater", "accelerator", "degenerate"]

# |W| below this fraction of the heat scale counts as no cycle at all.
DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class CycleResult:
    """Heats, work, efficiency and regime of one evaluated cycle.

    Sign convention: Q_h > 0 when the medium absorbs from the hot bath,
    Q_c < 0 when it dumps into the cold bath, W > 0 for net work output,
    so W = Q_h + Q_c.  ``eta`` is W/Q_h and only defined when Q_h > 0.

    ``imag_residue`` is the largest formal imaginary component discarded
    while evaluating closed forms (0 for sum-route results);
    ``trunc_mass`` is the occupation probability dropped when hot and cold
    ladders are truncated to their common length (0 for untruncated sums).
    """

    Q_h: float
    Q_c: float
    W: float
    eta: float | None
    regime: Regime
    imag_residue: float = 0.0
    trunc_mass: float = 0.0


def classify_regime(q_h: float, q_c: float, w: float) -> Regime:
    """Sign-based operating regime of a two-bath cycle.

    engine       absorbs hot, rejects cold, delivers work;
    accelerator  heat still flows hot -> cold but work must be supplied;
    refrigerator work drives heat from the cold bath into the hot one;
    heater       supplied work is dissipated into both baths;
    degenerate   no net work at numerical resolution, or an unphysical
                 sign pattern that fits none of the four machines.
    """
    scale = max(abs(q_h), abs(q_c), 1e-300)
    if abs(w) <= DEGENERATE_RTOL * scale:
        return "degenerate"
    if q_h > 0.0 and q_c < 0.0 and w > 0.0:
        return "engine"
    if q_h < 0.0 and q_c > 0.0 and w < 0.0:
        return "refrigerator"
    if q_h > 0.0 and q_c < 0.0 and w < 0.0:
        return "accelerator"
    if q_h < 0.0 and q_c < 0.0 and w < 0.0:
        return "heater"
    return "degenerate"


def build_result(q_h: float, q_c: float, w: float, *,
                 imag_residue: float = 0.0,
                 trunc_mass: float = 0.0) -> CycleResult:
    """Assemble a CycleResult, deriving regime and (guarded) efficiency."""
    regime = classify_regime(q_h, q_c, w)
    eta = w / q_h if (q_h > 0.0 and regime != "degenerate") else None
    return CycleResult(Q_h=q_h, Q_c=q_c, W=w, eta=eta, regime=regime,
                       imag_residue=imag_residue, trunc_mass=trunc_mass)
