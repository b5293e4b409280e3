"""Quantum Carnot and Otto heat cycles with a deformed Morse working medium.

Library layout:

* :mod:`qmorse.specfun`  - erf/erfc/erfi kernels and a formal complex erfc;
* :mod:`qmorse.spectrum` - the medium, its bound levels, and an independent
  finite-difference eigenvalue check;
* :mod:`qmorse.thermo`   - exact (level-sum) and closed-form (continuum)
  canonical thermodynamics;
* :mod:`qmorse.carnot` / :mod:`qmorse.otto` - the two cycles, each with the
  exact route and the closed-form route side by side;
* :mod:`qmorse.sweep`    - deterministic 2-D parameter sweeps and the
  bundled figure presets;
* :mod:`qmorse.verify`   - the oracle harness behind ``qmorse verify``.
"""

from .carnot import (CarnotSpec, ReversibilityReport, carnot_cycle_closed,
                     carnot_cycle_sum, carnot_efficiency, carnot_from_widths,
                     carnot_work_closed, reversibility_alpha, verify_reversibility)
from .cycles import CycleResult, classify_regime
from .errors import (ConfigError, DomainError, GridError, InvalidModelError,
                     QmorseError, RangeError, SpectrumError)
from .otto import (ChangingDeformation, ChangingDissociation, ChangingWidth,
                   ClosedEfficiency, ClosedFormValue, LambdaSet, OttoSpec,
                   lambda_set, otto_cold_heat_closed, otto_cycle_closed,
                   otto_cycle_sum, otto_efficiency_closed, otto_endpoints,
                   otto_hot_heat_closed, otto_work_closed)
from .spectrum import (BoundSpectrum, MorseModel, bound_spectrum, eigenvalue,
                       fd_schrodinger_oracle, harmonic_expansion, n_max,
                       potential_minimum, potential_value)
from .sweep import (FIGURES, OutputRecord, SweepAxis, SweepGrid, run_figure,
                    run_sweep)
from .thermo import (ReducedVariables, ThermalEnvironment, ThermalState,
                     entropy_closed, internal_energy_closed, log_partition_closed,
                     partition_closed, partition_closed_formal, partition_sum,
                     reduced_variables, thermal_state)
from .verify import run_verify

__version__ = "1.0.0"

__all__ = [
    "BoundSpectrum", "CarnotSpec", "ChangingDeformation", "ChangingDissociation",
    "ChangingWidth", "ClosedEfficiency", "ClosedFormValue", "ConfigError",
    "CycleResult", "DomainError", "FIGURES", "GridError", "InvalidModelError",
    "LambdaSet", "MorseModel", "OttoSpec", "OutputRecord", "QmorseError",
    "RangeError", "ReducedVariables", "ReversibilityReport", "SpectrumError",
    "SweepAxis", "SweepGrid", "ThermalEnvironment", "ThermalState",
    "bound_spectrum", "carnot_cycle_closed", "carnot_cycle_sum",
    "carnot_efficiency", "carnot_from_widths", "carnot_work_closed",
    "classify_regime", "eigenvalue", "entropy_closed", "fd_schrodinger_oracle",
    "harmonic_expansion", "internal_energy_closed", "lambda_set",
    "log_partition_closed", "n_max", "otto_cold_heat_closed", "otto_cycle_closed",
    "otto_cycle_sum", "otto_efficiency_closed", "otto_endpoints",
    "otto_hot_heat_closed", "otto_work_closed", "partition_closed",
    "partition_closed_formal", "partition_sum", "potential_minimum",
    "potential_value", "reduced_variables", "reversibility_alpha", "run_figure",
    "run_sweep", "run_verify", "thermal_state", "verify_reversibility",
]
