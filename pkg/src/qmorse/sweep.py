"""Two-dimensional parameter sweeps and the bundled figure presets.

A sweep evaluates one cycle family over an inclusive linear grid of two
parameters, emitting one flat record per grid point per method in row-major
order (axis1 outer, axis2 inner, method ``sum`` before ``closed``).  Grid
points whose medium admits no cycle produce records with ``nan`` numeric
fields and a non-empty ``reason`` instead of aborting the sweep.

Records serialize to CSV with the fixed header

    axis1,axis2,Qh,Qc,W,eta,regime,method,imag_residue,trunc_mass,reason

formatted via shortest round-trip floats, so output bytes are identical
across runs and across worker-thread counts.

The figure presets pin parameter sets on which the engine sign structure
(Q_h > 0, Q_c < 0, W > 0 from the sum route) holds at every grid point;
wider exploratory ranges remain available through custom sweeps.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from .carnot import CarnotSpec, carnot_cycle_closed, carnot_cycle_sum, carnot_from_widths
from .cycles import CycleResult
from .errors import ConfigError, QmorseError
from .otto import (ChangingDeformation, ChangingDissociation, ChangingWidth,
                   OttoSpec, otto_cycle_closed, otto_cycle_sum)
from .spectrum import MorseModel, potential_value
from .thermo import ThermalEnvironment

CycleKind = Literal["carnot", "otto-width", "otto-deform", "otto-dissoc"]
Method = Literal["sum", "closed"]

CYCLE_KINDS: tuple[str, ...] = ("carnot", "otto-width", "otto-deform", "otto-dissoc")

# canonical parameter names, plus accepted aliases
_ALIASES = {
    "D_e": "De", "d_e": "De", "de": "De",
    "T_h": "Th", "T_c": "Tc", "t_h": "Th", "t_c": "Tc",
    "De_h": "D_h", "De_c": "D_c",
}
_UNIT_NAMES = ("hbar", "mu", "re", "kB")
_PARAMS_BY_CYCLE: dict[str, frozenset[str]] = {
    "carnot": frozenset({"De", "q", "alpha_h", "alpha_c", "Th", "Tc"}),
    "otto-width": frozenset({"De", "q", "alpha_h", "alpha_c", "Th", "Tc"}),
    "otto-deform": frozenset({"De", "alpha", "q_h", "q_c", "Th", "Tc"}),
    "otto-dissoc": frozenset({"alpha", "q", "D_h", "D_c", "Th", "Tc"}),
}


def canonical_param(name: str) -> str:
    return _ALIASES.get(name, name)


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: inclusive [lo, hi] with `steps` linear samples."""

    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if self.steps < 2:
            raise ConfigError("steps must be >= 2", field=f"axis.{self.name}.steps")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)
                and self.lo < self.hi):
            raise ConfigError("need finite min < max", field=f"axis.{self.name}")

    def values(self) -> list[float]:
        span = self.hi - self.lo
        return [self.lo + span * i / (self.steps - 1) for i in range(self.steps)]


@dataclass(frozen=True)
class SweepGrid:
    axis1: SweepAxis
    axis2: SweepAxis
    fixed: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class OutputRecord:
    """One grid point evaluated by one method, ready for CSV/JSON emission."""

    axis1: float
    axis2: float
    Q_h: float
    Q_c: float
    W: float
    eta: float | None
    regime: str
    method: str
    imag_residue: float
    trunc_mass: float
    reason: str = ""


CSV_HEADER = "axis1,axis2,Qh,Qc,W,eta,regime,method,imag_residue,trunc_mass,reason"


def _fmt(value: float | None) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "nan"
    return repr(float(value))


def record_to_csv(rec: OutputRecord) -> str:
    return ",".join((
        _fmt(rec.axis1), _fmt(rec.axis2), _fmt(rec.Q_h), _fmt(rec.Q_c),
        _fmt(rec.W), _fmt(rec.eta), rec.regime, rec.method,
        _fmt(rec.imag_residue), _fmt(rec.trunc_mass), rec.reason))


def record_to_dict(rec: OutputRecord) -> dict:
    return {
        "axis1": rec.axis1, "axis2": rec.axis2, "Qh": rec.Q_h, "Qc": rec.Q_c,
        "W": rec.W, "eta": rec.eta, "regime": rec.regime, "method": rec.method,
        "imag_residue": rec.imag_residue, "trunc_mass": rec.trunc_mass,
        "reason": rec.reason,
    }


def build_cycle_spec(cycle: CycleKind, params: dict[str, float]):
    """Construct a CarnotSpec/OttoSpec from a flat parameter mapping.

    Required keys per cycle are listed in ``_PARAMS_BY_CYCLE``; units
    default to hbar = mu = re = kB = 1.
    """
    p = {canonical_param(k): v for k, v in params.items()}
    if cycle not in CYCLE_KINDS:
        raise ConfigError(f"unknown cycle {cycle!r}; expected one of {CYCLE_KINDS}",
                          field="cycle")
    missing = sorted(_PARAMS_BY_CYCLE[cycle] - p.keys())
    if missing:
        raise ConfigError(f"missing parameters {missing} for cycle {cycle!r}",
                          field="params")
    units = {name: float(p.get(name, 1.0)) for name in _UNIT_NAMES}
    hot = ThermalEnvironment(T=p["Th"], kB=units["kB"])
    cold = ThermalEnvironment(T=p["Tc"], kB=units["kB"])
    model_kw = dict(re=units["re"], mu=units["mu"], hbar=units["hbar"])

    if cycle == "carnot":
        mode = params.get("mode", "paper")
        return carnot_from_widths(p["De"], p["q"], p["alpha_h"], p["alpha_c"],
                                  p["Th"], p["Tc"], mode=mode, kB=units["kB"],
                                  **model_kw)
    if cycle == "otto-width":
        protocol = ChangingWidth(alpha_h=p["alpha_h"], alpha_c=p["alpha_c"])
        baseline = MorseModel(De=p["De"], alpha=p["alpha_h"], q=p["q"], **model_kw)
    elif cycle == "otto-deform":
        protocol = ChangingDeformation(q_h=p["q_h"], q_c=p["q_c"])
        baseline = MorseModel(De=p["De"], alpha=p["alpha"], q=p["q_h"], **model_kw)
    else:
        protocol = ChangingDissociation(D_h=p["D_h"], D_c=p["D_c"])
        baseline = MorseModel(De=p["D_h"], alpha=p["alpha"], q=p["q"], **model_kw)
    return OttoSpec(protocol=protocol, baseline=baseline, hot=hot, cold=cold)


def evaluate_cycle(cycle: CycleKind, params: dict[str, float],
                   method: Method) -> CycleResult:
    spec = build_cycle_spec(cycle, params)
    if cycle == "carnot":
        return carnot_cycle_sum(spec) if method == "sum" else carnot_cycle_closed(spec)
    return otto_cycle_sum(spec) if method == "sum" else otto_cycle_closed(spec)


def _nan_record(a1: float, a2: float, method: str, reason: str) -> OutputRecord:
    nan = float("nan")
    return OutputRecord(axis1=a1, axis2=a2, Q_h=nan, Q_c=nan, W=nan, eta=None,
                        regime="invalid", method=method,
                        imag_residue=nan, trunc_mass=nan,
                        reason=reason.replace(",", ";"))


def _evaluate_point(cycle: CycleKind, params: dict[str, float],
                    a1: float, a2: float,
                    methods: tuple[Method, ...]) -> list[OutputRecord]:
    out: list[OutputRecord] = []
    for method in methods:
        try:
            res = evaluate_cycle(cycle, params, method)
        except QmorseError as exc:
            out.append(_nan_record(a1, a2, method, str(exc)))
            continue
        out.append(OutputRecord(
            axis1=a1, axis2=a2, Q_h=res.Q_h, Q_c=res.Q_c, W=res.W, eta=res.eta,
            regime=res.regime, method=method,
            imag_residue=res.imag_residue, trunc_mass=res.trunc_mass))
    return out


def run_sweep(grid: SweepGrid, cycle: CycleKind,
              methods: Iterable[Method] = ("sum",),
              threads: int = 1) -> list[OutputRecord]:
    """Evaluate the grid; deterministic row-major order at any thread count.

    Worker threads only parallelize independent point evaluations; results
    are reassembled by grid index, so the record sequence (and hence the
    serialized bytes) never depends on scheduling.
    """
    methods = tuple(methods)
    for m in methods:
        if m not in ("sum", "closed"):
            raise ConfigError(f"unknown method {m!r}", field="method")
    name1 = canonical_param(grid.axis1.name)
    name2 = canonical_param(grid.axis2.name)
    allowed = _PARAMS_BY_CYCLE[cycle] | frozenset(_UNIT_NAMES)
    for name in (name1, name2):
        if name not in allowed:
            raise ConfigError(
                f"axis parameter {name!r} is not a parameter of cycle {cycle!r} "
                f"(allowed: {sorted(allowed)})", field="grid.axis")
    if name1 == name2:
        raise ConfigError("the two axes must sweep different parameters",
                          field="grid.axis")

    base = {canonical_param(k): v for k, v in grid.fixed.items()}
    points = [(v1, v2) for v1 in grid.axis1.values() for v2 in grid.axis2.values()]

    def work(point: tuple[float, float]) -> list[OutputRecord]:
        v1, v2 = point
        params = dict(base)
        params[name1] = v1
        params[name2] = v2
        return _evaluate_point(cycle, params, v1, v2, methods)

    if threads <= 1:
        chunks = map(work, points)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(work, points, chunksize=64))
    return [rec for chunk in chunks for rec in chunk]


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleFigure:
    """A pinned 2-D sweep reproducing one of the survey heat maps."""

    cycle: CycleKind
    grid: SweepGrid
    title: str


@dataclass(frozen=True)
class PotentialFigure:
    """Potential-shape curves V_q(x) for a family of deformations."""

    De: float
    alpha: float
    q_values: tuple[float, ...]
    x_lo: float
    x_hi: float
    points: int
    title: str


# The hot/cold width assignment of the Carnot preset puts the softer well
# (smaller alpha) on the hot isotherm; the reverse assignment pairs states
# related by the entropy-preserving adiabat, whose work output is a
# rounding-scale residual rather than an engine cycle.
FIGURES: dict[str, CycleFigure | PotentialFigure] = {
    "fig1": PotentialFigure(
        De=10.0, alpha=2.0, q_values=(0.4, 0.5, 1.0),
        x_lo=-0.5, x_hi=3.0, points=400,
        title="deformed Morse potential, De=10, alpha=2"),
    "fig2": CycleFigure(
        cycle="carnot",
        grid=SweepGrid(
            axis1=SweepAxis("De", 5.0, 15.0, 50),
            axis2=SweepAxis("q", 0.5, 1.0, 50),
            fixed={"alpha_h": 1.0, "alpha_c": 2.236, "Th": 10.0, "Tc": 2.0}),
        title="Carnot cycle vs De and q (alpha pair 1 / 2.236, Th=10, Tc=2)"),
    "fig4": CycleFigure(
        cycle="otto-width",
        grid=SweepGrid(
            axis1=SweepAxis("De", 12.0, 15.0, 50),
            axis2=SweepAxis("q", 0.7, 1.0, 50),
            fixed={"alpha_h": 2.236, "alpha_c": 1.0, "Th": 10.0, "Tc": 2.0}),
        title="Otto cycle, width drive, vs De and q (alpha 2.236 -> 1)"),
    "fig5": CycleFigure(
        cycle="otto-deform",
        grid=SweepGrid(
            axis1=SweepAxis("De", 12.0, 15.0, 50),
            axis2=SweepAxis("alpha", 1.0, 2.5, 50),
            fixed={"q_h": 1.0, "q_c": 0.8, "Th": 10.0, "Tc": 2.0}),
        title="Otto cycle, deformation drive (q 1 -> 0.8), vs De and alpha"),
    "fig6": CycleFigure(
        cycle="otto-dissoc",
        grid=SweepGrid(
            axis1=SweepAxis("alpha", 1.0, 1.6, 50),
            axis2=SweepAxis("q", 0.8, 1.0, 50),
            fixed={"D_h": 10.0, "D_c": 5.0, "Th": 10.0, "Tc": 2.0}),
        title="Otto cycle, dissociation drive (De 10 -> 5), vs alpha and q"),
}

POTENTIAL_CSV_HEADER = "x,q,V"


def run_potential_figure(fig: PotentialFigure) -> list[tuple[float, float, float]]:
    """Rows (x, q, V_q(x)) for each deformation curve, row-major in q then x."""
    rows = []
    span = fig.x_hi - fig.x_lo
    for q in fig.q_values:
        model = MorseModel(De=fig.De, alpha=fig.alpha, q=q)
        for i in range(fig.points):
            x = fig.x_lo + span * i / (fig.points - 1)
            rows.append((x, q, potential_value(model, x)))
    return rows


def run_figure(figure_id: str, methods: Iterable[Method] = ("sum",),
               threads: int = 1):
    """Evaluate a preset; returns (kind, payload) with kind 'cycle'|'potential'."""
    if figure_id not in FIGURES:
        known = ", ".join(sorted(FIGURES))
        hint = " (fig3 is a schematic, not a data figure)" if figure_id == "fig3" else ""
        raise ConfigError(f"unknown figure {figure_id!r}; presets: {known}{hint}",
                          field="figure")
    preset = FIGURES[figure_id]
    if isinstance(preset, PotentialFigure):
        return "potential", run_potential_figure(preset)
    return "cycle", run_sweep(preset.grid, preset.cycle, methods, threads)
