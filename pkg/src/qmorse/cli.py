"""Command-line interface.

Subcommands
-----------
spectrum   derived constants and bound levels of one medium
carnot     one Carnot cycle, sum and closed routes side by side
otto       one Otto cycle under a chosen driving protocol
sweep      2-D parameter sweep from a JSON grid document -> CSV/JSON
figure     bundled presets (fig1, fig2, fig4, fig5, fig6) -> CSV/JSON,
           optionally rendered to PNG with --plot
verify     oracle harness; exit 0 iff all hard checks pass

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 numeric range error.  Diagnostics go to stderr; data to --out (default
stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .carnot import carnot_efficiency
from .errors import ConfigError, InvalidModelError, QmorseError, RangeError
from .otto import otto_efficiency_closed
from .spectrum import MorseModel, bound_spectrum
from .sweep import (CSV_HEADER, CYCLE_KINDS, POTENTIAL_CSV_HEADER, SweepAxis,
                    SweepGrid, build_cycle_spec, canonical_param, evaluate_cycle,
                    record_to_csv, record_to_dict, run_figure, run_sweep)
from .verify import LEVELS, run_verify

_POINT_PARAM_FLAGS = (
    ("--De", "De"), ("--alpha", "alpha"), ("--q", "q"),
    ("--alpha-h", "alpha_h"), ("--alpha-c", "alpha_c"),
    ("--q-h", "q_h"), ("--q-c", "q_c"),
    ("--D-h", "D_h"), ("--D-c", "D_c"),
    ("--Th", "Th"), ("--Tc", "Tc"),
    ("--hbar", "hbar"), ("--mu", "mu"), ("--re", "re"), ("--kB", "kB"),
)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    for flag, dest in _POINT_PARAM_FLAGS:
        parser.add_argument(flag, dest=dest, type=float, default=None)


def _add_io_flags(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write output here instead of stdout")
    parser.add_argument("--format", choices=formats, default=formats[0])


def _load_config(path: str | None) -> dict[str, float | str]:
    """Flatten the JSON config document into the parameter mapping.

    Recognized sections: units {hbar, mu, re, kB}, model {De, alpha, q},
    baths {Th, Tc}, protocol {...pairs, mode}; unknown keys are rejected
    with the offending dotted path.
    """
    if path is None:
        return {}
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}", field="config")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}", field="config")
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object", field="config")

    known = {
        "units": {"hbar", "mu", "re", "kB"},
        "model": {"De", "alpha", "q"},
        "baths": {"Th", "Tc"},
        "protocol": {"alpha_h", "alpha_c", "q_h", "q_c", "D_h", "D_c", "mode"},
    }
    params: dict[str, float | str] = {}
    for section, payload in doc.items():
        if section == "grid":
            continue
        if section not in known:
            raise ConfigError(f"unknown section {section!r}", field=section)
        if not isinstance(payload, dict):
            raise ConfigError("section must be an object", field=section)
        for key, value in payload.items():
            name = canonical_param(key)
            if name not in known[section]:
                raise ConfigError(f"unknown field {key!r}", field=f"{section}.{key}")
            if name == "mode":
                params[name] = str(value)
                continue
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError("must be a number", field=f"{section}.{key}")
            params[name] = float(value)
    return params


def _load_grid(path: str) -> SweepGrid:
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"grid file not found: {path}", field="grid")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}", field="grid")
    grid_doc = doc.get("grid")
    if not isinstance(grid_doc, dict):
        raise ConfigError("missing 'grid' object", field="grid")

    def axis(which: str) -> SweepAxis:
        node = grid_doc.get(which)
        if not isinstance(node, dict):
            raise ConfigError("missing axis object", field=f"grid.{which}")
        try:
            return SweepAxis(name=str(node["name"]), lo=float(node["min"]),
                             hi=float(node["max"]), steps=int(node["steps"]))
        except KeyError as exc:
            raise ConfigError(f"missing key {exc.args[0]!r}", field=f"grid.{which}")

    fixed = {k: v for k, v in _load_config(path).items() if k != "mode"}
    mode = _load_config(path).get("mode")
    extra = grid_doc.get("fixed", {})
    if not isinstance(extra, dict):
        raise ConfigError("'fixed' must be an object", field="grid.fixed")
    for key, value in extra.items():
        fixed[canonical_param(key)] = float(value)
    grid = SweepGrid(axis1=axis("axis1"), axis2=axis("axis2"), fixed=fixed)
    if mode is not None:
        grid.fixed["mode"] = mode  # carnot only; ignored elsewhere
    return grid


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else sys.stdout


def _emit(lines, out_path: str | None) -> None:
    stream = _open_out(out_path)
    try:
        for line in lines:
            stream.write(line + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()


def _point_params(args: argparse.Namespace) -> dict[str, float | str]:
    params = _load_config(getattr(args, "config", None))
    for _, dest in _POINT_PARAM_FLAGS:
        value = getattr(args, dest, None)
        if value is not None:
            params[dest] = value
    mode = getattr(args, "mode", None)
    if mode is not None:
        params["mode"] = mode
    return params


def _result_row(method: str, res) -> str:
    eta = "undefined" if res.eta is None else f"{res.eta:.9g}"
    return (f"  {method:<7} Qh={res.Q_h:+.9g}  Qc={res.Q_c:+.9g}  "
            f"W={res.W:+.9g}  eta={eta}  regime={res.regime}")


def _cycle_point(cycle: str, args: argparse.Namespace) -> int:
    params = _point_params(args)
    results = {m: evaluate_cycle(cycle, params, m) for m in ("sum", "closed")}
    if args.format == "json":
        payload = {"cycle": cycle,
                   "params": {k: v for k, v in params.items()},
                   "sum": record_to_dict_from_cycle(results["sum"]),
                   "closed": record_to_dict_from_cycle(results["closed"])}
        if cycle == "carnot":
            payload["eta_carnot"] = carnot_efficiency(build_cycle_spec(cycle, params))
        _emit([json.dumps(payload)], args.out)
        return 0
    lines = [f"{cycle} cycle point evaluation", *(
        _result_row(m, results[m]) for m in ("sum", "closed"))]
    if cycle == "carnot":
        spec = build_cycle_spec(cycle, params)
        lines.append(f"  carnot efficiency 1 - Tc/Th = {carnot_efficiency(spec):.12g}")
    else:
        spec = build_cycle_spec(cycle, params)
        eff = otto_efficiency_closed(spec)
        ratio = "undefined" if eff.ratio_of_parts is None else f"{eff.ratio_of_parts:.9g}"
        print(f"closed-route efficiency: analytic ratio vs Re(W)/Re(Qh) = {ratio}; "
              f"imag residue {eff.imag_residue:.3g}", file=sys.stderr)
    trunc = results["sum"].trunc_mass
    if trunc > 0:
        print(f"truncated occupation mass: {trunc:.3g}", file=sys.stderr)
    _emit(lines, args.out)
    return 0


def record_to_dict_from_cycle(res) -> dict:
    return {"Qh": res.Q_h, "Qc": res.Q_c, "W": res.W, "eta": res.eta,
            "regime": res.regime, "imag_residue": res.imag_residue,
            "trunc_mass": res.trunc_mass}


def _cmd_spectrum(args: argparse.Namespace) -> int:
    params = _point_params(args)
    for required in ("De", "alpha", "q"):
        if required not in params:
            raise ConfigError("missing value", field=f"model.{required}")
    model = MorseModel(De=float(params["De"]), alpha=float(params["alpha"]),
                       q=float(params["q"]),
                       re=float(params.get("re", 1.0)),
                       mu=float(params.get("mu", 1.0)),
                       hbar=float(params.get("hbar", 1.0)))
    spec = bound_spectrum(model)
    if args.format == "json":
        _emit([json.dumps({
            "xi": model.xi, "p": model.p, "lam": model.lam,
            "n_max": spec.n_max, "levels": list(spec.levels)})], args.out)
        return 0
    lines = [
        f"deformed Morse medium: De={model.De} alpha={model.alpha} q={model.q}",
        f"  xi = {model.xi:.12g}   p = {model.p:.12g}   lam = {model.lam:.12g}",
        f"  bound levels (n_max = {spec.n_max}):",
        *(f"    E_{n} = {e:.12g}" for n, e in enumerate(spec.levels)),
    ]
    _emit(lines, args.out)
    return 0


def _records_output(records, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit([json.dumps([record_to_dict(r) for r in records])], out)
    else:
        _emit([CSV_HEADER, *(record_to_csv(r) for r in records)], out)


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = _load_grid(args.grid)
    methods = ("sum", "closed") if args.method == "both" else (args.method,)
    records = run_sweep(grid, args.cycle, methods, threads=args.threads)
    _records_output(records, args.format, args.out)
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    methods = ("sum", "closed") if args.method == "both" else (args.method,)
    kind, payload = run_figure(args.figure_id, methods, threads=args.threads)
    if kind == "potential":
        if args.format == "json":
            _emit([json.dumps([{"x": x, "q": q, "V": v} for x, q, v in payload])],
                  args.out)
        else:
            _emit([POTENTIAL_CSV_HEADER,
                   *(f"{x!r},{q!r},{v!r}" for x, q, v in payload)], args.out)
        if args.plot:
            from .plots import render_potential_figure
            render_potential_figure(payload, args.figure_id, args.plot)
            print(f"figure rendered to {args.plot}", file=sys.stderr)
        return 0
    _records_output(payload, args.format, args.out)
    if args.plot:
        from .plots import render_cycle_figure
        render_cycle_figure(payload, args.figure_id, args.plot, method=methods[0])
        print(f"figure rendered to {args.plot}", file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    code, results = run_verify(args.level)
    lines = []
    for r in results:
        tag = ("PASS" if r.passed else "FAIL") if r.hard else "INFO"
        lines.append(f"{tag} {r.name}: {r.detail}")
    hard = [r for r in results if r.hard]
    lines.append(f"{sum(r.passed for r in hard)}/{len(hard)} hard checks passed")
    _emit(lines, args.out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmorse",
        description="quantum Carnot/Otto thermodynamics of a deformed Morse medium")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="bound levels of one medium")
    _add_param_flags(sp)
    sp.add_argument("--config", default=None)
    _add_io_flags(sp, ("table", "json"))
    sp.set_defaults(func=_cmd_spectrum)

    ca = sub.add_parser("carnot", help="one Carnot cycle (sum + closed)")
    _add_param_flags(ca)
    ca.add_argument("--mode", choices=("paper", "strict"), default=None)
    ca.add_argument("--config", default=None)
    _add_io_flags(ca, ("table", "json"))
    ca.set_defaults(func=lambda a: _cycle_point("carnot", a))

    ot = sub.add_parser("otto", help="one Otto cycle (sum + closed)")
    ot.add_argument("--protocol", choices=("width", "deform", "dissoc"),
                    required=True)
    _add_param_flags(ot)
    ot.add_argument("--config", default=None)
    _add_io_flags(ot, ("table", "json"))
    ot.set_defaults(func=lambda a: _cycle_point(
        {"width": "otto-width", "deform": "otto-deform",
         "dissoc": "otto-dissoc"}[a.protocol], a))

    sw = sub.add_parser("sweep", help="2-D sweep from a JSON grid document")
    sw.add_argument("--grid", required=True, metavar="FILE")
    sw.add_argument("--cycle", required=True, choices=CYCLE_KINDS)
    sw.add_argument("--method", choices=("sum", "closed", "both"), default="sum")
    sw.add_argument("--threads", type=int, default=1)
    _add_io_flags(sw, ("csv", "json"))
    sw.set_defaults(func=_cmd_sweep)

    fg = sub.add_parser("figure", help="bundled figure presets")
    fg.add_argument("figure_id", metavar="ID",
                    help="fig1, fig2, fig4, fig5 or fig6")
    fg.add_argument("--method", choices=("sum", "closed", "both"), default="sum")
    fg.add_argument("--threads", type=int, default=1)
    fg.add_argument("--plot", default=None, metavar="PNG",
                    help="also render the figure to this image file")
    _add_io_flags(fg, ("csv", "json"))
    fg.set_defaults(func=_cmd_figure)

    ve = sub.add_parser("verify", help="run the oracle harness")
    ve.add_argument("--level", choices=LEVELS, default=None)
    _add_io_flags(ve, ("table",))
    ve.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except InvalidModelError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except RangeError as exc:
        print(f"numeric range error: {exc}", file=sys.stderr)
        return 3
    except QmorseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
