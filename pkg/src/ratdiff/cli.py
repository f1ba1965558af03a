"""Command-line front end.

Subcommands: ``analyze`` (equilibria, linearizations, Clark verdicts,
classifications, boundedness conditions, and period-two cycles as one
JSON document), ``simulate`` (orbit CSV per seed, summary JSON, optional
SVG scatter), ``lyapunov`` (exponent scan table as CSV plus a JSON
mirror with per-seed detail), ``period2`` (cycles and stability only),
and ``sweep`` (exponent grid over one parameter's complex plane).

Configuration resolves in three layers: built-in defaults, then a JSON
config file given with --config, then command-line flags; later layers
win.  Every JSON report embeds the resolved configuration and the tool
version, and a repeated run with the same configuration writes
byte-identical files.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import __version__
from .core import (
    EquationForm,
    FormKind,
    FullParameters,
    Guards,
    NoPrimePeriodTwoError,
    RatdiffError,
    reduce as reduce_full,
)
from .equilibria import equilibria
from .lyapunov import lyapunov_scan
from .period2 import period2_cycles
from .serialize import dumps_json, format_float, parse_complex
from .simulate import InsufficientSamplesError, detect_period, orbit, sample_ball
from .stability import boundedness_condition, clark_test, classify, linearize

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ANALYSIS = 3
EXIT_IO = 4


class ConfigError(Exception):
    """Invalid or inconsistent run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved inputs of one CLI run.

    ``n_steps`` and ``transient`` stay None until the subcommand applies
    its own default, so the embedded config echo shows the values
    actually used.
    """

    form: str = "constant"
    p: complex = 0j
    q: complex = 0j
    alpha: Optional[complex] = None
    beta: Optional[complex] = None
    gamma: Optional[complex] = None
    a: Optional[complex] = None
    b: Optional[complex] = None
    c: Optional[complex] = None
    parameter_sets: Optional[tuple[tuple[complex, complex], ...]] = None
    seeds: Optional[tuple[tuple[complex, complex], ...]] = None
    seed_count: int = 10
    ball_radius: float = 1.0
    rng_seed: int = 0
    n_steps: Optional[int] = None
    transient: Optional[int] = None
    epsilons: tuple[float, ...] = (0.5, 1.0)
    pole_tolerance: float = 1e-12
    overflow_threshold: float = 1e12
    classify_tolerance: float = 1e-9
    period_tolerance: float = 1e-8
    max_period: int = 64
    out_dir: str = "."
    plot: bool = False
    jobs: int = 1
    sweep_parameter: str = "q"
    re_min: float = -2.0
    re_max: float = 2.0
    re_steps: int = 21
    im_min: float = -2.0
    im_max: float = 2.0
    im_steps: int = 21


#: Per-subcommand (n_steps, transient) used when the config leaves them unset.
_STEP_DEFAULTS = {
    "simulate": (1000, 100),
    "lyapunov": (20_000, 2_000),
    "sweep": (1000, 100),
}

_COMPLEX_FIELDS = ("p", "q", "alpha", "beta", "gamma", "a", "b", "c")
_FORM_NAMES = ("constant", "current", "lagged", "full")


def _parse_complex_field(name: str, raw: Any) -> complex:
    try:
        return parse_complex(raw)
    except ValueError as exc:
        raise ConfigError(f"field {name!r}: {exc}") from exc


def _parse_pair_list(name: str, raw: Any) -> tuple[tuple[complex, complex], ...]:
    if not isinstance(raw, (list, tuple)):
        raise ConfigError(f"field {name!r} must be a list")
    pairs = []
    for index, entry in enumerate(raw):
        label = f"{name}[{index}]"
        if isinstance(entry, dict):
            extra = set(entry) - {"p", "q", "w0", "w_minus1"}
            if extra:
                raise ConfigError(f"{label}: unexpected keys {sorted(extra)}")
            if "p" in entry or "q" in entry:
                first = _parse_complex_field(label + ".p", entry.get("p", 0.0))
                second = _parse_complex_field(label + ".q", entry.get("q", 0.0))
            else:
                first = _parse_complex_field(label + ".w0", entry.get("w0", 0.0))
                second = _parse_complex_field(
                    label + ".w_minus1", entry.get("w_minus1", 0.0)
                )
        elif isinstance(entry, (list, tuple)) and len(entry) == 2:
            first = _parse_complex_field(label + "[0]", entry[0])
            second = _parse_complex_field(label + "[1]", entry[1])
        else:
            raise ConfigError(
                f"{label} must be a two-element list or an object with named parts"
            )
        pairs.append((first, second))
    return tuple(pairs)


def _positive(name: str, value: Any) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"field {name!r} must be a number") from exc
    if not out > 0:
        raise ConfigError(f"field {name!r} must be positive")
    return out


def _int_at_least(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"field {name!r} must be an integer")
    if value < minimum:
        raise ConfigError(f"field {name!r} must be at least {minimum}")
    return value


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, config file, and flags into a validated RunConfig."""
    values: dict[str, Any] = {
        field.name: field.default for field in dataclasses.fields(RunConfig)
    }
    if getattr(args, "config", None) is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                raw = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config file must contain a JSON object")
        unknown = set(raw) - set(values)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        values.update(raw)
    for name in values:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag

    if values["form"] not in _FORM_NAMES:
        raise ConfigError(
            f"form must be one of {', '.join(_FORM_NAMES)}: got {values['form']!r}"
        )
    for name in _COMPLEX_FIELDS:
        if values[name] is not None:
            values[name] = _parse_complex_field(name, values[name])
    if values["parameter_sets"] is not None:
        values["parameter_sets"] = _parse_pair_list(
            "parameter_sets", values["parameter_sets"]
        )
    if values["seeds"] is not None:
        values["seeds"] = _parse_pair_list("seeds", values["seeds"])
    values["seed_count"] = _int_at_least("seed_count", values["seed_count"], 1)
    values["ball_radius"] = _positive("ball_radius", values["ball_radius"])
    if values["n_steps"] is not None:
        values["n_steps"] = _int_at_least("n_steps", values["n_steps"], 1)
    if values["transient"] is not None:
        values["transient"] = _int_at_least("transient", values["transient"], 0)
    if isinstance(values["epsilons"], str):
        parts = [part for part in values["epsilons"].split(",") if part.strip()]
        values["epsilons"] = parts
    if not isinstance(values["epsilons"], (list, tuple)) or not values["epsilons"]:
        raise ConfigError("field 'epsilons' must be a non-empty list of radii")
    values["epsilons"] = tuple(
        _positive(f"epsilons[{index}]", item)
        for index, item in enumerate(values["epsilons"])
    )
    for name in (
        "pole_tolerance",
        "overflow_threshold",
        "classify_tolerance",
        "period_tolerance",
    ):
        values[name] = _positive(name, values[name])
    values["max_period"] = _int_at_least("max_period", values["max_period"], 1)
    values["rng_seed"] = _int_at_least("rng_seed", values["rng_seed"], 0)
    values["jobs"] = _int_at_least("jobs", values["jobs"], 1)
    if values["sweep_parameter"] not in ("p", "q"):
        raise ConfigError("field 'sweep_parameter' must be 'p' or 'q'")
    for axis in ("re", "im"):
        values[f"{axis}_steps"] = _int_at_least(
            f"{axis}_steps", values[f"{axis}_steps"], 2
        )
        lo = float(values[f"{axis}_min"])
        hi = float(values[f"{axis}_max"])
        if not lo < hi:
            raise ConfigError(f"field '{axis}_min' must be below '{axis}_max'")
        values[f"{axis}_min"], values[f"{axis}_max"] = lo, hi
    values["plot"] = bool(values["plot"])
    values["out_dir"] = str(values["out_dir"])
    return RunConfig(**values)


def build_form(cfg: RunConfig) -> EquationForm:
    """The EquationForm a config describes; invalid coefficients are config errors."""
    if cfg.form == "full":
        missing = [
            name
            for name in ("alpha", "beta", "gamma", "a", "b", "c")
            if getattr(cfg, name) is None
        ]
        if missing:
            raise ConfigError(
                f"full form requires coefficients {', '.join(missing)}"
            )
        try:
            params = FullParameters(
                cfg.alpha, cfg.beta, cfg.gamma, cfg.a, cfg.b, cfg.c
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return EquationForm.full_form(params)
    factory = {
        "constant": EquationForm.constant,
        "current": EquationForm.current,
        "lagged": EquationForm.lagged,
    }[cfg.form]
    try:
        return factory(cfg.p, cfg.q)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _guards(cfg: RunConfig) -> Guards:
    return Guards(
        pole_tolerance=cfg.pole_tolerance,
        overflow_threshold=cfg.overflow_threshold,
    )


def _with_steps(cfg: RunConfig, command: str) -> RunConfig:
    n_default, t_default = _STEP_DEFAULTS[command]
    n = cfg.n_steps if cfg.n_steps is not None else n_default
    t = cfg.transient if cfg.transient is not None else t_default
    if not 0 <= t < n:
        raise ConfigError(
            f"transient ({t}) must be at least 0 and below n_steps ({n})"
        )
    return dataclasses.replace(cfg, n_steps=n, transient=t)


def _describe_form(form: EquationForm) -> dict[str, Any]:
    if form.kind is FormKind.FULL:
        fp = form.full
        assert fp is not None
        return {
            "kind": form.kind.value,
            "alpha": fp.alpha,
            "beta": fp.beta,
            "gamma": fp.gamma,
            "a": fp.a,
            "b": fp.b,
            "c": fp.c,
        }
    return {"kind": form.kind.value, "p": form.p, "q": form.q}


def _document(cfg: RunConfig, command: str) -> dict[str, Any]:
    return {"version": __version__, "command": command, "config": cfg}


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _write_json(path: str, document: Any) -> None:
    _write_text(path, dumps_json(document))


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, bool):
                cells.append("true" if cell else "false")
            elif isinstance(cell, int):
                cells.append(str(cell))
            elif isinstance(cell, float):
                cells.append(format_float(cell))
            else:
                cells.append(str(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _draw_seeds(cfg: RunConfig) -> list[tuple[complex, complex]]:
    """Explicit seed pairs, or (w0, w_minus1) draws from the seeded ball."""
    if cfg.seeds is not None:
        if not cfg.seeds:
            raise ConfigError("field 'seeds' must not be empty")
        return list(cfg.seeds)
    rng = random.Random(cfg.rng_seed)
    return [
        (sample_ball(rng, cfg.ball_radius), sample_ball(rng, cfg.ball_radius))
        for _ in range(cfg.seed_count)
    ]


def _analysis_form(cfg: RunConfig) -> tuple[EquationForm, Optional[dict[str, Any]]]:
    """Normal form to analyze, reducing a full form first when needed."""
    form = build_form(cfg)
    if form.kind is not FormKind.FULL:
        return form, None
    assert form.full is not None
    reduction = reduce_full(form.full)
    info = {
        "kind": reduction.form.kind.value,
        "p": reduction.form.p,
        "q": reduction.form.q,
        "scale": reduction.scale,
        "exact": reduction.exact,
    }
    return reduction.form, info


def _period2_block(
    form: EquationForm, guards: Guards
) -> dict[str, Any]:
    try:
        cycles = period2_cycles(form, guards)
    except NoPrimePeriodTwoError as exc:
        return {"cycles": [], "note": str(exc)}
    entries = []
    for cycle in cycles:
        entries.append(
            {
                "phi": cycle.phi,
                "psi": cycle.psi,
                "jacobian": [list(row) for row in cycle.jacobian],
                "chi": cycle.chi,
                "chi_modulus": abs(cycle.chi),
                "lambda": cycle.lam,
                "lambda_modulus": abs(cycle.lam),
                "eigenvalues": list(cycle.eigenvalues),
                "jury_criterion": cycle.jury_criterion,
                "eigen_criterion": cycle.eigen_criterion,
                "residual": cycle.residual,
            }
        )
    return {"cycles": entries, "note": None}


def cmd_analyze(cfg: RunConfig) -> int:
    work_form, reduction_info = _analysis_form(cfg)
    guards = _guards(cfg)
    document = _document(cfg, "analyze")
    document["form"] = _describe_form(build_form(cfg))
    if reduction_info is not None:
        document["reduction"] = reduction_info
    entries = []
    for eq in equilibria(work_form, guards):
        lin = linearize(work_form, eq)
        entries.append(
            {
                "value": eq.value,
                "branch": eq.branch.value,
                "residual": eq.residual,
                "note": eq.note,
                "linearization": {
                    "a0": lin.a0,
                    "a1": lin.a1,
                    "roots": list(lin.roots),
                    "root_moduli": [abs(r) for r in lin.roots],
                    "clark_sum": lin.clark_sum,
                },
                "clark": clark_test(lin),
                "classification": classify(lin, cfg.classify_tolerance).value,
            }
        )
    document["equilibria"] = entries
    document["boundedness"] = [
        boundedness_condition(work_form, epsilon) for epsilon in cfg.epsilons
    ]
    document["period2"] = _period2_block(work_form, guards)
    os.makedirs(cfg.out_dir, exist_ok=True)
    path = os.path.join(cfg.out_dir, "analyze.json")
    _write_json(path, document)
    print(f"wrote {path}")
    return EXIT_OK


def cmd_period2(cfg: RunConfig) -> int:
    work_form, reduction_info = _analysis_form(cfg)
    document = _document(cfg, "period2")
    document["form"] = _describe_form(build_form(cfg))
    if reduction_info is not None:
        document["reduction"] = reduction_info
    document["period2"] = _period2_block(work_form, _guards(cfg))
    os.makedirs(cfg.out_dir, exist_ok=True)
    path = os.path.join(cfg.out_dir, "period2.json")
    _write_json(path, document)
    print(f"wrote {path}")
    return EXIT_OK


def cmd_simulate(cfg: RunConfig) -> int:
    cfg = _with_steps(cfg, "simulate")
    form = build_form(cfg)
    guards = _guards(cfg)
    seeds = _draw_seeds(cfg)
    os.makedirs(cfg.out_dir, exist_ok=True)
    assert cfg.transient is not None and cfg.n_steps is not None
    orbit_files = []
    orbit_reports = []
    plot_groups = []
    plot_labels = []
    for index, (w0, w_minus1) in enumerate(seeds):
        orb = orbit(form, w0, w_minus1, cfg.n_steps, guards)
        name = f"orbit_{index:02d}.csv"
        rows = [
            (step_index - 1, z.real, z.imag, abs(z))
            for step_index, z in enumerate(orb.samples)
        ]
        _write_text(
            os.path.join(cfg.out_dir, name),
            _csv_text(("step", "re", "im", "modulus"), rows),
        )
        orbit_files.append(name)
        note = None
        try:
            period = detect_period(orb, cfg.period_tolerance, cfg.max_period)
        except InsufficientSamplesError as exc:
            period = None
            note = str(exc)
        final = orb.samples[-1]
        orbit_reports.append(
            {
                "index": index,
                "w0": w0,
                "w_minus1": w_minus1,
                "file": name,
                "termination": orb.termination.value,
                "n_samples": len(orb.samples),
                "final_value": final,
                "final_modulus": abs(final),
                "detected_period": period,
                "note": note,
            }
        )
        tail = orb.samples[cfg.transient + 1 :]
        plot_groups.append(tail if tail else orb.samples)
        plot_labels.append(f"seed {index}")
    document = _document(cfg, "simulate")
    document["form"] = _describe_form(form)
    document["orbits"] = orbit_reports
    document["files"] = orbit_files
    if cfg.plot:
        from . import plotting

        svg_name = "orbit.svg"
        kind = form.kind.value
        plotting.scatter_complex(
            plot_groups,
            os.path.join(cfg.out_dir, svg_name),
            title=f"{kind} form orbit scatter ({len(seeds)} seeds)",
            labels=plot_labels,
        )
        document["files"] = orbit_files + [svg_name]
    path = os.path.join(cfg.out_dir, "simulate.json")
    _write_json(path, document)
    print(f"wrote {path}")
    return EXIT_OK


def _parameter_sets(cfg: RunConfig) -> list[tuple[complex, complex]]:
    if cfg.parameter_sets is not None:
        if not cfg.parameter_sets:
            raise ConfigError("field 'parameter_sets' must not be empty")
        if cfg.form == "full":
            raise ConfigError("parameter_sets applies to the normal forms only")
        return list(cfg.parameter_sets)
    return [(cfg.p, cfg.q)]


def cmd_lyapunov(cfg: RunConfig) -> int:
    cfg = _with_steps(cfg, "lyapunov")
    if cfg.seed_count < 2:
        raise ConfigError("lyapunov scans need seed_count of at least 2")
    guards = _guards(cfg)
    assert cfg.n_steps is not None and cfg.transient is not None
    if cfg.form == "full":
        forms = [build_form(cfg)]
        sets: list[Optional[tuple[complex, complex]]] = [None]
        _ = _parameter_sets(cfg)  # still rejects an explicit empty list
    else:
        pairs = _parameter_sets(cfg)
        factory = {
            "constant": EquationForm.constant,
            "current": EquationForm.current,
            "lagged": EquationForm.lagged,
        }[cfg.form]
        forms = [factory(p, q) for p, q in pairs]
        sets = list(pairs)
    rows = []
    detail = []
    for index, form in enumerate(forms):
        report = lyapunov_scan(
            form,
            seed_count=cfg.seed_count,
            n_steps=cfg.n_steps,
            transient=cfg.transient,
            ball_radius=cfg.ball_radius,
            rng_seed=cfg.rng_seed,
            guards=guards,
            jobs=cfg.jobs,
        )
        pair = sets[index]
        p_re = format_float(pair[0].real) if pair is not None else ""
        p_im = format_float(pair[0].imag) if pair is not None else ""
        q_re = format_float(pair[1].real) if pair is not None else ""
        q_im = format_float(pair[1].imag) if pair is not None else ""
        rows.append(
            (
                index,
                p_re,
                p_im,
                q_re,
                q_im,
                report.min_exponent,
                report.max_exponent,
                report.mean_exponent,
                report.fraction_positive,
                cfg.seed_count,
                cfg.n_steps,
                report.excluded,
            )
        )
        detail.append(
            {
                "index": index,
                "form": _describe_form(form),
                "min_exponent": report.min_exponent,
                "max_exponent": report.max_exponent,
                "mean_exponent": report.mean_exponent,
                "fraction_positive": report.fraction_positive,
                "excluded": report.excluded,
                "any_floor": report.any_floor,
                "estimates": [
                    {
                        "exponent": est.exponent,
                        "seed_pair": list(est.seed_pair),
                        "status": est.status.value,
                        "n_iterations": est.n_iterations,
                        "transient_discarded": est.transient_discarded,
                        "retained": est.retained,
                        "floor_hit": est.floor_hit,
                        "convergence_trace": list(est.convergence_trace),
                    }
                    for est in report.estimates
                ],
            }
        )
    os.makedirs(cfg.out_dir, exist_ok=True)
    header = (
        "index",
        "p_re",
        "p_im",
        "q_re",
        "q_im",
        "min_exponent",
        "max_exponent",
        "mean_exponent",
        "fraction_positive",
        "seed_count",
        "n_steps",
        "excluded",
    )
    csv_path = os.path.join(cfg.out_dir, "lyapunov.csv")
    _write_text(csv_path, _csv_text(header, rows))
    document = _document(cfg, "lyapunov")
    document["scans"] = detail
    json_path = os.path.join(cfg.out_dir, "lyapunov.json")
    _write_json(json_path, document)
    print(f"wrote {csv_path}")
    print(f"wrote {json_path}")
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    cfg = _with_steps(cfg, "sweep")
    if cfg.form == "full":
        raise ConfigError("sweep requires one of the normal forms")
    if cfg.seed_count < 2:
        raise ConfigError("sweep scans need seed_count of at least 2")
    guards = _guards(cfg)
    assert cfg.n_steps is not None and cfg.transient is not None
    factory = {
        "constant": EquationForm.constant,
        "current": EquationForm.current,
        "lagged": EquationForm.lagged,
    }[cfg.form]
    re_values = [
        cfg.re_min + (cfg.re_max - cfg.re_min) * i / (cfg.re_steps - 1)
        for i in range(cfg.re_steps)
    ]
    im_values = [
        cfg.im_min + (cfg.im_max - cfg.im_min) * i / (cfg.im_steps - 1)
        for i in range(cfg.im_steps)
    ]
    rows = []
    grid = []
    for im in im_values:
        grid_row = []
        for re in re_values:
            value = complex(re, im)
            if cfg.sweep_parameter == "p":
                form = factory(value, cfg.q)
            else:
                form = factory(cfg.p, value)
            report = lyapunov_scan(
                form,
                seed_count=cfg.seed_count,
                n_steps=cfg.n_steps,
                transient=cfg.transient,
                ball_radius=cfg.ball_radius,
                rng_seed=cfg.rng_seed,
                guards=guards,
                jobs=cfg.jobs,
            )
            rows.append(
                (
                    re,
                    im,
                    report.mean_exponent,
                    report.fraction_positive,
                    report.excluded,
                )
            )
            grid_row.append(report.mean_exponent)
        grid.append(grid_row)
    os.makedirs(cfg.out_dir, exist_ok=True)
    csv_path = os.path.join(cfg.out_dir, "sweep.csv")
    _write_text(
        csv_path,
        _csv_text(
            ("re", "im", "mean_exponent", "fraction_positive", "excluded"), rows
        ),
    )
    document = _document(cfg, "sweep")
    document["re_values"] = re_values
    document["im_values"] = im_values
    document["mean_exponent_grid"] = grid
    json_path = os.path.join(cfg.out_dir, "sweep.json")
    _write_json(json_path, document)
    print(f"wrote {csv_path}")
    print(f"wrote {json_path}")
    if cfg.plot:
        from . import plotting

        svg_path = os.path.join(cfg.out_dir, "sweep.svg")
        plotting.exponent_heatmap(
            re_values,
            im_values,
            grid,
            svg_path,
            title=f"mean largest exponent over {cfg.sweep_parameter}-plane",
            xlabel=f"Re {cfg.sweep_parameter}",
            ylabel=f"Im {cfg.sweep_parameter}",
        )
        print(f"wrote {svg_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override it")
    common.add_argument("--form", choices=_FORM_NAMES, default=None)
    for name in _COMPLEX_FIELDS:
        common.add_argument(
            f"--{name}",
            default=None,
            metavar="COMPLEX",
            help=f"coefficient {name}, e.g. '0.5+0.25i'",
        )
    common.add_argument("--seed-count", type=int, default=None)
    common.add_argument("--ball-radius", type=float, default=None)
    common.add_argument("--rng-seed", type=int, default=None)
    common.add_argument("--n-steps", type=int, default=None)
    common.add_argument("--transient", type=int, default=None)
    common.add_argument(
        "--epsilons", default=None, help="comma-separated ball radii for boundedness"
    )
    common.add_argument("--pole-tolerance", type=float, default=None)
    common.add_argument("--overflow-threshold", type=float, default=None)
    common.add_argument("--classify-tolerance", type=float, default=None)
    common.add_argument("--period-tolerance", type=float, default=None)
    common.add_argument("--max-period", type=int, default=None)
    common.add_argument("--out-dir", default=None)
    common.add_argument(
        "--plot", action=argparse.BooleanOptionalAction, default=None
    )
    common.add_argument("--jobs", type=int, default=None)
    common.add_argument("--sweep-parameter", choices=("p", "q"), default=None)
    common.add_argument("--re-min", type=float, default=None)
    common.add_argument("--re-max", type=float, default=None)
    common.add_argument("--re-steps", type=int, default=None)
    common.add_argument("--im-min", type=float, default=None)
    common.add_argument("--im-max", type=float, default=None)
    common.add_argument("--im-steps", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="ratdiff",
        description="Equilibria, cycles, boundedness, and chaos detection "
        "for a family of complex rational difference equations.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser(
        "analyze",
        parents=[common],
        help="equilibria, stability, boundedness, and cycles as one JSON report",
    )
    subparsers.add_parser(
        "simulate", parents=[common], help="orbits to CSV with an optional SVG scatter"
    )
    subparsers.add_parser(
        "lyapunov", parents=[common], help="largest-exponent scan to CSV and JSON"
    )
    subparsers.add_parser(
        "period2", parents=[common], help="period-two cycles and their stability"
    )
    subparsers.add_parser(
        "sweep", parents=[common], help="exponent grid over one parameter plane"
    )
    return parser


_COMMANDS = {
    "analyze": cmd_analyze,
    "simulate": cmd_simulate,
    "lyapunov": cmd_lyapunov,
    "period2": cmd_period2,
    "sweep": cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RatdiffError as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
