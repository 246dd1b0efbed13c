"""Command-line front end: ``vsc-rate``.

Without ``--sweep`` or ``--preset`` a single parameter point is evaluated
and printed as ``name value`` lines. Otherwise the sweep is written as CSV.

Exit codes: 0 success, 2 usage error, 3 domain error at a single point,
4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import perturbation as pert
from .model import DomainError, Mode
from .rates import correction_breakdown
from .spectrum import SpectrumError
from .sweep import PRESETS, RunConfig, SweepSpec, UsageError, emit_plot_script, preset, run_sweep, write_csv

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

_FLOAT_KEYS = ("omega", "omega_b", "eta", "eta_b", "e_a", "omega_c", "beta")
_BOOL_KEYS = ("with_perturbative", "with_centroid", "tie_eta")
_CONFIG_KEYS = _FLOAT_KEYS + _BOOL_KEYS + ("n", "mode", "sweep", "preset", "columns", "workers")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vsc-rate",
        description="Cavity-modified quantum TST corrections under vibrational strong coupling. "
                    "Frequencies are in units of a reference frequency, hbar = 1.",
    )
    p.add_argument("--preset", help="figure preset (see --list-presets)")
    p.add_argument("--list-presets", action="store_true", help="describe presets and exit")
    p.add_argument("--config", type=Path, help="key = value file; flags override it")
    for key, text in [
        ("omega", "well vibrational frequency"),
        ("omega-b", "barrier frequency magnitude"),
        ("eta", "well coupling strength"),
        ("eta-b", "barrier coupling strength"),
        ("e-a", "activation energy"),
        ("omega-c", "cavity frequency"),
        ("beta", "inverse temperature"),
    ]:
        p.add_argument(f"--{key}", type=float, help=text)
    p.add_argument("--n", type=int, help="number of molecules")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--sweep", metavar="VAR:START:STOP:STEPS[:log]")
    p.add_argument("--columns", help="comma-separated output columns")
    p.add_argument("--out", type=Path, help="CSV destination (default: stdout)")
    p.add_argument("--plot-script", type=Path, help="also write a plotting script (presets only)")
    p.add_argument("--with-perturbative", action="store_true", default=None)
    p.add_argument("--with-centroid", action="store_true", default=None)
    p.add_argument("--tie-eta", action="store_true", default=None,
                   help="eta_b follows eta when eta is set or swept")
    p.add_argument("--workers", type=int, help="threads for sweeps (output is identical)")
    return p


def read_config(path: Path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def _coerce(settings: dict) -> dict:
    out = {}
    for key, value in settings.items():
        if value is None:
            continue
        if not isinstance(value, str):
            out[key] = value
            continue
        try:
            if key in _FLOAT_KEYS:
                out[key] = float(value)
            elif key in ("n", "workers"):
                out[key] = int(value)
            elif key in _BOOL_KEYS:
                if value.lower() not in ("1", "0", "true", "false", "yes", "no"):
                    raise ValueError(value)
                out[key] = value.lower() in ("1", "true", "yes")
            else:
                out[key] = value
        except ValueError:
            raise UsageError(f"bad value for {key}: {value!r}") from None
    return out


def _merge(args: argparse.Namespace) -> dict:
    settings = read_config(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            settings[key] = v
    return _coerce(settings)


def _config_from(settings: dict) -> tuple[RunConfig, bool]:
    """Build the run configuration; the flag says whether this is a sweep."""
    base = preset(settings["preset"]) if "preset" in settings else RunConfig()
    tie = settings.get("tie_eta", base.tie_eta)
    rp_kw = {k: settings[k] for k in ("omega", "omega_b", "eta", "eta_b", "e_a") if k in settings}
    if tie and "eta" in rp_kw and "eta_b" not in rp_kw:
        rp_kw["eta_b"] = rp_kw["eta"]
    cs_kw = {k: settings[k] for k in ("omega_c", "beta") if k in settings}
    if "n" in settings:
        cs_kw["n_molecules"] = settings["n"]
    if "mode" in settings:
        cs_kw["mode"] = settings["mode"]
    rp = replace(base.reaction, **rp_kw)
    cs = replace(base.cavity, **cs_kw)
    cfg_kw = dict(reaction=rp, cavity=cs, tie_eta=tie)
    if "sweep" in settings:
        cfg_kw["sweep"] = SweepSpec.parse(settings["sweep"])
    if "columns" in settings:
        cfg_kw["outputs"] = tuple(c.strip() for c in settings["columns"].split(",") if c.strip())
    if "with_perturbative" in settings:
        cfg_kw["include_perturbative"] = settings["with_perturbative"]
    if "with_centroid" in settings:
        cfg_kw["include_centroid"] = settings["with_centroid"]
    is_sweep = "preset" in settings or "sweep" in settings
    return replace(base, **cfg_kw), is_sweep


def _fmt(v) -> str:
    return "nan" if v is None else f"{v:.12g}"


def single_point_lines(cfg: RunConfig) -> list[str]:
    rp, cs = cfg.reaction, cfg.cavity
    br = correction_breakdown(rp, cs)
    lines = [
        ("lambda_plus", br.well.lambda_plus),
        ("lambda_minus", br.well.lambda_minus),
    ]
    lines += [(f"lambda_b{i + 1}", f) for i, f in enumerate(br.barrier.stable)]
    lines += [
        ("lambda_unstable", br.barrier.lambda_unstable),
        ("S", br.s_shift),
        ("kappa", br.kappa),
        ("kappa_star", br.kappa_star),
        ("kappa_gh", br.kappa_gh),
        ("kappa_zpe", br.kappa_zpe),
        ("kappa_interp", br.kappa_interp),
        ("delta_g", br.delta_g),
    ]
    if cfg.include_centroid:
        if br.crossover is not None:
            raise DomainError(f"centroid correction undefined: {br.crossover} is past the crossover temperature")
        lines.append(("kappa_centroid", br.kappa_centroid))
    if cfg.include_perturbative:
        rep = pert.perturbative_report(rp, cs)
        lines += [
            ("lambda_plus_p", rep.lambda_plus_p),
            ("lambda_minus_p", rep.lambda_minus_p),
            ("lambda_b_p", rep.lambda_b_p),
            ("lambda_unstable_p", rep.lambda_unstable_p),
            ("sum_well_p", rep.sum_well_p),
            ("S_p", rep.s_shift_p),
        ]
    return [f"{name} {_fmt(v)}" for name, v in lines]


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.list_presets:
        for name, (text, _) in PRESETS.items():
            print(f"{name:6s} {text}")
        return 0

    try:
        settings = _merge(args)
        cfg, is_sweep = _config_from(settings)
        if args.plot_script is not None and (cfg.name is None or args.out is None):
            raise UsageError("--plot-script needs --preset and --out")
    except (UsageError, DomainError, TypeError) as exc:
        print(f"vsc-rate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"vsc-rate: error: {exc}", file=sys.stderr)
        return EXIT_IO

    if not is_sweep:
        try:
            lines = single_point_lines(cfg)
        except (DomainError, SpectrumError) as exc:
            print(f"vsc-rate: domain error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        print("\n".join(lines))
        return 0

    table = run_sweep(cfg, workers=max(1, settings.get("workers", 1)))
    try:
        write_csv(table, args.out if args.out is not None else sys.stdout)
        if args.plot_script is not None:
            emit_plot_script(table, args.plot_script, csv_path=args.out.name)
    except OSError as exc:
        print(f"vsc-rate: error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
