"""Parameter sweeps, figure presets and CSV output.

A sweep evaluates every grid point independently. Failures local to a point
(crossover temperature, perturbative resonance, invalid parameters) become
empty cells plus a ``status`` entry, so a sweep always runs to completion.
Rows are emitted in grid order whatever the number of worker threads.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import perturbation as pert
from .model import CavitySetup, DomainError, Mode, ReactionParams
from .rates import ChannelSpec, branching_ratio, correction_breakdown, selectivity_estimate
from .spectrum import SpectrumError

__all__ = [
    "UsageError",
    "SweepSpec",
    "Curve",
    "RunConfig",
    "SweepTable",
    "BASE_COLUMNS",
    "PERTURBATIVE_COLUMNS",
    "ALL_COLUMNS",
    "PRESETS",
    "preset",
    "run_sweep",
    "evaluate_point",
    "write_csv",
    "emit_plot_script",
]

SWEEP_VARIABLES = ("omega_c", "beta", "eta", "n_molecules")
CURVE_VARIABLES = ("beta", "eta", "eta_b", "eta_b2", "n_molecules", "mode", "omega_b")

BASE_COLUMNS = (
    "lambda_plus", "lambda_minus", "lambda_b1", "lambda_b2", "lambda_unstable",
    "S", "kappa", "kappa_star", "kappa_gh", "kappa_zpe", "kappa_centroid", "delta_g",
)
PERTURBATIVE_COLUMNS = (
    "lambda_plus_p", "lambda_minus_p", "lambda_b_p", "lambda_unstable_p", "sum_well_p", "S_p",
)
EXTRA_COLUMNS = ("kappa_interp", "phi1", "selectivity")
ALL_COLUMNS = BASE_COLUMNS + PERTURBATIVE_COLUMNS + EXTRA_COLUMNS


class UsageError(ValueError):
    """Invalid sweep or run configuration."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str = "omega_c"
    start: float = 0.25
    stop: float = 4.0
    steps: int = 151
    scale: str = "linear"

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise UsageError(f"unknown sweep variable {self.variable!r}; choose from {SWEEP_VARIABLES}")
        if self.scale not in ("linear", "log"):
            raise UsageError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if not (isinstance(self.steps, int) and self.steps >= 2):
            raise UsageError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise UsageError("sweep bounds must be finite")
        if not 0 < self.start < self.stop:
            raise UsageError(f"need 0 < start < stop, got {self.start}, {self.stop}")

    def grid(self) -> list:
        if self.scale == "log":
            pts = np.geomspace(self.start, self.stop, self.steps)
        else:
            pts = np.linspace(self.start, self.stop, self.steps)
        if self.variable != "n_molecules":
            return [float(p) for p in pts]
        ints = []
        for p in pts:
            n = max(1, int(round(p)))
            if n not in ints:
                ints.append(n)
        return ints

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        """Parse ``VAR:START:STOP:STEPS[:log|:linear]``."""
        parts = text.split(":")
        if len(parts) not in (4, 5):
            raise UsageError(f"sweep must look like VAR:START:STOP:STEPS[:log], got {text!r}")
        try:
            start, stop, steps = float(parts[1]), float(parts[2]), int(parts[3])
        except ValueError:
            raise UsageError(f"bad numbers in sweep {text!r}") from None
        scale = parts[4] if len(parts) == 5 else "linear"
        return cls(parts[0], start, stop, steps, scale)


@dataclass(frozen=True)
class Curve:
    """One extra parameter taking a handful of values, one sweep per value."""

    variable: str
    values: tuple

    def __post_init__(self):
        if self.variable not in CURVE_VARIABLES:
            raise UsageError(f"unknown curve variable {self.variable!r}")
        if not self.values:
            raise UsageError("a curve needs at least one value")


@dataclass(frozen=True)
class RunConfig:
    reaction: ReactionParams = field(default_factory=ReactionParams)
    cavity: CavitySetup = field(default_factory=CavitySetup)
    sweep: SweepSpec = field(default_factory=SweepSpec)
    outputs: tuple | None = None
    include_perturbative: bool = False
    include_centroid: bool = False
    tie_eta: bool = False
    curve: Curve | None = None
    channel2: ChannelSpec | None = None
    name: str | None = None

    def __post_init__(self):
        if self.outputs is not None:
            unknown = [c for c in self.outputs if c not in ALL_COLUMNS]
            if unknown:
                raise UsageError(f"unknown output columns {unknown}; valid: {', '.join(ALL_COLUMNS)}")
        if self.outputs and ("phi1" in self.outputs or "selectivity" in self.outputs) and self.channel2 is None:
            raise UsageError("phi1/selectivity need a second channel")

    def columns(self) -> tuple:
        if self.outputs is not None:
            wanted = set(self.outputs)
        else:
            wanted = set(BASE_COLUMNS) - {"kappa_centroid"}
            if self.include_centroid:
                wanted.add("kappa_centroid")
            if self.include_perturbative:
                wanted.update(PERTURBATIVE_COLUMNS)
            if self.channel2 is not None:
                wanted.update(("phi1", "selectivity"))
        head = ("param", "value")
        if self.curve is not None:
            head += ("curve_param", "curve_value")
        return head + tuple(c for c in ALL_COLUMNS if c in wanted) + ("status",)


@dataclass
class SweepTable:
    columns: tuple
    rows: list
    preset: str | None = None


def _with(rp: ReactionParams, cs: CavitySetup, ch2, var: str, value, tie_eta: bool):
    if var == "omega_c":
        cs = replace(cs, omega_c=value)
    elif var == "beta":
        cs = replace(cs, beta=value)
    elif var == "n_molecules":
        cs = replace(cs, n_molecules=value)
    elif var == "mode":
        cs = replace(cs, mode=value)
    elif var == "eta":
        rp = replace(rp, eta=value, eta_b=value if tie_eta else rp.eta_b)
    elif var == "eta_b":
        rp = replace(rp, eta_b=value)
    elif var == "omega_b":
        rp = replace(rp, omega_b=value)
    elif var == "eta_b2":
        ch2 = replace(ch2, eta_b=value)
    return rp, cs, ch2


def evaluate_point(cfg: RunConfig, rp: ReactionParams, cs: CavitySetup, ch2=None) -> dict:
    """All column values at one parameter point, plus a ``status`` string."""
    cols = set(cfg.columns())
    out: dict = {}
    status = []
    try:
        br = correction_breakdown(rp, cs)
    except (DomainError, SpectrumError) as exc:
        return {"status": f"error:{type(exc).__name__}"}
    stable = br.barrier.stable
    out.update(
        lambda_plus=br.well.lambda_plus,
        lambda_minus=br.well.lambda_minus,
        lambda_b1=stable[0],
        lambda_b2=stable[1] if len(stable) > 1 else None,
        lambda_unstable=br.barrier.lambda_unstable,
        S=br.s_shift,
        kappa=br.kappa,
        kappa_star=br.kappa_star,
        kappa_gh=br.kappa_gh,
        kappa_zpe=br.kappa_zpe,
        kappa_centroid=br.kappa_centroid,
        delta_g=br.delta_g,
        kappa_interp=br.kappa_interp,
    )
    if "kappa_centroid" in cols and br.crossover is not None:
        status.append(f"crossover:{br.crossover}")
    if cols & set(PERTURBATIVE_COLUMNS):
        rep = pert.perturbative_report(rp, cs)
        out.update(
            lambda_plus_p=rep.lambda_plus_p,
            lambda_minus_p=rep.lambda_minus_p,
            lambda_b_p=rep.lambda_b_p,
            lambda_unstable_p=rep.lambda_unstable_p,
            sum_well_p=rep.sum_well_p,
            S_p=rep.s_shift_p,
        )
        if not rep.valid and cols & {"lambda_plus_p", "lambda_minus_p"}:
            status.append("resonance")
    if ch2 is not None and cols & {"phi1", "selectivity"}:
        ch1 = ChannelSpec(rp.omega_b, rp.eta_b, rp.e_a)
        out["phi1"] = branching_ratio(ch1, ch2, rp.omega, rp.eta, cs)
        out["selectivity"] = selectivity_estimate(ch1, ch2, rp.omega, cs)
    out["status"] = ";".join(status) if status else "ok"
    return out


def _tasks(cfg: RunConfig):
    curve_vals = cfg.curve.values if cfg.curve is not None else (None,)
    for cv in curve_vals:
        for x in cfg.sweep.grid():
            yield cv, x


def run_sweep(cfg: RunConfig, workers: int = 1) -> SweepTable:
    """Evaluate ``cfg`` on its grid (times its curve values).

    Parameters
    ----------
    cfg : RunConfig
    workers : int
        Thread count. Output is identical for any value.

    Returns
    -------
    SweepTable
        One row per (curve value, grid point), in that nesting order.
    """
    columns = cfg.columns()
    var = cfg.sweep.variable

    def one(task):
        cv, x = task
        rp, cs, ch2 = cfg.reaction, cfg.cavity, cfg.channel2
        try:
            if cfg.curve is not None:
                rp, cs, ch2 = _with(rp, cs, ch2, cfg.curve.variable, cv, cfg.tie_eta)
            rp, cs, ch2 = _with(rp, cs, ch2, var, x, cfg.tie_eta)
        except DomainError as exc:
            vals = {"status": f"error:{type(exc).__name__}"}
        else:
            vals = evaluate_point(cfg, rp, cs, ch2)
        head = {"param": var, "value": x}
        if cfg.curve is not None:
            head.update(curve_param=cfg.curve.variable, curve_value=cv)
        vals = {**vals, **head}
        return tuple(vals.get(c) for c in columns)

    tasks = list(_tasks(cfg))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, tasks))
    else:
        rows = [one(t) for t in tasks]
    return SweepTable(columns, rows, cfg.name)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Mode):
        return v.value
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        if math.isnan(v):
            return ""
        return f"{float(v):.11e}"
    return str(v)


def write_csv(table: SweepTable, destination) -> None:
    """Write ``table`` as CSV to a path or an open text stream.

    Floats use 12 significant digits in scientific notation; missing values
    are empty cells. The bytes depend only on the table contents.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.columns)
    for row in table.rows:
        w.writerow([_cell(v) for v in row])
    text = buf.getvalue()
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="")


# ---------------------------------------------------------------------------
# presets

_OMEGA_C = SweepSpec("omega_c", 0.25, 4.0, 151)
_FIG_RP = ReactionParams(omega=1.0, omega_b=0.5, e_a=0.0, eta=0.1, eta_b=0.1)
_ETA_CURVES = (0.05, 0.1, 0.15)
_N_CURVES = (1, 2, 4, 8, 16, 32)


def _cfg(name, sweep=_OMEGA_C, rp=_FIG_RP, beta=10.0, n=1, mode=Mode.INCOHERENT, **kw):
    return RunConfig(
        reaction=rp,
        cavity=CavitySetup(omega_c=1.0, n_molecules=n, mode=mode, beta=beta),
        sweep=sweep,
        name=name,
        **kw,
    )


PRESETS = {
    "fig1": ("kappa, kappa_gh and kappa_zpe vs omega_c at beta in {1, 5, 10}; "
             "eta = eta_b = 0.1, omega_b = 0.5",
             lambda: _cfg("fig1", curve=Curve("beta", (1.0, 5.0, 10.0)),
                          outputs=("S", "kappa", "kappa_gh", "kappa_zpe"))),
    "fig2a": ("well polaritons lambda_+/- vs omega_c at eta = 0.1",
              lambda: _cfg("fig2a", outputs=("lambda_plus", "lambda_minus"), tie_eta=True)),
    "fig2b": ("S (exact and perturbative) vs omega_c for eta = eta_b in {0.05, 0.1, 0.15}, beta = 10",
              lambda: _cfg("fig2b", curve=Curve("eta", _ETA_CURVES), tie_eta=True,
                           outputs=("S", "S_p"))),
    "fig2c": ("kappa vs omega_c for eta = eta_b in {0.05, 0.1, 0.15}, beta = 10",
              lambda: _cfg("fig2c", curve=Curve("eta", _ETA_CURVES), tie_eta=True,
                           outputs=("S", "kappa"))),
    "fig2d": ("kappa vs eta = eta_b in [0.005, 0.2] at omega_c = 1, beta = 10",
              lambda: _cfg("fig2d", sweep=SweepSpec("eta", 0.005, 0.2, 151), tie_eta=True,
                           outputs=("S", "kappa", "kappa_zpe"))),
    "fig3": ("branching ratio phi1 vs omega_c in [0.05, 4]; channel 1 (omega_b = 0.5, eta_b = 0.1), "
             "channel 2 (omega_b = 1.2, eta_b in {0.10, 0.11, 0.12}), eta = 0.1, beta = 5",
             lambda: _cfg("fig3", sweep=SweepSpec("omega_c", 0.05, 4.0, 151), beta=5.0,
                          channel2=ChannelSpec(omega_b=1.2, eta_b=0.12),
                          curve=Curve("eta_b2", (0.10, 0.11, 0.12)),
                          outputs=("phi1", "selectivity"))),
    "fig4a": ("incoherent kappa vs omega_c for N in {1, 2, 4, 8, 16, 32}, beta = 10",
              lambda: _cfg("fig4a", curve=Curve("n_molecules", _N_CURVES),
                           outputs=("S", "lambda_unstable", "kappa"))),
    "fig4b": ("coherent kappa vs omega_c for N in {1, 2, 4, 8, 16, 32}, beta = 10",
              lambda: _cfg("fig4b", curve=Curve("n_molecules", _N_CURVES), mode=Mode.COHERENT,
                           outputs=("S", "lambda_unstable", "kappa"))),
    "fig4c": ("coherent vs incoherent kappa vs N in {1, 2, 4, 8, 16, 32} at omega_c = 1, beta = 10",
              lambda: _cfg("fig4c", sweep=SweepSpec("n_molecules", 1, 32, 6, "log"),
                           curve=Curve("mode", ("incoherent", "coherent")),
                           outputs=("S", "kappa"))),
    "fig5": ("kappa_centroid vs omega_c at beta in {1, 5, 10}; crossover cells left empty",
             lambda: _cfg("fig5", curve=Curve("beta", (1.0, 5.0, 10.0)), include_centroid=True,
                          outputs=("kappa", "kappa_centroid"))),
    "s1a": ("kappa vs omega_c at beta in {1, 5, 10, 20}",
            lambda: _cfg("s1a", curve=Curve("beta", (1.0, 5.0, 10.0, 20.0)), outputs=("kappa",))),
    "s1b": ("kappa vs beta in [0.1, 50] (log grid) at omega_c = 1",
            lambda: _cfg("s1b", sweep=SweepSpec("beta", 0.1, 50.0, 151, "log"),
                         outputs=("kappa", "kappa_gh", "kappa_zpe"))),
    "s2": ("S and lambda_unstable, exact and perturbative, vs omega_c for eta = eta_b in "
           "{0.05, 0.1, 0.2}",
           lambda: _cfg("s2", curve=Curve("eta", (0.05, 0.1, 0.2)), tie_eta=True,
                        outputs=("S", "S_p", "lambda_unstable", "lambda_unstable_p"))),
    "s3": ("omega_b = 1.5: S (exact and perturbative) and kappa vs omega_c at beta in {1, 5, 10}",
           lambda: _cfg("s3", rp=replace(_FIG_RP, omega_b=1.5),
                        curve=Curve("beta", (1.0, 5.0, 10.0)), outputs=("S", "S_p", "kappa"))),
    "s4": ("incoherent S and lambda_unstable vs omega_c for N in {1, 2, 4, 8, 16, 32} "
           "with the N-independent perturbative values",
           lambda: _cfg("s4", curve=Curve("n_molecules", _N_CURVES),
                        outputs=("S", "S_p", "lambda_unstable", "lambda_unstable_p"))),
}


def preset(name: str) -> RunConfig:
    """Configuration reproducing one figure; see ``PRESETS`` for the parameter choices."""
    try:
        return PRESETS[name][1]()
    except KeyError:
        raise UsageError(f"unknown preset {name!r}; valid presets: {', '.join(PRESETS)}") from None


# ---------------------------------------------------------------------------
# plot scripts

_PLOTS = {
    "fig1": (("kappa", "kappa_gh", "kappa_zpe"), None),
    "fig2a": (("lambda_plus", "lambda_minus"), None),
    "fig2b": (("S", "S_p"), 0.0),
    "fig2c": (("kappa",), 1.0),
    "fig2d": (("kappa", "kappa_zpe"), None),
    "fig3": (("phi1",), 0.5),
    "fig4a": (("kappa",), 1.0),
    "fig4b": (("kappa",), 1.0),
    "fig4c": (("kappa",), 1.0),
    "fig5": (("kappa_centroid",), 1.0),
    "s1a": (("kappa",), 1.0),
    "s1b": (("kappa", "kappa_gh", "kappa_zpe"), None),
    "s2": (("S", "S_p", "lambda_unstable", "lambda_unstable_p"), None),
    "s3": (("S", "S_p", "kappa"), None),
    "s4": (("S", "S_p", "lambda_unstable", "lambda_unstable_p"), None),
}

_SCRIPT = '''\
"""Plot {name} from {csv_path}. Generated file; it only reads and draws."""
import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else {csv_path!r}
with open(path, newline="") as fh:
    rows = list(csv.DictReader(fh))

columns = {columns!r}
guide = {guide!r}
curves = {{}}
for row in rows:
    curves.setdefault(row.get("curve_value", ""), []).append(row)

fig, axes = plt.subplots(len(columns), 1, sharex=True, squeeze=False,
                         figsize=(6, 2.5 * len(columns)))
for ax, col in zip(axes[:, 0], columns):
    for label, group in curves.items():
        xs = [float(r["value"]) for r in group]
        # empty cells (crossover, resonance) become gaps
        ys = [float(r[col]) if r[col] else float("nan") for r in group]
        name = f"{{group[0].get('curve_param', '')}}={{label}}" if label else col
        ax.plot(xs, ys, label=name)
    if guide is not None:
        ax.axhline(guide, color="grey", lw=0.8, ls=":")
    ax.set_ylabel(col)
    ax.legend(fontsize="small")
axes[-1, 0].set_xlabel(rows[0]["param"] if rows else "")
fig.tight_layout()
plt.show()
'''


def emit_plot_script(table: SweepTable, destination, csv_path: str = "sweep.csv") -> None:
    """Write a matplotlib script that draws a preset's curves from its CSV."""
    if table.preset is None or table.preset not in _PLOTS:
        raise UsageError("plot scripts are only available for preset sweeps")
    wanted, guide = _PLOTS[table.preset]
    columns = [c for c in wanted if c in table.columns]
    text = _SCRIPT.format(name=table.preset, csv_path=str(csv_path), columns=columns, guide=guide)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="")
