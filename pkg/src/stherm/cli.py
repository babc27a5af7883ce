"""Command-line front end."""

import sys

import click

from . import checks, config as config_mod, sweep as sweep_mod, thermo
from .errors import ConfigError, SthermError

EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR = 2


def _load(path):
    try:
        return config_mod.load_config(path)
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)


@click.group()
def main():
    """Constrained-thermalization sweeps, reports and circuit checks."""


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--grid", "grid_flag", default=None, help="t0_min:t0_max:n,t_min:t_max:n")
@click.option("--spacing", type=click.Choice(["linear", "log"]), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", "out_path", default=None, help="output file (default stdout)")
@click.option("--jobs", type=int, default=None, help="worker processes (env STHERM_JOBS)")
@click.option("--figures", "figdir", default=None, type=click.Path(),
              help="also render figures into this directory")
def sweep(config_path, grid_flag, spacing, fmt, out_path, jobs, figdir):
    """Run a (T0, T) grid sweep and emit one row per point."""
    cfg, grid = _load(config_path)
    try:
        if grid_flag is not None:
            grid = config_mod.parse_grid_flag(grid_flag, spacing or "linear")
        elif spacing is not None and spacing != grid.spacing:
            grid = config_mod.make_grid(
                (grid.t0_values[0], grid.t0_values[-1], len(grid.t0_values)),
                (grid.t_values[0], grid.t_values[-1], len(grid.t_values)),
                spacing,
            )
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    model = cfg.to_model()
    rows = sweep_mod.run_sweep(
        model, grid, jobs if jobs is not None else sweep_mod.default_jobs()
    )
    try:
        sweep_mod.emit(rows, fmt, out_path if out_path else sys.stdout)
        if figdir:
            from .plotting import render_figures

            for path in render_figures(rows, grid, figdir, stem=cfg.name):
                click.echo(f"wrote {path}", err=True)
    except SthermError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CHECK_FAILURE)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--t0", type=float, required=True)
@click.option("--t", type=float, required=True)
def report(config_path, t0, t):
    """Pretty-print the full scalar report for a single (T0, T) point."""
    cfg, _ = _load(config_path)
    model = cfg.to_model()
    try:
        row = sweep_mod.compute_row(model, t0, t)
    except SthermError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CHECK_FAILURE)
    click.echo(f"model: {cfg.name}")
    rec = row.as_record()
    width = max(len(k) for k in rec)
    for key, value in rec.items():
        shown = "-" if value is None else value
        click.echo(f"  {key:<{width}}  {shown}")


@main.command("demon-check")
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--t0", type=float, required=True)
@click.option("--t", type=float, required=True)
def demon_check(config_path, t0, t):
    """Verify the register-circuit invariants at one (T0, T) point."""
    cfg, _ = _load(config_path)
    model = cfg.to_model()
    results = checks.demon_check(model, t0, t)
    failed = False
    width = max(len(r.name) for r in results)
    for r in results:
        status = "ok" if r.passed else "FAIL"
        click.echo(f"  {r.name:<{width}}  residual {r.residual:.3e}  [{status}]")
        failed = failed or not r.passed
    if failed:
        sys.exit(EXIT_CHECK_FAILURE)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
def validate(config_path):
    """Parse and validate a config file."""
    cfg, grid = _load(config_path)
    click.echo(
        f"{cfg.name}: dim {cfg.hamiltonian.shape[0]}, "
        f"{len(cfg.sectors)} sectors, grid "
        f"{len(grid.t0_values)}x{len(grid.t_values)} ({grid.spacing})"
    )


if __name__ == "__main__":
    main()
