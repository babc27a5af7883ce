"""Grid sweeps over (T0, T) and their CSV/JSON serialization."""

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import thermo
from .config import SweepGrid
from .ergotropy import asymptotic_from_spectra, ergotropy_from_spectra
from .errors import IoError, SthermError
from .thermal import ThermalModel

RESULT_FIELDS = [
    "t0",
    "t",
    "ergotropy",
    "asymptotic_ergotropy",
    "excess_ergotropy",
    "e_ss",
    "e_gibbs",
    "s_ss",
    "s_gibbs",
    "rel_entropy",
    "delta_s_sys",
    "delta_s_bath",
    "erasure_cost",
    "lambda",
    "classification",
    "h_sectors",
]


@dataclass
class ResultRow:
    t0: float
    t: float
    ergotropy: float
    asymptotic_ergotropy: float
    excess_ergotropy: float
    e_ss: float
    e_gibbs: float
    s_ss: float
    s_gibbs: float
    rel_entropy: float
    delta_s_sys: float
    delta_s_bath: float
    erasure_cost: float
    lambda_: float | None
    classification: str
    h_sectors: float

    def as_record(self) -> dict:
        rec = {f: getattr(self, f) for f in RESULT_FIELDS if f != "lambda"}
        rec["lambda"] = self.lambda_
        return {f: rec[f] for f in RESULT_FIELDS}


def compute_row(model: ThermalModel, t0: float, t: float) -> ResultRow:
    """One sweep point: thermo report plus the three battery quantities.

    Failures of individual quantities (e.g. the effectively-pure corner at
    very low temperatures) are recorded as NaN sentinels in the affected
    columns; the row itself always comes back.
    """
    rep = thermo.build_report(model, t0, t)
    energies, _, pops, _ = thermo.steady_populations(model, t0, t)
    try:
        w = ergotropy_from_spectra(pops, energies)
    except SthermError:
        w = math.nan
    try:
        w_inf = asymptotic_from_spectra(pops, energies)
    except SthermError:
        w_inf = math.nan
    return ResultRow(
        t0=rep.t0,
        t=rep.t,
        ergotropy=w,
        asymptotic_ergotropy=w_inf,
        excess_ergotropy=w_inf - w,
        e_ss=rep.e_ss,
        e_gibbs=rep.e_gibbs,
        s_ss=rep.s_ss,
        s_gibbs=rep.s_gibbs,
        rel_entropy=rep.rel_ent_ss_gibbs,
        delta_s_sys=rep.delta_s_sys,
        delta_s_bath=rep.delta_s_bath,
        erasure_cost=rep.erasure_cost,
        lambda_=rep.lambda_,
        classification=str(rep.classification),
        h_sectors=rep.h_sectors,
    )


def _sweep_chunk(args) -> list[ResultRow]:
    model, t0, t_values = args
    return [compute_row(model, t0, t) for t in t_values]


def default_jobs() -> int:
    return int(os.environ.get("STHERM_JOBS", "1"))


def run_sweep(model: ThermalModel, grid: SweepGrid, jobs: int = 1) -> list[ResultRow]:
    """All grid points in row-major order (t0 outer, t inner).

    With jobs > 1 the rows of the grid are computed in a process pool; the
    output order and values are independent of the schedule.
    """
    model.sector_spectra  # force the per-model eigendecomposition once
    chunks = [(model, t0, grid.t_values) for t0 in grid.t0_values]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, chunks))
    else:
        results = [_sweep_chunk(c) for c in chunks]
    return [row for chunk in results for row in chunk]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)  # shortest round-trip decimal
    return str(value)


def rows_to_csv(rows: list[ResultRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")  # RFC 4180
    writer.writerow(RESULT_FIELDS)
    for row in rows:
        rec = row.as_record()
        writer.writerow([_csv_cell(rec[f]) for f in RESULT_FIELDS])
    return buf.getvalue()


def rows_to_json(rows: list[ResultRow]) -> str:
    def clean(v):
        if isinstance(v, float) and not math.isfinite(v):
            return None
        return v

    records = [{k: clean(v) for k, v in row.as_record().items()} for row in rows]
    return json.dumps(records, indent=1)


def emit(rows: list[ResultRow], fmt: str, destination) -> None:
    """Write rows as CSV or JSON to a path or an open text stream."""
    if not rows:
        raise SthermError("no rows to emit")
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        try:
            with open(destination, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoError(f"cannot write {destination}: {exc}") from None


def rows_to_grids(rows: list[ResultRow], grid: SweepGrid) -> dict[str, np.ndarray]:
    """Pivot row-major sweep output into (len(t0), len(t)) arrays per column."""
    shape = (len(grid.t0_values), len(grid.t_values))
    out = {}
    for f in RESULT_FIELDS:
        if f == "classification":
            vals = np.array([r.classification for r in rows]).reshape(shape)
        else:
            vals = np.array(
                [
                    math.nan if (v := rec.get(f)) is None else float(v)
                    for rec in (r.as_record() for r in rows)
                ]
            ).reshape(shape)
        out[f] = vals
    return out
