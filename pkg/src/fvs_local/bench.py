"""Sweep harness: run local search against the exact oracle and tabulate.

A sweep config is JSON::

    {
      "oracle_max_n": 40,          # skip the oracle above this many vertices
      "timing": false,             # wall_ms column is null unless true
      "runs": [
        {"family": "grid", "params": [{"rows": 3, "cols": 3}], "c": [1, 2]},
        {"family": "ktree", "params": [{"n": 14, "k": 2, "keep_prob": 0.8}],
         "seeds": [0, 1], "c": [2]},
        {"family": "k3n", "params": [{"n": 4}], "c": [1]},
        {"family": "diag-oct", "params": [{"k": 5, "d": 2}], "c": [1, 2]},
        {"family": "diag-sfvs", "params": [{"k": 5, "d": 2}], "c": [1]}
      ]
    }

Rows come out in config order; with ``timing`` off the output is
byte-identical across runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .instances import gen_diagonal_grid, gen_grid, gen_k3n, gen_partial_ktree, verify_local_optimality
from .oracle import exact_fvs, exact_min
from .solver import SearchParams, local_search

FAMILIES = ("grid", "ktree", "k3n", "diag-oct", "diag-sfvs")


class ConfigError(ValueError):
    pass


@dataclass
class BenchRow:
    instance: str
    family: str
    params: str
    n: int
    m: int
    c: int
    L: int
    O: Optional[int]
    ratio: Optional[float]
    iterations: Optional[int]
    wall_ms: Optional[float]
    certified_local_opt: bool
    oracle_exact: bool


COLUMNS = [f for f in BenchRow.__dataclass_fields__]


def _name(family: str, params: dict, seed) -> str:
    parts = [family] + [f"{k}={params[k]}" for k in sorted(params)]
    if seed is not None:
        parts.append(f"seed={seed}")
    return "_".join(parts)


def _validate(config: dict) -> None:
    if not isinstance(config, dict) or not isinstance(config.get("runs", []), list):
        raise ConfigError("config must be an object with a 'runs' list")
    for i, run in enumerate(config.get("runs", [])):
        if run.get("family") not in FAMILIES:
            raise ConfigError(f"run {i}: unknown family {run.get('family')!r}")
        cs = run.get("c")
        if not isinstance(cs, list) or not cs or not all(isinstance(c, int) and c >= 1 for c in cs):
            raise ConfigError(f"run {i}: 'c' must be a nonempty list of positive ints")
        if not isinstance(run.get("params", [{}]), list):
            raise ConfigError(f"run {i}: 'params' must be a list of objects")


def run_bench(config: dict) -> list[BenchRow]:
    _validate(config)
    cap = config.get("oracle_max_n", 40)
    timing = bool(config.get("timing", False))
    rows = []
    for run in config.get("runs", []):
        family = run["family"]
        seeds = run.get("seeds", [None]) if family == "ktree" else [None]
        for params in run.get("params", [{}]):
            for seed in seeds:
                rows.extend(_run_one(family, dict(params), seed, run["c"], cap, timing))
    return rows


def _run_one(family, params, seed, cs, cap, timing) -> list[BenchRow]:
    name = _name(family, params, seed)
    ptxt = json.dumps(params, sort_keys=True)
    out = []
    if family in ("diag-oct", "diag-sfvs"):
        variant = "OCT" if family == "diag-oct" else "SFVS"
        inst = gen_diagonal_grid(params["k"], params.get("cells"), variant, d=params.get("d", 2))
        g = inst.graph
        opt = len(exact_min(g, inst.kind)) if g.n <= cap else None
        for c in cs:
            L = len(inst.planted_local)
            out.append(BenchRow(name, family, ptxt, g.n, g.m, c, L, opt,
                                None if opt is None else L / opt, None, None,
                                verify_local_optimality(inst, c), opt is not None))
        return out
    if family == "grid":
        g = gen_grid(params["rows"], params["cols"])
    elif family == "k3n":
        g = gen_k3n(params["n"])
    else:
        g = gen_partial_ktree(params["n"], params["k"], params.get("keep_prob", 1.0), seed or 0)
    opt = len(exact_fvs(g)) if g.n <= cap else None
    for c in cs:
        sol, rep = local_search(g, SearchParams(c=c), instance=name)
        L = len(sol)
        if opt is None:
            ratio = None
        elif opt == 0:
            ratio = 1.0
        else:
            ratio = L / opt
        out.append(BenchRow(name, family, ptxt, g.n, g.m, c, L, opt, ratio, rep.iterations,
                            rep.wall_ms if timing else None, rep.certified_local_opt, opt is not None))
    return out


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        d = asdict(r)
        w.writerow(["" if d[k] is None else (f"{d[k]:.6f}" if isinstance(d[k], float) else d[k]) for k in COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: list[BenchRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2, sort_keys=True) + "\n"


def write_bench(rows: list[BenchRow], outdir) -> tuple[Path, Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path, json_path = outdir / "bench.csv", outdir / "bench.json"
    csv_path.write_text(rows_to_csv(rows))
    json_path.write_text(rows_to_json(rows))
    return csv_path, json_path


def load_config(path) -> dict:
    try:
        config = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed config: {exc}") from None
    _validate(config)
    return config
