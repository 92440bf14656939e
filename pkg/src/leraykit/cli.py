"""Command-line front end.

Subcommands: symbol, norm, scan, figures, certify, phi, version.  Output is
CSV (comma-separated, header row, LF, UTF-8) or JSON (the report schema
{version, config, certificates, tables}); numbers print with 15 significant
digits.  Identical configuration produces byte-identical output: no
timestamps or environment fingerprints are embedded.

Exit codes: 0 success, 1 certificate failure, 2 usage or domain error.

A line-oriented config file (``key = value``) can seed the run; explicit
command-line flags override file values.  Working precision is controlled
by the LERAYKIT_PRECISION_BITS environment variable (read at import).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import __version__, bwcert, emcert
from .errors import CertificateFailure, DomainError, LeraykitError
from .certificates import Certificate, first_failure
from .specialfn import phi as phi_fn
from .specialfn import phi_sandwich
from .symbol import (
    MeasureTag,
    SymbolQuery,
    boundedness_interval,
    leray_norm,
    monotonicity_scan,
    symbol_value,
)

TOOL_NAME = "leraykit"

# documented default parameter sets for the sweep figures
J_SWEEP_GAMMA = 5.0
J_SWEEP_D_SET = (1.0, 2.0, 2.5, 3.0, 4.0)
PHI_SWEEP_Q_SET = (0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0)


# ----------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-12
    k_max: int = 200
    grid_min: float = 0.75
    grid_max: float = 1000.0
    grid_count: int = 60
    grid_scale: str = "log"  # or "linear"
    format: str = "csv"  # or "json"
    output: Optional[str] = None

    def validate(self) -> None:
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.grid_count < 2:
            raise DomainError("grid count must be at least 2")
        if not self.grid_min < self.grid_max:
            raise DomainError("grid min must be below grid max")
        if self.grid_scale not in ("log", "linear"):
            raise DomainError("grid scale must be 'log' or 'linear'")
        if self.format not in ("csv", "json"):
            raise DomainError("format must be 'csv' or 'json'")
        if self.grid_scale == "log" and self.grid_min <= 0:
            raise DomainError("log grid requires positive grid min")

    def grid(self) -> List[float]:
        n = self.grid_count
        if self.grid_scale == "linear":
            step = (self.grid_max - self.grid_min) / (n - 1)
            return [self.grid_min + i * step for i in range(n)]
        lo, hi = math.log(self.grid_min), math.log(self.grid_max)
        return [math.exp(lo + i * (hi - lo) / (n - 1)) for i in range(n)]

    def as_dict(self) -> Dict[str, Any]:
        # the output destination is not part of the computation; leaving it
        # out keeps reports byte-identical across target paths
        return {
            "tolerance": self.tolerance,
            "k_max": self.k_max,
            "grid_min": self.grid_min,
            "grid_max": self.grid_max,
            "grid_count": self.grid_count,
            "grid_scale": self.grid_scale,
            "format": self.format,
        }


_CONFIG_CASTS = {
    "tolerance": float,
    "k_max": int,
    "grid_min": float,
    "grid_max": float,
    "grid_count": int,
    "grid_scale": str,
    "format": str,
    "output": str,
}


def load_config_file(path: str) -> Dict[str, Any]:
    """Parse ``key = value`` lines; '#' starts a comment."""
    values: Dict[str, Any] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_CASTS:
            raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _CONFIG_CASTS[key](value)
    return values


def build_config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(ns, "config", None):
        cfg = replace(cfg, **load_config_file(ns.config))
    overrides = {}
    for key in _CONFIG_CASTS:
        flag = getattr(ns, key, None)
        if flag is not None:
            overrides[key] = flag
    cfg = replace(cfg, **overrides)
    cfg.validate()
    return cfg


# ----------------------------------------------------------------------
# output helpers
# ----------------------------------------------------------------------
def _fmt(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".15g")
    if x is None:
        return ""
    return str(x)


def _emit_table(
    name: str,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    cfg: RunConfig,
    certificates: Sequence[Certificate] = (),
) -> None:
    if cfg.format == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = _bundle_json(cfg, certificates, [(name, columns, rows)])
    _write_out(text, cfg.output)


def _bundle_json(
    cfg: RunConfig,
    certificates: Sequence[Certificate],
    tables: Sequence[Tuple[str, Sequence[str], Sequence[Sequence[Any]]]],
) -> str:
    payload = {
        "version": __version__,
        "config": cfg.as_dict(),
        "certificates": [c.to_dict() for c in certificates],
        "tables": [
            {
                "name": name,
                "columns": list(columns),
                "rows": [[_fmt(v) if isinstance(v, float) else v for v in row] for row in rows],
            }
            for name, columns, rows in tables
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write_out(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


def _parse_k_range(text: str) -> List[int]:
    """'7' or '0..60' (inclusive)."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise DomainError(f"empty mode range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _measure_from_args(ns: argparse.Namespace) -> MeasureTag:
    if ns.measure is not None and ns.d is not None:
        raise DomainError("give either --d or --measure, not both")
    if ns.measure is not None:
        return MeasureTag(ns.measure)
    if ns.d is not None:
        return MeasureTag.generic(ns.d)
    raise DomainError("one of --d or --measure is required")


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------
def _cmd_symbol(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    measure = _measure_from_args(ns)
    d = measure.exponent(ns.gamma)
    ks = _parse_k_range(ns.k)
    bounded_flags = [SymbolQuery(ns.gamma, d, k).is_finite() for k in ks]
    if not any(bounded_flags):
        lo, hi = boundedness_interval(ns.gamma, min(ks))
        raise DomainError(
            f"d={d:g} outside the k={min(ks)} boundedness interval "
            f"({lo:g}, {hi:g}) for gamma={ns.gamma:g}"
        )
    rows: List[List[Any]] = []
    for k, ok in zip(ks, bounded_flags):
        if ok:
            j = symbol_value(SymbolQuery(ns.gamma, d, k), cfg.tolerance)
            rows.append([k, float(j.value), float(j.sqrt().value), True, float(j.error_radius)])
        else:
            rows.append([k, None, None, False, None])
    _emit_table("symbol", ["k", "J", "sqrt_J", "bounded", "error_radius"], rows, cfg)
    return 0


def _cmd_norm(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    measure = _measure_from_args(ns)
    result = leray_norm(ns.gamma, measure, tol=cfg.tolerance, k_cap=max(cfg.k_max, 200))
    rows = [[
        ns.gamma,
        result.d,
        measure.kind,
        float(result.value.value),
        float(result.value.error_radius),
        result.method,
        result.attained_at,
        result.k_scanned,
        result.stabilized,
    ]]
    columns = [
        "gamma", "d", "measure", "norm", "error_radius",
        "method", "attained_at_k", "k_scanned", "stabilized",
    ]
    if cfg.format == "json":
        _emit_table("norm", columns, rows, cfg)
    else:
        lines = [f"{c} = {_fmt(v)}" for c, v in zip(columns, rows[0])]
        _write_out("\n".join(lines) + "\n", cfg.output)
    return 0


def _cmd_scan(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    measure = _measure_from_args(ns)
    d = measure.exponent(ns.gamma)
    result = monotonicity_scan(ns.gamma, d, ns.k_max if ns.k_max else cfg.k_max, cfg.tolerance)
    lines = [
        f"gamma = {_fmt(ns.gamma)}",
        f"d = {_fmt(d)}",
        f"k_max = {ns.k_max if ns.k_max else cfg.k_max}",
        f"classification = {result.classification.value}",
    ]
    if result.witness_k is not None:
        lines.append(f"turning_k = {result.witness_k}")
    _write_out("\n".join(lines) + "\n", cfg.output)
    return 0


def _cmd_figures(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    out_dir = Path(ns.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    if ns.id == "j-sweep":
        d_set = [float(x) for x in ns.d_set.split(",")] if ns.d_set else list(J_SWEEP_D_SET)
        columns = ["k"] + [f"J_d{d:g}" for d in d_set]
        rows = []
        for k in range(cfg.k_max + 1):
            row: List[Any] = [k]
            for d in d_set:
                j = symbol_value(SymbolQuery(J_SWEEP_GAMMA, d, k), cfg.tolerance)
                row.append(float(j.value))
            rows.append(row)
        path = out_dir / "j_sweep.csv"
    elif ns.id == "phi-sweep":
        q_set = [float(x) for x in ns.q_set.split(",")] if ns.q_set else list(PHI_SWEEP_Q_SET)
        columns = ["r"] + [f"Phi_q{q:g}" for q in q_set]
        rows = []
        for r in cfg.grid():
            row = [r]
            for q in q_set:
                row.append(float(phi_fn(r, q, cfg.tolerance).value))
            rows.append(row)
        path = out_dir / "phi_sweep.csv"
    else:
        raise DomainError(f"unknown figure id {ns.id!r} (expected j-sweep or phi-sweep)")
    text = "\n".join([",".join(columns)] + [",".join(_fmt(v) for v in row) for row in rows]) + "\n"
    path.write_text(text, encoding="utf-8", newline="")
    sys.stdout.write(f"wrote {path}\n")
    return 0


def _cmd_certify(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    certificates: List[Certificate] = []
    if ns.suite in ("bw", "all"):
        certificates += bwcert.bw_certificate_suite()
    if ns.suite in ("em", "all"):
        certificates += emcert.em_certificate_suite()
    bundle = _bundle_json(cfg, certificates, [])
    json_to_stdout = cfg.format == "json" and not cfg.output
    if not json_to_stdout:  # keep stdout machine-readable in JSON mode
        for cert in certificates:
            status = "PASS" if cert.passed else "FAIL"
            sys.stdout.write(f"[{status}] {cert.claim_id} ({cert.verdict}) - {cert.anchor}\n")
    if cfg.output:
        _write_out(bundle, cfg.output)
        sys.stdout.write(f"wrote {cfg.output}\n")
    elif json_to_stdout:
        sys.stdout.write(bundle)
    failing = first_failure(certificates)
    if failing is not None:
        sys.stderr.write(f"certificate failure: {failing.claim_id}\n")
        return 1
    return 0


def _cmd_phi(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    value = phi_fn(ns.r, ns.q, cfg.tolerance)
    lines = [
        f"r = {_fmt(ns.r)}",
        f"q = {_fmt(ns.q)}",
        f"phi = {_fmt(float(value.value))}",
        f"error_radius = {_fmt(float(value.error_radius))}",
    ]
    if ns.r > max(ns.q - 1, 0.0):
        lo, hi = phi_sandwich(ns.r, ns.q)
        lines.append(f"sandwich_lower = {_fmt(lo)}")
        lines.append(f"sandwich_upper = {_fmt(hi)}")
    _write_out("\n".join(lines) + "\n", cfg.output)
    return 0


def _cmd_version(ns: argparse.Namespace) -> int:
    sys.stdout.write(f"{TOOL_NAME} {__version__}\n")
    return 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------
def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="config file with 'key = value' lines")
    p.add_argument("--tolerance", "--tol", dest="tolerance", type=float, help="error-radius target")
    p.add_argument("--format", choices=("csv", "json"), help="output format")
    p.add_argument("--output", help="output path (default stdout)")


def _add_measure_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=float, required=True, help="hypersurface exponent, > 1")
    p.add_argument("--d", type=float, help="measure exponent")
    p.add_argument(
        "--measure",
        choices=("pairing", "preferred", "dual_preferred", "lebesgue"),
        help="named measure (alternative to --d)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="verified symbol-function values, operator norms, and inequality certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("symbol", help="symbol values J(d, gamma, k) over a mode range")
    _add_measure_args(p)
    p.add_argument("--k", required=True, help="mode index or inclusive range, e.g. 3 or 0..60")
    _add_common(p)
    p.set_defaults(func=_cmd_symbol)

    p = sub.add_parser("norm", help="operator norm (closed form or mode search)")
    _add_measure_args(p)
    p.add_argument("--k-max", dest="k_max", type=int, help="mode-scan budget")
    _add_common(p)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("scan", help="monotonicity classification of k -> J(d, gamma, k)")
    _add_measure_args(p)
    p.add_argument("--k-max", dest="k_max", type=int, help="last mode index (default from config)")
    _add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("figures", help="emit sweep data as CSV files")
    p.add_argument("--id", required=True, choices=("j-sweep", "phi-sweep"))
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--d-set", help="comma-separated d values for j-sweep")
    p.add_argument("--q-set", help="comma-separated q values for phi-sweep")
    p.add_argument("--k-max", dest="k_max", type=int, help="modes per column for j-sweep")
    p.add_argument("--grid-min", dest="grid_min", type=float)
    p.add_argument("--grid-max", dest="grid_max", type=float)
    p.add_argument("--grid-count", dest="grid_count", type=int)
    p.add_argument("--grid-scale", dest="grid_scale", choices=("log", "linear"))
    _add_common(p)
    p.set_defaults(func=_cmd_figures)

    p = sub.add_parser("certify", help="run certificate suites")
    p.add_argument("--suite", default="all", choices=("bw", "em", "all"))
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("phi", help="evaluate phi(r, q) with error radius and sandwich bounds")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("version", help="print version")
    p.set_defaults(func=_cmd_version)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except CertificateFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (LeraykitError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
