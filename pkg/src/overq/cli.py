"""Batch verification front end.

Subcommands:

* ``identities`` -- run the identity registry to a truncation order.
* ``verify``     -- scan congruence families over parameter grids.
* ``oracle``     -- cross-check generating functions against the
                    combinatorial counts, or dump counts as CSV.
* ``replay``     -- recompute the binomial coefficient tables and the
                    registered dissection steps.

Exit codes: 0 all checks passed, 1 mathematical mismatch (witness printed),
2 usage or configuration error.  Output is deterministic: rows are sorted,
and JSON reports are byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from .series import EXACT
from .eta import opt_gf, overpartition_gf
from .identities import builtin_identities, identity_registry, verify_identity
from .oracle import count_opt_tuples, count_overpartition_tuples
from .congruences import (
    RunConfig,
    SeriesProvider,
    builtin_steps,
    family_registry,
    replay_binomial_tables,
    run_families,
    step_registry,
    verify_dissection_step,
)

SCHEMA = "overq-report/1"

_DEFAULTS: dict[str, object] = {
    "order": 500,
    "n_max": 200,
    "t_max": 64,
    "i_max": 3,
    "j_max": 3,
    "alpha_max": 2,
    "format": "table",
    "include_conjectures": False,
    "primes_only": False,
    "jobs": 1,
    "seed": 0,
    "upto": 60,
}

# config-file key -> argparse dest
_CONFIG_KEYS = {
    "order": "order",
    "n-max": "n_max",
    "t-max": "t_max",
    "i-max": "i_max",
    "j-max": "j_max",
    "alpha-max": "alpha_max",
    "format": "format",
    "include-conjectures": "include_conjectures",
    "primes-only": "primes_only",
    "jobs": "jobs",
    "seed": "seed",
    "upto": "upto",
}


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--order", type=_positive_int, default=None)
    parser.add_argument("--n-max", dest="n_max", type=_nonneg_int, default=None)
    parser.add_argument("--t-max", dest="t_max", type=_nonneg_int, default=None)
    parser.add_argument("--i-max", dest="i_max", type=_positive_int, default=None)
    parser.add_argument("--j-max", dest="j_max", type=_positive_int, default=None)
    parser.add_argument("--alpha-max", dest="alpha_max", type=_nonneg_int, default=None)
    parser.add_argument("--format", choices=("table", "json", "csv"), default=None)
    parser.add_argument(
        "--include-conjectures", dest="include_conjectures", action="store_true", default=None
    )
    parser.add_argument("--primes-only", dest="primes_only", action="store_true", default=None)
    parser.add_argument("--jobs", type=_positive_int, default=None)
    parser.add_argument("--seed", type=_nonneg_int, default=None)
    parser.add_argument("--config", type=str, default=None)
    parser.add_argument("--out", type=str, default=None, help="directory for report files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overq",
        description="Verify q-series identities and overpartition-tuple congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_id = sub.add_parser("identities", help="run the identity registry")
    p_id.add_argument("--only", type=str, default=None, help="comma-separated keys")
    _add_common(p_id)

    p_ver = sub.add_parser("verify", help="scan congruence families")
    p_ver.add_argument("keys", nargs="*", default=[], help="family keys, or 'all'")
    _add_common(p_ver)

    p_or = sub.add_parser("oracle", help="cross-check counts against the series engine")
    p_or.add_argument("--t", type=_nonneg_int, action="append", default=None,
                      help="overpartition tuple size (repeatable)")
    p_or.add_argument("--opt", type=_nonneg_int, action="append", default=None,
                      help="odd-part tuple size (repeatable)")
    p_or.add_argument("--upto", type=_nonneg_int, default=None)
    _add_common(p_or)

    p_rep = sub.add_parser("replay", help="recompute coefficient tables and dissection steps")
    p_rep.add_argument("--width", type=int, choices=(16, 32), default=None)
    p_rep.add_argument("--step", type=str, default=None)
    p_rep.add_argument("--t", type=_nonneg_int, default=None)
    p_rep.add_argument("--i", type=_positive_int, default=None)
    p_rep.add_argument("--r", type=_positive_int, default=None)
    _add_common(p_rep)

    return parser


def _load_config_file(path: str) -> dict[str, object]:
    values: dict[str, object] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        dest = _CONFIG_KEYS[key]
        if dest in ("include_conjectures", "primes_only"):
            if value.lower() not in ("true", "false", "1", "0"):
                raise UsageError(f"{path}:{lineno}: boolean expected for {key}")
            values[dest] = value.lower() in ("true", "1")
        elif dest == "format":
            if value not in ("table", "json", "csv"):
                raise UsageError(f"{path}:{lineno}: bad format {value!r}")
            values[dest] = value
        else:
            try:
                values[dest] = int(value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: integer expected for {key}") from None
            if dest == "order" and values[dest] < 1:
                raise UsageError(f"{path}:{lineno}: order must be >= 1")
    return values


def _resolve(args: argparse.Namespace) -> dict[str, object]:
    """Merge flag values over config-file values over hard defaults."""
    resolved = dict(_DEFAULTS)
    if getattr(args, "config", None):
        resolved.update(_load_config_file(args.config))
    for dest in _DEFAULTS:
        value = getattr(args, dest, None)
        if value is not None:
            resolved[dest] = value
    return resolved


def _run_config(settings: dict[str, object]) -> RunConfig:
    return RunConfig(
        order=settings["order"],
        n_max=settings["n_max"],
        t_max=settings["t_max"],
        i_max=settings["i_max"],
        j_max=settings["j_max"],
        alpha_max=settings["alpha_max"],
        include_conjectures=settings["include_conjectures"],
        primes_only=settings["primes_only"],
        seed=settings["seed"],
        jobs=settings["jobs"],
    )


def _emit(text: str, settings: dict[str, object], command: str, out) -> None:
    print(text, file=out)
    out_dir = settings.get("out_dir")
    if out_dir:
        ext = {"table": "txt", "json": "json", "csv": "csv"}[settings["format"]]
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        (directory / f"{command}.{ext}").write_text(text + "\n")


def _json_report(command: str, settings: dict[str, object], results) -> str:
    doc = {
        "schema": SCHEMA,
        "command": command,
        "config": {k: settings[k] for k in sorted(_DEFAULTS)},
        "results": results,
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def _parallel_map(jobs: int, fn: Callable, items: Sequence):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# --- identities --------------------------------------------------------------


def cmd_identities(args: argparse.Namespace, out) -> int:
    settings = _resolve(args)
    settings["out_dir"] = args.out
    registry = identity_registry()
    if args.only:
        keys = [k.strip() for k in args.only.split(",") if k.strip()]
        unknown = [k for k in keys if k not in registry]
        if unknown:
            raise UsageError(f"unknown identity keys: {', '.join(unknown)}")
        cases = [registry[k] for k in keys]
    else:
        cases = list(builtin_identities())
    cases.sort(key=lambda c: c.key)
    order = settings["order"]
    reports = _parallel_map(settings["jobs"], lambda c: verify_identity(c, order), cases)

    fmt = settings["format"]
    if fmt == "json":
        rows = [
            {
                "key": r.key,
                "mode": r.mode,
                "order": r.order,
                "status": r.status,
                "first_mismatch": (
                    None
                    if r.mismatch is None
                    else {"exponent": r.mismatch[0], "lhs": r.mismatch[1], "rhs": r.mismatch[2]}
                ),
                "error": r.error,
            }
            for r in reports
        ]
        text = _json_report("identities", settings, rows)
    elif fmt == "csv":
        lines = ["key,mode,order,status,first_mismatch"]
        for r in reports:
            lines.append(f"{r.key},{r.mode},{r.order},{r.status},{r.describe()}")
        text = "\n".join(lines)
    else:
        lines = [f"{'KEY':12} {'MODE':8} {'ORDER':>6} {'STATUS':6} FIRST-MISMATCH"]
        for r in reports:
            lines.append(f"{r.key:12} {r.mode:8} {r.order:>6} {r.status:6} {r.describe()}")
        passed = sum(r.ok for r in reports)
        lines.append(f"{passed}/{len(reports)} identities passed at order {order}")
        text = "\n".join(lines)
    _emit(text, settings, "identities", out)
    return 0 if all(r.ok for r in reports) else 1


# --- verify ------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, out) -> int:
    settings = _resolve(args)
    settings["out_dir"] = args.out
    registry = family_registry()
    if not args.keys:
        raise UsageError("verify needs family keys or 'all'")
    if args.keys == ["all"]:
        families = list(registry.values())
        if not settings["include_conjectures"]:
            families = [f for f in families if f.status == "theorem"]
    else:
        unknown = [k for k in args.keys if k not in registry]
        if unknown:
            raise UsageError(f"unknown family keys: {', '.join(unknown)}")
        families = [registry[k] for k in args.keys]
    families.sort(key=lambda f: f.key)
    config = _run_config(settings)
    provider = SeriesProvider()
    reports = run_families(
        families, config, provider=provider, warn=lambda msg: print(msg, file=sys.stderr)
    )
    reports.sort(key=lambda r: r.key)

    fmt = settings["format"]
    if fmt == "json":
        rows = []
        for family, report in zip(families, reports):
            rows.append(
                {
                    **family.describe(),
                    "params_tried": report.params_tried,
                    "coeffs_checked": report.coeffs_checked,
                    "failures": report.failures,
                    "verdict": report.verdict,
                    "witnesses": [
                        {
                            "params": w.params_text(),
                            "n": w.n,
                            "value": w.value,
                            "modulus": w.modulus,
                            "expected": w.expected,
                        }
                        for w in report.witnesses
                    ],
                }
            )
        text = _json_report("verify", settings, rows)
    elif fmt == "csv":
        lines = ["key,params,n,value,modulus,expected"]
        for report in reports:
            for w in report.witnesses:
                lines.append(
                    f"{report.key},{w.params_text()},{w.n},{w.value},{w.modulus},{w.expected}"
                )
        text = "\n".join(lines)
    else:
        lines = [
            f"{'KEY':42} {'STATUS':10} {'VERDICT':16} {'PARAMS':>7} {'COEFFS':>8} {'FAILS':>6}"
        ]
        for report in reports:
            lines.append(
                f"{report.key:42} {report.family_status:10} {report.verdict:16} "
                f"{report.params_tried:>7} {report.coeffs_checked:>8} {report.failures:>6}"
            )
            for w in report.witnesses[:3]:
                lines.append(
                    f"    witness {w.params_text()} n={w.n}: value {w.value} != "
                    f"{w.expected} (mod {w.modulus})"
                )
        blockers = [r for r in reports if r.blocking]
        tally: dict[str, int] = {}
        for r in reports:
            tally[r.verdict] = tally.get(r.verdict, 0) + 1
        summary = ", ".join(f"{count} {verdict}" for verdict, count in sorted(tally.items()))
        lines.append(f"{summary}; {len(blockers)} blocking failure(s)")
        text = "\n".join(lines)
    _emit(text, settings, "verify", out)
    return 1 if any(r.blocking for r in reports) else 0


# --- oracle ------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace, out) -> int:
    settings = _resolve(args)
    settings["out_dir"] = args.out
    upto = settings["upto"]
    jobs: list[tuple[str, int]] = []
    if args.t is None and args.opt is None:
        jobs = [("overpartition-tuples", t) for t in range(7)]
        jobs += [("opt-tuples", k) for k in range(7)]
    else:
        for t in args.t or []:
            jobs.append(("overpartition-tuples", t))
        for k in args.opt or []:
            jobs.append(("opt-tuples", k))

    rows = []
    first_mismatch: tuple[str, int, int, int, int] | None = None
    for family, param in jobs:
        if family == "overpartition-tuples":
            table = count_overpartition_tuples(param, upto)
            series = overpartition_gf(param, EXACT, upto + 1)
        else:
            table = count_opt_tuples(param, upto)
            series = opt_gf(param, EXACT, upto + 1)
        matches = all(table.counts[n] == series.coeff(n) for n in range(upto + 1))
        if not matches and first_mismatch is None:
            n = next(n for n in range(upto + 1) if table.counts[n] != series.coeff(n))
            first_mismatch = (family, param, n, table.counts[n], series.coeff(n))
        rows.append((family, param, table, matches))

    fmt = settings["format"]
    if fmt == "json":
        results = [
            {
                "family": family,
                "parameter": param,
                "upto": table.upto,
                "counts": list(table.counts),
                "matches_gf": matches,
            }
            for family, param, table, matches in rows
        ]
        text = _json_report("oracle", settings, results)
    elif fmt == "csv":
        lines = ["family,parameter,n,count"]
        for family, param, table, _ in rows:
            for n, count in enumerate(table.counts):
                lines.append(f"{family},{param},{n},{count}")
        text = "\n".join(lines)
    else:
        lines = [f"{'FAMILY':24} {'PARAM':>5} {'UPTO':>5} STATUS"]
        for family, param, table, matches in rows:
            lines.append(f"{family:24} {param:>5} {table.upto:>5} {'PASS' if matches else 'FAIL'}")
        lines.append(
            "all counts match the generating functions"
            if first_mismatch is None
            else f"MISMATCH at {first_mismatch[:3]}: oracle {first_mismatch[3]} vs series {first_mismatch[4]}"
        )
        text = "\n".join(lines)
    _emit(text, settings, "oracle", out)
    if first_mismatch is not None:
        print(
            f"oracle mismatch: family={first_mismatch[0]} parameter={first_mismatch[1]} "
            f"n={first_mismatch[2]}",
            file=sys.stderr,
        )
        return 1
    return 0


# --- replay ------------------------------------------------------------------


def cmd_replay(args: argparse.Namespace, out) -> int:
    settings = _resolve(args)
    settings["out_dir"] = args.out
    order = settings["order"]
    lines = []
    rows_json = []
    failed = False

    if args.step is not None:
        steps = step_registry()
        if args.step not in steps:
            raise UsageError(f"unknown dissection step {args.step!r}")
        step = steps[args.step]
        params = {}
        for name in step.param_names:
            value = getattr(args, name, None)
            if value is None:
                raise UsageError(f"step {args.step} needs --{name}")
            params[name] = value
        try:
            report = verify_dissection_step(args.step, params, order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        failed = not report.ok
        lines.append(
            f"step {report.key:14} {report.params_text():12} mod {report.modulus:<6} "
            f"order {report.order:>5} {report.status}"
        )
        rows_json.append(
            {
                "type": "step",
                "key": report.key,
                "params": report.params_text(),
                "modulus": report.modulus,
                "order": report.order,
                "status": report.status,
            }
        )
    else:
        widths = (args.width,) if args.width else (16, 32)
        for width in widths:
            table_report = replay_binomial_tables(width)
            failed = failed or not table_report.ok
            lines.append(
                f"table mod {width:<3} rows {table_report.rows_checked:>3} "
                f"entries {table_report.entries_checked:>4} "
                f"{'PASS' if table_report.ok else 'FAIL'}"
            )
            rows_json.append(
                {
                    "type": "table",
                    "width": width,
                    "rows": table_report.rows_checked,
                    "entries": table_report.entries_checked,
                    "status": "PASS" if table_report.ok else "FAIL",
                }
            )
            for residue, t, r, got, want in table_report.mismatches:
                lines.append(f"    residue {residue} t={t} r={r}: got {got}, expected {want}")
        if not args.width:
            for step in builtin_steps():
                for point in step.default_params:
                    report = verify_dissection_step(step.key, dict(point), order)
                    failed = failed or not report.ok
                    lines.append(
                        f"step {report.key:14} {report.params_text():12} mod "
                        f"{report.modulus:<6} order {report.order:>5} {report.status}"
                    )
                    rows_json.append(
                        {
                            "type": "step",
                            "key": report.key,
                            "params": report.params_text(),
                            "modulus": report.modulus,
                            "order": report.order,
                            "status": report.status,
                        }
                    )

    fmt = settings["format"]
    if fmt == "json":
        text = _json_report("replay", settings, rows_json)
    elif fmt == "csv":
        csv_lines = ["type,key,params,status"]
        for row in rows_json:
            key = row.get("key", f"mod{row.get('width')}")
            csv_lines.append(f"{row['type']},{key},{row.get('params', '')},{row['status']}")
        text = "\n".join(csv_lines)
    else:
        text = "\n".join(lines)
    _emit(text, settings, "replay", out)
    return 1 if failed else 0


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "identities": cmd_identities,
        "verify": cmd_verify,
        "oracle": cmd_oracle,
        "replay": cmd_replay,
    }
    try:
        return handlers[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
