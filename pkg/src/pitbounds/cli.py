"""Command-line client.

Thin wrapper over the service handlers (the HTTP app exposes the same ones):
flags build a request model, the handler runs in process, and the response
is serialized deterministically.  Exit codes: 0 success, 1 a verification
check failed, 2 invalid parameters or preconditions, 64 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from .checks import load_grid
from .errors import ParameterError, QuadratureError, ResourceLimitError
from . import schemas
from . import service

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_USAGE = 64

SIGNIFICANT_DIGITS = 12


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _round_floats(obj: Any) -> Any:
    """Round every float to 12 significant digits for stable diffs."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    return obj


def _fmt_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def _emit_json(payload: dict) -> str:
    return json.dumps(_round_floats(payload), sort_keys=True, indent=2) + "\n"


def _emit_rows(header: list[str], rows: list[list[Any]], fmt: str) -> str:
    cells = [[_fmt_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [
        max(len(header[i]), max((len(r[i]) for r in cells), default=0))
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()]
    for row in cells:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(row))).rstrip())
    return "\n".join(lines) + "\n"


def _params_kv(parameters: dict) -> str:
    return ";".join(f"{k}={_fmt_cell(v)}" for k, v in sorted(parameters.items()))


def _load_config(path: Optional[str]) -> dict[str, str]:
    """Key-value config file: one `key = value` per line, # comments."""
    if path is None:
        return {}
    values: dict[str, str] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParameterError(f"malformed config line: {raw.rstrip()}")
            key, value = line.split("=", 1)
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _build_parser() -> _Parser:
    parser = _Parser(prog="pitbounds", description=__doc__)
    parser.add_argument("--config", help="key=value defaults file", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_flags(p: _Parser) -> None:
        p.add_argument("--delta", type=int, help="absolute discriminant (>= 9)")
        p.add_argument("--r2", type=int, default=1)
        p.add_argument("--nf", type=int, default=1)
        p.add_argument("--hstar", type=int, default=1)
        p.add_argument("--eta", type=float, default=0.25)
        p.add_argument("--w", type=float, default=58.0)

    def add_format(p: _Parser) -> None:
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")

    p = sub.add_parser("threshold", help="log-x thresholds for a target epsilon")
    add_field_flags(p)
    p.add_argument("--eps", type=float)
    p.add_argument("--c1-mode", choices=["printed", "derived"], default="printed")
    add_format(p)

    p = sub.add_parser("bounds", help="cumulative bound coefficients and envelope at log x")
    add_field_flags(p)
    p.add_argument("--log-x", type=float)
    add_format(p)

    p = sub.add_parser("ledger", help="evaluated constant chain with reconciliation flags")
    add_field_flags(p)
    p.add_argument("--e0", type=int, choices=[0, 1], default=0)
    p.add_argument("--eps-chi", type=int, choices=[0, 1], default=0)
    p.add_argument("--log-x", type=float, default=None)
    add_format(p)

    p = sub.add_parser("verify-lemmas", help="run the inequality checks over a grid")
    p.add_argument("--grid", default=None, help="grid JSON path (packaged default if omitted)")
    p.add_argument("--rel-err", type=float, default=1e-8)
    add_format(p)

    p = sub.add_parser("psi", help="empirical prime-ideal sums by class")
    p.add_argument("--d", type=int, help="squarefree negative field parameter")
    p.add_argument("--n", type=int, default=1, help="conductor generator")
    p.add_argument("--x", type=float)
    add_format(p)

    p = sub.add_parser("logderiv", help="truncated log-derivative vs the majorant")
    p.add_argument("--d", type=int)
    p.add_argument("--sigma", type=float, default=1.5)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--x-cut", type=float, default=1e6)
    p.add_argument("--ref-delta", type=int, default=9)
    add_format(p)

    p = sub.add_parser("cm-verify", help="check one CM pair")
    for flag in ("--p", "--q", "--t", "--f", "--delta"):
        p.add_argument(flag, type=int)
    add_format(p)

    p = sub.add_parser("cm-search", help="search CM pairs for a discriminant")
    p.add_argument("--delta", type=int)
    p.add_argument("--p-min", type=int, default=2)
    p.add_argument("--p-max", type=int)
    p.add_argument("--q-min", type=int, default=2)
    p.add_argument("--limit", type=int, default=None)
    add_format(p)

    return parser


# Flags that must be present after the config file has been merged in.
_REQUIRED = {
    "threshold": ("delta", "eps"),
    "bounds": ("delta", "log_x"),
    "ledger": ("delta",),
    "verify-lemmas": (),
    "psi": ("d", "x"),
    "logderiv": ("d",),
    "cm-verify": ("p", "q", "t", "f", "delta"),
    "cm-search": ("delta", "p_max"),
}


def _apply_config(argv: Sequence[str], args: argparse.Namespace) -> argparse.Namespace:
    config = _load_config(args.config)
    if not config:
        return args
    given = {a.split("=", 1)[0].lstrip("-").replace("-", "_") for a in argv if a.startswith("--")}
    for key, value in config.items():
        if key in given or not hasattr(args, key):
            continue
        current = getattr(args, key)
        caster = type(current) if current is not None else str
        if caster is bool:
            setattr(args, key, value.lower() in ("1", "true", "yes"))
        else:
            try:
                setattr(args, key, caster(value) if caster is not str else value)
            except ValueError as exc:
                raise ParameterError(f"config value {key}={value!r} not usable") from exc
    return args


def _dispatch(args: argparse.Namespace) -> tuple[dict, list[str], list[list[Any]], int]:
    """Run the subcommand; returns (payload, csv header, csv rows, exit code)."""
    if args.command == "threshold":
        req = schemas.ThresholdRequest(
            delta=args.delta, r2=args.r2, nf=args.nf, hstar=args.hstar,
            eta=args.eta, w=args.w, eps=args.eps, c1_mode=args.c1_mode,
        )
        resp = service.handle_threshold(req)
        payload = resp.model_dump()
        header = [
            "delta", "r2", "nf", "hstar", "eps", "c1_printed", "c1_derived",
            "log_x_printed", "log_x_rigorous", "min_log_x_effective",
        ]
        rows = [[payload[k] if k != "min_log_x_effective" else payload["min_log_x"]["effective"] for k in header]]
        return payload, header, rows, EXIT_OK

    if args.command == "bounds":
        req = schemas.BoundsRequest(
            delta=args.delta, r2=args.r2, nf=args.nf, hstar=args.hstar,
            eta=args.eta, w=args.w, log_x=args.log_x,
        )
        resp = service.handle_bounds(req)
        payload = resp.model_dump()
        header = ["delta", "r2", "nf", "hstar", "log_x", "c2", "c3",
                  "valid_at_log_x", "rel_lower", "rel_upper"]
        rows = [[payload[k] for k in header]]
        return payload, header, rows, EXIT_OK

    if args.command == "ledger":
        req = schemas.LedgerRequest(
            delta=args.delta, r2=args.r2, nf=args.nf, hstar=args.hstar,
            eta=args.eta, w=args.w, e0=args.e0, eps_chi=args.eps_chi,
            log_x=args.log_x,
        )
        resp = service.handle_ledger(req)
        payload = resp.model_dump()
        header = ["name", "derived", "printed", "gap", "flag", "location", "note", "value_at_params"]
        rows = [[e[k] for k in header] for e in payload["entries"]]
        return payload, header, rows, EXIT_OK

    if args.command == "verify-lemmas":
        grid = load_grid(args.grid)
        req = schemas.VerifyRequest(grid=grid, rel_err=args.rel_err)
        resp = service.handle_verify(req)
        payload = resp.model_dump()
        header = ["check_name", "parameters", "bound_value", "measured_value", "slack", "passed"]
        rows = [
            [r["check_name"], _params_kv(r["parameters"]), r["bound_value"],
             r["measured_value"], r["slack"], r["passed"]]
            for r in payload["reports"]
        ]
        code = EXIT_OK if resp.all_passed else EXIT_CHECK_FAILED
        return payload, header, rows, code

    if args.command == "psi":
        req = schemas.PsiRequest(d=args.d, n=args.n, x=args.x)
        resp = service.handle_psi(req)
        payload = resp.model_dump()
        header = ["x", "class_index", "psi", "reference", "ratio", "lower_bound", "upper_bound"]
        rows = [[r[k] for k in header] for r in payload["rows"]]
        return payload, header, rows, EXIT_OK

    if args.command == "logderiv":
        req = schemas.LogderivRequest(
            d=args.d, sigma=args.sigma, t=args.t, x_cut=args.x_cut,
            ref_delta=args.ref_delta,
        )
        resp = service.handle_logderiv(req)
        payload = resp.model_dump()
        header = ["d", "sigma", "t", "x_cut", "value_re", "value_im",
                  "combined_abs", "tail_bound", "majorant", "slack_factor"]
        rows = [[payload[k] for k in header]]
        return payload, header, rows, EXIT_OK

    if args.command == "cm-verify":
        req = schemas.CmVerifyRequest(p=args.p, q=args.q, t=args.t, f=args.f, delta=args.delta)
        resp = service.handle_cm_verify(req)
        payload = resp.model_dump()
        header = ["p", "q", "t", "f", "delta", "valid", "failure_reason"]
        rows = [[payload[k] for k in header]]
        code = EXIT_OK if resp.valid else EXIT_CHECK_FAILED
        return payload, header, rows, code

    if args.command == "cm-search":
        req = schemas.CmSearchRequest(
            delta=args.delta, p_min=args.p_min, p_max=args.p_max,
            q_min=args.q_min, limit=args.limit,
        )
        resp = service.handle_cm_search(req)
        payload = resp.model_dump()
        header = ["p", "q", "t", "f", "delta"]
        rows = [[c[k] for k in header] for c in payload["candidates"]]
        return payload, header, rows, EXIT_OK

    raise ParameterError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args = _apply_config(argv, args)
        missing = [
            name for name in _REQUIRED[args.command] if getattr(args, name) is None
        ]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            print(f"pitbounds {args.command}: missing required flags: {flags}", file=sys.stderr)
            return EXIT_USAGE
        payload, header, rows, code = _dispatch(args)
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ParameterError, ResourceLimitError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except QuadratureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        sys.stdout.write(_emit_rows(header, rows, fmt))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
