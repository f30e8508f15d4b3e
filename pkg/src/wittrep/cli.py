"""Command-line entry point: ``wittrep {homdim,char,hilbert,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .catmod import ModulePresentation, formal_character, hilbert_specialized
from .combinatorics import DEFAULT_CAP, Partition
from .errors import CapExceeded, DomainError, PreconditionError
from .operad import OperadId
from .symfunc import fit_rational
from .wiring import hom_dimension, schur_weyl_oracle

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3
DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    command: str
    operad: OperadId
    degree: int | None
    vars: int
    cap: int
    fmt: str
    seed: int
    input: str | None
    principal: int | None
    oracle: bool
    scenario: str | None


def _positive(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--operad", default="com", type=str.lower, choices=["trivial", "com", "comnu", "as"])
    common.add_argument("--degree", type=_positive, help="truncation degree D")
    common.add_argument("--vars", type=_positive, default=1, help="number of variables n")
    common.add_argument("--cap", type=_positive, default=None, help="enumeration size cap")
    common.add_argument("--format", dest="fmt", default="json", choices=["json", "csv", "table"])
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--input", help="presentation file (JSON)")
    common.add_argument("--principal", type=_positive, help="use the free module on one generator of this degree")

    parser = argparse.ArgumentParser(prog="wittrep", description="Exact computations with operadic wiring categories.")
    sub = parser.add_subparsers(dest="command", required=True)
    h = sub.add_parser("homdim", parents=[common], help="table of hom-space dimensions")
    h.add_argument("--oracle", action="store_true", help="cross-check against the equivariant-map oracle (n, m <= 3)")
    sub.add_parser("char", parents=[common], help="formal character of a presentation")
    sub.add_parser("hilbert", parents=[common], help="specialized Hilbert series and a fitted rational form")
    v = sub.add_parser("verify", parents=[common], help="run a named scenario")
    v.add_argument("scenario")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        operad=OperadId.parse(args.operad),
        degree=args.degree,
        vars=args.vars,
        cap=DEFAULT_CAP if args.cap is None else args.cap,
        fmt=args.fmt,
        seed=args.seed,
        input=args.input,
        principal=args.principal,
        oracle=getattr(args, "oracle", False),
        scenario=getattr(args, "scenario", None),
    )


def _presentation(cfg: RunConfig) -> ModulePresentation:
    if cfg.input and cfg.principal is not None:
        raise DomainError("give either --input or --principal, not both")
    if cfg.principal is not None:
        return ModulePresentation.principal(cfg.operad, cfg.principal)
    if not cfg.input:
        raise DomainError("a presentation is required: use --input PATH or --principal d")
    try:
        with open(cfg.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {cfg.input}: {exc.strerror}") from exc
    return ModulePresentation.loads(text)


# --- commands ------------------------------------------------------------

def cmd_homdim(cfg: RunConfig) -> dict:
    size = 3 if cfg.degree is None else cfg.degree
    rows = []
    for n in range(size + 1):
        for m in range(size + 1):
            row = {"n": n, "m": m, "dim": hom_dimension(cfg.operad, n, m, cfg.cap)}
            if cfg.oracle and n <= 3 and m <= 3:
                row["oracle"] = schur_weyl_oracle(cfg.operad, n, m, cap=cfg.cap).dimension
            rows.append(row)
    return {"command": "homdim", "operad": cfg.operad.value, "rows": rows}


def cmd_char(cfg: RunConfig) -> dict:
    M = _presentation(cfg)
    D = 4 if cfg.degree is None else cfg.degree
    ch = formal_character(M, D, cfg.cap)
    return {"command": "char", "operad": M.operad.value, "D": D, "character": ch.to_json()}


def _fit(M: ModulePresentation, series, n: int, D: int, holdout: int):
    """Try denominator budgets ``B = 0, 1, ...``; small budgets leave room for a longer numerator."""
    d = max(M.generators, default=1) or 1
    b_max = min(n * d * (d + 1) // 2, D - holdout - 1)
    fit, tried = None, 0
    for B in range(b_max + 1):
        fit = fit_rational(series, d, B, holdout=holdout)
        tried += fit.candidates_tried
        if fit.success:
            break
    if fit is None:
        raise PreconditionError(f"truncation degree {D} leaves no room for a fit with {holdout} held-out terms")
    fit.candidates_tried = tried
    return fit


def cmd_hilbert(cfg: RunConfig, holdout: int = 5) -> dict:
    M = _presentation(cfg)
    D = 15 if cfg.degree is None else cfg.degree
    n = max(cfg.vars, 1)
    series = hilbert_specialized(M, n, D)
    out = {
        "command": "hilbert",
        "operad": M.operad.value,
        "vars": n,
        "D": D,
        "coefficients": [str(c) for c in series.coefficient_list()],
    }
    try:
        fit = _fit(M, series, n, D, holdout)
    except PreconditionError as exc:
        out["fit"] = {"success": False, "reason": str(exc)}
    else:
        out["fit"] = fit.to_json()
        out["fit"]["form_text"] = str(fit.form) if fit.form else None
    return out


def cmd_verify(cfg: RunConfig) -> dict:
    from .specialize import SCENARIOS

    name = cfg.scenario
    if name not in SCENARIOS:
        raise DomainError(f"unknown scenario {name!r}; known: {', '.join(sorted(SCENARIOS))}")
    random.seed(cfg.seed)
    report = SCENARIOS[name]()
    return {"command": "verify", "scenario": name, "pass": bool(report.get("ok")), "report": report}


COMMANDS = {"homdim": cmd_homdim, "char": cmd_char, "hilbert": cmd_hilbert, "verify": cmd_verify}


# --- output --------------------------------------------------------------

def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _table_rows(result: dict) -> tuple[list[str], list[list]]:
    cmd = result["command"]
    if cmd == "homdim":
        header = list(result["rows"][0].keys()) if result["rows"] else ["n", "m", "dim"]
        return header, [[row[h] for h in header] for row in result["rows"]]
    if cmd == "char":
        return ["partition", "coeff"], [[" ".join(map(str, t["partition"])) or "()", t["coeff"]]
                                        for t in result["character"]["terms"]]
    if cmd == "hilbert":
        rows = [[d, c] for d, c in enumerate(result["coefficients"])]
        fit = result["fit"]
        rows.append(["fit", fit.get("form_text") or "none"])
        return ["degree", "coeff"], rows
    flat = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        else:
            flat.append([prefix, json.dumps(obj, sort_keys=True) if isinstance(obj, list) else obj])

    walk("", result["report"])
    return ["key", "value"], [["pass", result["pass"]]] + flat


def render(result: dict, fmt: str) -> str:
    result = _plain(result)
    if fmt == "json":
        return json.dumps(result, indent=2, sort_keys=True)
    header, rows = _table_rows(result)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(str(r[i])) for r in cells) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = _config(args)
        result = COMMANDS[cfg.command](cfg)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(result, cfg.fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
