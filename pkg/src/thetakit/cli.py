"""Command-line experiment runner.

    thetakit --experiment symbol-table --p 7 --n 3 --no-timestamp
    thetakit --config run.cfg --p 13 --format csv --out table.csv

A config file holds one ``key=value`` pair per line; ``#`` starts a comment.
Flags override file values.  Exit status: 0 when every verdict passes, 1 when
one fails, 2 on a usage error, 3 when an enumeration guard is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import experiments as ex
from . import localfield as lf
from .finmod import GuardExceeded, check_guard
from .report import ReportDocument, matrix_to_csv, rows_to_csv

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _positive(lo: int = 1) -> Callable[[str], int]:
    def conv(text: str) -> int:
        value = int(text)
        if value < lo:
            raise ValueError(f"must be >= {lo}")
        return value

    conv.__name__ = "integer"
    return conv


def _rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    if value == 0:
        raise ValueError("must be nonzero")
    return value


_rational.__name__ = "rational num/den"


def _choice(*options: str) -> Callable[[str], str]:
    def conv(text: str) -> str:
        if text not in options:
            raise ValueError(f"must be one of {', '.join(options)}")
        return text

    conv.__name__ = "choice"
    return conv


def _h_selector(text: str) -> str:
    if text in ("zero", "full"):
        return text
    head, sep, tail = text.partition(":")
    if head == "pair" and sep and tail.isdigit():
        return text
    raise ValueError("must be zero, full or pair:<k>")


_h_selector.__name__ = "H selector"

# key -> (converter, default or REQUIRED)
REQUIRED = object()
_SPECS: dict[str, dict[str, tuple[Callable[[str], Any], Any]]] = {
    "cohomology-survey": {
        "catalog": (str, "all"),
        "max-group": (_positive(), 12),
        "max-module": (_positive(), 16),
    },
    "heisenberg-verify": {"n": (_positive(2), REQUIRED), "g": (_positive(), REQUIRED)},
    "obstruction-table": {"catalog": (str, "all")},
    "symbol-table": {
        "p": (_positive(3), REQUIRED),
        "n": (_positive(2), REQUIRED),
        "a": (_rational, None),
        "b": (_rational, None),
    },
    "prop28-search": {
        "p": (_positive(3), REQUIRED),
        "n": (_positive(2), REQUIRED),
        "g": (_positive(), REQUIRED),
        "H": (_h_selector, "zero"),
    },
    "lang-tate-index": {"n": (_positive(2), REQUIRED), "g": (_positive(), REQUIRED)},
}
EXPERIMENTS = tuple(_SPECS)
_OUTPUT = {"out": (str, None), "format": (_choice("json", "csv", "text"), "json")}
_ALL_KEYS = sorted({k for spec in _SPECS.values() for k in spec} | set(_OUTPUT))


@dataclass
class ExperimentConfig:
    experiment: str
    parameters: dict[str, Any] = field(default_factory=dict)
    out: str | None = None
    format: str = "json"
    timestamp: bool = True


def parse_config_text(text: str, source: str = "<config>") -> dict[str, tuple[str, str]]:
    """key -> (raw value, location) for a key=value file."""
    values: dict[str, tuple[str, str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: malformed line, expected key=value")
        values[key] = (value, f"{source}:{lineno}")
    return values


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="thetakit", description="Run a finite-model verification experiment.")
    ap.add_argument("--config", help="key=value config file; flags override its values")
    ap.add_argument("--experiment", help="one of: " + ", ".join(EXPERIMENTS))
    for key in _ALL_KEYS:
        ap.add_argument(f"--{key}", dest=f"opt_{key}", default=None)
    ap.add_argument("--no-timestamp", action="store_true", help="omit the timestamp (byte-stable output)")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


class _UsageExit(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise _UsageExit(status, message or "")


def parse_config(argv: list[str] | None = None) -> ExperimentConfig:
    ns = _parser().parse_args(argv)

    raw: dict[str, tuple[str, str]] = {}
    if ns.config:
        try:
            text = Path(ns.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"--config: cannot read {ns.config}: {exc.strerror}") from None
        raw.update(parse_config_text(text, ns.config))
    if ns.experiment is not None:
        raw["experiment"] = (ns.experiment, "--experiment")
    for key in _ALL_KEYS:
        value = getattr(ns, f"opt_{key}")
        if value is not None:
            raw[key] = (value, f"--{key}")
    if ns.no_timestamp:
        raw["no-timestamp"] = ("true", "--no-timestamp")

    if "experiment" not in raw:
        raise ConfigError("no experiment given (use --experiment or experiment= in the config file)")
    experiment, where = raw.pop("experiment")
    if experiment not in _SPECS:
        raise ConfigError(f"{where}: unknown experiment {experiment!r}; choose from {', '.join(EXPERIMENTS)}")

    timestamp = True
    if "no-timestamp" in raw:
        value, where = raw.pop("no-timestamp")
        if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
            raise ConfigError(f"{where}: key 'no-timestamp' expects a boolean, got {value!r}")
        timestamp = value.lower() not in ("true", "1", "yes")

    spec = {**_SPECS[experiment], **_OUTPUT}
    params: dict[str, Any] = {}
    for key, (value, where) in raw.items():
        if key not in spec:
            raise ConfigError(f"{where}: unknown key {key!r} for experiment {experiment}")
        conv = spec[key][0]
        try:
            params[key] = conv(value)
        except ValueError as exc:
            raise ConfigError(
                f"{where}: key {key!r} expects {conv.__name__}, got {value!r} ({exc})"
            ) from None
    for key, (_, default) in spec.items():
        if key not in params:
            if default is REQUIRED:
                raise ConfigError(f"experiment {experiment} requires key {key!r}")
            if default is not None:
                params[key] = default
    out = params.pop("out", None)
    fmt = params.pop("format")
    return ExperimentConfig(experiment, params, out, fmt, timestamp)


def validate(config: ExperimentConfig) -> None:
    """Guard and domain checks that do not need the heavy computation."""
    p = config.parameters
    try:
        if config.experiment == "heisenberg-verify":
            ex.heisenberg_guard(p["n"], p["g"])
        elif config.experiment in ("symbol-table", "prop28-search"):
            lf.TameLocalModel(p["p"], p["n"])
            if config.experiment == "prop28-search":
                check_guard("tuple group", p["n"] ** (4 * p["g"]))
        elif config.experiment == "lang-tate-index":
            check_guard("character tuples", p["n"] ** (2 * p["g"]))
    except GuardExceeded:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def run(config: ExperimentConfig) -> tuple[ReportDocument, str]:
    """Run the experiment; returns the report and its rendering."""
    validate(config)
    p = config.parameters
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if config.timestamp else None
    doc = ReportDocument(config.experiment, dict(p), __version__, stamp)
    for key in ("a", "b"):
        if key in doc.parameters:
            doc.parameters[key] = str(doc.parameters[key])
    matrix = None
    if config.experiment == "cohomology-survey":
        ex.run_cohomology_survey(doc, p["catalog"], p["max-group"], p["max-module"])
    elif config.experiment == "heisenberg-verify":
        ex.run_heisenberg_verify(doc, p["n"], p["g"])
    elif config.experiment == "obstruction-table":
        ex.run_obstruction_table(doc, p["catalog"])
    elif config.experiment == "symbol-table":
        model = lf.TameLocalModel(p["p"], p["n"])
        matrix = ex.symbol_labels(model), ex.run_symbol_table(doc, p["p"], p["n"])
        if "a" in p or "b" in p:
            a, b = p.get("a", Fraction(1)), p.get("b", Fraction(1))
            ca, cb = lf.reduce(a, model), lf.reduce(b, model)
            doc.rows.append({"a": str(a), "b": str(b), "a_class": [ca.v, ca.w],
                             "b_class": [cb.v, cb.w], "symbol": lf.tame_symbol(ca, cb, model)})
    elif config.experiment == "prop28-search":
        ex.run_prop28_search(doc, p["p"], p["n"], p["g"], p["H"])
    elif config.experiment == "lang-tate-index":
        ex.run_lang_tate_index(doc, p["n"], p["g"])
    return doc, render(doc, config.format, matrix)


def render(doc: ReportDocument, fmt: str, matrix=None) -> str:
    if fmt == "json":
        return doc.to_json()
    if fmt == "csv":
        if matrix is not None:
            return matrix_to_csv(*matrix)
        return rows_to_csv(doc.rows)
    lines = [f"{doc.experiment} {doc.parameters}", f"rows: {len(doc.rows)}"]
    lines += [f"[{'PASS' if v.passed else 'FAIL'}] {v.name}" for v in doc.verdicts]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
        doc, text = run(config)
    except _UsageExit as exc:
        return exc.status
    except ConfigError as exc:
        print(f"thetakit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"thetakit: error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
