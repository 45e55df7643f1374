"""Command-line interface.

Subcommands mirror the verification pipeline:

* ``enumerate`` — find amicable pairs up to a limit; write ``pairs.csv``
  and a count summary;
* ``psum`` — reciprocal partial sums at checkpoints, as JSON or CSV;
* ``lemmas`` — run the certified inequality suite;
* ``constants`` — recompute the range-constant ledger;
* ``bound`` — assemble the full two-sided enclosure;
* ``verify`` — everything above at the working precision, then a
  confirmation rerun at a strictly higher precision with a leaf-by-leaf
  nesting comparison.

Exit codes: 0 — every gating check certified; 1 — a gating check failed
or came back inconclusive (the report is still written); 2 — malformed
usage, configuration, or I/O trouble.  Machine-readable output goes to
stdout and ``--output-dir``; progress and diagnostics go to stderr.

Configuration comes from defaults, then an optional JSON config file
(``--config``), then individual flags — later layers win.  ``--tamper
CHECK_ID`` deliberately breaks one named check so operators can confirm
that a broken claim really flips the exit status; it is refused for ids
the selected subcommand does not evaluate.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from dataclasses import dataclass

from . import report
from .aliquot import enumerate_amicable, partial_sums
from .bounds import (
    ASSEMBLY_CHECK_IDS,
    LEDGER_CHECK_IDS,
    TAIL_CHECK_IDS,
    assemble,
    constant_ledger,
)
from .checks import HOLDS
from .errors import AmiboundsError, ConfigError, DomainError, ResourceError
from .interval import CONFIRM_PRECISION, DEFAULT_PRECISION
from .lemmas import SUITE_IDS, lemma_suite

PIPELINE_CHECK_IDS = tuple(
    sorted(
        set(SUITE_IDS)
        | set(LEDGER_CHECK_IDS)
        | set(TAIL_CHECK_IDS)
        | set(ASSEMBLY_CHECK_IDS)
    )
)


# ----------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    """One validated bundle of knobs shared by every subcommand."""

    enumeration_limit: int = 10**7
    checkpoints: tuple | None = None  # None: powers of ten up to the limit
    sieve_block_bits: int = 20
    precision_bits: int = DEFAULT_PRECISION
    confirm_precision_bits: int = CONFIRM_PRECISION
    worker_count: int = 0  # 0: one worker per available cpu
    output_dir: str = "."
    format: str = "json"

    def validate(self) -> "RunConfig":
        limit = self.enumeration_limit
        if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
            raise ConfigError("enumeration_limit must be an int >= 1")
        if self.checkpoints is not None:
            points = self.checkpoints
            if not isinstance(points, tuple) or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in points
            ):
                raise ConfigError("checkpoints must be a list of ints")
            if any(not 1 <= c <= limit for c in points):
                raise ConfigError(
                    "checkpoints must lie in [1, enumeration_limit]"
                )
            if list(points) != sorted(points):
                raise ConfigError("checkpoints must be ascending")
        bits = self.sieve_block_bits
        if not isinstance(bits, int) or not 12 <= bits <= 26:
            raise ConfigError("sieve_block_bits must be an int in [12, 26]")
        prec = self.precision_bits
        if not isinstance(prec, int) or prec < 2:
            raise ConfigError("precision_bits must be an int >= 2")
        confirm = self.confirm_precision_bits
        if not isinstance(confirm, int) or confirm <= prec:
            raise ConfigError(
                "confirm_precision_bits must exceed precision_bits"
            )
        workers = self.worker_count
        if not isinstance(workers, int) or workers < 0:
            raise ConfigError("worker_count must be an int >= 0")
        if not isinstance(self.output_dir, str) or not self.output_dir:
            raise ConfigError("output_dir must be a nonempty path")
        if self.format not in ("json", "csv"):
            raise ConfigError("format must be 'json' or 'csv'")
        return self

    def workers(self) -> int:
        return self.worker_count if self.worker_count else os.cpu_count() or 1

    def block_size(self) -> int:
        return 1 << self.sieve_block_bits

    def as_json(self) -> dict:
        """Result-affecting knobs only: worker count and output paths are
        run-local and never change any reported number, so embedding them
        would break byte-identity across equivalent runs."""
        return {
            "enumeration_limit": self.enumeration_limit,
            "checkpoints": (
                None if self.checkpoints is None else list(self.checkpoints)
            ),
            "sieve_block_bits": self.sieve_block_bits,
            "precision_bits": self.precision_bits,
            "confirm_precision_bits": self.confirm_precision_bits,
        }


_CONFIG_KEYS = tuple(f.name for f in dataclasses.fields(RunConfig))


def load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            values = json.load(handle)
    except OSError as exc:
        raise ConfigError("cannot read config file: %s" % exc)
    except ValueError as exc:
        raise ConfigError("config file is not valid JSON: %s" % exc)
    if not isinstance(values, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = sorted(set(values) - set(_CONFIG_KEYS))
    if unknown:
        raise ConfigError("unknown config keys: %s" % ", ".join(unknown))
    if isinstance(values.get("checkpoints"), list):
        values["checkpoints"] = tuple(values["checkpoints"])
    return values


def parse_checkpoints(text: str) -> tuple:
    """Comma-separated ints; the empty string is an empty checkpoint list."""
    if text.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError("checkpoints must be comma-separated integers")


def build_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config is not None:
        values.update(load_config_file(args.config))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if isinstance(values.get("checkpoints"), str):
        values["checkpoints"] = parse_checkpoints(values["checkpoints"])
    try:
        config = RunConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc))
    return config.validate()


# ----------------------------------------------------------------------
# shared helpers
# ----------------------------------------------------------------------


def _status(message: str) -> None:
    print(message, file=sys.stderr)


def _progress(phase: str, done: int, total: int) -> None:
    if done == total or done % 8 == 0:
        _status("  %s: %d/%d blocks" % (phase, done, total))


def _emit(config: RunConfig, filename: str, text: str) -> None:
    os.makedirs(config.output_dir, exist_ok=True)
    path = os.path.join(config.output_dir, filename)
    with open(path, "w", encoding="ascii", newline="") as handle:
        handle.write(text)
    sys.stdout.write(text)


def _failing_ids(checks) -> list:
    return sorted(
        {c.check_id for c in checks if c.gating and c.verdict != HOLDS}
    )


def _check_tamper(tamper: str | None, allowed, what: str) -> None:
    if tamper is not None and tamper not in allowed:
        raise ConfigError(
            "--tamper %r is not a check id of %s" % (tamper, what)
        )


def _inconclusive_doc(kind: str, exc: AmiboundsError) -> dict:
    return report.document(
        kind,
        {
            "verified": False,
            "inconclusive": True,
            "error": str(exc),
            "failing": [],
        },
    )


def _enumerate(config: RunConfig):
    start = time.monotonic()
    result = enumerate_amicable(
        config.enumeration_limit,
        block_size=config.block_size(),
        workers=config.workers(),
        progress=_progress,
    )
    _status(
        "enumerated %d pairs (%d members counted) below %d in %.2f s"
        % (
            len(result.pairs),
            len(result.members),
            config.enumeration_limit,
            time.monotonic() - start,
        )
    )
    return result


def _verdict_exit(verified: bool) -> int:
    return 0 if verified else 1


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_enumerate(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, (), "enumerate (it evaluates no checks)")
    result = _enumerate(config)
    os.makedirs(config.output_dir, exist_ok=True)
    report.write_pairs_csv(
        os.path.join(config.output_dir, "pairs.csv"), result
    )
    doc = report.document("enumeration", report.enumeration_json(result))
    _emit(config, "enumerate.json", report.dump_json(doc))
    return 0


def cmd_psum(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, (), "psum (it evaluates no checks)")
    result = _enumerate(config)
    table = partial_sums(
        result, checkpoints=config.checkpoints, precision=config.precision_bits
    )
    if config.format == "csv":
        os.makedirs(config.output_dir, exist_ok=True)
        path = os.path.join(config.output_dir, "psum.csv")
        report.write_table_csv(path, table)
        with open(path, "r", encoding="ascii") as handle:
            sys.stdout.write(handle.read())
    else:
        doc = report.document("partial-sums", report.table_json(table))
        _emit(config, "psum.json", report.dump_json(doc))
    return 0


def cmd_lemmas(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, SUITE_IDS, "the inequality suite")
    suite = lemma_suite(precision=config.precision_bits, tamper=tamper)
    failing = _failing_ids(suite)
    doc = report.document(
        "inequality-suite",
        {
            "precision": config.precision_bits,
            "checks": report.checks_json(suite),
            "verified": not failing,
            "failing": failing,
        },
    )
    _emit(config, "lemmas.json", report.dump_json(doc))
    if failing:
        _status("failing checks: %s" % ", ".join(failing))
    return _verdict_exit(not failing)


def cmd_constants(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, LEDGER_CHECK_IDS, "the range-constant ledger")
    try:
        ledger = constant_ledger(
            precision=config.precision_bits, tamper=tamper
        )
    except (DomainError, ResourceError) as exc:
        _emit(
            config,
            "constants.json",
            report.dump_json(_inconclusive_doc("range-constants", exc)),
        )
        _status("inconclusive: %s" % exc)
        return 1
    failing = _failing_ids(ledger.checks)
    doc = report.document("range-constants", report.ledger_json(ledger))
    doc["verified"] = not failing
    doc["failing"] = failing
    _emit(config, "constants.json", report.dump_json(doc))
    if failing:
        _status("failing checks: %s" % ", ".join(failing))
    return _verdict_exit(not failing)


def cmd_bound(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, PIPELINE_CHECK_IDS, "the verification pipeline")
    result = _enumerate(config)
    table = partial_sums(
        result, checkpoints=config.checkpoints, precision=config.precision_bits
    )
    try:
        bound = assemble(table, precision=config.precision_bits, tamper=tamper)
    except (DomainError, ResourceError) as exc:
        _emit(
            config,
            "bound.json",
            report.dump_json(_inconclusive_doc("bound-report", exc)),
        )
        _status("inconclusive: %s" % exc)
        return 1
    body = report.bound_json(bound)
    body["partial_sums"] = report.table_json(table)
    _emit(
        config,
        "bound.json",
        report.dump_json(report.document("bound-report", body)),
    )
    if bound.failing:
        _status("failing checks: %s" % ", ".join(bound.failing))
    return _verdict_exit(bound.verified)


def _pipeline_section(config: RunConfig, result, precision, tamper) -> dict:
    """One full pipeline pass at one precision, as a document body."""
    table = partial_sums(
        result, checkpoints=config.checkpoints, precision=precision
    )
    bound = assemble(table, precision=precision, tamper=tamper)
    body = report.bound_json(bound)
    body["partial_sums"] = report.table_json(table)
    return body


def cmd_verify(config: RunConfig, tamper: str | None) -> int:
    _check_tamper(tamper, PIPELINE_CHECK_IDS, "the verification pipeline")
    result = _enumerate(config)

    sections: dict = {
        "config": config.as_json(),
        "enumeration": report.enumeration_json(result),
    }
    failing: list = []
    inconclusive = None
    try:
        _status("primary pass at %d bits" % config.precision_bits)
        primary = _pipeline_section(
            config, result, config.precision_bits, tamper
        )
        _status(
            "confirmation pass at %d bits" % config.confirm_precision_bits
        )
        confirmation = _pipeline_section(
            config, result, config.confirm_precision_bits, tamper
        )
        nesting = report.nesting_report(primary, confirmation)
        sections["primary"] = primary
        sections["confirmation"] = confirmation
        sections["nesting"] = nesting
        failing = sorted(set(primary["failing"]) | set(confirmation["failing"]))
        if not nesting["ok"]:
            failing.append("confirmation-nesting")
        verified = not failing
    except (DomainError, ResourceError) as exc:
        inconclusive = str(exc)
        sections["inconclusive"] = True
        sections["error"] = inconclusive
        verified = False

    sections["verified"] = verified
    sections["failing"] = failing
    _emit(
        config,
        "verify.json",
        report.dump_json(report.document("verify", sections)),
    )
    if inconclusive is not None:
        _status("inconclusive: %s" % inconclusive)
    elif failing:
        _status("failing checks: %s" % ", ".join(failing))
    else:
        _status(
            "verified: %d quantities, %s nested at the higher precision"
            % (sections["nesting"]["total"], sections["nesting"]["nested"])
        )
    return _verdict_exit(verified)


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "psum": cmd_psum,
    "lemmas": cmd_lemmas,
    "constants": cmd_constants,
    "bound": cmd_bound,
    "verify": cmd_verify,
}


# ----------------------------------------------------------------------
# argument parsing and entry point
# ----------------------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        metavar="FILE",
        help="JSON file with run-configuration keys; flags override it",
    )
    common.add_argument(
        "--output-dir", dest="output_dir", metavar="DIR",
        help="directory for artifacts (default: current directory)",
    )
    common.add_argument(
        "--limit", dest="enumeration_limit", type=int, metavar="N",
        help="enumerate amicable pairs with smaller member <= N",
    )
    common.add_argument(
        "--checkpoints", metavar="N,N,...",
        help="partial-sum checkpoints (empty string: none; "
        "default: powers of ten up to the limit)",
    )
    common.add_argument(
        "--block-bits", dest="sieve_block_bits", type=int, metavar="BITS",
        help="sieve block size as a power of two (default: 20)",
    )
    common.add_argument(
        "--precision", dest="precision_bits", type=int, metavar="BITS",
        help="working interval precision (default: %d)" % DEFAULT_PRECISION,
    )
    common.add_argument(
        "--confirm-precision", dest="confirm_precision_bits", type=int,
        metavar="BITS",
        help="confirmation-pass precision, must exceed --precision "
        "(default: %d)" % CONFIRM_PRECISION,
    )
    common.add_argument(
        "--workers", dest="worker_count", type=int, metavar="N",
        help="sieve worker threads (default: one per cpu)",
    )
    common.add_argument(
        "--format", choices=("json", "csv"),
        help="psum table format (other commands always write json)",
    )
    common.add_argument(
        "--tamper", metavar="CHECK_ID",
        help="deliberately break one named check to demonstrate detection",
    )
    return common


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amibounds",
        description="Certified enclosures for the reciprocal sum of the "
        "amicable numbers: enumeration, partial sums, an inequality suite, "
        "and an end-to-end verified upper/lower bound.",
    )
    common = _common_flags()
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "enumerate", parents=[common],
        help="find amicable pairs and write pairs.csv",
    )
    sub.add_parser(
        "psum", parents=[common],
        help="reciprocal partial sums at checkpoints",
    )
    sub.add_parser(
        "lemmas", parents=[common],
        help="run the certified inequality suite",
    )
    sub.add_parser(
        "constants", parents=[common],
        help="recompute the range-constant ledger",
    )
    sub.add_parser(
        "bound", parents=[common],
        help="assemble the two-sided enclosure",
    )
    sub.add_parser(
        "verify", parents=[common],
        help="full pipeline plus a higher-precision confirmation rerun",
    )
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        config = build_config(args)
        return _COMMANDS[args.command](config, args.tamper)
    except (ConfigError, ResourceError) as exc:
        _status("error: %s" % exc)
        return 2
    except OSError as exc:
        _status("i/o error: %s" % exc)
        return 2
    except DomainError as exc:
        _status("inconclusive: %s" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
