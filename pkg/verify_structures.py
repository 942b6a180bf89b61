#!/usr/bin/env python3
"""
Main script to verify algebroid structures and emit the built-in examples.

    verify_structures.py verify {algebroid,jacobi,glb,glb-point,yb} <file>
    verify_structures.py {triangular,bialgebroidize,poissonize} <file>
    verify_structures.py emit-example <name>
    verify_structures.py list-suites

Exit status: 0 when every check passed (skipped and informational checks do not
count), 1 when some check failed, 2 on malformed input.
"""

import argparse
import json
import logging
import sys
import time
import traceback
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

import config
from algebra.errors import (
    AlgebroidError,
    ParseError,
    StructureFileError,
    UnverifiedStructureError,
)
from algebroids.checks import CheckResult
from schemas.report import CheckRecord, CheckStatus, Report
from structure_loader import (
    EXAMPLE_NAMES,
    emit_example,
    load_structure,
    structure_to_json,
    write_structure,
)
from suite_loader import SuiteLoader, SuiteSpec
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2

VERIFY_SUITES = ('algebroid', 'jacobi', 'glb', 'glb-point', 'yb')
STANDALONE_SUITES = ('triangular', 'bialgebroidize', 'poissonize')

INPUT_ERRORS = (
    ValidationError,
    StructureFileError,
    ParseError,
    FileNotFoundError,
    json.JSONDecodeError,
)


def record_from_result(result: CheckResult, description: str,
                       elapsed_ms: Optional[float] = None,
                       informational: bool = False) -> CheckRecord:
    return CheckRecord(
        check_id=result.check_id,
        description=description,
        status=result.status,
        witness=result.witness,
        detail=result.detail,
        elapsed_ms=elapsed_ms,
        informational=informational or None,
    )


def select_checks(spec: SuiteSpec, requested: Optional[Sequence[str]]) -> List[str]:
    """The declared checks, restricted to ``requested`` but kept in declaration order.

    Raises:
        StructureFileError: A requested id is not declared by the suite
    """
    if not requested:
        return list(spec.checks)
    unknown = [check_id for check_id in requested if check_id not in spec.checks]
    if unknown:
        raise StructureFileError(
            f"Unknown check(s) for suite {spec.name}: {', '.join(unknown)} "
            f"(available: {', '.join(spec.checks)})"
        )
    return [check_id for check_id in spec.checks if check_id in requested]


def run_check(suite: BaseSuite, check_id: str, description: str, timings: bool,
              informational: bool = False) -> CheckRecord:
    """Run one check; an exception inside it becomes a failed record."""
    start = time.perf_counter()
    try:
        result = suite.run_check(check_id)
        elapsed = (time.perf_counter() - start) * 1000
        record = record_from_result(result, description, round(elapsed, 3) if timings else None,
                                   informational)
    except Exception as e:
        elapsed = (time.perf_counter() - start) * 1000
        logger.error(f"Check {check_id} raised {type(e).__name__}: {e}")
        logger.debug(traceback.format_exc())
        record = CheckRecord(
            check_id=check_id,
            description=description,
            status=CheckStatus.FAIL,
            witness=f"{type(e).__name__}: {e}",
            detail='the check raised an exception',
            elapsed_ms=round(elapsed, 3) if timings else None,
            informational=informational or None,
        )
    logger.info(f"  {check_id}: {record.status}")
    return record


def run_suite(suite_name: str, path: str, seed: int = config.DEFAULT_SEED,
              samples: int = config.PROPERTY_SAMPLES, checks: Optional[Sequence[str]] = None,
              timings: bool = False,
              loader: Optional[SuiteLoader] = None) -> Tuple[Report, Optional[BaseSuite]]:
    """
    Run a suite on a structure file.

    Args:
        suite_name: Suite name from suites.yaml
        path: Structure file
        seed: Seed of the randomized property checks
        samples: Number of random samples per property check
        checks: Optional subset of check ids
        timings: Record elapsed milliseconds per check
        loader: SuiteLoader to use (default: config.SUITES_CONFIG)

    Returns:
        (report, suite); the suite is None when a construction precondition failed

    Raises:
        Any of INPUT_ERRORS for malformed input
    """
    loader = loader or SuiteLoader()
    spec = loader.get_suite(suite_name)
    selected = select_checks(spec, checks)
    structure = load_structure(path)
    if structure.kind.value not in spec.kinds:
        raise StructureFileError(
            f"Suite {suite_name} does not accept {structure.kind.value} files "
            f"(accepted: {', '.join(spec.kinds)})"
        )

    report = Report(suite=suite_name, structure=structure.name or Path(path).name,
                    kind=structure.kind.value, seed=seed)
    logger.info(f"Running suite {suite_name} on {report.structure} ({report.kind})")

    try:
        suite = spec.suite_class(structure, seed=seed, samples=samples)
    except UnverifiedStructureError as e:
        logger.warning(f"Precondition failed: {e}")
        failure = e.report.first_failure() if e.report is not None else None
        report.checks.append(CheckRecord(
            check_id='preconditions',
            description='The structure the suite builds on could not be constructed',
            status=CheckStatus.FAIL,
            witness=failure.witness if failure else None,
            detail=str(e),
        ))
        return report, None
    except (ParseError, StructureFileError):
        raise
    except AlgebroidError as e:
        raise StructureFileError(f"{suite_name}: {e}") from e

    for check_id in selected:
        report.checks.append(run_check(suite, check_id, spec.check_descriptions.get(check_id, ''),
                                       timings, check_id in spec.informational))
    return report, suite


def format_text_report(report: Report, notes: Sequence[str] = ()) -> str:
    lines = ["=" * 80,
             f"SUITE {report.suite}: {report.structure} ({report.kind}), seed {report.seed}",
             "=" * 80]
    for record in report.checks:
        status = str(record.status).upper()
        line = f"  {status:<8} {record.check_id:<36} {record.description}"
        if record.informational:
            line += " (informational)"
        if record.elapsed_ms is not None:
            line += f"  [{record.elapsed_ms:.1f} ms]"
        lines.append(line)
        if record.status == CheckStatus.FAIL.value:
            if isinstance(record.witness, list) and record.witness:
                entry = record.witness[0]
                lines.append(f"           witness: ({entry.coeff}) at {entry.indices}")
            elif record.witness:
                lines.append(f"           witness: {record.witness}")
            if record.detail:
                lines.append(f"           detail: {record.detail}")
        elif record.status == CheckStatus.SKIPPED.value and record.detail:
            lines.append(f"           reason: {record.detail}")
    for note in notes:
        lines.append(f"  {note}")
    counts = {status.value: sum(1 for r in report.checks if r.status == status.value)
              for status in CheckStatus}
    lines.append("=" * 80)
    lines.append(f"Checks: {len(report.checks)}  Passed: {counts['pass']}  "
                 f"Failed: {counts['fail']}  Skipped: {counts['skipped']}")
    lines.append("RESULT: " + ("PASS" if report.passed else "FAIL"))
    lines.append("=" * 80)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text',
                        help='Report format (default: text)')
    common.add_argument('--seed', type=int, default=config.DEFAULT_SEED,
                        help=f'Seed for randomized property checks (default: {config.DEFAULT_SEED})')
    common.add_argument('--samples', type=int, default=config.PROPERTY_SAMPLES,
                        help=f'Random samples per property check (default: {config.PROPERTY_SAMPLES})')
    common.add_argument('--checks', help='Comma-separated subset of check ids')
    common.add_argument('--output', help='Write the structure file produced by the command here')
    common.add_argument('--timings', action='store_true', help='Include elapsed time per check')
    common.add_argument('-v', '--verbose', action='store_true', help='Debug logging')

    parser = argparse.ArgumentParser(
        description='Verify Lie algebroid, Jacobi and generalized Lie bialgebroid structures'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[common], help='Run a verification suite')
    verify.add_argument('suite', choices=VERIFY_SUITES)
    verify.add_argument('file', help='Structure file (JSON)')

    for name in STANDALONE_SUITES:
        command = commands.add_parser(name, parents=[common], help=f'Run the {name} suite')
        command.add_argument('file', help='Structure file (JSON)')

    emit = commands.add_parser('emit-example', parents=[common],
                               help=f"Write a built-in example ({', '.join(EXAMPLE_NAMES)})")
    emit.add_argument('name')

    commands.add_parser('list-suites', parents=[common], help='List the configured suites')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )

    try:
        if args.command == 'list-suites':
            for name, info in SuiteLoader().list_suites().items():
                print(f"{name:<16} {info['description']}")
                print(f"{'':<16} kinds: {', '.join(info['kinds'])}")
                print(f"{'':<16} checks: {', '.join(info['checks'])}")
            return EXIT_PASS

        if args.command == 'emit-example':
            structure = emit_example(args.name)
            if args.output:
                write_structure(structure, args.output)
                logger.info(f"Wrote {args.name} to {args.output}")
            else:
                print(structure_to_json(structure))
            return EXIT_PASS

        suite_name = args.suite if args.command == 'verify' else args.command
        checks = [c.strip() for c in args.checks.split(',') if c.strip()] if args.checks else None
        report, suite = run_suite(suite_name, args.file, seed=args.seed, samples=args.samples,
                                  checks=checks, timings=args.timings)
    except INPUT_ERRORS as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT_ERROR

    notes = suite.notes if suite is not None else []
    if args.format == 'json':
        print(report.to_json())
    else:
        print(format_text_report(report, notes))

    if args.output and suite is not None:
        produced = suite.output_structure()
        if produced is not None:
            write_structure(produced, args.output)
            logger.info(f"Wrote {produced.kind.value} structure to {args.output}")
        else:
            logger.warning(f"Suite {suite_name} produced no structure to write")

    logger.info(f"Suite {suite_name}: {'PASS' if report.passed else 'FAIL'}")
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
