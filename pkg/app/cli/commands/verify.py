from __future__ import annotations

import argparse
from pathlib import Path

from app.cli.output import emit
from app.core.errors import InputError
from app.models import SuiteName
from app.schemas.response import VerifyReportSchema
from app.services import InputRepository, VerificationRunner


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Run seeded verification suites")
    parser.add_argument("--suite", required=True, help=", ".join(s.value for s in SuiteName))
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--report", metavar="FILE", help="also write the report to this file")
    parser.add_argument("--workers", type=int, help="worker processes (default from WIDESUPP_VERIFY_WORKERS)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, repository: InputRepository) -> int:
    runner = VerificationRunner(workers=args.workers)
    report = VerifyReportSchema.of(runner.run(SuiteName.from_raw(args.suite), args.trials, args.seed))
    if args.report:
        path = Path(args.report)
        try:
            path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            raise InputError(f"{path}: cannot write report: {exc.strerror or exc}") from exc
    emit(report)
    return 0 if report.failures == 0 else 1
