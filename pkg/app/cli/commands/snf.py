from __future__ import annotations

import argparse

from app.cli.output import emit
from app.schemas.response import SNFSchema
from app.services import InputRepository, smith_normal_form


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("snf", help="Smith normal form D = U*A*V of an integer matrix")
    parser.add_argument("--matrix", required=True, metavar="FILE")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, repository: InputRepository) -> int:
    matrix = repository.load_matrix(args.matrix)
    emit(SNFSchema.of(smith_normal_form(matrix)))
    return 0
