from __future__ import annotations

import argparse

from app.cli.output import emit
from app.core.errors import InputError
from app.models import ZSPEC, TruncationMode
from app.schemas.response import (
    CanonicalFormSchema,
    ComplexSchema,
    HomologyGroupSchema,
    HomologySchema,
    K0ClassSchema,
    SupportSchema,
    render_support,
)
from app.services import InputRepository, complexes, ktheory
from app.services.spectra import parse_support

ACTIONS = ("homology", "support", "k0", "truncate")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("complex", help="Perfect complexes of free abelian groups")
    parser.add_argument("action", choices=ACTIONS)
    parser.add_argument("--in", dest="source", required=True, metavar="FILE")
    parser.add_argument("--support", help="full, none, or a comma list of primes")
    parser.add_argument("--at", type=int, help="truncation degree")
    parser.add_argument("--mode", choices=[m.value for m in TruncationMode], default=TruncationMode.ABOVE.value)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, repository: InputRepository) -> int:
    complex_ = repository.load_complex(args.source)

    if args.action == "homology":
        groups = complexes.homology_groups(complex_)
        emit(
            HomologySchema(
                homology=[
                    HomologyGroupSchema(degree=n, group=CanonicalFormSchema.of(group))
                    for n, group in groups.items()
                ]
            )
        )
    elif args.action == "support":
        emit(SupportSchema(support=render_support(complexes.support(complex_))))
    elif args.action == "k0":
        support = complexes.support(complex_) if args.support is None else parse_support(ZSPEC, args.support)
        emit(K0ClassSchema.of(ktheory.class_of_complex(complex_, support)))
    else:
        if args.at is None:
            raise InputError("complex truncate needs a degree via --at")
        if TruncationMode(args.mode) is TruncationMode.ABOVE:
            truncated = complexes.truncate_above(complex_, args.at)
        else:
            truncated = complexes.truncate_below(complex_, args.at)
        emit(ComplexSchema.of(truncated))
    return 0
