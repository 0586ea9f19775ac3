from __future__ import annotations

import argparse

from app.cli.output import emit
from app.core.errors import InputError
from app.models import ZSPEC
from app.schemas.response import (
    CanonicalFormSchema,
    HomExtSchema,
    K0ClassSchema,
    SplitPieceSchema,
    SplitSchema,
    SupportSchema,
    render_support,
)
from app.services import InputRepository, hovey, ktheory, zmodules
from app.services.spectra import parse_support

ACTIONS = ("canon", "support", "split", "k0", "hom", "ext1")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("module", help="Finitely generated abelian groups")
    parser.add_argument("action", choices=ACTIONS)
    parser.add_argument("--in", dest="source", required=True, metavar="FILE")
    parser.add_argument("--support", help="full, none, or a comma list of primes")
    parser.add_argument("--with", dest="other", metavar="FILE", help="second module for hom and ext1")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, repository: InputRepository) -> int:
    module = repository.load_module(args.source)

    if args.action == "canon":
        emit(CanonicalFormSchema.of(module))
    elif args.action == "support":
        emit(SupportSchema(support=render_support(zmodules.support(module))))
    elif args.action == "split":
        if args.support is None:
            pieces = zmodules.split_by_support(module)
        else:
            wide = hovey.xi(parse_support(ZSPEC, args.support))
            pieces = [(w.support, piece) for w, piece in hovey.split_object(wide, module)]
        emit(
            SplitSchema(
                pieces=[
                    SplitPieceSchema(support=render_support(support), module=CanonicalFormSchema.of(piece))
                    for support, piece in pieces
                ]
            )
        )
    elif args.action == "k0":
        support = zmodules.support(module) if args.support is None else parse_support(ZSPEC, args.support)
        emit(K0ClassSchema.of(ktheory.class_of_module(module, support)))
    else:
        if args.other is None:
            raise InputError(f"module {args.action} needs a second module via --with")
        other = repository.load_module(args.other)
        group = zmodules.hom(module, other) if args.action == "hom" else zmodules.ext1(module, other)
        emit(HomExtSchema(functor=args.action, group=CanonicalFormSchema.of(group)))
    return 0
