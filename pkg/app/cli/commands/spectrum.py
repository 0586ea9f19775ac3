from __future__ import annotations

import argparse

from app.cli.output import emit
from app.core.errors import InputError
from app.models import ZSPEC, FinPoset, SpectrumModel
from app.schemas.response import DecompositionSchema, EnumerationSchema, LocalitySchema, render_support
from app.services import InputRepository
from app.services.spectra import (
    enumerate_thick_supports,
    is_indecomposable,
    is_local,
    ks_decompose,
    maximal_points,
    parse_support,
)

ACTIONS = ("decompose", "islocal", "enumerate")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("spec", help="Spectrum models and thick supports")
    parser.add_argument("action", choices=ACTIONS)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="source", metavar="FILE", help="finite poset file")
    source.add_argument("--zspec", action="store_true", help="use Spec Z")
    parser.add_argument("--support", default="full", help="full, none, or a comma list of points")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, repository: InputRepository) -> int:
    model: SpectrumModel = ZSPEC if args.zspec else repository.load_poset(args.source)

    if args.action == "decompose":
        support = parse_support(model, args.support)
        decomposition = ks_decompose(model, support)
        emit(
            DecompositionSchema(
                support=render_support(support),
                parts=[render_support(part) for part in decomposition.parts],
                indecomposable=is_indecomposable(model, support),
            )
        )
    elif args.action == "islocal":
        maximal = model.sort_points(maximal_points(model)) if isinstance(model, FinPoset) else None
        emit(LocalitySchema(local=is_local(model), maximal_points=maximal))
    else:
        if not isinstance(model, FinPoset):
            raise InputError("Spec Z has infinitely many thick supports; enumerate needs --in FILE")
        supports = enumerate_thick_supports(model)
        emit(EnumerationSchema(count=len(supports), supports=[s.sorted_points() for s in supports]))
    return 0
