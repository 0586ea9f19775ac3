from __future__ import annotations

import argparse

from . import chain_complex, module, snf, spectrum, verify

COMMANDS = (snf, module, chain_complex, spectrum, verify)


def register_all(subparsers: argparse._SubParsersAction) -> None:
    for command in COMMANDS:
        command.register(subparsers)


__all__ = ["register_all"]
