#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys
import json
import logging

from .commands import COMMANDS
from .manifest import build_manifest, write_manifests
from ..config.args import parse_args
from ..utils.errors import FrameEnergyError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def run(args) -> int:
    """Execute one parsed command; returns the process exit code."""
    try:
        payload, outputs = COMMANDS[args.command](args)
    except FrameEnergyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ArithmeticError as e:
        logger.error(f"Numerical failure: {e}")
        return 4
    except ValueError as e:
        # Plain ValueErrors come from flag values (exponents, grids, coefficients)
        logger.error(f"Invalid arguments: {e}")
        return 2

    manifest = build_manifest(args, outputs)
    write_manifests(manifest, args.manifest)
    document = {"schema": SCHEMA_VERSION, "command": args.command, **payload}
    sys.stdout.write(json.dumps(document, indent=2, sort_keys=True) + "\n")
    return 0


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.log_level)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
