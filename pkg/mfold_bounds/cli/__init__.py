"""
mfold_bounds.cli - Command-line entry point

Exit codes: 0 success, 1 verification or numeric failure, 2 usage error
"""

# stdlib
import argparse
from typing import Optional, Sequence

# module
from mfold_bounds import app_config
from mfold_bounds.cli import commands  # pylint: disable=unused-import
from mfold_bounds.cli.base import COMMANDS
from mfold_bounds.validate import HELP

# Values stay strings; the command schemas coerce them
REPEATED = ("grid", "a", "radius")
SWITCHES = ("verbose", "fault", "branches")
HIDDEN = ("fault",)


def _add_flag(parser: argparse.ArgumentParser, name: str):
    kwargs = {"dest": name, "default": None, "help": HELP.get(name)}
    if name in HIDDEN:
        kwargs["help"] = argparse.SUPPRESS
    if name in SWITCHES:
        kwargs["action"] = "store_true"
    elif name in REPEATED:
        kwargs["action"] = "append"
    parser.add_argument(f"--{name}", **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfold_bounds",
        description="Coefficient bounds for m-fold symmetric bi-univalent function classes",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, cls in COMMANDS.items():
        sub = subparsers.add_parser(name, help=cls.help, description=cls.help)
        for flag in cls.flags:
            _add_flag(sub, flag)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command and returns its exit code"""
    try:
        args = vars(build_parser().parse_args(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    app_config.init_rollbar()
    name = args.pop("command")
    return COMMANDS[name]().run(**args)
