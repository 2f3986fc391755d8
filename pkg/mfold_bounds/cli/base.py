"""
Command plumbing: registration, parameter validation and report writers
"""

# stdlib
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Union

# library
import numpy as np
from voluptuous import Invalid, MultipleInvalid

# module
from mfold_bounds import structs, validate
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.handle.base import EXIT_USAGE, CommandHandler
from mfold_bounds.structs import complex_literal

COMMANDS: dict[str, type["Base"]] = {}


def command(name: str):
    """Registers a command class under its CLI name"""

    def wrapper(cls: type["Base"]) -> type["Base"]:
        cls.name = name
        COMMANDS[name] = cls
        return cls

    return wrapper


def format_value(value) -> str:
    """CSV cell text. Floats keep 17 significant digits"""
    if isinstance(value, np.generic):
        value = value.item()
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, complex):
        return complex_literal(value)
    if isinstance(value, float):
        return f"{value:.17g}"
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(item) for item in value)
    return str(value)


def jsonable(value):
    """Replaces complex numbers with their literal form, recursively"""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, complex):
        return complex_literal(value)
    if isinstance(value, dict):
        return {key: jsonable(val) for key, val in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def to_csv(rows: list[dict]) -> str:
    fields = []
    for row in rows:
        fields.extend(key for key in row if key not in fields)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: format_value(row.get(key)) for key in fields})
    return buffer.getvalue()


def to_json(data: dict) -> str:
    return json.dumps(jsonable(data), indent=2) + "\n"


class Base:
    """Base command"""

    name: str = None
    help: str = None
    validator: validate.Schema
    struct: type[structs.Params]
    handler: CommandHandler = None
    # CLI flags this command accepts
    flags: tuple[str, ...] = ("format", "output", "verbose")

    def __init__(self):
        if self.handler:
            self.handler = self.handler()

    def validate_params(self, **kwargs) -> Union[structs.Params, dict]:
        """Returns the validated run config or an error dict"""
        try:
            params = {key: val for key, val in kwargs.items() if val is not None}
            params = self.struct(**self.validator(params))
        except (Invalid, MultipleInvalid) as exc:
            key = str(exc.path[0]) if exc.path else None
            return {"error": str(exc.msg), "param": key, "help": validate.HELP.get(key)}
        except ParameterError as exc:
            return {"error": str(exc), "param": exc.param, "help": validate.HELP.get(exc.param)}
        params.command = self.name
        return params

    @staticmethod
    def csv_files(data: dict, path: Path) -> dict[Path, str]:
        """The rows file plus one sibling file per extra table

        Report notes go in a trailing notes column of every row
        """
        notes = "; ".join(data.get("notes", ()))
        rows = [row | {"notes": notes} for row in data["rows"]] if notes else data["rows"]
        files = {path: to_csv(rows)}
        for key, val in data.items():
            if key != "rows" and isinstance(val, list) and val and isinstance(val[0], dict):
                files[path.with_name(f"{path.stem}.{key}{path.suffix}")] = to_csv(val)
        return files

    def write_report(self, data: dict, params: structs.Params) -> Path:
        path = params.output_path()
        if params.format == "csv":
            files = self.csv_files(data, path)
        else:
            files = {path: to_json({key: val for key, val in data.items() if key != "error"})}
        path.parent.mkdir(parents=True, exist_ok=True)
        for target, text in files.items():
            target.write_text(text, encoding="utf-8")
        return path

    def make_response(self, data: dict, params: structs.Params, code: int) -> int:
        """Writes the report file when there are rows and returns the exit code"""
        if "rows" in data:
            try:
                path = self.write_report(data, params)
            except OSError as exc:
                error = {"error": f"Could not write report: {exc}", "param": "output"}
                print(json.dumps(error | {"help": validate.HELP["output"]}), file=sys.stderr)
                return EXIT_USAGE
            print(f"{self.name}: wrote {len(data['rows'])} rows to {path}")
        if "error" in data:
            print(json.dumps(data["error"]), file=sys.stderr)
        return code

    def run(self, **kwargs) -> int:
        params = self.validate_params(**kwargs)
        if isinstance(params, dict):
            print(json.dumps(params), file=sys.stderr)
            return EXIT_USAGE
        data, code = self.handler.run(params)
        return self.make_response(data, params, code)
