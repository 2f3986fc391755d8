"""
Command handling between validated parameters and the numeric modules
"""

# pylint: disable=broad-except

# stdlib
import platform
import sys

# library
import numpy as np
import rollbar
import scipy

# module
from mfold_bounds import __version__
from mfold_bounds.exceptions import DegenerateError, ParameterError, SeriesError
from mfold_bounds.structs import DataStatus, Params

ERRORS = [
    "Parameter Error: {}",
    "Numeric Error: {} could not be evaluated. {}",
    "Series Error: {}",
    "Verification Error: {} of {} suites failed",
    "Certification Error: a bound was exceeded for {} of {} parameter sets",
    "Reduction Error: {} corollaries deviate from their parents",
    "Pairing Error: {} exemplar pairs do not compose to the identity",
    "Unknown Error: {} failed unexpectedly. An error report has been sent to the admin",
]

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class CommandHandler:
    """Runs one command and returns the report data with an exit code"""

    command: str = None

    @staticmethod
    def make_meta(params: Params) -> dict:
        """Create base metadata dict. No timestamp so reruns are byte-identical"""
        return {
            "command": params.command,
            "config": params.echo(),
            "versions": {
                "mfold_bounds": __version__,
                "numpy": np.__version__,
                "scipy": scipy.__version__,
                "python": platform.python_version(),
            },
            "seed": getattr(params, "seed", None),
        }

    def _run(self, params: Params) -> DataStatus:
        raise NotImplementedError()

    def run(self, params: Params) -> DataStatus:
        """Returns the report dict and exit code, catching every numeric error"""
        state_info = {"state": "run", "command": self.command, "params": params.echo()}
        try:
            data, code = self._run(params)
        except ParameterError as exc:
            print("Parameter Error:", exc, file=sys.stderr)
            return {"error": ERRORS[0].format(exc), "param": exc.param}, EXIT_USAGE
        except DegenerateError as exc:
            print("Degenerate Error:", exc, file=sys.stderr)
            return {"error": ERRORS[1].format(self.command, exc)}, EXIT_FAILED
        except SeriesError as exc:
            print("Series Error:", exc, file=sys.stderr)
            return {"error": ERRORS[2].format(exc)}, EXIT_FAILED
        except Exception as exc:
            print("Unknown Error", exc, file=sys.stderr)
            rollbar.report_exc_info(extra_data=state_info)
            return {"error": ERRORS[7].format(self.command)}, EXIT_FAILED
        return {"meta": self.make_meta(params), **data}, code
