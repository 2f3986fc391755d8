"""
Handle numeric check commands: verify, probe, membership
"""

# pylint: disable=arguments-differ,missing-class-docstring

# stdlib
from contextlib import nullcontext

# module
from mfold_bounds import structs
from mfold_bounds.app_config import DEFAULT_RADII
from mfold_bounds.functional import membership_margin
from mfold_bounds.handle.base import ERRORS, EXIT_FAILED, EXIT_OK, CommandHandler
from mfold_bounds.operators import inject_fault
from mfold_bounds.sampling import probe_bounds
from mfold_bounds.series import MFoldFn
from mfold_bounds.structs import DataStatus
from mfold_bounds.suites import run_suites


class VerifyHandler(CommandHandler):
    command = "verify"

    def _run(self, params: structs.Verify) -> DataStatus:
        with inject_fault() if params.fault else nullcontext():
            results = run_suites(params.seed)
        for result in results:
            status = "ok" if result.passed else "FAILED"
            line = f"{result.name:<14} max deviation {result.deviation:.3e} {status}"
            if params.verbose:
                line += f" ({result.count} cases, tolerance {result.tolerance:g})"
            print(line)
        data = {"rows": [result.as_row() for result in results]}
        failed = sum(not result.passed for result in results)
        if failed:
            data["error"] = ERRORS[3].format(failed, len(results))
            return data, EXIT_FAILED
        return data, EXIT_OK


class ProbeHandler(CommandHandler):
    command = "probe"

    def _run(self, params: structs.Probe) -> DataStatus:
        reports = [
            probe_bounds(point, params.strategy, params.n, params.seed)
            for point in params.points
        ]
        data = {
            "rows": [report.as_row() for report in reports],
            "notes": [note for report in reports for note in report.notes],
        }
        if params.verbose:
            for report in reports:
                print(f"{report.evaluated} samples, ratios {report.ratios}")
        failed = sum(not report.passed for report in reports)
        if failed:
            data["error"] = ERRORS[4].format(failed, len(reports))
            return data, EXIT_FAILED
        return data, EXIT_OK


class MembershipHandler(CommandHandler):
    command = "membership"

    @staticmethod
    def make_function(params: structs.Membership) -> MFoldFn:
        """User coefficients padded with zeros up to the truncation index"""
        return MFoldFn(params.m, params.a).padded(params.order)

    def _run(self, params: structs.Membership) -> DataStatus:
        point = params.params
        report = membership_margin(
            self.make_function(params), point, params.radius or DEFAULT_RADII
        )
        rows = [
            {
                **point.as_row(),
                "radius": row.radius,
                "forward_margin": row.forward,
                "inverse_margin": row.inverse,
            }
            for row in report.rows
        ]
        # A negative margin is reported, not treated as a failure
        return {"rows": rows, "notes": report.notes}, EXIT_OK
