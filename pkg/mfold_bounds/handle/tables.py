"""
Handle closed-form table commands: bounds, reduce, exemplars
"""

# pylint: disable=arguments-differ,missing-class-docstring

# module
from mfold_bounds import structs
from mfold_bounds.bounds import (
    corollary_bounds,
    min_branch_report,
    reduction_matrix,
    theorem_bounds,
)
from mfold_bounds.exemplars import audit_1fold_pairings, build_catalog
from mfold_bounds.handle.base import ERRORS, EXIT_FAILED, EXIT_OK, CommandHandler
from mfold_bounds.structs import BoundReport, DataStatus
from mfold_bounds.workers import fan_out


def _unique_notes(reports: list) -> list[str]:
    notes = []
    for report in reports:
        for note in report.notes:
            if note not in notes:
                notes.append(note)
    return notes


class BoundsHandler(CommandHandler):
    command = "bounds"

    @staticmethod
    def evaluate(params: structs.Bounds, point: structs.ClassParams) -> BoundReport:
        if params.corollary is None:
            return theorem_bounds(point)
        return corollary_bounds(params.corollary, point)

    @staticmethod
    def branch_rows(params: structs.Bounds) -> list[dict]:
        rows = min_branch_report(
            params.grid or {},
            tau=params.tau,
            lam=params.lam,
            gamma=params.gamma,
            delta=params.delta,
            m=params.m,
            beta=0.0 if params.beta is None else params.beta,
        )
        return [row.as_row() for row in rows]

    def _run(self, params: structs.Bounds) -> DataStatus:
        if params.branches:
            return {"rows": self.branch_rows(params)}, EXIT_OK
        reports = fan_out(lambda point: self.evaluate(params, point), params.points)
        return {
            "rows": [report.as_row() for report in reports],
            "notes": _unique_notes(reports),
        }, EXIT_OK


class ReduceHandler(CommandHandler):
    command = "reduce"

    def _run(self, params: structs.Reduce) -> DataStatus:
        rows = reduction_matrix(params.points, params.seed)
        data = {
            "rows": [
                {
                    "corollary": row.number,
                    "substitution": row.substitution,
                    "theorem": row.theorem,
                    "theorem_deviation": row.theorem_deviation,
                    "parent": row.parent,
                    "parent_deviation": row.parent_deviation,
                    "points": row.points,
                    "passed": row.passed,
                }
                for row in rows
            ]
        }
        failed = sum(not row.passed for row in rows)
        if failed:
            data["error"] = ERRORS[5].format(failed)
            return data, EXIT_FAILED
        return data, EXIT_OK


class ExemplarsHandler(CommandHandler):
    command = "exemplars"

    def _run(self, params: structs.Exemplars) -> DataStatus:
        pairs = build_catalog(params.m, params.order)
        data = {
            "rows": [pair.as_dict() for pair in pairs],
            "audit": [row.as_dict() for row in audit_1fold_pairings(params.order + 1)],
        }
        if params.verbose:
            for pair in pairs:
                print(f"{pair.name} m={pair.m}: residual {pair.composition_residual:.3g}")
        failed = sum(not pair.pairing_verified for pair in pairs)
        if failed:
            data["error"] = ERRORS[6].format(failed)
            return data, EXIT_FAILED
        return data, EXIT_OK
