"""
CLI commands
"""

# pylint: disable=missing-class-docstring

# module
from mfold_bounds import handle, structs, validate
from mfold_bounds.cli.base import Base, command

_OUTPUT = Base.flags
_CLASS = ("kind", "tau", "lam", "gamma", "delta", "m", "alpha", "beta")


@command("bounds")
class Bounds(Base):
    help = "Closed-form coefficient bounds over a parameter grid"
    validator = validate.bounds
    struct = structs.Bounds
    handler = handle.tables.BoundsHandler
    flags = _OUTPUT + _CLASS + ("grid", "corollary", "branches")


@command("verify")
class Verify(Base):
    help = "Run every identity suite and the corollary reductions"
    validator = validate.verify
    struct = structs.Verify
    handler = handle.checks.VerifyHandler
    flags = _OUTPUT + ("seed", "fault")


@command("probe")
class Probe(Base):
    help = "Certify the bounds on sampled coefficient data"
    validator = validate.probe
    struct = structs.Probe
    handler = handle.checks.ProbeHandler
    flags = _OUTPUT + _CLASS + ("seed", "n", "strategy")


@command("membership")
class Membership(Base):
    help = "Sampled class-condition margins of a truncated function"
    validator = validate.membership
    struct = structs.Membership
    handler = handle.checks.MembershipHandler
    flags = _OUTPUT + _CLASS + ("order", "a", "radius")


@command("exemplars")
class Exemplars(Base):
    help = "Example functions, their inverses and the 1-fold pairing audit"
    validator = validate.exemplars
    struct = structs.Exemplars
    handler = handle.tables.ExemplarsHandler
    flags = _OUTPUT + ("m", "order")


@command("reduce")
class Reduce(Base):
    help = "Corollaries against their parent theorems"
    validator = validate.reduce
    struct = structs.Reduce
    handler = handle.tables.ReduceHandler
    flags = _OUTPUT + ("seed", "points")
