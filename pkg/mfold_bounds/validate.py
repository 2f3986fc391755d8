"""
mfold_bounds.validate - Parameter validators
"""

# pylint: disable=C0103

# stdlib
import math
import re

# library
import numpy as np
from voluptuous import (
    All,
    Any,
    Boolean,
    Coerce,
    In,
    Invalid,
    Length,
    Optional,
    Range,
    Required,
    Schema,
    REMOVE_EXTRA,
)

# module
from mfold_bounds.app_config import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TRUNCATION


KINDS = ("Q", "Theta")
FORMATS = ("csv", "json")
STRATEGIES = ("grid", "random")
EXEMPLARS = ("koebe-like", "log", "atanh")
GRID_PARAMS = ("tau", "lam", "gamma", "delta", "m", "alpha", "beta")
INTEGER_PARAMS = ("delta", "m")


HELP = {
    "format": f"Report file format {FORMATS}",
    "output": "Report file path. Defaults to <command>.<format> in MFOLD_OUTPUT_DIR",
    "verbose": "Print per-suite counts and extra detail",
    "kind": f"Function class {KINDS}. Inferred from --alpha/--beta when missing",
    "tau": 'Nonzero complex parameter. Ex: "1", "0.5-2i"',
    "lam": "Real parameter λ >= 0",
    "gamma": "Real parameter 0 <= γ <= 1",
    "delta": "Ruscheweyh order δ, a non-negative integer",
    "m": "Symmetry order m, a positive integer",
    "alpha": "Class Q parameter 0 < α <= 1",
    "beta": "Class Θ parameter 0 <= β < 1",
    "grid": 'Repeatable parameter range "name=start:stop:count". Ex: beta=0:0.9:10',
    "corollary": "Evaluate corollary 1-9 instead of the parent theorem",
    "branches": "Tabulate the linear and square-root class Θ |a_{m+1}| branches and their ratio",
    "n": "Number of constraint samples",
    "seed": "Seed for every random draw",
    "strategy": f"Constraint sampling strategy {STRATEGIES}",
    "a": 'Repeatable coefficient a_{m+1}, a_{2m+1}, ... as "a+bi". Ex: --a 0.1-0.2i',
    "order": "Truncation index K; series are kept to order mK+1",
    "radius": "Repeatable sample radius in (0, 1)",
    "points": "Grid points per corollary",
    "fault": "Perturb one Ruscheweyh factor before running",
}


_REAL = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_PATTERNS = (
    # a+bi / a-bi
    re.compile(rf"(?P<re>[+-]?{_REAL})(?P<sign>[+-])(?P<im>{_REAL})?i"),
    # bi
    re.compile(rf"(?P<sign>[+-]?)(?P<im>{_REAL})?i"),
    # a
    re.compile(rf"(?P<re>[+-]?{_REAL})"),
)


def Complex(value) -> complex:
    """Converts an "a+bi" literal or a number into a complex"""
    if isinstance(value, (int, float, complex)) and not isinstance(value, bool):
        return complex(value)
    text = str(value).strip().replace(" ", "")
    for pattern in _COMPLEX_PATTERNS:
        match = pattern.fullmatch(text)
        if not match:
            continue
        parts = match.groupdict()
        real = float(parts.get("re") or 0)
        imag = 0.0
        if "im" in parts:
            imag = float(parts["im"] or 1)
            if parts["sign"] == "-":
                imag = -imag
        value = complex(real, imag)
        if not all(map(math.isfinite, (value.real, value.imag))):
            break
        return value
    raise Invalid(f"{text} is not a valid complex literal")


def NonZero(value) -> complex:
    """Nonzero complex number"""
    value = Complex(value)
    if value == 0:
        raise Invalid("must be nonzero")
    return value


def Finite(value: float) -> float:
    """Rejects nan and infinities"""
    if not math.isfinite(value):
        raise Invalid(f"{value} is not a finite number")
    return value


def Integral(value) -> int:
    """Integer or integral float, never a bool"""
    if isinstance(value, bool):
        raise Invalid(f"{value} is not an integer")
    try:
        number = float(value)
    except (TypeError, ValueError) as exc:
        raise Invalid(f"{value} is not an integer") from exc
    if not number.is_integer():
        raise Invalid(f"{value} is not an integer")
    return int(number)


Real = All(Coerce(float), Finite)


def RangeSpec(spec: str) -> list[float]:
    """Converts "start:stop:count" into count evenly spaced values, both ends included"""
    try:
        start, stop, count = str(spec).split(":")
        start, stop, count = float(start), float(stop), Integral(count)
    except (ValueError, Invalid) as exc:
        raise Invalid(f"{spec} is not a valid start:stop:count range") from exc
    if count < 1:
        raise Invalid(f"{spec} needs a count of at least 1")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise Invalid(f"{spec} has a non-finite endpoint")
    if count == 1:
        return [start]
    return np.linspace(start, stop, count).tolist()


def GridSpec(values: list[str]) -> dict[str, list]:
    """Validates repeated "name=start:stop:count" items into ordered value lists"""
    if isinstance(values, str):
        values = [values]
    grid = {}
    for item in values:
        name, _, spec = str(item).partition("=")
        name = name.strip()
        if name not in GRID_PARAMS:
            raise Invalid(f"'{name}' could not be found in {GRID_PARAMS}")
        if name in grid:
            raise Invalid(f"'{name}' is given more than once")
        points = RangeSpec(spec)
        if name in INTEGER_PARAMS:
            points = [Integral(val) for val in points]
        grid[name] = points
    if not grid:
        raise Invalid("Could not find any grid ranges")
    # Fixed parameter order keeps row order independent of flag order
    return {name: grid[name] for name in GRID_PARAMS if name in grid}


# ClassParams ranges, applied when the dataclass is built

_params_schema = Schema(
    {
        Required("tau"): NonZero,
        Required("lam"): All(Real, Range(min=0)),
        Required("gamma"): All(Real, Range(min=0, max=1)),
        Required("delta"): All(Integral, Range(min=0)),
        Required("m"): All(Integral, Range(min=1)),
        Required("kind"): In(KINDS),
        Required("alpha", default=None): Any(
            None, All(Real, Range(min=0, max=1, min_included=False))
        ),
        Required("beta", default=None): Any(
            None, All(Real, Range(min=0, max=1, max_included=False))
        ),
    }
)


def class_params(params: dict) -> dict:
    """Validates ClassParams fields including the kind-specific parameter"""
    params = _params_schema(params)
    if params["kind"] == "Q" and params["alpha"] is None:
        raise Invalid("Class Q needs alpha", path=["alpha"])
    if params["kind"] == "Theta" and params["beta"] is None:
        raise Invalid("Class Theta needs beta", path=["beta"])
    return params


# Command schemas

_required = {
    Required("format", default="json"): In(FORMATS),
    Optional("output"): str,
    Required("verbose", default=False): Boolean(None),
}
_class_flags = {
    Optional("kind"): In(KINDS),
    Required("tau", default="1"): NonZero,
    Required("lam", default=0.0): Real,
    Required("gamma", default=0.0): Real,
    Required("delta", default=0): Integral,
    Required("m", default=1): All(Integral, Range(min=1, max=16)),
    Optional("alpha"): Real,
    Optional("beta"): Real,
}
_grid = {Optional("grid"): GridSpec}
_corollary = {Optional("corollary"): All(Integral, Range(min=1, max=9))}
_branches = {Required("branches", default=False): Boolean(None)}
_seeded = {
    Required("seed", default=DEFAULT_SEED): All(Integral, Range(min=0, max=2**64 - 1))
}
_sampling = {
    Required("n", default=DEFAULT_SAMPLES): All(Integral, Range(min=1)),
    Required("strategy", default="random"): In(STRATEGIES),
}
_truncation = {
    Required("order", default=DEFAULT_TRUNCATION): All(Integral, Range(min=2, max=64))
}
_coefficients = {Required("a", default=list): [Complex]}
_radii = {
    Optional("radius"): All(
        [All(Real, Range(min=0, max=1, min_included=False, max_included=False))],
        Length(min=1),
    )
}
_symmetry = {Required("m", default=1): All(Integral, Range(min=1, max=16))}
_exemplar_order = {
    Required("order", default=DEFAULT_TRUNCATION): All(Integral, Range(min=3, max=16))
}
_reduction = {Required("points", default=100): All(Integral, Range(min=1, max=10_000))}
_fault = {Required("fault", default=False): Boolean(None)}


def _schema(schema: dict) -> Schema:
    return Schema(schema, extra=REMOVE_EXTRA)


bounds = _schema(_required | _class_flags | _grid | _corollary | _branches)
verify = _schema(_required | _seeded | _fault)
probe = _schema(_required | _class_flags | _seeded | _sampling)
membership = _schema(_required | _class_flags | _truncation | _coefficients | _radii)
exemplars = _schema(_required | _symmetry | _exemplar_order)
reduce = _schema(_required | _seeded | _reduction)
