"""
mfold_bounds.structs - Parameter dataclasses
"""

# pylint: disable=missing-class-docstring,invalid-name,too-many-instance-attributes

# stdlib
import itertools
import math
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Optional

# library
from voluptuous import Invalid

# module
from mfold_bounds import validate
from mfold_bounds.app_config import OUTPUT_DIR
from mfold_bounds.exceptions import ParameterError


DataStatus = tuple[dict, int]


def complex_literal(value: complex) -> str:
    """Formats a complex as the "a+bi" literal the CLI accepts"""
    value = complex(value)
    sign = "-" if math.copysign(1, value.imag) < 0 else "+"
    return f"{value.real:.17g}{sign}{abs(value.imag):.17g}i"


@dataclass(frozen=True)
class ClassParams:
    """Parameters shared by the Q and Θ classes; alpha for Q, beta for Θ"""

    tau: complex
    lam: float
    gamma: float
    delta: int
    m: int
    kind: str
    alpha: Optional[float] = None
    beta: Optional[float] = None

    def __post_init__(self):
        try:
            values = validate.class_params(asdict(self))
        except Invalid as exc:
            key = str(exc.path[0]) if exc.path else None
            raise ParameterError(f"{key}: {exc.msg}" if key else exc.msg, key) from exc
        for key, val in values.items():
            object.__setattr__(self, key, val)

    @classmethod
    def q(cls, alpha: float = 1.0, **kwargs) -> "ClassParams":
        """Class Q parameters with defaults τ=1, λ=γ=δ=0, m=1"""
        return cls(**(_DEFAULTS | kwargs), kind="Q", alpha=alpha)

    @classmethod
    def theta(cls, beta: float = 0.0, **kwargs) -> "ClassParams":
        """Class Θ parameters with defaults τ=1, λ=γ=δ=0, m=1"""
        return cls(**(_DEFAULTS | kwargs), kind="Theta", beta=beta)

    def replace(self, **kwargs) -> "ClassParams":
        return replace(self, **kwargs)

    def as_row(self) -> dict:
        return {
            "kind": self.kind,
            "tau": complex_literal(self.tau),
            "lam": self.lam,
            "gamma": self.gamma,
            "delta": self.delta,
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
        }


_DEFAULTS = {"tau": 1 + 0j, "lam": 0.0, "gamma": 0.0, "delta": 0, "m": 1}


@dataclass(frozen=True)
class PhiValues:
    phi1: float
    phi2: float

    @property
    def psi(self) -> float:
        """First-order weight 1+m(λ+γ)+λγ((m+1)²+1), the square root of phi2"""
        return math.sqrt(self.phi2)


@dataclass
class BoundReport:
    params: ClassParams
    bound_am1: float
    bound_a2m1: float
    source: str
    active_branch: str = "single"
    alt_values: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def as_row(self) -> dict:
        return {
            **self.params.as_row(),
            "source": self.source,
            "bound_am1": self.bound_am1,
            "bound_a2m1": self.bound_a2m1,
            "active_branch": self.active_branch,
            **self.alt_values,
        }


# Run configurations


@dataclass
class Params:
    format: str
    verbose: bool
    output: Optional[str] = None

    command: str = field(init=False, default=None)

    def output_path(self) -> Path:
        if self.output:
            return Path(self.output)
        return Path(OUTPUT_DIR) / f"{self.command}.{self.format}"

    def echo(self) -> dict:
        """Config echo for report metadata"""
        ret = {}
        for key, val in asdict(self).items():
            if key in ("output", "verbose", "command"):
                continue
            if isinstance(val, complex):
                val = complex_literal(val)
            elif isinstance(val, list):
                val = [complex_literal(v) if isinstance(v, complex) else v for v in val]
            ret[key] = val
        return ret


@dataclass
class Seeded(Params):
    seed: int = 42


@dataclass
class ClassRun(Params):
    tau: complex = 1 + 0j
    lam: float = 0.0
    gamma: float = 0.0
    delta: int = 0
    m: int = 1
    kind: Optional[str] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    grid: Optional[dict[str, list]] = None

    points: list[ClassParams] = field(init=False, repr=False, default_factory=list)

    def __post_init__(self):
        grid = self.grid or {}
        if self.kind is None:
            has_alpha = self.alpha is not None or "alpha" in grid
            self.kind = "Q" if has_alpha else "Theta"
        base = {
            "tau": self.tau,
            "lam": self.lam,
            "gamma": self.gamma,
            "delta": self.delta,
            "m": self.m,
            "kind": self.kind,
            "alpha": None,
            "beta": None,
        }
        if self.kind == "Q":
            base["alpha"] = 1.0 if self.alpha is None else self.alpha
            grid.pop("beta", None)
        else:
            base["beta"] = 0.0 if self.beta is None else self.beta
            grid.pop("alpha", None)
        names = list(grid)
        self.points = [
            ClassParams(**(base | dict(zip(names, values))))
            for values in itertools.product(*grid.values())
        ]

    @property
    def params(self) -> ClassParams:
        return self.points[0]

    def echo(self) -> dict:
        ret = super().echo()
        ret.pop("points", None)
        return ret


@dataclass
class Bounds(ClassRun):
    corollary: Optional[int] = None
    branches: bool = False

    def __post_init__(self):
        if self.kind is None and self.corollary is not None:
            # Deferred, bounds builds on this module
            from mfold_bounds.bounds import corollary_entry  # pylint: disable=import-outside-toplevel

            self.kind = corollary_entry(self.corollary).kind
        super().__post_init__()
        if self.branches and (self.kind != "Theta" or self.corollary is not None):
            raise ParameterError("Branch tables need class Θ theorem parameters", "branches")


@dataclass
class Verify(Seeded):
    fault: bool = False


@dataclass
class Probe(ClassRun):
    seed: int = 42
    n: int = 100_000
    strategy: str = "random"


@dataclass
class Membership(ClassRun):
    order: int = 4
    a: list[complex] = field(default_factory=list)
    radius: Optional[list[float]] = None


@dataclass
class Exemplars(Params):
    m: int = 1
    order: int = 4


@dataclass
class Reduce(Seeded):
    points: int = 100
