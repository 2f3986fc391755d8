"""
tests/test_validators.py - Test parameter validators
"""

# library
import pytest
from voluptuous import Invalid, MultipleInvalid

# module
from mfold_bounds import sampling, validate
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.structs import ClassParams, ClassRun, complex_literal


def test_complex():
    """Tests that Complex reads "a+bi" literals and rejects anything else"""
    for text, value in (
        ("1", 1),
        ("-2.5", -2.5),
        ("0.5-2i", 0.5 - 2j),
        ("1+i", 1 + 1j),
        ("-i", -1j),
        ("3i", 3j),
        ("1e-3+2E2i", 0.001 + 200j),
        (" 1 + 2i ", 1 + 2j),
        (2, 2),
    ):
        assert validate.Complex(text) == value
    for text in ("1+2i3", "i2", "1+2j", "abc", "", "1++2i", "inf", "nan"):
        with pytest.raises(Invalid):
            validate.Complex(text)


def test_complex_literal_round_trip():
    """Tests that formatted complex values parse back exactly"""
    for value in (1 + 0j, -0.1 + 1e-300j, 1 / 3 - 2j / 7):
        assert validate.Complex(complex_literal(value)) == value


def test_nonzero_integral():
    """Tests the NonZero and Integral validators"""
    with pytest.raises(Invalid):
        validate.NonZero("0+0i")
    assert validate.Integral("3") == 3
    assert validate.Integral(4.0) == 4
    for value in ("2.5", True, "x"):
        with pytest.raises(Invalid):
            validate.Integral(value)


def test_range_spec():
    """Tests inclusive start:stop:count ranges"""
    assert validate.RangeSpec("0:1:3") == [0, 0.5, 1]
    assert validate.RangeSpec("0.2:5:1") == [0.2]
    for spec in ("0:1:0", "0:1", "a:b:2", "0:1:2.5", "0:inf:2"):
        with pytest.raises(Invalid):
            validate.RangeSpec(spec)


def test_grid_spec():
    """Tests grid parsing and its fixed parameter order"""
    grid = validate.GridSpec(["beta=0:0.9:4", "m=1:3:3", "lam=0:1:2"])
    assert list(grid) == ["lam", "m", "beta"]
    assert grid["m"] == [1, 2, 3]
    for items in ([], ["foo=0:1:2"], ["m=1:2:3"], ["beta=0:1:2", "beta=0:1:2"]):
        with pytest.raises(Invalid):
            validate.GridSpec(items)


def test_class_params():
    """Tests ClassParams range checks"""
    ClassParams.q(1.0, lam=2, gamma=1, delta=3, m=2, tau="1-1i")
    for kwargs in (
        {"gamma": 1.5},
        {"lam": -0.1},
        {"delta": -1},
        {"delta": 1.5},
        {"m": 0},
        {"tau": 0},
    ):
        with pytest.raises(ParameterError):
            ClassParams.theta(**kwargs)
    for alpha in (0, 1.1):
        with pytest.raises(ParameterError):
            ClassParams.q(alpha)
    with pytest.raises(ParameterError):
        ClassParams.theta(1.0)
    with pytest.raises(ParameterError):
        ClassParams(1, 0, 0, 0, 1, "Q")


def test_class_run_kind():
    """Tests class inference and grid expansion of run configs"""
    run = ClassRun(format="json", verbose=False, alpha=0.5)
    assert run.kind == "Q" and run.params.alpha == 0.5
    run = ClassRun(format="json", verbose=False, grid={"beta": [0.0, 0.5], "m": [1, 2]})
    assert run.kind == "Theta" and len(run.points) == 4
    assert [(p.beta, p.m) for p in run.points] == [(0.0, 1), (0.0, 2), (0.5, 1), (0.5, 2)]


def test_command_schemas():
    """Tests defaults and rejections of the command schemas"""
    params = validate.probe({"format": "csv"})
    assert params["n"] == 100_000 and params["seed"] == 42 and params["strategy"] == "random"
    with pytest.raises(MultipleInvalid):
        validate.probe({"n": "0"})
    with pytest.raises(MultipleInvalid):
        validate.membership({"a": ["1+2i3"]})
    with pytest.raises(MultipleInvalid):
        validate.membership({"radius": ["1.0"]})
    assert validate.membership({"a": ["0.1-0.2i"]})["a"] == [0.1 - 0.2j]
    with pytest.raises(MultipleInvalid):
        validate.bounds({"corollary": "10"})
    assert "grid" not in validate.verify({"grid": ["beta=0:1:2"]})


def test_strategies_shared():
    """Tests that the flag schema and the sampler accept the same strategies"""
    assert sampling.STRATEGIES is validate.STRATEGIES
    for strategy in validate.STRATEGIES:
        assert validate.probe({"strategy": strategy})["strategy"] == strategy
    with pytest.raises(MultipleInvalid):
        validate.probe({"strategy": "walk"})
    with pytest.raises(ParameterError):
        sampling.probe_bounds(ClassParams.q(), "walk", 10)
