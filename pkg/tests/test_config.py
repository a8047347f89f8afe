import pytest

from commands.options import build_budget, parse_schedule
from config import _int_list, config
from defaults import DEFAULT_BUDGET
from exceptions import ArgumentError


def test_environment_is_testing():
    assert config.ENV == "testing"


@pytest.mark.parametrize("raw,expected", [
    ("2,3,4", [2, 3, 4]),
    (" 2, 5 ", [2, 5]),
    ("7,", [7]),
    ("", []),
])
def test_int_list(raw, expected):
    assert _int_list(raw) == expected


def test_default_budget_follows_config():
    assert DEFAULT_BUDGET["samples"] == config.SAMPLES
    assert DEFAULT_BUDGET["e_max"] == config.EMAX
    assert DEFAULT_BUDGET["deep_schedule"] == config.DEEP_SCHEDULE
    assert DEFAULT_BUDGET["deep_schedule"] is not config.DEEP_SCHEDULE


def test_parse_schedule_defaults_to_config():
    assert parse_schedule(None) == config.DEEP_SCHEDULE
    assert parse_schedule("3") == [3]
    assert parse_schedule("2, 4") == [2, 4]


@pytest.mark.parametrize("raw", ["a,b", "0", "", "2,-1"])
def test_parse_schedule_rejects(raw):
    with pytest.raises(ArgumentError):
        parse_schedule(raw)


def test_build_budget_overrides_only_flags():
    budget = build_budget(seed=9, samples=2, emax=1, deep="5")
    assert budget["seed"] == 9
    assert budget["samples"] == 2
    assert budget["e_max"] == 1
    assert budget["deep_schedule"] == [5]
    assert budget["t_max"] == DEFAULT_BUDGET["t_max"]
    assert budget["unmixed_k"] == [2, 3]
