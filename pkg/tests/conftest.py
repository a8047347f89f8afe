import os

import pytest

# Set up test environment variables before anything else
os.environ["ENV"] = "testing"
os.environ.setdefault("LOG_LEVEL", "WARNING")

from config import config
config.ENV = "testing"

from algebra.field import FieldSpec
from algebra.polynomial import PolynomialRing
from services.ringkit import build_ring

# Small budgets keep the suite quick; tests that need more pass their own.
FAST_BUDGET = {"seed": 0, "samples": 3, "e_max": 2, "deep_schedule": [2, 3]}


@pytest.fixture(scope="session")
def two_planes():
    return build_ring(2, ["x", "y", "u", "v"], None, ["x*u", "x*v", "y*u", "y*v"], name="two-planes")


@pytest.fixture(scope="session")
def plane_line():
    return build_ring(2, ["x", "y", "z"], None, ["x*y", "x*z"], name="plane-line")


@pytest.fixture(scope="session")
def cusp():
    return build_ring(2, ["x", "y", "z"], [2, 2, 3], ["z^2 + x^3 + y^3"], name="char2-cusplike")


@pytest.fixture(scope="session")
def node():
    return build_ring(3, ["x", "y"], None, ["x*y"], name="node")


@pytest.fixture(scope="session")
def poly3():
    return build_ring(3, ["x", "y"], None, [], name="poly-3")


@pytest.fixture(scope="session")
def dual_numbers():
    return build_ring(2, ["x"], None, ["x^2"], name="dual-numbers")


@pytest.fixture
def fermat():
    def make(p: int):
        return build_ring(p, ["x", "y", "z"], None, ["x^3 + y^3 + z^3"], name=f"fermat-p{p}")
    return make


@pytest.fixture
def ring3():
    """F_p[x, y, z], standard grading."""
    def make(p: int = 2, weights=None):
        return PolynomialRing(FieldSpec(p), ["x", "y", "z"], weights)
    return make


@pytest.fixture
def fast_budget():
    return dict(FAST_BUDGET)
