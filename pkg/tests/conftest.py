import random
import sys

import pytest
from hypothesis import HealthCheck, settings

from lpa.graph import Graph, line_graph, rose, toeplitz
from lpa.scalars import Rationals

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def R1():
    return rose(1)


@pytest.fixture
def R2():
    return rose(2)


@pytest.fixture
def T():
    return toeplitz()


@pytest.fixture
def A3():
    return line_graph(3)


@pytest.fixture
def Q():
    return Rationals


@pytest.fixture
def rnd():
    return random.Random(20240611)


def example_graphs():
    return {"R1": rose(1), "R2": rose(2), "T": toeplitz(), "A3": line_graph(3),
            "R2_singular": Graph(["v"], [("e", "v", "v"), ("f", "v", "v")], ck2=[])}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
