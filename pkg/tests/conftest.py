import json
import sys
from importlib import resources

import pytest

from hecke_quiver.coxeter import CoxeterDatum, HeckeDatum
from hecke_quiver.graph import graph_from_json


def load_bundled(name):
    text = (resources.files("hecke_quiver") / "data" / f"{name}.json").read_text()
    return graph_from_json(json.loads(text))


B3_MATRIX = ((1, 3, 2), (3, 1, 4), (2, 4, 1))


@pytest.fixture(scope="session")
def b3_datum():
    return HeckeDatum(CoxeterDatum(("r1", "r2", "r3"), B3_MATRIX))


@pytest.fixture(scope="session")
def b3():
    return load_bundled("b3_cell")


@pytest.fixture(scope="session")
def a2():
    return load_bundled("a2_cell")


@pytest.fixture(scope="session")
def asymptotic():
    return load_bundled("asymptotic_b3")


@pytest.fixture(scope="session")
def psi_graph():
    return load_bundled("psi_example")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
