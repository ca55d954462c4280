import os

os.environ.setdefault("TORIC_LOG_DIR", "")

import pytest  # noqa: E402

from toric_implicit.core import orchestrator  # noqa: E402
from toric_implicit.core.implicit.forms import ImplicitForm  # noqa: E402
from toric_implicit.loaders.fixture_loader import FixtureLoader  # noqa: E402

F_S = "2*T1*T2 - T2*T3 - 3*T1*T4 - 2*T2*T4 + 3*T4^2"


@pytest.fixture(scope="session")
def example4_job():
    return FixtureLoader.load("example4")


@pytest.fixture(scope="session")
def example4_map(example4_job):
    return orchestrator.graded_map(example4_job)


@pytest.fixture(scope="session")
def example4_matrix(example4_job, example4_map):
    return orchestrator.build_matrix(example4_job, example4_map)


@pytest.fixture(scope="session")
def sextic(example4_job):
    return ImplicitForm.parse(example4_job.expected.implicit)


@pytest.fixture(scope="session")
def example5_job():
    return FixtureLoader.load("example5")


@pytest.fixture(scope="session")
def example5_map(example5_job):
    return orchestrator.graded_map(example5_job)


@pytest.fixture(scope="session")
def example5_matrix(example5_job, example5_map):
    return orchestrator.build_matrix(example5_job, example5_map)


@pytest.fixture(scope="session")
def quadric():
    return ImplicitForm.parse(F_S)
