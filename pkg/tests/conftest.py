import os

# Keep test runs from writing the project log file.
os.environ.setdefault("GQAP_LOG_FILE", "")

import hypothesis  # noqa: E402
import pytest  # noqa: E402

from src.models import GqapInstance, Population  # noqa: E402
from tests.helpers import scored  # noqa: E402

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=100, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def tiny_instance() -> GqapInstance:
    return GqapInstance(
        machine_count=2,
        location_count=2,
        assign_cost=[[1, 2], [3, 4]],
        flow=[[0, 3], [2, 0]],
        distance=[[0, 5], [5, 0]],
        requirement=[1, 1],
        capacity=[2, 2],
        name="tiny",
    )


@pytest.fixture
def single_instance() -> GqapInstance:
    return GqapInstance(
        machine_count=1,
        location_count=1,
        assign_cost=[[5]],
        flow=[[0]],
        distance=[[0]],
        requirement=[1],
        capacity=[1],
        name="single",
    )


@pytest.fixture
def tight_instance() -> GqapInstance:
    """Three machines of size 3; only one fits on location 1."""
    return GqapInstance(
        machine_count=3,
        location_count=2,
        assign_cost=[[1, 9], [2, 8], [3, 7]],
        flow=[[0, 1, 2], [1, 0, 1], [2, 1, 0]],
        distance=[[0, 4], [4, 0]],
        requirement=[3, 3, 3],
        capacity=[4, 10],
        name="tight",
    )


@pytest.fixture
def mating_population() -> Population:
    """Population the worked crossover parents were drawn from."""
    return Population(
        members=(
            scored("1 2 3 1 4 1", 22273, 10),
            scored("3 1 1 2 4 1", 19373, 10),
            scored("2 3 4 1 1 2", 19610, 20),
            scored("4 4 2 1 1 3", 20400, 110),
            scored("1 1 4 2 4 1", 18878, 110),
        )
    )


@pytest.fixture
def replacement_population() -> Population:
    return Population(
        members=(
            scored("1 2 3 1 4 1", 22273, 10),
            scored("3 1 1 2 4 1", 19373, 10),
            scored("2 3 4 1 1 2", 19610, 20),
            scored("3 1 4 2 1 1", 17165, 0),
            scored("1 1 4 2 4 1", 18878, 110),
        )
    )
