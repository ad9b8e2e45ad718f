import pytest
from hypothesis import HealthCheck, settings

from mudr import scenario as sc

settings.register_profile(
    "mudr",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("mudr")


@pytest.fixture(scope="session")
def table2_scenario():
    return sc.load_scenario(sc.bundled_scenario_path())


@pytest.fixture(scope="session")
def table2_lb(table2_scenario):
    return sc.derive_link_budget(table2_scenario)
