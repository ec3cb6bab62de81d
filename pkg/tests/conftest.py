import os

import hypothesis
import pytest

from leafspan.config import Settings, get_settings
from leafspan.graph import Graph
from leafspan.oracle import clear_cache
from leafspan.toolkit import gadget, petersen
from tests.strategies import complete

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, print_blob=True)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for key in list(os.environ):
        if key.startswith("LEAFSPAN_"):
            monkeypatch.delenv(key)
    get_settings.cache_clear()
    clear_cache()
    yield
    get_settings.cache_clear()
    clear_cache()


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture
def gadget_graph() -> Graph:
    return gadget()


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture
def k5() -> Graph:
    return complete(5)
