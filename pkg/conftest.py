"""Shared pytest options: a fixed seed and opt-in slow suites."""
import random

import pytest

from core.config import get_settings


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=None, help="seed for randomized tests")
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def seed(request) -> int:
    chosen = request.config.getoption("--seed")
    return get_settings().seed if chosen is None else chosen


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)
