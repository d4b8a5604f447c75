import random

import pytest
from hypothesis import HealthCheck, settings

from drawiso.catalog import enumerated_k33_path, load_catalog
from drawiso.fixtures import fixture_drawings, fixture_suite
from drawiso.generate import random_drawing
from drawiso.model import PartitionedGraph
from drawiso.reconstruction import seed_catalog_from_drawings

settings.register_profile("repo", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

SHAPES = [(1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (1, 1, 2), (1, 2, 2), (3, 4), (2, 2, 2)]


def graph_of(sizes):
    names = "rbcdefg"
    return PartitionedGraph.from_sizes(**{names[i]: n for i, n in enumerate(sizes)})


def random_case(seed):
    """A random drawing of a random small graph, reproducible from ``seed``."""
    rng = random.Random(seed)
    return random_drawing(graph_of(rng.choice(SHAPES)), rng)


@pytest.fixture(scope="session")
def suite():
    return {fp.id: fp for fp in fixture_suite()}


@pytest.fixture(scope="session")
def corpus():
    return fixture_drawings()


@pytest.fixture(scope="session")
def k33_enumerated():
    return load_catalog(enumerated_k33_path())


@pytest.fixture(scope="session")
def fixture_catalog(corpus):
    return seed_catalog_from_drawings(corpus)


@pytest.fixture(scope="session")
def full_catalog(k33_enumerated):
    return seed_catalog_from_drawings({f"k33/{i}": d for i, d in enumerate(k33_enumerated)})


# acceptance bookkeeping: one PASS/FAIL/SKIPPED line per criterion in the summary
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIPPED"}[rep.outcome]
        _CRITERIA[mark.args[0]] = (mark.args[1], status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number} {title}: {status}")
