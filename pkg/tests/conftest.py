import pytest

from stardecomp.graph import complete_graph, cycle_graph, hypercube, petersen_graph

_acceptance_results: dict[str, tuple[str, str]] = {}


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def c8():
    return cycle_graph(8)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    label = marker.kwargs.get("criterion", item.name)
    status = "PASS" if call.excinfo is None else "FAIL"
    _acceptance_results[label] = (status, marker.kwargs.get("title", ""))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance_results, key=lambda s: int(s.split()[-1])):
        status, title = _acceptance_results[label]
        terminalreporter.write_line(f"{status}  {label}: {title}")
