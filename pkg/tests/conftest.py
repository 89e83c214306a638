import pytest

from liecoh import catalog

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    # the time limit is asserted at teardown, so failures there count too
    if rep.when == "call" or rep.outcome != "passed":
        _CRITERIA.setdefault(marker.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        ok = all(o == "passed" for _, o in results)
        calls = len({name for name, _ in results})
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if ok else 'FAIL'} ({calls} checks)")


@pytest.fixture(scope="session")
def cat():
    return {name: catalog.get(name) for name in catalog.names()}


def alg(name):
    return catalog.get(name).algebra
