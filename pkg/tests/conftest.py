import pytest

from apartition.multiset import explicit, kregular, naturals, plane

TABLE1_SET = explicit([1, 2, 3, 4, 5])
TABLE2_MULTISET = explicit([1, 2, 2, 3, 5, 5, 5])

FIVE_MULTISETS = {
    "naturals": naturals(),
    "plane": plane(),
    "kregular2": kregular(2),
    "table1": TABLE1_SET,
    "table2": TABLE2_MULTISET,
}


@pytest.fixture(params=sorted(FIVE_MULTISETS))
def multiset5(request):
    return FIVE_MULTISETS[request.param]


_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
