import pytest

_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        case = item.callspec.id if hasattr(item, "callspec") else item.name
        results = item.config.stash[_ACCEPTANCE].setdefault(str(marker.args[0]), {})
        results[case] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash[_ACCEPTANCE]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results, key=int):
        cases = results[criterion]
        failed = [case for case, ok in cases.items() if not ok]
        line = f"criterion {criterion}: {'FAIL' if failed else 'PASS'} ({len(cases) - len(failed)}/{len(cases)} cases)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
