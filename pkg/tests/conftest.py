import pytest

CRITERIA = {
    1: "golden worked example",
    2: "oracle equivalence on random systems",
    3: "restricted elimination matches unrestricted echelon",
    4: "certify mode: no violations, identical output",
    5: "zero reductions against frozen goldens",
    6: "determinism and parse/format round trip",
    7: "signature safety",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            continue
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n} {status}: {title} ({sum(results)}/{len(results)} checks)")
