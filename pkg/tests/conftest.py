import re

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+(?:\[[^\]]*\])?)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if hasattr(report, "wasxfail"):
        status = "XFAIL"
    else:
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
    _results[key] = (status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), (status, dur) in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name[:44]:<44} {status:<5} ({dur:.2f}s)")
