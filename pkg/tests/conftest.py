import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = report


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance.py" in item.nodeid:
            doc = (item.obj.__doc__ or "").strip().splitlines()
            item.user_properties.append(("summary", doc[0] if doc else item.name))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, rep in sorted(_ACCEPTANCE.items(), key=lambda kv: _number(kv[1])):
        summary = dict(rep.user_properties).get("summary", nodeid)
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {summary}")


def _number(rep):
    m = re.search(r"Criterion (\d+)", dict(rep.user_properties).get("summary", ""))
    return int(m.group(1)) if m else 0
