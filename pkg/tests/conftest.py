import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_docs = {}
_results = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.name.startswith("test_criterion_"):
            doc = (item.function.__doc__ or "").strip().splitlines()
            _docs[item.name] = doc[0] if doc else ""


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if name not in _docs:
        return
    if report.when == "call" or report.outcome != "passed":
        _results[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results, key=lambda n: int(n.split("_")[2])):
        terminalreporter.write_line(f"{_results[name]}  {name}: {_docs[name]}")
