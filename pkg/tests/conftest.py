"""Collect acceptance-criterion outcomes and print one summary line per criterion."""
from collections import defaultdict

_results = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, title = mark.args
    _titles[n] = title
    _results[n].append((item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        runs = _results[n]
        failed = [name for name, ok in runs if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {n:>2} {status}  {_titles[n]} ({len(runs) - len(failed)}/{len(runs)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
