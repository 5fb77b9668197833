import re

_AC = re.compile(r"test_ac(\d+)_")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    m = _AC.match(item.name)
    if not m or call.when != "call":
        return
    label = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _results[int(m.group(1))] = ("PASS" if call.excinfo is None else "FAIL", label)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        status, label = _results[k]
        terminalreporter.write_line(f"AC{k} {status}: {label}")
