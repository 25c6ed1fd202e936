import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for num in range(1, 12):
        terminalreporter.write_line(mod.RESULTS.get(num, f"criterion {num:>2}: FAIL (no report; see traceback)"))
