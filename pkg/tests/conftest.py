import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


def pytest_terminal_summary(terminalreporter):
    outcomes: dict[int, bool] = {}
    for key in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(key, []):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match and report.when in ("setup", "call"):
                n = int(match.group(1))
                outcomes[n] = outcomes.get(n, True) and key == "passed"
    if not outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status = {True: "PASS", False: "FAIL", None: "NOT RUN"}[outcomes.get(n)]
        terminalreporter.write_line(f"[{status}] criterion {n:2d}: {CRITERIA[n]}")
