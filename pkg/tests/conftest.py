import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Replay the acceptance verdict lines after the test summary.

    Capture is fd-level by default, so the lines printed inside the tests
    are only shown on failure; this keeps one visible PASS/FAIL line per
    check on every full run.
    """
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICT_LINES", ()) if module else ()
    if lines:
        terminalreporter.section("verification verdicts")
        for line in lines:
            terminalreporter.write_line(line)
