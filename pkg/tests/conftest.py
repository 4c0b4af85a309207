import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        title, ok, elapsed, error = module.RESULTS[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s) {title}"
        terminalreporter.write_line(line + (f" -- {error}" if error else ""))
