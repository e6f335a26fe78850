import sys


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in list(sys.modules.items())
                if name.endswith("test_acceptance") and hasattr(m, "RESULTS")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance")
    for n in sorted(mod.RESULTS):
        ok, title = mod.RESULTS[n]
        terminalreporter.write_line(f"ACCEPTANCE {n:2d} {'PASS' if ok else 'FAIL'} {title}")
