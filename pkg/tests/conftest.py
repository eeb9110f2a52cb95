from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, lines in sorted(mod.RESULTS):
        terminalreporter.write_line(lines[0])
        for extra in lines[2:]:
            terminalreporter.write_line(extra)
