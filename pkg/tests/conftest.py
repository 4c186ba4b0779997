from hypothesis import settings

# exact arithmetic timing varies a lot with coefficient growth
settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
