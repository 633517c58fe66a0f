def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import LINES_KEY

    lines = config.stash.get(LINES_KEY, None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
