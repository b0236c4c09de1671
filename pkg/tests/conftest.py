from helpers import ACCEPTANCE, acceptance_line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(acceptance_line(n, *ACCEPTANCE[n]))
