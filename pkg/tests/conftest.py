import os

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ACCEPTANCE: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "acceptance_line":
            _ACCEPTANCE.append(value)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE, key=lambda s: s[6:9]):
        terminalreporter.write_line(line)
    passed = sum(line.startswith("PASS") for line in _ACCEPTANCE)
    terminalreporter.write_line(f"{passed}/{len(_ACCEPTANCE)} criteria passed")
