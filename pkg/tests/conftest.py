import pytest

ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    criterion = getattr(item.function, "criterion", None)
    if criterion is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        ACCEPTANCE[criterion] = (item.function.title, rep.passed, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, passed, secs = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if passed else 'FAIL'}  {title}  ({secs:.2f}s)")
