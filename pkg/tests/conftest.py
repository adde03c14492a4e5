import pytest

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body asserts, this reports."""
    name = request.node.name
    detail = {"text": ""}

    def note(text):
        detail["text"] = text

    yield note
    call = getattr(request.node, "rep_call", None)
    passed = bool(call and call.passed)
    _ACCEPTANCE[name] = (passed, detail["text"])


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, text) in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {text}")
