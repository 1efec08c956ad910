import pytest

from ialt.codes import build_code

# lines recorded by the acceptance tests, printed at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def code_2_4_7():
    return build_code(2, 4, 7)


@pytest.fixture
def record():
    def _record(key, ok, detail=""):
        ACCEPTANCE[key] = (bool(ok), detail)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(str(k).split()[0]), str(k))):
        ok, detail = ACCEPTANCE[key]
        line = f"criterion {key}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
