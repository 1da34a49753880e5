import pytest

from gamearg import _backend, _pure
from gamearg.fixtures import fig1

try:
    from gamearg import _core
except ImportError:
    _core = None

BACKENDS = [pytest.param(_pure, id="pure")]
if _core is not None:
    BACKENDS.append(pytest.param(_core, id="compiled"))


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel implementation."""
    impl = request.param
    monkeypatch.setattr(_backend, "solve_csr", impl.solve_csr)
    monkeypatch.setattr(_backend, "kernel_masks", impl.kernel_masks)
    return impl


@pytest.fixture
def fig1_game():
    return fig1()


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
