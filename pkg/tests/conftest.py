import numpy as np
import pytest

from demcomp import pcm as pcm_mod

# the 4x4 worked example; '*' cells are None
EXAMPLE_GRID = [
    [1, None, 4, 8],
    [None, 1, 2, 4],
    [1 / 4, 1 / 2, 1, 2],
    [1 / 8, 1 / 4, 1 / 2, 1],
]
EXAMPLE_CSV = "A,B,C,D\n1,*,4,8\n*,1,2,4\n1/4,1/2,1,2\n1/8,1/4,1/2,1\n"
# matrices as printed to 4 decimals
EXAMPLE_N = np.array([
    [0.0667, 0.0000, 0.2667, 0.5333],
    [0.0000, 0.0667, 0.1333, 0.2667],
    [0.0167, 0.0333, 0.0667, 0.1333],
    [0.0083, 0.0167, 0.0333, 0.0667],
])
EXAMPLE_T = np.array([
    [0.0835, 0.0241, 0.3371, 0.6742],
    [0.0060, 0.0835, 0.1685, 0.3371],
    [0.0211, 0.0421, 0.0899, 0.1798],
    [0.0105, 0.0211, 0.0449, 0.0899],
])
EXAMPLE_COMPLETED = np.array([
    [1, 2, 4, 8],
    [1 / 2, 1, 2, 4],
    [1 / 4, 1 / 2, 1, 2],
    [1 / 8, 1 / 4, 1 / 2, 1],
])
SAATY3 = [[1, 2, 6], [0.5, 1, 2], [1 / 6, 0.5, 1]]
# Perron root of SAATY3 from tests/oracles.perron_root_bisection on [3, 4]
SAATY3_LAMBDA = 3.018294707289631


@pytest.fixture
def example_pcm():
    return pcm_mod.validate(EXAMPLE_GRID, ["A", "B", "C", "D"])


_completed = []


@pytest.fixture(autouse=True)
def _reciprocity_everywhere(monkeypatch):
    """Every CompletePCM built during a test must be reciprocal to 1e-9."""
    original = pcm_mod.CompletePCM.__post_init__

    def spy(self):
        original(self)
        _completed.append(self)

    monkeypatch.setattr(pcm_mod.CompletePCM, "__post_init__", spy)
    start = len(_completed)
    yield
    for m in _completed[start:]:
        assert np.all(np.diag(m.values) == 1.0)
        assert m.reciprocity_error() <= 1e-9


@pytest.fixture
def completed_log():
    return _completed


# acceptance verdicts, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_collection_modifyitems(session, config, items):
    # acceptance runs last so the reciprocity sweep sees every matrix built by the suite
    items.sort(key=lambda item: item.nodeid.startswith("tests/test_acceptance.py"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
