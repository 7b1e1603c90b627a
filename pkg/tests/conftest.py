"""Shared fixtures: tiny hand-checked instances used across the suite."""

import numpy as np
import pytest

# Lines recorded by the acceptance tests; replayed after the run so the
# per-criterion PASS/FAIL summary is visible even when capture is on.
_ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion, then assert."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"[acceptance] {name}: {status}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def ortho_fixture():
    """Orthogonal columns with distinct norms (1 and 2); y has a residual
    component outside the column span."""
    A = np.array([[1.0, 0.0], [0.0, 2.0], [0.0, 0.0]])
    y = np.array([3.0, 2.0, 5.0])
    return A, y


@pytest.fixture
def skew_fixture():
    """Correlated columns; the closed form picks the wrong column at k=1."""
    A = np.array([[1.0, 1.0], [0.0, 1.0], [0.0, 0.0]])
    y = np.array([1.0, -1.0, 0.0])
    return A, y


@pytest.fixture
def tie_fixture():
    """Orthonormal columns, y loads both equally: exact k=1 residual tie."""
    A = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    y = np.array([1.0, 1.0, 0.0])
    return A, y
