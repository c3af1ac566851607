import numpy as np
import pytest

from cocyclelab.boundary import BoundaryPoint, ProductBoundaryPoint


def pt(*coords):
    return BoundaryPoint(coords)


INF1 = BoundaryPoint.infinity(1)


def product(xs, ys):
    """Zip two factor point lists into product points."""
    return [ProductBoundaryPoint((x, y)) for x, y in zip(xs, ys)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (passed, detail) before asserting."""
    name = request.node.name

    def record(passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE[name] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
