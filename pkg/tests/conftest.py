import pytest

from ringlab import build

SPECS = {
    "Z1": "zn 1",
    "Z2": "zn 2",
    "Z3": "zn 3",
    "Z6": "zn 6",
    "Z10": "zn 10",
    "Z12": "zn 12",
    "Z2xZ5": "product (zn 2) (zn 5)",
    "Z2xZ2": "product (zn 2) (zn 2)",
    "M2Z2": "matrix 2 (zn 2)",
    "M2Z3": "matrix 2 (zn 3)",
}

_cache = {}


def ring(name):
    """Session-wide ring instances so cached relation matrices are reused."""
    if name not in _cache:
        _cache[name] = build(SPECS[name])
    return _cache[name]


@pytest.fixture(scope="session")
def z10():
    return ring("Z10")


@pytest.fixture(scope="session")
def z12():
    return ring("Z12")


@pytest.fixture(scope="session")
def m23():
    return ring("M2Z3")


def mat(r, rows):
    from ringlab import matrix_index

    return matrix_index(r, rows)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
