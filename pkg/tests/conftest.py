import pytest

from orbihodge.catalog import catalog_group
from orbihodge.matgroup import cotangent_lift

SL2_NAMES = [
    "trivial-sl2",
    "minus-one-sl2",
    "cyclic-sl2:2",
    "cyclic-sl2:3",
    "cyclic-sl2:4",
    "cyclic-sl2:5",
    "binary-dihedral:2",
    "binary-dihedral:3",
    "binary-dihedral:4",
    "binary-tetrahedral",
    "binary-octahedral",
    "binary-icosahedral",
]
SYMMETRIC_NAMES = ["symmetric:2", "symmetric:3", "symmetric:4"]
SYMMETRIC_SL_NAMES = ["symmetric-sl:2", "symmetric-sl:3", "symmetric-sl:4"]
OTHER_NAMES = ["minus-one-sp4"]
ALL_NAMES = SL2_NAMES + SYMMETRIC_NAMES + SYMMETRIC_SL_NAMES + OTHER_NAMES

_cache = {}


def group(name):
    """Catalog groups are immutable, so build each once per session."""
    if name not in _cache:
        if name.startswith("cotangent:"):
            _cache[name] = cotangent_lift(group(name[len("cotangent:"):]))
        else:
            _cache[name] = catalog_group(name)
    return _cache[name]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
