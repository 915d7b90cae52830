import functools
import itertools
from pathlib import Path

import pytest

from kempe_reducibility import library
from kempe_reducibility.pattern import COLOR_PERMUTATIONS, apply_color_permutation, apply_symmetry
from kempe_reducibility.ranks import is_reducible_pattern

PATTERN_DIR = Path(__file__).resolve().parent.parent / "patterns"

# published census: total classes, then class counts per rank.
RANK_CENSUS = {
    "P22": (2, [2]),
    "P232": (4, [3, 1]),
    "P323": (25, [14, 5, 4, 2]),
    "P23322": (41, [26, 9, 5, 1]),
    "P32332": (122, [56, 23, 13, 14, 15, 1]),
    "P7": (70, [38, 13, 12, 5, 2]),
}


@functools.lru_cache(maxsize=None)
def verdict_for(name):
    return is_reducible_pattern(library.builtin(name))


def group_images(p, gamma):
    """Every sigma o gamma o pi, enumerated explicitly over both groups."""
    for sigma, pi in itertools.product(COLOR_PERMUTATIONS, p.symmetries):
        yield apply_color_permutation(apply_symmetry(gamma, pi), sigma)


@pytest.fixture(params=library.NAMES)
def builtin_pattern(request):
    return library.builtin(request.param)


@pytest.fixture
def p232():
    return library.builtin("P232")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid and report.when == "call":
                lines.append((nodeid.split("::")[-1], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
