"""The six reducible patterns behind the girth-7 result, as validated values.

Frontier orders are read off a drawing with the path horizontal, left to
right, and are listed clockwise around the outer face starting from the
leftmost half-edge.

P22     0 - 1                       frontier: 0, 1
P232    0 - 1 - 2                   frontier: 0, 1, 2          (middle half-edge up)
P323    u1=0 - u2=1 - u3=2, v1=3 v2=4 v3=5 above u1 u2 u3
                                    frontier: u1, v1, v2, v3, u3
P23322  as P323 but v1 below u1     frontier: u1, v2, v3, u3, v1
P32332  u1..u4 = 0..3, v1=4 v2=5 v4=6 above u1 u2 u4, half-edge of u3 up
                                    frontier: u1, v1, v2, u3, v4, u4
P7      face u1..u7 = 0..6 with deg(u1) = 2, v4=7 v5=8 pendant at u4 u5
                                    frontier: u2, u3, v4, v5, u6, u7

P232, P323 and P7 have a left-right reflection (frontier order reversed);
P23322 and P32332 have only the identity.
"""
from __future__ import annotations

from pathlib import Path

from .pattern import Pattern, load_pattern

_REVERSE5 = (4, 3, 2, 1, 0)

_CATALOG = {
    "P22": Pattern(2, ((0, 1),), (0, 1), ((0, 1), (1, 0)), "P22"),
    "P232": Pattern(3, ((0, 1), (1, 2)), (0, 1, 2), ((0, 1, 2), (2, 1, 0)), "P232"),
    "P323": Pattern(6, ((0, 1), (1, 2), (0, 3), (1, 4), (2, 5)), (0, 3, 4, 5, 2),
                    ((0, 1, 2, 3, 4), _REVERSE5), "P323"),
    "P23322": Pattern(6, ((0, 1), (1, 2), (0, 3), (1, 4), (2, 5)), (0, 4, 5, 2, 3),
                      (), "P23322"),
    "P32332": Pattern(7, ((0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (3, 6)),
                      (0, 4, 5, 2, 6, 3), (), "P32332"),
    "P7": Pattern(9, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (3, 7), (4, 8)),
                  (1, 2, 7, 8, 5, 6), ((0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0)), "P7"),
}

NAMES = tuple(_CATALOG)

PATTERN_FILES = {name: f"{name.lower()}.pat" for name in NAMES}


def builtin(name: str) -> Pattern:
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; available: {', '.join(NAMES)}") from None


def all_builtins() -> list[Pattern]:
    return [_CATALOG[n] for n in NAMES]


def check_pattern_files(directory) -> None:
    """Assert that each shipped pattern file parses to the compiled-in pattern."""
    directory = Path(directory)
    for name, filename in PATTERN_FILES.items():
        parsed = load_pattern(directory / filename)
        if parsed != _CATALOG[name]:
            raise AssertionError(f"{directory / filename} does not match builtin {name}")
