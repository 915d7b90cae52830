"""Boundary switches, auxiliary graphs and non-crossing perfect quasi-matchings.

A frontier coloring ``gamma`` is reducible to a set of frontier colorings when,
for some color pair {i, j}, every way the (i, j)-Kempe chains could pair up the
frontier edges (without crossing, since the host graph is planar) leaves at
least one chain whose switch lands in the set.  The auxiliary graph records the
switches that do *not* land in the set; a non-crossing perfect quasi-matching
in it is a chain layout that defeats every switch.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .pattern import Coloring, Pattern, _check_coloring

COLOR_PAIRS = ((1, 2), (1, 3), (2, 3))

Membership = Callable[[Coloring], bool]


class SwitchError(ValueError):
    pass


def _check_pair(pair) -> tuple[int, int]:
    i, j = sorted(pair)
    if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
        raise SwitchError(f"invalid color pair {pair!r}")
    return i, j


def boundary_switch_single(gamma: Sequence[int], pair, e: int) -> Coloring:
    """Swap colors i and j on frontier edge ``e``."""
    i, j = _check_pair(pair)
    if gamma[e] not in (i, j):
        raise SwitchError(f"frontier edge {e} has color {gamma[e]}, not in {{{i},{j}}}")
    out = list(gamma)
    out[e] = i + j - gamma[e]
    return tuple(out)


def boundary_switch_pair(gamma: Sequence[int], pair, e: int, f: int) -> Coloring:
    """Swap colors i and j on two distinct frontier edges ``e`` and ``f``."""
    if e == f:
        raise SwitchError("a pair switch needs two distinct frontier edges")
    i, j = _check_pair(pair)
    for x in (e, f):
        if gamma[x] not in (i, j):
            raise SwitchError(f"frontier edge {x} has color {gamma[x]}, not in {{{i},{j}}}")
    out = list(gamma)
    out[e] = i + j - gamma[e]
    out[f] = i + j - gamma[f]
    return tuple(out)


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Pseudograph on a circle.

    ``circle_vertices`` are frontier indices in cyclic order; ``loops`` and
    ``chords`` refer to *positions* in that list.
    """

    circle_vertices: tuple[int, ...]
    loops: frozenset[int] = frozenset()
    chords: frozenset[frozenset[int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "circle_vertices", tuple(self.circle_vertices))
        object.__setattr__(self, "loops", frozenset(self.loops))
        object.__setattr__(self, "chords", frozenset(frozenset(c) for c in self.chords))
        n = len(self.circle_vertices)
        if any(a >= b for a, b in zip(self.circle_vertices, self.circle_vertices[1:])):
            raise ValueError("circle vertices must be strictly increasing frontier indices")
        if any(not 0 <= x < n for x in self.loops):
            raise ValueError("loop at an invalid circle position")
        for c in self.chords:
            if len(c) != 2 or any(not 0 <= x < n for x in c):
                raise ValueError(f"chord {sorted(c)} does not join two valid positions")

    @property
    def size(self) -> int:
        return len(self.circle_vertices)

    def has_chord(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self.chords

    def dump(self) -> str:
        """Debug text: circle vertices, loop positions, then one chord per line."""
        lines = [" ".join(map(str, self.circle_vertices)),
                 " ".join(map(str, sorted(self.loops)))]
        lines += [f"{a} {b}" for a, b in sorted(tuple(sorted(c)) for c in self.chords)]
        return "\n".join(lines) + "\n"


def build_auxiliary_graph(p: Pattern, in_gamma: Membership, gamma: Sequence[int],
                          pair) -> AuxiliaryGraph:
    """Auxiliary graph of ``gamma`` w.r.t. the set tested by ``in_gamma`` and ``pair``."""
    _check_coloring(p, gamma)
    i, j = _check_pair(pair)
    gamma = tuple(gamma)
    circle = tuple(k for k, c in enumerate(gamma) if c in (i, j))
    loops = {pos for pos, e in enumerate(circle)
             if not in_gamma(boundary_switch_single(gamma, (i, j), e))}
    chords = {frozenset((a, b)) for a, b in itertools.combinations(range(len(circle)), 2)
              if not in_gamma(boundary_switch_pair(gamma, (i, j), circle[a], circle[b]))}
    return AuxiliaryGraph(circle, frozenset(loops), frozenset(chords))


def has_noncrossing_perfect_quasimatching(a: AuxiliaryGraph) -> bool:
    """Interval DP over the circle cut open at position 0.

    ``cover(l, r)`` holds when positions l..r-1 can be covered: either the arc
    is empty, or l takes a loop, or l is matched by a chord to some k in the
    arc with both sides of that chord independently coverable.
    """
    n = a.size
    loops, chords = a.loops, a.chords

    @lru_cache(maxsize=None)
    def cover(l: int, r: int) -> bool:
        if l >= r:
            return True
        if l in loops and cover(l + 1, r):
            return True
        return any(frozenset((l, k)) in chords and cover(l + 1, k) and cover(k + 1, r)
                   for k in range(l + 1, r))

    return cover(0, n)


def _crosses(c: tuple[int, int], d: tuple[int, int]) -> bool:
    a, b = sorted(c)
    x, y = sorted(d)
    return (a < x < b) != (a < y < b)


def _partitions_into_blocks(items: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    # every partition of items into singletons and pairs
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for tail in _partitions_into_blocks(rest):
        yield [(first,)] + tail
    for idx, other in enumerate(rest):
        for tail in _partitions_into_blocks(rest[:idx] + rest[idx + 1:]):
            yield [(first, other)] + tail


BRUTE_FORCE_LIMIT = 12


def brute_force_quasimatching(a: AuxiliaryGraph) -> bool:
    """Decide the same question as the DP by enumerating every candidate cover."""
    if a.size > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} circle vertices, got {a.size}")
    for blocks in _partitions_into_blocks(tuple(range(a.size))):
        singles = [b[0] for b in blocks if len(b) == 1]
        pairs = [b for b in blocks if len(b) == 2]
        if any(s not in a.loops for s in singles):
            continue
        if any(not a.has_chord(*b) for b in pairs):
            continue
        if any(_crosses(c, d) for c, d in itertools.combinations(pairs, 2)):
            continue
        return True
    return False


class OracleMismatch(AssertionError):
    pass


def is_reducible_to(p: Pattern, gamma: Sequence[int], in_gamma: Membership,
                    pairs=COLOR_PAIRS, oracle_check: bool = False, on_graph=None):
    """Return ``(True, pair)`` for the first color pair whose auxiliary graph has
    no non-crossing perfect quasi-matching, else ``(False, None)``.

    With ``oracle_check`` each matching decision is repeated by brute force and
    a disagreement raises OracleMismatch.  ``on_graph(pair, graph, verdict)`` is
    called for every auxiliary graph examined.
    """
    for pair in pairs:
        graph = build_auxiliary_graph(p, in_gamma, gamma, pair)
        matched = has_noncrossing_perfect_quasimatching(graph)
        if oracle_check and brute_force_quasimatching(graph) != matched:
            raise OracleMismatch(f"DP and brute force disagree on {graph!r}")
        if on_graph is not None:
            on_graph(tuple(sorted(pair)), graph, matched)
        if not matched:
            return True, tuple(sorted(pair))
    return False, None
