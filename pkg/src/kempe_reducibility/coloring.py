"""Extendability of frontier colorings to proper 3-edge-colorings of a pattern."""
from __future__ import annotations

import itertools
from typing import Sequence

from .pattern import COLORS, Coloring, Pattern, _check_coloring, enumerate_class_representatives, line_graph


def is_proper(p: Pattern, colors: Sequence[int]) -> bool:
    """Check a full edge coloring (one color per edge id) against the line graph."""
    if len(colors) != p.n_edges or any(c not in COLORS for c in colors):
        return False
    adjacency = line_graph(p)
    return all(colors[a] != colors[b] for a in range(p.n_edges) for b in adjacency[a])


def is_extendable(p: Pattern, gamma: Sequence[int], witness: bool = True):
    """Decide whether ``gamma`` extends to a proper 3-edge-coloring of ``p``.

    Returns ``(flag, full_coloring)``; the coloring is None when the flag is
    false or ``witness`` is off.
    """
    _check_coloring(p, gamma)
    adjacency = line_graph(p)
    n_internal = len(p.internal_edges)
    colors = [0] * n_internal + list(gamma)

    # A frontier coloring that already clashes at a vertex cannot be extended.
    for k in range(p.n_frontier):
        eid = n_internal + k
        if any(b >= n_internal and colors[b] == colors[eid] for b in adjacency[eid]):
            return False, None

    order = _search_order(adjacency, n_internal)

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        eid = order[i]
        forbidden = {colors[b] for b in adjacency[eid]}
        for c in COLORS:
            if c not in forbidden:
                colors[eid] = c
                if backtrack(i + 1):
                    return True
        colors[eid] = 0
        return False

    if not backtrack(0):
        return False, None
    return True, (tuple(colors) if witness else None)


def _search_order(adjacency, n_internal: int) -> list[int]:
    # Greedy: next edge is the one with most already-fixed neighbours (frontier counts as fixed).
    fixed = set(range(n_internal, len(adjacency)))
    remaining = set(range(n_internal))
    order = []
    while remaining:
        eid = max(sorted(remaining), key=lambda e: len(adjacency[e] & fixed))
        order.append(eid)
        fixed.add(eid)
        remaining.discard(eid)
    return order


def compute_gamma0(p: Pattern) -> set[Coloring]:
    """Class representatives whose colorings extend to the whole pattern."""
    return {rep for rep in enumerate_class_representatives(p)
            if is_extendable(p, rep, witness=False)[0]}


def extendable_by_enumeration(p: Pattern) -> set[Coloring]:
    """Project every proper coloring of the pattern onto its frontier.

    Brute force over 3^(number of edges); intended as an oracle for small patterns.
    """
    if p.n_edges > 12:
        raise ValueError(f"pattern has {p.n_edges} edges; enumeration oracle limited to 12")
    adjacency = line_graph(p)
    pairs = [(a, b) for a in range(p.n_edges) for b in adjacency[a] if a < b]
    n_internal = len(p.internal_edges)
    found = set()
    for colors in itertools.product(COLORS, repeat=p.n_edges):
        if all(colors[a] != colors[b] for a, b in pairs):
            found.add(colors[n_internal:])
    return found
