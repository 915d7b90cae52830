import itertools

import pytest

from kempe_reducibility import library
from kempe_reducibility.coloring import (
    compute_gamma0,
    extendable_by_enumeration,
    is_extendable,
    is_proper,
)
from kempe_reducibility.pattern import all_frontier_colorings, line_graph

from conftest import RANK_CENSUS, group_images


def independent_proper(p, colors):
    # properness straight from vertex incidences, not from the line graph
    at = {v: [] for v in p.vertices}
    for eid, (u, v) in enumerate(p.internal_edges):
        at[u].append(colors[eid])
        at[v].append(colors[eid])
    for k, v in enumerate(p.frontier):
        at[v].append(colors[len(p.internal_edges) + k])
    return all(len(set(cs)) == len(cs) for cs in at.values())


def test_p22_always_extendable():
    p = library.builtin("P22")
    for gamma in all_frontier_colorings(p):
        ok, witness = is_extendable(p, gamma)
        assert ok and witness[1:] == gamma


def test_p232_121_not_extendable(p232):
    # hand oracle: internal edges ab, bc avoid the end colors and 2 at b
    manual = [(x, y) for x, y in itertools.product((1, 2, 3), repeat=2)
              if x not in (1, 2) and y not in (1, 2) and x != y]
    assert manual == []
    assert is_extendable(p232, (1, 2, 1)) == (False, None)


def test_p232_123_extendable(p232):
    ok, witness = is_extendable(p232, (1, 2, 3))
    assert ok
    assert witness[2:] == (1, 2, 3)
    assert independent_proper(p232, witness)


def test_verdict_only_mode(p232):
    assert is_extendable(p232, (1, 2, 3), witness=False) == (True, None)


@pytest.mark.parametrize("name, expected", [("P22", 2), ("P232", 3), ("P323", 14),
                                             ("P23322", 26), ("P32332", 56), ("P7", 38)])
def test_gamma0_counts(name, expected):
    assert len(compute_gamma0(library.builtin(name))) == expected == RANK_CENSUS[name][1][0]


def test_witnesses_are_proper(builtin_pattern):
    for gamma in all_frontier_colorings(builtin_pattern):
        ok, witness = is_extendable(builtin_pattern, gamma)
        if ok:
            assert independent_proper(builtin_pattern, witness)
            assert is_proper(builtin_pattern, witness)
            assert witness[len(builtin_pattern.internal_edges):] == gamma


def test_extendability_is_class_invariant(builtin_pattern):
    for gamma in all_frontier_colorings(builtin_pattern):
        flag = is_extendable(builtin_pattern, gamma, witness=False)[0]
        for img in group_images(builtin_pattern, gamma):
            assert is_extendable(builtin_pattern, img, witness=False)[0] == flag


@pytest.mark.parametrize("name", ["P22", "P232", "P323", "P23322"])
def test_backtracking_matches_enumeration(name):
    p = library.builtin(name)
    assert p.n_edges <= 12
    backtracked = {g for g in all_frontier_colorings(p) if is_extendable(p, g, witness=False)[0]}
    assert backtracked == extendable_by_enumeration(p)


def test_enumeration_guard():
    with pytest.raises(ValueError, match="limited"):
        extendable_by_enumeration(library.builtin("P7"))


def test_is_proper_rejects_clash(p232):
    assert not is_proper(p232, (1, 1, 2, 3, 2))
    assert not is_proper(p232, (1, 2))
