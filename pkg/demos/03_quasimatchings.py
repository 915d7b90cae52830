"""
Non-crossing perfect quasi-matchings on a circle.

The interval DP and the brute-force enumeration answer the same question; this
script shows a few hand-made instances and then compares the two methods on
random circle pseudographs.
"""
import itertools
import random

from kempe_reducibility import AuxiliaryGraph, brute_force_quasimatching, has_noncrossing_perfect_quasimatching


def chords(*pairs):
    return frozenset(frozenset(p) for p in pairs)


cases = {
    "empty": AuxiliaryGraph(()),
    "triangle": AuxiliaryGraph((0, 1, 2), chords=chords((0, 1), (1, 2), (0, 2))),
    "crossing square": AuxiliaryGraph((0, 1, 2, 3), chords=chords((0, 2), (1, 3))),
    "square + loops": AuxiliaryGraph((0, 1, 2, 3), frozenset({0, 2}), chords((1, 3))),
}
for label, graph in cases.items():
    print(f"{label:16s} DP={has_noncrossing_perfect_quasimatching(graph)!s:5s} "
          f"brute={brute_force_quasimatching(graph)}")

# --- random agreement check
rng = random.Random(0)
disagree = 0
for _ in range(5000):
    n = rng.randint(0, 8)
    loops = frozenset(x for x in range(n) if rng.random() < 0.2)
    cs = frozenset(frozenset(c) for c in itertools.combinations(range(n), 2) if rng.random() < 0.4)
    g = AuxiliaryGraph(tuple(range(n)), loops, cs)
    disagree += has_noncrossing_perfect_quasimatching(g) != brute_force_quasimatching(g)
print(f"\n5000 random graphs, disagreements: {disagree}")
