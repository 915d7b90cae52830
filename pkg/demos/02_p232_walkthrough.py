"""
Walk through the smallest interesting case by hand: the path of degrees 2, 3, 2.

Three half-edges, so 27 frontier colorings, falling into four classes.  Three
of them extend to the whole path.  The fourth, ends colored 1 and middle 2,
does not, but it is reducible: for the pair (1, 2) every single or double
switch lands in an extendable class, so the auxiliary graph has three
vertices and nothing else, and three vertices cannot be perfectly matched.
"""
from kempe_reducibility import (
    boundary_switch_single,
    build_auxiliary_graph,
    builtin,
    canonical_representative,
    compute_gamma0,
    enumerate_class_representatives,
    has_noncrossing_perfect_quasimatching,
    is_extendable,
)
from kempe_reducibility.pattern import orbit_sizes

p = builtin("P232")
print(p.to_text())

sizes = orbit_sizes(p)
for rep in enumerate_class_representatives(p):
    ok, witness = is_extendable(p, rep)
    print(f"class {rep}  orbit {sizes[rep]:2d}  extendable={ok}  witness={witness}")

gamma0 = compute_gamma0(p)
in_gamma0 = lambda g: canonical_representative(p, g) in gamma0

# --- single switches of the stuck class under (1, 2)
gamma = (1, 2, 1)
for e in range(3):
    switched = boundary_switch_single(gamma, (1, 2), e)
    print(f"switch edge {e}: {switched} -> class {canonical_representative(p, switched)}")

for pair in ((1, 2), (1, 3), (2, 3)):
    graph = build_auxiliary_graph(p, in_gamma0, gamma, pair)
    print(f"\npair {pair}:")
    print(graph.dump(), end="")
    print("non-crossing perfect quasi-matching:", has_noncrossing_perfect_quasimatching(graph))
