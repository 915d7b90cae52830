"""
Checking a pattern of your own.

Patterns are written in a small line format.  The embedding matters: here the
four-vertex path of P32332 is given with the half-edge of its third vertex
pointing to the other side, and the result is no longer reducible.
"""
from kempe_reducibility import builtin, is_reducible_pattern, parse_pattern

TEXT = """
pattern P32332-flipped
vertices 7
edge 0 1
edge 1 2
edge 2 3
edge 0 4
edge 1 5
edge 3 6
# frontier, clockwise: u1 v1 v2 v4 u4 u3
half 0
half 4
half 5
half 6
half 3
half 2
"""

for p in (builtin("P32332"), parse_pattern(TEXT)):
    v = is_reducible_pattern(p)
    print(f"{v.pattern:16s} reducible={v.reducible}  histogram={v.rank_histogram}  "
          f"unranked={len(v.unranked)}")
