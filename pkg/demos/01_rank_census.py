"""
Rank census for the six built-in patterns.

Runs the fixpoint rank computation on every built-in pattern and prints the
number of coloring classes per rank, plus the same table as CSV.
"""
import time

from kempe_reducibility import all_builtins, is_reducible_pattern, rank_histogram_table

start = time.perf_counter()
verdicts = [is_reducible_pattern(p) for p in all_builtins()]
print(f"computed in {time.perf_counter() - start:.2f}s\n")

print(rank_histogram_table(verdicts))
print(rank_histogram_table(verdicts, "csv"))

# --- every pattern is reducible: no class is left without a rank
for v in verdicts:
    print(f"{v.pattern:8s} reducible={v.reducible}  k0={v.k0}")
