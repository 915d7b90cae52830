"""Rank computation by fixpoint iteration, and pattern-level verdicts."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .coloring import compute_gamma0
from .kempe import COLOR_PAIRS, is_reducible_to
from .pattern import Coloring, Pattern, orbit_sizes, representative_map


@dataclass
class RankTable:
    """Ranks of class representatives after the fixpoint.

    ``ranks[rep]`` is None for classes that never received a rank.  ``stages[k]``
    is the set of representatives that got rank k, and ``witness_pairs`` gives
    the color pair that reduced each class of rank >= 1.
    """

    ranks: dict[Coloring, int | None]
    k0: int
    stages: list[set[Coloring]]
    witness_pairs: dict[Coloring, tuple[int, int]] = field(default_factory=dict)
    found_non_reducible: bool = False

    def rank_of(self, rep: Coloring) -> int | None:
        return self.ranks[rep]

    def pi(self, k: int) -> set[Coloring]:
        """Representatives of rank at most k."""
        return {rep for rep, r in self.ranks.items() if r is not None and r <= k}

    @property
    def unranked(self) -> list[Coloring]:
        return sorted(rep for rep, r in self.ranks.items() if r is None)

    def histogram(self) -> list[int]:
        return [len(s) for s in self.stages]


def compute_ranks(p: Pattern, oracle_check: bool = False, on_graph=None) -> RankTable:
    rep_of = representative_map(p)
    reps = sorted(set(rep_of.values()))
    ranks: dict[Coloring, int | None] = {rep: None for rep in reps}
    gamma0 = compute_gamma0(p)
    for rep in gamma0:
        ranks[rep] = 0
    stages = [set(gamma0)]
    witness_pairs = {}

    stage = 1
    found_non_reducible = False
    while True:
        frozen = dict(ranks)

        def below(g: Coloring, bound=stage) -> bool:
            r = frozen[rep_of[g]]
            return r is not None and r < bound

        newly = set()
        found_non_reducible = False
        for rep in reps:
            if frozen[rep] is not None:
                continue
            reduced, pair = is_reducible_to(p, rep, below, COLOR_PAIRS,
                                            oracle_check=oracle_check, on_graph=on_graph)
            if reduced:
                newly.add(rep)
                witness_pairs[rep] = pair
            else:
                found_non_reducible = True
        if not newly:
            break
        for rep in newly:
            ranks[rep] = stage
        stages.append(newly)
        stage += 1

    return RankTable(ranks, len(stages) - 1, stages, witness_pairs, found_non_reducible)


@dataclass
class Verdict:
    pattern: str
    reducible: bool
    rank_histogram: list[int]
    unranked: list[Coloring]
    k0: int
    table: RankTable | None = None

    @property
    def total_classes(self) -> int:
        return sum(self.rank_histogram) + len(self.unranked)


def is_reducible_pattern(p: Pattern, oracle_check: bool = False, on_graph=None) -> Verdict:
    table = compute_ranks(p, oracle_check=oracle_check, on_graph=on_graph)
    unranked = table.unranked
    return Verdict(p.name or "unnamed", not unranked, table.histogram(), unranked,
                   table.k0, table)


def class_rows(p: Pattern, table: RankTable) -> list[dict]:
    """Per-class detail: representative, orbit size, rank and witnessing pair."""
    sizes = orbit_sizes(p)
    return [{"rep": list(rep), "orbit_size": sizes[rep], "rank": table.ranks[rep],
             "witness_pair": list(table.witness_pairs[rep]) if rep in table.witness_pairs else None}
            for rep in sorted(table.ranks)]


def verdict_to_json(v: Verdict, p: Pattern | None = None) -> dict:
    out = {"pattern": v.pattern, "reducible": v.reducible, "k0": v.k0,
           "total_classes": v.total_classes, "histogram": list(v.rank_histogram)}
    if p is not None and v.table is not None:
        out["classes"] = class_rows(p, v.table)
    return out


def rank_histogram_table(verdicts: list[Verdict], fmt: str = "text") -> str:
    """Render verdicts as a rank census table, as ``text`` or ``csv``."""
    if not verdicts:
        raise ValueError("need at least one verdict")
    width = max(len(v.rank_histogram) for v in verdicts)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pattern", "total"] + [f"rank{k}" for k in range(width)])
        for v in verdicts:
            writer.writerow([v.pattern, v.total_classes] + v.rank_histogram
                            + [""] * (width - len(v.rank_histogram)))
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")

    header = ["pattern", "total"] + [f"rank {k}" for k in range(width)]
    rows = [[v.pattern, str(v.total_classes)]
            + [str(c) for c in v.rank_histogram]
            + ["--"] * (width - len(v.rank_histogram)) for v in verdicts]
    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    lines = ["  ".join(cell.rjust(w) if c else cell.ljust(w)
                       for c, (cell, w) in enumerate(zip(r, widths))).rstrip()
             for r in [header] + rows]
    return "\n".join(lines) + "\n"
