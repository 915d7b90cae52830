"""Plane subcubic patterns, their frontier, and equivalence of frontier colorings.

A pattern is a connected simple graph whose outer vertices may carry pending
half-edges.  The half-edges (the *frontier*) are listed in the cyclic order in
which they leave the outer face; frontier colorings are indexed by position in
that list.  Two frontier colorings are equivalent when one is obtained from the
other by a permutation of the colors {1, 2, 3} combined with a symmetry of the
pattern.
"""
from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

COLORS = (1, 2, 3)
COLOR_PERMUTATIONS = tuple(itertools.permutations(COLORS))

Coloring = tuple  # tuple[int, ...] over {1, 2, 3}
Permutation = tuple  # tuple[int, ...], image of each frontier index


class PatternError(ValueError):
    """Base class for malformed pattern descriptions."""


class PatternSyntaxError(PatternError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class PatternValidationError(PatternError):
    pass


@dataclass(frozen=True)
class Pattern:
    """A subcubic plane pattern.

    ``frontier[k]`` is the vertex carrying the half-edge at frontier index ``k``.
    ``symmetries[s][k]`` is the image of frontier index ``k`` under symmetry ``s``.
    Instances are validated on construction.
    """

    n_vertices: int
    internal_edges: tuple[tuple[int, int], ...]
    frontier: tuple[int, ...]
    symmetries: tuple[Permutation, ...] = field(default=())
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "internal_edges",
                           tuple(tuple(e) for e in self.internal_edges))
        object.__setattr__(self, "frontier", tuple(self.frontier))
        syms = self.symmetries
        if not syms:
            syms = (tuple(range(len(self.frontier))),)
        object.__setattr__(self, "symmetries",
                           tuple(sorted(set(tuple(s) for s in syms))))
        validate(self)

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def n_frontier(self) -> int:
        return len(self.frontier)

    @property
    def n_edges(self) -> int:
        """Number of edge ids: internal edges plus half-edges."""
        return len(self.internal_edges) + len(self.frontier)

    def frontier_edge_id(self, k: int) -> int:
        return len(self.internal_edges) + k

    def degree(self, v: int) -> int:
        internal = sum(v in e for e in self.internal_edges)
        return internal + self.frontier.count(v)

    def uses_reflection(self) -> bool:
        """True if some symmetry reverses the cyclic frontier order."""
        return any(_dihedral_kind(s) == "reflection" for s in self.symmetries
                   if len(s) > 2)

    def to_text(self) -> str:
        lines = [f"pattern {self.name or 'unnamed'}", f"vertices {self.n_vertices}"]
        lines += [f"edge {u} {v}" for u, v in self.internal_edges]
        lines += [f"half {v}" for v in self.frontier]
        identity = tuple(range(self.n_frontier))
        lines += ["sym " + " ".join(map(str, s)) for s in self.symmetries
                  if s != identity]
        return "\n".join(lines) + "\n"


def _dihedral_kind(perm: Sequence[int]) -> str | None:
    """Classify ``perm`` as a rotation or reflection of the cycle 0..m-1."""
    m = len(perm)
    if m == 0:
        return "rotation"
    shift = (perm[0] - 0) % m
    if all(perm[k] == (k + shift) % m for k in range(m)):
        return "rotation"
    if all(perm[k] == (perm[0] - k) % m for k in range(m)):
        return "reflection"
    return None


def _compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    # (a o b)(k) = a(b(k))
    return tuple(a[b[k]] for k in range(len(b)))


def _inverse(a: Sequence[int]) -> Permutation:
    inv = [0] * len(a)
    for k, image in enumerate(a):
        inv[image] = k
    return tuple(inv)


def induced_by_pattern_map(p: Pattern, perm: Sequence[int]) -> dict[int, int] | None:
    """Find a degree-preserving automorphism of ``p`` inducing ``perm`` on the frontier.

    Returns the vertex map, or None when no graph automorphism sends the
    half-edge at index ``k`` to the half-edge at index ``perm[k]``.
    """
    adj = {v: set() for v in p.vertices}
    for u, v in p.internal_edges:
        adj[u].add(v)
        adj[v].add(u)
    has_half = set(p.frontier)

    fixed = {}
    for k, image in enumerate(perm):
        u, w = p.frontier[k], p.frontier[image]
        if fixed.setdefault(u, w) != w:
            return None
    order = sorted(p.vertices, key=lambda v: (v not in fixed, v))

    def extend(i: int, phi: dict[int, int], used: set[int]):
        if i == len(order):
            return dict(phi)
        v = order[i]
        candidates = [fixed[v]] if v in fixed else [w for w in p.vertices if w not in used]
        for w in candidates:
            if w in used or len(adj[w]) != len(adj[v]) or (w in has_half) != (v in has_half):
                continue
            if (v in fixed) != (w in fixed.values()):
                continue
            if any(u in phi and phi[u] not in adj[w] for u in adj[v]):
                continue
            phi[v] = w
            used.add(w)
            found = extend(i + 1, phi, used)
            if found is not None:
                return found
            del phi[v]
            used.discard(w)
        return None

    return extend(0, {}, set())


def frontier_symmetries(p: Pattern) -> list[Permutation]:
    """All dihedral frontier permutations induced by an automorphism of ``p``.

    Used to cross-check a supplied symmetry group; with m half-edges only the
    2m rotations and reflections of the frontier cycle are candidates.
    """
    m = p.n_frontier
    candidates = set()
    for shift in range(max(m, 1)):
        candidates.add(tuple((k + shift) % m for k in range(m)))
        candidates.add(tuple((shift - k) % m for k in range(m)))
    return sorted(c for c in candidates if induced_by_pattern_map(p, c) is not None)


def validate(p: Pattern) -> None:
    """Raise PatternValidationError if ``p`` breaks any pattern invariant."""
    n = p.n_vertices
    if n < 1:
        raise PatternValidationError("pattern needs at least one vertex")
    seen = set()
    for u, v in p.internal_edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise PatternValidationError(f"edge {u} {v}: vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise PatternValidationError(f"edge {u} {v}: self-loops are not allowed")
        key = frozenset((u, v))
        if key in seen:
            raise PatternValidationError(f"edge {u} {v}: multiple edges are not allowed")
        seen.add(key)
    for v in p.frontier:
        if not 0 <= v < n:
            raise PatternValidationError(f"half {v}: vertex out of range 0..{n - 1}")
    for v in p.vertices:
        if p.frontier.count(v) > 1:
            raise PatternValidationError(
                f"vertex {v} carries {p.frontier.count(v)} half-edges; at most one allowed")
        d = p.degree(v)
        if d not in (2, 3):
            raise PatternValidationError(f"vertex {v} has degree {d}; degree must be 2 or 3")

    adj = {v: set() for v in p.vertices}
    for u, v in p.internal_edges:
        adj[u].add(v)
        adj[v].add(u)
    reached, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != n:
        raise PatternValidationError("internal graph is not connected")

    _validate_group(p)


def _validate_group(p: Pattern) -> None:
    m = p.n_frontier
    identity = tuple(range(m))
    group = set(p.symmetries)
    for s in p.symmetries:
        if len(s) != m or sorted(s) != list(identity):
            raise PatternValidationError(
                f"symmetry {list(s)} is not a permutation of frontier indices 0..{m - 1}")
    if identity not in group:
        raise PatternValidationError("symmetry group must contain the identity")
    for s in p.symmetries:
        if _inverse(s) not in group:
            raise PatternValidationError(f"symmetry group not closed under inverse: {list(s)}")
        for t in p.symmetries:
            if _compose(s, t) not in group:
                raise PatternValidationError(
                    f"symmetry group not closed under composition: {list(s)} o {list(t)}")
    for s in p.symmetries:
        if _dihedral_kind(s) is None:
            raise PatternValidationError(
                f"symmetry {list(s)} does not preserve the cyclic frontier order")
        if induced_by_pattern_map(p, s) is None:
            raise PatternValidationError(
                f"symmetry {list(s)} is not induced by any degree-preserving map of the pattern")


_TOKEN = re.compile(r"\S+")


def parse_pattern(text: str) -> Pattern:
    """Parse the line-oriented pattern format.

    Recognised lines: ``pattern <name>``, ``vertices <n>``, ``edge <u> <v>``,
    ``half <v>`` (cyclic frontier order) and ``sym <i0> ... <i_m-1>``.  ``#``
    starts a comment.  The identity symmetry is implied.
    """
    name = None
    n_vertices = None
    edges, halves, syms = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword, col = tokens[0]
        args = tokens[1:]

        def ints(expected=None):
            if expected is not None and len(args) != expected:
                raise PatternSyntaxError(
                    f"'{keyword}' expects {expected} argument(s), got {len(args)}", lineno, col)
            out = []
            for tok, c in args:
                try:
                    out.append(int(tok))
                except ValueError:
                    raise PatternSyntaxError(f"expected an integer, got {tok!r}", lineno, c) from None
            return out

        if keyword == "pattern":
            if len(args) != 1:
                raise PatternSyntaxError("'pattern' expects a single name", lineno, col)
            name = args[0][0]
        elif keyword == "vertices":
            if n_vertices is not None:
                raise PatternSyntaxError("duplicate 'vertices' line", lineno, col)
            (n_vertices,) = ints(1)
        elif keyword == "edge":
            edges.append(tuple(ints(2)))
        elif keyword == "half":
            halves.append(ints(1)[0])
        elif keyword == "sym":
            if not args:
                raise PatternSyntaxError("'sym' needs the image of every frontier index", lineno, col)
            syms.append((tuple(ints()), lineno, col))
        else:
            raise PatternSyntaxError(f"unknown keyword {keyword!r}", lineno, col)

    if n_vertices is None:
        raise PatternSyntaxError("missing 'vertices' line", max(1, len(text.splitlines())))
    m = len(halves)
    for perm, lineno, col in syms:
        if len(perm) != m:
            raise PatternSyntaxError(
                f"'sym' lists {len(perm)} images but the frontier has {m} half-edges", lineno, col)
    identity = tuple(range(m))
    return Pattern(n_vertices, tuple(edges), tuple(halves),
                   (identity,) + tuple(s for s, _, _ in syms), name)


def load_pattern(path) -> Pattern:
    with open(path, encoding="utf-8") as fh:
        return parse_pattern(fh.read())


@functools.lru_cache(maxsize=None)
def line_graph(p: Pattern) -> tuple[frozenset[int], ...]:
    """Adjacency of the line graph of ``p``.

    Edge ids: internal edges in input order, then half-edges in frontier order.
    """
    incident = {v: [] for v in p.vertices}
    for eid, (u, v) in enumerate(p.internal_edges):
        incident[u].append(eid)
        incident[v].append(eid)
    for k, v in enumerate(p.frontier):
        incident[v].append(p.frontier_edge_id(k))
    adjacency = [set() for _ in range(p.n_edges)]
    for eids in incident.values():
        for a, b in itertools.permutations(eids, 2):
            adjacency[a].add(b)
    return tuple(frozenset(s) for s in adjacency)


def apply_symmetry(gamma: Sequence[int], perm: Sequence[int]) -> Coloring:
    """Move the color at frontier index k to index ``perm[k]``."""
    out = [0] * len(gamma)
    for k, image in enumerate(perm):
        out[image] = gamma[k]
    return tuple(out)


def apply_color_permutation(gamma: Sequence[int], sigma: Sequence[int]) -> Coloring:
    """Recolor with ``sigma``, where ``sigma[c - 1]`` is the new name of color c."""
    return tuple(sigma[c - 1] for c in gamma)


def _normalize_colors(gamma: Sequence[int]) -> Coloring:
    # Renaming colors by first occurrence gives the lexicographically least recoloring.
    names = {}
    return tuple(names.setdefault(c, len(names) + 1) for c in gamma)


def _check_coloring(p: Pattern, gamma: Sequence[int]) -> None:
    if len(gamma) != p.n_frontier:
        raise ValueError(
            f"frontier coloring has length {len(gamma)}, pattern has {p.n_frontier} half-edges")
    if any(c not in COLORS for c in gamma):
        raise ValueError(f"frontier coloring {tuple(gamma)} uses colors outside 1..3")


def canonical_representative(p: Pattern, gamma: Sequence[int]) -> Coloring:
    """Lexicographically least coloring equivalent to ``gamma``."""
    _check_coloring(p, gamma)
    return min(_normalize_colors(apply_symmetry(gamma, s)) for s in p.symmetries)


def all_frontier_colorings(p: Pattern) -> Iterable[Coloring]:
    return itertools.product(COLORS, repeat=p.n_frontier)


def representative_map(p: Pattern) -> dict[Coloring, Coloring]:
    """Map every frontier coloring to its class representative."""
    return {g: canonical_representative(p, g) for g in all_frontier_colorings(p)}


def enumerate_class_representatives(p: Pattern) -> list[Coloring]:
    return sorted(set(representative_map(p).values()))


def orbit_sizes(p: Pattern) -> dict[Coloring, int]:
    sizes: dict[Coloring, int] = {}
    for rep in representative_map(p).values():
        sizes[rep] = sizes.get(rep, 0) + 1
    return dict(sorted(sizes.items()))
