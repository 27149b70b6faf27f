"""Exhaustive small-case answers used to cross-check everything else.

Colorings are enumerated canonically: colors appear in first-use order, so
each proper coloring is produced once per color-relabeling class. The
avoidance search prunes the moment a placed color completes a rainbow path
of the forbidden length through the new edge, which is both sound (any bad
path is caught when its last edge lands) and fast (conflicts die early).

The extremal scan walks edge counts downward over all edge subsets of the
complete graph, so its verdict is exact. Two result-preserving shortcuts
keep it honest but quick: infeasibility survives adding edges, so minimal
infeasible cores learned along the way discard supersets wholesale, and
isomorphic skeletons share one verdict through a canonical form. Vertex
counts above the guard are refused rather than attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Optional

from .errors import GuardError, PreconditionError
from .graphs import ColoredGraph, GraphSkeleton, complete_graph

COLORING_EDGE_GUARD = 15
EXSTAR_VERTEX_GUARD = 7


def _colorings(n: int, edges: tuple, avoid: Optional[int]) -> Iterator[tuple]:
    m = len(edges)
    at = [set() for _ in range(n)]
    adj: list = [[] for _ in range(n)]
    chosen = [0] * m

    def through(u, v, c) -> bool:
        # a rainbow path with `avoid` edges running through the edge u-v?
        used_v = {u, v}
        used_c = {c}

        def right(y, rem):
            if rem == 0:
                return True
            for (w, d) in adj[y]:
                if w in used_v or d in used_c:
                    continue
                used_v.add(w)
                used_c.add(d)
                hit = right(w, rem - 1)
                used_v.discard(w)
                used_c.discard(d)
                if hit:
                    return True
            return False

        def left(x, rem):
            if right(v, rem):
                return True
            if rem == 0:
                return False
            for (w, d) in adj[x]:
                if w in used_v or d in used_c:
                    continue
                used_v.add(w)
                used_c.add(d)
                hit = left(w, rem - 1)
                used_v.discard(w)
                used_c.discard(d)
                if hit:
                    return True
            return False

        return left(u, avoid - 1)

    def rec(i, fresh):
        if i == m:
            yield tuple(chosen)
            return
        u, v = edges[i]
        for c in range(fresh + 1):
            if c in at[u] or c in at[v]:
                continue
            at[u].add(c)
            at[v].add(c)
            adj[u].append((v, c))
            adj[v].append((u, c))
            chosen[i] = c
            if avoid is None or not through(u, v, c):
                yield from rec(i + 1, fresh + (1 if c == fresh else 0))
            at[u].discard(c)
            at[v].discard(c)
            adj[u].pop()
            adj[v].pop()

    yield from rec(0, 0)


def proper_colorings(skel: GraphSkeleton, avoid: Optional[int] = None,
                     guard: int = COLORING_EDGE_GUARD) -> Iterator[ColoredGraph]:
    """All canonical proper colorings of skel, optionally only those with
    no rainbow path of `avoid` edges."""
    if avoid is not None and avoid < 1:
        raise PreconditionError("the forbidden path length must be >= 1 edge")
    if skel.m > guard:
        raise GuardError("colorings",
                         f"{skel.m} edges exceed the exhaustive guard {guard}")
    for cs in _colorings(skel.n, skel.edges, avoid):
        yield skel.with_colors(cs)


def count_proper_colorings(skel: GraphSkeleton,
                           guard: int = COLORING_EDGE_GUARD) -> int:
    if skel.m > guard:
        raise GuardError("colorings",
                         f"{skel.m} edges exceed the exhaustive guard {guard}")
    return sum(1 for _ in _colorings(skel.n, skel.edges, None))


def coloring_avoiding(skel: GraphSkeleton, path_edges: int,
                      guard: int = COLORING_EDGE_GUARD) -> Optional[ColoredGraph]:
    """First canonical proper coloring without a rainbow path of the given
    edge count, or None when every proper coloring has one."""
    return next(proper_colorings(skel, avoid=path_edges, guard=guard), None)


def _canon_key(perms, edges) -> tuple:
    best = None
    for p in perms:
        mapped = tuple(sorted(
            (p[u], p[v]) if p[u] < p[v] else (p[v], p[u]) for (u, v) in edges))
        if best is None or mapped < best:
            best = mapped
    return best


def _minimize_core(n: int, edges: frozenset, path_edges: int) -> frozenset:
    core = sorted(edges)
    i = 0
    while i < len(core):
        trial = core[:i] + core[i + 1:]
        skel = GraphSkeleton(n, tuple(trial))
        if coloring_avoiding(skel, path_edges, guard=skel.m) is None:
            core = trial
        else:
            i += 1
    return frozenset(core)


@dataclass(frozen=True)
class ExstarResult:
    n: int
    path_edges: int
    value: int
    witness: ColoredGraph  # an extremal coloring with no forbidden path


def exstar_small(n: int, path_edges: int,
                 guard: int = EXSTAR_VERTEX_GUARD) -> ExstarResult:
    """Exact maximum edge count of an n-vertex graph that admits a proper
    coloring without a rainbow path of `path_edges` edges."""
    if n < 0:
        raise PreconditionError("vertex count must be nonnegative")
    if path_edges < 1:
        raise PreconditionError("the forbidden path length must be >= 1 edge")
    if n > guard:
        raise GuardError("exstar",
                         f"n={n} exceeds the exhaustive guard {guard}")
    if path_edges == 1:
        empty = ColoredGraph.from_edges(n, [], num_colors=0)
        return ExstarResult(n, path_edges, 0, empty)
    if path_edges == 2:
        # one rainbow-free shape only: a matching (any two touching edges
        # get distinct colors under a proper coloring, which is a rainbow
        # two-edge path already)
        pairs = [(2 * i, 2 * i + 1, i) for i in range(n // 2)]
        witness = ColoredGraph.from_edges(n, pairs, num_colors=max(1, n // 2))
        return ExstarResult(n, path_edges, n // 2, witness)

    all_edges = complete_graph(n).edges
    perms = list(permutations(range(n)))
    cores: list = []
    settled: set = set()
    for m in range(len(all_edges), -1, -1):
        for combo in combinations(all_edges, m):
            es = frozenset(combo)
            if any(core <= es for core in cores):
                continue
            key = _canon_key(perms, combo)
            if key in settled:
                continue
            skel = GraphSkeleton(n, combo)
            colored = coloring_avoiding(skel, path_edges, guard=skel.m)
            if colored is not None:
                return ExstarResult(n, path_edges, m, colored)
            settled.add(key)
            cores.append(_minimize_core(n, es, path_edges))
    raise AssertionError("an edgeless graph avoids every path")


def erdos_gallai_bound(n: int, path_edges: int) -> Fraction:
    """Classical edge ceiling for graphs with no path of `path_edges` edges
    (colorings aside)."""
    if path_edges < 1:
        raise PreconditionError("the forbidden path length must be >= 1 edge")
    return Fraction((path_edges - 1) * n, 2)


def packing_edge_count(n: int, path_edges: int) -> int:
    size = path_edges
    rest = n % size
    return (size * (size - 1) // 2) * (n // size) + rest * (rest - 1) // 2


def clique_packing(n: int, path_edges: int) -> ColoredGraph:
    """Disjoint cliques on `path_edges` vertices (plus a remainder clique),
    properly colored. Components are too small to hold the forbidden path,
    rainbow or not, so this witnesses the classical lower bound."""
    if path_edges < 1:
        raise PreconditionError("the forbidden path length must be >= 1 edge")
    size = path_edges
    edges = []
    palette = 1
    start = 0
    while start < n:
        block = min(size, n - start)
        for u in range(block):
            for v in range(u + 1, block):
                edges.append((start + u, start + v, (u + v) % block))
        if block >= 2:
            palette = max(palette, block)
        start += block
    return ColoredGraph.from_edges(n, edges, num_colors=palette)
