"""Exact rainbow path search.

All searches are depth-first over simple paths with a used-vertex bitmask and
a used-color bitmask (Python ints, so palettes of any size work; nothing
special happens at 128 colors). Neighbor lists are visited in ascending
order, which makes every result deterministic.

longest_rainbow_path proves optimality in two phases: an aggressively pruned
pass establishes the exact length, then a second ordered pass retrieves the
lexicographically least witness of that length (the first one found in
ascending DFS order; since the reverse of a path is also a path, that
sequence necessarily starts at its smaller endpoint).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import GuardError, PathError, PreconditionError
from .graphs import ColoredGraph


@dataclass(frozen=True)
class RainbowPath:
    """A path v_0..v_l with its edge colors c_1..c_l (colors[i] belongs to
    the edge vertices[i]..vertices[i+1])."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise PathError("a path has at least one vertex")
        if len(self.colors) != len(self.vertices) - 1:
            raise PathError("need exactly one color per edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise PathError("repeated vertex")

    @property
    def length(self) -> int:
        return len(self.colors)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == len(self.colors)

    def reversed(self) -> "RainbowPath":
        return RainbowPath(self.vertices[::-1], self.colors[::-1])

    def canonical(self) -> "RainbowPath":
        """Orientation with the smaller endpoint first."""
        if self.length >= 1 and self.vertices[0] > self.vertices[-1]:
            return self.reversed()
        return self

    def index_of(self, v: int) -> int:
        return self.vertices.index(v)


def path_from_vertices(g: ColoredGraph, vertices: Sequence[int]) -> RainbowPath:
    """Build a RainbowPath from a vertex sequence, reading colors off g.

    Raises PathError if the sequence is not a simple path of g.
    """
    vs = tuple(vertices)
    if not vs:
        raise PathError("empty vertex sequence")
    if len(set(vs)) != len(vs):
        raise PathError(f"repeated vertex in {vs}")
    for v in vs:
        if not (0 <= v < g.n):
            raise PathError(f"vertex {v} not in graph")
    colors = []
    for u, v in zip(vs, vs[1:]):
        if not g.has_edge(u, v):
            raise PathError(f"missing edge ({u},{v})")
        colors.append(g.color_of(u, v))
    return RainbowPath(vs, tuple(colors))


def is_rainbow(g: ColoredGraph, path) -> bool:
    """True iff `path` is a path of g with pairwise distinct edge colors.

    `path` may be a RainbowPath or a bare vertex sequence. A sequence that is
    not a path at all (repeated vertex, missing edge, wrong recorded color)
    raises PathError; that situation is an error, not merely non-rainbow.
    """
    if isinstance(path, RainbowPath):
        rebuilt = path_from_vertices(g, path.vertices)
        if rebuilt.colors != path.colors:
            raise PathError("recorded colors disagree with the graph")
    else:
        rebuilt = path_from_vertices(g, path)
    return rebuilt.is_rainbow()


@dataclass(frozen=True)
class SearchOutcome:
    best: Optional[RainbowPath]
    proven_optimal: bool
    nodes_expanded: int
    budget_exhausted: bool


@dataclass(frozen=True)
class ExistsOutcome:
    """found is True/False when decided, None when the budget ran out."""

    found: Optional[bool]
    witness: Optional[RainbowPath]
    nodes_expanded: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: Optional[int]):
        self.left = budget

    def tick(self) -> bool:
        if self.left is None:
            return True
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _neighbor_table(g: ColoredGraph):
    return [tuple((w, 1 << w, 1 << c) for (w, c) in g.neighbors(v))
            for v in range(g.n)]


def longest_rainbow_path(g: ColoredGraph, budget: Optional[int] = None) -> SearchOutcome:
    """Exact longest rainbow path with deterministic tie-breaking.

    budget bounds the total number of DFS node expansions; when it runs out
    the best path found so far is returned with proven_optimal=False.
    """
    if g.n == 0:
        return SearchOutcome(None, True, 0, False)
    nbrs = _neighbor_table(g)
    color_count = len(g.used_colors())
    bud = _Budget(budget)
    nodes = 0
    best_len = 0
    best_seq: list[int] = [0]
    cur: list[int] = []
    exhausted = False

    def walk(v: int, vmask: int, cmask: int, depth: int, free_v: int, free_c: int) -> bool:
        nonlocal nodes, best_len, best_seq
        nodes += 1
        if not bud.tick():
            return False
        if depth > best_len:
            best_len = depth
            best_seq = cur.copy()
        cap = free_v if free_v < free_c else free_c
        if depth + cap <= best_len:
            return True
        for (w, wbit, cbit) in nbrs[v]:
            if (vmask & wbit) or (cmask & cbit):
                continue
            cur.append(w)
            ok = walk(w, vmask | wbit, cmask | cbit, depth + 1, free_v - 1, free_c - 1)
            cur.pop()
            if not ok:
                return False
        return True

    for s in range(g.n):
        cur = [s]
        if not walk(s, 1 << s, 0, 0, g.n - 1, color_count):
            exhausted = True
            break

    if exhausted:
        best = path_from_vertices(g, best_seq).canonical()
        return SearchOutcome(best, False, nodes, True)

    # retrieval pass: first path of the proven length in ascending DFS order
    target = best_len
    found: Optional[list[int]] = None

    def retrieve(v: int, vmask: int, cmask: int, depth: int, free_v: int, free_c: int) -> None:
        nonlocal nodes, found
        if found is not None:
            return
        nodes += 1
        if depth == target:
            found = cur.copy()
            return
        cap = free_v if free_v < free_c else free_c
        if depth + cap < target:
            return
        for (w, wbit, cbit) in nbrs[v]:
            if (vmask & wbit) or (cmask & cbit):
                continue
            cur.append(w)
            retrieve(w, vmask | wbit, cmask | cbit, depth + 1, free_v - 1, free_c - 1)
            cur.pop()
            if found is not None:
                return

    for s in range(g.n):
        cur = [s]
        retrieve(s, 1 << s, 0, 0, g.n - 1, color_count)
        if found is not None:
            break
    assert found is not None
    best = path_from_vertices(g, found)
    assert best.is_rainbow() and best.vertices[0] <= best.vertices[-1]
    return SearchOutcome(best, True, nodes, False)


def has_rainbow_path(g: ColoredGraph, length: int,
                     budget: Optional[int] = None) -> ExistsOutcome:
    """Does g contain a rainbow path with exactly `length` edges?

    Returns found=None (unknown) if the budget is exhausted first; a silent
    False is never produced under budget pressure.
    """
    if length < 0:
        raise PreconditionError("path length must be >= 0")
    if length == 0:
        if g.n == 0:
            return ExistsOutcome(False, None, 0)
        return ExistsOutcome(True, RainbowPath((0,), ()), 0)
    nbrs = _neighbor_table(g)
    color_count = len(g.used_colors())
    if length > color_count or length > g.n - 1:
        return ExistsOutcome(False, None, 0)
    bud = _Budget(budget)
    nodes = 0
    cur: list[int] = []
    witness: Optional[list[int]] = None
    exhausted = False

    def walk(v: int, vmask: int, cmask: int, depth: int, free_v: int, free_c: int) -> bool:
        nonlocal nodes, witness, exhausted
        nodes += 1
        if not bud.tick():
            exhausted = True
            return False
        if depth == length:
            witness = cur.copy()
            return False
        cap = free_v if free_v < free_c else free_c
        if depth + cap < length:
            return True
        for (w, wbit, cbit) in nbrs[v]:
            if (vmask & wbit) or (cmask & cbit):
                continue
            cur.append(w)
            ok = walk(w, vmask | wbit, cmask | cbit, depth + 1, free_v - 1, free_c - 1)
            cur.pop()
            if not ok:
                return False
        return True

    for s in range(g.n):
        cur = [s]
        if not walk(s, 1 << s, 0, 0, g.n - 1, color_count):
            break
    if witness is not None:
        return ExistsOutcome(True, path_from_vertices(g, witness).canonical(), nodes)
    if exhausted:
        return ExistsOutcome(None, None, nodes)
    return ExistsOutcome(False, None, nodes)


# -- spanning-path machinery (terminal and connection oracles) ---------------

def _span_prep(g: ColoredGraph, vset):
    vs = sorted(set(vset))
    for v in vs:
        if not (0 <= v < g.n):
            raise PathError(f"vertex {v} not in graph")
    inset = set(vs)
    full = 0
    for v in vs:
        full |= 1 << v
    adj = {v: tuple((w, 1 << w, 1 << c) for (w, c) in g.neighbors(v) if w in inset)
           for v in vs}
    adj_mask = {v: sum(wbit for (_, wbit, _) in adj[v]) for v in vs}
    return vs, full, adj, adj_mask


def _span_iter(v, vmask, cmask, full, adj, adj_mask, cur, target=None):
    """Yield every spanning rainbow path continuation of cur (as vertex lists)."""
    remaining = full & ~vmask
    if remaining == 0:
        if target is None or v == target:
            yield cur.copy()
        return
    # a remaining vertex with no way in is a dead end; two vertices reachable
    # only through v cannot both be next
    cur_bit = 1 << v
    forced = 0
    rem = remaining
    while rem:
        xbit = rem & -rem
        rem ^= xbit
        x = xbit.bit_length() - 1
        live = adj_mask[x] & (remaining | cur_bit)
        if live == 0:
            return
        if live == cur_bit:
            forced += 1
            if forced > 1:
                return
    for (w, wbit, cbit) in adj[v]:
        if (vmask & wbit) or (cmask & cbit):
            continue
        if target is not None and w == target and remaining != wbit:
            continue
        cur.append(w)
        yield from _span_iter(w, vmask | wbit, cmask | cbit, full, adj, adj_mask,
                              cur, target)
        cur.pop()


def spanning_rainbow_path_from(g: ColoredGraph, vset, start: int) -> Optional[RainbowPath]:
    """Some rainbow path whose vertex set is exactly `vset`, starting at
    `start`; None if there is none. Early-exits on the first hit."""
    vs, full, adj, adj_mask = _span_prep(g, vset)
    if start not in vs:
        raise PathError(f"start {start} not in vertex set")
    if len(vs) == 1:
        return RainbowPath((start,), ())
    seq = next(_span_iter(start, 1 << start, 0, full, adj, adj_mask, [start]), None)
    return path_from_vertices(g, seq) if seq is not None else None


def spanning_rainbow_path_between(g: ColoredGraph, vset, u: int, w: int) -> Optional[RainbowPath]:
    """Some rainbow path with vertex set exactly `vset` and endpoints u and w."""
    vs, full, adj, adj_mask = _span_prep(g, vset)
    if u not in vs or w not in vs or u == w:
        raise PathError("endpoints must be distinct members of the vertex set")
    seq = next(_span_iter(u, 1 << u, 0, full, adj, adj_mask, [u], target=w), None)
    return path_from_vertices(g, seq) if seq is not None else None


def enumerate_rainbow_paths_on(g: ColoredGraph, vset, guard: int = 16) -> Iterator[RainbowPath]:
    """All rainbow paths whose vertex set is exactly `vset`, one orientation
    each (smaller endpoint first), in ascending DFS order.

    Refuses vertex sets larger than `guard` (the stream can be astronomically
    long); raise the guard consciously if you mean it.
    """
    vs, full, adj, adj_mask = _span_prep(g, vset)
    if len(vs) > guard:
        raise GuardError(f"vertex set of size {len(vs)} exceeds guard {guard}")
    if not vs:
        return
    if len(vs) == 1:
        yield RainbowPath((vs[0],), ())
        return
    for s in vs:
        for seq in _span_iter(s, 1 << s, 0, full, adj, adj_mask, [s]):
            if seq[0] < seq[-1]:
                yield path_from_vertices(g, seq)
