"""Terminal vertices of a longest rainbow path, found two ways.

A vertex is terminal when some rainbow path using exactly the vertices of
the fixed path P* (and the same number of edges) ends there. The oracle
finds terminals by exhaustive search. The rule engine re-derives them from
the chord structure alone by replaying rotation arguments; every firing
carries an explicit witness path that is re-validated from scratch, so an
unsound rule cannot slip through silently (it raises WitnessError).

Rule families, in profile.py vocabulary:

  endpoints      v_0 and v_k, witnessed by P* itself
  far_jump       far edge v_0 v_k with a fresh color: cut the cycle
                 anywhere, every vertex becomes terminal
  fresh_start    fresh chord v_0 v_i frees v_{i-1}
  fresh_end      fresh chord v_k v_j frees v_{j+1}
  nice_start     chord v_0 v_i whose old color is freed by a fresh chord
                 at the far end; lands on v_{i-1} or v_{i+1} depending on
                 which side of i the matching path edge sits
  nice_end       mirror image
  window_start   fresh chord v_0 v_i strictly inside the pivot window,
                 rerouted through a low pivot of a different color: v_{i+1}
  window_end     mirror image: v_{i-1}

The nice rules go silent when the matching path edge sits below the chord
and the chord is the far edge itself (start side i = k, end side i = 0):
the rotation would need the far vertex twice and there is no witness. The
window rules go silent at i = a (start) and i = b (end), where the fresh
rules already produce the claimed terminal.

On top of the terminal set sits an auxiliary graph: two terminals are
adjacent when one rainbow path on V(P*) has both as its endpoints. The
rule flavor connects witness endpoints and jump-rotations of witnesses;
the oracle flavor searches every terminal pair. A maximum matching of the
auxiliary graph drives the vertex-deletion step of the edge-count bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import PathError, WitnessError
from .graphs import ColoredGraph
from .profile import PathProfile, compute_profile
from .search import (RainbowPath, is_rainbow, path_from_vertices,
                     spanning_rainbow_path_between,
                     spanning_rainbow_path_from)


@dataclass(frozen=True)
class RuleFire:
    rule: str
    anchor: tuple          # ("start"|"end"|"far", chord position) or ("path", 0)
    terminals: tuple       # vertex ids this firing certifies
    witness: RainbowPath


@dataclass(frozen=True)
class TerminalReport:
    path: RainbowPath
    fires: tuple
    rule_terminals: frozenset

    def terminals_by_rule(self) -> dict:
        out: dict = {}
        for f in self.fires:
            out.setdefault(f.rule, set()).update(f.terminals)
        return {rule: tuple(sorted(vs)) for rule, vs in sorted(out.items())}


def _checked_fire(g: ColoredGraph, pstar: RainbowPath, rule: str,
                  anchor: tuple, idx_seq, terminal_positions) -> RuleFire:
    """Build a witness from path positions and refuse anything unsound."""
    verts = pstar.vertices
    vs = [verts[i] for i in idx_seq]
    try:
        w = path_from_vertices(g, vs)
    except PathError as e:
        raise WitnessError(rule, f"witness is not a path: {e}")
    if not is_rainbow(g, w):
        raise WitnessError(rule, "witness repeats a color")
    if set(vs) != set(verts):
        raise WitnessError(rule, "witness does not span the path vertices")
    claimed = tuple(verts[i] for i in terminal_positions)
    if not set(claimed) <= {vs[0], vs[-1]}:
        raise WitnessError(rule, "claimed terminal is not a witness endpoint")
    return RuleFire(rule=rule, anchor=anchor, terminals=claimed, witness=w)


def terminal_rules(g: ColoredGraph, pstar: RainbowPath,
                   prof: Optional[PathProfile] = None) -> TerminalReport:
    """Replay the rotation rules on pstar and report every firing."""
    if prof is None:
        prof = compute_profile(g, pstar)
    k = prof.k
    colors = pstar.colors
    fires = [RuleFire("endpoints", ("path", 0),
                      (pstar.vertices[0], pstar.vertices[-1]), pstar)]

    def fire(rule, anchor, idx_seq, terminal_positions):
        fires.append(_checked_fire(g, pstar, rule, anchor,
                                   idx_seq, terminal_positions))

    if prof.far_edge_is_new:
        for i in range(k):
            fire("far_jump", ("far", k),
                 list(range(i, -1, -1)) + list(range(k, i, -1)),
                 (i, i + 1))

    for i in sorted(prof.start_chords):
        c = prof.start_chords[i]
        if c not in prof.start_new:
            continue
        fire("fresh_start", ("start", i),
             list(range(i - 1, -1, -1)) + list(range(i, k + 1)),
             (i - 1, k))

    for j in sorted(prof.end_chords):
        c = prof.end_chords[j]
        if c not in prof.end_new:
            continue
        fire("fresh_end", ("end", j),
             list(range(j + 1, k + 1)) + list(range(j, -1, -1)),
             (j + 1, 0))

    for i in sorted(prof.start_chords):
        c = prof.start_chords[i]
        if c not in prof.start_nice:
            continue
        j = colors.index(c)  # the fresh end chord sits at position j
        if j >= i:
            fire("nice_start", ("start", i),
                 list(range(i - 1, -1, -1)) + list(range(i, j + 1))
                 + list(range(k, j, -1)),
                 (i - 1, j + 1))
        elif i < k:
            fire("nice_start", ("start", i),
                 list(range(j + 1, i + 1)) + list(range(0, j + 1))
                 + list(range(k, i, -1)),
                 (j + 1, i + 1))

    for p in sorted(prof.end_chords):
        c = prof.end_chords[p]
        if c not in prof.end_nice:
            continue
        q = colors.index(c) + 1  # the fresh start chord sits at position q
        if q <= p:
            fire("nice_end", ("end", p),
                 list(range(p + 1, k + 1)) + list(range(p, q - 1, -1))
                 + list(range(0, q)),
                 (p + 1, q - 1))
        elif p > 0:
            fire("nice_end", ("end", p),
                 list(range(q - 1, p - 1, -1)) + list(range(k, q - 1, -1))
                 + list(range(0, p)),
                 (q - 1, p - 1))

    lo_outer, lo = prof.win_lo_outer, prof.win_lo
    hi, hi_outer = prof.win_hi, prof.win_hi_outer
    if lo is not None and hi is not None:
        for i in sorted(prof.start_chords):
            c = prof.start_chords[i]
            if c not in prof.start_new or not (lo < i <= hi):
                continue
            low = lo_outer if prof.end_chords[lo_outer] != c else lo
            fire("window_start", ("start", i),
                 list(range(low + 1, i + 1)) + list(range(0, low + 1))
                 + list(range(k, i, -1)),
                 (low + 1, i + 1))
        for p in sorted(prof.end_chords):
            c = prof.end_chords[p]
            if c not in prof.end_new or not (lo <= p < hi):
                continue
            high = hi_outer if prof.start_chords[hi_outer] != c else hi
            fire("window_end", ("end", p),
                 list(range(high - 1, p - 1, -1)) + list(range(k, high - 1, -1))
                 + list(range(0, p)),
                 (high - 1, p - 1))

    found = frozenset(v for f in fires for v in f.terminals)
    return TerminalReport(path=pstar, fires=tuple(fires), rule_terminals=found)


def terminal_oracle(g: ColoredGraph, pstar: RainbowPath) -> frozenset:
    """Exhaustively decide, per vertex of pstar, whether it is terminal."""
    vset = frozenset(pstar.vertices)
    return frozenset(
        v for v in pstar.vertices
        if spanning_rainbow_path_from(g, vset, v) is not None)


@dataclass(frozen=True)
class AuxEdgeFire:
    source: str            # "base", "witness", "jump_start", "jump_end"
    pair: tuple            # sorted vertex ids
    witness: RainbowPath


@dataclass(frozen=True)
class AuxGraph:
    vertices: tuple
    edges: frozenset       # of sorted vertex-id pairs

    def neighbors(self, v) -> tuple:
        out = [b if a == v else a for (a, b) in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def degree(self, v) -> int:
        return sum(1 for (a, b) in self.edges if v in (a, b))

    def min_degree(self) -> int:
        if not self.vertices:
            return 0
        return min(self.degree(v) for v in self.vertices)


def _aux_fire(g: ColoredGraph, pstar: RainbowPath, source: str,
              witness: RainbowPath) -> AuxEdgeFire:
    if set(witness.vertices) != set(pstar.vertices):
        raise WitnessError(source, "aux witness does not span the path")
    if not is_rainbow(g, witness):
        raise WitnessError(source, "aux witness repeats a color")
    u, w = witness.endpoints
    return AuxEdgeFire(source=source, pair=(min(u, w), max(u, w)),
                       witness=witness)


def _jump_rotations(g: ColoredGraph, w: RainbowPath):
    """Endpoint-preserving rotations of a witness path.

    For a fresh chord at either end of w, cutting the freed edge keeps one
    endpoint fixed and moves the other, which is exactly what the degree
    bound on the auxiliary graph exploits.
    """
    k = w.length
    used = set(w.colors)
    pos = {v: i for i, v in enumerate(w.vertices)}
    out = []
    for (x, c) in g.neighbors(w.vertices[-1]):
        j = pos.get(x)
        if j is None or c in used or j > k - 2:
            continue
        seq = [w.vertices[i] for i in range(j + 1)]
        seq += [w.vertices[i] for i in range(k, j, -1)]
        out.append(("jump_end", path_from_vertices(g, seq)))
    for (x, c) in g.neighbors(w.vertices[0]):
        i = pos.get(x)
        if i is None or c in used or i < 2:
            continue
        seq = [w.vertices[t] for t in range(i - 1, -1, -1)]
        seq += [w.vertices[t] for t in range(i, k + 1)]
        out.append(("jump_start", path_from_vertices(g, seq)))
    return out


def build_aux_rules(g: ColoredGraph, pstar: RainbowPath,
                    report: Optional[TerminalReport] = None):
    """Auxiliary graph from rule witnesses alone.

    Returns (AuxGraph, fires). Vertices are the rule terminals; edges come
    from each witness's endpoint pair and its jump rotations.
    """
    if report is None:
        report = terminal_rules(g, pstar)
    fires = [_aux_fire(g, pstar, "base", pstar)]
    for f in report.fires:
        fires.append(_aux_fire(g, pstar, "witness", f.witness))
        for source, rotated in _jump_rotations(g, f.witness):
            fires.append(_aux_fire(g, pstar, source, rotated))
    edges = frozenset(f.pair for f in fires)
    return AuxGraph(vertices=tuple(sorted(report.rule_terminals)),
                    edges=edges), tuple(fires)


def build_aux_oracle(g: ColoredGraph, pstar: RainbowPath,
                     terminals: Optional[frozenset] = None) -> AuxGraph:
    """Auxiliary graph by exhaustive search over terminal pairs."""
    if terminals is None:
        terminals = terminal_oracle(g, pstar)
    vset = frozenset(pstar.vertices)
    ts = sorted(terminals)
    edges = set()
    for i, u in enumerate(ts):
        for w in ts[i + 1:]:
            if spanning_rainbow_path_between(g, vset, u, w) is not None:
                edges.add((u, w))
    return AuxGraph(vertices=tuple(ts), edges=frozenset(edges))


def maximum_matching(aux: AuxGraph) -> tuple:
    """A maximum matching of the auxiliary graph, as sorted vertex pairs.

    Plain bitmask recursion; auxiliary graphs here have at most a path's
    worth of vertices, so this is never large.
    """
    vs = aux.vertices
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for (a, b) in aux.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        top = best(rest)
        live = adj[i] & rest
        while live:
            j = (live & -live).bit_length() - 1
            live &= live - 1
            top = max(top, 1 + best(rest & ~(1 << j)))
        return top

    pairs = []
    mask = (1 << len(vs)) - 1
    while mask:
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        if best(mask) == best(rest):
            mask = rest
            continue
        live = adj[i] & rest
        while live:
            j = (live & -live).bit_length() - 1
            live &= live - 1
            if 1 + best(rest & ~(1 << j)) == best(mask):
                pairs.append((vs[i], vs[j]) if vs[i] < vs[j] else (vs[j], vs[i]))
                mask = rest & ~(1 << j)
                break
    best.cache_clear()
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class MatchingReport:
    pairs: tuple           # matching edges as sorted vertex-id pairs
    matched: tuple         # all matched vertices, sorted
    non_edge_counts: tuple # per pair: missing edges from the pair into V(P*)
    incident_edges: int    # edges of g touching a matched vertex
    induced_edges: int     # edges of g inside the matched set

    @property
    def size(self) -> int:
        return len(self.pairs)


def matching_stats(g: ColoredGraph, pstar: RainbowPath,
                   pairs: tuple) -> MatchingReport:
    path_vs = set(pstar.vertices)
    matched = sorted(v for pair in pairs for v in pair)
    mset = set(matched)
    counts = []
    for (ai, bi) in pairs:
        missing = 0
        for x in (ai, bi):
            for y in path_vs - {ai, bi}:
                if not g.has_edge(x, y):
                    missing += 1
        counts.append(missing)
    incident = sum(1 for (u, v, _) in g.edges if u in mset or v in mset)
    induced = sum(1 for (u, v, _) in g.edges if u in mset and v in mset)
    return MatchingReport(pairs=tuple(pairs), matched=tuple(matched),
                          non_edge_counts=tuple(counts),
                          incident_edges=incident, induced_edges=induced)
