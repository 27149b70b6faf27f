"""Exhaustive oracles cross-checked against independent counters.

Canonical proper edge colorings of a skeleton correspond one-to-one with
partitions of the edge set into matchings, so the counts here are verified
twice over: once by a set-partition recursion on the first remaining edge,
once (for tiny skeletons) by normalizing every raw color assignment to
first-appearance order and counting distinct results.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

import pytest

from rturan.errors import GuardError, PreconditionError
from rturan.graphs import GraphSkeleton, complete_graph, validate_proper
from rturan.oracle import (clique_packing, coloring_avoiding,
                           count_proper_colorings, erdos_gallai_bound,
                           exstar_small, packing_edge_count,
                           proper_colorings)
from rturan.search import has_rainbow_path


def count_matching_partitions(edges):
    memo = {}

    def count(rem):
        if not rem:
            return 1
        if rem in memo:
            return memo[rem]
        rest = sorted(rem)
        e0 = rest[0]
        total = 0

        def grow(block, cands):
            nonlocal total
            total += count(rem - block)
            used = {v for e in block for v in e}
            for i, e in enumerate(cands):
                if used & set(e):
                    continue
                grow(block | {e}, cands[i + 1:])

        grow(frozenset({e0}), rest[1:])
        memo[rem] = total
        return total

    return count(frozenset(edges))


def count_by_normalization(skel):
    seen = set()
    incident = [[] for _ in range(skel.n)]
    for i, (u, v) in enumerate(skel.edges):
        incident[u].append(i)
        incident[v].append(i)
    for cs in product(range(skel.m), repeat=skel.m):
        if any(len({cs[i] for i in inc}) != len(inc) for inc in incident):
            continue
        order, norm = {}, []
        for c in cs:
            order.setdefault(c, len(order))
            norm.append(order[c])
        seen.add(tuple(norm))
    return len(seen)


def naive_exstar(n, path_edges):
    all_edges = list(combinations(range(n), 2))
    for m in range(len(all_edges), 0, -1):
        for subset in combinations(all_edges, m):
            if colorable_avoiding(n, subset, path_edges):
                return m
    return 0


def colorable_avoiding(n, edges, path_edges):
    m = len(edges)
    incident = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    eindex = {}
    for i, (u, v) in enumerate(edges):
        eindex[(u, v)] = eindex[(v, u)] = i
    for cs in product(range(m), repeat=m):
        if any(len({cs[i] for i in inc}) != len(inc) for inc in incident):
            continue
        if not has_naive_rainbow_path(n, eindex, cs, path_edges):
            return True
    return False


def has_naive_rainbow_path(n, eindex, cs, path_edges):
    if path_edges + 1 > n:
        return False
    for perm in permutations(range(n), path_edges + 1):
        idx = [eindex.get(pair) for pair in zip(perm, perm[1:])]
        if None in idx:
            continue
        colors = [cs[i] for i in idx]
        if len(set(colors)) == len(colors):
            return True
    return False


def path_skeleton(edges):
    return GraphSkeleton(edges + 1, tuple((i, i + 1) for i in range(edges)))


# === canonical coloring counts ===

@pytest.mark.parametrize("skel,expected", [
    (complete_graph(2), 1),
    (complete_graph(3), 1),
    (complete_graph(4), 8),
    (path_skeleton(3), 2),
    (GraphSkeleton(4, ((0, 1), (0, 2), (0, 3))), 1),
])
def test_counts_match_partition_recursion(skel, expected):
    assert count_proper_colorings(skel) == expected
    assert count_matching_partitions(skel.edges) == expected


def test_counts_match_raw_normalization():
    for skel in (complete_graph(4), path_skeleton(3), complete_graph(3)):
        assert count_proper_colorings(skel) == count_by_normalization(skel)


def test_k5_count_both_ways():
    assert count_proper_colorings(complete_graph(5)) == 332
    assert count_matching_partitions(complete_graph(5).edges) == 332


def test_colorings_come_out_canonical_and_proper():
    for g in proper_colorings(complete_graph(4)):
        assert validate_proper(g).is_proper
        cs = [c for (_, _, c) in g.edges]
        assert cs[0] == 0
        assert all(c <= max(cs[:i]) + 1 for i, c in enumerate(cs) if i)


def test_avoid_filter_agrees_with_post_filter():
    skel = complete_graph(4)
    kept = sum(1 for g in proper_colorings(skel)
               if has_rainbow_path(g, 3).found is False)
    assert kept == sum(1 for _ in proper_colorings(skel, avoid=3))
    assert kept > 0


def test_coloring_avoiding_finds_or_refutes():
    g = coloring_avoiding(complete_graph(4), 3)
    assert g is not None and validate_proper(g).is_proper
    assert has_rainbow_path(g, 3).found is False
    assert coloring_avoiding(path_skeleton(2), 2) is None
    assert coloring_avoiding(complete_graph(5), 4) is None


def test_coloring_guards():
    with pytest.raises(GuardError):
        next(proper_colorings(complete_graph(7)))
    with pytest.raises(GuardError):
        next(proper_colorings(path_skeleton(2), guard=1))
    with pytest.raises(PreconditionError):
        next(proper_colorings(path_skeleton(2), avoid=0))


# === exact extremal values ===

FROZEN = {
    (2, 2): 1, (3, 2): 1, (4, 2): 2, (5, 2): 2, (6, 2): 3, (7, 2): 3,
    (2, 3): 1, (3, 3): 3, (4, 3): 6, (5, 3): 6, (6, 3): 7,
    (4, 4): 6, (5, 4): 7, (6, 4): 9,
    (6, 5): 15,
}


def test_exstar_frozen_table():
    for (n, length), value in FROZEN.items():
        assert exstar_small(n, length).value == value, (n, length)


def test_exstar_witnesses_are_real():
    for (n, length), value in FROZEN.items():
        res = exstar_small(n, length)
        w = res.witness
        assert w is not None and w.n == n and w.m == value
        assert validate_proper(w).is_proper
        assert has_rainbow_path(w, length).found is False


def test_exstar_matches_naive_search():
    for n in (2, 3, 4):
        for length in (2, 3, 4):
            assert exstar_small(n, length).value == naive_exstar(n, length), \
                (n, length)


def test_exstar_monotone_in_both_arguments():
    for (n, length), value in FROZEN.items():
        if (n - 1, length) in FROZEN:
            assert FROZEN[(n - 1, length)] <= value
        if (n, length - 1) in FROZEN:
            assert FROZEN[(n, length - 1)] <= value


def test_exstar_matching_shortcut():
    for n in range(2, 8):
        res = exstar_small(n, 2)
        assert res.value == n // 2
        assert res.witness.m == n // 2
        assert all(res.witness.degree(v) <= 1 for v in range(n))


def test_exstar_degenerate_inputs():
    assert exstar_small(0, 3).value == 0
    assert exstar_small(1, 3).value == 0
    assert exstar_small(5, 1).value == 0
    with pytest.raises(PreconditionError):
        exstar_small(4, 0)
    with pytest.raises(GuardError):
        exstar_small(8, 3)


# === the uncolored baseline and the packing it compares against ===

def test_erdos_gallai_values():
    assert erdos_gallai_bound(10, 4) == Fraction(15)
    assert erdos_gallai_bound(5, 3) == Fraction(5)
    assert erdos_gallai_bound(7, 2) == Fraction(7, 2)


def test_clique_packing_shape():
    g = clique_packing(10, 4)
    assert g.n == 10 and g.m == 13
    assert g.m == packing_edge_count(10, 4)
    assert validate_proper(g).is_proper
    assert has_rainbow_path(g, 4).found is False


def test_packing_leftover_block():
    g = clique_packing(7, 3)
    assert g.m == packing_edge_count(7, 3) == 6
    assert g.degree(6) == 0
    assert has_rainbow_path(g, 3).found is False


def test_exstar_dominates_packing():
    for (n, length), value in FROZEN.items():
        assert value >= packing_edge_count(n, length), (n, length)
