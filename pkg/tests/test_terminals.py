"""Rule engine vs. oracle on hand-built instances.

The main fixture is the same worked graph as in test_profile: path
0-1-2-3-4-5 colored 0..4, chords (0,3)=9, (0,4)=10, (5,1)=8, (5,2)=7,
far edge (0,5)=2. Its nice colors sit exactly in the silent corners
(start chord at i=k, end chord at p=0), so the nice rules must not fire
there; two variants below make each nice branch fire instead.
"""

import itertools
import random

import pytest

from rturan.constructions import maamoun_meyniel
from rturan.errors import WitnessError
from rturan.graphs import ColoredGraph
from rturan.search import is_rainbow, path_from_vertices
from rturan.terminals import (AuxGraph, _checked_fire, build_aux_oracle,
                              build_aux_rules, matching_stats,
                              maximum_matching, terminal_oracle,
                              terminal_rules)


def hand_graph():
    edges = [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 4, 3), (4, 5, 4),
             (0, 3, 9), (0, 4, 10), (5, 1, 8), (5, 2, 7), (0, 5, 2)]
    return ColoredGraph.from_edges(6, edges, num_colors=11)


def hand_pair():
    g = hand_graph()
    return g, path_from_vertices(g, range(6))


def brute_matching_size(aux):
    best = 0
    es = sorted(aux.edges)
    for r in range(len(aux.vertices) // 2, 0, -1):
        for combo in itertools.combinations(es, r):
            vs = [v for e in combo for v in e]
            if len(set(vs)) == 2 * r:
                return r
    return best


# === rule firings on the worked instance ===

def test_hand_instance_fires():
    g, p = hand_pair()
    rep = terminal_rules(g, p)
    assert rep.terminals_by_rule() == {
        "endpoints": (0, 5),
        "fresh_start": (2, 3, 5),
        "fresh_end": (0, 2, 3),
        "window_start": (2, 4),
        "window_end": (1, 3),
    }
    assert rep.rule_terminals == frozenset(range(6))


def test_hand_instance_witnesses_are_sound():
    g, p = hand_pair()
    for f in terminal_rules(g, p).fires:
        assert is_rainbow(g, f.witness)
        assert set(f.witness.vertices) == set(range(6))
        assert set(f.terminals) <= set(f.witness.endpoints)


def test_window_witnesses_exactly():
    g, p = hand_pair()
    by_rule = {f.rule: f for f in terminal_rules(g, p).fires
               if f.rule.startswith("window")}
    assert by_rule["window_start"].witness.vertices == (2, 3, 0, 1, 5, 4)
    assert by_rule["window_end"].witness.vertices == (3, 2, 5, 4, 0, 1)


def test_rules_within_oracle():
    g, p = hand_pair()
    rep = terminal_rules(g, p)
    assert rep.rule_terminals <= terminal_oracle(g, p)
    assert terminal_oracle(g, p) == frozenset(range(6))


# === nice rules, both live branches ===

def test_nice_start_chord_below_freed_edge():
    # chord (0,2) carries old color 3, freed by the fresh end chord (5,3)
    g = ColoredGraph.from_edges(
        6, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 4, 3), (4, 5, 4),
            (0, 2, 3), (3, 5, 20)], num_colors=21)
    p = path_from_vertices(g, range(6))
    fires = {f.rule: f for f in terminal_rules(g, p).fires}
    nice = fires["nice_start"]
    assert nice.witness.vertices == (1, 0, 2, 3, 5, 4)
    assert set(nice.terminals) == {1, 4}


def test_nice_start_chord_above_freed_edge():
    # chord (0,3) carries old color 1, freed by the fresh end chord (5,1)
    g = ColoredGraph.from_edges(
        6, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 4, 3), (4, 5, 4),
            (0, 3, 1), (5, 1, 20)], num_colors=21)
    p = path_from_vertices(g, range(6))
    fires = {f.rule: f for f in terminal_rules(g, p).fires}
    nice = fires["nice_start"]
    assert nice.witness.vertices == (2, 3, 0, 1, 5, 4)
    assert set(nice.terminals) == {2, 4}


def test_nice_rules_silent_on_far_corner():
    g, p = hand_pair()
    rules = {f.rule for f in terminal_rules(g, p).fires}
    prof_nice = compute_nice(g, p)
    assert prof_nice == (frozenset({2}), frozenset({2}))
    assert "nice_start" not in rules and "nice_end" not in rules


def compute_nice(g, p):
    from rturan.profile import compute_profile
    prof = compute_profile(g, p)
    return prof.start_nice, prof.end_nice


# === whole-path jump ===

def test_far_jump_makes_everything_terminal():
    g = maamoun_meyniel(2)
    p = path_from_vertices(g, [1, 0, 2])
    rep = terminal_rules(g, p)
    jumps = [f for f in rep.fires if f.rule == "far_jump"]
    assert len(jumps) == 2
    assert rep.rule_terminals == frozenset({0, 1, 2})
    assert terminal_oracle(g, p) == frozenset({0, 1, 2})


# === the witness checker refuses unsound fires ===

def test_checked_fire_rejects_non_path():
    g, p = hand_pair()
    with pytest.raises(WitnessError):
        _checked_fire(g, p, "bogus", ("start", 0), [2, 0, 1, 3, 4, 5], (0,))


def test_checked_fire_rejects_repeated_color():
    g, p = hand_pair()
    with pytest.raises(WitnessError) as e:
        _checked_fire(g, p, "bogus", ("start", 0), [4, 0, 5, 2, 3], (0,))
    assert "color" in str(e.value)


def test_checked_fire_rejects_non_spanning():
    g, p = hand_pair()
    with pytest.raises(WitnessError) as e:
        _checked_fire(g, p, "bogus", ("start", 0), [0, 1, 2, 3, 4], (0,))
    assert "span" in str(e.value)


def test_checked_fire_rejects_interior_terminal():
    g, p = hand_pair()
    with pytest.raises(WitnessError) as e:
        _checked_fire(g, p, "bogus", ("start", 0), list(range(6)), (2,))
    assert "endpoint" in str(e.value)


# === auxiliary graph ===

def test_aux_rules_subset_of_oracle():
    g, p = hand_pair()
    aux_r, fires = build_aux_rules(g, p)
    aux_o = build_aux_oracle(g, p)
    assert set(aux_r.vertices) <= set(aux_o.vertices)
    assert aux_r.edges <= aux_o.edges
    assert (0, 5) in aux_r.edges
    assert all(f.source in
               {"base", "witness", "jump_start", "jump_end"} for f in fires)


def test_aux_graph_accessors():
    aux = AuxGraph(vertices=(0, 1, 2), edges=frozenset({(0, 1), (1, 2)}))
    assert aux.neighbors(1) == (0, 2)
    assert aux.degree(0) == 1
    assert aux.min_degree() == 1
    assert AuxGraph(vertices=(), edges=frozenset()).min_degree() == 0


# === maximum matching ===

def test_matching_on_small_cases():
    path4 = AuxGraph(vertices=(0, 1, 2, 3),
                     edges=frozenset({(0, 1), (1, 2), (2, 3)}))
    assert maximum_matching(path4) == ((0, 1), (2, 3))
    star = AuxGraph(vertices=(0, 1, 2, 3),
                    edges=frozenset({(0, 1), (0, 2), (0, 3)}))
    assert len(maximum_matching(star)) == 1


def test_matching_matches_brute_force():
    rng = random.Random(11)
    for trial in range(40):
        n = rng.randrange(2, 9)
        edges = frozenset(
            (u, v) for u in range(n) for v in range(u + 1, n)
            if rng.random() < 0.4)
        aux = AuxGraph(vertices=tuple(range(n)), edges=edges)
        pairs = maximum_matching(aux)
        flat = [v for pr in pairs for v in pr]
        assert len(set(flat)) == len(flat)
        assert all(pr in edges for pr in pairs)
        assert len(pairs) == brute_matching_size(aux)


# === matching statistics feeding the deletion step ===

def test_matching_stats_hand_values():
    g, p = hand_pair()
    rep = matching_stats(g, p, ((0, 5), (1, 2)))
    assert rep.matched == (0, 1, 2, 5)
    assert rep.non_edge_counts == (2, 4)
    assert rep.incident_edges == 9
    assert rep.induced_edges == 5
    assert rep.size == 2
