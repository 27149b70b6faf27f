"""Config plumbing and the seeded sweep driver."""

import json
import random

import pytest

from rturan.corpus import (KINDS, RunConfig, check_instance, random_instance,
                           run_suite)
from rturan.graphs import ColoredGraph, validate_proper
from rturan.search import longest_rainbow_path


# === configuration ===

def test_config_defaults_and_round_trip():
    cfg = RunConfig(seed=3, instances=7, kind="bare_path")
    again = RunConfig.from_json_obj(json.loads(json.dumps(cfg.to_json_obj())))
    assert again == cfg


@pytest.mark.parametrize("kwargs", [
    {"kind": "hamiltonian"},
    {"n_min": 1},
    {"n_min": 8, "n_max": 5},
    {"edge_prob": 1.5},
    {"instances": -1},
])
def test_config_rejects_bad_values(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs)


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        RunConfig.from_json_obj({"seed": 1, "colour": "red"})


# === instance generation ===

@pytest.mark.parametrize("kind", KINDS)
def test_instances_are_proper_and_seeded(kind):
    a = random_instance(random.Random(42), 8, 0.45, kind)
    b = random_instance(random.Random(42), 8, 0.45, kind)
    assert a == b
    assert a.m >= 1
    assert validate_proper(a).is_proper


def test_bare_path_plants_a_spanning_rainbow_path():
    for seed in range(5):
        g = random_instance(random.Random(seed), 7, 0.4, "bare_path")
        out = longest_rainbow_path(g)
        assert out.proven_optimal and out.best.length == 6


def test_sparse_random_instance_still_has_an_edge():
    g = random_instance(random.Random(0), 5, 0.0)
    assert g.m == 1


# === single-instance checking ===

def test_check_instance_clean():
    g = random_instance(random.Random(9), 8, 0.5, "bare_path")
    fails, report = check_instance(g, "unit", tamper=True)
    assert fails == [] and report is not None
    assert report.all_ok


def test_check_instance_flags_improper_input():
    bad = ColoredGraph.from_edges(3, [(0, 1, 0), (1, 2, 0)], num_colors=1)
    fails, report = check_instance(bad, "unit")
    assert report is None
    assert [f.check for f in fails] == ["proper"]
    assert fails[0].instance == "unit"


def test_check_instance_reports_exhausted_budget():
    g = random_instance(random.Random(9), 10, 0.6)
    fails, report = check_instance(g, "unit", budget=2)
    assert report is None
    assert [f.check for f in fails] == ["search"]


# === whole sweeps ===

def test_random_sweep_is_clean_and_deterministic():
    cfg = RunConfig(seed=5, instances=30, n_min=5, n_max=9, kind="random")
    s1, s2 = run_suite(cfg), run_suite(cfg)
    assert s1.ok and s1.failures == ()
    assert s1.instances == 30
    assert s1.claim_counts["falsified"] == 0
    assert s1.hypothesis_counts["maximal"] == 30
    assert s1.failures == s2.failures
    assert s1.hypothesis_counts == s2.hypothesis_counts
    assert s1.claim_counts == s2.claim_counts


def test_bare_path_sweep_reaches_the_window_claims():
    cfg = RunConfig(seed=1, instances=40, n_min=6, n_max=9,
                    kind="bare_path", tamper=True)
    s = run_suite(cfg)
    assert s.ok
    assert s.hypothesis_counts["maximal"] == 40
    assert s.hypothesis_counts.get("pivots", 0) >= 5
    assert s.claim_counts["ok"] > 0 and s.claim_counts["falsified"] == 0


def test_summary_serializes():
    s = run_suite(RunConfig(seed=2, instances=3, n_min=5, n_max=6))
    obj = json.loads(json.dumps(s.to_json_obj()))
    assert obj["ok"] is True
    assert obj["instances"] == 3
    assert obj["config"]["seed"] == 2
    assert set(obj["claim_counts"]) == {"ok", "falsified", "skipped"}


def test_empty_sweep():
    s = run_suite(RunConfig(instances=0))
    assert s.ok and s.instances == 0 and s.hypothesis_counts == {}
