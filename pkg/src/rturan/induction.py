"""Vertex-deletion certificate for the global edge bound.

For a properly colored graph whose rainbow paths all have at most k edges,
the total edge count stays below (9k/7 + 2) n. The argument peels vertices
off one batch at a time, and this module replays it step by step on a
concrete graph, recording how many edges each deletion removed and how many
the argument allows. Two branches:

  low_degree   some vertex has degree below 9k/7 + 2: delete it
  matching     every degree is at least 9k/7 + 2; take a longest rainbow
               path (its length may sit below k, the machinery rebases onto
               the actual length), build the terminal auxiliary graph, pick
               a maximum matching, and delete all matched vertices; the
               counting claims cap the edges lost at (3k'+2-2m)m

Each step's removed edge count must fall strictly below its telescoping
budget of (9k/7 + 2) per vertex. If the matching branch ever removes more
than its cap, that is not an input problem but a broken theorem, and the
run stops with FalsificationError rather than producing a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import FalsificationError, GuardError, PreconditionError
from .graphs import ColoredGraph, induced_subgraph, validate_proper
from .search import has_rainbow_path, longest_rainbow_path
from .terminals import (build_aux_oracle, matching_stats, maximum_matching,
                        terminal_oracle)


def frac_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class StepRecord:
    kind: str               # "low_degree" or "matching"
    removed_vertices: tuple
    removed_edges: int
    bound_used: Fraction    # telescoping budget for this step, strict


@dataclass(frozen=True)
class InductionCertificate:
    n: int
    k: int
    bound: Fraction         # 9k/7 + 2, edges per vertex
    total_edges: int
    holds: bool
    steps: tuple

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "bound_value_rational": frac_str(self.bound),
            "total_edges": self.total_edges,
            "holds": self.holds,
            "steps": [
                {
                    "kind": s.kind,
                    "removed_vertices": list(s.removed_vertices),
                    "removed_edges": s.removed_edges,
                    "bound_used": frac_str(s.bound_used),
                }
                for s in self.steps
            ],
        }


def certificate_from_json_obj(obj: dict) -> InductionCertificate:
    steps = tuple(
        StepRecord(kind=s["kind"],
                   removed_vertices=tuple(s["removed_vertices"]),
                   removed_edges=int(s["removed_edges"]),
                   bound_used=Fraction(s["bound_used"]))
        for s in obj["steps"])
    return InductionCertificate(n=int(obj["n"]), k=int(obj["k"]),
                                bound=Fraction(obj["bound_value_rational"]),
                                total_edges=int(obj["total_edges"]),
                                holds=bool(obj["holds"]), steps=steps)


def verify_certificate(cert: InductionCertificate,
                       g: Optional[ColoredGraph] = None) -> bool:
    """Re-run the certificate arithmetic without re-running the search."""
    if cert.bound != Fraction(9 * cert.k, 7) + 2:
        return False
    removed = [v for s in cert.steps for v in s.removed_vertices]
    if len(removed) != len(set(removed)) or len(removed) != cert.n:
        return False
    total = 0
    for s in cert.steps:
        if s.kind not in ("low_degree", "matching"):
            return False
        if s.bound_used != cert.bound * len(s.removed_vertices):
            return False
        if not s.removed_edges < s.bound_used:
            return False
        total += s.removed_edges
    if total != cert.total_edges:
        return False
    if g is not None:
        if g.n != cert.n or g.m != cert.total_edges:
            return False
        if sorted(removed) != list(range(cert.n)):
            return False
    expected = cert.n == 0 or cert.total_edges < cert.bound * cert.n
    return cert.holds == expected


def induction_step(g: ColoredGraph, k: int, budget: Optional[int] = None):
    """One deletion step. Returns (record, reduced graph, old-to-new map).

    The record's vertex ids live in g's numbering; callers stitching steps
    together must translate through the returned map.
    """
    bound = Fraction(9 * k, 7) + 2
    dmin = g.min_degree()
    if dmin < bound:
        v = min(u for u in range(g.n) if g.degree(u) == dmin)
        sub, remap = induced_subgraph(g, [u for u in range(g.n) if u != v])
        return (StepRecord("low_degree", (v,), dmin, bound), sub, remap)

    found = longest_rainbow_path(g, budget=budget)
    if not found.proven_optimal:
        raise GuardError("induct", "search budget too small to pin the "
                         "longest rainbow path")
    pstar = found.best
    k_cur = pstar.length
    if k_cur > k:
        raise PreconditionError(
            f"graph has a rainbow path with {k_cur} edges, over the "
            f"promised {k}")
    terminals = terminal_oracle(g, pstar)
    aux = build_aux_oracle(g, pstar, terminals)
    pairs = maximum_matching(aux)
    m = len(pairs)
    stats = matching_stats(g, pstar, pairs)
    cap = (3 * k_cur + 2 - 2 * m) * m
    if stats.incident_edges > cap:
        raise FalsificationError(
            f"matching step removes {stats.incident_edges} edges, the "
            f"counting claims allow {cap} (path length {k_cur}, "
            f"matching size {m})")
    budget_here = bound * (2 * m)
    if not stats.incident_edges < budget_here:
        raise FalsificationError(
            f"matching step removes {stats.incident_edges} edges, "
            f"telescoping needs strictly fewer than {frac_str(budget_here)}")
    keep = [u for u in range(g.n) if u not in set(stats.matched)]
    sub, remap = induced_subgraph(g, keep)
    return (StepRecord("matching", stats.matched, stats.incident_edges,
                       budget_here), sub, remap)


def run_induction(g: ColoredGraph, k: int,
                  budget: Optional[int] = None) -> InductionCertificate:
    if k < 1:
        raise PreconditionError("the path-edge budget k must be at least 1")
    rep = validate_proper(g)
    if not rep.is_proper:
        raise PreconditionError(
            f"coloring is not proper ({len(rep.violations)} clashes, "
            f"first at vertex {rep.violations[0][0]})")
    probe = has_rainbow_path(g, k + 1, budget=budget)
    if probe.found is None:
        raise GuardError("induct", "search budget too small to check the "
                         "input promise")
    if probe.found:
        raise PreconditionError(
            f"graph has a rainbow path with {k + 1} edges; the bound's "
            f"hypothesis fails")

    bound = Fraction(9 * k, 7) + 2
    steps = []
    cur = g
    to_orig = {v: v for v in range(g.n)}
    total = 0
    while cur.n:
        rec, cur_next, remap = induction_step(cur, k, budget=budget)
        original_ids = tuple(sorted(to_orig[v] for v in rec.removed_vertices))
        rec = StepRecord(rec.kind, original_ids, rec.removed_edges,
                         rec.bound_used)
        steps.append(rec)
        total += rec.removed_edges
        to_orig = {new: to_orig[old] for old, new in remap.items()}
        cur = cur_next
    assert total == g.m, "telescoped edge count drifted from the graph"
    holds = g.n == 0 or total < bound * g.n
    return InductionCertificate(n=g.n, k=k, bound=bound, total_edges=total,
                                holds=holds, steps=tuple(steps))
