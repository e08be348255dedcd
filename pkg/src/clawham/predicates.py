"""Hypothesis predicates with failure witnesses.

Every check returns a PredicateReport; when the property fails the report
carries a vertex set that re-checks as a genuine violation using only the
graph-core primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .graph import (
    FiniteGraph,
    VertexSet,
    components,
    induced_subgraph,
    is_connected,
    shortest_path,
)


@dataclass(frozen=True)
class PredicateReport:
    holds: bool
    witness: VertexSet | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json_obj(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


def claw_at(g: FiniteGraph, v: int) -> tuple[int, int, int] | None:
    """Three pairwise non-adjacent neighbors of v, lexicographically first."""
    nbrs = g.neighbors(v)
    for a, b, c in combinations(nbrs, 3):
        if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
            return (a, b, c)
    return None


def is_claw_free(g: FiniteGraph) -> PredicateReport:
    for v in g.vertices:
        triple = claw_at(g, v)
        if triple is not None:
            witness = tuple(sorted((v,) + triple))
            return PredicateReport(False, witness, f"induced claw centered at {v}")
    return PredicateReport(True)


def neighborhood_components(g: FiniteGraph, v: int) -> tuple[VertexSet, ...]:
    return components(induced_subgraph(g, g.neighbors(v)))


def locally_connected_at(g: FiniteGraph, v: int) -> bool:
    """Whether G[N(v)] is connected; empty and singleton neighborhoods count."""
    return len(neighborhood_components(g, v)) <= 1


def is_locally_connected(g: FiniteGraph) -> PredicateReport:
    for v in g.vertices:
        comps = neighborhood_components(g, v)
        if len(comps) > 1:
            witness = tuple(sorted({v} | set(comps[0]) | set(comps[1])))
            return PredicateReport(
                False, witness, f"neighborhood of {v} splits into {len(comps)} parts"
            )
    return PredicateReport(True)


def is_two_connected(g: FiniteGraph) -> PredicateReport:
    if len(g) < 3:
        raise DomainError("2-connectivity is only defined here for >= 3 vertices")
    comps = components(g)
    if len(comps) > 1:
        witness = (comps[0][0], comps[1][0])
        return PredicateReport(False, witness, "graph is disconnected")
    for v in g.vertices:
        rest = [u for u in g.vertices if u != v]
        if len(components(induced_subgraph(g, rest))) > 1:
            return PredicateReport(False, (v,), f"cutvertex {v}")
    return PredicateReport(True)


def _peo_order(g: FiniteGraph) -> list[int]:
    """Lexicographic BFS order, reversed (candidate perfect elimination order)."""
    labels: dict[int, list[int]] = {v: [] for v in g.vertices}
    order: list[int] = []
    remaining = set(g.vertices)
    counter = len(g)
    while remaining:
        v = max(sorted(remaining), key=lambda u: labels[u])
        remaining.discard(v)
        order.append(v)
        for w in g.neighbors(v):
            if w in remaining:
                labels[w].append(counter)
        counter -= 1
    order.reverse()
    return order


def _find_hole(g: FiniteGraph) -> VertexSet | None:
    """An induced cycle on >= 4 vertices, if one exists.

    Each vertex of a hole has two non-adjacent neighbors joined by a path
    avoiding the rest of its closed neighborhood, so scanning those triples
    is a complete search.
    """
    for v in g.vertices:
        nbrs = g.neighbors(v)
        closed = set(nbrs) | {v}
        for a, b in combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            allowed = (set(g.vertices) - closed) | {a, b}
            path = shortest_path(g, a, {b}, allowed=allowed)
            if path is not None and len(path) >= 3:
                return tuple(sorted([v] + path))
    return None


def is_chordal(g: FiniteGraph) -> PredicateReport:
    """Perfect-elimination-order test; witness is an induced long cycle."""
    order = _peo_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [w for w in g.neighbors(v) if pos[w] > i]
        if not later:
            continue
        pivot = min(later, key=lambda w: pos[w])
        for w in later:
            if w != pivot and not g.has_edge(pivot, w):
                hole = _find_hole(g)
                if hole is None:  # pragma: no cover - PEO failure implies a hole
                    raise AssertionError("elimination order failed but no hole found")
                return PredicateReport(False, hole, f"induced cycle on {len(hole)} vertices")
    return PredicateReport(True)


def check_all(g: FiniteGraph) -> dict[str, PredicateReport | None]:
    """The four hypothesis predicates in one sweep (CLI `check` payload)."""
    out: dict[str, PredicateReport | None] = {
        "claw_free": is_claw_free(g),
        "locally_connected": is_locally_connected(g),
        "chordal": is_chordal(g),
    }
    out["two_connected"] = is_two_connected(g) if len(g) >= 3 else None
    out["connected"] = PredicateReport(is_connected(g))
    return out
