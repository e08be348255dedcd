"""Immutable finite graphs and the neighborhood/cut/component primitives.

Graphs are simple and undirected, with non-negative integer vertex ids and
sorted adjacency.  Every public operation returns sorted tuples so outputs
are deterministic and directly comparable in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, GraphInputError

Edge = tuple[int, int]
VertexSet = tuple[int, ...]
EdgeSet = tuple[Edge, ...]


def edge_key(u: int, v: int) -> Edge:
    """Canonical unordered pair, smaller id first."""
    return (u, v) if u < v else (v, u)


class FiniteGraph:
    """Immutable simple undirected graph over non-negative integer ids."""

    __slots__ = ("_vertices", "_adj", "_sets")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
        verts = sorted(set(vertices))
        for v in verts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise GraphInputError(f"vertex ids must be non-negative integers, got {v!r}")
        vset = set(verts)
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for e in edges:
            u, v = e
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u} is not allowed")
            if u not in vset or v not in vset:
                raise GraphInputError(f"edge ({u}, {v}) uses an unknown vertex id")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices: VertexSet = tuple(verts)
        self._adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(adj[v])) for v in verts}
        self._sets: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in verts}

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._require(v)
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._sets[u]

    def edges(self) -> EdgeSet:
        out = [(u, v) for u in self._vertices for v in self._adj[u] if u < v]
        return tuple(out)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise DomainError(f"vertex {v} is not in the graph")

    def require_subset(self, x: Iterable[int]) -> frozenset[int]:
        xs = frozenset(x)
        for v in xs:
            self._require(v)
        return xs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGraph)
            and self._vertices == other._vertices
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._adj[v] for v in self._vertices)))

    def __repr__(self) -> str:
        return f"FiniteGraph(n={len(self._vertices)}, m={self.edge_count()})"


def neighborhood_k(g: FiniteGraph, x: Iterable[int], k: int) -> VertexSet:
    """Vertices at distance between 1 and k from the set ``x``.

    Distance to a set is the minimum over its members, so members of ``x``
    are never part of the result.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    xs = g.require_subset(x)
    seen = set(xs)
    frontier = list(xs)
    found: set[int] = set()
    for _ in range(k):
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    found.add(w)
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return tuple(sorted(found))


def cut(g: FiniteGraph, x: Iterable[int]) -> EdgeSet:
    """Edges with exactly one endpoint in ``x``; symmetric in x vs complement."""
    xs = g.require_subset(x)
    out = []
    for u in sorted(xs):
        for v in g.neighbors(u):
            if v not in xs:
                out.append(edge_key(u, v))
    return tuple(sorted(out))


def induced_subgraph(g: FiniteGraph, x: Iterable[int]) -> FiniteGraph:
    xs = g.require_subset(x)
    edges = [(u, v) for u in xs for v in g.neighbors(u) if v in xs and u < v]
    return FiniteGraph(xs, edges)


def components(g: FiniteGraph) -> tuple[VertexSet, ...]:
    """Maximal connected vertex sets, sorted by minimum id."""
    seen: set[int] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def component_of(g: FiniteGraph, v: int) -> frozenset[int]:
    g._require(v)
    comp = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in comp:
                comp.add(w)
                queue.append(w)
    return frozenset(comp)


def is_connected(g: FiniteGraph) -> bool:
    if len(g) == 0:
        return True
    return len(component_of(g, g.vertices[0])) == len(g)


def bfs_distances(g: FiniteGraph, sources: Iterable[int]) -> dict[int, int]:
    """Distance from the source set to every reachable vertex."""
    src = g.require_subset(sources)
    dist = {v: 0 for v in src}
    queue = deque(sorted(src))
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(
    g: FiniteGraph,
    start: int,
    goals: Iterable[int],
    allowed: Iterable[int] | None = None,
) -> list[int] | None:
    """BFS path from ``start`` to the nearest goal, smallest-id tie-break.

    ``allowed`` restricts the search to an induced vertex set (it must
    contain ``start``).  Returns None when no goal is reachable.
    """
    goalset = frozenset(goals)
    allow = None if allowed is None else frozenset(allowed)
    if allow is not None and start not in allow:
        raise DomainError("start vertex is excluded from the allowed set")
    if start in goalset:
        return [start]
    parent: dict[int, int] = {start: start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in parent or (allow is not None and w not in allow):
                continue
            parent[w] = u
            if w in goalset:
                path = [w]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None


class CycleEmbedding:
    """A cycle as a canonical cyclic vertex sequence with fixed orientation.

    The stored order starts at the minimum id and proceeds toward the
    smaller of that vertex's two cycle-neighbors, which pins down the
    successor/predecessor maps.
    """

    __slots__ = ("_order", "_index")

    def __init__(self, order: Sequence[int]):
        seq = [int(v) for v in order]
        if len(seq) < 3:
            raise DomainError(f"a cycle needs at least 3 vertices, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise DomainError("cycle order contains duplicate vertices")
        self._order = _canonical_rotation(seq)
        self._index = {v: i for i, v in enumerate(self._order)}

    @property
    def order(self) -> tuple[int, ...]:
        return self._order

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._order)

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, v: int) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleEmbedding) and self._order == other._order

    def __hash__(self) -> int:
        return hash(self._order)

    def __repr__(self) -> str:
        return f"CycleEmbedding({list(self._order)})"

    def succ(self, v: int) -> int:
        i = self._require(v)
        return self._order[(i + 1) % len(self._order)]

    def pred(self, v: int) -> int:
        i = self._require(v)
        return self._order[i - 1]

    def edge_set(self) -> frozenset[Edge]:
        n = len(self._order)
        return frozenset(
            edge_key(self._order[i], self._order[(i + 1) % n]) for i in range(n)
        )

    def _require(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise DomainError(f"vertex {v} is not on the cycle") from None


def _canonical_rotation(seq: list[int]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rotated = seq[i:] + seq[:i]
    if rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


@dataclass(frozen=True)
class CycleCheck:
    """Outcome of validating a cycle candidate against a graph."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_cycle(g: FiniteGraph, c: CycleEmbedding | Sequence[int]) -> CycleCheck:
    """Check that ``c`` is a cycle of ``g``; report the violated piece if not."""
    order = tuple(c.order if isinstance(c, CycleEmbedding) else c)
    if len(order) < 3:
        return CycleCheck(False, "too-short", (len(order),))
    seen: set[int] = set()
    for v in order:
        if v in seen:
            return CycleCheck(False, "duplicate-vertex", (v,))
        seen.add(v)
        if v not in g:
            return CycleCheck(False, "unknown-vertex", (v,))
    n = len(order)
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        if not g.has_edge(u, v):
            return CycleCheck(False, "missing-edge", edge_key(u, v))
    return CycleCheck(True)


def cycle_from_edge_set(edges: Iterable[Edge]) -> CycleEmbedding | None:
    """Reassemble a single cycle from an edge set, or None if it is not one."""
    adj: dict[int, list[int]] = {}
    count = 0
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
        count += 1
    if not adj or count != len(adj):
        return None
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(adj):
            return None
    if len(order) != len(adj) or len(order) < 3:
        return None
    return CycleEmbedding(order)


def iter_edges_of_order(order: Sequence[int]) -> Iterator[Edge]:
    n = len(order)
    for i in range(n):
        yield edge_key(order[i], order[(i + 1) % n])
