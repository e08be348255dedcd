"""Independent oracles used to pin expected values.

Everything here is deliberately written against raw adjacency data with its
own search logic, so a bug in the package cannot hide in the tests.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from clawham.graph import FiniteGraph


def adjacency_dict(g: FiniteGraph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in g.vertices}


def bfs_distance_oracle(adj: dict[int, set[int]], sources) -> dict[int, int]:
    dist = {v: 0 for v in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def neighborhood_oracle(g: FiniteGraph, x, k: int) -> set[int]:
    dist = bfs_distance_oracle(adjacency_dict(g), list(x))
    return {v for v, d in dist.items() if 1 <= d <= k}


def hamilton_cycle_oracle(g: FiniteGraph) -> list[int] | None:
    """Bitmask DP for a Hamilton cycle; None when none exists."""
    verts = list(g.vertices)
    n = len(verts)
    if n < 3:
        return None
    idx = {v: i for i, v in enumerate(verts)}
    masks = [0] * n
    for u, v in g.edges():
        masks[idx[u]] |= 1 << idx[v]
        masks[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1
    # dp[mask] = bitset of possible last vertices for paths over mask from 0
    dp = [0] * (1 << n)
    dp[1] = 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        lasts = dp[mask]
        if not lasts:
            continue
        last_bits = lasts
        while last_bits:
            low = last_bits & -last_bits
            i = low.bit_length() - 1
            last_bits ^= low
            ext = masks[i] & ~mask
            while ext:
                elow = ext & -ext
                j = elow.bit_length() - 1
                ext ^= elow
                dp[mask | elow] |= elow
    if not dp[full] & masks[0]:
        return None
    # reconstruct
    order = []
    mask, cur = full, None
    cands = dp[full] & masks[0]
    cur = (cands & -cands).bit_length() - 1
    while mask:
        order.append(verts[cur])
        prev_mask = mask ^ (1 << cur)
        if not prev_mask:
            break
        found = False
        bits = dp[prev_mask] & masks[cur]
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            bits ^= low
            cur, mask = j, prev_mask
            found = True
            break
        if not found:
            return None
    order.reverse()
    return order


def is_hamiltonian_oracle(g: FiniteGraph) -> bool:
    return hamilton_cycle_oracle(g) is not None


def has_induced_claw_oracle(g: FiniteGraph) -> bool:
    """Scan all 4-subsets for an induced star with three leaves."""
    adj = adjacency_dict(g)
    for quad in combinations(g.vertices, 4):
        inside = [(a, b) for a, b in combinations(quad, 2) if b in adj[a]]
        if len(inside) != 3:
            continue
        deg = {v: 0 for v in quad}
        for a, b in inside:
            deg[a] += 1
            deg[b] += 1
        if sorted(deg.values()) == [1, 1, 1, 3]:
            return True
    return False


def locally_connected_oracle(g: FiniteGraph) -> bool:
    """Union-find over each open neighborhood."""
    adj = adjacency_dict(g)
    for v in g.vertices:
        nbrs = sorted(adj[v])
        parent = {u: u for u in nbrs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in combinations(nbrs, 2):
            if b in adj[a]:
                parent[find(a)] = find(b)
        if len({find(u) for u in nbrs}) > 1:
            return False
    return True


def two_connected_oracle(g: FiniteGraph) -> bool:
    adj = adjacency_dict(g)

    def connected_without(skip) -> bool:
        left = [v for v in g.vertices if v not in skip]
        if not left:
            return True
        seen = {left[0]}
        stack = [left[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in skip and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(left)

    if not connected_without(set()):
        return False
    return all(connected_without({v}) for v in g.vertices)


def chordal_oracle(g: FiniteGraph) -> bool:
    """Repeatedly eliminate simplicial vertices; chordal iff all go."""
    adj = adjacency_dict(g)
    alive = set(g.vertices)
    changed = True
    while alive and changed:
        changed = False
        for v in sorted(alive):
            nbrs = [u for u in adj[v] if u in alive]
            if all(b in adj[a] for a, b in combinations(nbrs, 2)):
                alive.discard(v)
                changed = True
                break
    return not alive


def brute_minimal_separators(g: FiniteGraph) -> list[frozenset[int]]:
    """All inclusion-minimal disconnecting vertex sets, by subset scan."""
    adj = adjacency_dict(g)
    verts = list(g.vertices)

    def disconnected_without(skip: frozenset[int]) -> bool:
        left = [v for v in verts if v not in skip]
        if len(left) <= 1:
            return False
        seen = {left[0]}
        stack = [left[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in skip and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) != len(left)

    out = []
    for r in range(1, len(verts) - 1):
        for sub in combinations(verts, r):
            s = frozenset(sub)
            if not disconnected_without(s):
                continue
            if all(disconnected_without(s - {v}) is False for v in s):
                out.append(s)
    return out


def girth_oracle(g: FiniteGraph) -> int | None:
    """Length of a shortest cycle, by BFS from every vertex."""
    adj = adjacency_dict(g)
    best = None
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    best = cand if best is None else min(best, cand)
    return best


def check_claw_witness(g: FiniteGraph, witness) -> bool:
    """The witness must contain a center adjacent to three vertices that are
    pairwise non-adjacent."""
    ws = sorted(witness)
    if len(ws) != 4:
        return False
    for center in ws:
        leaves = [v for v in ws if v != center]
        if all(g.has_edge(center, v) for v in leaves) and not any(
            g.has_edge(a, b) for a, b in combinations(leaves, 2)
        ):
            return True
    return False


def check_local_connectivity_witness(g: FiniteGraph, witness) -> bool:
    """Some witness vertex must have the remaining witness vertices inside
    its neighborhood, spread over at least two components of it."""
    from clawham.predicates import neighborhood_components

    ws = set(witness)
    for center in sorted(ws):
        rest = ws - {center}
        if not rest <= set(g.neighbors(center)):
            continue
        comps = neighborhood_components(g, center)
        touched = {i for i, comp in enumerate(comps) for v in rest if v in set(comp)}
        if len(touched) >= 2:
            return True
    return False


def check_hole_witness(g: FiniteGraph, witness) -> bool:
    """The witness set must induce a cycle on at least 4 vertices."""
    ws = sorted(set(witness))
    if len(ws) < 4:
        return False
    inside = {v: [u for u in g.neighbors(v) if u in set(ws)] for v in ws}
    if any(len(nb) != 2 for nb in inside.values()):
        return False
    seen = {ws[0]}
    stack = [ws[0]]
    while stack:
        u = stack.pop()
        for w in inside[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(ws)
