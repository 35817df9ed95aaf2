"""Alon-Tarsi number computation.

AT(G) is the least k such that some orientation with max outdegree k-1 has
diff != 0. The solver combines:

  * lower bounds: the pigeonhole bound ceil(max_density)+1 (any orientation
    has a vertex of outdegree >= density), the chromatic number, and caller
    supplied bounds for known subgraphs (AT is subgraph-monotone);
  * the bipartite closed form AT(G) = ceil(max_density)+1, where every
    orientation is an AT-orientation, so a bounded-outdegree orientation is
    itself the certificate;
  * exhaustive search: backtracking over edge directions under a per-vertex
    outdegree cap, testing each complete orientation's diff; exhausting a
    level k proves AT > k. An acyclic orientation along a degeneracy order
    (diff = 1, the empty subdigraph alone) caps the search from above.

Exact chromatic numbers come from biconnected-block decomposition (chi is the
max over blocks) with a saturation-guided, symmetry-broken backtracker per
block.
"""

from __future__ import annotations

import heapq
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .density import max_density
from .errors import CapacityError
from .eulerian import (
    Orientation,
    _arc_deltas,
    _group_half,
    _imbalance_bits,
    _meet,
    eulerian_diff_poly,
    eulerian_tally_enumerate,
    poly_state_bound,
)
from .graphs import Graph, bipartition
from .options import DEFAULT_OPTIONS, SolverOptions


@dataclass(frozen=True)
class ATCertificate:
    """An orientation witnessing AT(G) <= level.

    diff_magnitude is None when no diff engine was within budget and the
    nonzero-diff claim rests on the bipartite closed form or the one-way-cut
    product law (see `method`).
    """

    level: int
    orientation: Orientation
    diff_magnitude: Optional[int]
    method: str

    def outdegree_ok(self) -> bool:
        return self.orientation.max_outdegree() <= self.level - 1


@dataclass(frozen=True)
class ATResult:
    """Exact AT value when lo == hi, otherwise the proved bracket [lo, hi]."""

    lo: int
    hi: int
    certificate: Optional[ATCertificate]
    lower_bound_reason: str

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.lo == self.hi else None


@dataclass(frozen=True)
class ChoosabilityReport:
    chi: int
    at: int
    choosable: bool


class SearchTimeout(Exception):
    """Internal: the wall-clock budget for an exhaustive search ran out."""


# ---------------------------------------------------------------------------
# Bounded-outdegree orientations (path reversal)
# ---------------------------------------------------------------------------


def bounded_outdegree_orientation(g: Graph, cap: int) -> Optional[Orientation]:
    """An orientation with every outdegree <= cap, or None when impossible.

    Greedy start (each edge leaves its currently-lighter endpoint), then
    repeatedly reverse a directed path from an overloaded vertex to one with
    spare capacity. When no such path exists the reachable set R from an
    overloaded vertex has all arcs staying inside R and all outdegrees >= cap
    (one of them > cap), so R induces more than cap*|R| edges: the graph has
    max density > cap and no valid orientation at all.
    """
    if cap < 0:
        return Orientation(g, ()) if g.m == 0 else None
    n = g.n
    tails = []
    outdeg = [0] * n
    for u, v in g.edges:
        t = u if (outdeg[u], u) <= (outdeg[v], v) else v
        tails.append(t)
        outdeg[t] += 1
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (u, v) in enumerate(g.edges):
        incident[u].append(k)
        incident[v].append(k)
    edges = g.edges
    while True:
        over = next((v for v in range(n) if outdeg[v] > cap), None)
        if over is None:
            break
        parent_edge = [-1] * n
        parent = [-1] * n
        seen = [False] * n
        seen[over] = True
        queue = [over]
        target = -1
        for x in queue:
            if outdeg[x] < cap:
                target = x
                break
            for k in incident[x]:
                if tails[k] != x:
                    continue
                u, v = edges[k]
                head = v if x == u else u
                if not seen[head]:
                    seen[head] = True
                    parent[head] = x
                    parent_edge[head] = k
                    queue.append(head)
        if target < 0:
            return None
        x = target
        while x != over:
            k = parent_edge[x]
            tails[k] = x
            x = parent[x]
        outdeg[over] -= 1
        outdeg[target] += 1
    return Orientation(g, tails)


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------


def biconnected_blocks(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the biconnected components (a bridge is a 2-vertex block)."""
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(adj[v]):
                frame[2] += 1
                w = adj[v][i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] >= disc[pv]:
                        verts = set()
                        while True:
                            e = edge_stack.pop()
                            verts.add(e[0])
                            verts.add(e[1])
                            if e == (pv, v):
                                break
                        blocks.append(tuple(sorted(verts)))
    return blocks


def _greedy_clique(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
    adjsets = [frozenset(a) for a in g.adjacency]
    best = 1 if g.n else 0
    for start in order[: min(g.n, 8)]:
        clique = [start]
        for v in order:
            if v != start and all(v in adjsets[u] for u in clique):
                clique.append(v)
        if len(clique) > best:
            best = len(clique)
    return best


def _greedy_coloring_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
    color = [-1] * g.n
    used = 0
    for v in order:
        forbid = {color[u] for u in g.adjacency[v] if color[u] >= 0}
        c = 0
        while c in forbid:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _k_colorable(g: Graph, k: int) -> bool:
    """Backtracking with most-saturated-first selection and color symmetry
    breaking (a vertex may open at most one fresh color class)."""
    n = g.n
    adj = g.adjacency
    color = [-1] * n
    forbid = [0] * n

    def pick() -> int:
        best, best_key = -1, (-1, -1, 0)
        for v in range(n):
            if color[v] == -1:
                key = (forbid[v].bit_count(), len(adj[v]), -v)
                if key > best_key:
                    best_key, best = key, v
        return best

    def rec(assigned: int, used: int) -> bool:
        if assigned == n:
            return True
        v = pick()
        avail = ~forbid[v] & ((1 << min(k, used + 1)) - 1)
        while avail:
            bit = avail & -avail
            avail ^= bit
            c = bit.bit_length() - 1
            color[v] = c
            touched = []
            for u in adj[v]:
                if color[u] == -1 and not (forbid[u] & bit):
                    forbid[u] |= bit
                    touched.append(u)
            if rec(assigned + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbid[u] ^= bit
            color[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph, options: SolverOptions = DEFAULT_OPTIONS) -> int:
    """Exact chi(G); chi is the max over biconnected blocks, so only blocks
    are searched. Raises CapacityError when a block exceeds the budget."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined")
    best = 1
    for blk in biconnected_blocks(g):
        if best < 2:
            best = 2  # a block has at least one edge
        if len(blk) == 2:
            continue
        sub, _ = g.induced_subgraph(blk)
        if bipartition(sub) is not None:
            continue
        if sub.n > options.chromatic_block_cap:
            raise CapacityError(
                f"block with {sub.n} vertices exceeds chromatic budget "
                f"{options.chromatic_block_cap}"
            )
        lb = max(3, _greedy_clique(sub))
        ub = _greedy_coloring_bound(sub)
        if ub > best:
            value = ub
            for k in range(lb, ub):
                if _k_colorable(sub, k):
                    value = k
                    break
            if value > best:
                best = value
    return best


# ---------------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------------


def at_lower_bound(
    g: Graph,
    options: SolverOptions = DEFAULT_OPTIONS,
    known_subgraph_bounds: Iterable[tuple[str, int]] = (),
) -> tuple[int, str]:
    """Best available lower bound for AT(G) with the reason that won.

    Terms: ceil(max_density)+1 (pigeonhole on outdegrees), chi(G) when the
    chromatic solver is within budget (chi <= AT), and any caller-registered
    lower bounds for subgraphs (AT is subgraph-monotone). Chromatic wins ties.
    """
    best = math.ceil(max_density(g).density) + 1 if g.m else 1
    reason = "density-pigeonhole"
    try:
        chi = chromatic_number(g, options)
    except CapacityError:
        chi = None
    if chi is not None and chi >= best:
        best, reason = chi, "chromatic"
    for _name, bound in known_subgraph_bounds:
        if bound > best:
            best, reason = bound, "subgraph"
    return best, reason


# ---------------------------------------------------------------------------
# Bipartite closed form
# ---------------------------------------------------------------------------


def at_bipartite(g: Graph, options: SolverOptions = DEFAULT_OPTIONS) -> ATResult:
    """AT of a bipartite graph: ceil(max_density)+1, certificate included.

    Every orientation of a bipartite graph is an AT-orientation, so the
    bounded-outdegree orientation at level-1 is a certificate; its diff is
    additionally recomputed whenever an engine is within budget.
    """
    if bipartition(g) is None:
        raise ValueError("at_bipartite requires a bipartite graph")
    level = math.ceil(max_density(g).density) + 1 if g.m else 1
    d = bounded_outdegree_orientation(g, level - 1)
    assert d is not None, "density <= level-1 must admit an orientation"
    method, magnitude = "bipartite-closed-form", None
    if g.m <= options.enum_cap:
        diff = eulerian_tally_enumerate(d, options).diff
        if diff == 0:
            raise AssertionError("bipartite orientation computed diff 0")
        method, magnitude = "enumeration", abs(diff)
    elif poly_state_bound(d) <= options.poly_budget:
        coef = eulerian_diff_poly(d, options)
        if coef == 0:
            raise AssertionError("bipartite orientation computed diff 0")
        method, magnitude = "polynomial", abs(coef)
    cert = ATCertificate(level, d, magnitude, method)
    return ATResult(level, level, cert, "density-pigeonhole")


# ---------------------------------------------------------------------------
# Exhaustive level search
# ---------------------------------------------------------------------------

_SPLIT_DEPTH = 8
_TIME_CHECK_MASK = 0x3FF


def _search_tails(
    g: Graph,
    cap: int,
    prefix: Sequence[int] = (),
    deadline: Optional[float] = None,
) -> Optional[tuple[int, ...]]:
    """First tail vector (lexicographic: lower endpoint tried first) giving an
    orientation with outdegrees <= cap and diff != 0; None when exhausted."""
    m = g.m
    n = g.n
    edges = g.edges
    if cap < 0:
        return () if m == 0 else None
    bits = _imbalance_bits(n, edges)
    fwd = _arc_deltas(edges, bits)  # delta when the lower endpoint is the tail
    half = m // 2
    outdeg = [0] * n
    undecided = list(g.degrees())
    tails = [0] * m
    deltas = [0] * m
    counter = 0

    def slack_ok(depth: int) -> bool:
        remaining = m - depth
        slack = 0
        for v in range(n):
            s = cap - outdeg[v]
            u = undecided[v]
            slack += s if s < u else u
            if slack >= remaining:
                return True
        return slack >= remaining

    def assign(k: int, t: int) -> bool:
        u, v = edges[k]
        if outdeg[t] >= cap:
            return False
        tails[k] = t
        deltas[k] = fwd[k] if t == u else -fwd[k]
        outdeg[t] += 1
        undecided[u] -= 1
        undecided[v] -= 1
        return True

    def undo(k: int) -> None:
        u, v = edges[k]
        outdeg[tails[k]] -= 1
        undecided[u] += 1
        undecided[v] += 1

    def rec(depth: int, groups) -> bool:
        nonlocal counter
        counter += 1
        if deadline is not None and (counter & _TIME_CHECK_MASK) == 0:
            if time.monotonic() > deadline:
                raise SearchTimeout
        if depth == half and groups is None:
            groups = _group_half(deltas[:half])
        if depth == m:
            even, odd = _meet(groups, deltas[half:])
            return even != odd
        u, v = edges[depth]
        for t in (u, v):
            if assign(depth, t):
                if slack_ok(depth + 1) and rec(depth + 1, groups):
                    return True
                undo(depth)
        return False

    for k, t in enumerate(prefix):
        if not assign(k, t) or not slack_ok(k + 1):
            return None
    groups = _group_half(deltas[:half]) if len(prefix) >= half else None
    if rec(len(prefix), groups):
        return tuple(tails)
    return None


def _feasible_prefixes(g: Graph, cap: int, depth: int) -> list[tuple[int, ...]]:
    """Direction prefixes for the first `depth` edges that pass pruning."""
    if cap < 0:
        return []
    n, edges = g.n, g.edges
    outdeg = [0] * n
    undecided = list(g.degrees())
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def slack_ok() -> bool:
        remaining = g.m - len(prefix)
        slack = 0
        for v in range(n):
            s = cap - outdeg[v]
            u = undecided[v]
            slack += s if s < u else u
        return slack >= remaining

    def rec(k: int) -> None:
        if k == depth:
            out.append(tuple(prefix))
            return
        u, v = edges[k]
        for t in (u, v):
            if outdeg[t] < cap:
                outdeg[t] += 1
                undecided[u] -= 1
                undecided[v] -= 1
                prefix.append(t)
                if slack_ok():
                    rec(k + 1)
                prefix.pop()
                outdeg[t] -= 1
                undecided[u] += 1
                undecided[v] += 1

    rec(0)
    return out


def _worker_search(args) -> tuple[str, Optional[tuple[int, ...]]]:
    vertices, edges, cap, prefix, deadline = args
    g = Graph(vertices, edges)
    try:
        tails = _search_tails(g, cap, prefix, deadline)
    except SearchTimeout:
        return ("timeout", None)
    return ("found", tails) if tails is not None else ("exhausted", None)


def find_at_orientation(
    g: Graph,
    cap: int,
    options: SolverOptions = DEFAULT_OPTIONS,
    deadline: Optional[float] = None,
) -> Optional[Orientation]:
    """First AT-orientation with max outdegree <= cap, or None if the level
    is exhausted. With options.threads > 1 the search tree is split at a
    fixed depth into independent subtasks; the reduction keeps the
    lexicographically first success, so results match the sequential order.
    """
    if g.m > options.search_edge_cap:
        raise CapacityError(
            f"{g.m} edges exceeds search_edge_cap {options.search_edge_cap}"
        )
    if options.threads > 1 and g.m > _SPLIT_DEPTH:
        prefixes = _feasible_prefixes(g, cap, _SPLIT_DEPTH)
        if not prefixes:
            return None
        args = [
            (g.vertices, g.edges, cap, p, deadline) for p in prefixes
        ]
        timed_out = False
        found: Optional[tuple[int, ...]] = None
        with ProcessPoolExecutor(max_workers=options.threads) as pool:
            futures = [pool.submit(_worker_search, a) for a in args]
            for fut in futures:
                status, tails = fut.result()
                if status == "found":
                    found = tails
                    break
                if status == "timeout":
                    timed_out = True
            for fut in futures:
                fut.cancel()
        if found is not None:
            return Orientation(g, found)
        if timed_out:
            raise SearchTimeout
        return None
    tails = _search_tails(g, cap, (), deadline)
    return Orientation(g, tails) if tails is not None else None


# ---------------------------------------------------------------------------
# Exact AT
# ---------------------------------------------------------------------------


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in repeated-minimum-degree removal order (ties: lowest index)."""
    deg = list(g.degrees())
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    while heap:
        d0, v = heapq.heappop(heap)
        if removed[v] or d0 != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order


def acyclic_certificate(g: Graph) -> ATCertificate:
    """Certificate from the acyclic orientation along a degeneracy order.

    Arcs point from earlier-removed to later-removed vertices, so each vertex
    has outdegree equal to its removal-time degree (<= the degeneracy), and a
    DAG has the empty subdigraph as its only Eulerian subdigraph: diff = 1.
    """
    pos = [0] * g.n
    for i, v in enumerate(degeneracy_order(g)):
        pos[v] = i
    tails = [u if pos[u] < pos[v] else v for u, v in g.edges]
    d = Orientation(g, tails)
    return ATCertificate(d.max_outdegree() + 1, d, 1, "acyclic")


def at_bounds(g: Graph, options: SolverOptions = DEFAULT_OPTIONS) -> ATResult:
    """Cheap bracket: best lower bound vs. the degeneracy certificate."""
    lower, reason = at_lower_bound(g, options)
    cert = acyclic_certificate(g)
    return ATResult(min(lower, cert.level), cert.level, cert, reason)


def _certify(g: Graph, d: Orientation, options: SolverOptions) -> ATCertificate:
    tally = eulerian_tally_enumerate(d, options.with_(enum_cap=max(options.enum_cap, g.m)))
    assert tally.diff != 0
    return ATCertificate(d.max_outdegree() + 1, d, abs(tally.diff), "enumeration")


def at_exact(
    g: Graph,
    options: SolverOptions = DEFAULT_OPTIONS,
    *,
    bipartite_shortcut: bool = True,
) -> ATResult:
    """Exact AT(G) by levelwise exhaustive search, or a bracket over budget.

    Bipartite inputs short-circuit to the closed form unless disabled. The
    search starts at the best lower bound; each exhausted level k proves
    AT > k, and the degeneracy certificate bounds the search from above.
    """
    if bipartite_shortcut and bipartition(g) is not None:
        return at_bipartite(g, options)
    deadline = (
        time.monotonic() + options.time_budget if options.time_budget else None
    )
    lower, reason = at_lower_bound(g, options)
    upper_cert = acyclic_certificate(g)
    hi = upper_cert.level
    assert lower <= hi, "lower bound exceeds the acyclic upper bound"
    if lower == hi:
        return ATResult(hi, hi, upper_cert, reason)
    if g.m > options.search_edge_cap:
        return ATResult(lower, hi, upper_cert, reason)
    k = lower
    while k < hi:
        try:
            found = find_at_orientation(g, k - 1, options, deadline)
        except SearchTimeout:
            return ATResult(k, hi, upper_cert, reason)
        if found is not None:
            return ATResult(k, k, _certify(g, found, options), reason)
        k += 1
        reason = "exhaustive-refutation"
    return ATResult(hi, hi, upper_cert, reason)


def is_chromatic_at_choosable(
    g: Graph, options: SolverOptions = DEFAULT_OPTIONS
) -> ChoosabilityReport:
    """chi(G) == AT(G)? Both solvers must produce exact values."""
    chi = chromatic_number(g, options)
    result = at_exact(g, options)
    if not result.is_exact:
        raise CapacityError(
            f"AT solver returned bracket [{result.lo}, {result.hi}]; "
            "cannot decide chromatic-AT choosability"
        )
    return ChoosabilityReport(chi, result.value, chi == result.value)
