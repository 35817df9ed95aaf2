"""Orientations and the even/odd Eulerian subdigraph difference.

An Eulerian subdigraph of an orientation D keeps all vertices and a subset of
arcs such that every vertex has equal indegree and outdegree; it is even or
odd by arc-count parity. diff(D) = #even - #odd. An orientation is an
AT-orientation when diff(D) != 0.

Two independent engines compute diff:

  * eulerian_tally_enumerate - exact even and odd counts over all 2^|A| arc
    subsets. Implemented meet-in-the-middle: arcs are split in halves, each
    half subset is reduced to its per-vertex (outdegree - indegree) imbalance
    vector packed into a single integer, and halves are joined on cancelling
    imbalances. Cost ~2^(|A|/2) dictionary operations.
  * eulerian_diff_poly - the coefficient of prod_v x_v^(outdeg v) in
    prod_{arc (u,v)} (x_u - x_v), computed by incremental multiplication with
    per-variable exponents capped at the outdegree. Equals diff(D) up to a
    global sign that depends on arc processing order, so only the magnitude
    is comparable across engines.

Everything is a pure function of immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CapacityError
from .graphs import Graph
from .options import DEFAULT_OPTIONS, SolverOptions


class Orientation:
    """A direction choice for every edge of a base graph."""

    __slots__ = ("graph", "tails", "outdegrees", "indegrees")

    def __init__(self, graph: Graph, tails: Sequence[int]):
        tails = tuple(tails)
        if len(tails) != graph.m:
            raise ValueError(
                f"need one tail per edge: got {len(tails)} for {graph.m} edges"
            )
        out = [0] * graph.n
        inn = [0] * graph.n
        for (u, v), t in zip(graph.edges, tails):
            if t != u and t != v:
                raise ValueError(f"tail {t} is not an endpoint of edge ({u}, {v})")
            h = v if t == u else u
            out[t] += 1
            inn[h] += 1
        self.graph = graph
        self.tails = tails
        self.outdegrees = tuple(out)
        self.indegrees = tuple(inn)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """(tail, head) per edge, in base-graph edge order."""
        return tuple(
            (t, v if t == u else u) for (u, v), t in zip(self.graph.edges, self.tails)
        )

    def max_outdegree(self) -> int:
        return max(self.outdegrees, default=0)

    def reversed(self) -> "Orientation":
        flipped = [
            v if t == u else u for (u, v), t in zip(self.graph.edges, self.tails)
        ]
        return Orientation(self.graph, flipped)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.tails == other.tails
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.tails))

    def __repr__(self) -> str:
        return f"Orientation(m={self.graph.m}, maxout={self.max_outdegree()})"


def orient(g: Graph, tails: Sequence[int]) -> Orientation:
    """Orientation from a per-edge tail choice (aligned with g.edges)."""
    return Orientation(g, tails)


def orientation_from_arcs(g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
    """Orientation from an arc list that must cover g's edges exactly once."""
    remaining = {}
    for k, (u, v) in enumerate(g.edges):
        remaining[(u, v)] = k
    tails = [None] * g.m
    for t, h in arcs:
        key = (t, h) if t < h else (h, t)
        k = remaining.pop(key, None)
        if k is None:
            raise ValueError(f"arc ({t}, {h}) does not match an unused edge")
        tails[k] = t
    if remaining:
        raise ValueError(f"{len(remaining)} edges left unoriented")
    return Orientation(g, tails)


def induced_orientation(d: Orientation, keep: Iterable[int]) -> Orientation:
    """Restriction of d to the subgraph induced by vertex indices `keep`."""
    sub, remap = d.graph.induced_subgraph(keep)
    tails = [
        remap[t]
        for (u, v), t in zip(d.graph.edges, d.tails)
        if u in remap and v in remap
    ]
    return Orientation(sub, tails)


@dataclass(frozen=True)
class EulerianTally:
    """Counts of even and odd Eulerian subdigraphs (the empty one is even)."""

    even_count: int
    odd_count: int

    @property
    def diff(self) -> int:
        return self.even_count - self.odd_count


# ---------------------------------------------------------------------------
# Meet-in-the-middle tally
# ---------------------------------------------------------------------------


def _imbalance_bits(n_vertices: int, arcs: Sequence[tuple[int, int]]) -> int:
    """Field width so packed imbalance vectors are collision-free."""
    deg = [0] * n_vertices
    for t, h in arcs:
        deg[t] += 1
        deg[h] += 1
    maxdeg = max(deg, default=0)
    return (2 * maxdeg + 2).bit_length()


def _arc_deltas(arcs: Sequence[tuple[int, int]], bits: int) -> list[int]:
    """Packed imbalance contribution (+1 at tail, -1 at head) per arc."""
    return [(1 << (t * bits)) - (1 << (h * bits)) for t, h in arcs]


def _subset_keys(deltas: Sequence[int]) -> list[int]:
    """Packed imbalance of every subset of `deltas`, indexed by bitmask."""
    keys = [0] * (1 << len(deltas))
    for m in range(1, len(keys)):
        low = m & -m
        keys[m] = keys[m ^ low] + deltas[low.bit_length() - 1]
    return keys


def _group_half(deltas: Sequence[int]) -> dict[int, list[int]]:
    """First-half subsets grouped by negated imbalance key, split by parity."""
    groups: dict[int, list[int]] = {}
    for m, k in enumerate(_subset_keys(deltas)):
        entry = groups.get(-k)
        if entry is None:
            groups[-k] = entry = [0, 0]
        entry[m.bit_count() & 1] += 1
    return groups


def _meet(groups: dict[int, list[int]], deltas: Sequence[int]) -> tuple[int, int]:
    """Join second-half subsets against the grouped first half."""
    even = odd = 0
    get = groups.get
    for m, k in enumerate(_subset_keys(deltas)):
        entry = get(k)
        if entry is not None:
            p = m.bit_count() & 1
            even += entry[p]
            odd += entry[1 - p]
    return even, odd


def tally_arcs(
    n_vertices: int, arcs: Sequence[tuple[int, int]], cap: int
) -> tuple[int, int]:
    """(even, odd) Eulerian subdigraph counts for a raw arc list."""
    a = len(arcs)
    if a > cap:
        raise CapacityError(
            f"{a} arcs exceeds the enumeration cap {cap}; "
            "use the polynomial engine or raise enum_cap"
        )
    bits = _imbalance_bits(n_vertices, arcs)
    deltas = _arc_deltas(arcs, bits)
    half = a // 2
    groups = _group_half(deltas[:half])
    return _meet(groups, deltas[half:])


def eulerian_tally_enumerate(
    d: Orientation, options: SolverOptions = DEFAULT_OPTIONS
) -> EulerianTally:
    """Exact even/odd tally over all arc subsets of the orientation."""
    even, odd = tally_arcs(d.graph.n, d.arcs, options.enum_cap)
    return EulerianTally(even, odd)


# ---------------------------------------------------------------------------
# Capped-coefficient polynomial engine
# ---------------------------------------------------------------------------


def poly_state_bound(d: Orientation) -> int:
    """Gate value: product of (outdegree + 1) over all vertices."""
    bound = 1
    for c in d.outdegrees:
        bound *= c + 1
    return bound


def eulerian_diff_poly(
    d: Orientation, options: SolverOptions = DEFAULT_OPTIONS
) -> int:
    """Coefficient of prod_v x_v^(outdeg v) in prod_{(u,v)} (x_u - x_v).

    Equals diff(d) up to a global sign. Exponents are capped at the target
    outdegree profile; monomials that overshoot any cap are pruned.
    """
    bound = poly_state_bound(d)
    if bound > options.poly_budget:
        raise CapacityError(
            f"monomial state bound {bound} exceeds poly_budget {options.poly_budget}"
        )
    caps = d.outdegrees
    shifts = [0] * d.graph.n
    acc = 0
    for v in range(d.graph.n):
        shifts[v] = acc
        acc += (caps[v] + 1).bit_length()
    masks = [(1 << (caps[v] + 1).bit_length()) - 1 for v in range(d.graph.n)]
    cur = {0: 1}
    for t, h in d.arcs:
        st, sh = shifts[t], shifts[h]
        ct, ch = caps[t], caps[h]
        mt, mh = masks[t], masks[h]
        bump_t, bump_h = 1 << st, 1 << sh
        nxt: dict[int, int] = {}
        for key, coef in cur.items():
            if (key >> st) & mt < ct:
                k2 = key + bump_t
                val = nxt.get(k2, 0) + coef
                if val:
                    nxt[k2] = val
                elif k2 in nxt:
                    del nxt[k2]
            if (key >> sh) & mh < ch:
                k2 = key + bump_h
                val = nxt.get(k2, 0) - coef
                if val:
                    nxt[k2] = val
                elif k2 in nxt:
                    del nxt[k2]
        cur = nxt
        if not cur:
            return 0
    target = 0
    for v in range(d.graph.n):
        target += caps[v] << shifts[v]
    return cur.get(target, 0)


# ---------------------------------------------------------------------------
# AT decision and the one-way cut law
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ATDecision:
    """Nonzero-diff verdict plus which engine produced it.

    `diff` is the signed tally difference for the enumeration engine and the
    raw coefficient (engine-internal sign) for the polynomial engine.
    """

    is_at: bool
    method: str
    diff: int

    def __bool__(self) -> bool:
        return self.is_at


def is_at_orientation(
    d: Orientation, options: SolverOptions = DEFAULT_OPTIONS
) -> ATDecision:
    """True iff diff(d) != 0; engine picked by size, recorded in the result."""
    if d.graph.m <= options.enum_cap:
        tally = eulerian_tally_enumerate(d, options)
        return ATDecision(tally.diff != 0, "enumeration", tally.diff)
    if poly_state_bound(d) <= options.poly_budget:
        coef = eulerian_diff_poly(d, options)
        return ATDecision(coef != 0, "polynomial", coef)
    raise CapacityError(
        f"no diff engine within budget: {d.graph.m} arcs > enum_cap "
        f"{options.enum_cap} and state bound {poly_state_bound(d)} > "
        f"poly_budget {options.poly_budget}"
    )


@dataclass(frozen=True)
class OneWayCutReport:
    """Result of checking a vertex split for one-way arcs and the product law.

    When the split is one-way (every crossing arc leaves `left`), no Eulerian
    subdigraph can use a crossing arc, so diff factors exactly:
    diff(D) = diff(D[left]) * diff(D[right]). Diffs are filled in when the
    enumeration engine is within budget for the respective arc sets.
    """

    one_way: bool
    cross_count: int
    backward_arcs: tuple[tuple[int, int], ...]
    diff_whole: Optional[int] = None
    diff_left: Optional[int] = None
    diff_right: Optional[int] = None

    @property
    def product_ok(self) -> Optional[bool]:
        if None in (self.diff_whole, self.diff_left, self.diff_right):
            return None
        return self.diff_whole == self.diff_left * self.diff_right


def one_way_cut_check(
    d: Orientation,
    left: Iterable[int],
    right: Iterable[int],
    options: SolverOptions = DEFAULT_OPTIONS,
) -> OneWayCutReport:
    """Check that all crossing arcs go left->right and the diff product law."""
    left = frozenset(left)
    right = frozenset(right)
    if left & right or (left | right) != frozenset(range(d.graph.n)):
        raise ValueError("left/right do not partition the vertex set")
    cross = 0
    backward = []
    for t, h in d.arcs:
        if t in left and h in right:
            cross += 1
        elif t in right and h in left:
            backward.append((t, h))
    if backward:
        return OneWayCutReport(False, cross + len(backward), tuple(backward))

    def _diff(sub: Orientation) -> Optional[int]:
        if sub.graph.m > options.enum_cap:
            return None
        return eulerian_tally_enumerate(sub, options).diff

    d_left = _diff(induced_orientation(d, left))
    d_right = _diff(induced_orientation(d, right))
    d_whole = _diff(d)
    return OneWayCutReport(True, cross, (), d_whole, d_left, d_right)
