"""Cost-minimal construction sequences.

The total cost of a sequence is a position-weighted linear functional:
every edge contributes +2 times its position and every vertex contributes
-degree times its position.  Minimizing therefore only needs the state
(set of placed vertices, number of placed edges) - the remaining weights
and remaining positions are determined - which gives an exact dynamic
program far below full enumeration.

Also here: the greedy builder (emit an edge as soon as one is available,
otherwise the next vertex of the input order), enumeration of all
minimum-cost sequences, the improved star schedule, and the harness that
checks whether greedy runs reach every minimum-cost sequence.
"""
from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .graphs import Element, Graph, build_family
from .sequences import CSeq
from .counting import (
    DEFAULT_ELEMENT_LIMIT,
    DEFAULT_STATE_LIMIT,
    _codes_to_cseq,
    _endpoint_masks,
    count_dp,
)

__all__ = [
    "TieBreak",
    "OptResult",
    "ConjectureReport",
    "greedy",
    "greedy_all",
    "exhaustive_greedy_set",
    "min_cost",
    "enumerate_min_cost",
    "check_conjecture",
    "star_schedule",
    "economy_vs_count",
    "POLICIES",
    "DEFAULT_OPT_VERTEX_LIMIT",
    "DEFAULT_GREEDY_VERTEX_LIMIT",
]

POLICIES = ("lexicographic", "cycle-avoiding", "seeded-random")
DEFAULT_OPT_VERTEX_LIMIT = 22
DEFAULT_GREEDY_VERTEX_LIMIT = 8


@dataclass(frozen=True)
class TieBreak:
    """Deterministic rule for picking among several available edges."""

    policy: str = "lexicographic"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}, got {self.policy!r}")


@dataclass(frozen=True)
class OptResult:
    """Exact minimum total cost, the number of sequences attaining it, and
    optionally some minimum-cost witnesses (in lexicographic order)."""

    min_cost: int
    num_optimal: int
    witnesses: tuple[CSeq, ...] = ()


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of checking that greedy runs reach every minimum-cost
    sequence.  ``counterexamples`` lists minimum-cost sequences no greedy
    run produces; empty means the inclusion holds."""

    holds: bool
    policy: str
    num_min_cost: int
    num_greedy: int
    counterexamples: tuple[CSeq, ...]


# ---------------------------------------------------------------------------
# Greedy


class _Components:
    # Union-find over vertex labels, for the cycle-avoiding policy.
    def __init__(self, p: int) -> None:
        self.parent = list(range(p + 1))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def greedy(
    g: Graph,
    vertex_order: Sequence[int] | None = None,
    tie_break: TieBreak = TieBreak(),
) -> CSeq:
    """Consume a vertex order, emitting an available edge whenever one
    exists and the next vertex otherwise.

    An edge is available once both endpoints are placed.  Ties among
    available edges fall to the tie-break rule: smallest id, or smallest id
    among the edges that do not close a cycle (if any), or a seeded uniform
    pick.
    """
    order = tuple(vertex_order) if vertex_order is not None else tuple(range(1, g.p + 1))
    if sorted(order) != list(range(1, g.p + 1)):
        raise ValueError("vertex_order is not a permutation of 1..p")
    rng = random.Random(tie_break.seed)
    components = _Components(g.p)
    placed_vertices: set[int] = set()
    unplaced_edges = set(range(1, g.q + 1))
    sequence: list[Element] = []
    next_vertex = iter(order)
    while len(sequence) < g.element_count:
        available = sorted(
            j
            for j in unplaced_edges
            if all(v in placed_vertices for v in g.endpoints(j))
        )
        if available:
            chosen = _pick_edge(g, available, tie_break, components, rng)
            unplaced_edges.remove(chosen)
            u, w = g.endpoints(chosen)
            components.union(u, w)
            sequence.append(Element.edge(chosen))
        else:
            v = next(next_vertex)
            placed_vertices.add(v)
            sequence.append(Element.vertex(v))
    return CSeq(g, tuple(sequence))


def _pick_edge(
    g: Graph,
    available: list[int],
    tie_break: TieBreak,
    components: _Components,
    rng: random.Random,
) -> int:
    if tie_break.policy == "lexicographic":
        return available[0]
    if tie_break.policy == "seeded-random":
        return rng.choice(available)
    # cycle-avoiding: prefer edges joining distinct components for as long
    # as possible, smallest id within the preferred class.
    for j in available:
        u, w = g.endpoints(j)
        if u != w and components.find(u) != components.find(w):
            return j
    return available[0]


def greedy_all(
    g: Graph,
    tie_break: TieBreak = TieBreak(),
    *,
    vertex_limit: int = DEFAULT_GREEDY_VERTEX_LIMIT,
) -> set[CSeq]:
    """Deduplicated greedy outputs over every vertex order (p! runs)."""
    if g.p > vertex_limit:
        raise ResourceLimitError(f"{g.p} vertices exceed the greedy-all limit {vertex_limit}")
    return {
        greedy(g, order, tie_break)
        for order in itertools.permutations(range(1, g.p + 1))
    }


def exhaustive_greedy_set(
    g: Graph, *, element_limit: int = DEFAULT_ELEMENT_LIMIT
) -> set[CSeq]:
    """Every sequence some greedy run can output, under *any* tie-breaking.

    Ranging over all vertex orders and all tie resolutions, the reachable
    sequences are exactly the valid ones that never place a vertex while an
    edge is available; enumerate those directly.  The whole set is
    materialized, so keep the element limit modest.
    """
    total_elements = g.element_count
    if total_elements > element_limit:
        raise ResourceLimitError(
            f"{total_elements} elements exceed the enumeration limit {element_limit}"
        )
    need = _endpoint_masks(g)
    p = g.p
    out: set[CSeq] = set()
    prefix: list[int] = []

    def extend(seen: int) -> None:
        if len(prefix) == total_elements:
            out.add(_codes_to_cseq(g, prefix))
            return
        available = [
            code
            for code in range(p, total_elements)
            if not seen & (1 << code) and not need[code] & ~seen
        ]
        candidates = available if available else [
            code for code in range(p) if not seen & (1 << code)
        ]
        for code in candidates:
            prefix.append(code)
            extend(seen | (1 << code))
            prefix.pop()

    extend(0)
    return out


# ---------------------------------------------------------------------------
# Exact minimum-cost search


def _weights(g: Graph) -> list[int]:
    # Per element code: +2 for edges, -degree for vertices (loops twice).
    degs = g.degrees()
    return [-degs[i] for i in range(g.p)] + [2] * g.q


def min_cost(
    g: Graph,
    *,
    vertex_limit: int = DEFAULT_OPT_VERTEX_LIMIT,
    max_states: int = DEFAULT_STATE_LIMIT,
    max_witnesses: int = 0,
) -> OptResult:
    """Exact minimum total cost and the count of sequences attaining it.

    Positions 1..p+q are assigned in order; placing element s at position t
    adds weight(s)*t.  Branches with equal minima have their counts summed.
    Witness extraction is optional and capped by ``max_witnesses``.
    """
    if g.p > vertex_limit:
        raise ResourceLimitError(f"{g.p} vertices exceed the optimizer limit {vertex_limit}")
    masks = _endpoint_masks(g)
    weights = _weights(g)
    p, q = g.p, g.q
    full = (1 << p) - 1
    avail_cache: dict[int, int] = {}

    def available(placed: int) -> int:
        cached = avail_cache.get(placed)
        if cached is None:
            cached = sum(1 for m in masks[p:] if not m & ~placed)
            avail_cache[placed] = cached
        return cached

    memo: dict[tuple[int, int], tuple[int, int]] = {}
    depth_needed = g.element_count + 100
    if sys.getrecursionlimit() < depth_needed + 1000:
        sys.setrecursionlimit(depth_needed + 1000)

    def best(placed: int, edges_done: int) -> tuple[int, int]:
        if placed == full and edges_done == q:
            return (0, 1)
        key = (placed, edges_done)
        cached = memo.get(key)
        if cached is not None:
            return cached
        position = placed.bit_count() + edges_done + 1
        best_cost: int | None = None
        count = 0
        open_edges = available(placed) - edges_done
        if open_edges > 0:
            tail_cost, tail_count = best(placed, edges_done + 1)
            best_cost = 2 * position + tail_cost
            count = open_edges * tail_count
        remaining = full & ~placed
        while remaining:
            bit = remaining & -remaining
            v_code = bit.bit_length() - 1
            tail_cost, tail_count = best(placed | bit, edges_done)
            branch = weights[v_code] * position + tail_cost
            if best_cost is None or branch < best_cost:
                best_cost, count = branch, tail_count
            elif branch == best_cost:
                count += tail_count
            remaining ^= bit
        if len(memo) >= max_states:
            raise ResourceLimitError(
                f"optimizer DP exceeded {max_states} states; raise max_states to continue"
            )
        result = (best_cost, count)  # type: ignore[arg-type]
        memo[key] = result
        return result

    total_cost, num_optimal = best(0, 0)
    witnesses: tuple[CSeq, ...] = ()
    if max_witnesses > 0:
        witnesses = _collect_witnesses(g, masks, weights, best, max_witnesses)
    return OptResult(total_cost, num_optimal, witnesses)


def _collect_witnesses(g, masks, weights, best, cap) -> tuple[CSeq, ...]:
    # Follow every branch the DP scored as optimal, in lexicographic element
    # order, tracking the actual placed-edge set; stop at the cap.
    p, q = g.p, g.q
    total_elements = g.element_count
    full = (1 << p) - 1
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def walk(placed_vertices: int, placed_edges: int, edges_done: int) -> None:
        if len(found) >= cap:
            return
        if len(prefix) == total_elements:
            found.append(tuple(prefix))
            return
        position = len(prefix) + 1
        target, _ = best(placed_vertices, edges_done)
        remaining = full & ~placed_vertices
        while remaining:
            bit = remaining & -remaining
            code = bit.bit_length() - 1
            tail, _ = best(placed_vertices | bit, edges_done)
            if weights[code] * position + tail == target:
                prefix.append(code)
                walk(placed_vertices | bit, placed_edges, edges_done)
                prefix.pop()
                if len(found) >= cap:
                    return
            remaining ^= bit
        open_edges = [
            j
            for j in range(q)
            if not placed_edges & (1 << j) and not masks[p + j] & ~placed_vertices
        ]
        if open_edges and 2 * position + best(placed_vertices, edges_done + 1)[0] == target:
            for j in open_edges:
                prefix.append(p + j)
                walk(placed_vertices, placed_edges | (1 << j), edges_done + 1)
                prefix.pop()
                if len(found) >= cap:
                    return

    walk(0, 0, 0)
    found.sort()
    return tuple(_codes_to_cseq(g, codes) for codes in found)


def enumerate_min_cost(
    g: Graph, *, element_limit: int = DEFAULT_ELEMENT_LIMIT
) -> list[CSeq]:
    """All minimum-cost sequences, by full enumeration with running costs.

    Independent of the dynamic program: walks every valid sequence and keeps
    the cost minimizers, in lexicographic order.
    """
    total_elements = g.element_count
    if total_elements > element_limit:
        raise ResourceLimitError(
            f"{total_elements} elements exceed the enumeration limit {element_limit}"
        )
    need = _endpoint_masks(g)
    weights = _weights(g)
    best_cost: int | None = None
    winners: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(seen: int, cost: int) -> None:
        nonlocal best_cost
        if len(prefix) == total_elements:
            if best_cost is None or cost < best_cost:
                best_cost = cost
                winners.clear()
            if cost == best_cost:
                winners.append(tuple(prefix))
            return
        position = len(prefix) + 1
        for code in range(total_elements):
            if not seen & (1 << code) and not need[code] & ~seen:
                prefix.append(code)
                extend(seen | (1 << code), cost + weights[code] * position)
                prefix.pop()

    extend(0, 0)
    return [_codes_to_cseq(g, codes) for codes in winners]


# ---------------------------------------------------------------------------
# Greedy-coverage check and schedules


def check_conjecture(
    g: Graph,
    tie_break: TieBreak | str = "exhaustive",
    *,
    element_limit: int = DEFAULT_ELEMENT_LIMIT,
    vertex_limit: int = DEFAULT_GREEDY_VERTEX_LIMIT,
) -> ConjectureReport:
    """Check that greedy runs produce every minimum-cost sequence.

    With ``tie_break="exhaustive"`` the greedy side ranges over every tie
    resolution (the strongest reading); passing a :class:`TieBreak`
    restricts it to that single policy over all vertex orders.
    """
    minimum = enumerate_min_cost(g, element_limit=element_limit)
    if isinstance(tie_break, TieBreak):
        reachable = greedy_all(g, tie_break, vertex_limit=vertex_limit)
        policy = f"{tie_break.policy} (seed {tie_break.seed})"
    elif tie_break == "exhaustive":
        reachable = exhaustive_greedy_set(g, element_limit=element_limit)
        policy = "exhaustive"
    else:
        raise ValueError(f"tie_break must be a TieBreak or 'exhaustive', got {tie_break!r}")
    counterexamples = tuple(x for x in minimum if x not in reachable)
    return ConjectureReport(
        holds=not counterexamples,
        policy=policy,
        num_min_cost=len(minimum),
        num_greedy=len(reachable),
        counterexamples=counterexamples,
    )


def star_schedule(n: int) -> CSeq:
    """The improved build order for the star with n peripheral vertices.

    Place floor(n/2) leaves, then the hub, then the edges those leaves
    opened, then alternate each remaining leaf with its newly available
    edge.  Beats the hub-first greedy cost for n >= 2.
    """
    if n < 1:
        raise ValueError(f"star size must be >= 1, got {n}")
    g = build_family(f"star:{n}")
    half = n // 2
    elements: list[Element] = []
    elements.extend(Element.vertex(i + 1) for i in range(1, half + 1))
    elements.append(Element.vertex(1))
    elements.extend(Element.edge(j) for j in range(1, half + 1))
    for j in range(half + 1, n + 1):
        elements.append(Element.vertex(j + 1))
        elements.append(Element.edge(j))
    return CSeq(g, tuple(elements))


def economy_vs_count(graphs: Iterable[Graph]) -> list[dict]:
    """Log whether fewer minimum-cost sequences goes with fewer sequences
    overall, across all ordered pairs of the given graphs.

    Purely observational; returns one record per pair with a strict
    minimum-cost-count inequality.
    """
    annotated = []
    for g in graphs:
        result = min_cost(g)
        annotated.append((g, result.num_optimal, count_dp(g)))
    records = []
    for (g1, opt1, total1), (g2, opt2, total2) in itertools.permutations(annotated, 2):
        if opt1 < opt2:
            records.append(
                {
                    "left": g1,
                    "right": g2,
                    "num_optimal": (opt1, opt2),
                    "count": (total1, total2),
                    "consistent": total1 < total2,
                }
            )
    return records
