"""Construction sequences and their cost functionals.

A construction sequence for a graph lists all vertices and edges exactly
once, with every edge appearing after both of its endpoints.  This module
owns the validated sequence type, per-prefix component profiles, the edge
and vertex cost measures, the continuous-time variant, the up-down
permutation bijection for paths, and vertices-first sequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import IsolatedVertexError
from .graphs import Element, Graph, build_family

__all__ = [
    "CSeq",
    "Violation",
    "validate",
    "ComponentProfile",
    "component_profile",
    "edge_cost",
    "total_cost",
    "vertex_delay",
    "vertex_cost",
    "TimeAssignment",
    "continuous_cost",
    "is_updown",
    "to_updown_permutation",
    "from_updown_permutation",
    "vertices_first_sequence",
    "parse_sequence",
    "format_sequence",
    "short_form",
]


@dataclass(frozen=True)
class Violation:
    """One reason a candidate sequence fails to be a construction sequence."""

    kind: str  # "not-permutation" | "edge-before-endpoint"
    message: str
    edge: int | None = None
    vertex: int | None = None

    def __str__(self) -> str:
        return self.message


def validate(graph: Graph, elements: Sequence[Element]) -> list[Violation]:
    """Check a candidate sequence; an empty result means valid.

    A valid sequence is a permutation of the graph's elements in which every
    edge follows both of its endpoints.  Violations name the offending edge
    and endpoint.
    """
    seq = tuple(elements)
    expected = graph.elements()
    if sorted(seq, key=Element.sort_key) != expected:
        present = set(seq)
        required = set(expected)
        missing = [str(el) for el in expected if el not in present]
        foreign = sorted(str(el) for el in present - required)
        duplicated = sorted({str(el) for el in seq if seq.count(el) > 1})
        detail = []
        if missing:
            detail.append("missing " + ",".join(missing))
        if foreign:
            detail.append("foreign " + ",".join(foreign))
        if duplicated:
            detail.append("repeated " + ",".join(duplicated))
        summary = "; ".join(detail) or "wrong length"
        return [
            Violation(
                "not-permutation",
                f"sequence is not a permutation of the {len(expected)} elements ({summary})",
            )
        ]
    pos = {el: i for i, el in enumerate(seq, start=1)}
    violations = []
    for j, (u, w) in enumerate(graph.edges, start=1):
        edge_pos = pos[Element.edge(j)]
        for v in (u, w) if u != w else (u,):
            vertex_pos = pos[Element.vertex(v)]
            if vertex_pos > edge_pos:
                violations.append(
                    Violation(
                        "edge-before-endpoint",
                        f"edge e{j}={{{u},{w}}} at position {edge_pos} precedes "
                        f"its endpoint v{v} at position {vertex_pos}",
                        edge=j,
                        vertex=v,
                    )
                )
    return violations


@dataclass(frozen=True)
class CSeq:
    """A validated construction sequence.

    Construction raises ``ValueError`` describing every violation when the
    element list is not a construction sequence for the graph.  Instances are
    immutable and hashable.
    """

    graph: Graph
    elements: tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        problems = validate(self.graph, self.elements)
        if problems:
            raise ValueError(
                "invalid construction sequence: " + "; ".join(str(v) for v in problems)
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __str__(self) -> str:
        return format_sequence(self.elements)

    def position(self, element: Element) -> int:
        """1-based position of an element."""
        try:
            return self.elements.index(element) + 1
        except ValueError:
            raise ValueError(f"{element} is not an element of this sequence") from None

    def positions(self) -> dict[Element, int]:
        return {el: i for i, el in enumerate(self.elements, start=1)}


# ---------------------------------------------------------------------------
# Component profile


class _UnionFind:
    """Union-find over vertices 1..p with path halving."""

    def __init__(self, p: int) -> None:
        self.parent = list(range(p + 1))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False if already together."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class ComponentProfile:
    """Connected-component counts of the placed subgraph after each prefix."""

    counts: tuple[int, ...]

    @property
    def peak(self) -> int:
        return max(self.counts)


def component_profile(x: CSeq) -> ComponentProfile:
    """Per-prefix component counts, maintained incrementally with union-find.

    Placing a vertex adds a component; placing an edge merges two components
    or, when it closes a cycle (or is a loop), leaves the count unchanged.
    """
    uf = _UnionFind(x.graph.p)
    counts = []
    current = 0
    for el in x.elements:
        if el.is_vertex:
            current += 1
        else:
            u, w = x.graph.endpoints(el.index)
            if u != w and uf.union(u, w):
                current -= 1
        counts.append(current)
    return ComponentProfile(tuple(counts))


# ---------------------------------------------------------------------------
# Cost functionals


def edge_cost(x: CSeq, edge_id: int) -> int:
    """Delay of one edge: twice its position minus the positions of its
    endpoints; a loop's single endpoint counts twice."""
    u, w = x.graph.endpoints(edge_id)
    pos = x.positions()
    return 2 * pos[Element.edge(edge_id)] - pos[Element.vertex(u)] - pos[Element.vertex(w)]


def total_cost(x: CSeq) -> int:
    """Sum of edge costs.  Equals 2*sum(edge positions) minus the
    degree-weighted sum of vertex positions."""
    pos = x.positions()
    total = 0
    for j, (u, w) in enumerate(x.graph.edges, start=1):
        total += 2 * pos[Element.edge(j)] - pos[Element.vertex(u)] - pos[Element.vertex(w)]
    return total


def vertex_delay(x: CSeq, v: int) -> Fraction:
    """Cost attributed to one vertex: the sum of its incident edges'
    positions, minus the vertex's own position, divided by its degree.

    A loop appears once in the incident-edge sum but contributes 2 to the
    degree.  Degree-zero vertices make the measure undefined.
    """
    g = x.graph
    deg = g.degree(v)
    if deg == 0:
        raise IsolatedVertexError(f"vertex {v} is isolated; vertex cost undefined")
    pos = x.positions()
    incident_sum = sum(pos[Element.edge(j)] for j in g.incident_edges(v))
    return Fraction(incident_sum - pos[Element.vertex(v)], deg)


def vertex_cost(x: CSeq) -> Fraction:
    """Sum of per-vertex delays over all vertices."""
    g = x.graph
    degs = g.degrees()
    if any(d == 0 for d in degs):
        isolated = [v for v, d in enumerate(degs, start=1) if d == 0]
        raise IsolatedVertexError(f"isolated vertices {isolated}; vertex cost undefined")
    pos = x.positions()
    total = Fraction(0)
    for v in range(1, g.p + 1):
        incident_sum = sum(pos[Element.edge(j)] for j in g.incident_edges(v))
        total += Fraction(incident_sum - pos[Element.vertex(v)], degs[v - 1])
    return total


@dataclass(frozen=True)
class TimeAssignment:
    """Continuous placement times in [0,1] for every element, with each edge
    strictly later than both endpoints."""

    graph: Graph
    times: Mapping[Element, Fraction]

    def __post_init__(self) -> None:
        coerced = {el: Fraction(t) for el, t in self.times.items()}
        object.__setattr__(self, "times", coerced)
        expected = set(self.graph.elements())
        if set(coerced) != expected:
            raise ValueError("times must cover exactly the graph's elements")
        for el, t in coerced.items():
            if not 0 <= t <= 1:
                raise ValueError(f"time of {el} is {t}, outside [0,1]")
        for j, (u, w) in enumerate(self.graph.edges, start=1):
            edge_time = coerced[Element.edge(j)]
            endpoint_time = max(coerced[Element.vertex(u)], coerced[Element.vertex(w)])
            if edge_time <= endpoint_time:
                raise ValueError(
                    f"edge e{j} at time {edge_time} is not strictly after its "
                    f"endpoints (latest endpoint at {endpoint_time})"
                )

    def time(self, element: Element) -> Fraction:
        return self.times[element]


def continuous_cost(h: TimeAssignment, edge_id: int) -> Fraction:
    """Continuous-time edge delay: 2*h(edge) - h(u) - h(w), always positive."""
    u, w = h.graph.endpoints(edge_id)
    return (
        2 * h.time(Element.edge(edge_id))
        - h.time(Element.vertex(u))
        - h.time(Element.vertex(w))
    )


# ---------------------------------------------------------------------------
# Up-down bijection for canonically labeled paths


def is_updown(values: Sequence[int]) -> bool:
    """True when consecutive differences strictly alternate in sign, starting
    with a rise.  Length-1 sequences qualify."""
    if len(values) == 0:
        return False
    sign = 1
    for a, b in zip(values, values[1:]):
        if sign * (b - a) <= 0:
            return False
        sign = -sign
    return True


def _require_canonical_path(g: Graph) -> int:
    n = g.p
    if g != build_family(f"path:{n}"):
        raise ValueError("sequence graph is not a canonically labeled path")
    return n


def to_updown_permutation(x: CSeq) -> tuple[int, ...]:
    """Map a path construction sequence to an up-down permutation of [2n-1].

    Elements are numbered consecutively along the path (odd = vertices, even
    = edges); the result is the inverse of the sequence read in that
    numbering.  Valid sequences map exactly onto up-down permutations.
    """
    n = _require_canonical_path(x.graph)
    length = 2 * n - 1
    inverse = [0] * length
    for position, el in enumerate(x.elements, start=1):
        number = 2 * el.index - 1 if el.is_vertex else 2 * el.index
        inverse[number - 1] = position
    return tuple(inverse)


def from_updown_permutation(values: Sequence[int]) -> CSeq:
    """Inverse of :func:`to_updown_permutation`; builds the sequence on the
    canonical path with n = (len(values)+1)/2 vertices."""
    length = len(values)
    if length % 2 == 0:
        raise ValueError("up-down input must have odd length")
    if sorted(values) != list(range(1, length + 1)):
        raise ValueError(f"input is not a permutation of 1..{length}")
    if not is_updown(values):
        raise ValueError("input permutation is not up-down")
    n = (length + 1) // 2
    sequence: list[Element] = [Element.vertex(1)] * length
    for number, position in enumerate(values, start=1):
        element = (
            Element.vertex((number + 1) // 2) if number % 2 else Element.edge(number // 2)
        )
        sequence[position - 1] = element
    return CSeq(build_family(f"path:{n}"), tuple(sequence))


# ---------------------------------------------------------------------------
# Vertices-first sequences


def vertices_first_sequence(
    g: Graph,
    vertex_order: Sequence[int] | None = None,
    edge_order: Sequence[int] | None = None,
) -> CSeq:
    """All vertices first, then all edges; always valid.

    Once the vertex block is fixed, the total cost does not depend on the
    edge order: swapping adjacent edges moves one cost down by 2 and the
    other up by 2.
    """
    vertex_order = tuple(vertex_order) if vertex_order is not None else tuple(
        range(1, g.p + 1)
    )
    edge_order = tuple(edge_order) if edge_order is not None else tuple(
        range(1, g.q + 1)
    )
    if sorted(vertex_order) != list(range(1, g.p + 1)):
        raise ValueError("vertex_order is not a permutation of 1..p")
    if sorted(edge_order) != list(range(1, g.q + 1)):
        raise ValueError("edge_order is not a permutation of 1..q")
    elements = [Element.vertex(v) for v in vertex_order] + [
        Element.edge(j) for j in edge_order
    ]
    return CSeq(g, tuple(elements))


# ---------------------------------------------------------------------------
# Text forms


def parse_sequence(text: str) -> tuple[Element, ...]:
    """Parse whitespace-separated element tokens, e.g. ``"v1 v2 e1 v3 e2"``."""
    return tuple(Element.from_token(token) for token in text.split())


def format_sequence(elements: Sequence[Element]) -> str:
    return " ".join(str(el) for el in elements)


def short_form(elements: Sequence[Element], hub_zero: bool = False) -> str:
    """Compact display form: vertex labels as digits, edges as primed ids.

    With ``hub_zero`` the vertex labels are shifted down by one so a star's
    hub reads as 0.  Display only; not parseable back.
    """
    parts = []
    for el in elements:
        if el.is_vertex:
            parts.append(str(el.index - 1 if hub_zero else el.index))
        else:
            parts.append(f"{el.index}'")
    return "".join(parts)
