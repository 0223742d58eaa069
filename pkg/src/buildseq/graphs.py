"""Labeled multigraphs, standard families, and composition operators.

Vertices carry labels 1..p; edges are stored as an ordered list and edge j
means the j-th entry (1-based), so edge identity survives relabeling.
Simple mode (the default) rejects loops and parallel edges; multigraph mode
admits both, which the one- and two-vertex cycles need.

The element set of a graph is its vertices and edges together; elements are
addressed by :class:`Element` values such as ``v3`` or ``e1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence

from .posets import Poset, poset_from_hypergraph

__all__ = [
    "Element",
    "Graph",
    "build_family",
    "disjoint_union",
    "wedge",
    "relabel",
    "incidence_poset",
    "parse_graph",
    "format_graph",
    "MAX_FAMILY_SIZE",
]

#: Guard against absurd family parameters; compute limits are enforced per
#: operation, this only stops accidental gigantic allocations.
MAX_FAMILY_SIZE = 1_000_000


@total_ordering
@dataclass(frozen=True)
class Element:
    """A vertex or edge reference: kind ``"v"`` with index in 1..p, or
    kind ``"e"`` with index in 1..q.

    Ordering puts all vertices before all edges, each class by index; this
    is the lexicographic element order used by the enumerators.
    """

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("v", "e"):
            raise ValueError(f"element kind must be 'v' or 'e', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"element index must be >= 1, got {self.index}")

    @classmethod
    def vertex(cls, i: int) -> "Element":
        return cls("v", i)

    @classmethod
    def edge(cls, j: int) -> "Element":
        return cls("e", j)

    @classmethod
    def from_token(cls, token: str) -> "Element":
        """Parse a token such as ``v3`` or ``e12``."""
        if len(token) < 2 or token[0] not in ("v", "e") or not token[1:].isdigit():
            raise ValueError(f"bad element token {token!r}; expected v<i> or e<j>")
        return cls(token[0], int(token[1:]))

    @property
    def is_vertex(self) -> bool:
        return self.kind == "v"

    @property
    def is_edge(self) -> bool:
        return self.kind == "e"

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.kind == "v" else 1, self.index)

    def __lt__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class Graph:
    """Labeled graph with vertex set {1..p} and an ordered edge list.

    Edge endpoints are normalized to (min, max) pairs; a loop repeats its
    endpoint.  Edge j refers to ``edges[j-1]``.
    """

    p: int
    edges: tuple[tuple[int, int], ...] = ()
    multigraph: bool = False

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.p}")
        normalized = []
        for j, pair in enumerate(self.edges, start=1):
            u, w = pair
            u, w = int(u), int(w)
            if not (1 <= u <= self.p and 1 <= w <= self.p):
                raise ValueError(f"edge {j} endpoints {{{u},{w}}} outside 1..{self.p}")
            normalized.append((u, w) if u <= w else (w, u))
        object.__setattr__(self, "edges", tuple(normalized))
        if not self.multigraph:
            seen: set[tuple[int, int]] = set()
            for j, (u, w) in enumerate(self.edges, start=1):
                if u == w:
                    raise ValueError(f"edge {j} is a loop at {u}; requires multigraph mode")
                if (u, w) in seen:
                    raise ValueError(
                        f"edge {j} duplicates {{{u},{w}}}; requires multigraph mode"
                    )
                seen.add((u, w))

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def element_count(self) -> int:
        return self.p + len(self.edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        if not 1 <= edge_id <= self.q:
            raise ValueError(f"edge id {edge_id} outside 1..{self.q}")
        return self.edges[edge_id - 1]

    def is_loop(self, edge_id: int) -> bool:
        u, w = self.endpoints(edge_id)
        return u == w

    def degree(self, v: int) -> int:
        """Standard degree; a loop contributes 2."""
        if not 1 <= v <= self.p:
            raise ValueError(f"vertex {v} outside 1..{self.p}")
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        out = [0] * (self.p + 1)
        for u, w in self.edges:
            out[u] += 1
            out[w] += 1
        return out[1:]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Ids of edges touching v; a loop appears once."""
        if not 1 <= v <= self.p:
            raise ValueError(f"vertex {v} outside 1..{self.p}")
        return tuple(j for j, (u, w) in enumerate(self.edges, start=1) if v in (u, w))

    def min_degree(self) -> int:
        if self.p == 0:
            raise ValueError("no vertices")
        return min(self.degrees())

    def max_degree(self) -> int:
        if self.p == 0:
            raise ValueError("no vertices")
        return max(self.degrees())

    def elements(self) -> list[Element]:
        """All elements in lexicographic order: v1..vp, then e1..eq."""
        return [Element.vertex(i) for i in range(1, self.p + 1)] + [
            Element.edge(j) for j in range(1, self.q + 1)
        ]

    def is_connected(self) -> bool:
        if self.p <= 1:
            return True
        adjacency: list[list[int]] = [[] for _ in range(self.p + 1)]
        for u, w in self.edges:
            adjacency[u].append(w)
            adjacency[w].append(u)
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.p

    def component_count(self) -> int:
        parent = list(range(self.p + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.p
        for u, w in self.edges:
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
                count -= 1
        return count


# ---------------------------------------------------------------------------
# Families


def _path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def _star(n: int) -> Graph:
    return Graph(n + 1, tuple((1, i + 1) for i in range(1, n + 1)))


def _cycle(n: int) -> Graph:
    if n == 1:
        return Graph(1, ((1, 1),), multigraph=True)
    if n == 2:
        return Graph(2, ((1, 2), (1, 2)), multigraph=True)
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((n, 1),))


def _complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def build_family(spec: str) -> Graph:
    """Build a graph from a textual constructor.

    Grammar::

        spec    := base ':' n
                 | 'union(' spec (',' spec)* ')'
                 | 'wedge(' spec '@' v (',' spec '@' v)* ')'
        base    := 'path' | 'star' | 'cycle' | 'complete'

    Canonical labelings: path vertices 1..n in path order with edge i
    joining {i, i+1}; star hub 1 with edge i joining {1, i+1}; cycle as the
    path plus closing edge n joining {n, 1}; complete with edges in
    lexicographic endpoint order.  ``cycle:1`` and ``cycle:2`` come out as
    multigraphs (a loop, resp. a doubled edge).
    """
    graph, rest = _parse_spec(spec.strip())
    if rest:
        raise ValueError(f"trailing text {rest!r} after family spec")
    return graph


def _parse_spec(text: str) -> tuple[Graph, str]:
    text = text.lstrip()
    for combiner in ("union", "wedge"):
        if text.startswith(combiner + "("):
            return _parse_combiner(combiner, text[len(combiner) + 1 :])
    if ":" not in text:
        raise ValueError(f"malformed family spec {text!r}")
    name, _, arg = text.partition(":")
    name = name.strip()
    if name not in ("path", "star", "cycle", "complete"):
        raise ValueError(f"unknown family {name!r}")
    digits = ""
    for ch in arg:
        if ch.isdigit():
            digits += ch
        else:
            break
    rest = arg[len(digits) :]
    if not digits:
        raise ValueError(f"family spec {text!r} is missing its size")
    n = int(digits)
    if n < 1:
        raise ValueError(f"family size must be >= 1, got {n}")
    if n > MAX_FAMILY_SIZE:
        raise ValueError(f"family size {n} exceeds the guard {MAX_FAMILY_SIZE}")
    builder = {"path": _path, "star": _star, "cycle": _cycle, "complete": _complete}[name]
    return builder(n), rest


def _parse_combiner(kind: str, text: str) -> tuple[Graph, str]:
    parts: list[tuple[Graph, int]] = []
    while True:
        graph, rest = _parse_spec(text)
        rest = rest.lstrip()
        base = 1
        if kind == "wedge":
            if not rest.startswith("@"):
                raise ValueError("wedge parts need a base point, e.g. wedge(path:2@1, ...)")
            digits = ""
            for ch in rest[1:]:
                if ch.isdigit():
                    digits += ch
                else:
                    break
            if not digits:
                raise ValueError(f"bad base point in {rest!r}")
            base = int(digits)
            rest = rest[1 + len(digits) :].lstrip()
        parts.append((graph, base))
        if rest.startswith(","):
            text = rest[1:]
            continue
        if rest.startswith(")"):
            rest = rest[1:]
            break
        raise ValueError(f"expected ',' or ')' in family spec near {rest!r}")
    if kind == "union":
        return disjoint_union([g for g, _ in parts]), rest
    return wedge(parts), rest


# ---------------------------------------------------------------------------
# Composition operators


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union with block-wise shifted labels and edge ids."""
    if not graphs:
        raise ValueError("disjoint_union needs at least one graph")
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, w + offset) for u, w in g.edges)
        offset += g.p
    return Graph(offset, tuple(edges), multigraph=any(g.multigraph for g in graphs))


def wedge(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Identify one base vertex of every part into vertex 1 of the result.

    Non-base vertices keep their relative order and are shifted block-wise,
    so the result has 1 + sum(part element counts - 1) elements.
    """
    if not parts:
        raise ValueError("wedge needs at least one part")
    edges: list[tuple[int, int]] = []
    offset = 1
    for g, base in parts:
        if not 1 <= base <= g.p:
            raise ValueError(f"base vertex {base} outside 1..{g.p}")
        mapping = {base: 1}
        next_label = offset + 1
        for v in range(1, g.p + 1):
            if v != base:
                mapping[v] = next_label
                next_label += 1
        edges.extend((mapping[u], mapping[w]) for u, w in g.edges)
        offset += g.p - 1
    return Graph(offset, tuple(edges), multigraph=any(g.multigraph for g, _ in parts))


def relabel(g: Graph, sigma: Sequence[int]) -> Graph:
    """Rename vertex i to sigma[i-1]; edge ids are preserved."""
    if sorted(sigma) != list(range(1, g.p + 1)):
        raise ValueError("sigma is not a permutation of 1..p")
    return Graph(
        g.p,
        tuple((sigma[u - 1], sigma[w - 1]) for u, w in g.edges),
        multigraph=g.multigraph,
    )


def incidence_poset(g: Graph) -> Poset:
    """Height-2 poset with vertices minimal and each edge above its endpoints.

    A loop yields a single cover.  Elements 0..p-1 are the vertices, p..p+q-1
    the edges, matching the order of :meth:`Graph.elements`.
    """
    return poset_from_hypergraph(g.p, [set(pair) for pair in g.edges])


# ---------------------------------------------------------------------------
# Text format


def parse_graph(text: str) -> Graph:
    """Read the graph text format: first line ``p q``, then q lines ``u w``
    (1-based; a loop is ``u u``).  ``#`` starts a comment line.

    Files containing loops or parallel edges come back in multigraph mode.
    """
    lines = [
        stripped
        for raw in text.splitlines()
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph description")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"first line must be 'p q', got {lines[0]!r}")
    p, q = int(head[0]), int(head[1])
    if len(lines) - 1 != q:
        raise ValueError(f"expected {q} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u w', got {line!r}")
        u, w = int(parts[0]), int(parts[1])
        edges.append((u, w) if u <= w else (w, u))
    plain = all(u != w for u, w in edges) and len(set(edges)) == len(edges)
    return Graph(p, tuple(edges), multigraph=not plain)


def format_graph(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"]
    lines.extend(f"{u} {w}" for u, w in g.edges)
    return "\n".join(lines) + "\n"
