"""Finite posets given by cover relations, with exact linear-extension counting.

A linear extension is a total order on the elements in which every element
is preceded by everything below it in the partial order.  Counting walks the
lattice of downsets: the number of extensions of a downset A equals the sum
over maximal elements x of A of the count for A minus x.  The memo table is
keyed by the downset bitmask and lives only for the duration of one call.

Elements are 0..n-1.  The convention throughout is that smaller poset
elements appear *earlier* in an extension; no reversed reading is supported.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import ResourceLimitError

__all__ = [
    "Poset",
    "count_linear_extensions",
    "poset_from_hypergraph",
    "poset_from_faces",
    "relabel_poset",
    "parse_poset",
    "format_poset",
    "DEFAULT_STATE_LIMIT",
]

DEFAULT_STATE_LIMIT = 1 << 26


@dataclass(frozen=True)
class Poset:
    """A finite order on elements 0..n-1 described by its cover pairs.

    Construction validates that the cover relation is acyclic and
    irredundant (no cover pair already implied by a longer chain).
    """

    n: int
    covers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"element count must be >= 0, got {self.n}")
        covers = tuple((int(lo), int(hi)) for lo, hi in self.covers)
        object.__setattr__(self, "covers", covers)
        seen: set[tuple[int, int]] = set()
        for lo, hi in covers:
            if not (0 <= lo < self.n and 0 <= hi < self.n):
                raise ValueError(f"cover ({lo},{hi}) out of range for n={self.n}")
            if lo == hi:
                raise ValueError(f"cover ({lo},{hi}) relates an element to itself")
            if (lo, hi) in seen:
                raise ValueError(f"duplicate cover ({lo},{hi})")
            seen.add((lo, hi))
        self._check_acyclic()
        self._check_irredundant()

    def _check_acyclic(self) -> None:
        indeg = [0] * self.n
        above = self.upper_adjacency()
        for _, hi in self.covers:
            indeg[hi] += 1
        queue = [x for x in range(self.n) if indeg[x] == 0]
        done = 0
        while queue:
            x = queue.pop()
            done += 1
            for y in above[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if done != self.n:
            raise ValueError("cover relation contains a cycle")

    def _check_irredundant(self) -> None:
        above = self.upper_adjacency()
        for lo, hi in self.covers:
            # A second route from lo up to hi would make the direct cover redundant.
            stack = [y for y in above[lo] if y != hi]
            visited = set(stack)
            while stack:
                x = stack.pop()
                if x == hi:
                    raise ValueError(
                        f"cover ({lo},{hi}) is implied by transitivity and must be omitted"
                    )
                for y in above[x]:
                    if y not in visited:
                        visited.add(y)
                        stack.append(y)

    def upper_adjacency(self) -> list[list[int]]:
        """Immediate successors of each element."""
        above: list[list[int]] = [[] for _ in range(self.n)]
        for lo, hi in self.covers:
            above[lo].append(hi)
        return above


def count_linear_extensions(poset: Poset, *, max_states: int = DEFAULT_STATE_LIMIT) -> int:
    """Exact number of linear extensions of ``poset``.

    Memoized recursion over downsets; raises :class:`ResourceLimitError` when
    the memo would exceed ``max_states`` distinct entries.
    """
    n = poset.n
    if n == 0:
        return 1
    up = [0] * n
    for lo, hi in poset.covers:
        up[lo] |= 1 << hi
    memo: dict[int, int] = {0: 1}
    limit_hint = max(1000, 4 * n)
    if sys.getrecursionlimit() < n + limit_hint:
        sys.setrecursionlimit(n + limit_hint)

    def count(region: int) -> int:
        cached = memo.get(region)
        if cached is not None:
            return cached
        total = 0
        rest = region
        while rest:
            bit = rest & -rest
            x = bit.bit_length() - 1
            if not up[x] & region:  # x is maximal within the downset
                total += count(region ^ bit)
            rest ^= bit
        if len(memo) >= max_states:
            raise ResourceLimitError(
                f"linear-extension memo exceeded {max_states} states; "
                "raise max_states to continue"
            )
        memo[region] = total
        return total

    return count((1 << n) - 1)


def poset_from_hypergraph(p: int, hyperedges: Sequence[Iterable[int]]) -> Poset:
    """Two-layer poset of a hypergraph: vertices minimal, each hyperedge above
    exactly its members.

    Vertices are labeled 1..p on input and become elements 0..p-1; the i-th
    hyperedge becomes element p+i.  Repeated members within one hyperedge
    collapse, so a loop contributes a single cover.
    """
    if p < 0:
        raise ValueError(f"vertex count must be >= 0, got {p}")
    covers: list[tuple[int, int]] = []
    for i, members in enumerate(hyperedges):
        distinct = sorted(set(members))
        if not distinct:
            raise ValueError(f"hyperedge {i + 1} is empty")
        for v in distinct:
            if not 1 <= v <= p:
                raise ValueError(f"hyperedge {i + 1} member {v} outside 1..{p}")
            covers.append((v - 1, p + i))
    return Poset(p + len(hyperedges), tuple(covers))


def poset_from_faces(faces: Sequence[tuple[Hashable, Iterable[int]]]) -> Poset:
    """Face poset of a complex, ordered by strict containment of vertex sets.

    ``faces`` lists (face id, member vertices); vertices themselves must be
    present as singleton faces.  The i-th face becomes element i, and covers
    are the immediate strict containments.  Faces with identical vertex sets
    (parallel cells) are allowed and stay incomparable.
    """
    ids = [fid for fid, _ in faces]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate face ids")
    vertex_sets: list[frozenset[int]] = []
    for fid, members in faces:
        fs = frozenset(members)
        if not fs:
            raise ValueError(f"face {fid!r} has no vertices")
        vertex_sets.append(fs)
    present = set(vertex_sets)
    for fid, fs in zip(ids, vertex_sets):
        for v in fs:
            if frozenset([v]) not in present:
                raise ValueError(
                    f"face {fid!r} uses vertex {v} but the singleton face is missing"
                )
    covers: list[tuple[int, int]] = []
    m = len(faces)
    for a in range(m):
        for b in range(m):
            if a == b or not vertex_sets[a] < vertex_sets[b]:
                continue
            immediate = not any(
                vertex_sets[a] < vertex_sets[c] < vertex_sets[b] for c in range(m)
            )
            if immediate:
                covers.append((a, b))
    return Poset(m, tuple(covers))


def relabel_poset(poset: Poset, perm: Sequence[int]) -> Poset:
    """Isomorphic copy with element x renamed to perm[x]."""
    if sorted(perm) != list(range(poset.n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    return Poset(poset.n, tuple((perm[lo], perm[hi]) for lo, hi in poset.covers))


def parse_poset(text: str) -> Poset:
    """Read the poset text format: first line ``n``, then one ``l u`` cover
    pair per line, 0-based.  ``#`` starts a comment line."""
    lines = [
        stripped
        for raw in text.splitlines()
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    if not lines:
        raise ValueError("empty poset description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the element count, got {lines[0]!r}") from None
    covers = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"cover line must be 'l u', got {line!r}")
        covers.append((int(parts[0]), int(parts[1])))
    return Poset(n, tuple(covers))


def format_poset(poset: Poset) -> str:
    lines = [str(poset.n)]
    lines.extend(f"{lo} {hi}" for lo, hi in poset.covers)
    return "\n".join(lines) + "\n"
