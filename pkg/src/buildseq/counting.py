"""Counting routes for construction sequences.

Several independent routes compute the same quantities so they can check
one another:

* a permutation-filter oracle that tries every ordering of the elements,
* a subset dynamic program over (placed vertices, number of placed edges),
* closed forms and recursions for paths, stars, and cycles,
* composition laws for disjoint unions and wedges, and
* the integer-sequence helpers behind the closed forms (zigzag numbers via
  the boustrophedon triangle, Bernoulli numbers, tremolo numbers).

All counts are exact Python integers; the Bernoulli route is the only one
touching rationals and asserts that its final division is exact.
"""
from __future__ import annotations

import itertools
import math
import sys
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .errors import ResourceLimitError
from .graphs import Element, Graph
from .sequences import CSeq

__all__ = [
    "count_bruteforce",
    "count_dp",
    "count_based",
    "enumerate_csequences",
    "star_count",
    "star_count_recursive",
    "path_count_recursive",
    "ZigzagNumbers",
    "zigzag_numbers",
    "bernoulli_number",
    "path_count_bernoulli",
    "cycle_count_bernoulli",
    "tremolo_numbers",
    "union_count",
    "wedge_count",
    "DEFAULT_ELEMENT_LIMIT",
    "DEFAULT_VERTEX_LIMIT",
    "DEFAULT_STATE_LIMIT",
]

DEFAULT_ELEMENT_LIMIT = 11
DEFAULT_VERTEX_LIMIT = 24
DEFAULT_STATE_LIMIT = 1 << 26


def _endpoint_masks(g: Graph) -> list[int]:
    """Per element code, the set of vertex codes that must already be placed.

    Element codes are 0..p-1 for vertices and p..p+q-1 for edges, matching
    lexicographic element order.
    """
    masks = [0] * g.element_count
    for j, (u, w) in enumerate(g.edges):
        masks[g.p + j] = (1 << (u - 1)) | (1 << (w - 1))
    return masks


def _code_to_element(g: Graph, code: int) -> Element:
    return Element.vertex(code + 1) if code < g.p else Element.edge(code - g.p + 1)


def _codes_to_cseq(g: Graph, codes: Iterable[int]) -> CSeq:
    return CSeq(g, tuple(_code_to_element(g, c) for c in codes))


# ---------------------------------------------------------------------------
# Oracle and dynamic program


def count_bruteforce(g: Graph, *, element_limit: int = DEFAULT_ELEMENT_LIMIT) -> int:
    """Ground-truth oracle: run through all (p+q)! orderings of the elements
    and count the ones where every edge follows both endpoints."""
    total_elements = g.element_count
    if total_elements > element_limit:
        raise ResourceLimitError(
            f"{total_elements} elements exceed the brute-force limit {element_limit}"
        )
    need = _endpoint_masks(g)
    count = 0
    for perm in itertools.permutations(range(total_elements)):
        seen = 0
        for code in perm:
            if need[code] & ~seen:
                break
            seen |= 1 << code
        else:
            count += 1
    return count


def _dp_completions(
    g: Graph,
    initial_vertices: int,
    *,
    vertex_limit: int,
    max_states: int,
) -> int:
    """Number of ways to extend a partial build to a full sequence.

    State is (set of placed vertices, number of placed edges): which edges
    are placed does not matter because every placeable-but-unplaced edge is
    interchangeable from here on.
    """
    if g.p > vertex_limit:
        raise ResourceLimitError(f"{g.p} vertices exceed the DP limit {vertex_limit}")
    masks = _endpoint_masks(g)
    edge_masks = masks[g.p :]
    # vertex-set mask -> number of edge slots whose endpoints are all present
    # (edge records count with multiplicity, so doubled edges and loops work)
    avail_cache: dict[int, int] = {}
    full = (1 << g.p) - 1
    q = g.q
    memo: dict[tuple[int, int], int] = {}
    depth_needed = g.element_count + 100
    if sys.getrecursionlimit() < depth_needed + 1000:
        sys.setrecursionlimit(depth_needed + 1000)

    def available_edges(placed: int) -> int:
        cached = avail_cache.get(placed)
        if cached is None:
            cached = sum(1 for m in edge_masks if not m & ~placed)
            avail_cache[placed] = cached
        return cached

    def completions(placed: int, edges_done: int) -> int:
        if placed == full and edges_done == q:
            return 1
        key = (placed, edges_done)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        available = available_edges(placed)
        if edges_done < available:
            total += (available - edges_done) * completions(placed, edges_done + 1)
        remaining = full & ~placed
        while remaining:
            bit = remaining & -remaining
            total += completions(placed | bit, edges_done)
            remaining ^= bit
        if len(memo) >= max_states:
            raise ResourceLimitError(
                f"count DP exceeded {max_states} states; raise max_states to continue"
            )
        memo[key] = total
        return total

    return completions(initial_vertices, 0)


def count_dp(
    g: Graph,
    *,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    max_states: int = DEFAULT_STATE_LIMIT,
) -> int:
    """Exact construction-sequence count by subset dynamic programming."""
    return _dp_completions(g, 0, vertex_limit=vertex_limit, max_states=max_states)


def count_based(
    g: Graph,
    base: int,
    *,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    max_states: int = DEFAULT_STATE_LIMIT,
) -> int:
    """Count of sequences whose first element is the vertex ``base``."""
    if not 1 <= base <= g.p:
        raise ValueError(f"base vertex {base} outside 1..{g.p}")
    return _dp_completions(
        g, 1 << (base - 1), vertex_limit=vertex_limit, max_states=max_states
    )


# ---------------------------------------------------------------------------
# Enumeration


def _iter_codes(g: Graph, *, element_limit: int = DEFAULT_ELEMENT_LIMIT) -> Iterator[tuple[int, ...]]:
    """All valid sequences as element-code tuples, in lexicographic order."""
    total_elements = g.element_count
    if total_elements > element_limit:
        raise ResourceLimitError(
            f"{total_elements} elements exceed the enumeration limit {element_limit}"
        )
    need = _endpoint_masks(g)
    prefix: list[int] = []

    def extend(seen: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == total_elements:
            yield tuple(prefix)
            return
        for code in range(total_elements):
            if not seen & (1 << code) and not need[code] & ~seen:
                prefix.append(code)
                yield from extend(seen | (1 << code))
                prefix.pop()

    yield from extend(0)


def enumerate_csequences(
    g: Graph, *, element_limit: int = DEFAULT_ELEMENT_LIMIT
) -> Iterator[CSeq]:
    """Stream every construction sequence in lexicographic element order."""
    for codes in _iter_codes(g, element_limit=element_limit):
        yield _codes_to_cseq(g, codes)


# ---------------------------------------------------------------------------
# Family closed forms and recursions


def star_count(n: int) -> int:
    """Count for the star with n peripheral vertices: 2^n * (n!)^2."""
    if n < 0:
        raise ValueError(f"star size must be >= 0, got {n}")
    return 2**n * math.factorial(n) ** 2


def star_count_recursive(n: int) -> int:
    """Same quantity by the last-edge recursion: f(n) = 2*n^2 * f(n-1).

    Removing the final edge and the leaf it exposes leaves a sequence for
    the next smaller star; the leaf can sit anywhere among the remaining
    2n slots and any of the n edges can be last.
    """
    if n < 0:
        raise ValueError(f"star size must be >= 0, got {n}")
    value = 1
    for k in range(1, n + 1):
        value *= 2 * k * k
    return value


def path_count_recursive(n: int) -> int:
    """Count for the n-vertex path by splitting at the last-placed edge.

    f(1) = 1 and f(n) = sum over k of f(k) f(n-k) C(2n-2, 2k-1): the final
    edge splits the path into two subpaths whose sequences interleave freely
    in the remaining positions.
    """
    if n < 1:
        raise ValueError(f"path size must be >= 1, got {n}")
    counts = [0, 1]
    for m in range(2, n + 1):
        counts.append(
            sum(
                counts[k] * counts[m - k] * math.comb(2 * m - 2, 2 * k - 1)
                for k in range(1, m)
            )
        )
    return counts[n]


class ZigzagNumbers(NamedTuple):
    """Tangent and secant numbers; ``tangent[n]`` is defined for n >= 1
    (index 0 is a placeholder 0), ``secant[n]`` for n >= 0."""

    tangent: list[int]
    secant: list[int]


def zigzag_numbers(n_max: int) -> ZigzagNumbers:
    """Zigzag numbers by the boustrophedon (Seidel) triangle.

    The zigzag sequence a(k) counts up-down permutations of [k]; odd indices
    give the tangent numbers tangent[n] = a(2n-1) and even indices the
    secant numbers secant[n] = a(2n).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    highest = 2 * n_max
    zigzag = [1]
    row = [1]
    for k in range(1, highest + 1):
        previous = row
        row = [0]
        for i in range(k):
            row.append(row[-1] + previous[k - 1 - i])
        zigzag.append(row[-1])
    tangent = [0] + [zigzag[2 * n - 1] for n in range(1, n_max + 1)]
    secant = [zigzag[2 * n] for n in range(0, n_max + 1)]
    return ZigzagNumbers(tangent, secant)


def bernoulli_number(m: int) -> Fraction:
    """Exact Bernoulli number B_m for even m with 2 <= m <= 40.

    Uses the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0 with the
    convention B_1 = -1/2 (irrelevant to even indices beyond the shared
    recurrence).
    """
    if m % 2 != 0 or not 2 <= m <= 40:
        raise ValueError(f"supported range is even m with 2 <= m <= 40, got {m}")
    values = [Fraction(1)]
    for k in range(1, m + 1):
        acc = Fraction(0)
        for j in range(k):
            acc += math.comb(k + 1, j) * values[j]
        values.append(-acc / (k + 1))
    return values[m]


def path_count_bernoulli(n: int) -> int:
    """Path count through Bernoulli numbers: (1/n) C(2^(2n), 2) |B_(2n)|.

    The division must come out exact; a remainder signals a bug.
    """
    if not 1 <= n <= 20:
        raise ValueError(f"supported range is 1 <= n <= 20, got {n}")
    value = Fraction(math.comb(2 ** (2 * n), 2)) * abs(bernoulli_number(2 * n)) / n
    if value.denominator != 1:
        raise ArithmeticError(f"path count for n={n} did not divide exactly: {value}")
    return value.numerator


def cycle_count_bernoulli(n: int) -> int:
    """Cycle count through Bernoulli numbers: C(2^(2n), 2) |B_(2n)|.

    Covers the one- and two-vertex multigraph cycles as well.
    """
    if not 1 <= n <= 20:
        raise ValueError(f"supported range is 1 <= n <= 20, got {n}")
    value = Fraction(math.comb(2 ** (2 * n), 2)) * abs(bernoulli_number(2 * n))
    if value.denominator != 1:
        raise ArithmeticError(f"cycle count for n={n} did not divide exactly: {value}")
    return value.numerator


def tremolo_numbers(r_max: int) -> list[int]:
    """Tremolo numbers J_0..J_r_max (R. Street's alternating sequences that
    begin with 1 and end with 0).

    J_0 = 0, J_1 = 1, J_2 = 0, then J_r = sum_m C(r-1, m) J_m J_{r-1-m}.
    The even-indexed values vanish and J_{2n-1} equals the n-vertex path
    count.  J_0 = 0 is forced: taking J_0 = 1 would give J_4 = 4 != 0.
    """
    if r_max < 0:
        raise ValueError(f"r_max must be >= 0, got {r_max}")
    values = [0, 1, 0]
    for r in range(3, r_max + 1):
        values.append(
            sum(
                math.comb(r - 1, m) * values[m] * values[r - 1 - m]
                for m in range(r)
            )
        )
    return values[: r_max + 1]


# ---------------------------------------------------------------------------
# Composition laws


def _multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    value = math.factorial(sum(parts))
    for k in parts:
        value //= math.factorial(k)
    return value


def union_count(parts: Iterable[tuple[int, int]]) -> int:
    """Count for a disjoint union from per-part (count, element count) pairs.

    The parts' sequences shuffle freely: multiply the counts and the
    multinomial of the element counts.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("union_count needs at least one part")
    if any(length < 1 for _, length in parts):
        raise ValueError("part element counts must be >= 1")
    value = _multinomial(length for _, length in parts)
    for count, _ in parts:
        value *= count
    return value


def wedge_count(parts: Iterable[tuple[int, int]]) -> int:
    """Based count at a wedge point from per-part (based count, element
    count) pairs.

    The shared base vertex is placed first; the remaining elements of each
    part (one fewer than its element count) shuffle freely, so the
    multinomial runs over the element counts minus one.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("wedge_count needs at least one part")
    if any(length < 1 for _, length in parts):
        raise ValueError("part element counts must be >= 1")
    value = _multinomial(length - 1 for _, length in parts)
    for count, _ in parts:
        value *= count
    return value
