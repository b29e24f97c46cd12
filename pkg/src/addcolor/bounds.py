"""Lower and upper bounds for the additive chromatic number.

Lower bounds: the degree-distinct-edges characterization of eta = 1, the
true-twin bound (any set of pairwise true twins needs pairwise distinct
labels), and the clique bound ceil((d1+1)/(d2-|Q|+2)) evaluated over an
enumerated clique collection. Upper bounds: Delta^2 - Delta + 1 for any
graph, and |Q|-|T|+1 for split graphs, where T picks one clique vertex per
distinct degree value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, true_twin_classes

CLIQUE_ENUM_LIMIT = 16


@dataclass(frozen=True)
class BoundsReport:
    eta_lower: int
    eta_upper: int
    witnesses: tuple[tuple[str, object], ...]


def is_eta_one(g: Graph) -> bool:
    """Exact characterization: eta = 1 iff every edge joins vertices of
    different degree (vacuously true for edgeless graphs)."""
    deg = g.degrees()
    return all(deg[u] != deg[v] for u, v in g.edges())


def twin_lower_bound(g: Graph) -> int:
    """Size of the largest true-twin class (>= 1 for nonempty graphs)."""
    if g.n == 0:
        return 1
    return max(len(cls) for cls in true_twin_classes(g))


def largest_true_twin_class(g: Graph) -> tuple[int, ...]:
    classes = true_twin_classes(g)
    return tuple(max(classes, key=len)) if classes else ()


def clique_lower_bound(g: Graph, clique: Sequence[int]) -> int:
    """ceil((d1+1)/(d2-|Q|+2)) for a verified clique Q, with d1/d2 the
    smallest/largest degree inside Q."""
    verts = list(clique)
    if not verts:
        raise ValueError("clique must be non-empty")
    if len(set(verts)) != len(verts):
        raise ValueError("clique contains repeated vertices")
    for v in verts:
        g._check_vertex(v)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not g.masks[u] >> v & 1:
                raise ValueError(f"vertices {u} and {v} are not adjacent: not a clique")
    degrees = [g.degree(v) for v in verts]
    d1, d2 = min(degrees), max(degrees)
    return math.ceil((d1 + 1) / (d2 - len(verts) + 2))


def relaxed_clique_lower_bound(g: Graph, clique: Sequence[int]) -> int:
    """ceil(|Q|/(n-|Q|+1)), the weaker bound implied by the clique bound."""
    q = len(clique)
    return math.ceil(q / (g.n - q + 1))


def _all_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every non-empty clique, extended by larger-index common neighbors."""

    def rec(prefix: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        m = cand
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            higher = ~((1 << (u + 1)) - 1)
            prefix.append(u)
            yield from rec(prefix, cand & g.masks[u] & higher)
            prefix.pop()

    for v in range(g.n):
        higher = ~((1 << (v + 1)) - 1)
        yield from rec([v], g.masks[v] & higher)


def _greedy_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """One greedily grown clique per start vertex, with all its prefixes."""
    for v in range(g.n):
        clique = [v]
        cand = g.masks[v]
        yield (v,)
        while cand:
            u = max(
                _mask_bits(cand),
                key=lambda u: ((cand & g.masks[u]).bit_count(), -u),
            )
            clique.append(u)
            cand &= g.masks[u]
            yield tuple(clique)


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def best_clique_lower_bound(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum clique bound over an enumerated clique collection.

    Exhaustive for n <= 16, greedy beyond; the bound is valid for any clique,
    so an incomplete collection can only weaken the result.
    """
    if g.n == 0:
        return 1, ()
    source = _all_cliques(g) if g.n <= CLIQUE_ENUM_LIMIT else _greedy_cliques(g)
    best_value, best_clique = 0, ()
    for clique in source:
        value = clique_lower_bound(g, clique)
        if value > best_value:
            best_value, best_clique = value, clique
    return best_value, best_clique


def degree_upper_bound(g: Graph) -> int:
    """Delta^2 - Delta + 1 for Delta >= 2; 1 for edgeless graphs.

    At Delta = 1 the quadratic evaluates to 1, yet a lone edge needs two
    labels (its endpoints have equal neighborhood sums under any constant
    labeling), so the sound value there is 2: label the endpoints of each
    edge 1 and 2.
    """
    d = g.max_degree()
    if d == 1:
        return 2
    return d * d - d + 1


def split_recognize(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Split partition (Q, S) with Q a maximal clique, or None.

    Degree-sequence recognition: with degrees sorted non-increasing and
    h = max{i : d_i >= i-1}, the graph is split iff
    sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i, and the top-h vertices form a
    clique. The clique is then grown to maximality (at most one stable-set
    vertex can be adjacent to all of Q). Deterministic: degree ties break by
    vertex id.
    """
    n = g.n
    if n == 0:
        return (), ()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    h = max(i for i in range(1, n + 1) if d[i - 1] >= i - 1)
    if sum(d[:h]) != h * (h - 1) + sum(d[h:]):
        return None
    clique = order[:h]
    stable = order[h:]
    q_mask = 0
    for v in clique:
        q_mask |= 1 << v
    for v in clique:
        if g.masks[v] & q_mask != q_mask ^ (1 << v):
            raise RuntimeError("degree-sequence split partition failed clique check")
    for i, u in enumerate(stable):
        for v in stable[i + 1:]:
            if g.masks[u] >> v & 1:
                raise RuntimeError("degree-sequence split partition failed stable check")
    movers = [v for v in stable if g.masks[v] & q_mask == q_mask]
    if movers:
        v = min(movers)
        clique.append(v)
        stable.remove(v)
    return tuple(sorted(clique)), tuple(sorted(stable))


def max_degree_distinct_subset(g: Graph, clique: Sequence[int]) -> tuple[int, ...]:
    """One clique vertex per distinct degree value: a maximum-cardinality
    subset with pairwise distinct degrees."""
    chosen: dict[int, int] = {}
    for v in sorted(clique):
        chosen.setdefault(g.degree(v), v)
    return tuple(sorted(chosen.values()))


def split_upper_bound(g: Graph, clique: Sequence[int], stable: Sequence[int]) -> int:
    """|Q| - |T| + 1 for a split partition with Q maximal; always <= |Q|."""
    q_set, s_set = set(clique), set(stable)
    if q_set & s_set or len(q_set) + len(s_set) != g.n:
        raise ValueError("clique and stable set must partition the vertices")
    for i, u in enumerate(sorted(q_set)):
        for v in sorted(q_set)[i + 1:]:
            if not g.masks[u] >> v & 1:
                raise ValueError("Q is not a clique")
    for i, u in enumerate(sorted(s_set)):
        for v in sorted(s_set)[i + 1:]:
            if g.masks[u] >> v & 1:
                raise ValueError("S is not stable")
    q_mask = 0
    for v in q_set:
        q_mask |= 1 << v
    if any(g.masks[v] & q_mask == q_mask for v in s_set):
        raise ValueError("Q is not maximal")
    t = max_degree_distinct_subset(g, sorted(q_set))
    return len(q_set) - len(t) + 1


def multipartite_eta(part_sizes: Sequence[int]) -> int:
    """Additive chromatic number of the complete multipartite graph with the
    given non-increasing part sizes, via the backward recursion
    s_r = |V_r|, s_i = max(1 + s_{i+1}, |V_i|)."""
    parts = list(part_sizes)
    if not parts:
        raise ValueError("need at least one part")
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be >= 1")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("part sizes must be sorted non-increasing")
    r = len(parts)
    s = [0] * r
    s[r - 1] = parts[r - 1]
    for i in range(r - 2, -1, -1):
        s[i] = max(1 + s[i + 1], parts[i])
    value = max(math.ceil(s[i] / parts[i]) for i in range(r))
    assert value <= r
    return value


def multipartite_chain(part_sizes: Sequence[int]) -> list[int]:
    """The s_i sequence of the recursion (exposed for property checks)."""
    parts = list(part_sizes)
    r = len(parts)
    s = [0] * r
    s[r - 1] = parts[r - 1]
    for i in range(r - 2, -1, -1):
        s[i] = max(1 + s[i + 1], parts[i])
    return s


def combined_bounds(g: Graph) -> BoundsReport:
    """Aggregate bounds: eta_lower <= eta(g) <= eta_upper.

    The eta = 1 characterization short-circuits both bounds to 1; otherwise
    the lower bound is the best of the twin and clique bounds (at least 2,
    since some edge joins equal-degree vertices), and the upper bound the
    best of the degree and split bounds.
    """
    witnesses: list[tuple[str, object]] = []
    if is_eta_one(g):
        witnesses.append(("degree_distinct_edges", None))
        return BoundsReport(1, 1, tuple(witnesses))
    lower = 2
    witnesses.append(("equal_degree_edge", None))
    twin_class = largest_true_twin_class(g)
    if len(twin_class) > lower:
        lower = len(twin_class)
        witnesses.append(("true_twins", twin_class))
    clique_value, clique = best_clique_lower_bound(g)
    if clique_value > lower:
        lower = clique_value
        witnesses.append(("clique", clique))
    upper = degree_upper_bound(g)
    witnesses.append(("max_degree", g.max_degree()))
    split = split_recognize(g)
    if split is not None:
        q, s = split
        bound = split_upper_bound(g, q, s)
        if bound < upper:
            upper = bound
            witnesses.append(("split", (q, s)))
    assert lower <= upper
    return BoundsReport(lower, upper, tuple(witnesses))
