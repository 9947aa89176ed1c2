"""τ_0 of graphs, in-degree sequences, perfect elimination orderings and Billera-Lee graphs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .complex import SimplicialComplex, bits, popcount

GRAPH_CAP = 24


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Edges as 0-based pairs."""
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def of_complex(cls, C: SimplicialComplex) -> "Graph":
        return cls(C.n, tuple(C.adjacency()))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a]) if a < b]

    def is_clique(self, S: int) -> bool:
        return all((S & ~(1 << v)) & ~self.adj[v] == 0 for v in bits(S))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(self.n, [(pos[a], pos[b]) for a, b in self.edges()])


def components(G: Graph, W: int) -> int:
    """Connected components of G[W] by union-find."""
    parent = {v: v for v in bits(W)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(parent)
    for a in bits(W):
        for b in bits(G.adj[a] & W):
            if a < b:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    count -= 1
    return count


def _weighted_tau0(sums: Sequence[int], n: int) -> Fraction:
    total = Fraction(0)
    for j, s in enumerate(sums):
        if s:
            total += Fraction(int(s), comb(n, j))
    return total / (n + 1)


def tau0_graph_reference(G: Graph) -> Fraction:
    """τ_0 by union-find on every induced subgraph (slow reference)."""
    sums = [0] * (G.n + 1)
    for W in range(1, 1 << G.n):
        sums[popcount(W)] += components(G, W) - 1
    return _weighted_tau0(sums, G.n)


def component_counts(G: Graph) -> np.ndarray:
    """Number of components of G[W] for every W, as an int64 array of length 2^n.

    Minimum-label propagation along edges, run on all subsets at once.
    """
    n = G.n
    if n > GRAPH_CAP:
        raise ValueError(f"graph with {n} vertices exceeds cap {GRAPH_CAP}")
    W = np.arange(1 << n, dtype=np.int64)
    inside = [((W >> v) & 1).astype(bool) for v in range(n)]
    lab = [np.where(inside[v], v, n).astype(np.int8) for v in range(n)]
    edges = [(a, b, inside[a] & inside[b]) for a, b in G.edges()]
    changed = True
    while changed:
        changed = False
        for a, b, both in edges:
            m = np.minimum(lab[a], lab[b])
            if not changed and (np.any(m[both] != lab[a][both]) or np.any(m[both] != lab[b][both])):
                changed = True
            np.copyto(lab[a], m, where=both)
            np.copyto(lab[b], m, where=both)
    counts = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        counts += inside[v] & (lab[v] == v)
    return counts


def popcounts(n: int) -> np.ndarray:
    W = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        pc += (W >> v) & 1
    return pc


def tau0_graph(G: Graph) -> Fraction:
    """Exact τ_0 of a graph, vectorised over all induced subgraphs."""
    n = G.n
    c = component_counts(G)
    b0 = np.where(c > 0, c - 1, 0)
    pc = popcounts(n)
    sums = [int(b0[pc == j].sum()) for j in range(n + 1)]
    return _weighted_tau0(sums, n)


# in-degree sequences ----------------------------------------------------


@dataclass(frozen=True)
class InDegreeSequence:
    order: tuple[int, ...]
    deltas: tuple[int, ...]


def in_degrees(G: Graph, order: Sequence[int]) -> InDegreeSequence:
    seen = 0
    deltas = []
    for v in order:
        deltas.append(popcount(G.adj[v] & seen))
        seen |= 1 << v
    return InDegreeSequence(tuple(order), tuple(deltas))


def bound_from_deltas(deltas: Sequence[int]) -> Fraction:
    n = len(deltas)
    return Fraction(1, n + 1) + sum(Fraction(1, (d + 1) * (d + 2)) for d in deltas) - 1


@dataclass(frozen=True)
class PeoBound:
    bound: Fraction
    is_equality: bool
    deltas: tuple[int, ...]


def is_peo(G: Graph, order: Sequence[int]) -> bool:
    seen = 0
    for v in order:
        back = G.adj[v] & seen
        for u in bits(back):
            if (back & ~(1 << u)) & ~G.adj[u]:
                return False
        seen |= 1 << v
    return True


def peo_bound(G: Graph, order: Sequence[int]) -> PeoBound:
    """Upper bound on τ_0 from the in-degree sequence of ``order``.

    Equality holds exactly when every vertex's earlier neighbours form a clique.
    """
    if sorted(order) != list(range(G.n)):
        raise ValueError("order must be a permutation of the vertices")
    seq = in_degrees(G, order)
    return PeoBound(bound_from_deltas(seq.deltas), is_peo(G, order), seq.deltas)


def step_bound(delta: int, i: int) -> Fraction:
    """Upper bound on τ_0(G_i) - τ_0(G_{i-1}) for the i-th vertex (1-based)."""
    return Fraction(1, (delta + 1) * (delta + 2)) - Fraction(1, i * (i + 1))


def max_cardinality_search(G: Graph) -> list[int]:
    """Maximum cardinality search order, ties broken by smallest label."""
    weight = [0] * G.n
    done = 0
    order = []
    for _ in range(G.n):
        best = max((v for v in range(G.n) if not done >> v & 1), key=lambda v: (weight[v], -v))
        order.append(best)
        done |= 1 << best
        for u in bits(G.adj[best] & ~done):
            weight[u] += 1
    return order


def find_peo(G: Graph) -> list[int] | None:
    """An ordering where each vertex's earlier neighbours form a clique, or None if G is not chordal."""
    order = max_cardinality_search(G)
    return order if is_peo(G, order) else None


def d_dim_order(C: SimplicialComplex) -> InDegreeSequence:
    """Vertex ordering of a pure strongly connected complex with in-degrees (0,1,...,d,k_1,...), k_i ≥ d.

    Starts from the lexicographically first facet, then repeatedly adds the
    smallest vertex that completes a facet adjacent to one already inside.
    """
    if not C.is_pure() or not C.is_strongly_connected() or C.is_empty:
        raise ValueError("need a pure strongly connected complex")
    first = min(C.facets, key=bits)
    order = bits(first)
    inside = first
    ridge_map = C.ridges()
    target = C.vertex_mask
    while inside != target:
        cand = None
        for F in C.facets:
            if F & inside != F:
                continue
            for v in bits(F):
                for G in ridge_map[F & ~(1 << v)]:
                    x = G & ~F
                    if x & ~inside:
                        xv = x.bit_length() - 1
                        if cand is None or xv < cand:
                            cand = xv
        if cand is None:
            raise ValueError("ordering got stuck; complex not strongly connected")
        order.append(cand)
        inside |= 1 << cand
    return in_degrees(Graph.of_complex(C), order)


# Billera-Lee graphs -----------------------------------------------------


@dataclass(frozen=True)
class BLGraphParams:
    f0: int
    f1: int
    d: int
    k: int
    j: int


def bl_params(f0: int, f1: int, d: int) -> BLGraphParams:
    if d < 1 or f0 < d + 1:
        raise ValueError(f"need f0 ≥ d+1 (f0={f0}, d={d})")
    lo, hi = d * f0 - comb(d + 1, 2), comb(f0, 2)
    if not lo <= f1 <= hi:
        raise ValueError(f"f1={f1} outside feasible range [{lo}, {hi}] for f0={f0}, d={d}")
    k = max(k for k in range(1, f0 + 1) if comb(k, 2) + (f0 - k) * d <= f1)
    j = f1 - comb(k, 2) - (f0 - k - 1) * d
    return BLGraphParams(f0, f1, d, k, j)


def bl_graph(f0: int, f1: int, d: int) -> tuple[Graph, BLGraphParams]:
    """Clique on k vertices, one vertex joined to j of them, the rest joined to a fixed d-subclique."""
    p = bl_params(f0, f1, d)
    edges = list(combinations(range(p.k), 2))
    if p.k < f0:
        edges += [(p.k, c) for c in range(p.j)]
        for v in range(p.k + 1, f0):
            edges += [(v, c) for c in range(d)]
    G = Graph.from_edges(f0, edges)
    assert G.num_edges == f1
    return G, p


def bl_tau0(f0: int, f1: int, d: int) -> Fraction:
    """Closed form for τ_0 of the Billera-Lee graph."""
    p = bl_params(f0, f1, d)
    return (
        Fraction(1, f0 + 1)
        - Fraction(1, p.k + 1)
        + Fraction(1, (p.j + 1) * (p.j + 2))
        + Fraction(f0 - p.k - 1, (d + 1) * (d + 2))
    )


def bl_in_degrees(f0: int, f1: int, d: int) -> tuple[int, ...]:
    p = bl_params(f0, f1, d)
    if p.k == f0:
        return tuple(range(f0))
    return tuple(range(p.k)) + (p.j,) + (d,) * (f0 - p.k - 1)


@dataclass(frozen=True)
class Tau0Bounds:
    lower: Fraction
    upper: Fraction
    quotient_ok: bool


def tau0_bounds_strongly_connected(f0: int, f1: int, d: int) -> Tau0Bounds:
    """τ_0 range for strongly connected pure d-complexes with f0 vertices and f1 edges."""
    lower = bl_tau0(f0, f1, d + 1)
    upper = bl_tau0(f0, f1, d)
    ok = lower == 0 or upper / lower < Fraction(d + 3, d + 1)
    return Tau0Bounds(lower, upper, ok)


def binomial_quotient(n: int, a: int, b: int) -> Fraction:
    """Σ_k C(n,k)/C(n+b,k+a), checked against its closed form."""
    if not 0 <= a <= b or n < 0:
        raise ValueError("need 0 ≤ a ≤ b and n ≥ 0")
    lhs = sum(Fraction(comb(n, k), comb(n + b, k + a)) for k in range(n + 1))
    rhs = Fraction(n + b + 1, (b + 1) * comb(b, a))
    if lhs != rhs:
        raise ArithmeticError(f"binomial identity failed at n={n}, a={a}, b={b}")
    return rhs
