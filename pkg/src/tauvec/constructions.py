"""Generators for spheres, balls and their compositions."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .complex import ComplexError, SimplicialComplex, bits, join, mask_of, popcount


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex: a d-sphere on d+2 vertices."""
    if d < 0:
        raise ComplexError("dimension must be non-negative")
    n = d + 2
    full = (1 << n) - 1
    return SimplicialComplex(n, [full & ~(1 << i) for i in range(n)])


def simplex_boundary_on(k: int) -> SimplicialComplex:
    """∂Δ_k: boundary of the k-simplex, on k+1 vertices (dimension k-1)."""
    return boundary_simplex(k - 1)


def cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise ComplexError("a cycle needs at least 3 vertices")
    return SimplicialComplex(m, [(1 << i) | (1 << ((i + 1) % m)) for i in range(m)])


def path(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [(1 << i) | (1 << (i + 1)) for i in range(m - 1)])


def _pair_runs(count: int, lo: int, hi: int):
    """Tuples lo ≤ i_1 < ... < i_count ≤ hi with i_{t+1} ≥ i_t + 2."""
    if count == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in _pair_runs(count - 1, first + 2, hi):
            yield (first,) + rest


def lower_cyclic_facet_lists(d: int, n: int) -> list[tuple[int, ...]]:
    """Lower facets of the cyclic (d+1)-polytope on n vertices, 1-based, in lexicographic order."""
    if n < d + 2:
        raise ComplexError(f"need n ≥ d+2 = {d + 2}")
    out = []
    if (d + 1) % 2 == 0:
        for starts in _pair_runs((d + 1) // 2, 1, n - 1):
            out.append(tuple(x for i in starts for x in (i, i + 1)))
    else:
        for starts in _pair_runs(d // 2, 2, n - 1):
            out.append((1,) + tuple(x for i in starts for x in (i, i + 1)))
    return sorted(out)


def lower_cyclic_facets(d: int, n: int) -> SimplicialComplex:
    """The d-ball L_d(n)."""
    return SimplicialComplex.from_facets(lower_cyclic_facet_lists(d, n), n)


def cyclic_polytope_boundary(D: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic D-polytope on n vertices via Gale's evenness criterion."""
    if n < D + 1:
        raise ComplexError("need n ≥ D+1")
    facets = []
    for S in combinations(range(n), D):
        s = set(S)
        ok = True
        for a, b in combinations([x for x in range(n) if x not in s], 2):
            if sum(1 for x in S if a < x < b) % 2:
                ok = False
                break
        if ok:
            facets.append(mask_of(S))
    return SimplicialComplex(n, facets)


def lower_cyclic_indegrees(facets: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    """In-degree of each facet when dual-graph edges point to the lexicographically larger facet."""
    ridge_owner: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for F in facets:
        for x in F:
            ridge_owner.setdefault(tuple(v for v in F if v != x), []).append(F)
    indeg = {F: 0 for F in facets}
    for owners in ridge_owner.values():
        if len(owners) == 2:
            indeg[max(owners)] += 1
    return indeg


def pseudopower(a: int, i: int) -> int:
    """Macaulay pseudopower a^<i>."""
    if a == 0 or i == 0:
        return 0
    out = 0
    k = i
    while a > 0 and k > 0:
        m = k
        while comb(m + 1, k) <= a:
            m += 1
        out += comb(m + 1, k + 1)
        a -= comb(m, k)
        k -= 1
    return out


def m_sequence_check(g: Sequence[int]) -> bool:
    """g_0 = 1, g_1 ≥ 0 and 0 ≤ g_{i+1} ≤ g_i^<i> for i ≥ 1."""
    if not g or g[0] != 1:
        return False
    if any(x < 0 for x in g):
        return False
    for i in range(1, len(g) - 1):
        if g[i + 1] > pseudopower(g[i], i):
            return False
    return True


@dataclass(frozen=True)
class BilleraLee:
    ball: SimplicialComplex
    sphere: SimplicialComplex
    facet_lists: tuple[tuple[int, ...], ...]
    n: int


def billera_lee(d: int, k: Sequence[int], n: int | None = None) -> BilleraLee:
    """Billera-Lee d-ball with h-vector k and its boundary (d-1)-sphere.

    Facets of L_d(n) with in-degree i are taken in colexicographic order
    (compare largest vertices first), which is the reading order of the
    lower-envelope shelling diagram.  Both complexes are returned on the
    vertices actually used, relabelled 1..f0 in increasing order.
    """
    k = list(k)
    top = d // 2
    if len(k) > top + 1:
        if any(k[top + 1:]):
            raise ComplexError(f"k may have at most {top + 1} entries for d={d}")
        k = k[: top + 1]
    if not m_sequence_check(k):
        raise ComplexError(f"{tuple(k)} violates the M-sequence conditions")
    k1 = k[1] if len(k) > 1 else 0
    if n is None:
        n = k1 + d + 1
    if n < k1 + d + 1:
        raise ComplexError(f"need n ≥ k_1 + d + 1 = {k1 + d + 1}")
    n = max(n, d + 2)
    facets = lower_cyclic_facet_lists(d, n)
    indeg = lower_cyclic_indegrees(facets)
    chosen = []
    for i, ki in enumerate(k):
        pool = sorted((F for F in facets if indeg[F] == i), key=lambda F: F[::-1])
        if len(pool) < ki:
            raise ComplexError(f"only {len(pool)} facets of in-degree {i} available with n={n}")
        chosen.extend(pool[:ki])
    chosen_set = set(chosen)
    # ideal check: every in-neighbour of a chosen facet is chosen
    for F in chosen:
        for G in facets:
            if G < F and len(set(F) & set(G)) == d and G not in chosen_set:
                raise ComplexError(f"selection is not an ideal: {G} -> {F}")
    ball = SimplicialComplex.from_facets(chosen, n).compact()
    return BilleraLee(ball, ball.boundary(), tuple(sorted(chosen)), n)


def billera_lee_3sphere(f0: int, f1: int) -> SimplicialComplex:
    """The Billera-Lee 3-sphere with the given vertex and edge counts."""
    g1, g2 = f0 - 5, f1 - 4 * f0 + 10
    return billera_lee(4, (1, g1, g2)).sphere


def stack(M: SimplicialComplex, facet: int) -> SimplicialComplex:
    """Stellar subdivision of a facet with a fresh vertex."""
    if facet not in M.facets:
        raise ComplexError("not a facet")
    v = 1 << M.n
    new = [f for f in M.facets if f != facet]
    new += [(facet & ~(1 << x)) | v for x in bits(facet)]
    return SimplicialComplex(M.n + 1, new)


def stacked_sphere(d: int, n: int, seed: int | None = 0) -> SimplicialComplex:
    """Stacked d-sphere on n vertices, stacking seed-chosen facets."""
    if n < d + 2:
        raise ComplexError(f"need n ≥ d+2 = {d + 2}")
    rng = random.Random(seed)
    M = boundary_simplex(d)
    while M.n < n:
        M = stack(M, rng.choice(M.facets))
    return M


def stack_randomly(M: SimplicialComplex, times: int, seed: int | None = 0) -> SimplicialComplex:
    rng = random.Random(seed)
    for _ in range(times):
        M = stack(M, rng.choice(M.facets))
    return M


def simplex_join(i: int, j: int) -> SimplicialComplex:
    """∂Δ_i * ∂Δ_j, an (i+j-1)-sphere on i+j+2 vertices."""
    if i < 2 or j < 2:
        raise ComplexError("simplex_join needs i, j ≥ 2")
    return join(simplex_boundary_on(i), simplex_boundary_on(j))


def cycle_join(m: int, d: int) -> SimplicialComplex:
    """C_m * ∂Δ_{d-1}, a d-sphere on m+d vertices."""
    if m < 3 or d < 3:
        raise ComplexError("cycle_join needs m ≥ 3 and d ≥ 3")
    return join(cycle(m), simplex_boundary_on(d - 1))


def join_family(kind: str, *params: int) -> SimplicialComplex:
    if kind == "simplex_join":
        return simplex_join(*params)
    if kind == "cycle_join":
        return cycle_join(*params)
    raise ValueError(f"unknown join family {kind!r}")


def _lex_first_facet(M: SimplicialComplex) -> int:
    return min(M.facets, key=lambda f: bits(f))


def connected_sum(
    M1: SimplicialComplex,
    M2: SimplicialComplex,
    facet1: int | None = None,
    facet2: int | None = None,
    bijection: Sequence[int] | None = None,
) -> SimplicialComplex:
    """Glue M1 and M2 along the boundaries of two removed facets.

    ``bijection[t]`` is the vertex of ``facet1`` matched with the t-th
    smallest vertex of ``facet2``; the default matches in increasing order.
    Both inputs are compacted first, so n = n1 + n2 - d - 1.
    """
    M1, M2 = M1.compact(), M2.compact()
    if M1.dim != M2.dim:
        raise ComplexError("dimension mismatch")
    if not (M1.is_closed_pseudomanifold() and M2.is_closed_pseudomanifold()):
        raise ComplexError("connected sum needs closed pseudomanifolds")
    facet1 = _lex_first_facet(M1) if facet1 is None else facet1
    facet2 = _lex_first_facet(M2) if facet2 is None else facet2
    if facet1 not in M1.facets or facet2 not in M2.facets:
        raise ComplexError("chosen facet missing")
    f1, f2 = bits(facet1), bits(facet2)
    if bijection is None:
        bijection = f1
    if sorted(bijection) != f1:
        raise ComplexError("bijection must be a permutation of facet1's vertices")
    vmap = {}
    for a, b in zip(f2, bijection):
        vmap[a] = b
    nxt = M1.n
    for v in range(M2.n):
        if v not in vmap:
            vmap[v] = nxt
            nxt += 1
    facets = [f for f in M1.facets if f != facet1]
    facets += [mask_of(vmap[v] for v in bits(f)) for f in M2.facets if f != facet2]
    return SimplicialComplex(nxt, facets)


def kuhnel_4manifold_11() -> SimplicialComplex:
    """Cyclic 11-vertex triangulation of S^3 x S^1 (tight, all links stacked)."""
    facets = []
    for i in range(11):
        block = [(i + t) % 11 for t in range(6)]
        for k in range(1, 5):
            facets.append(mask_of(v for t, v in enumerate(block) if t != k))
    return SimplicialComplex(11, facets)

