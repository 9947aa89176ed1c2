"""τ-, σ- and μ-vectors and Hochster tables by enumerating induced subcomplexes."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .complex import SimplicialComplex, popcount
from .graphs import GRAPH_CAP, Graph, component_counts, popcounts
from .homology import ChainData, is_tight, unreduced_betti
from .linalg import GF2, Field
from .vectors import BettiVector, TauVector

DEFAULT_CAP = 22


class CapExceeded(RuntimeError):
    pass


def _check_cap(C: SimplicialComplex, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if C.n > cap:
        faces = sum(C.f_vector[1:])
        raise CapExceeded(
            f"ground set of size {C.n} exceeds enumeration cap {cap}: "
            f"2^{C.n} = {1 << C.n} induced subcomplexes over {faces} faces "
            f"(about {(1 << C.n) * faces:.3g} face visits)"
        )


def _count_range(args) -> list[list[int]]:
    C, field, lo, hi = args
    cd = ChainData(C, field)
    width = max(C.dim, -1) + 2
    acc = [[0] * width for _ in range(C.n + 1)]
    for W in range(lo, hi):
        row = acc[popcount(W)]
        for k, b in enumerate(cd.betti_values(W)):
            if b:
                row[k] += b
    return acc


def _count_graph(C: SimplicialComplex) -> list[list[int]]:
    """Counts for complexes of dimension ≤ 1, vectorised over all subsets.

    β̃_0 = components - 1 and β̃_1 = edges - vertices + components; the
    arithmetic does not depend on the field.
    """
    n = C.n
    width = max(C.dim, -1) + 2
    acc = [[0] * width for _ in range(n + 1)]
    acc[0][0] = 1
    if n == 0:
        return acc
    comp = component_counts(Graph.of_complex(C))
    pc = popcounts(n)
    W = np.arange(1 << n, dtype=np.int64)
    Wv = W & C.vertex_mask
    edges = np.zeros(1 << n, dtype=np.int64)
    for e in C.faces(1):
        edges += (W & e) == e
    c, k = comp[Wv], pc[Wv]
    empty = Wv == 0
    b0 = np.where(empty, 0, c - 1)
    b1 = edges - k + c
    for j in range(1, n + 1):
        sel = pc == j
        acc[j][0] = int((empty & sel).sum())
        if width > 1:
            acc[j][1] = int(b0[sel].sum())
        if width > 2:
            acc[j][2] = int(b1[sel].sum())
    return acc


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, -(-total // parts))
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def betti_counts(
    C: SimplicialComplex,
    field: Field = GF2,
    workers: int = 1,
    cap: int | None = None,
) -> list[list[int]]:
    """``counts[j][k+1]`` = Σ over |W| = j of β̃_k(C[W]), for k = -1..d.

    Integer accumulators are merged by addition, so the result does not
    depend on how the subsets are split among workers.
    """
    _check_cap(C, cap)
    if C.dim <= 1 and C.n <= GRAPH_CAP:
        return _count_graph(C)
    total = 1 << C.n
    workers = max(1, workers)
    if workers == 1 or total < 256:
        return _count_range((C, field, 0, total))
    jobs = [(C, field, lo, hi) for lo, hi in _chunks(total, workers * 4)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_count_range, jobs))
    acc = parts[0]
    for part in parts[1:]:
        for row, other in zip(acc, part):
            for k, x in enumerate(other):
                row[k] += x
    return acc


def _tau_from_counts(counts: list[list[int]], n: int) -> list[Fraction]:
    width = len(counts[0])
    out = []
    for k in range(width):
        s = Fraction(0)
        for j in range(n + 1):
            if counts[j][k]:
                s += Fraction(counts[j][k], comb(n, j))
        out.append(s / (n + 1))
    return out


def tau_vector(C: SimplicialComplex, field: Field = GF2, workers: int = 1, cap: int | None = None) -> TauVector:
    """τ_{-1}..τ_d of C over its full ground set."""
    counts = betti_counts(C, field, workers, cap)
    return TauVector(tuple(_tau_from_counts(counts, C.n)), -1, C.n, str(field))


def sigma_vector(C: SimplicialComplex, field: Field = GF2, workers: int = 1, cap: int | None = None) -> TauVector:
    """σ-vector over the vertex set V0, with the convention β̃_0(∅) = -1.

    Computed directly: σ_i = Σ_{W ⊂ V0} β̃_i(C[W]) / C(|V0|, |W|) where the
    empty W contributes -1 at index 0 (and 1 at index -1 as usual).
    """
    D = C.compact()
    counts = betti_counts(D, field, workers, cap)
    n = D.n
    vals = []
    for k in range(len(counts[0])):
        s = Fraction(0)
        for j in range(n + 1):
            c = counts[j][k]
            if j == 0 and k == 1:
                c = -1
            if c:
                s += Fraction(c, comb(n, j))
        vals.append(s)
    return TauVector(tuple(vals), -1, n, str(field))


@dataclass(frozen=True)
class GradedBettiTable:
    """r[i][j] for -1 ≤ i < j ≤ n, stored as a dict keyed by (i, j) with zeros omitted."""

    n: int
    entries: dict

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, r) for (i, j), r in self.entries.items())


def table_from_counts(counts: list[list[int]], n: int) -> GradedBettiTable:
    entries = {}
    for j in range(n + 1):
        for kk, total in enumerate(counts[j]):
            k = kk - 1
            if total:
                entries[(j - k - 2, j)] = total
    return GradedBettiTable(n, entries)


def hochster_table(C: SimplicialComplex, field: Field = GF2, workers: int = 1, cap: int | None = None) -> GradedBettiTable:
    """Graded Betti numbers of the Stanley-Reisner ideal via Hochster's formula."""
    return table_from_counts(betti_counts(C, field, workers, cap), C.n)


def tau_from_table(t: GradedBettiTable, dim: int | None = None) -> TauVector:
    """τ_i = 1/(n+1) Σ_j r_{j-i-2, j} / C(n, j)."""
    n = t.n
    if dim is None:
        dim = max((j - i - 2 for (i, j) in t.entries), default=-1)
    vals = []
    for i in range(-1, dim + 1):
        s = Fraction(0)
        for j in range(i + 1, n + 1):
            r = t[(j - i - 2, j)]
            if r:
                s += Fraction(r, comb(n, j))
        vals.append(s / (n + 1))
    return TauVector(tuple(vals), -1, n)


def mu_vector(M: SimplicialComplex, field: Field = GF2, workers: int = 1, cap: int | None = None) -> TauVector:
    """μ_i = Σ_v τ_{i-1}(lk v), with each link on its own vertex set."""
    if not M.is_closed_pseudomanifold():
        raise ValueError("μ-vector needs a closed pseudomanifold")
    d = M.dim
    mu = [Fraction(0)] * (d + 1)
    cache: dict = {}
    from .canon import canonical_form

    for v in M.vertices:
        lk = M.link(v)
        key = canonical_form(lk).key
        t = cache.get(key)
        if t is None:
            t = cache[key] = tau_vector(lk, field, workers, cap)
        for i in range(d + 1):
            mu[i] += t[i - 1]
    return TauVector(tuple(mu), 0, M.n, str(field))


@dataclass(frozen=True)
class TightnessReport:
    betti_reduced: BettiVector
    betti: tuple[int, ...]
    mu: TauVector
    equal: tuple[bool, ...]
    mu_equals_betti: bool
    exhaustive: bool | None
    witness: tuple[int, int] | None

    @property
    def tight(self) -> bool:
        if self.exhaustive is not None:
            return self.exhaustive
        return self.mu_equals_betti


def tightness_report(M: SimplicialComplex, field: Field = GF2, exhaustive: bool | None = None, workers: int = 1) -> TightnessReport:
    """Compare μ_i with β_0 (unreduced) at i = 0 and β̃_i for i ≥ 1.

    The exhaustive injectivity check runs by default when n ≤ 12.
    """
    mu = mu_vector(M, field, workers)
    b = ChainData(M, field).betti()
    beta = unreduced_betti(b)
    equal = tuple(Fraction(beta[i]) == mu[i] for i in range(M.dim + 1))
    if exhaustive is None:
        exhaustive = M.n <= 12
    verdict = witness = None
    if exhaustive:
        verdict, witness = is_tight(M, field)
    return TightnessReport(b, beta, mu, equal, all(equal), verdict, witness)
