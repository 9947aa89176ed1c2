"""Closed forms for τ-vectors and exact checks of the identities they satisfy."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .complex import SimplicialComplex
from .graphs import bl_params, bl_tau0
from .homology import ChainData
from .linalg import GF2, Field
from .tau import tau_vector
from .vectors import TauVector, tau_of


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Fraction
    rhs: Fraction
    relation: str = "="  # "=", "<=" or ">="

    @property
    def holds(self) -> bool:
        if self.relation == "=":
            return self.lhs == self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def slack(self) -> Fraction:
        return Fraction(self.rhs) - Fraction(self.lhs)


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def __getitem__(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def is_homology_sphere(C: SimplicialComplex, field: Field = GF2) -> bool:
    """Closed pseudomanifold whose reduced Betti numbers are those of S^d."""
    if not C.is_closed_pseudomanifold():
        return False
    b = ChainData(C, field).betti()
    return all(x == (1 if i == C.dim else 0) for i, x in b.items())


def euler_rhs(f: Sequence[int]) -> Fraction:
    """Σ_{k=-1}^{d} (-1)^k f_k / (k+2)."""
    return sum(Fraction((-1) ** (k % 2) * fk, k + 2) for k, fk in enumerate(f, start=-1))


def h_form_rhs(h: Sequence[int]) -> Fraction:
    d = len(h) - 2
    return sum(Fraction((-1) ** (k + 1) * hk, (d + 2) * comb(d + 1, k)) for k, hk in enumerate(h))


def alternating(tau: TauVector) -> Fraction:
    return sum(((-1) ** (i % 2)) * x for i, x in tau.items())


def verify_identities(
    C: SimplicialComplex,
    tau: TauVector | None = None,
    field: Field = GF2,
    sphere: bool | None = None,
) -> IdentityReport:
    """Exact checks of the τ identities that apply to C.

    Euler relation always; h-vector form for pure complexes; duality and,
    in odd dimension, the half-sum relations for spheres; the three
    dimension-3 relations for 3-spheres.  ``sphere`` defaults to a homology
    sphere test over ``field``.
    """
    if tau is None:
        tau = tau_vector(C, field)
    fv = C.face_vectors()
    f, h, g = fv.f, fv.h, fv.g
    d = C.dim
    checks = [IdentityCheck("euler", alternating(tau), euler_rhs(f))]
    if h is not None:
        checks.append(IdentityCheck("h_form", alternating(tau), h_form_rhs(h)))
    if sphere is None:
        sphere = is_homology_sphere(C, field)
    if sphere:
        for i in range(-1, d + 1):
            j = d - 1 - i
            if i < j:
                checks.append(IdentityCheck(f"duality_{i}_{j}", tau[i], tau[j]))
        if d % 2 == 1:
            half = (d - 1) // 2
            mid = ((-1) ** half) * tau[half] + 2 * sum(((-1) ** (i % 2)) * tau[i] for i in range(-1, half))
            checks.append(IdentityCheck("odd_sphere_tau", alternating(tau), mid))
            hs = 2 * sum(Fraction((-1) ** (k + 1) * h[k], comb(d + 1, k)) for k in range(half + 1))
            hs += Fraction((-1) ** half * h[half + 1], comb(d + 1, half + 1))
            checks.append(IdentityCheck("odd_sphere_h", alternating(tau), hs / (d + 2)))
        if d == 3:
            lhs = 2 * tau[0] - tau[1]
            h1, h2 = h[1], h[2]
            f0, f1 = f[1], f[2]
            g1, g2 = g[1], g[2]
            checks.append(IdentityCheck("3sphere_tau0_tau2", tau[0], tau[2]))
            checks.append(IdentityCheck("3sphere_h", lhs, Fraction(h1 * (h1 + 1), 10 * (h1 + 5)) - Fraction(h2, 30)))
            checks.append(IdentityCheck("3sphere_f", lhs, Fraction(f0 * f0 - 4 * f0 + 5, 5 * (f0 + 1)) - Fraction(f1, 30)))
            checks.append(IdentityCheck("3sphere_g", lhs, Fraction(g1 * (g1 + 1), 15 * (g1 + 6)) - Fraction(g2, 30)))
    return IdentityReport(tuple(checks))


# closed forms -----------------------------------------------------------


def _vec(d: int, entries: dict[int, Fraction], n: int) -> TauVector:
    return tau_of([entries.get(i, 0) for i in range(-1, d + 1)], n)


def stacked_tau(d: int, n: int) -> TauVector:
    if d < 2 or n < d + 2:
        raise ValueError("stacked closed form needs d ≥ 2 and n ≥ d+2")
    t0 = Fraction(n - 2 * d - 4, (d + 2) * (d + 3)) + Fraction(1, n + 1)
    e = {-1: Fraction(1, n + 1), d: Fraction(1, n + 1), 0: t0, d - 1: t0}
    return _vec(d, e, n)


def cycle_tau(m: int) -> TauVector:
    if m < 3:
        raise ValueError("cycle needs m ≥ 3")
    e = {-1: Fraction(1, m + 1), 1: Fraction(1, m + 1), 0: Fraction((m - 2) * (m - 3), 6 * (m + 1))}
    return _vec(1, e, m)


def simplex_join_tau(i: int, j: int) -> TauVector:
    if i < 2 or j < 2:
        raise ValueError("simplex join needs i, j ≥ 2")
    d = i + j - 1
    e = {-1: Fraction(1, d + 4), d: Fraction(1, d + 4)}
    for a in (i, j):
        e[a - 1] = e.get(a - 1, 0) + Fraction(1, (d + 4) * comb(d + 3, a + 1))
    return _vec(d, e, d + 3)


def cycle_join_tau(m: int, d: int) -> TauVector:
    if m < 3 or d < 3:
        raise ValueError("cycle join needs m ≥ 3 and d ≥ 3")
    n = m + d
    t0 = (
        Fraction(m - 3, (d + 3) * (d + 2))
        + Fraction(1, n + 1)
        + Fraction(1, (d + 1) * comb(d + m + 1, d + 1))
        - (Fraction(1, d + 4) + Fraction(1, (d + 1) * comb(d + 4, 3)))
    )
    t1 = Fraction(1, (n + 1) * comb(n, m))
    e = {-1: Fraction(1, n + 1), d: Fraction(1, n + 1), 0: t0, d - 1: t0}
    if d == 3:
        e[1] = 2 * t1
    else:
        e[1] = t1
        e[d - 2] = t1
    return _vec(d, e, n)


def connsum_constant(d: int, n1: int, n2: int) -> Fraction:
    n = n1 + n2 - d - 1
    return Fraction(1, d + 2) - Fraction(1, n1 + 1) - Fraction(1, n2 + 1) + Fraction(1, n + 1)


def connsum_tau(t1: TauVector, t2: TauVector, d: int, n1: int, n2: int) -> TauVector:
    """τ of M1 # M2 from the τ-vectors of two closed d-manifolds (d ≥ 2)."""
    if d < 2:
        raise ValueError("connected-sum formula needs d ≥ 2")
    n = n1 + n2 - d - 1
    c = connsum_constant(d, n1, n2)
    e = {}
    for i in range(0, d):
        e[i] = t1[i] + t2[i]
    e[0] += c
    e[d - 1] += c
    e[-1] = Fraction(1, n + 1)
    e[d] = ((n1 + 1) * t1[d] + (n2 + 1) * t2[d] - 1) / Fraction(n + 1)
    return _vec(d, e, n)


def stacking_tau(t: TauVector, d: int, n: int, k: int) -> TauVector:
    """τ after k stackings of an n-vertex closed d-manifold (d ≥ 2)."""
    if d < 2:
        raise ValueError("stacking formula needs d ≥ 2")
    delta = Fraction(k, (d + 2) * (d + 3)) - Fraction(1, n + 1) + Fraction(1, n + k + 1)
    e = {i: t[i] for i in range(-1, d + 1)}
    e[0] += delta
    e[d - 1] += delta
    e[-1] = Fraction(1, n + k + 1)
    e[d] = (n + 1) * t[d] / Fraction(n + k + 1)
    return _vec(d, e, n + k)


def closed_form_tau(family: str, *params) -> TauVector:
    """Dispatch: stacked(d,n), simplex_join(i,j), cycle_join(m,d), cycle(m),
    connsum(t1,t2,d,n1,n2), stacking_delta(t,d,n,k)."""
    table = {
        "stacked": stacked_tau,
        "simplex_join": simplex_join_tau,
        "cycle_join": cycle_join_tau,
        "cycle": cycle_tau,
        "connsum": connsum_tau,
        "stacking_delta": stacking_tau,
    }
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family](*params)


# spheres with g2 = 1 ----------------------------------------------------


@dataclass(frozen=True)
class G2OneBounds:
    d: int
    n: int
    tau0: tuple[Fraction, Fraction]
    tau1: tuple[Fraction, Fraction]
    extremal: dict


def c_d(d: int, n: int) -> Fraction:
    return Fraction(n - d - 3, (d + 2) * (d + 3)) + Fraction(1, n + 1) - Fraction(1, d + 4)


def g2_one_bounds(d: int, n: int) -> G2OneBounds:
    """Exact ranges of τ_0 (= τ_{d-1}) and τ_1 (= τ_{d-2}) over n-vertex d-spheres with g_2 = 1."""
    if d < 3 or n < d + 3:
        raise ValueError("need d ≥ 3 and n ≥ d+3")
    up0 = c_d(d, n)
    lo0 = up0 - Fraction(1, d + 1) * (Fraction(1, comb(d + 4, 3)) - Fraction(1, comb(n + 1, d + 1)))
    if d == 3:
        t1 = (Fraction(1, 2 * comb(n + 1, 4)), Fraction(1, 70))
    elif d == 4:
        t1 = (Fraction(1, 5 * comb(n + 1, 5)), Fraction(1, 280))
    else:
        t1 = (Fraction(0), Fraction(1, 4 * comb(d + 4, 4)))
    extremal = {
        "tau0_lower": f"C_{n - d} * ∂Δ_{d - 1} (no stackings)",
        "tau0_upper": f"{n - d - 3} stackings of ∂Δ_i * ∂Δ_j, i + j = {d + 1}",
        "tau1_lower": f"C_{n - d} * ∂Δ_{d - 1}" if d <= 4 else "∂Δ_i * ∂Δ_j with i, j ≥ 3, any stackings",
        "tau1_upper": f"{n - d - 3} stackings of C_3 * ∂Δ_{d - 1}",
    }
    return G2OneBounds(d, n, (lo0, up0), t1, extremal)


@dataclass(frozen=True)
class G2Seed:
    """A g_2 = 1 sphere described as a seed plus a number of stackings."""

    kind: str  # "cycle_join" (params (m, d)) or "simplex_join" (params (i, j))
    params: tuple[int, int]
    stackings: int

    @property
    def d(self) -> int:
        if self.kind == "cycle_join":
            return self.params[1]
        return sum(self.params) - 1

    @property
    def n(self) -> int:
        a, b = self.params
        base = a + b if self.kind == "cycle_join" else a + b + 2
        return base + self.stackings

    def _has_triangle_factor(self) -> bool:
        if self.kind == "cycle_join":
            return self.params[0] == 3
        return 2 in self.params


def expected_extremal(seed: G2Seed) -> dict[str, bool]:
    """Which of the four bounds the seed family attains (degenerate n = d+3 included)."""
    d, n, k = seed.d, seed.n, seed.stackings
    tight = n == d + 3
    cyc_unstacked = seed.kind == "cycle_join" and k == 0
    tri = seed._has_triangle_factor()
    join_type = seed.kind == "simplex_join" or tri
    out = {
        "tau0_lower": tight or cyc_unstacked,
        "tau0_upper": tight or join_type,
        "tau1_upper": tri,
    }
    if d <= 4:
        out["tau1_lower"] = tight or cyc_unstacked
    else:
        out["tau1_lower"] = seed.kind == "simplex_join" and min(seed.params) >= 3
    return out


# nearly neighborly ------------------------------------------------------


def nearly_neighborly_threshold(n: int, d: int) -> int:
    return comb(n, 2) - n + d + 2


def nearly_neighborly_check(M: SimplicialComplex, tau0: Fraction | None = None) -> IdentityCheck | None:
    """τ_0(M) ≤ τ_0 of the Billera-Lee graph with parameters (n, f_1, d+1); None when inapplicable."""
    D = M.compact()
    n, d = D.n, D.dim
    f1 = D.f_vector[2] if d >= 1 else 0
    if f1 < nearly_neighborly_threshold(n, d):
        return None
    try:
        bl_params(n, f1, d + 1)
    except ValueError:
        return None
    if tau0 is None:
        from .graphs import Graph, tau0_graph

        tau0 = tau0_graph(Graph.of_complex(D))
    return IdentityCheck("nearly_neighborly", Fraction(tau0), bl_tau0(n, f1, d + 1), "<=")


def missing_edges_tau0(n: int, kind: str) -> Fraction:
    """τ_0 of a graph that is K_n minus one edge, two disjoint edges or two adjacent edges."""
    if kind == "one":
        return Fraction(1, (n + 1) * comb(n, 2))
    if kind == "disjoint":
        return Fraction(2, (n + 1) * comb(n, 2))
    if kind == "adjacent":
        return Fraction(1, n + 1) * (Fraction(2, comb(n, 2)) + Fraction(1, comb(n, 3)))
    raise ValueError(f"unknown kind {kind!r}")


# Billera-Lee dominance --------------------------------------------------


def bl_dominance(S: SimplicialComplex, tau: TauVector | None = None, field: Field = GF2) -> IdentityReport | None:
    """Compare τ(S) entrywise with the Billera-Lee sphere of the same f-vector.

    Returns None when the g-vector of S is not an M-sequence (no such sphere).
    """
    from .constructions import billera_lee, m_sequence_check

    S = S.compact()
    g = S.face_vectors().g_half
    if g is None or not m_sequence_check(g):
        return None
    T = billera_lee(S.dim + 1, g).sphere
    if tau is None:
        tau = tau_vector(S, field)
    tT = tau_vector(T, field)
    return IdentityReport(tuple(IdentityCheck(f"tau_{i}", tau[i], tT[i], "<=") for i in range(-1, S.dim + 1)))
