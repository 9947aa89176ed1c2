"""Betti-number bounds for 2-neighborly 4-manifolds and classical tightness inequalities.

A 2-neighborly 4-manifold M on n+1 vertices whose vertex links all share the
f-vector (1, n, e, 2(e-n), e-n) has μ_1 = (n+1)·τ_0(lk) and
μ_2 = (n+1)·τ_1(lk).  τ_0 of a link is bounded by the Billera-Lee graph
value, with D = 3 (proven) or D = 4 (conjectured), and τ_1 follows from the
3-sphere identity τ_1 = 2τ_0 - (n²-4n+5)/(5(n+1)) + e/30.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor

from .graphs import bl_tau0
from .identities import IdentityCheck, IdentityReport
from .vectors import fmt_rational

MODES = {"proven": 3, "conjectured": 4}

# (link f0, link f1) -> (proven pair, conjectured pair) as printed
FIGURE5 = [
    ((5, 10), (0, 0), (0, 0)),
    ((8, 28), (0, 1), (0, 1)),
    ((9, 36), (0, 2), (0, 2)),
    ((10, 30), (1, 0), (1, 0)),
    ((11, 36), (1, 1), (1, 0)),
    ((11, 41), (1, 2), (0, 1)),
    ((11, 46), (0, 3), (0, 2)),
    ((11, 51), (0, 4), (0, 4)),
    ((13, 48), (2, 2), (1, 1)),
    ((13, 63), (0, 6), (0, 6)),
    ((13, 78), (0, 12), (0, 12)),
    ((14, 46), (3, 1), (3, 0)),
    ((14, 50), (3, 2), (2, 0)),
    ((14, 52), (3, 3), (2, 1)),
    ((14, 54), (2, 3), (2, 2)),
    ((14, 56), (2, 4), (2, 3)),
    ((14, 60), (2, 5), (1, 4)),
    ((14, 62), (2, 6), (1, 4)),
    ((14, 64), (2, 7), (1, 5)),
    ((14, 66), (1, 7), (1, 6)),
    ((14, 68), (1, 7), (1, 7)),
    ((14, 70), (1, 8), (0, 7)),
    ((14, 72), (1, 9), (0, 8)),
    ((14, 74), (0, 9), (0, 9)),
    ((14, 76), (0, 10), (0, 10)),
    ((14, 78), (0, 11), (0, 11)),
    ((14, 80), (0, 12), (0, 11)),
    ((14, 82), (0, 12), (0, 12)),
    ((14, 84), (0, 13), (0, 13)),
    ((14, 86), (0, 14), (0, 14)),
    ((14, 88), (0, 15), (0, 15)),
    ((14, 90), (0, 16), (0, 16)),
    ((15, 60), (3, 5), (2, 3)),
    ((15, 75), (2, 10), (1, 8)),
    ((15, 105), (0, 22), (0, 22)),
]

FIGURE5_CHI = {
    (5, 10): 2, (8, 28): 3, (9, 36): 4, (10, 30): 0, (11, 36): 0, (11, 41): 2,
    (11, 46): 4, (11, 51): 6, (13, 48): 0, (13, 63): 7, (13, 78): 14, (14, 46): -4,
    (14, 50): -2, (14, 52): -1, (14, 54): 0, (14, 56): 1, (14, 60): 3, (14, 62): 4,
    (14, 64): 5, (14, 66): 6, (14, 68): 7, (14, 70): 8, (14, 72): 9, (14, 74): 10,
    (14, 76): 11, (14, 78): 12, (14, 80): 13, (14, 82): 14, (14, 84): 15, (14, 86): 16,
    (14, 88): 17, (14, 90): 18, (15, 60): 0, (15, 75): 8, (15, 105): 24,
}


def mu_bound_pair(n: int, e: int, mode: str = "proven") -> tuple[Fraction, Fraction]:
    """Exact upper bounds on (β̃_1, β̃_2) for link f-vector (n, e)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {sorted(MODES)}")
    t0 = bl_tau0(n, e, MODES[mode])
    b1 = (n + 1) * t0
    b2 = (n + 1) * (2 * t0 - Fraction(n * n - 4 * n + 5, 5 * (n + 1)) + Fraction(e, 30))
    return b1, b2


def manifold_f(n: int, e: int) -> tuple[int, ...]:
    """f-vector of a 2-neighborly 4-manifold whose n+1 vertex links have f = (1, n, e, 2(e-n), e-n)."""
    link = (1, n, e, 2 * (e - n), e - n)
    out = []
    for i in range(5):
        num = (n + 1) * link[i]
        if num % (i + 1):
            raise ValueError(f"link f-vector ({n},{e}) gives a non-integral f_{i}")
        out.append(num // (i + 1))
    return tuple(out)


def euler_char(f: tuple[int, ...]) -> int:
    return sum((-1) ** i * x for i, x in enumerate(f))


@dataclass(frozen=True)
class BoundRow:
    link_f: tuple[int, int]
    manifold_f: tuple[int, ...]
    chi: int
    proven_exact: tuple[Fraction, Fraction]
    conjectured_exact: tuple[Fraction, Fraction]

    @staticmethod
    def _floor(pair) -> tuple[int, int]:
        return (floor(pair[0]), floor(pair[1]))

    @property
    def proven_pair(self) -> tuple[int, int]:
        return self._floor(self.proven_exact)

    @property
    def conjectured_pair(self) -> tuple[int, int]:
        return self._floor(self.conjectured_exact)


def bound_row(n: int, e: int) -> BoundRow:
    f = manifold_f(n, e)
    return BoundRow((n, e), f, euler_char(f), mu_bound_pair(n, e, "proven"), mu_bound_pair(n, e, "conjectured"))


def figure5_table() -> list[BoundRow]:
    """Bound rows for the printed list of link f-vectors."""
    return [bound_row(n, e) for (n, e), _, _ in FIGURE5]


CSV_COLUMNS = [
    "link_n", "link_e", "f0", "f1", "f2", "f3", "f4", "chi",
    "b1_proven", "b2_proven", "b1_conj", "b2_conj",
    "b1_proven_exact", "b2_proven_exact", "b1_conj_exact", "b2_conj_exact",
]


def rows_to_csv(rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(
            [*r.link_f, *r.manifold_f, r.chi, *r.proven_pair, *r.conjectured_pair]
            + [fmt_rational(x) for x in (*r.proven_exact, *r.conjectured_exact)]
        )
    return buf.getvalue()


# tightness inequalities -------------------------------------------------


def neighborly_inequality(f0: int, chi: int, k: int) -> IdentityCheck:
    """C(f0-k-2, k+1) ≥ (-1)^k C(2k+1, k+1)(χ-2) for a 2k-manifold; equality iff (k+1)-neighborly."""
    lhs = comb(f0 - k - 2, k + 1) if f0 - k - 2 >= 0 else 0
    rhs = (-1) ** k * comb(2 * k + 1, k + 1) * (chi - 2)
    return IdentityCheck(f"neighborly_k{k}", Fraction(lhs), Fraction(rhs), ">=")


def g2_inequality(g2: int, d: int, beta1: int) -> IdentityCheck:
    """g_2 ≥ C(d+2, 2)·β_1 for a d-manifold."""
    return IdentityCheck("g2_beta1", Fraction(g2), Fraction(comb(d + 2, 2) * beta1), ">=")


def vertex_inequality(n: int, d: int, beta1: int) -> IdentityCheck:
    """C(n-d-1, 2) ≥ C(d+2, 2)·β_1 for an n-vertex d-manifold."""
    lhs = comb(n - d - 1, 2) if n - d - 1 >= 0 else 0
    return IdentityCheck("vertices_beta1", Fraction(lhs), Fraction(comb(d + 2, 2) * beta1), ">=")


def tightness_inequalities(
    f0: int | None = None,
    chi: int | None = None,
    k: int | None = None,
    g2: int | None = None,
    d: int | None = None,
    beta1: int | None = None,
    n: int | None = None,
) -> IdentityReport:
    """Evaluate whichever inequalities the given parameters determine."""
    checks = []
    if f0 is not None and chi is not None and k is not None:
        checks.append(neighborly_inequality(f0, chi, k))
    if g2 is not None and d is not None and beta1 is not None:
        checks.append(g2_inequality(g2, d, beta1))
    if n is not None and d is not None and beta1 is not None:
        checks.append(vertex_inequality(n, d, beta1))
    if not checks:
        raise ValueError("give (f0, chi, k), (g2, d, beta1) or (n, d, beta1)")
    return IdentityReport(tuple(checks))
