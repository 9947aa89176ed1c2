"""Reduced simplicial homology via boundary-matrix ranks.

The chain complex is the augmented one, so the empty complex {∅} has
β̃_{-1} = 1 and every nonempty complex has β̃_{-1} = 0.
"""
from __future__ import annotations

from .complex import SimplicialComplex, bits
from .linalg import GF2, Field, rank
from .vectors import BettiVector


def _components(adj: list[int], W: int) -> int:
    count = 0
    rest = W
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & W & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        count += 1
    return count


class ChainData:
    """Faces and boundary vectors of one complex, reusable for any W.

    Boundary vectors are expressed in the global indexing of the faces of
    the whole complex, so restricting to an induced subcomplex only means
    selecting columns.
    """

    def __init__(self, C: SimplicialComplex, field: Field = GF2):
        self.C = C
        self.field = field
        self.dim = C.dim
        self.vertex_mask = C.vertex_mask
        self.adj = C.adjacency()
        self.faces = [C.faces(k) for k in range(self.dim + 1)]
        self.index = [{m: i for i, m in enumerate(fs)} for fs in self.faces]
        self.boundary: list[list] = [[]]
        for k in range(1, self.dim + 1):
            self.boundary.append([self._bd(m, k) for m in self.faces[k]])
        self._full_rank: dict[int, int] = {}

    def _bd(self, m: int, k: int):
        idx = self.index[k - 1]
        vs = bits(m)
        if self.field.p == 2:
            v = 0
            for x in vs:
                v |= 1 << idx[m & ~(1 << x)]
            return v
        return {idx[m & ~(1 << x)]: (-1) ** i for i, x in enumerate(vs)}

    def ranks(self, W: int) -> tuple[list[int], list[int]]:
        """Face counts f_0..f_d and ranks r_0..r_d of ∂_k for C[W]."""
        notW = ~W
        f = []
        sel = []
        for k in range(self.dim + 1):
            s = [i for i, m in enumerate(self.faces[k]) if not m & notW]
            sel.append(s)
            f.append(len(s))
        r = [0] * (self.dim + 1)
        if self.dim < 0:
            return f, r
        if f[0]:
            r[0] = 1
        if self.dim >= 1:
            r[1] = f[0] - _components(self.adj, W & self.vertex_mask)
        for k in range(2, self.dim + 1):
            if not f[k]:
                break
            bd = self.boundary[k]
            r[k] = rank([bd[i] for i in sel[k]], self.field)
        return f, r

    def betti_values(self, W: int) -> list[int]:
        """β̃_{-1}..β̃_d of C[W] as a plain list."""
        f, r = self.ranks(W)
        d = self.dim
        out = [1 - (r[0] if d >= 0 else 0)]
        for k in range(d + 1):
            nxt = r[k + 1] if k + 1 <= d else 0
            out.append(f[k] - r[k] - nxt)
        return out

    def betti(self, W: int | None = None) -> BettiVector:
        if W is None:
            W = self.C.full_mask
        return BettiVector(tuple(self.betti_values(W)), -1, str(self.field))

    # injectivity --------------------------------------------------------

    def inclusion_injective(self, W: int, i: int) -> bool:
        """Whether H̃_i(C[W]) -> H̃_i(C) is injective.

        Uses dim(B_i(C) ∩ C_i(W)) = rank ∂_{i+1}(C) - rank of ∂_{i+1}(C)
        projected onto the i-faces outside W; the map is injective exactly
        when this equals rank ∂_{i+1}(C[W]).
        """
        if i < 0:
            return self.C.is_empty or bool(W & self.vertex_mask)
        if i + 1 > self.dim:
            return True
        notW = ~W
        full = self.boundary[i + 1]
        outside = [j for j, m in enumerate(self.faces[i]) if m & notW]
        if self.field.p == 2:
            omask = 0
            for j in outside:
                omask |= 1 << j
            projected = [v & omask for v in full]
        else:
            oset = set(outside)
            projected = [{k: c for k, c in v.items() if k in oset} for v in full]
        inside = [full[j] for j, m in enumerate(self.faces[i + 1]) if not m & notW]
        r_full = self._full_rank.get(i + 1)
        if r_full is None:
            r_full = self._full_rank[i + 1] = rank(full, self.field)
        return r_full - rank(projected, self.field) == rank(inside, self.field)


def reduced_betti(C: SimplicialComplex, field: Field = GF2) -> BettiVector:
    return ChainData(C, field).betti()


def inclusion_injective(C: SimplicialComplex, W: int, i: int, field: Field = GF2) -> bool:
    return ChainData(C, field).inclusion_injective(W, i)


def is_tight(C: SimplicialComplex, field: Field = GF2) -> tuple[bool, tuple[int, int] | None]:
    """Exhaustive check of injectivity for every nonempty W and every i ≥ 0.

    Returns the verdict and the first failing ``(W, i)`` if any.
    """
    cd = ChainData(C, field)
    for W in range(1, 1 << C.n):
        for i in range(cd.dim):
            if not cd.inclusion_injective(W, i):
                return False, (W, i)
    return True, None


def unreduced_betti(b: BettiVector) -> tuple[int, ...]:
    """β_0..β_d from the reduced vector (β_0 = β̃_0 + 1 for nonempty complexes)."""
    vals = list(b.values[1:])
    if vals and b[-1] == 0:
        vals[0] += 1
    return tuple(vals)
