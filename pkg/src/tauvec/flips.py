"""Bistellar flips on closed pseudomanifolds.

A flip is described by the face it removes and the face it inserts.  With
F = removed ∪ inserted of size d+2, the flip is legal when the facets
containing ``removed`` are exactly F∖{x} for x in ``inserted`` and
``inserted`` is not yet a face.  It swaps those facets for F∖{y}, y in
``removed``.  The type is (|inserted|, |removed|), so a stacking is of type
(1, d+1): it inserts a fresh vertex and removes a facet.  An (i, j) flip
raises g_i by one and lowers g_j by one.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .canon import canonical_form
from .complex import ComplexError, SimplicialComplex, bits, popcount


@dataclass(frozen=True, order=True)
class Flip:
    removed: int
    inserted: int

    @property
    def type(self) -> tuple[int, int]:
        return (popcount(self.inserted), popcount(self.removed))

    @property
    def support(self) -> int:
        return self.removed | self.inserted

    def reverse(self) -> "Flip":
        return Flip(self.inserted, self.removed)

    def describe(self) -> str:
        r = ",".join(str(v + 1) for v in bits(self.removed))
        i = ",".join(str(v + 1) for v in bits(self.inserted))
        return f"({self.type[0]},{self.type[1]}) remove {{{r}}} insert {{{i}}}"


def _star_facets(M: SimplicialComplex, face: int) -> list[int]:
    return [f for f in M.facets if f & face == face]


def enumerate_flips(M: SimplicialComplex, fresh: bool = True) -> list[Flip]:
    """All legal flips of M.

    Stackings insert the fresh vertex at position ``M.n`` (one past the
    ground set) when ``fresh`` is set; they are skipped otherwise.
    """
    d = M.dim
    out = []
    for k in range(d + 1):
        for A in M.faces(k):
            S = _star_facets(M, A)
            if k == d:
                if fresh:
                    out.append(Flip(A, 1 << M.n))
                continue
            union = 0
            for f in S:
                union |= f
            B = union & ~A
            if popcount(B) != d + 2 - popcount(A) or len(S) != popcount(B):
                continue
            F = A | B
            if set(S) != {F & ~(1 << x) for x in bits(B)}:
                continue
            if M.is_face(B):
                continue
            out.append(Flip(A, B))
    return sorted(out)


def is_legal(M: SimplicialComplex, flip: Flip) -> bool:
    A, B = flip.removed, flip.inserted
    d = M.dim
    if A & B or popcount(A | B) != d + 2 or not A or not B:
        return False
    if not M.is_face(A):
        return False
    if popcount(A) == d + 1:
        return A in M.facets and popcount(B) == 1 and not (M.vertex_mask & B)
    S = set(_star_facets(M, A))
    F = A | B
    return S == {F & ~(1 << x) for x in bits(B)} and not M.is_face(B)


def apply_flip(M: SimplicialComplex, flip: Flip, compact: bool = True) -> SimplicialComplex:
    """Perform a legal flip.  Removing a vertex compacts the ground set by default."""
    if not is_legal(M, flip):
        raise ComplexError(f"illegal flip {flip.describe()}")
    A, B = flip.removed, flip.inserted
    F = A | B
    n = max(M.n, F.bit_length())
    old = {F & ~(1 << x) for x in bits(B)}
    new = [f for f in M.facets if f not in old] + [F & ~(1 << y) for y in bits(A)]
    out = SimplicialComplex(n, new)
    if compact and popcount(A) == 1:
        out = out.compact()
    return out


@dataclass(frozen=True)
class ExploreResult:
    forms: frozenset
    complete: bool
    visited: int


def flip_explore(M: SimplicialComplex, budget: int = 1000) -> ExploreResult:
    """Breadth-first closure under flips that keep the vertex count fixed.

    Only (i, j) flips with i, j ≥ 2 are used.  Isomorphic complexes are
    merged by canonical form.  ``budget`` bounds the number of complexes
    expanded; ``complete`` is False when the budget ran out first.  Even a
    complete run only covers what these flips reach from M.
    """
    start = canonical_form(M)
    seen = {start.key}
    queue = deque([start.complex()])
    expanded = 0
    while queue:
        if expanded >= budget:
            return ExploreResult(frozenset(seen), False, expanded)
        cur = queue.popleft()
        expanded += 1
        for fl in enumerate_flips(cur, fresh=False):
            t = fl.type
            if t[0] < 2 or t[1] < 2:
                continue
            nxt = canonical_form(apply_flip(cur, fl))
            if nxt.key not in seen:
                seen.add(nxt.key)
                queue.append(nxt.complex())
    return ExploreResult(frozenset(seen), True, expanded)
