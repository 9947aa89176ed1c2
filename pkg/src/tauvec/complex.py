"""Immutable simplicial complexes stored by their facets.

Faces are bitmasks over ground-set positions ``0..n-1``.  The public API
speaks 1-based vertex labels (``1..n``), matching the census file format.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_GROUND = 63


class ComplexError(ValueError):
    pass


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def _maximalize(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (-popcount(x), x)):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class FaceVectors:
    f: tuple[int, ...]
    h: tuple[int, ...] | None
    g: tuple[int, ...] | None

    @property
    def g_half(self) -> tuple[int, ...] | None:
        """g_0 .. g_{ceil(d/2)}, the part constrained by the g-theorem."""
        if self.g is None:
            return None
        d = len(self.f) - 2
        return self.g[: (d + 1) // 2 + 1]


@dataclass(frozen=True)
class Classification:
    is_pure: bool
    is_strongly_connected: bool
    is_closed_pseudomanifold: bool
    neighborliness: int


class SimplicialComplex:
    """A simplicial complex on the ground set ``{0, ..., n-1}``.

    Zero facets means the empty complex ``{∅}``; the void complex (no faces
    at all) is not representable.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "facets", "__dict__")

    def __init__(self, n: int, facets: Iterable[int] = ()):
        if n < 0 or n > MAX_GROUND:
            raise ComplexError(f"ground set size {n} outside 0..{MAX_GROUND}")
        full = (1 << n) - 1
        fs = []
        for m in facets:
            if m & ~full:
                raise ComplexError(f"face {bits(m)} not inside ground set of size {n}")
            if m:
                fs.append(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", _maximalize(fs))

    def __setattr__(self, key, value):
        if key in ("n", "facets"):
            raise AttributeError("SimplicialComplex is immutable")
        object.__setattr__(self, key, value)

    # construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]], n: int | None = None) -> "SimplicialComplex":
        """Build from 1-based vertex lists.  ``n`` defaults to the largest label."""
        facets = [list(f) for f in facets]
        labels = [v for f in facets for v in f]
        for v in labels:
            if not isinstance(v, int) or v < 1:
                raise ComplexError(f"vertex label {v!r} must be a positive integer")
        if n is None:
            n = max(labels, default=0)
        if labels and max(labels) > n:
            raise ComplexError(f"vertex label {max(labels)} exceeds ground set size {n}")
        return cls(n, (mask_of(v - 1 for v in f) for f in facets))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, [(1 << n) - 1] if n else [])

    # basic data ---------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> list[int]:
        return bits(self.vertex_mask)

    @property
    def is_empty(self) -> bool:
        """True for the empty complex {∅}."""
        return not self.facets

    @cached_property
    def dim(self) -> int:
        return max((popcount(f) for f in self.facets), default=0) - 1

    def facet_lists(self) -> list[list[int]]:
        return [[v + 1 for v in bits(f)] for f in self.facets]

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={self.facet_lists()})"

    def __getstate__(self):
        return (self.n, self.facets)

    def __setstate__(self, state):
        object.__setattr__(self, "n", state[0])
        object.__setattr__(self, "facets", state[1])

    # faces --------------------------------------------------------------

    @cached_property
    def _faces_by_dim(self) -> tuple[tuple[int, ...], ...]:
        d = self.dim
        layers: list[set[int]] = [set() for _ in range(d + 1)]
        for f in self.facets:
            vs = bits(f)
            for size in range(1, len(vs) + 1):
                layer = layers[size - 1]
                for sub in combinations(vs, size):
                    layer.add(mask_of(sub))
        return tuple(tuple(sorted(layer)) for layer in layers)

    def faces(self, k: int) -> tuple[int, ...]:
        """All faces of dimension ``k`` as bitmasks (``k = -1`` gives the empty face)."""
        if k == -1:
            return (0,)
        if k < -1 or k > self.dim:
            return ()
        return self._faces_by_dim[k]

    def iter_faces(self) -> Iterator[int]:
        yield 0
        for layer in self._faces_by_dim:
            yield from layer

    @cached_property
    def _face_set(self) -> frozenset[int]:
        return frozenset(self.iter_faces())

    def is_face(self, mask: int) -> bool:
        if mask == 0:
            return True
        if popcount(mask) > self.dim + 1:
            return False
        return mask in self._face_set

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return (1,) + tuple(len(layer) for layer in self._faces_by_dim)

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def face_vectors(self) -> FaceVectors:
        f = self.f_vector
        if not self.is_pure():
            return FaceVectors(f, None, None)
        h = h_from_f(f)
        return FaceVectors(f, h, g_from_h(h))

    # derived complexes --------------------------------------------------

    def restrict(self, W: int) -> "SimplicialComplex":
        """Induced subcomplex on ``W`` keeping the original ground set."""
        out = set()
        for f in self.facets:
            g = f & W
            if g:
                out.add(g)
        return SimplicialComplex(self.n, out)

    def induced(self, W: int) -> "SimplicialComplex":
        """Induced subcomplex C[W], re-indexed so its ground set is W."""
        pos = bits(W)
        new_index = {p: i for i, p in enumerate(pos)}
        out = []
        for f in self.restrict(W).facets:
            out.append(mask_of(new_index[p] for p in bits(f)))
        return SimplicialComplex(len(pos), out)

    def neighbors(self, v: int) -> int:
        m = 0
        for f in self.facets:
            if f >> v & 1:
                m |= f
        return m & ~(1 << v)

    def link(self, v: int) -> "SimplicialComplex":
        """Link of vertex ``v`` (0-based) on the ground set of its neighbours."""
        if not self.vertex_mask >> v & 1:
            raise ComplexError(f"vertex {v + 1} is not used by the complex")
        return self.face_link(1 << v)

    def face_link(self, face: int) -> "SimplicialComplex":
        star = [f & ~face for f in self.facets if f & face == face]
        ground = 0
        for f in star:
            ground |= f
        return SimplicialComplex(self.n, star).induced(ground)

    def compact(self) -> "SimplicialComplex":
        """Drop unused ground-set elements."""
        if self.vertex_mask == self.full_mask:
            return self
        return self.induced(self.vertex_mask)

    def with_ghosts(self, g: int) -> "SimplicialComplex":
        """Same faces on a ground set enlarged by ``g`` unused elements."""
        return SimplicialComplex(self.n + g, self.facets)

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Apply ``perm`` (0-based, position ``i`` goes to ``perm[i]``)."""
        return SimplicialComplex(self.n, (mask_of(perm[p] for p in bits(f)) for f in self.facets))

    def skeleton(self, k: int) -> "SimplicialComplex":
        if k >= self.dim:
            return self
        return SimplicialComplex(self.n, self.faces(k))

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(bits(e)) for e in self.faces(1)]

    def adjacency(self) -> list[int]:
        """Neighbour bitmask of every ground-set element in the 1-skeleton."""
        adj = [0] * self.n
        for e in self.faces(1):
            a, b = bits(e)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    # structure ----------------------------------------------------------

    def ridges(self) -> dict[int, list[int]]:
        """Map each codimension-one face of a facet to the facets containing it."""
        out: dict[int, list[int]] = {}
        for f in self.facets:
            for v in bits(f):
                out.setdefault(f & ~(1 << v), []).append(f)
        return out

    def is_strongly_connected(self) -> bool:
        if not self.is_pure():
            return False
        if len(self.facets) <= 1:
            return True
        ridge_map = self.ridges()
        seen = {self.facets[0]}
        stack = [self.facets[0]]
        while stack:
            f = stack.pop()
            for v in bits(f):
                for g in ridge_map[f & ~(1 << v)]:
                    if g not in seen:
                        seen.add(g)
                        stack.append(g)
        return len(seen) == len(self.facets)

    def is_closed_pseudomanifold(self) -> bool:
        if self.dim < 1 or not self.is_strongly_connected():
            return False
        return all(len(fs) == 2 for fs in self.ridges().values())

    def boundary(self) -> "SimplicialComplex":
        """Ridges lying in exactly one facet (boundary of a pseudomanifold with boundary)."""
        return SimplicialComplex(self.n, (r for r, fs in self.ridges().items() if len(fs) == 1))

    def neighborliness(self) -> int:
        """Largest k such that every k-subset of the vertex set is a face."""
        f0 = popcount(self.vertex_mask)
        k = 0
        for size in range(1, self.dim + 2):
            if self.f_vector[size] == comb(f0, size):
                k = size
            else:
                break
        return k

    def classify(self) -> Classification:
        pure = self.is_pure()
        sc = self.is_strongly_connected()
        return Classification(
            is_pure=pure,
            is_strongly_connected=sc,
            is_closed_pseudomanifold=self.is_closed_pseudomanifold(),
            neighborliness=self.neighborliness(),
        )

    def minimal_nonfaces(self) -> list[int]:
        """Inclusion-minimal subsets of the ground set that are not faces."""
        out = set()
        for face in self.iter_faces():
            rest = self.full_mask & ~face
            for x in bits(rest):
                cand = face | (1 << x)
                if cand in out or self.is_face(cand):
                    continue
                if all(self.is_face(cand & ~(1 << y)) for y in bits(face)):
                    out.add(cand)
        return sorted(out, key=lambda m: (popcount(m), m))

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic (f_{-1} excluded)."""
        return sum((-1) ** i * x for i, x in enumerate(self.f_vector[1:]))


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h-vector of a pure complex from its f-vector ``(f_{-1}, ..., f_d)``."""
    d = len(f) - 2
    return tuple(
        sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 2)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    d = len(h) - 2
    return (1,) + tuple(
        sum(comb(d + 1 - k, d - j) * h[k] for k in range(j + 2)) for j in range(d + 1)
    )


def g_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """g_i = h_i - h_{i-1} for i = 0..d+2 (h padded with zeros)."""
    padded = list(h) + [0]
    return tuple(padded[i] - (padded[i - 1] if i else 0) for i in range(len(padded)))


def build_complex(facets: Iterable[Sequence[int]], ground_set_size: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets, ground_set_size)


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Join on the disjoint union of the two ground sets (c2 shifted after c1)."""
    n = c1.n + c2.n
    if n > MAX_GROUND:
        raise ComplexError(f"join would need {n} ground elements")
    f1 = c1.facets or (0,)
    f2 = [g << c1.n for g in (c2.facets or (0,))]
    return SimplicialComplex(n, (a | b for a in f1 for b in f2))
