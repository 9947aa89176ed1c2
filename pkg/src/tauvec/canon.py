"""Canonical labelling of simplicial complexes.

Individualization-refinement on the vertex colouring, with the smallest
relabelled facet list as certificate.  Automorphisms discovered at leaves
prune sibling branches that lie in one orbit of the pointwise stabilizer of
the current prefix.  Certificates are compared exactly, never hashed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, bits, mask_of


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    facets: tuple[int, ...]
    relabeling: tuple[int, ...]  # old position -> canonical position

    @property
    def key(self) -> tuple:
        return (self.n, self.facets)

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, self.facets)


def _refine(colors: list[int], vfacets: list[list[tuple[int, ...]]]) -> list[int]:
    """Equitable-style refinement; colours stay ordered consistently with the input."""
    m = len(colors)
    ncls = len(set(colors))
    while True:
        keys = []
        for v in range(m):
            sig = sorted(tuple(sorted(colors[u] for u in F if u != v)) for F in vfacets[v])
            keys.append((colors[v], tuple(sig)))
        order = sorted(set(keys))
        rank = {k: i for i, k in enumerate(order)}
        colors = [rank[k] for k in keys]
        if len(order) == ncls:
            return colors
        ncls = len(order)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


class _Search:
    def __init__(self, m: int, facets: list[tuple[int, ...]]):
        self.m = m
        self.facets = facets
        self.vfacets: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
        for F in facets:
            for v in F:
                self.vfacets[v].append(F)
        self.best_cert = None
        self.best_lab = None
        self.automorphisms: list[list[int]] = []

    def cert(self, lab: list[int]) -> tuple[int, ...]:
        return tuple(sorted(mask_of(lab[v] for v in F) for F in self.facets))

    def run(self):
        colors = _refine([0] * self.m, self.vfacets)
        self._search(colors, [])
        return self.best_cert, self.best_lab

    def _search(self, colors: list[int], prefix: list[int]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            lab = colors
            cert = self.cert(lab)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_lab = cert, list(lab)
            elif cert == self.best_cert:
                inv_best = [0] * self.m
                for v, p in enumerate(self.best_lab):
                    inv_best[p] = v
                self.automorphisms.append([inv_best[lab[v]] for v in range(self.m)])
            return
        done: list[int] = []
        for v in target:
            if done and self._same_orbit(v, done, prefix):
                continue
            done.append(v)
            self._search(_refine(_individualize(colors, v), self.vfacets), prefix + [v])

    def _same_orbit(self, v: int, done: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(u in orbit for u in done)


def canonical_form(C: SimplicialComplex) -> CanonicalForm:
    """Canonical facet list; isomorphic complexes on equal ground sets agree.

    Unused ground-set elements are placed after all vertices.
    """
    used = C.vertices
    pos = {v: i for i, v in enumerate(used)}
    facets = [tuple(pos[v] for v in bits(f)) for f in C.facets]
    cert, lab = _Search(len(used), facets).run()
    relabel = [0] * C.n
    for v, i in pos.items():
        relabel[v] = lab[i]
    nxt = len(used)
    for v in range(C.n):
        if v not in pos:
            relabel[v] = nxt
            nxt += 1
    return CanonicalForm(C.n, cert if cert is not None else (), tuple(relabel))


def isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    return canonical_form(a).key == canonical_form(b).key
