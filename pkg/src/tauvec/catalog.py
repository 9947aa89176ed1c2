"""Facet-list catalogs: parsing, serialization and batch τ pipelines.

Two line formats are accepted.  The census format ``name=[[1,2,3],[1,2,4],...]``
uses 1-based labels and may wrap over several lines until the brackets
balance.  The JSON-lines format is one ``{"name": .., "n": .., "facets": [[..]]}``
object per line.  Blank lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .complex import MAX_GROUND, ComplexError, SimplicialComplex
from .graphs import Graph, tau0_graph
from .linalg import GF2, Field
from .tau import CapExceeded, _check_cap, tau_vector
from .vectors import TauVector, fmt_rational

log = logging.getLogger(__name__)


class CatalogParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass
class CatalogEntry:
    name: str
    complex: SimplicialComplex
    line: int = 0
    polytopal: bool | None = None

    @cached_property
    def compacted(self) -> SimplicialComplex:
        return self.complex.compact()

    @property
    def f(self) -> tuple[int, ...]:
        return tuple(self.complex.f_vector)

    @property
    def g(self) -> tuple[int, ...]:
        return tuple(self.compacted.face_vectors().g)

    @property
    def g2(self) -> int:
        g = self.g
        return g[2] if len(g) > 2 else 0


def _check_facets(facets, line: int, n: int | None) -> SimplicialComplex:
    if not isinstance(facets, list) or not all(isinstance(F, list) for F in facets):
        raise CatalogParseError(line, "facets must be a list of lists")
    labels = set()
    for F in facets:
        for v in F:
            if not isinstance(v, int) or isinstance(v, bool):
                raise CatalogParseError(line, f"label {v!r} is not an integer")
            if v <= 0:
                raise CatalogParseError(line, f"label {v} must be a positive integer")
            labels.add(v)
    top = max(labels, default=0)
    size = top if n is None else n
    if size < top:
        raise CatalogParseError(line, f"n={n} is smaller than the largest label {top}")
    if size > MAX_GROUND:
        raise CatalogParseError(line, f"{size} labels exceed the limit of {MAX_GROUND}")
    try:
        return SimplicialComplex.from_facets([tuple(F) for F in facets], size)
    except ComplexError as exc:
        raise CatalogParseError(line, str(exc)) from exc


def _parse_json(text: str, line: int) -> CatalogEntry:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(line, f"bad JSON: {exc.msg}") from exc
    if not isinstance(obj, dict) or "facets" not in obj:
        raise CatalogParseError(line, "JSON entry needs a 'facets' key")
    n = obj.get("n")
    if n is not None and (not isinstance(n, int) or n < 0):
        raise CatalogParseError(line, f"bad ground-set size {n!r}")
    name = str(obj.get("name", f"entry{line}"))
    return CatalogEntry(name, _check_facets(obj["facets"], line, n), line, obj.get("polytopal"))


def _parse_assignment(text: str, line: int) -> CatalogEntry:
    name, sep, body = text.partition("=")
    name = name.strip()
    if not sep or not name:
        raise CatalogParseError(line, "expected name=[[...],...]")
    try:
        facets = json.loads(body)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(line, f"bad facet list: {exc.msg}") from exc
    return CatalogEntry(name, _check_facets(facets, line, None), line)


def parse_facet_list(text: str) -> list[CatalogEntry]:
    """Entries in file order; raises CatalogParseError with the starting line number."""
    out: list[CatalogEntry] = []
    names: set[str] = set()
    pending: list[str] = []
    start = 0

    def finish(entry: CatalogEntry):
        if entry.name in names:
            raise CatalogParseError(entry.line, f"duplicate name {entry.name!r}")
        names.add(entry.name)
        out.append(entry)

    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not pending:
            if not s or s.startswith("#"):
                continue
            if s.startswith("{"):
                finish(_parse_json(s, lineno))
                continue
            start = lineno
        pending.append(s)
        joined = "".join(pending)
        if "=" in joined and joined.count("[") == joined.count("]") and joined.count("[") > 0:
            pending = []
            finish(_parse_assignment(joined, start))
    if pending:
        raise CatalogParseError(start, "unterminated facet list")
    return out


def read_catalog(path) -> list[CatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_facet_list(fh.read())


def serialize(entries, fmt: str = "census") -> str:
    """Census lines, or JSON lines; entries with unused top labels always use JSON."""
    lines = []
    for e in entries:
        facets = e.complex.facet_lists()
        top = max((max(F) for F in facets if F), default=0)
        # the census format cannot carry trailing unused labels
        if fmt == "json" or top != e.complex.n:
            lines.append(json.dumps({"name": e.name, "n": e.complex.n, "facets": facets}, separators=(",", ":")))
        else:
            lines.append(e.name + "=" + json.dumps(facets, separators=(",", ":")))
    return "\n".join(lines) + "\n"


# batch pipelines --------------------------------------------------------


def decimal(x: Fraction) -> str:
    return f"{float(x):.12f}"


@lru_cache(maxsize=None)
def bl_reference(g_half: tuple[int, ...], dim: int, p: int | None = 2) -> TauVector | None:
    """τ of the Billera-Lee sphere with the given g-vector half, or None if there is none."""
    from .constructions import billera_lee, m_sequence_check

    if not m_sequence_check(g_half):
        return None
    return tau_vector(billera_lee(dim + 1, g_half).sphere, Field(p))


@dataclass(frozen=True)
class BatchRow:
    name: str
    f: tuple[int, ...]
    g1: int
    g2: int
    tau: tuple[Fraction, ...]  # τ_0 only, or τ_{-1}..τ_d
    polytopal: bool | None = None


@dataclass(frozen=True)
class BucketSummary:
    f0: int
    g2: int
    count: int
    tau0_max: Fraction
    tau0_min: Fraction
    bl_tau0: Fraction | None
    max_equals_bl: bool | None
    min_only_nonpolytopal: bool | None


@dataclass(frozen=True)
class BatchResult:
    which: str
    rows: tuple[BatchRow, ...]
    summaries: tuple[BucketSummary, ...]
    skipped: tuple[str, ...]

    def rows_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        width = max((len(r.f) for r in self.rows), default=1)
        ntau = max((len(r.tau) for r in self.rows), default=1)
        if self.which == "tau0_only":
            tau_names = ["tau0"]
        else:
            tau_names = [f"tau{i}" if i >= 0 else "tau_m1" for i in range(-1, ntau - 1)]
        header = ["name"] + [f"f{i}" for i in range(width - 1)] + ["g1", "g2"]
        for t in tau_names:
            header += [t, t + "_decimal"]
        header.append("polytopal")
        w.writerow(header)
        for r in self.rows:
            fs = list(r.f[1:]) + [""] * (width - len(r.f))
            line = [r.name] + fs + [r.g1, r.g2]
            for x in r.tau:
                line += [fmt_rational(x), decimal(x)]
            line.append("" if r.polytopal is None else int(r.polytopal))
            w.writerow(line)
        return buf.getvalue()

    def summary_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["f0", "g2", "count", "tau0_max", "tau0_min", "bl_tau0", "bl_tau0_decimal", "max_equals_bl", "min_only_nonpolytopal"])
        for s in self.summaries:
            w.writerow([
                s.f0, s.g2, s.count, fmt_rational(s.tau0_max), fmt_rational(s.tau0_min),
                "" if s.bl_tau0 is None else fmt_rational(s.bl_tau0),
                "" if s.bl_tau0 is None else decimal(s.bl_tau0),
                "" if s.max_equals_bl is None else int(s.max_equals_bl),
                "" if s.min_only_nonpolytopal is None else int(s.min_only_nonpolytopal),
            ])
        return buf.getvalue()


def _summaries(rows: list[BatchRow], which: str, entries: dict, field: Field) -> list[BucketSummary]:
    buckets: dict[tuple[int, int], list[BatchRow]] = {}
    for r in rows:
        buckets.setdefault((r.f[1], r.g2), []).append(r)
    out = []
    for (f0, g2), members in sorted(buckets.items()):
        t0 = [r.tau[0] if which == "tau0_only" else r.tau[1] for r in members]
        hi, lo = max(t0), min(t0)
        e = entries[members[0].name]
        D = e.compacted
        g = D.face_vectors().g_half
        ref = bl_reference(tuple(g), D.dim, field.p) if g is not None and D.dim >= 1 else None
        bl0 = ref[0] if ref is not None else None
        flag = None
        if all(r.polytopal is not None for r in members):
            at_min = [r for r, t in zip(members, t0) if t == lo]
            flag = all(not r.polytopal for r in at_min)
        out.append(BucketSummary(f0, g2, len(members), hi, lo, bl0, None if bl0 is None else hi == bl0, flag))
    return out


def batch_tau(
    entries,
    field: Field = GF2,
    which: str = "full",
    workers: int = 1,
    cap: int | None = None,
) -> BatchResult:
    """τ for every entry, in input order, plus per-(f0, g2) summaries.

    ``tau0_only`` uses the graph fast path.  Entries over the cap are skipped
    with a warning.
    """
    if which not in ("full", "tau0_only"):
        raise ValueError("which must be 'full' or 'tau0_only'")
    rows, skipped = [], []
    by_name = {}
    for e in entries:
        D = e.compacted
        try:
            _check_cap(D, cap)
        except CapExceeded as exc:
            log.warning("skipping %s: %s", e.name, exc)
            skipped.append(e.name)
            continue
        if which == "tau0_only":
            tau = (tau0_graph(Graph.of_complex(D)),)
        else:
            tau = tuple(tau_vector(D, field, workers, cap).values)
        g = D.face_vectors().g
        g1 = g[1] if len(g) > 1 else 0
        g2 = g[2] if len(g) > 2 else 0
        rows.append(BatchRow(e.name, tuple(D.f_vector), g1, g2, tau, e.polytopal))
        by_name[e.name] = e
    return BatchResult(which, tuple(rows), tuple(_summaries(rows, which, by_name, field)), tuple(skipped))


def bl_match_census(entries, field: Field = GF2, cap: int | None = None) -> dict[tuple[int, int], int]:
    """Per (f0, g2): how many entries have exactly the τ-vector of their Billera-Lee sphere."""
    counts: dict[tuple[int, int], int] = {}
    for e in entries:
        D = e.compacted
        fv = D.face_vectors()
        key = (D.n, fv.g[2] if fv.g is not None and len(fv.g) > 2 else 0)
        counts.setdefault(key, 0)
        ref = bl_reference(tuple(fv.g_half), D.dim, field.p) if fv.g is not None else None
        if ref is not None and tuple(tau_vector(D, field, 1, cap).values) == tuple(ref.values):
            counts[key] += 1
    return dict(sorted(counts.items()))
