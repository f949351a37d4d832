"""Census of all maps carried by one finite group, up to map isomorphism.

Candidates are generating tuples: pairs (r, l) with l an involution for
oriented maps, triples (t, r, l) of involutions with t*l = l*t for flagged
maps (l = t is kept but tagged degenerate; the identity is never accepted
for r or l, matching the fixed-point-freeness of the actions).  Tuples are
scanned in lexicographic order, bucketed by an automorphism-invariant
fingerprint, and deduplicated inside each bucket by the unique-extension
isomorphism test, so the first tuple of each class is its lexicographic
least representative.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .classify import PMapClassification, classify, detect_p_map
from .errors import ResourceLimitExceeded, TheoremViolation
from .group import FiniteGroup, hom_extend, regenerated
from .maps import FlaggedMap, MapReport, OrientedMap

DEFAULT_CENSUS_MAX_ORDER = 2000


@dataclass
class CensusEntry:
    kind: str            # "oriented" | "flagged"
    tuple_: tuple        # lexicographic least generating tuple of the class
    degenerate: tuple
    class_size: int
    map: object
    report: Optional[MapReport] = None
    classification: Optional[PMapClassification] = None
    violations: tuple = ()


def _mult_table(G: FiniteGroup, g: int) -> list:
    """Row x -> x*g of the multiplication table, for tight scan loops."""
    return [G.mul(x, g) for x in range(G.order)]


def _generates(tables, n: int, half: int) -> bool:
    """BFS closure over precomputed tables; stops early once more than half
    the group is reached (a subgroup bigger than half is the whole group)."""
    seen = bytearray(n)
    seen[0] = 1
    queue = [0]
    count = 1
    for x in queue:
        for tab in tables:
            y = tab[x]
            if not seen[y]:
                seen[y] = 1
                count += 1
                if count > half:
                    return True
                queue.append(y)
    return count == n


class _Dedup:
    """One isomorphism class per bucket entry; first tuple seen is kept."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.classes: list = []  # [tuple, count]

    def add(self, cand: tuple):
        for rec in self.classes:
            src = regenerated(self.G, rec[0])
            hom = hom_extend(src, self.G, cand)
            if hom is not None and hom.is_bijective():
                rec[1] += 1
                return
        self.classes.append([cand, 1])


def _fingerprint(G: FiniteGroup, ords, csz, cand: tuple) -> tuple:
    fp = []
    for x in cand:
        fp.append(ords[x])
        fp.append(csz[x])
    for i in range(len(cand)):
        for j in range(i + 1, len(cand)):
            y = G.mul(cand[i], cand[j])
            fp.append(ords[y])
            fp.append(csz[y])
    return tuple(fp)


def _prepare(G: FiniteGroup, max_order: int):
    if G.order > max_order:
        raise ResourceLimitExceeded(
            f"census group order {G.order} exceeds the bound {max_order}",
            "max_order", max_order)
    _, csz = G.conjugacy_classes()  # per-element class size, aut-invariant
    ords = [G.order_of(x) for x in range(G.order)]
    invs = [x for x in range(1, G.order) if G.mul(x, x) == 0]
    return ords, csz, invs


def _dedup_buckets(G: FiniteGroup, buckets: dict, kind: str,
                   threads: int) -> list:
    def run(cands: list) -> list:
        d = _Dedup(G)
        for cand in cands:
            d.add(cand)
        return d.classes

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, buckets.values()))
    else:
        results = [run(cands) for cands in buckets.values()]

    classes = [rec for chunk in results for rec in chunk]
    classes.sort(key=lambda rec: rec[0])
    entries = []
    for cand, count in classes:
        if kind == "oriented":
            m = OrientedMap(G, cand[0], cand[1])
        else:
            m = FlaggedMap(G, cand[0], cand[1], cand[2])
        entries.append(CensusEntry(kind=kind, tuple_=cand,
                                   degenerate=tuple(sorted(m.degenerate)),
                                   class_size=count, map=m))
    return entries


def enumerate_oriented(G: FiniteGroup,
                       max_order: int = DEFAULT_CENSUS_MAX_ORDER,
                       threads: int = 1) -> list:
    """All oriented maps on G up to isomorphism (r != 1, l an involution)."""
    ords, csz, invs = _prepare(G, max_order)
    n, half = G.order, G.order // 2
    inv_tables = {l: _mult_table(G, l) for l in invs}
    buckets: dict = {}
    for r in range(1, n):
        table_r = _mult_table(G, r)
        for l in invs:
            if not _generates((table_r, inv_tables[l]), n, half):
                continue
            cand = (r, l)
            buckets.setdefault(_fingerprint(G, ords, csz, cand),
                               []).append(cand)
    return _dedup_buckets(G, buckets, "oriented", threads)


def enumerate_flagged(G: FiniteGroup,
                      max_order: int = DEFAULT_CENSUS_MAX_ORDER,
                      threads: int = 1) -> list:
    """All flagged maps on G up to isomorphism (t, r, l involutions with
    t*l = l*t; l = t allowed but tagged degenerate)."""
    ords, csz, invs = _prepare(G, max_order)
    n, half = G.order, G.order // 2
    inv_tables = {l: _mult_table(G, l) for l in invs}
    commuting = {t: [l for l in invs
                     if G.mul(t, l) == G.mul(l, t)] for t in invs}
    buckets: dict = {}
    for t in invs:
        table_t = inv_tables[t]
        for r in invs:
            table_r = inv_tables[r]
            pair = (table_t, table_r)
            for l in commuting[t]:
                tables = pair if l in (t, r) else pair + (inv_tables[l],)
                if not _generates(tables, n, half):
                    continue
                cand = (t, r, l)
                buckets.setdefault(_fingerprint(G, ords, csz, cand),
                                   []).append(cand)
    return _dedup_buckets(G, buckets, "flagged", threads)


def census_classify(entries: list) -> list:
    """Attach reports and, for nondegenerate p-map entries, classifications.
    Structure-law breaches are recorded on the entry, not raised."""
    for entry in entries:
        entry.report = entry.map.report()
        if entry.degenerate or detect_p_map(entry.map) is None:
            continue
        try:
            entry.classification = classify(entry.map)
        except TheoremViolation as exc:
            entry.violations = entry.violations + (str(exc),)
    return entries
