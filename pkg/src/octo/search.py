"""Exhaustive scan of all 2^21 orientations of K7.

Fast path: masks are processed in contiguous numpy blocks.  For each of the 35
vertex triples we precompute the three edge bit positions; a triple is a
directed cycle exactly when bit(ab) == bit(bc) != bit(ac).  Per-edge cover
counts then discard every mask with an edge lying in 1 or 3+ directed
triangles, or a vertex lying in none, and only the few remaining masks go
through the full pure-Python triangulation check.

Slow path: the plain per-mask predicate, with no precomputation.  It serves as
the independent oracle on a deterministic 1/64 sample.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .surface import EDGES, TRIPLES, N, Tournament, edge_index, oriented_triangulation_test

TOTAL = 1 << len(EDGES)
BLOCK = 1 << 16
SAMPLE_STRIDE = 64

# (ab, ac, bc) bit positions for every triple a < b < c
_TRIPLE_BITS = np.array([(edge_index(a, b), edge_index(a, c), edge_index(b, c)) for a, b, c in TRIPLES])
_EDGE_TRIPLES = [[t for t, (a, b, c) in enumerate(TRIPLES) if i in (a, b, c) and j in (a, b, c)] for i, j in EDGES]
_VERTEX_EDGES = [[k for k, e in enumerate(EDGES) if v in e] for v in range(N)]


def _prefilter(masks: np.ndarray) -> np.ndarray:
    """Boolean array: masks whose directed triangles double-cover their edges and touch every vertex."""
    bits = ((masks[:, None] >> np.arange(len(EDGES), dtype=np.uint32)) & 1).astype(np.uint8)
    ab = bits[:, _TRIPLE_BITS[:, 0]]
    ac = bits[:, _TRIPLE_BITS[:, 1]]
    bc = bits[:, _TRIPLE_BITS[:, 2]]
    cyclic = ((ab == bc) & (ab != ac)).astype(np.uint8)
    cover = np.stack([cyclic[:, ts].sum(axis=1) for ts in _EDGE_TRIPLES], axis=1)
    ok = ((cover == 0) | (cover == 2)).all(axis=1)
    for edges in _VERTEX_EDGES:
        ok &= (cover[:, edges] > 0).any(axis=1)
    return ok


def fast_scan(start: int = 0, stop: int = TOTAL) -> list[int]:
    """Surviving masks in [start, stop), ascending."""
    out = []
    for lo in range(start, stop, BLOCK):
        hi = min(lo + BLOCK, stop)
        masks = np.arange(lo, hi, dtype=np.uint32)
        for m in masks[_prefilter(masks)].tolist():
            if oriented_triangulation_test(Tournament(m)):
                out.append(m)
    return out


def slow_check(mask: int) -> bool:
    """Naive predicate: list the directed triangles and test them edge by edge."""
    t = Tournament(mask)
    beats = {(a, b): t.beats(a, b) for a in range(N) for b in range(N) if a != b}
    tris = []
    for a in range(N):
        for b in range(a + 1, N):
            for c in range(b + 1, N):
                if beats[a, b] and beats[b, c] and beats[c, a]:
                    tris.append((a, b, c))
                elif beats[a, c] and beats[c, b] and beats[b, a]:
                    tris.append((a, b, c))
    if not tris:
        return False
    used = set(v for tri in tris for v in tri)
    if used != set(range(N)):
        return False
    for i in range(N):
        for j in range(i + 1, N):
            n = sum(1 for tri in tris if i in tri and j in tri)
            if n not in (0, 2):
                return False
    # connectivity over covered edges
    reach = {0}
    grew = True
    while grew:
        grew = False
        for tri in tris:
            if reach & set(tri) and not set(tri) <= reach:
                reach |= set(tri)
                grew = True
    if reach != set(range(N)):
        return False
    # each link must be one cycle: walk it and count
    for v in range(N):
        star = [tuple(u for u in tri if u != v) for tri in tris if v in tri]
        walk = [star[0]]
        cur = star[0][1]
        while True:
            nxt = [s for s in star if cur in s and s != walk[-1]]
            if len(nxt) != 1:
                return False
            if nxt[0] == star[0]:
                break
            walk.append(nxt[0])
            cur = nxt[0][0] if nxt[0][1] == cur else nxt[0][1]
        if len(walk) != len(star):
            return False
    return True


def sample_masks(seed: int = 7) -> list[int]:
    """One mask per block of 64 consecutive masks, offset drawn from a seeded RNG."""
    rng = random.Random(seed)
    return [base + rng.randrange(SAMPLE_STRIDE) for base in range(0, TOTAL, SAMPLE_STRIDE)]


def slow_scan(masks) -> list[int]:
    return [m for m in masks if slow_check(m)]


def orbit(mask: int) -> set[int]:
    t = Tournament(mask)
    return {t.relabel(p).mask for p in permutations(range(N))}


def isomorphism_classes(masks) -> list[dict]:
    """Group masks by relabeling; representative = minimum mask over all 5040 relabelings."""
    remaining = set(masks)
    classes = []
    while remaining:
        m = min(remaining)
        orb = orbit(m)
        members = remaining & orb
        remaining -= orb
        classes.append({"representative": min(orb), "size": len(members), "orbit_size": len(orb)})
    return sorted(classes, key=lambda c: c["representative"])


@dataclass
class SearchReport:
    total: int
    survivors: list[int]
    classes: list[dict]
    paley_mask: int
    oracle: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.survivors)

    @property
    def unique(self) -> bool:
        return len(self.classes) == 1 and self.paley_mask in self.survivors

    def to_dict(self) -> dict:
        d = {
            "total": self.total,
            "survivors": self.survivors,
            "classes": [{"representative": c["representative"], "size": c["size"]} for c in self.classes],
            "paley_mask": self.paley_mask,
        }
        if self.oracle:
            d["oracle"] = self.oracle
        return d


def _ranges(threads: int) -> list[tuple[int, int]]:
    step = -(-TOTAL // max(1, threads))
    return [(lo, min(lo + step, TOTAL)) for lo in range(0, TOTAL, step)]


def search_orientations(threads: int = 1, oracle: bool = False, seed: int = 7) -> SearchReport:
    """Scan every mask; the merge is a sorted union, so thread count never changes the result."""
    from .eisenstein import paley_tournament

    ranges = _ranges(threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: fast_scan(*r), ranges))
    else:
        parts = [fast_scan(*r) for r in ranges]
    survivors = sorted(set().union(*parts))
    report = SearchReport(TOTAL, survivors, isomorphism_classes(survivors), paley_tournament().mask)
    if oracle:
        report.oracle = oracle_compare(survivors, seed)
    return report


def oracle_compare(survivors: list[int], seed: int = 7) -> dict:
    sample = sample_masks(seed)
    slow = slow_scan(sample)
    fast = sorted(set(sample) & set(survivors))
    return {
        "sample_size": len(sample),
        "fast_survivors": fast,
        "slow_survivors": slow,
        "agree": fast == slow,
    }
