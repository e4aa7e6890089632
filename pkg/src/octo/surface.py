"""Tournaments on K7, their directed triangles, and closed-surface triangulations.

Edge convention (frozen): edges (i, j), i < j, are numbered lexicographically,
(0,1)=0, (0,2)=1, ..., (5,6)=20.  Bit k of a tournament mask is set when edge k
points from its low end to its high end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .fano import OrientedFanoPlane

N = 7
EDGES: tuple[tuple[int, int], ...] = tuple(combinations(range(N), 2))
EDGE_INDEX = {e: k for k, e in enumerate(EDGES)}
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(N), 3))
FULL = (1 << len(EDGES)) - 1


def edge_index(i: int, j: int) -> int:
    return EDGE_INDEX[(i, j) if i < j else (j, i)]


@dataclass(frozen=True, order=True)
class Tournament:
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= FULL:
            raise ValueError(f"mask {self.mask} outside 21 bits")

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int]]) -> Tournament:
        mask = 0
        seen = set()
        for a, b in arcs:
            k = edge_index(a, b)
            if k in seen:
                raise ValueError(f"edge {{{a},{b}}} oriented twice")
            seen.add(k)
            if a < b:
                mask |= 1 << k
        if len(seen) != len(EDGES):
            raise ValueError("every edge of K7 needs exactly one orientation")
        return cls(mask)

    @classmethod
    def transitive(cls) -> Tournament:
        return cls(FULL)

    def beats(self, a: int, b: int) -> bool:
        """True when the edge {a, b} points a -> b."""
        up = bool(self.mask >> edge_index(a, b) & 1)
        return up if a < b else not up

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) if self.mask >> k & 1 else (j, i) for k, (i, j) in enumerate(EDGES)]

    def out_degrees(self) -> list[int]:
        deg = [0] * N
        for a, _ in self.arcs():
            deg[a] += 1
        return deg

    def flip(self, i: int, j: int) -> Tournament:
        return Tournament(self.mask ^ (1 << edge_index(i, j)))

    def reverse(self) -> Tournament:
        return Tournament(self.mask ^ FULL)

    def relabel(self, perm: Sequence[int]) -> Tournament:
        """Image under v -> perm[v]: perm[a] -> perm[b] whenever a -> b."""
        return Tournament.from_arcs((perm[a], perm[b]) for a, b in self.arcs())


def directed_three_cycles(t: Tournament) -> list[tuple[int, int, int]]:
    """All directed 3-cycles, each once, rotated smallest-first, in lexicographic order."""
    out = []
    for a, b, c in TRIPLES:
        if t.beats(a, b) and t.beats(b, c) and t.beats(c, a):
            out.append((a, b, c))
        elif t.beats(a, c) and t.beats(c, b) and t.beats(b, a):
            out.append((a, c, b))
    return out


# --- triangulations --------------------------------------------------------


@dataclass(frozen=True)
class Defect:
    condition: str  # "edge_cover" | "connectivity" | "vertex_link"
    witness: tuple
    message: str


class TriangulationError(ValueError):
    def __init__(self, defect: Defect):
        super().__init__(defect.message)
        self.defect = defect


@dataclass(frozen=True)
class Triangulation:
    vertex_count: int
    triangles: tuple[tuple[int, int, int], ...]
    edge_triangles: dict  # edge -> (t1, t2)
    links: dict  # vertex -> link cycle as a tuple of vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_triangles))

    def to_list(self) -> list[list[int]]:
        return [list(t) for t in self.triangles]


def _normalize(triangles: Iterable[Sequence[int]], vertex_count: int) -> tuple[tuple[int, int, int], ...]:
    if not 1 <= vertex_count <= 14:
        raise ValueError("vertex_count must be in 1..14")
    out = set()
    for raw in triangles:
        tri = tuple(sorted(raw))
        if len(tri) != 3 or len(set(tri)) != 3:
            raise ValueError(f"malformed triangle {tuple(raw)!r}")
        if any(not isinstance(v, int) or not 0 <= v < vertex_count for v in tri):
            raise ValueError(f"triangle {tuple(raw)!r} has a vertex outside 0..{vertex_count - 1}")
        if tri in out:
            raise ValueError(f"triangle {tri!r} listed twice")
        out.add(tri)
    return tuple(sorted(out))  # type: ignore[arg-type]


def _edges_of(tri: Sequence[int]) -> tuple[tuple[int, int], ...]:
    a, b, c = tri
    return ((a, b), (a, c), (b, c))


def triangulation_defect(triangles: Iterable[Sequence[int]], vertex_count: int) -> Defect | None:
    """First violated condition, or None when the triangles form a closed surface."""
    return _analyse(_normalize(triangles, vertex_count), vertex_count)[0]


def _analyse(tris, n):
    if not tris:
        return Defect("connectivity", (), "no triangles"), None
    cover: dict[tuple[int, int], list] = {}
    for t in tris:
        for e in _edges_of(t):
            cover.setdefault(e, []).append(t)
    for e in sorted(cover):
        if len(cover[e]) != 2:
            word = "once" if len(cover[e]) == 1 else f"{len(cover[e])} times"
            return Defect("edge_cover", (e, len(cover[e])), f"edge {e} covered {word}"), None

    adj: dict[int, set] = {v: set() for v in range(n)}
    for a, b in cover:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        return Defect("connectivity", (missing,), f"vertex {missing} not reached by the edge graph"), None

    links = {}
    for v in range(n):
        # link edges: the side of each incident triangle opposite v
        nbr: dict[int, list] = {}
        for t in tris:
            if v in t:
                x, y = (u for u in t if u != v)
                nbr.setdefault(x, []).append(y)
                nbr.setdefault(y, []).append(x)
        # double edge cover already forces every link vertex to have degree 2
        start = min(nbr)
        cycle = [start]
        prev, cur = None, start
        while True:
            a, b = nbr[cur]
            step = a if a != prev else b
            if step == start:
                break
            prev, cur = cur, step
            cycle.append(cur)
        if len(cycle) != len(nbr):
            return (
                Defect(
                    "vertex_link",
                    (v, len(cycle), len(nbr)),
                    f"link of vertex {v} splits: cycle of {len(cycle)} out of {len(nbr)} neighbours",
                ),
                None,
            )
        links[v] = tuple(cycle)
    edge_triangles = {e: tuple(ts) for e, ts in cover.items()}
    return None, Triangulation(n, tris, edge_triangles, links)


def check_triangulation(triangles: Iterable[Sequence[int]], vertex_count: int) -> Triangulation:
    """Validate a closed combinatorial surface; raise TriangulationError naming the first defect."""
    defect, tri = _analyse(_normalize(triangles, vertex_count), vertex_count)
    if defect is not None:
        raise TriangulationError(defect)
    return tri


def euler_characteristic(tri: Triangulation) -> int:
    return tri.vertex_count - len(tri.edge_triangles) + len(tri.triangles)


def _dual_adjacency(tri: Triangulation) -> dict:
    adj: dict[tuple, list] = {t: [] for t in tri.triangles}
    for e, (t1, t2) in sorted(tri.edge_triangles.items()):
        adj[t1].append((t2, e))
        adj[t2].append((t1, e))
    return adj


def dual_bipartition(tri: Triangulation) -> tuple[frozenset, frozenset] | None:
    """Two-colour the dual; the class holding the smallest triangle comes first ("black")."""
    adj = _dual_adjacency(tri)
    colour: dict[tuple, int] = {}
    for root in tri.triangles:
        if root in colour:
            continue
        colour[root] = 0
        todo = deque([root])
        while todo:
            t = todo.popleft()
            for u, _ in adj[t]:
                if u not in colour:
                    colour[u] = 1 - colour[t]
                    todo.append(u)
                elif colour[u] == colour[t]:
                    return None
    first = colour[min(tri.triangles)]
    black = frozenset(t for t, c in colour.items() if c == first)
    white = frozenset(t for t, c in colour.items() if c != first)
    return black, white


def coherent_orientation(tri: Triangulation) -> dict | None:
    """Cyclic orientation per triangle inducing opposite directions on shared edges, if any."""
    adj = _dual_adjacency(tri)
    orient: dict[tuple, tuple] = {}

    def direction(cyc, e):
        a, b = e
        i = cyc.index(a)
        return 1 if cyc[(i + 1) % 3] == b else -1

    for root in tri.triangles:
        if root in orient:
            continue
        orient[root] = root
        todo = deque([root])
        while todo:
            t = todo.popleft()
            for u, e in adj[t]:
                want = -direction(orient[t], e)
                if u not in orient:
                    cand = u if direction(u, e) == want else (u[0], u[2], u[1])
                    orient[u] = cand
                    todo.append(u)
                elif direction(orient[u], e) != want:
                    return None
    return orient


def is_orientable(tri: Triangulation) -> bool:
    return coherent_orientation(tri) is not None


def triangles_of(t: Tournament) -> list[tuple[int, int, int]]:
    return [tuple(sorted(c)) for c in directed_three_cycles(t)]  # type: ignore[misc]


def oriented_triangulation_test(t: Tournament) -> bool:
    """Do the directed 3-cycles of ``t`` triangulate a closed surface on all 7 vertices?"""
    return triangulation_defect(directed_three_cycles(t), N) is None


class NotTriangulatingError(ValueError):
    pass


def tournament_triangulation(t: Tournament) -> Triangulation:
    try:
        return check_triangulation(directed_three_cycles(t), N)
    except TriangulationError as exc:
        raise NotTriangulatingError(f"not a triangulating orientation: {exc}") from exc


def _classes(t: Tournament):
    tri = tournament_triangulation(t)
    split = dual_bipartition(tri)
    if split is None:
        raise NotTriangulatingError("not a triangulating orientation: dual is not bipartite")
    cycles = {tuple(sorted(c)): c for c in directed_three_cycles(t)}
    black, white = split
    anchor = min(cycles.values())
    if tuple(sorted(anchor)) not in black:
        black, white = white, black
    return [cycles[s] for s in sorted(black, key=lambda s: cycles[s])], [
        cycles[s] for s in sorted(white, key=lambda s: cycles[s])
    ]


def black_triangles(t: Tournament) -> list[tuple[int, int, int]]:
    """Dual colour class containing the lexicographically smallest directed triangle."""
    return _classes(t)[0]


def white_triangles(t: Tournament) -> list[tuple[int, int, int]]:
    return _classes(t)[1]


def fano_from_orientation(t: Tournament) -> OrientedFanoPlane:
    return OrientedFanoPlane(tuple(black_triangles(t)))


def tournaments_isomorphic(t1: Tournament, t2: Tournament) -> tuple[int, ...] | None:
    """First permutation (lexicographic) with t1.relabel(perm) == t2."""
    arcs1 = t1.arcs()
    for perm in permutations(range(N)):
        if all(t2.beats(perm[a], perm[b]) for a, b in arcs1):
            return perm
    return None


def relabel_triangles(tris: Iterable[Sequence[int]], perm: Sequence[int]) -> frozenset:
    return frozenset(tuple(sorted(perm[v] for v in t)) for t in tris)


def triangle_orbit(tris: Iterable[Sequence[int]]) -> set[frozenset]:
    base = [tuple(t) for t in tris]
    return {relabel_triangles(base, p) for p in permutations(range(N))}


def triangulations_isomorphic(t1: Triangulation, t2: Triangulation) -> tuple[int, ...] | None:
    if t1.vertex_count != t2.vertex_count or len(t1.triangles) != len(t2.triangles):
        return None
    target = frozenset(t2.triangles)
    for perm in permutations(range(t1.vertex_count)):
        if relabel_triangles(t1.triangles, perm) == target:
            return perm
    return None


def enumerate_triangulations() -> list[Triangulation]:
    """Every labelled closed surface triangulation whose 1-skeleton is all of K7.

    Backtracking picks the first edge still short of two triangles and commits
    to the full set of triangles it will lie in, so each family is produced once.
    """
    edge_tris = {e: [t for t in TRIPLES if e[0] in t and e[1] in t] for e in EDGES}
    cover = {e: 0 for e in EDGES}
    chosen: list[tuple[int, int, int]] = []
    families = []

    def fits(t):
        return all(cover[e] < 2 for e in _edges_of(t))

    def place(ts, delta):
        for t in ts:
            for e in _edges_of(t):
                cover[e] += delta

    def search():
        e = next((e for e in EDGES if cover[e] < 2), None)
        if e is None:
            families.append(tuple(sorted(chosen)))
            return
        need = 2 - cover[e]
        cands = [t for t in edge_tris[e] if t not in chosen and fits(t)]
        # two distinct triangles through e share no other edge, so picks never collide
        for pick in combinations(cands, need):
            place(pick, 1)
            chosen.extend(pick)
            search()
            del chosen[len(chosen) - need :]
            place(pick, -1)

    search()
    out = []
    for fam in families:
        if triangulation_defect(fam, N) is None:
            out.append(check_triangulation(fam, N))
    return out


def canonical_mask(t: Tournament) -> int:
    """Smallest mask among all 5040 relabelings."""
    return min(t.relabel(p).mask for p in permutations(range(N)))


def cycle_count_identity(t: Tournament) -> int:
    """35 - sum over vertices of C(outdeg, 2): the number of directed triangles."""
    return 35 - sum(d * (d - 1) // 2 for d in t.out_degrees())
