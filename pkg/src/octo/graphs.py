"""Small simple graphs (at most 16 vertices): duals, Levi graphs, brute-force isomorphism."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .fano import FanoPlane
from .surface import Triangulation

MAX_VERTICES = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Adjacency stored as one bitmask per vertex."""

    adjacency: tuple[int, ...]
    tags: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.adjacency)
        if n > MAX_VERTICES:
            raise ValueError(f"graphs are capped at {MAX_VERTICES} vertices")
        for v, row in enumerate(self.adjacency):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> n:
                raise ValueError(f"vertex {v} adjacent to a vertex outside the graph")
            for w in range(n):
                if (row >> w & 1) != (self.adjacency[w] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at {v},{w}")
        if self.tags and len(self.tags) != n:
            raise ValueError("one tag per vertex")

    @classmethod
    def from_edges(cls, n: int, edges, tags=()) -> SimpleGraph:
        adj = [0] * n
        for a, b in edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(tuple(adj), tuple(tags))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def neighbours(self, v: int) -> list[int]:
        row = self.adjacency[v]
        return [w for w in range(self.n) if row >> w & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(a + 1, self.n) if self.adjacent(a, b)]

    def tag(self, v: int) -> str:
        return self.tags[v] if self.tags else str(v)

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": [{"id": v, "tag": self.tag(v), "adjacent": self.neighbours(v)} for v in range(self.n)]}
        )

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  {v} [label="{self.tag(v)}"];' for v in range(self.n)]
        lines += [f"  {a} -- {b};" for a, b in self.edges()]
        return "\n".join(lines) + "\n}\n"


def _triangle_tag(t) -> str:
    return "triangle {" + ",".join(map(str, t)) + "}"


def dual_graph(tri: Triangulation) -> SimpleGraph:
    index = {t: i for i, t in enumerate(tri.triangles)}
    edges = [(index[t1], index[t2]) for t1, t2 in tri.edge_triangles.values()]
    return SimpleGraph.from_edges(len(index), edges, [_triangle_tag(t) for t in tri.triangles])


def incidence_graph(plane: FanoPlane) -> SimpleGraph:
    """Points are vertices 0..6, lines are vertices 7..13 (in the plane's line order)."""
    tags = [f"point {p}" for p in range(7)] + ["line {" + ",".join(map(str, l)) + "}" for l in plane.lines]
    edges = [(p, 7 + i) for i, line in enumerate(plane.lines) for p in line]
    return SimpleGraph.from_edges(14, edges, tags)


def degree_sequence(g: SimpleGraph) -> list[int]:
    return sorted(g.degree(v) for v in range(g.n))


def is_bipartite(g: SimpleGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    colour: dict[int, int] = {}
    for root in range(g.n):
        if root in colour:
            continue
        colour[root] = 0
        todo = deque([root])
        while todo:
            v = todo.popleft()
            for w in g.neighbours(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    todo.append(w)
                elif colour[w] == colour[v]:
                    return None
    return (
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


def girth(g: SimpleGraph) -> int:
    """Shortest cycle length via BFS from every vertex; 0 for a forest."""
    best = 0
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        todo = deque([root])
        while todo:
            v = todo.popleft()
            for w in g.neighbours(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    todo.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if best == 0 or length < best:
                        best = length
    return best


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> dict[int, int] | None:
    """Backtracking vertex matching, pruned by degree and by adjacency to already-mapped vertices."""
    if g1.n != g2.n or degree_sequence(g1) != degree_sequence(g2) or len(g1.edges()) != len(g2.edges()):
        return None
    n = g1.n
    # grow from a vertex along neighbours so adjacency constraints bite early
    order: list[int] = []
    for root in range(n):
        if root in order:
            continue
        todo = deque([root])
        order.append(root)
        while todo:
            v = todo.popleft()
            for w in g1.neighbours(v):
                if w not in order:
                    order.append(w)
                    todo.append(w)
    deg2 = [g2.degree(v) for v in range(n)]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        dv = g1.degree(v)
        for w in range(n):
            if used[w] or deg2[w] != dv:
                continue
            if all(g1.adjacent(v, u) == g2.adjacent(w, mapping[u]) for u in order[:k]):
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                del mapping[v]
        return False

    if not extend(0):
        return None
    return dict(sorted(mapping.items()))


def is_isomorphism(mapping: dict[int, int], g1: SimpleGraph, g2: SimpleGraph) -> bool:
    if sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    return all(g1.adjacent(a, b) == g2.adjacent(mapping[a], mapping[b]) for a in range(g1.n) for b in range(g1.n))


def heawood_graph() -> SimpleGraph:
    """Textbook construction: 14-cycle plus chords i -- i+5 for even i."""
    edges = [(i, (i + 1) % 14) for i in range(14)] + [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return SimpleGraph.from_edges(14, edges)


def cube_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(8, [(a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)])


def disjoint_union(g: SimpleGraph, isolated: int) -> SimpleGraph:
    return SimpleGraph(tuple(g.adjacency) + (0,) * isolated)
