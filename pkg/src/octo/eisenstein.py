"""Eisenstein integers, the norm-7 ideal generated by 2 - w, and the hexagon map.

``w`` is the primitive cube root of unity (-1 + sqrt(-3)) / 2, so w^2 = -1 - w.
Reduction modulo (2 - w) is the ring map Z[w] -> Z/7 sending w to 2.  The mirror
ideal (2 - w^2) = (3 + w) sends w to 4 instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

SQUARES = frozenset({1, 2, 4})
NON_SQUARES = frozenset({3, 5, 6})


@dataclass(frozen=True, order=True)
class EisensteinInt:
    a: int
    b: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def conjugate(self) -> EisensteinInt:
        # a + b w^2 = (a - b) - b w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def divides(self, other: EisensteinInt) -> bool:
        """Exact divisibility test: self | other in Z[w]."""
        n = self.norm()
        if n == 0:
            return other == ZERO
        q = other * self.conjugate()
        return q.a % n == 0 and q.b % n == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = {1: "w", -1: "-w"}.get(self.b, f"{self.b}w")
        if self.a == 0:
            return w
        return f"{self.a}{'+' if self.b > 0 else '-'}{w.lstrip('-')}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
LAMBDA_GEN = EisensteinInt(2, -1)  # 2 - w
MIRROR_GEN = EisensteinInt(3, 1)  # 2 - w^2
UNITS = (ONE, -OMEGA2, OMEGA, -ONE, OMEGA2, -OMEGA)  # counterclockwise from 1


def eis_add(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    return x + y


def eis_mul(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    return x * y


def eis_neg(x: EisensteinInt) -> EisensteinInt:
    return -x


def eis_norm(x: EisensteinInt) -> int:
    return x.norm()


@dataclass(frozen=True, order=True)
class Residue:
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % 7)

    def __add__(self, other: Residue) -> Residue:
        return Residue(self.value + other.value)

    def __sub__(self, other: Residue) -> Residue:
        return Residue(self.value - other.value)

    def __mul__(self, other: Residue) -> Residue:
        return Residue(self.value * other.value)

    def __neg__(self) -> Residue:
        return Residue(-self.value)

    def __int__(self) -> int:
        return self.value


def reduce(x: EisensteinInt, mirror: bool = False) -> Residue:
    """Image in Z/7 of x modulo (2 - w), or modulo (2 - w^2) when ``mirror``."""
    return Residue(x.a + (4 if mirror else 2) * x.b)


def residue_representatives(mirror: bool = False) -> list[tuple[EisensteinInt, Residue]]:
    reps = [ZERO, ONE, -ONE, OMEGA, -OMEGA, OMEGA2, -OMEGA2]
    return [(z, reduce(z, mirror)) for z in reps]


def is_square_residue(r: Residue | int) -> bool:
    return int(r) % 7 in SQUARES


def orientation_rule(mirror: bool = False) -> frozenset[int]:
    """Differences b - a for which the edge {a, b} is oriented a -> b."""
    return NON_SQUARES if mirror else SQUARES


def paley_edges(mirror: bool = False) -> list[tuple[int, int]]:
    rule = orientation_rule(mirror)
    return [(a, b) for a in range(7) for b in range(7) if a != b and (b - a) % 7 in rule]


def paley_tournament(mirror: bool = False):
    """K7 oriented a -> b iff b - a is a nonzero square mod 7 (non-square for the mirror)."""
    from .surface import Tournament

    return Tournament.from_arcs(paley_edges(mirror))


def residue_table_json(mirror: bool = False) -> str:
    reps = [
        {"element": str(z), "a": z.a, "b": z.b, "residue": r.value}
        for z, r in residue_representatives(mirror)
    ]
    return json.dumps(
        {
            "representatives": reps,
            "squares": sorted(SQUARES),
            "edges": [list(e) for e in paley_edges(mirror)],
        }
    )


# --- planar geometry -------------------------------------------------------
#
# A point is stored as (x, y / sqrt(3)) with both parts rational, so the
# embedding 1 -> (1, 0), w -> (-1/2, sqrt(3)/2) stays exact.


@dataclass(frozen=True, order=True)
class PlanePoint:
    x: Fraction
    y_over_sqrt3: Fraction

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y_over_sqrt3) * 3 ** 0.5


def embed(z: EisensteinInt, denominator: int = 1) -> PlanePoint:
    """Planar position of z / denominator."""
    return PlanePoint(Fraction(2 * z.a - z.b, 2 * denominator), Fraction(z.b, 2 * denominator))


@dataclass(frozen=True)
class Corner:
    """Corner of the hexagonal tiling: centroid of the lattice triangle ``cells``.

    ``cells`` lists the three surrounding lattice points counterclockwise,
    ``labels`` their residues in the same order.
    """

    cells: tuple[EisensteinInt, EisensteinInt, EisensteinInt]
    labels: tuple[int, int, int]
    circled: bool

    @property
    def thrice(self) -> EisensteinInt:
        u, v, w = self.cells
        return u + v + w

    @property
    def point(self) -> PlanePoint:
        return embed(self.thrice, 3)


@dataclass(frozen=True)
class HexCell:
    center: EisensteinInt
    residue: int
    corners: tuple[Corner, ...]  # counterclockwise


@dataclass(frozen=True)
class HexagonMap:
    mirror: bool
    generator: EisensteinInt
    cells: tuple[HexCell, ...]
    outline: tuple[PlanePoint, ...]
    translates: tuple[tuple[PlanePoint, ...], ...]
    corner_classes: tuple[Corner, ...]

    @property
    def circled(self) -> tuple[Corner, ...]:
        return tuple(c for c in self.corner_classes if c.circled)


def _corner(u: EisensteinInt, v: EisensteinInt, w: EisensteinInt, mirror: bool) -> Corner:
    labels = tuple(reduce(z, mirror).value for z in (u, v, w))
    rule = orientation_rule(mirror)
    diffs = ((labels[1] - labels[0]) % 7, (labels[2] - labels[1]) % 7, (labels[0] - labels[2]) % 7)
    return Corner((u, v, w), labels, all(d in rule for d in diffs))  # type: ignore[arg-type]


def _hex_corners(c: EisensteinInt, mirror: bool) -> tuple[Corner, ...]:
    return tuple(_corner(c, c + UNITS[k], c + UNITS[(k + 1) % 6], mirror) for k in range(6))


def _corner_class_key(z3: EisensteinInt, gen: EisensteinInt) -> tuple[int, int]:
    """Key of 3 * corner modulo 3 * lattice; equal keys mean lattice translates."""
    # x lies in g3*Z[w] iff x * conj(g3) lies in N(g3)*Z[w]
    g3 = EisensteinInt(3 * gen.a, 3 * gen.b)
    n = g3.norm()
    q = z3 * g3.conjugate()
    return (q.a % n, q.b % n)


def _boundary(cells: list[HexCell]) -> tuple[PlanePoint, ...]:
    """Outer boundary of the union of cells as a closed counterclockwise polygon."""
    count: dict[frozenset, int] = {}
    directed: list[tuple[EisensteinInt, EisensteinInt]] = []
    for cell in cells:
        ring = [k.thrice for k in cell.corners]
        for i in range(6):
            p, q = ring[i], ring[(i + 1) % 6]
            count[frozenset((p, q))] = count.get(frozenset((p, q)), 0) + 1
            directed.append((p, q))
    nxt = {p: q for p, q in directed if count[frozenset((p, q))] == 1}
    start = min(nxt, key=lambda z: embed(z, 3))
    ring = [start]
    while nxt[ring[-1]] != start:
        ring.append(nxt[ring[-1]])
    return tuple(embed(z, 3) for z in ring)


def hexagon_map_geometry(mirror: bool = False) -> HexagonMap:
    """Voronoi hexagons of the seven residue representatives and the circled corners.

    A corner is circled when the residues of its three cells, read
    counterclockwise, step by squares mod 7 (non-squares for the mirror).
    """
    gen = MIRROR_GEN if mirror else LAMBDA_GEN
    cells = [HexCell(z, r.value, _hex_corners(z, mirror)) for z, r in residue_representatives(mirror)]
    outline = _boundary(cells)

    translates = []
    for u in UNITS:
        shift = embed(gen * u)
        translates.append(tuple(PlanePoint(p.x + shift.x, p.y_over_sqrt3 + shift.y_over_sqrt3) for p in outline))

    classes: dict[tuple[int, int], Corner] = {}
    for cell in cells:
        for corner in cell.corners:
            key = _corner_class_key(corner.thrice, gen)
            best = classes.get(key)
            if best is None or _corner_rank(corner) < _corner_rank(best):
                classes[key] = corner
    ordered = tuple(sorted(classes.values(), key=_corner_rank))
    return HexagonMap(mirror, gen, tuple(cells), outline, tuple(translates), ordered)


def _corner_rank(c: Corner):
    p = c.point
    return (c.thrice.norm(), p.y_over_sqrt3, p.x)
