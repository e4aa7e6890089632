"""Fano planes on the point set {0..6}, plain and with cyclically ordered lines.

Points are the integers 0..6 throughout.  A plain plane stores each line as a
sorted triple; an oriented plane stores each line as a cyclic triple rotated so
that its smallest point comes first.  Reversal is *not* quotiented out: (0,1,3)
and (0,3,1) are different oriented lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

POINTS = tuple(range(7))
MAX_COUNTEREXAMPLES = 10

Line = tuple[int, int, int]
Permutation = tuple[int, ...]


class PlaneInputError(ValueError):
    """Raised for structurally malformed line lists (not an axiom failure)."""


def canonical_cycle(triple: Sequence[int]) -> Line:
    """Rotate a cyclic triple so its smallest entry comes first."""
    t = tuple(triple)
    i = t.index(min(t))
    return t[i:] + t[:i]


def _check_shape(lines: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    out = []
    for raw in lines:
        line = tuple(raw)
        if len(line) != 3:
            raise PlaneInputError(f"line {line!r} does not have 3 points")
        for p in line:
            if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p <= 6:
                raise PlaneInputError(f"line {line!r} has point {p!r} outside 0..6")
        if len(set(line)) != 3:
            raise PlaneInputError(f"line {line!r} repeats a point")
        out.append(line)
    if len(out) != 7:
        raise PlaneInputError(f"expected 7 lines, got {len(out)}")
    return out


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexamples: tuple = ()


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "axioms": {
                r.name: {"passed": r.passed, "counterexamples": _listify(r.counterexamples)}
                for r in self.results
            },
        }


def _listify(x):
    if isinstance(x, (tuple, list)):
        return [_listify(v) for v in x]
    return x


def verify_projective_plane(lines: Iterable[Iterable[int]]) -> AxiomReport:
    """Check the four projective-plane axioms on seven 3-point lines.

    Every failure is collected (up to ``MAX_COUNTEREXAMPLES`` per axiom).
    Structurally malformed input raises :class:`PlaneInputError` instead.
    """
    checked = _check_shape(lines)
    sets = [frozenset(line) for line in checked]

    distinct = []
    seen: dict[frozenset, int] = {}
    for i, s in enumerate(sets):
        if s in seen:
            distinct.append((seen[s], i))
        else:
            seen[s] = i

    pair_cover = []
    for pair in combinations(POINTS, 2):
        n = sum(1 for s in sets if set(pair) <= s)
        if n != 1:
            pair_cover.append((pair, n))

    intersect = []
    for i, j in combinations(range(7), 2):
        common = sets[i] & sets[j]
        if len(common) != 1:
            intersect.append((i, j, tuple(sorted(common))))

    degree = []
    for p in POINTS:
        n = sum(1 for s in sets if p in s)
        if n != 3:
            degree.append((p, n))

    def result(name, bad):
        return AxiomResult(name, not bad, tuple(bad[:MAX_COUNTEREXAMPLES]))

    return AxiomReport(
        (
            result("pair_coverage", pair_cover),
            result("line_intersection", intersect),
            result("point_degree", degree),
            result("distinct_lines", distinct),
        )
    )


@dataclass(frozen=True)
class FanoPlane:
    lines: tuple[Line, ...]

    def __post_init__(self):
        lines = tuple(sorted(tuple(sorted(line)) for line in _check_shape(self.lines)))
        report = verify_projective_plane(lines)
        if not report.passed:
            raise ValueError(f"not a projective plane: failed {report.failures()}")
        object.__setattr__(self, "lines", lines)

    @property
    def points(self) -> tuple[int, ...]:
        return POINTS

    def third_point(self, a: int, b: int) -> int:
        """The remaining point on the unique line through ``a`` and ``b``."""
        for line in self.lines:
            if a in line and b in line and a != b:
                (c,) = set(line) - {a, b}
                return c
        raise ValueError(f"no line through {a} and {b}")

    def relabel(self, perm: Permutation) -> FanoPlane:
        return FanoPlane(tuple(tuple(perm[p] for p in line) for line in self.lines))

    def to_text(self) -> str:
        return "".join(" ".join(map(str, line)) + "\n" for line in self.lines)

    def to_json(self) -> str:
        return json.dumps({"lines": [list(line) for line in self.lines], "oriented": False})


@dataclass(frozen=True)
class OrientedFanoPlane:
    lines: tuple[Line, ...]
    _plane: FanoPlane = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lines = tuple(sorted(canonical_cycle(line) for line in _check_shape(self.lines)))
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "_plane", FanoPlane(lines))

    def underlying(self) -> FanoPlane:
        return self._plane

    def reversed_line(self, index: int) -> OrientedFanoPlane:
        """Copy with the cyclic order of ``lines[index]`` reversed."""
        lines = list(self.lines)
        a, b, c = lines[index]
        lines[index] = (a, c, b)
        return OrientedFanoPlane(tuple(lines))

    def reversed(self) -> OrientedFanoPlane:
        return OrientedFanoPlane(tuple((a, c, b) for a, b, c in self.lines))

    def relabel(self, perm: Permutation) -> OrientedFanoPlane:
        return OrientedFanoPlane(tuple(tuple(perm[p] for p in line) for line in self.lines))

    def to_text(self) -> str:
        return "".join("cyclic: " + " ".join(map(str, line)) + "\n" for line in self.lines)

    def to_json(self) -> str:
        return json.dumps({"lines": [list(line) for line in self.lines], "oriented": True})


def plane_from_json(text: str) -> FanoPlane | OrientedFanoPlane:
    data = json.loads(text)
    lines = tuple(tuple(line) for line in data["lines"])
    return OrientedFanoPlane(lines) if data.get("oriented") else FanoPlane(lines)


def plane_from_text(text: str) -> FanoPlane | OrientedFanoPlane:
    rows = [row.strip() for row in text.splitlines() if row.strip()]
    oriented = all(row.startswith("cyclic:") for row in rows)
    if oriented:
        rows = [row[len("cyclic:"):] for row in rows]
    elif any(row.startswith("cyclic:") for row in rows):
        raise PlaneInputError("mixed oriented and unoriented lines")
    lines = tuple(tuple(int(tok) for tok in row.split()) for row in rows)
    return OrientedFanoPlane(lines) if oriented else FanoPlane(lines)


def standard_fano() -> OrientedFanoPlane:
    """The oriented plane with cyclic lines (n+1, n+2, n+4) mod 7."""
    return OrientedFanoPlane(tuple(((n + 1) % 7, (n + 2) % 7, (n + 4) % 7) for n in range(7)))


def complementary_lines() -> tuple[Line, ...]:
    """Lines (n+3, n+5, n+6) mod 7: the plane built on non-residue differences."""
    return tuple(((n + 3) % 7, (n + 5) % 7, (n + 6) % 7) for n in range(7))


def underlying(op: OrientedFanoPlane) -> FanoPlane:
    return op.underlying()


def lines_through(plane: FanoPlane | OrientedFanoPlane, p: int) -> frozenset[frozenset[int]]:
    if not isinstance(p, int) or not 0 <= p <= 6:
        raise ValueError(f"point {p!r} outside 0..6")
    return frozenset(frozenset(line) for line in plane.lines if p in line)


def planes_isomorphic(p1: FanoPlane, p2: FanoPlane) -> Permutation | None:
    """Find a point permutation carrying the lines of ``p1`` onto those of ``p2``.

    Backtracking over the 5040 permutations in lexicographic order; a branch is
    cut as soon as a fully assigned line of ``p1`` lands outside ``p2``.
    """
    target = {frozenset(line) for line in p2.lines}
    # lines of p1 that become fully assigned once point k is placed
    closing = [[line for line in p1.lines if max(line) == k] for k in POINTS]
    perm = [-1] * 7
    used = [False] * 7

    def extend(k: int) -> bool:
        if k == 7:
            return True
        for img in POINTS:
            if used[img]:
                continue
            perm[k] = img
            if all(frozenset(perm[q] for q in line) in target for line in closing[k]):
                used[img] = True
                if extend(k + 1):
                    return True
                used[img] = False
        perm[k] = -1
        return False

    return tuple(perm) if extend(0) else None


def is_plane_isomorphism(perm: Permutation, p1: FanoPlane, p2: FanoPlane) -> bool:
    if sorted(perm) != list(POINTS):
        return False
    return {frozenset(perm[q] for q in line) for line in p1.lines} == {frozenset(l) for l in p2.lines}


def invert(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)
