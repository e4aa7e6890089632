"""Exact octonion arithmetic over signed structure constants.

Basis slots: 0 is the unit, slot ``a + 1`` holds the imaginary unit e_a for a
point a in 0..6.  Coefficients are :class:`fractions.Fraction`; nothing here
ever touches a float.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

from .fano import FanoPlane, OrientedFanoPlane, canonical_cycle, verify_projective_plane

DIM = 8
IMAG = tuple(range(1, DIM))

SignedSlot = tuple[int, int]  # (sign, slot)

BASIS_LABELS = ("1",) + tuple(f"e{a}" for a in range(7))


def slot(point: int) -> int:
    return point + 1


def entry_label(entry: SignedSlot) -> str:
    sign, k = entry
    return ("-" if sign < 0 else "") + BASIS_LABELS[k]


@dataclass(frozen=True)
class StructureConstants:
    """8x8 table of signed basis products; ``table[i][j]`` is (sign, slot) of b_i * b_j."""

    table: tuple[tuple[SignedSlot, ...], ...]

    def __post_init__(self):
        table = tuple(tuple((int(s), int(k)) for s, k in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != DIM or any(len(row) != DIM for row in table):
            raise ValueError("structure table must be 8x8")
        for i in range(DIM):
            if table[0][i] != (1, i) or table[i][0] != (1, i):
                raise ValueError(f"unit is not neutral at slot {i}")
        for a in IMAG:
            if table[a][a] != (-1, 0):
                raise ValueError(f"{BASIS_LABELS[a]} does not square to -1")
        triples = set()
        for a in IMAG:
            for b in IMAG:
                if a == b:
                    continue
                s, c = table[a][b]
                if s not in (1, -1) or c in (0, a, b):
                    raise ValueError(f"bad product {BASIS_LABELS[a]}*{BASIS_LABELS[b]}")
                if table[b][a] != (-s, c):
                    raise ValueError(f"{BASIS_LABELS[a]}, {BASIS_LABELS[b]} do not anticommute")
                triples.add(frozenset((a - 1, b - 1, c - 1)))
        if len(triples) != 7 or not verify_projective_plane(triples).passed:
            raise ValueError("imaginary products do not follow a Fano plane")

    def __call__(self, i: int, j: int) -> SignedSlot:
        return self.table[i][j]

    def plane(self) -> FanoPlane:
        return self.oriented_plane().underlying()

    def oriented_plane(self) -> OrientedFanoPlane:
        """Cyclic lines (a, b, c) with e_a e_b = +e_c."""
        lines = set()
        for a in IMAG:
            for b in IMAG:
                if a != b and self.table[a][b][0] == 1:
                    lines.add(canonical_cycle((a - 1, b - 1, self.table[a][b][1] - 1)))
        return OrientedFanoPlane(tuple(lines))

    def labels(self) -> list[list[str]]:
        return [[entry_label(e) for e in row] for row in self.table]

    def to_text(self) -> str:
        width = 3
        rows = [[""] + list(BASIS_LABELS)] + [[BASIS_LABELS[i]] + r for i, r in enumerate(self.labels())]
        return "".join(" ".join(cell.rjust(width) for cell in row).rstrip() + "\n" for row in rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(BASIS_LABELS))
        for i, row in enumerate(self.labels()):
            w.writerow([BASIS_LABELS[i]] + row)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"basis": list(BASIS_LABELS), "table": self.labels()}) + "\n"

    def render(self, fmt: str) -> str:
        try:
            return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()
        except KeyError:
            raise ValueError(f"unknown table format {fmt!r}") from None


def _table_from_products(products: dict[tuple[int, int], SignedSlot]) -> StructureConstants:
    rows = []
    for i in range(DIM):
        row = []
        for j in range(DIM):
            if i == 0:
                row.append((1, j))
            elif j == 0:
                row.append((1, i))
            elif i == j:
                row.append((-1, 0))
            else:
                row.append(products[i, j])
        rows.append(tuple(row))
    return StructureConstants(tuple(rows))


def structure_constants(op: OrientedFanoPlane) -> StructureConstants:
    """For each cyclic line (a,b,c): e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b; reverses negate."""
    products = {}
    for a, b, c in op.lines:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            products[slot(x), slot(y)] = (1, slot(z))
            products[slot(y), slot(x)] = (-1, slot(z))
    return _table_from_products(products)


def index_rule_constants() -> StructureConstants:
    """Table written straight from the index rules, with no Fano plane in between."""
    products = {}
    for n in range(7):
        p1, p2, p4 = (n + 1) % 7, (n + 2) % 7, (n + 4) % 7
        for x, y, z in ((p1, p2, p4), (p2, p4, p1), (p4, p1, p2)):
            products[slot(x), slot(y)] = (1, slot(z))
            products[slot(y), slot(x)] = (-1, slot(z))
    return _table_from_products(products)


class ZeroOctonionError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class Octonion:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != DIM:
            raise ValueError("an octonion has 8 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> Octonion:
        return cls((0,) * DIM)

    @classmethod
    def one(cls) -> Octonion:
        return cls.basis(0)

    @classmethod
    def basis(cls, k: int, sign: int = 1) -> Octonion:
        c = [0] * DIM
        c[k] = sign
        return cls(tuple(c))

    @classmethod
    def e(cls, point: int) -> Octonion:
        return cls.basis(slot(point))

    def __add__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Octonion:
        return Octonion(tuple(-a for a in self.coeffs))

    def scale(self, k) -> Octonion:
        k = Fraction(k)
        return Octonion(tuple(k * a for a in self.coeffs))

    def __rmul__(self, k) -> Octonion:
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = [f"{c}*{BASIS_LABELS[k]}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def multiply(x: Octonion, y: Octonion, sc: StructureConstants) -> Octonion:
    out = [Fraction(0)] * DIM
    table = sc.table
    ys = [(j, c) for j, c in enumerate(y.coeffs) if c]
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        row = table[i]
        for j, yj in ys:
            s, k = row[j]
            out[k] += s * xi * yj
    return Octonion(tuple(out))


def conjugate(x: Octonion) -> Octonion:
    return Octonion((x.coeffs[0],) + tuple(-c for c in x.coeffs[1:]))


def norm(x: Octonion) -> Fraction:
    return sum((c * c for c in x.coeffs), Fraction(0))


def inverse(x: Octonion, sc: StructureConstants | None = None) -> Octonion:
    # the conjugate/norm formula only needs sc to be a valid table; kept for call symmetry
    n = norm(x)
    if n == 0:
        raise ZeroOctonionError("the zero octonion has no inverse")
    return conjugate(x).scale(1 / n)


def associator(x: Octonion, y: Octonion, z: Octonion, sc: StructureConstants) -> Octonion:
    return multiply(multiply(x, y, sc), z, sc) - multiply(x, multiply(y, z, sc), sc)


def random_octonion(rng: random.Random, nonzero: bool = False) -> Octonion:
    """Numerators in [-9, 9], denominators in {1, 2, 3}."""
    while True:
        x = Octonion(tuple(Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(DIM)))
        if not (nonzero and x.is_zero()):
            return x


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None
    details: tuple = ()

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.details:
            d["details"] = list(self.details)
        return d


_TRANSPOSITIONS = (
    ("xy", lambda x, y, z: (y, x, z)),
    ("yz", lambda x, y, z: (x, z, y)),
    ("xz", lambda x, y, z: (z, y, x)),
)


def _basis_associator(sc: StructureConstants, i: int, j: int, k: int) -> dict[int, int]:
    """{x,y,z} on basis slots as a sparse {slot: integer coefficient} map."""
    t = sc.table
    s1, k1 = t[i][j]
    s2, k2 = t[k1][k]
    s3, k3 = t[j][k]
    s4, k4 = t[i][k3]
    out = {k2: s1 * s2}
    out[k4] = out.get(k4, 0) - s3 * s4
    return {slot_: c for slot_, c in out.items() if c}


def _show(assoc: dict[int, int]) -> str:
    return str(Octonion(tuple(assoc.get(k, 0) for k in range(DIM))))


def verify_alternative(sc: StructureConstants) -> CheckReport:
    """Associator skew-symmetry on all 343 ordered imaginary basis triples.

    Trilinearity makes the basis check sufficient for the whole algebra.
    """
    checked = 0
    for i, j, k in product(IMAG, repeat=3):
        base = _basis_associator(sc, i, j, k)
        negated = {slot_: -c for slot_, c in base.items()}
        for name, swap in _TRANSPOSITIONS:
            other = _basis_associator(sc, *swap(i, j, k))
            if other != negated:
                a, b, c = (BASIS_LABELS[t] for t in (i, j, k))
                return CheckReport(
                    "alternative",
                    False,
                    checked + 1,
                    f"{{{a},{b},{c}}} = {_show(base)} but swapping {name} gives {_show(other)}",
                )
        checked += 1
    return CheckReport("alternative", True, checked)


def verify_norm_multiplicative(sc: StructureConstants, trials: int = 1000, seed: int = 7) -> CheckReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    pairs: list[tuple[Octonion, Octonion]] = [
        (Octonion.basis(i), Octonion.basis(j)) for i in range(DIM) for j in range(DIM)
    ]
    pairs += [(random_octonion(rng), random_octonion(rng)) for _ in range(trials)]
    for n, (x, y) in enumerate(pairs, 1):
        if norm(multiply(x, y, sc)) != norm(x) * norm(y):
            return CheckReport("norm_multiplicative", False, n, f"x={x}; y={y}")
    return CheckReport("norm_multiplicative", True, len(pairs))


def verify_flexible(sc: StructureConstants, trials: int = 100, seed: int = 7) -> CheckReport:
    rng = random.Random(seed)
    for n in range(1, trials + 1):
        x, y = random_octonion(rng), random_octonion(rng)
        if multiply(multiply(x, y, sc), x, sc) != multiply(x, multiply(y, x, sc), sc):
            return CheckReport("flexible", False, n, f"x={x}; y={y}")
    return CheckReport("flexible", True, trials)


def verify_inverses(sc: StructureConstants, trials: int = 100, seed: int = 7) -> CheckReport:
    rng = random.Random(seed)
    one = Octonion.one()
    for n in range(1, trials + 1):
        x = random_octonion(rng, nonzero=True)
        xi = inverse(x, sc)
        if multiply(x, xi, sc) != one or multiply(xi, x, sc) != one:
            return CheckReport("inverse", False, n, f"x={x}")
    return CheckReport("inverse", True, trials)


class PlaneMismatchError(ValueError):
    pass


def verify_quaternion_subalgebras(sc: StructureConstants, plane: FanoPlane) -> CheckReport:
    """Each line {a,b,c} must span, with 1, a closed associative copy of the quaternions."""
    if {frozenset(l) for l in plane.lines} != {frozenset(l) for l in sc.plane().lines}:
        raise PlaneMismatchError("plane does not match the table's line structure")
    one = Octonion.one()
    details = []
    first_bad = None
    for line in plane.lines:
        slots = [slot(p) for p in line]
        span = {0, *slots}
        closed = all(sc(i, j)[1] in span for i in span for j in span)
        elems = [Octonion.basis(k) for k in slots]
        assoc = all(associator(x, y, z, sc).is_zero() for x in elems for y in elems for z in elems)
        a, b, _ = line
        # orient the line by the table: i*j = +k
        s, kslot = sc(slot(a), slot(b))
        i, j = (slot(a), slot(b)) if s == 1 else (slot(b), slot(a))
        k = kslot
        qi, qj, qk = Octonion.basis(i), Octonion.basis(j), Octonion.basis(k)
        ijk = (
            multiply(qi, qj, sc) == qk
            and multiply(qj, qk, sc) == qi
            and multiply(qk, qi, sc) == qj
            and all(multiply(q, q, sc) == -one for q in (qi, qj, qk))
            and multiply(multiply(qi, qj, sc), qk, sc) == -one
        )
        ok = closed and assoc and ijk
        cyc = tuple(t - 1 for t in (i, j, k))
        details.append({"line": list(line), "cyclic": list(cyc), "closed": closed, "associative": assoc, "ijk": ijk})
        if not ok and first_bad is None:
            first_bad = f"line {line}"
    return CheckReport("quaternion_subalgebras", first_bad is None, len(plane.lines), first_bad, tuple(details))


@dataclass(frozen=True)
class SignedPermutation:
    """Basis map 1 -> 1, e_a -> signs[a] * e_{perm[a]}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def image(self, k: int) -> SignedSlot:
        if k == 0:
            return (1, 0)
        return (self.signs[k - 1], slot(self.perm[k - 1]))

    def inverse(self) -> SignedPermutation:
        perm = [0] * 7
        signs = [0] * 7
        for a, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = a
            signs[p] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """self after other."""
        perm = tuple(self.perm[other.perm[a]] for a in range(7))
        signs = tuple(other.signs[a] * self.signs[other.perm[a]] for a in range(7))
        return SignedPermutation(perm, signs)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(7)) and all(s == 1 for s in self.signs)


def transport(m: SignedPermutation, sc: StructureConstants) -> StructureConstants:
    """The table that makes ``m`` an isomorphism from ``sc``."""
    rows = [[(0, 0)] * DIM for _ in range(DIM)]
    for i in range(DIM):
        si, ti = m.image(i)
        for j in range(DIM):
            sj, tj = m.image(j)
            s, k = sc(i, j)
            sk, tk = m.image(k)
            # phi(b_i) phi(b_j) = phi(b_i b_j)  =>  b_ti b_tj = si*sj*s*sk b_tk
            rows[ti][tj] = (si * sj * s * sk, tk)
    return StructureConstants(tuple(tuple(r) for r in rows))


def is_table_isomorphism(m: SignedPermutation, sc1: StructureConstants, sc2: StructureConstants) -> bool:
    return transport(m, sc1) == sc2


def tables_isomorphic(sc1: StructureConstants, sc2: StructureConstants) -> SignedPermutation | None:
    """First signed permutation (lexicographic over perms, then signs with + before -) carrying sc1 to sc2.

    Permutations that fail to map lines onto lines are skipped wholesale, since
    no sign choice can repair them.
    """
    pairs = [(a, b) for a in range(7) for b in range(7) if a != b]
    prod1 = {(a, b): sc1(slot(a), slot(b)) for a, b in pairs}
    prod2 = {(a, b): sc2(slot(a), slot(b)) for a, b in pairs}
    for perm in permutations(range(7)):
        if any(prod2[perm[a], perm[b]][1] != slot(perm[prod1[a, b][1] - 1]) for a, b in pairs):
            continue
        for signs in product((1, -1), repeat=7):
            if all(
                prod1[a, b][0] * signs[prod1[a, b][1] - 1] == signs[a] * signs[b] * prod2[perm[a], perm[b]][0]
                for a, b in pairs
            ):
                return SignedPermutation(tuple(perm), tuple(signs))
    return None


def octonion_from_labels(terms: Iterable[tuple[int | Fraction, str]]) -> Octonion:
    """Build an octonion from (coefficient, basis label) pairs, e.g. [(1, "e1"), (-2, "e4")]."""
    c = [Fraction(0)] * DIM
    for coef, label in terms:
        c[BASIS_LABELS.index(label)] += Fraction(coef)
    return Octonion(tuple(c))


def parse_entry(label: str) -> SignedSlot:
    sign = -1 if label.startswith("-") else 1
    return (sign, BASIS_LABELS.index(label.lstrip("-")))


def table_from_labels(rows: Sequence[Sequence[str]]) -> StructureConstants:
    return StructureConstants(tuple(tuple(parse_entry(e) for e in row) for row in rows))
