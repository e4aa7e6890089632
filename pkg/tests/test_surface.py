import random
from itertools import combinations, permutations

import pytest

from octo.eisenstein import paley_tournament
from octo.fano import standard_fano, verify_projective_plane
from octo.surface import (
    EDGES,
    NotTriangulatingError,
    Tournament,
    TriangulationError,
    black_triangles,
    canonical_mask,
    check_triangulation,
    cycle_count_identity,
    directed_three_cycles,
    dual_bipartition,
    edge_index,
    enumerate_triangulations,
    euler_characteristic,
    fano_from_orientation,
    is_orientable,
    oriented_triangulation_test,
    relabel_triangles,
    tournament_triangulation,
    tournaments_isomorphic,
    triangulation_defect,
    triangulations_isomorphic,
    white_triangles,
)
from octo.constants import PALEY_MASK, TRIANGULATION_COUNT

PALEY = paley_tournament()
PALEY_BLACK = sorted(
    tuple(sorted({(n + 1) % 7, (n + 2) % 7, (n + 4) % 7})) for n in range(7)
)

OCTAHEDRON = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
# minimal 6-vertex projective plane (hemi-icosahedron)
RP2 = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
]


def grid_surface(n, m, twist):
    """n x m grid of squares, each split in two; twist glues one side with a flip (Klein bottle)."""

    def v(i, j):
        q, i = divmod(i, n)
        if twist and q % 2:
            j = -j
        return i * m + j % m

    tris = []
    for i in range(n):
        for j in range(m):
            tris.append((v(i, j), v(i + 1, j), v(i + 1, j + 1)))
            tris.append((v(i, j), v(i, j + 1), v(i + 1, j + 1)))
    return tris


def brute_cycles(t):
    return sum(
        1
        for a, b, c in combinations(range(7), 3)
        if (t.beats(a, b) and t.beats(b, c) and t.beats(c, a)) or (t.beats(a, c) and t.beats(c, b) and t.beats(b, a))
    )


def test_edge_indexing():
    assert edge_index(0, 1) == 0 and edge_index(0, 2) == 1 and edge_index(5, 6) == 20
    assert edge_index(6, 5) == 20
    assert len(EDGES) == 21
    assert PALEY.mask == PALEY_MASK


def test_tournament_basics():
    assert Tournament.from_arcs(PALEY.arcs()) == PALEY
    assert PALEY.flip(0, 1).beats(1, 0)
    with pytest.raises(ValueError):
        Tournament(1 << 21)
    with pytest.raises(ValueError):
        Tournament.from_arcs([(0, 1)])


def test_directed_cycles_examples():
    cycles = directed_three_cycles(PALEY)
    assert len(cycles) == 14
    assert (1, 2, 4) in cycles
    assert directed_three_cycles(Tournament.transitive()) == []
    for a, b, c in cycles:
        assert PALEY.beats(a, b) and PALEY.beats(b, c) and PALEY.beats(c, a)


def test_cycle_count_identity_on_random_masks():
    rng = random.Random(7)
    for _ in range(10_000):
        t = Tournament(rng.getrandbits(21))
        n = len(directed_three_cycles(t))
        assert 0 <= n <= 14
        assert n == cycle_count_identity(t)
    for _ in range(500):
        t = Tournament(rng.getrandbits(21))
        assert len(directed_three_cycles(t)) == brute_cycles(t)


def test_paley_triangulation():
    tri = check_triangulation(directed_three_cycles(PALEY), 7)
    assert len(tri.triangles) == 14
    assert len(tri.edges) == 21
    assert euler_characteristic(tri) == 0 == 7 - 21 + 14
    assert all(len(link) == 6 for link in tri.links.values())
    assert is_orientable(tri)


def test_octahedron():
    tri = check_triangulation(OCTAHEDRON, 6)
    assert euler_characteristic(tri) == 2
    black, white = dual_bipartition(tri)
    assert len(black) == len(white) == 4
    assert is_orientable(tri)
    assert all(len(link) == 4 for link in tri.links.values())


def test_projective_plane_fixture_is_not_orientable():
    tri = check_triangulation(RP2, 6)
    assert euler_characteristic(tri) == 1
    assert not is_orientable(tri)
    assert dual_bipartition(tri) is None


def test_klein_bottle_and_torus_grids():
    torus = check_triangulation(grid_surface(3, 3, False), 9)
    klein = check_triangulation(grid_surface(3, 3, True), 9)
    assert euler_characteristic(torus) == euler_characteristic(klein) == 0
    assert is_orientable(torus)
    assert not is_orientable(klein)


def test_defects():
    cycles = directed_three_cycles(PALEY)
    d = triangulation_defect(cycles[1:], 7)
    assert d.condition == "edge_cover" and d.witness[1] == 1 and "once" in d.message
    with pytest.raises(TriangulationError) as err:
        check_triangulation(cycles[1:], 7)
    assert err.value.defect.condition == "edge_cover"
    # two tetrahedra pinched at vertex 0: link of 0 splits into two triangles
    tet = lambda vs: list(combinations(vs, 3))
    pinched = tet((0, 1, 2, 3)) + tet((0, 4, 5, 6))
    d = triangulation_defect(pinched, 7)
    assert d.condition == "vertex_link" and d.witness[0] == 0
    # an untouched vertex
    assert triangulation_defect(OCTAHEDRON, 7).condition == "connectivity"
    assert triangulation_defect([], 7).condition == "connectivity"


@pytest.mark.parametrize("bad", [[(0, 1)], [(0, 1, 1)], [(0, 1, 9)], [(0, 1, 2), (2, 1, 0)]])
def test_malformed_triangles(bad):
    with pytest.raises(ValueError):
        check_triangulation(bad, 7)


def test_predicate_examples():
    assert oriented_triangulation_test(PALEY)
    assert not oriented_triangulation_test(Tournament.transitive())
    for i, j in EDGES:
        flipped = PALEY.flip(i, j)
        assert len(directed_three_cycles(flipped)) != 14
        assert not oriented_triangulation_test(flipped)


def test_dual_bipartition_paley():
    tri = tournament_triangulation(PALEY)
    black, white = dual_bipartition(tri)
    assert len(black) == len(white) == 7
    assert sorted(black) == PALEY_BLACK
    assert (1, 2, 4) in black


def test_black_triangles():
    black = black_triangles(PALEY)
    assert sorted(map(sorted, black)) == [list(t) for t in PALEY_BLACK]
    assert len(black) == 7
    for v in range(7):
        assert sum(v in t for t in black) == 3
    assert set(black) == set(standard_fano().lines)
    with pytest.raises(NotTriangulatingError):
        black_triangles(Tournament.transitive())
    with pytest.raises(NotTriangulatingError):
        fano_from_orientation(PALEY.flip(0, 1))


def test_fano_from_orientation():
    assert fano_from_orientation(PALEY) == standard_fano()
    assert verify_projective_plane(fano_from_orientation(PALEY).underlying().lines).passed
    assert verify_projective_plane(white_triangles(PALEY)).passed


def test_tournament_isomorphism():
    assert tournaments_isomorphic(PALEY, PALEY) == tuple(range(7))
    shift = tuple((x + 1) % 7 for x in range(7))
    shifted = PALEY.relabel(shift)
    p = tournaments_isomorphic(PALEY, shifted)
    assert p is not None and PALEY.relabel(p) == shifted
    neg = tuple((-x) % 7 for x in range(7))
    assert PALEY.relabel(neg) == PALEY.reverse()
    p = tournaments_isomorphic(PALEY, PALEY.reverse())
    assert p is not None and PALEY.relabel(p) == PALEY.reverse()
    assert tournaments_isomorphic(PALEY, Tournament.transitive()) is None


def test_paley_automorphisms_are_affine():
    autos = [p for p in permutations(range(7)) if PALEY.relabel(p) == PALEY]
    affine = {tuple((a * x + b) % 7 for x in range(7)) for a in (1, 2, 4) for b in range(7)}
    assert set(autos) == affine and len(autos) == 21


def test_canonical_mask_is_relabel_invariant():
    shifted = PALEY.relabel((3, 0, 6, 1, 5, 2, 4))
    assert canonical_mask(shifted) == canonical_mask(PALEY)


@pytest.fixture(scope="module")
def triangulations():
    return enumerate_triangulations()


def test_enumeration(triangulations):
    assert len(triangulations) == TRIANGULATION_COUNT
    for tri in triangulations:
        assert len(tri.triangles) == 14
        assert euler_characteristic(tri) == 0
        assert is_orientable(tri)
        assert len(tri.edges) == 21


def test_enumeration_count_matches_automorphism_count(triangulations):
    paley = frozenset(tournament_triangulation(PALEY).triangles)
    autos = sum(1 for p in permutations(range(7)) if relabel_triangles(paley, p) == paley)
    assert autos == 42
    assert len(triangulations) == 5040 // autos


def test_enumeration_all_isomorphic(triangulations):
    first = triangulations[0]
    for tri in triangulations[1:8]:
        assert triangulations_isomorphic(first, tri) is not None
    sets = {frozenset(t.triangles) for t in triangulations}
    assert len(sets) == len(triangulations)


def test_enumeration_contains_paley(triangulations):
    sets = {frozenset(t.triangles) for t in triangulations}
    assert frozenset(tournament_triangulation(PALEY).triangles) in sets
