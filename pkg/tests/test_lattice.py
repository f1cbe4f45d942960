import itertools

import pytest

from chowlab.core.combinat import mask_of, popcount
from chowlab.errors import InvalidArgument
from chowlab.lattice import (AtomicLattice, CompatiblePair, augmented_building_set, augmented_lattice,
                             boolean_lattice, check_geometric, compatible_pair_to_nested, compatible_pairs,
                             face_iso_check, flat_lattice, graphical_building_set, is_building_set, is_nested,
                             maximal_building_set, nested_sets, nested_to_compatible_pair, star_graph,
                             building_set)
from chowlab.matroid import Matroid

SMALL = [Matroid.boolean(2), Matroid.boolean(3), Matroid.uniform(2, 3), Matroid.uniform(2, 4)]


def m(*els):
    return mask_of(els)


def hexagon_face_lattice():
    verts = [frozenset([i]) for i in range(6)]
    edges = [frozenset([i, (i + 1) % 6]) for i in range(6)]
    labels = [frozenset()] + verts + edges + [frozenset(range(6))]
    return AtomicLattice(labels, lambda a, b: a <= b)


def brute_chain_count(L, elements):
    """Chains (including the empty one) among the given ids, by subset enumeration."""
    count = 0
    for r in range(len(elements) + 1):
        for sub in itertools.combinations(elements, r):
            if all(L.leq(a, b) or L.leq(b, a) for a, b in itertools.combinations(sub, 2)):
                count += 1
    return count


# ---------------------------------------------------------------- building sets

def test_building_set_examples_in_b3():
    L = boolean_lattice(3)
    assert is_building_set(L, [m(1), m(2), m(3), m(2, 3)])
    assert not is_building_set(L, [m(1), m(2), m(3), m(1, 2), m(1, 3), m(2, 3)])


@pytest.mark.parametrize("L", [boolean_lattice(3), boolean_lattice(4), flat_lattice(Matroid.uniform(2, 4)),
                               hexagon_face_lattice()])
def test_maximal_building_set_is_always_building(L):
    assert is_building_set(L, maximal_building_set(L).members)


def test_building_set_rejects_bottom():
    with pytest.raises(InvalidArgument):
        is_building_set(boolean_lattice(2), [0, 1])


def test_building_set_constructor_checks():
    with pytest.raises(InvalidArgument):
        building_set(boolean_lattice(3), [m(1), m(2), m(3), m(1, 2), m(1, 3), m(2, 3)])


# ---------------------------------------------------------------- nested sets

def test_nested_examples():
    L = boolean_lattice(3)
    G = [m(1), m(2), m(3), m(2, 3), m(1, 2, 3)]
    assert not is_nested(L, G, [m(1), m(2, 3)])
    assert not is_nested(L, G, [m(2), m(3)])
    assert is_nested(L, G, [m(2), m(2, 3), m(1, 2, 3)])
    assert is_nested(L, G, [m(1), m(2)])


def test_nested_rejects_outside_building_set():
    with pytest.raises(InvalidArgument):
        is_nested(boolean_lattice(3), [m(1)], [m(2)])


def test_reduced_complex_is_a_square():
    L = boolean_lattice(3)
    G = building_set(L, [m(1), m(2), m(3), m(2, 3), m(1, 2, 3)])
    faces = list(nested_sets(L, G, reduced=True))
    edges = {frozenset(f) for f in faces if len(f) == 2}
    assert edges == {frozenset(e) for e in [(m(1), m(2)), (m(1), m(3)), (m(2), m(2, 3)), (m(3), m(2, 3))]}
    assert max(len(f) for f in faces) == 2
    assert sum(1 for f in faces if len(f) == 1) == 4


def test_reduced_requires_top():
    L = boolean_lattice(3)
    G = building_set(L, [m(1), m(2), m(3), m(2, 3)])
    with pytest.raises(InvalidArgument):
        list(nested_sets(L, G, reduced=True))


@pytest.mark.parametrize("L", [boolean_lattice(3), boolean_lattice(4), flat_lattice(Matroid.uniform(3, 5)),
                               augmented_lattice(Matroid.uniform(2, 3))])
def test_maximal_building_set_nested_sets_are_chains(L):
    G = maximal_building_set(L)
    faces = list(nested_sets(L, G))
    assert len(faces) == len(set(faces)) == brute_chain_count(L, list(range(1, L.size)))
    for f in faces:
        assert all(L.leq(a, b) or L.leq(b, a) for a, b in itertools.combinations(f, 2))


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.label())
def test_nested_sets_form_a_simplicial_complex(M):
    L = augmented_lattice(M)
    G = augmented_building_set(M, L)
    faces = set(nested_sets(L, G))
    for f in faces:
        for x in f:
            assert f - {x} in faces
    # every chain inside G is nested
    for a, b in itertools.combinations(sorted(G.members), 2):
        if L.leq(a, b):
            assert frozenset([a, b]) in faces


# ---------------------------------------------------------------- graphical building sets

def test_star_k12():
    nv, edges = star_graph(2)
    B = graphical_building_set(nv, edges)
    assert set(B.members) == {m(1), m(2), m(3), m(1, 3), m(2, 3), m(1, 2, 3)}


@pytest.mark.parametrize("n", range(1, 5))
def test_star_graph_closed_form(n):
    nv, edges = star_graph(n)
    B = graphical_building_set(nv, edges)
    star = 1 << n
    want = {1 << i for i in range(n)} | {s | star for s in range(1 << n)}
    assert set(B.members) == want
    assert is_building_set(B.lattice, B.members)


def test_single_vertex_graph():
    assert set(graphical_building_set(1, []).members) == {m(1)}


def test_graph_rejects_loops():
    with pytest.raises(InvalidArgument):
        graphical_building_set(2, [(1, 1)])


# ---------------------------------------------------------------- augmented lattice

def test_augmented_u23_has_twelve_elements():
    L = augmented_lattice(Matroid.uniform(2, 3))
    assert L.size == 12
    assert len(L.independent_ids) == 7 and len(L.flat_ids) == 5
    assert sorted(L.names[a] for a in L.atoms) == ["1", "2", "3", "∅*"]
    assert ("12", "123*") in L.hasse()
    assert ("3*", "123*") in L.hasse()


def test_augmented_b1():
    L = augmented_lattice(Matroid.boolean(1))
    assert sorted(L.names) == sorted(["∅", "1", "∅*", "1*"])


@pytest.mark.parametrize("M", [Matroid.uniform(2, 3), Matroid.uniform(2, 4), Matroid.boolean(3),
                               Matroid.boolean(4)], ids=lambda M: M.label())
def test_augmented_is_geometric(M):
    assert check_geometric(augmented_lattice(M))


@pytest.mark.parametrize("M", SMALL + [Matroid.uniform(3, 5), Matroid.boolean(4)], ids=lambda M: M.label())
def test_augmented_joins_match_closed_forms(M):
    L = augmented_lattice(M)
    for x in range(L.size):
        assert L.rank[x] == L.rk_tilde(x)
        for y in range(L.size):
            assert L.join(x, y) == L.closed_form_join(x, y)
            assert L.meet(x, y) == L.closed_form_meet(x, y)


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.label())
def test_rank_of_independent_set(M):
    L = augmented_lattice(M)
    for s, x in L.independent_ids.items():
        assert L.rk_tilde(x) == popcount(s) == M.rank(M.closure(s))


def test_augmented_building_set_sizes():
    assert len(augmented_building_set(Matroid.boolean(2))) == 6
    assert len(augmented_building_set(Matroid.uniform(2, 3))) == 8


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.label())
def test_augmented_building_set_is_building(M):
    L = augmented_lattice(M)
    assert is_building_set(L, augmented_building_set(M, L).members)


def test_hexagon_is_not_geometric():
    assert not check_geometric(hexagon_face_lattice())


def test_boolean_is_geometric():
    assert check_geometric(boolean_lattice(4))


def test_non_lattice_rejected():
    # two maximal elements below the top with two common lower bounds
    labels = ["0", "a", "b", "c", "d", "1"]
    rel = {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}

    def leq(x, y):
        return x == y or x == "0" or y == "1" or (x, y) in rel
    with pytest.raises(InvalidArgument):
        AtomicLattice(labels, leq)


# ---------------------------------------------------------------- compatible pairs

def test_nested_to_pair_examples():
    L = augmented_lattice(Matroid.boolean(6))
    I, F = L.independent_ids, L.flat_ids
    N = [I[m(1)], I[m(3)], F[m(1, 3, 6)], F[m(1, 3, 5, 6)], F[m(1, 3, 4, 5, 6)]]
    p = nested_to_compatible_pair(L, N)
    assert p == CompatiblePair((m(1, 3, 6), m(1, 3, 5, 6), m(1, 3, 4, 5, 6)), m(1, 3))
    assert compatible_pair_to_nested(L, p) == frozenset(N)

    assert nested_to_compatible_pair(L, []) == CompatiblePair((), 0)

    N = [F[0], F[m(1, 6)], F[m(1, 3, 5, 6)], F[m(1, 3, 4, 5, 6)]]
    assert nested_to_compatible_pair(L, N) == CompatiblePair((0, m(1, 6), m(1, 3, 5, 6), m(1, 3, 4, 5, 6)), 0)


def test_nested_to_pair_rejects_non_nested():
    L = augmented_lattice(Matroid.boolean(2))
    with pytest.raises(InvalidArgument):
        nested_to_compatible_pair(L, [L.independent_ids[m(1)], L.flat_ids[0]])


def test_b2_fan_cones():
    pairs = list(compatible_pairs(Matroid.boolean(2)))
    dims = [popcount(p.indep) + len(p.flag) for p in pairs]
    assert len(pairs) == 11
    assert [dims.count(d) for d in range(3)] == [1, 5, 5]
    assert CompatiblePair((), 0) in pairs


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.label())
def test_nested_sets_are_images_of_all_compatible_pairs(M):
    L = augmented_lattice(M)
    G = augmented_building_set(M, L)
    nested = set(nested_sets(L, G))
    pairs = list(compatible_pairs(M, proper_only=False))
    assert {compatible_pair_to_nested(L, p) for p in pairs} == nested
    assert len(pairs) == len(nested)


@pytest.mark.parametrize("M,count", [(Matroid.boolean(2), 11), (Matroid.boolean(3), None),
                                     (Matroid.uniform(2, 3), None)], ids=["B2", "B3", "U2,3"])
def test_face_iso_check(M, count):
    rep = face_iso_check(M)
    assert rep.passed, rep.counterexample
    assert rep.nested_count == rep.pair_count
    if count is not None:
        assert rep.nested_count == count
    assert rep.stellohedron_checked == M.is_boolean()


def test_b3_face_count_matches_brute_force():
    # proper compatible pairs of B_3, counted directly: flags of proper subsets
    # paired with subsets of the first member (or of [3] when the flag is empty)
    subsets = range(7)
    count = 0
    for r in range(4):
        for flag in itertools.permutations(subsets, r):
            if all(a & ~b == 0 and a != b for a, b in zip(flag, flag[1:])):
                bound = flag[0] if flag else 7
                count += 2 ** popcount(bound)
    assert face_iso_check(Matroid.boolean(3)).pair_count == count
