import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regmaps.errors import ContractViolation
from regmaps.group import (automorphism_exists, center, coset_action,
                           derived_series, derived_subgroup, exponent,
                           hom_extend, is_abelian, is_cyclic, is_extraspecial,
                           is_normal, is_primitive, is_solvable, is_transitive,
                           isomorphism_search, left_coset_partition,
                           nilpotency_class, normal_closure, normal_core, o_p,
                           omega1, orbits, p_part, prime_factors,
                           quotient_group, regenerated,
                           right_coset_partition, small_generating_set,
                           subgroup_generated, sylow_p)
from regmaps.standard import (alternating_group, cyclic_group, dihedral_group,
                              elementary_abelian, klein_four_group,
                              quaternion_group, symmetric_group)

import oracles

# Order <= 100 throughout; A5 is the one insolvable entry.
SEEDS = [
    ("C2", cyclic_group(2)),
    ("C12", cyclic_group(12)),
    ("C63", cyclic_group(63)),
    ("C100", cyclic_group(100)),
    ("V4", klein_four_group()),
    ("D3", dihedral_group(3)),
    ("D4", dihedral_group(4)),
    ("D6", dihedral_group(6)),
    ("D9", dihedral_group(9)),
    ("D15", dihedral_group(15)),
    ("S4", symmetric_group(4)),
    ("A4", alternating_group(4)),
    ("A5", alternating_group(5)),
    ("Q8", quaternion_group()),
    ("E8", elementary_abelian(2, 3)),
    ("E9", elementary_abelian(3, 2)),
    ("E25", elementary_abelian(5, 2)),
]

EXPECTED_ORDERS = {
    "C2": 2, "C12": 12, "C63": 63, "C100": 100, "V4": 4, "D3": 6,
    "D4": 8, "D6": 12, "D9": 18, "D15": 30, "S4": 24, "A4": 12,
    "A5": 60, "Q8": 8, "E8": 8, "E9": 9, "E25": 25,
}


@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_seed_orders_against_brute_closure(name, G):
    assert G.order == EXPECTED_ORDERS[name]
    gens = [G.elements[i].images for i in G.gen_indices]
    if gens:
        assert len(oracles.brute_closure(gens, G.degree)) == G.order


@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_identity_and_arithmetic(name, G):
    assert G.elements[0].is_identity()
    for x in range(0, G.order, max(1, G.order // 7)):
        assert G.mul(0, x) == x == G.mul(x, 0)
        assert G.mul(x, G.inv(x)) == 0
        assert G.order_of(x) == oracles.element_order(G, x)


def test_mul_matches_permutation_composition():
    G = symmetric_group(4)
    for a in range(G.order):
        for b in range(G.order):
            want = oracles.compose(G.elements[a].images, G.elements[b].images)
            assert G.elements[G.mul(a, b)].images == want


def test_conjugacy_classes_partition():
    G = symmetric_group(4)
    class_id, size_of = G.conjugacy_classes()  # both are per element
    by_class: dict = {}
    for x in range(G.order):
        by_class.setdefault(class_id[x], []).append(x)
    assert sorted(len(v) for v in by_class.values()) == [1, 3, 6, 6, 8]
    for x in range(G.order):
        assert size_of[x] == len(by_class[class_id[x]])
        for g in range(G.order):
            assert class_id[G.conj(x, g)] == class_id[x]
    assert class_id[0] == 0 and size_of[0] == 1


def test_lagrange_and_cosets():
    from collections import Counter
    G = symmetric_group(4)
    for gens in [(1,), (1, 2), (G.gen_indices[1],), tuple(G.gen_indices)]:
        H = subgroup_generated(G, gens)
        assert G.order % H.order == 0
        for part in (right_coset_partition(G, H), left_coset_partition(G, H)):
            coset_of, reps = part
            assert len(reps) == G.order // H.order
            assert all(c == H.order for c in Counter(coset_of).values())
            assert coset_of[0] == 0 and reps[0] == 0  # the subgroup itself


def test_orbits_cover_cosets():
    G = symmetric_group(4)
    H = subgroup_generated(G, [G.gen_indices[0]])
    parts = orbits(G, H)  # each part is one right coset of H
    assert len(parts) == G.order // H.order
    assert sorted(x for p in parts for x in p) == list(range(G.order))
    assert all(len(p) == H.order for p in parts)


# -- the brute-force equivalence block (seed list, orders <= 100) ----------

@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_sylow_matches_brute_force(name, G):
    for p in prime_factors(G.order):
        P = sylow_p(G, p)
        assert P.order == oracles.int_p_part(G.order, p)
        assert oracles.is_p_subgroup(G, P.members, p)


@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_o_p_matches_brute_force(name, G):
    for p in prime_factors(G.order):
        P = sylow_p(G, p)
        want = oracles.brute_o_p(G, p, P.members)
        assert o_p(G, p).members == want


@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_normal_core_matches_brute_force(name, G):
    probes = [G.gen_indices[:1], G.gen_indices[:2], [1]]
    for gens in probes:
        H = subgroup_generated(G, gens)
        assert normal_core(G, H).members == oracles.brute_core(G, H.members)


@pytest.mark.parametrize("name,G", SEEDS, ids=[n for n, _ in SEEDS])
def test_solvability_matches_brute_force(name, G):
    assert is_solvable(G) == oracles.brute_is_solvable(G)


def test_derived_series_shapes():
    S4 = symmetric_group(4)
    series = derived_series(S4)
    assert [s.order for s in series] == [24, 12, 4, 1]
    assert derived_series(alternating_group(5))[-1].order == 60


def test_quotient_group_and_hom():
    G = symmetric_group(4)
    N = o_p(G, 2)  # the Klein four subgroup of double transpositions
    assert N.order == 4
    Q, hom = quotient_group(G, N)
    assert Q.order == 6
    assert hom.kernel().members == N.members
    assert hom.is_surjective()
    assert isomorphism_search(Q, symmetric_group(3)) is not None


def test_center_and_nilpotency():
    q8 = quaternion_group()
    assert center(q8).order == 2
    assert nilpotency_class(q8.improper_subgroup()) == 2
    assert nilpotency_class(cyclic_group(8).improper_subgroup()) == 1
    assert is_extraspecial(q8.improper_subgroup(), 2)
    assert not is_extraspecial(cyclic_group(8).improper_subgroup(), 2)
    assert not is_extraspecial(elementary_abelian(3, 3).improper_subgroup(), 3)


def test_omega1_and_exponent():
    C9 = cyclic_group(9)
    assert omega1(C9.improper_subgroup(), 3).order == 3
    E9 = elementary_abelian(3, 2)
    assert omega1(E9.improper_subgroup(), 3).order == 9
    assert exponent(E9.improper_subgroup()) == 3
    assert exponent(symmetric_group(4).improper_subgroup()) == 12


def test_normal_closure_of_odd_part():
    D9 = dihedral_group(9)
    rot = [g for g in range(D9.order) if D9.order_of(g) == 9][0]
    N = normal_closure(D9, D9.gen_indices, [rot])
    assert N.order == 9 and is_normal(D9, N)


def test_hom_extend_finds_and_refuses():
    G = symmetric_group(4)
    gens = list(G.gen_indices)
    ident = hom_extend(G, G, gens)
    assert ident is not None and ident.is_bijective()
    # sending a transposition to a 3-cycle can't extend
    three = next(g for g in range(G.order) if G.order_of(g) == 3)
    bad = hom_extend(G, G, [three] + gens[1:])
    assert bad is None


def test_automorphism_exists_on_conjugate_tuples():
    G = symmetric_group(4)
    a, b = G.gen_indices
    g = 5
    assert automorphism_exists(G, (a, b), (G.conj(a, g), G.conj(b, g)))
    three = next(x for x in range(G.order) if G.order_of(x) == 3)
    assert not automorphism_exists(G, (a, b), (three, b))


def test_isomorphism_search_distinguishes():
    assert isomorphism_search(dihedral_group(6), cyclic_group(12)) is None
    assert isomorphism_search(dihedral_group(6), dihedral_group(6)) is not None
    assert isomorphism_search(elementary_abelian(2, 3),
                              cyclic_group(8)) is None


def test_regenerated_and_small_generating_set():
    G = symmetric_group(4)
    sub = regenerated(G, G.gen_indices)
    assert sub.order == G.order
    gens = small_generating_set(G)
    assert len(gens) <= 2
    assert subgroup_generated(G, gens).is_improper()


def test_coset_action_transitive_and_primitivity():
    # S4 on cosets of a point stabilizer is the natural 4-point action
    G = symmetric_group(4)
    fix3 = [g for g in range(G.order) if G.elements[g].images[3] == 3]
    S3 = subgroup_generated(G, [g for g in fix3 if G.order_of(g) in (2, 3)])
    assert S3.order == 6
    perms, _ = coset_action(G, S3)
    assert is_transitive(perms, 4)
    assert is_primitive(perms, 4)
    # D4 on cosets of a reflection is 4 points with diagonal blocks
    D4 = dihedral_group(4)
    refl = next(g for g in range(1, D4.order)
                if D4.order_of(g) == 2 and not center(D4).contains(g))
    perms, _ = coset_action(D4, subgroup_generated(D4, [refl]))
    assert is_transitive(perms, 4)
    assert not is_primitive(perms, 4)


def test_p_part_and_prime_factors():
    assert p_part(72, 2) == 8 and p_part(72, 3) == 9 and p_part(72, 5) == 1
    assert prime_factors(1) == []
    assert prime_factors(2106) == [2, 3, 13]


def test_is_abelian_is_cyclic():
    assert is_abelian(cyclic_group(12))
    assert not is_abelian(symmetric_group(4))
    assert is_cyclic(cyclic_group(12).improper_subgroup())
    assert not is_cyclic(klein_four_group().improper_subgroup())


@given(st.lists(st.integers(0, 23), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_generated_subgroup_order_divides(gens):
    G = symmetric_group(4)
    H = subgroup_generated(G, gens)
    assert G.order % H.order == 0
    assert H.members == oracles.span(G, gens)
