import pytest

from regmaps.errors import ContractViolation, TheoremViolation
from regmaps.group import is_normal, isomorphism_search, o_p, subgroup_generated
from regmaps.maps import (DEGENERATE_L_EQUALS_T, DEGENERATE_L_TRIVIAL,
                          FlaggedMap, OrientedMap, maps_isomorphic,
                          oriented_of_flagged, quotient_map)
from regmaps.standard import (alternating_group, cyclic_group, dihedral_group,
                              klein_four_group, symmetric_group)


def _involutions(G):
    return [g for g in range(1, G.order) if G.mul(g, g) == 0]


def test_oriented_contract_checks():
    G = symmetric_group(4)
    three = next(g for g in range(G.order) if G.order_of(g) == 3)
    four = next(g for g in range(G.order) if G.order_of(g) == 4)
    with pytest.raises(ContractViolation):
        OrientedMap(G, 0, _involutions(G)[0])     # identity rotation
    with pytest.raises(ContractViolation):
        OrientedMap(G, four, three)               # reversal not an involution
    # a 3-cycle and a double transposition generate at most A4
    even_inv = next(g for g in _involutions(G)
                    if len(G.elements[g].cycles()) == 2)
    with pytest.raises(ContractViolation):
        OrientedMap(G, three, even_inv)


def test_flagged_contract_checks():
    G = symmetric_group(4)
    invs = _involutions(G)
    three = next(g for g in range(G.order) if G.order_of(g) == 3)
    with pytest.raises(ContractViolation):
        FlaggedMap(G, 0, invs[0], invs[0])        # t must be an involution
    with pytest.raises(ContractViolation):
        FlaggedMap(G, invs[0], three, invs[0])    # r must be an involution
    noncommuting = next(
        (t, l) for t in invs for l in invs
        if G.mul(t, l) != G.mul(l, t))
    t, l = noncommuting
    with pytest.raises(ContractViolation):
        FlaggedMap(G, t, invs[0], l)
    with pytest.raises(ContractViolation):
        FlaggedMap(klein_four_group(), 1, 1, 1)   # <t,r,l> proper


def test_s4_flagged_geometry(corpus):
    m = corpus["s4_3map.grp"].maps["m"]
    assert m.vef_counts() == (3, 6, 4)
    assert m.euler_characteristic() == 1
    assert m.valency() == 4
    assert not m.is_orientable()
    rep = m.report()
    assert (rep.genus_kind, rep.genus) == ("crosscap_number", 1)
    assert rep.reflexible
    assert not m.degenerate


def test_degenerate_tags():
    V4 = klein_four_group()
    m = FlaggedMap(V4, 1, 2, 1)
    assert m.degenerate == frozenset((DEGENERATE_L_EQUALS_T,))
    rep = m.report()
    assert rep.genus_kind == "degenerate"
    assert rep.genus is None and rep.orientable is None
    m2 = FlaggedMap(V4, 1, 2, 0)
    assert m2.degenerate == frozenset((DEGENERATE_L_TRIVIAL,))


def test_oriented_report_and_mirror(corpus):
    m = corpus["g384_chiral.grp"].maps["m"]
    rep = m.report()
    assert (rep.vertices, rep.edges, rep.faces) == (64, 192, 96)
    assert rep.genus == 17 and rep.orientable
    assert not rep.reflexible
    mir = m.mirror()
    assert not maps_isomorphic(m, mir)
    assert maps_isomorphic(mir, mir)
    # mirroring twice is the original map
    assert maps_isomorphic(m, mir.mirror())


def test_reflexible_map_equals_its_mirror(corpus):
    m = corpus["gl23_reflexible.grp"].maps["m"]
    assert m.is_reflexible()
    assert maps_isomorphic(m, m.mirror())


def test_maps_isomorphic_discriminates(corpus):
    proj = corpus["s4_projective.grp"].maps["m"]
    sphere = corpus["s4_sphere.grp"].maps["m"]
    assert not maps_isomorphic(proj, sphere)
    # conjugate tuples give isomorphic maps
    G = proj.group
    g = 7
    conj = FlaggedMap(G, G.conj(proj.t, g), G.conj(proj.r, g),
                      G.conj(proj.l, g))
    assert maps_isomorphic(proj, conj)


def test_quotient_map_basic(corpus):
    m = corpus["g72_3map.grp"].maps["m"]
    core = o_p(m.group, 3)
    qm, hom = quotient_map(m, core)
    assert qm.group.order == 24
    assert qm.vef_counts() == (3, 6, 4)
    assert hom.kernel().members == core.members
    assert isomorphism_search(qm.group, symmetric_group(4)) is not None


def test_quotient_collapse_is_rejected():
    # quotient of an oriented map by a subgroup containing l kills the edges
    D6 = dihedral_group(6)
    rot = next(g for g in range(D6.order) if D6.order_of(g) == 6)
    refl = next(g for g in _involutions(D6)
                if not subgroup_generated(D6, (rot,)).contains(g))
    m = OrientedMap(D6, rot, refl)
    full = D6.improper_subgroup()
    with pytest.raises(ContractViolation):
        quotient_map(m, full)


def test_flagged_quotient_collapse_is_rejected(corpus):
    m = corpus["s4_3map.grp"].maps["m"]
    V4 = o_p(m.group, 2)
    assert V4.contains(m.t)  # t is a double transposition
    with pytest.raises(ContractViolation):
        quotient_map(m, V4)


def test_oriented_of_flagged_sphere(corpus):
    m = corpus["s4_sphere.grp"].maps["m"]
    om = oriented_of_flagged(m)
    assert om.group.order == 12
    assert om.vef_counts() == (4, 6, 4)
    assert om.report().genus == 0
    # conjugation by t supplies the mirror symmetry
    assert om.is_reflexible()
    assert isomorphism_search(om.group, alternating_group(4)) is not None


def test_oriented_of_flagged_refuses_nonorientable(corpus):
    with pytest.raises(ContractViolation):
        oriented_of_flagged(corpus["s4_3map.grp"].maps["m"])
    V4 = klein_four_group()
    with pytest.raises(ContractViolation):
        oriented_of_flagged(FlaggedMap(V4, 1, 2, 1))


def test_flag_count_identities(corpus):
    for rz in corpus.values():
        for m in rz.maps.values():
            v, e, f = m.vef_counts()
            n = m.group.order
            if m.kind == "oriented":
                assert n == m.valency() * v
                assert e == n // 2
            else:
                assert n == 2 * m.valency() * v
            assert v - e + f == m.euler_characteristic()


def test_smallest_flagged_shapes():
    V4 = klein_four_group()
    # distinct t, r, l: one flag orbit everywhere, the projective plane
    rep = FlaggedMap(V4, 1, 2, 3).report()
    assert (rep.vertices, rep.edges, rep.faces) == (1, 1, 1)
    assert rep.euler == 1 and not rep.orientable and rep.genus == 1
    # t = r collapses the vertex rotation: the single-edge sphere map
    rep = FlaggedMap(V4, 1, 1, 2).report()
    assert (rep.vertices, rep.edges, rep.faces) == (2, 1, 1)
    assert rep.euler == 2 and rep.orientable and rep.genus == 0


def test_cyclic_groups_carry_no_flagged_maps():
    for n in (3, 5, 7, 9):
        G = cyclic_group(n)
        assert _involutions(G) == []
