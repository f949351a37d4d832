"""Structure theory of p-maps.

A map is a *p-map* when its vertex count is p^k for a prime p and k >= 1.
The group of a p-map is always solvable, and the map is *normal* exactly
when its Sylow p-subgroup is normal.  A nonnormal p-map forces p to be 2 or
3, and collapsing the p-core produces one of four exceptional quotients:

* ``D(m, e)``  -- the oriented dipole: two vertices joined by m edges
  (m odd, >= 3), reversal conjugating the rotation to its e-th power with
  e^2 = 1, e != 1 (mod m);
* ``DM(n)``    -- the disc semistar: a degenerate flagged map whose edge
  reversal collapsed to the identity, on a dihedral group of order n;
* ``EM(n)``    -- the sphere semistar: the reversal collapsed onto t;
* ``C(3,2)``   -- the unique nonorientable 3-map with 3 vertices, 6 edges
  and 4 faces on the symmetric group of degree 4.

For normal maps whose vertex action is primitive, the Sylow subgroup P
splits over the vertex-kernel part P0: either P = P0 x T with T elementary
abelian of rank k, or (p odd) P is a central product of P0 = Z(P) with the
extraspecial group omega_1(P) of order p^(k+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ClassificationError, ContractViolation, TheoremViolation
from .group import (FiniteGroup, center, coset_action, is_cyclic,
                    is_extraspecial, is_normal, is_primitive, is_solvable,
                    isomorphism_search, normal_core, o_p, omega1,
                    prime_factors, quotient_group, regenerated,
                    subgroup_generated, sylow_p)
from .maps import DEGENERATE_L_TRIVIAL, oriented_of_flagged, quotient_map
from .standard import symmetric_group

_SYM4: Optional[FiniteGroup] = None


def _sym4() -> FiniteGroup:
    global _SYM4
    if _SYM4 is None:
        _SYM4 = symmetric_group(4)
    return _SYM4


@dataclass(frozen=True)
class ExceptionalCase:
    kind: str  # "dipole" | "disc_semistar" | "sphere_semistar" | "c32"
    m: Optional[int] = None
    e: Optional[int] = None
    n: Optional[int] = None

    def label(self) -> str:
        if self.kind == "dipole":
            return f"D({self.m},{self.e})"
        if self.kind == "disc_semistar":
            return f"DM({self.n})"
        if self.kind == "sphere_semistar":
            return f"EM({self.n})"
        if self.kind == "c32":
            return "C(3,2)"
        raise ContractViolation(f"unknown exceptional kind {self.kind!r}")


@dataclass(frozen=True)
class PMapClassification:
    p: int
    k: int
    solvable: bool
    normal: bool
    orientation_status: str
    exceptional_case: Optional[ExceptionalCase]
    quotient_order: Optional[int]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "solvable": self.solvable,
            "normal": self.normal,
            "orientation_status": self.orientation_status,
            "exceptional_case": (self.exceptional_case.label()
                                 if self.exceptional_case else None),
            "quotient_order": self.quotient_order,
        }


@dataclass(frozen=True)
class LawCheck:
    """Which branch of the structure law a map satisfies."""

    p: int
    k: int
    branch: str  # "normal" | "cyclic_by_z2" | "cyclic_by_klein" | "s4_quotient"
    odd_part_order: Optional[int] = None
    quotient_index: Optional[int] = None


@dataclass(frozen=True)
class SylowStructure:
    case_tag: str  # "direct_product_elementary" | "central_product_extraspecial" | "other"
    p0_order: int
    complement_rank: Optional[int]
    extraspecial_order: Optional[int]

    def to_dict(self) -> dict:
        return {
            "case_tag": self.case_tag,
            "p0_order": self.p0_order,
            "complement_rank": self.complement_rank,
            "extraspecial_order": self.extraspecial_order,
        }


def detect_p_map(m) -> Optional[tuple]:
    """(p, k) with vertex count p^k and k >= 1, else None."""
    v = m.vef_counts()[0]
    if v < 2:
        return None
    ps = prime_factors(v)
    if len(ps) != 1:
        return None
    p = ps[0]
    k = 0
    while v > 1:
        v //= p
        k += 1
    return p, k


def _orientation_status(m, p: int) -> str:
    if m.kind == "oriented":
        return "reflexible" if m.is_reflexible() else "chiral"
    if not m.is_orientable():
        return "nonorientable"
    # only the even-word subgroup matters here; going through
    # oriented_of_flagged would reject valency-1 maps (trivial rotation)
    G = m.group
    plus = regenerated(G, (G.mul(m.t, m.r), G.mul(m.t, m.l)))
    if is_normal(plus, sylow_p(plus, p)):
        return "orientable_normal"
    return "reflexible"


def classify(m) -> PMapClassification:
    """Full classification of a p-map; degenerate maps are refused."""
    if m.degenerate:
        raise ContractViolation("degenerate maps are not classified")
    pk = detect_p_map(m)
    if pk is None:
        raise ContractViolation("vertex count is not a prime power")
    p, k = pk
    G = m.group
    if not is_solvable(G):
        raise TheoremViolation(f"group of a {p}-map must be solvable")
    P = sylow_p(G, p)
    status = _orientation_status(m, p)
    if is_normal(G, P):
        return PMapClassification(p, k, True, True, status, None, None)
    try:
        qmap, _ = quotient_map(m, o_p(G, p))
    except ContractViolation as exc:
        raise TheoremViolation(f"exceptional quotient collapsed: {exc}") from exc
    case = identify_exceptional(qmap, p)
    return PMapClassification(p, k, True, False, status, case,
                              qmap.group.order)


def identify_exceptional(qmap, p: int) -> ExceptionalCase:
    """Match the p-free quotient of a nonnormal p-map against the four
    exceptional shapes."""
    if p == 3:
        if qmap.kind != "flagged":
            raise TheoremViolation("a nonnormal oriented 3-map cannot exist")
        return identify_c32(qmap)
    if p != 2:
        raise TheoremViolation(f"nonnormal p-map with p = {p}")
    if qmap.kind == "flagged" and qmap.degenerate:
        return identify_semistar(qmap)
    return identify_dipole(qmap)


def identify_dipole(qm) -> ExceptionalCase:
    if qm.kind == "flagged":
        if qm.degenerate:
            raise ClassificationError("a degenerate map is not a dipole")
        try:
            om = oriented_of_flagged(qm)
        except ContractViolation as exc:
            raise ClassificationError(f"dipole check: {exc}") from exc
    else:
        om = qm
    G = om.group
    v = om.vef_counts()[0]
    if v != 2:
        raise ClassificationError(f"a dipole has 2 vertices, found {v}")
    mm = G.order_of(om.r)
    if mm % 2 == 0 or mm < 3:
        raise ClassificationError(
            f"dipole edge count must be odd and >= 3, found {mm}")
    conj = G.conj(om.r, om.l)
    e = None
    for j in range(mm):
        if G.power(om.r, j) == conj:
            e = j
            break
    if e is None:
        raise ClassificationError("reversal does not normalize the rotation")
    if (e * e) % mm != 1 or e % mm == 1:
        raise ClassificationError(f"dipole exponent {e} mod {mm} is invalid")
    return ExceptionalCase("dipole", m=mm, e=e)


def identify_semistar(qm) -> ExceptionalCase:
    if qm.kind != "flagged" or not qm.degenerate:
        raise ClassificationError(
            "semistar quotients are degenerate flagged maps")
    G = qm.group
    half = G.order_of(G.mul(qm.t, qm.r))
    if G.order != 2 * half or half % 2 == 0 or half < 3:
        raise ClassificationError(
            f"semistar group must be dihedral of twice-odd order >= 6,"
            f" found order {G.order}")
    if DEGENERATE_L_TRIVIAL in qm.degenerate:
        return ExceptionalCase("disc_semistar", n=G.order)
    return ExceptionalCase("sphere_semistar", n=G.order)


def identify_c32(qm) -> ExceptionalCase:
    if qm.kind != "flagged" or qm.degenerate:
        raise ClassificationError("the exceptional 3-map is a flagged map")
    G = qm.group
    if G.order != 24 or qm.vef_counts() != (3, 6, 4) or qm.is_orientable():
        raise ClassificationError(
            "quotient does not match the nonorientable 3-vertex map")
    if isomorphism_search(G, _sym4()) is None:
        raise ClassificationError(
            "quotient group is not the symmetric group of degree 4")
    return ExceptionalCase("c32")


def verify_classification_law(m) -> LawCheck:
    """Independently check the structure law on the group side: solvable,
    and if the Sylow p-subgroup is not normal then p in {2, 3} and the
    p-free quotient is odd-cyclic-by-(Z2 or Klein) resp. S4-shaped."""
    if m.degenerate:
        raise ContractViolation("degenerate maps are not classified")
    pk = detect_p_map(m)
    if pk is None:
        raise ContractViolation("vertex count is not a prime power")
    p, k = pk
    G = m.group
    if not is_solvable(G):
        raise TheoremViolation(f"group of a {p}-map must be solvable")
    P = sylow_p(G, p)
    if is_normal(G, P):
        return LawCheck(p, k, "normal")
    Q, _ = quotient_group(G, o_p(G, p))
    if o_p(Q, p).order != 1:
        raise TheoremViolation("p-core failed to clear in the quotient")
    if p == 2:
        odd = [x for x in range(Q.order) if Q.order_of(x) % 2 == 1]
        try:
            C = Q.subgroup_from_members(odd)
        except ContractViolation as exc:
            raise TheoremViolation(
                "odd-order elements do not form a subgroup") from exc
        if not is_cyclic(C) or C.order % 2 == 0 or C.order < 3:
            raise TheoremViolation(
                f"odd part of order {C.order} is not cyclic of odd order >= 3")
        if not is_normal(Q, C):
            raise TheoremViolation("odd part is not normal")
        index = Q.order // C.order
        if index == 2:
            return LawCheck(p, k, "cyclic_by_z2", C.order, 2)
        if index == 4:
            K, _ = quotient_group(Q, C)
            if any(K.order_of(x) > 2 for x in range(K.order)):
                raise TheoremViolation("index-4 quotient is not a Klein group")
            return LawCheck(p, k, "cyclic_by_klein", C.order, 4)
        raise TheoremViolation(
            f"odd part has index {index}, expected 2 or 4")
    if p == 3:
        if isomorphism_search(Q, _sym4()) is None:
            raise TheoremViolation(
                "3-free quotient is not the symmetric group of degree 4")
        return LawCheck(p, k, "s4_quotient")
    raise TheoremViolation(f"nonnormal p-map with p = {p}")


def _elementary_complement(G: FiniteGroup, P, P0, p: int, k: int):
    """Greedy elementary-abelian complement to P0 inside P.  Complete when
    P is abelian (subspace complement in omega_1); a heuristic otherwise."""
    T = G.trivial_subgroup()
    p0_gens = tuple(P0.gens)
    target = p ** k
    for x in P.sorted_members():
        if T.order == target:
            break
        if x == 0 or G.power(x, p) != 0:
            continue
        if any(G.mul(x, g) != G.mul(g, x) for g in T.gens):
            continue
        if any(G.mul(x, g) != G.mul(g, x) for g in p0_gens):
            continue
        cand = subgroup_generated(G, tuple(T.gens) + (x,))
        if cand.order != T.order * p:
            continue
        if len(cand.members & P0.members) != 1:
            continue
        T = cand
    if T.order != target:
        return None
    whole = subgroup_generated(G, tuple(T.gens) + p0_gens)
    if whole.members != P.members:
        return None
    return T


def certify_sylow_structure(m) -> SylowStructure:
    """Split the Sylow subgroup of a normal, vertex-primitive map.

    Preconditions (normal Sylow subgroup, primitive vertex action, a
    genuine p-map) are the caller's obligation and raise ContractViolation;
    shape conclusions that the theory forbids raise TheoremViolation.
    """
    if m.degenerate:
        raise ContractViolation("degenerate maps are not certified")
    pk = detect_p_map(m)
    if pk is None:
        raise ContractViolation("vertex count is not a prime power")
    p, k = pk
    G = m.group
    P = sylow_p(G, p)
    if not is_normal(G, P):
        raise ContractViolation("certification requires a normal map")
    H = m.vertex_subgroup
    perms, _ = coset_action(G, H)
    if not is_primitive(perms, G.order // H.order):
        raise ContractViolation(
            "certification requires a primitive vertex action")
    if m.kind == "flagged" and k % 2 == 1:
        raise TheoremViolation(
            "a flagged normal primitive map needs an even vertex exponent")
    core = normal_core(G, H)
    P0 = G.subgroup_from_members(P.members & core.members)
    if P0.order * p ** k != P.order:
        raise TheoremViolation("vertex kernel has the wrong p-part")

    T = _elementary_complement(G, P, P0, p, k)
    if T is not None:
        return SylowStructure("direct_product_elementary", P0.order, k, None)

    if p > 2:
        Z = center(P)
        E = omega1(P, p)
        if (Z.members == P0.members and is_extraspecial(E, p)
                and E.order == p ** (k + 1)):
            whole = subgroup_generated(G, tuple(E.gens) + tuple(P0.gens))
            if whole.members == P.members:
                return SylowStructure("central_product_extraspecial",
                                      P0.order, None, E.order)
    return SylowStructure("other", P0.order, None, None)
