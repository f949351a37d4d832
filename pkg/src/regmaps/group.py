"""Finite permutation groups by full enumeration.

Groups here are small enough (a few thousand elements) that we list every
element.  The closure is a breadth-first walk from the identity, multiplying
by generators in input order, which fixes a deterministic element numbering:
element 0 is always the identity, and every later element k records a parent
edge (j, i) with ``elements[k] == elements[j] * gens[i]``.  That edge list is
what makes homomorphism extension a single linear pass.

Two multiplication paths exist.  If the base point 0 has a free orbit (the
map element -> image-of-0 is injective, which holds for every group realized
from a coset table), products reduce to three array lookups.  Otherwise we
compose image tuples and look the product up, which is fine at small degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Optional, Sequence

from .errors import ContractViolation, ResourceLimitExceeded, TheoremViolation
from .perm import Perm

DEFAULT_MAX_ORDER = 10**6


def closure(degree: int, generators: Sequence[Perm],
            max_order: int = DEFAULT_MAX_ORDER) -> "FiniteGroup":
    """Enumerate the group generated by `generators` inside Sym(degree)."""
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise ContractViolation(
                f"generator degree {g.degree} does not match {degree}")
    ident = Perm.identity(degree)
    elements = [ident]
    index = {ident: 0}
    parent = [(-1, -1)]
    gen_table: list[list[int]] = []
    k = 0
    while k < len(elements):
        ek = elements[k]
        row = []
        for i, g in enumerate(gens):
            prod = ek * g
            j = index.get(prod)
            if j is None:
                j = len(elements)
                if j >= max_order:
                    raise ResourceLimitExceeded(
                        f"closure exceeded max_order={max_order}",
                        "max_order", max_order)
                elements.append(prod)
                index[prod] = j
                parent.append((k, i))
            row.append(j)
        gen_table.append(row)
        k += 1
    return FiniteGroup(degree, gens, elements, index, gen_table, parent)


class FiniteGroup:
    """A fully enumerated permutation group.  Use :func:`closure` to build one."""

    def __init__(self, degree, gens, elements, index, gen_table, parent):
        self.degree = degree
        self.gens = gens
        self.elements = elements
        self.index = index
        self.gen_table = gen_table
        self.parent = parent
        self.cache: dict = {}
        self._inv: list[Optional[int]] = [None] * len(elements)
        self._orders: list[Optional[int]] = [None] * len(elements)
        # Fast multiplication is available when element -> image-of-point-0
        # is injective (the orbit of 0 is free).
        pts = [e.images[0] for e in elements] if degree > 0 else []
        if len(set(pts)) == len(elements):
            self._pt = pts
            elem_at = [-1] * degree
            for k, p in enumerate(pts):
                elem_at[p] = k
            self._elem_at = elem_at
        else:
            self._pt = None
            self._elem_at = None

    # -- basic arithmetic on element indices ------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def gen_indices(self) -> list[int]:
        """Indices of the generators themselves (row 0 of the product table)."""
        return self.gen_table[0] if self.gen_table else []

    def mul(self, i: int, j: int) -> int:
        if self._elem_at is not None:
            return self._elem_at[self.elements[j].images[self._pt[i]]]
        return self.index[self.elements[i] * self.elements[j]]

    def inv(self, i: int) -> int:
        v = self._inv[i]
        if v is None:
            v = self.index[self.elements[i].inverse()]
            self._inv[i] = v
        return v

    def conj(self, i: int, by: int) -> int:
        return self.mul(self.mul(self.inv(by), i), by)

    def comm(self, i: int, j: int) -> int:
        """Commutator i^-1 j^-1 i j."""
        return self.mul(self.mul(self.inv(i), self.inv(j)), self.mul(i, j))

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(i), -e)
        result, base = 0, i
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def order_of(self, i: int) -> int:
        v = self._orders[i]
        if v is None:
            v = self.elements[i].order()
            self._orders[i] = v
        return v

    def conjugacy_classes(self) -> tuple[list[int], list[int]]:
        """Return (class_id per element, class_size per element)."""
        cached = self.cache.get("classes")
        if cached is not None:
            return cached
        n = len(self.elements)
        class_id = [-1] * n
        sizes = [0] * n
        nclasses = 0
        gidx = self.gen_indices
        for start in range(n):
            if class_id[start] >= 0:
                continue
            orbit = [start]
            class_id[start] = nclasses
            qi = 0
            while qi < len(orbit):
                x = orbit[qi]
                qi += 1
                for g in gidx:
                    y = self.conj(x, g)
                    if class_id[y] < 0:
                        class_id[y] = nclasses
                        orbit.append(y)
            for x in orbit:
                sizes[x] = len(orbit)
            nclasses += 1
        self.cache["classes"] = (class_id, sizes)
        return class_id, sizes

    # -- subgroups ---------------------------------------------------------

    def _index_closure(self, gen_indices: Iterable[int]) -> list[int]:
        """Members (in discovery order) of the subgroup the indices generate."""
        members = {0}
        order = [0]
        gi = [g for g in gen_indices]
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            for g in gi:
                y = self.mul(x, g)
                if y not in members:
                    members.add(y)
                    order.append(y)
        return order

    def subgroup(self, gen_indices: Sequence[int]) -> "Subgroup":
        for g in gen_indices:
            if not (0 <= g < len(self.elements)):
                raise ContractViolation(f"element index {g} out of range")
        members = self._index_closure(gen_indices)
        return Subgroup(self, frozenset(members), tuple(gen_indices))

    def subgroup_from_members(self, members: Iterable[int]) -> "Subgroup":
        """Subgroup from a known-closed member set, with a greedy generating set."""
        mset = frozenset(members)
        gens: list[int] = []
        closed = {0}
        for m in sorted(mset):
            if m not in closed:
                gens.append(m)
                closed = set(self._index_closure(gens))
        if closed != mset:
            raise ContractViolation("member set is not closed under products")
        return Subgroup(self, mset, tuple(gens))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([0]), ())

    def improper_subgroup(self) -> "Subgroup":
        sub = self.cache.get("improper")
        if sub is None:
            sub = Subgroup(self, frozenset(range(len(self.elements))),
                           tuple(self.gen_indices))
            self.cache["improper"] = sub
        return sub


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of an enumerated group, stored by member indices."""

    parent: FiniteGroup
    members: frozenset
    gens: tuple

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, i: int) -> bool:
        return i in self.members

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def is_improper(self) -> bool:
        return len(self.members) == len(self.parent.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.members == other.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))


# -- subgroup and structure operations --------------------------------------


def subgroup_generated(G: FiniteGroup, gen_indices: Sequence[int]) -> Subgroup:
    return G.subgroup(gen_indices)


def right_coset_partition(G: FiniteGroup, sub: Subgroup) -> tuple[list[int], list[int]]:
    """Label every element with a coset id for the right cosets ``sub * x``.

    Coset ids are assigned in order of least member, so id 0 is the subgroup
    itself and representatives are the least element of each coset.
    """
    n = len(G.elements)
    coset_of = [-1] * n
    reps = []
    smem = sub.sorted_members()
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for s in smem:
            coset_of[G.mul(s, x)] = cid
    return coset_of, reps


def left_coset_partition(G: FiniteGroup, sub: Subgroup) -> tuple[list[int], list[int]]:
    n = len(G.elements)
    coset_of = [-1] * n
    reps = []
    smem = sub.sorted_members()
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for s in smem:
            coset_of[G.mul(x, s)] = cid
    return coset_of, reps


def orbits(G: FiniteGroup, sub: Subgroup, action: str = "right_cosets") -> list[list[int]]:
    """Partition for one of the three supported actions.

    ``right_cosets`` / ``left_cosets`` partition the parent group's element
    indices; ``points`` partitions {0..degree-1} under the subgroup's natural
    action.  Each part is sorted and parts are ordered by least member.
    """
    if sub.parent is not G:
        raise ContractViolation("subgroup does not belong to this group")
    if action in ("right_cosets", "left_cosets"):
        part = right_coset_partition if action == "right_cosets" else left_coset_partition
        coset_of, reps = part(G, sub)
        out: list[list[int]] = [[] for _ in reps]
        for x, c in enumerate(coset_of):
            out[c].append(x)
        return out
    if action == "points":
        seen = [False] * G.degree
        out = []
        gens = [G.elements[i] for i in sub.gens]
        for start in range(G.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            qi = 0
            while qi < len(orb):
                x = orb[qi]
                qi += 1
                for g in gens:
                    y = g.images[x]
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
            out.append(sorted(orb))
        return out
    raise ContractViolation(f"unknown action kind {action!r}")


def coset_action(G: FiniteGroup, sub: Subgroup) -> tuple[list[Perm], list[int]]:
    """Permutations induced by G's generators on the right cosets of sub.

    Returns (one permutation per generator, coset representatives).
    """
    coset_of, reps = right_coset_partition(G, sub)
    perms = []
    for gi in G.gen_indices:
        perms.append(Perm(tuple(coset_of[G.mul(r, gi)] for r in reps)))
    return perms, reps


def normal_core(G: FiniteGroup, sub: Subgroup) -> Subgroup:
    """Largest normal subgroup of G contained in sub.

    Computed as the kernel of the action on right cosets of sub, by
    propagating coset permutations along the closure's parent edges.
    """
    if sub.parent is not G:
        raise ContractViolation("subgroup does not belong to this group")
    if sub.order == 1 or sub.is_improper():
        return sub
    coset_of, reps = right_coset_partition(G, sub)
    nc = len(reps)
    gen_imgs = [tuple(coset_of[G.mul(r, gi)] for r in reps) for gi in G.gen_indices]
    ident = tuple(range(nc))
    n = len(G.elements)
    img: list = [None] * n
    img[0] = ident
    for k in range(1, n):
        j, i = G.parent[k]
        gi = gen_imgs[i]
        img[k] = tuple(map(gi.__getitem__, img[j]))
    members = [k for k in range(n) if img[k] == ident]
    return G.subgroup_from_members(members)


def is_normal(G: FiniteGroup, sub: Subgroup) -> bool:
    return all(G.conj(m, g) in sub.members
               for m in sub.gens for g in G.gen_indices)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sylow_p(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically.

    Starting from the trivial subgroup, scan elements in index order for a
    p-element outside the current subgroup P that normalizes it, and extend.
    Such an element always exists while |P| is short of the full p-part
    (P is proper in its normalizer inside any Sylow subgroup above it), so
    the loop provably reaches a Sylow subgroup.  A greedy fallback that
    extends by any p-element keeping the closure a p-group is kept as a
    safety net.
    """
    key = ("sylow", p)
    if key in G.cache:
        return G.cache[key]
    if p < 2 or prime_factors(p) != [p]:
        raise ContractViolation(f"{p} is not prime")
    target = p_part(len(G.elements), p)
    P = G.trivial_subgroup()
    n = len(G.elements)
    while P.order < target:
        found = -1
        for k in range(1, n):
            if k in P.members:
                continue
            o = G.order_of(k)
            if p_part(o, p) != o:
                continue
            if all(G.conj(m, k) in P.members for m in P.gens):
                found = k
                break
        if found < 0:
            P = _sylow_greedy(G, p, target)
            break
        P = G.subgroup(P.gens + (found,))
    if P.order != target:
        raise TheoremViolation(
            f"Sylow search ended at order {P.order}, expected {target}")
    G.cache[key] = P
    return P


def _sylow_greedy(G: FiniteGroup, p: int, target: int) -> Subgroup:
    # Maximal p-subgroups are Sylow, so extending one element at a time
    # whenever the closure stays a p-group terminates at full order.
    P = G.trivial_subgroup()
    while P.order < target:
        for k in range(1, len(G.elements)):
            if k in P.members:
                continue
            o = G.order_of(k)
            if p_part(o, p) != o:
                continue
            cand = G.subgroup(P.gens + (k,))
            if p_part(cand.order, p) == cand.order:
                P = cand
                break
        else:
            break
    return P


def o_p(G: FiniteGroup, p: int) -> Subgroup:
    """Largest normal p-subgroup: the core of any Sylow p-subgroup."""
    key = ("o_p", p)
    if key in G.cache:
        return G.cache[key]
    result = normal_core(G, sylow_p(G, p))
    G.cache[key] = result
    return result


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, "GroupHom"]:
    """The quotient G/N as a permutation group on cosets, with the projection."""
    if N.parent is not G:
        raise ContractViolation("subgroup does not belong to this group")
    if not is_normal(G, N):
        raise ContractViolation("quotient by a non-normal subgroup")
    perms, _reps = coset_action(G, N)
    Q = closure(max(1, len(G.elements) // N.order), perms)
    if Q.order * N.order != len(G.elements):
        raise TheoremViolation("quotient order mismatch")
    gen_images = tuple(Q.index[p] for p in perms)
    hom = hom_extend(G, Q, gen_images)
    if hom is None:
        raise TheoremViolation("canonical projection failed to extend")
    return Q, hom


def derived_subgroup(G: FiniteGroup, sub: Optional[Subgroup] = None) -> Subgroup:
    """Commutator subgroup of `sub` (default: of G itself), as a subgroup of G."""
    S = sub if sub is not None else G.improper_subgroup()
    gens = S.gens
    seeds = {G.comm(a, b) for a in gens for b in gens if a != b}
    seeds.discard(0)
    return normal_closure(G, gens, seeds)


def normal_closure(G: FiniteGroup, ambient_gens: Sequence[int],
                   seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing `seeds` normalized by <ambient_gens>."""
    gens = sorted(set(seeds) - {0})
    members = set(G._index_closure(gens))
    while True:
        new = [G.conj(m, a) for m in gens for a in ambient_gens
               if G.conj(m, a) not in members]
        if not new:
            return Subgroup(G, frozenset(members), tuple(gens))
        gens.extend(sorted(set(new)))
        members = set(G._index_closure(gens))


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.improper_subgroup()]
    while True:
        nxt = derived_subgroup(G, series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def is_solvable(G: FiniteGroup) -> bool:
    if "solvable" not in G.cache:
        G.cache["solvable"] = derived_series(G)[-1].order == 1
    return G.cache["solvable"]


def center(G_or_sub) -> Subgroup:
    """Center of a group, or of a subgroup within its parent."""
    if isinstance(G_or_sub, FiniteGroup):
        G = G_or_sub
        gens = G.gen_indices
        scope = range(len(G.elements))
    else:
        G = G_or_sub.parent
        gens = list(G_or_sub.gens)
        scope = G_or_sub.sorted_members()
    members = [x for x in scope
               if all(G.mul(x, g) == G.mul(g, x) for g in gens)]
    return G.subgroup_from_members(members)


def nilpotency_class(sub: Subgroup) -> int:
    """Length of the upper central series (0 for the trivial group)."""
    G = sub.parent
    gens = list(sub.gens)
    Z = {0}
    cls = 0
    while len(Z) < sub.order:
        Znext = {x for x in sub.members
                 if all(G.comm(x, g) in Z for g in gens)}
        if len(Znext) == len(Z):
            raise ContractViolation("subgroup is not nilpotent")
        Z = Znext
        cls += 1
    return cls


def omega1(sub: Subgroup, p: int) -> Subgroup:
    """Subgroup generated by all elements of order dividing p."""
    G = sub.parent
    gens = [m for m in sub.sorted_members() if m != 0 and G.power(m, p) == 0]
    members = G._index_closure(gens)
    if any(m not in sub.members for m in members):
        raise ContractViolation("omega1 escaped the subgroup; input not a group?")
    return Subgroup(G, frozenset(members), tuple(gens))


def frattini_p(sub: Subgroup, p: int) -> Subgroup:
    """Frattini subgroup of a p-group: derived subgroup times p-th powers."""
    G = sub.parent
    if p_part(sub.order, p) != sub.order:
        raise ContractViolation("frattini_p requires a p-group")
    der = derived_subgroup(G, sub)
    gens = sorted(set(der.gens) | ({G.power(m, p) for m in sub.members} - {0}))
    members = G._index_closure(gens)
    return Subgroup(G, frozenset(members), tuple(gens))


def is_extraspecial(sub: Subgroup, p: int) -> bool:
    """Center, derived and Frattini subgroups coincide and have order p."""
    if p_part(sub.order, p) != sub.order or sub.order <= p:
        return False
    Z = center(sub)
    if Z.order != p:
        return False
    D = derived_subgroup(sub.parent, sub)
    F = frattini_p(sub, p)
    return Z.members == D.members == F.members


# -- homomorphisms ---------------------------------------------------------


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism recorded by generator images plus the full image table."""

    source: FiniteGroup
    target: FiniteGroup
    gen_images: tuple
    images: tuple = field(repr=False)

    def apply(self, i: int) -> int:
        return self.images[i]

    def kernel(self) -> Subgroup:
        members = [k for k, v in enumerate(self.images) if v == 0]
        return self.source.subgroup_from_members(members)

    def image_subgroup(self) -> Subgroup:
        return self.target.subgroup_from_members(set(self.images))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == len(self.target.elements)

    def is_bijective(self) -> bool:
        return (len(self.source.elements) == len(self.target.elements)
                and self.is_surjective())


def hom_extend(source: FiniteGroup, target: FiniteGroup,
               gen_images: Sequence[int]) -> Optional[GroupHom]:
    """Extend generator images to a homomorphism, or return None.

    Images are propagated along the closure's parent edges, then every
    product edge of the Cayley graph is checked; any inconsistency means
    no homomorphism with these generator images exists.
    """
    gen_images = tuple(gen_images)
    if len(gen_images) != len(source.gens):
        raise ContractViolation("one image per generator required")
    for t in gen_images:
        if not (0 <= t < len(target.elements)):
            raise ContractViolation(f"image index {t} out of range")
    n = len(source.elements)
    img = [0] * n
    for k in range(1, n):
        j, i = source.parent[k]
        img[k] = target.mul(img[j], gen_images[i])
    for k in range(n):
        row = source.gen_table[k]
        for i, t in enumerate(gen_images):
            if img[row[i]] != target.mul(img[k], t):
                return None
    return GroupHom(source, target, gen_images, tuple(img))


def regenerated(G: FiniteGroup, gen_indices: Sequence[int]) -> FiniteGroup:
    """The subgroup generated by the given elements, as its own FiniteGroup.

    Elements keep their permutation form (and degree); only the numbering
    changes, to the BFS order of the new generating set.
    """
    key = ("regen", tuple(gen_indices))
    if key in G.cache:
        return G.cache[key]
    result = closure(G.degree, [G.elements[i] for i in gen_indices],
                     max_order=len(G.elements) + 1)
    G.cache[key] = result
    return result


def automorphism_exists(G: FiniteGroup, src: Sequence[int],
                        dst: Sequence[int]) -> bool:
    """True iff some automorphism of G maps the src tuple to dst componentwise.

    Both tuples must generate G; the automorphism, if any, is then the unique
    extension of src -> dst, so no search is involved.
    """
    src, dst = tuple(src), tuple(dst)
    if len(src) != len(dst):
        raise ContractViolation("tuples must have equal length")
    S = regenerated(G, src)
    if S.order != len(G.elements):
        raise ContractViolation("src tuple does not generate the group")
    if len(G._index_closure(dst)) != len(G.elements):
        raise ContractViolation("dst tuple does not generate the group")
    return hom_extend(S, G, dst) is not None


def isomorphism_search(G1: FiniteGroup, G2: FiniteGroup) -> Optional[GroupHom]:
    """Find some isomorphism G1 -> G2, or None.

    Candidate images are pruned by element order and conjugacy class size,
    which keeps the search tiny for the group orders this package meets.
    """
    n = len(G1.elements)
    if n != len(G2.elements):
        return None
    fp1 = sorted((G1.order_of(k), G1.conjugacy_classes()[1][k]) for k in range(n))
    fp2 = sorted((G2.order_of(k), G2.conjugacy_classes()[1][k]) for k in range(n))
    if fp1 != fp2:
        return None
    gens1 = small_generating_set(G1)
    S = regenerated(G1, gens1)
    _, sizes2 = G2.conjugacy_classes()
    pools = []
    for g in gens1:
        o, c = G1.order_of(g), G1.conjugacy_classes()[1][g]
        pools.append([k for k in range(n)
                      if G2.order_of(k) == o and sizes2[k] == c])
    for assignment in iproduct(*pools):
        if len(G2._index_closure(assignment)) != n:
            continue
        hom = hom_extend(S, G2, assignment)
        if hom is not None and hom.is_bijective():
            return hom
    return None


def small_generating_set(G: FiniteGroup) -> tuple:
    """A short generating tuple found greedily in index order."""
    if "small_gens" in G.cache:
        return G.cache["small_gens"]
    gens: list[int] = []
    closed = {0}
    n = len(G.elements)
    for m in range(n):
        if m not in closed:
            gens.append(m)
            closed = set(G._index_closure(gens))
            if len(closed) == n:
                break
    result = tuple(gens)
    G.cache["small_gens"] = result
    return result


# -- primitivity -----------------------------------------------------------


def _minimal_block_size(perms: Sequence[Perm], npoints: int, beta: int) -> int:
    parent = list(range(npoints))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = [(0, beta)]
    parent[find(beta)] = find(0)
    while pairs:
        a, b = pairs.pop()
        for g in perms:
            x, y = find(g.images[a]), find(g.images[b])
            if x != y:
                parent[y] = x
                pairs.append((x, y))
    root = find(0)
    return sum(1 for i in range(npoints) if find(i) == root)


def is_transitive(perms: Sequence[Perm], npoints: int) -> bool:
    if npoints == 0:
        return False
    seen = [False] * npoints
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        x = queue.pop()
        for g in perms:
            y = g.images[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == npoints


def is_primitive(perms: Sequence[Perm], npoints: int) -> bool:
    """True iff the transitive action generated by `perms` has no proper blocks."""
    if not is_transitive(perms, npoints):
        raise ContractViolation("primitivity requires a transitive action")
    if npoints == 1:
        return True
    return all(_minimal_block_size(perms, npoints, beta) == npoints
               for beta in range(1, npoints))


# -- misc structure tests --------------------------------------------------


def is_abelian(G: FiniteGroup) -> bool:
    gi = G.gen_indices
    return all(G.mul(a, b) == G.mul(b, a) for a in gi for b in gi)


def is_cyclic(sub: Subgroup) -> bool:
    G = sub.parent
    return any(G.order_of(m) == sub.order for m in sub.members)


def exponent(sub: Subgroup) -> int:
    from math import lcm
    G = sub.parent
    out = 1
    for m in sub.members:
        out = lcm(out, G.order_of(m))
    return out
