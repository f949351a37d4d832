"""Coset enumeration over a finite presentation (HLT strategy).

Cosets are numbered from 0, with coset 0 the subgroup itself.  New cosets
are created strictly in definition order while relators are traced, which
makes the whole run deterministic.  Coincidences are merged through a
union-find representative array; the surviving table is compacted and then
standardized by a breadth-first renumbering from coset 0.

Symbols interleave generators and inverses: generator i is symbol 2i and
its inverse is 2i + 1, so ``x ^ 1`` flips a symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation, ResourceLimitExceeded
from .group import DEFAULT_MAX_ORDER, FiniteGroup, closure
from .perm import Perm
from .words import Presentation, Word

DEFAULT_MAX_COSETS = 200_000


def _to_symbols(word: Word) -> list[int]:
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word.letters]


@dataclass
class CosetTable:
    """A completed enumeration: `n` cosets, one row of 2*ngens entries each."""

    ngens: int
    n: int
    rows: list

    def gen_perms(self) -> list[Perm]:
        return [Perm(tuple(row[2 * i] for row in self.rows))
                for i in range(self.ngens)]


def todd_coxeter(pres: Presentation, subgroup_words: Sequence[Word] = (),
                 max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of the subgroup generated by `subgroup_words`.

    With no subgroup words this enumerates the whole group.  Raises a
    resource error naming `max_cosets` if the table grows past the limit
    (which is also what a presentation of an infinite group runs into).
    """
    ngens = pres.ngens
    if ngens == 0:
        return CosetTable(0, 1, [[]])
    nsym = 2 * ngens
    table: list[list] = [[None] * nsym]
    p = [0]

    def rep(k: int) -> int:
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def define(alpha: int, x: int) -> int:
        if len(table) >= max_cosets:
            raise ResourceLimitExceeded(
                f"coset table exceeded max_cosets={max_cosets}",
                "max_cosets", max_cosets)
        beta = len(table)
        table.append([None] * nsym)
        p.append(beta)
        table[alpha][x] = beta
        table[beta][x ^ 1] = alpha
        return beta

    def merge(a: int, b: int, queue: list) -> None:
        a, b = rep(a), rep(b)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            p[hi] = lo
            queue.append(hi)

    def coincidence(alpha: int, beta: int) -> None:
        queue: list = []
        merge(alpha, beta, queue)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]
            qi += 1
            for x in range(nsym):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(alpha: int, word: list) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    relators = [_to_symbols(r) for r in pres.relators]
    for w in subgroup_words:
        scan_and_fill(0, _to_symbols(w))
    alpha = 0
    while alpha < len(table):
        if p[alpha] == alpha:
            for w in relators:
                scan_and_fill(alpha, w)
                if p[alpha] != alpha:
                    break
            if p[alpha] == alpha:
                for x in range(nsym):
                    if table[alpha][x] is None:
                        define(alpha, x)
        alpha += 1

    # Compact to live cosets, then renumber in BFS order from coset 0 so the
    # final table does not depend on the history of dead definitions.
    live = [k for k in range(len(table)) if p[k] == k]
    squash = {k: i for i, k in enumerate(live)}
    rows = [[squash[rep(v)] for v in table[k]] for k in live]
    order = [0]
    pos = {0: 0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for x in range(nsym):
            d = rows[c][x]
            if d not in pos:
                pos[d] = len(order)
                order.append(d)
    if len(order) != len(rows):
        raise ContractViolation("coset table is not connected")
    final = [[pos[v] for v in rows[c]] for c in order]
    return CosetTable(ngens, len(final), final)


def perms_from_table(ct: CosetTable, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The permutation group the table induces on its cosets.

    For an enumeration over the trivial subgroup this is the regular
    representation, so the group order equals the coset count.
    """
    if ct.ngens == 0:
        return closure(1, [], max_order=max_order)
    return closure(ct.n, ct.gen_perms(), max_order=max_order)
