"""Free-group words over a named generator list.

A word is a flat, freely reduced tuple of nonzero letters: letter ``g > 0``
means generator ``g - 1``, and ``-g`` its inverse.  Powers, conjugations
``w^v = v^-1 w v`` and commutators ``[a, b] = a^-1 b^-1 a b`` are expanded
eagerly, so downstream consumers (coset enumeration, evaluation in a group)
only ever see plain letter strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation

# Hard cap on expanded word length; generous for any sane presentation.
MAX_WORD_LETTERS = 10**6


def _reduce(letters: Sequence[int]) -> tuple:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        for x in self.letters:
            if not isinstance(x, int) or x == 0:
                raise ContractViolation(f"invalid letter {x!r}")
        reduced = _reduce(self.letters)
        if reduced != tuple(self.letters):
            object.__setattr__(self, "letters", reduced)

    @classmethod
    def gen(cls, i: int) -> "Word":
        return cls((i + 1,))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, e: int) -> "Word":
        if abs(e) * len(self.letters) > MAX_WORD_LETTERS:
            raise ContractViolation("word power exceeds the expansion limit")
        base = self if e >= 0 else self.inverse()
        return Word(base.letters * abs(e))

    def conj(self, by: "Word") -> "Word":
        return by.inverse() * self * by

    @staticmethod
    def commutator(a: "Word", b: "Word") -> "Word":
        return a.inverse() * b.inverse() * a * b

    def is_empty(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        """Largest 0-based generator index used, or -1 for the empty word."""
        return max((abs(x) for x in self.letters), default=0) - 1

    def evaluate(self, G, gen_elements: Sequence[int]) -> int:
        """Element index of this word in an enumerated group."""
        out = 0
        for x in self.letters:
            g = gen_elements[abs(x) - 1]
            out = G.mul(out, g if x > 0 else G.inv(g))
        return out

    def evaluate_perm(self, gen_perms) -> "object":
        from .perm import Perm
        if not gen_perms:
            raise ContractViolation("no generators to evaluate over")
        out = Perm.identity(gen_perms[0].degree)
        for x in self.letters:
            g = gen_perms[abs(x) - 1]
            out = out * (g if x > 0 else g.inverse())
        return out


@dataclass(frozen=True)
class Presentation:
    """Generator names plus relators; equalities are already folded in."""

    gen_names: tuple
    relators: tuple

    def __post_init__(self):
        if len(set(self.gen_names)) != len(self.gen_names):
            raise ContractViolation("duplicate generator names")
        ngens = len(self.gen_names)
        for rel in self.relators:
            if rel.is_empty():
                raise ContractViolation("empty relator survived normalization")
            if rel.max_generator() >= ngens:
                raise ContractViolation("relator uses an undeclared generator")

    @property
    def ngens(self) -> int:
        return len(self.gen_names)


def relator_from_equality(lhs: Word, rhs: Word) -> Word:
    return lhs * rhs.inverse()
