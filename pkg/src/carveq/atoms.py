"""Atoms and canonical finite structures built from them.

Atoms are structured terms with decidable structural equality, standing in
for points of a space in which only equality is ever consulted.  Three
variants: exact rationals in lowest terms, tagged atoms (an atom paired
injectively with a bit), and word atoms wrapping a canonical cyclic word.
"""

import math
from dataclasses import dataclass
from typing import Union


def primitive_root(seq):
    """Shortest prefix whose repetition equals ``seq``.

    Works on any sliceable sequence (str, tuple).  The result is seq[:d] for
    the least divisor d of len(seq) with seq == seq[:d] * (len(seq) // d).
    """
    n = len(seq)
    for d in range(1, n):
        if n % d == 0 and seq[:d] * (n // d) == seq:
            return seq[:d]
    return seq


@dataclass(frozen=True)
class CyclicWord:
    """Nonempty bit word denoting the sequence b(k) = bits[k mod len(bits)].

    Stored canonically as its primitive root: two words denote the same
    sequence iff their canonical forms are identical.  Phase is significant,
    so rotations denote distinct sequences.
    """

    bits: str

    def __post_init__(self):
        if not self.bits or any(c not in "01" for c in self.bits):
            raise ValueError(f"bits must be a nonempty 0/1 string, got {self.bits!r}")
        object.__setattr__(self, "bits", primitive_root(self.bits))

    def __len__(self):
        return len(self.bits)

    def bit_at(self, k):
        return 1 if self.bits[k % len(self.bits)] == "1" else 0

    def is_constant(self):
        return len(self.bits) == 1


@dataclass(frozen=True)
class Rational:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ValueError("zero denominator")
        g = math.gcd(self.num, self.den)
        num, den = self.num // g, self.den // g
        if den < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)


@dataclass(frozen=True)
class Tag:
    bit: int
    inner: "Atom"

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise ValueError("bit must be 0 or 1")


@dataclass(frozen=True)
class WordAtom:
    word: CyclicWord

    def __post_init__(self):
        if isinstance(self.word, str):
            object.__setattr__(self, "word", CyclicWord(self.word))


Atom = Union[Rational, Tag, WordAtom]

_ATOM_TYPES = (Rational, Tag, WordAtom)


def is_atom(value):
    return isinstance(value, _ATOM_TYPES)


def atom_eq(a, b):
    """Structural equality of atoms; an equivalence relation for free."""
    return a == b


def atom_sort_key(a):
    """Injective sort key realizing a strict total order on atoms.

    The variant rank comes first, so comparisons between keys of different
    variants never reach fields of different Python types.
    """
    if isinstance(a, Rational):
        return (0, a.num, a.den)
    if isinstance(a, Tag):
        return (1, a.bit, atom_sort_key(a.inner))
    if isinstance(a, WordAtom):
        return (2, a.word.bits)
    raise TypeError(f"not an atom: {a!r}")


def atom_lt(a, b):
    return atom_sort_key(a) < atom_sort_key(b)


@dataclass(frozen=True)
class AtomSet:
    """Finite set of atoms in canonical storage.

    Elements are sorted by the atom order and duplicate-free, so set
    equality coincides with structural equality of the storage.
    """

    elements: tuple

    def __post_init__(self):
        for a in self.elements:
            if not is_atom(a):
                raise TypeError(f"not an atom: {a!r}")
        canon = tuple(sorted(set(self.elements), key=atom_sort_key))
        object.__setattr__(self, "elements", canon)

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def union(self, other):
        return AtomSet(self.elements + other.elements)

    def intersection(self, other):
        return AtomSet(tuple(a for a in self.elements if a in other.elements))

    def issubset(self, other):
        return all(a in other.elements for a in self.elements)

    @staticmethod
    def of(*atoms):
        return AtomSet(tuple(atoms))
