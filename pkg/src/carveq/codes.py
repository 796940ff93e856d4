"""Finitary sequence codes and their exact evaluation.

Every code denotes a total infinite sequence, and every quantifier over all
of N is discharged over a provably sufficient finite bound.  The algebra is
closed: atom-sequence codes are cyclic entry lists or pair-merges of a row
code, binary-sequence codes are cyclic words or pullbacks, and constructors
normalize eagerly so that equality stays decidable wherever the construction
can guarantee it.  Opaque generator functions are rejected at the boundary.
"""

import math
from dataclasses import dataclass
from typing import Union

from .atoms import AtomSet, CyclicWord, Tag, is_atom
from .errors import IncomparableCodes
from .pairing import cantor_pair, cantor_unpair

DEFAULT_N_CMP = 4096


@dataclass(frozen=True)
class Cyclic:
    """Cyclic entry list denoting x(n) = entries[n mod len(entries)]."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("Cyclic needs at least one entry")
        for a in entries:
            if not is_atom(a):
                raise TypeError(f"Cyclic entries must be atoms, got {a!r}")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class ZCode:
    """Cyclic list of cyclic rows, denoting z(i) = entries[i mod len]."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("ZCode needs at least one row")
        for row in entries:
            if not isinstance(row, Cyclic):
                raise TypeError(f"ZCode rows must be Cyclic codes, got {row!r}")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class PairMerge:
    """Merge of a row code through the pairing: x(e(i, j)) = z(i)(j)."""

    z: ZCode

    def __post_init__(self):
        if not isinstance(self.z, ZCode):
            raise TypeError("PairMerge wraps a ZCode")


AtomSeqCode = Union[Cyclic, PairMerge]


def value_at(x, n):
    """Coordinate access x(n); total for both code variants."""
    if isinstance(x, Cyclic):
        return x.entries[n % len(x.entries)]
    if isinstance(x, PairMerge):
        i, j = cantor_unpair(n)
        rows = x.z.entries
        row = rows[i % len(rows)]
        return row.entries[j % len(row.entries)]
    raise TypeError(f"not an atom-sequence code: {x!r}")


def saturation_bound(x):
    """An index B with {x(n) : n in N} = {x(n) : n < B}.

    Cyclic: the period.  PairMerge: 1 + max e(i, j) over the finite grid
    i < rows, j < period(row i); any later index reduces (i mod rows,
    j mod period) onto a grid cell whose value already occurs below B.
    """
    if isinstance(x, Cyclic):
        return len(x.entries)
    rows = x.z.entries
    top = 0
    for i, row in enumerate(rows):
        for j in range(len(row.entries)):
            top = max(top, cantor_pair(i, j))
    return 1 + top


def range_set(x):
    """The set of values the denoted sequence ever takes, canonical."""
    return AtomSet(tuple(value_at(x, n) for n in range(saturation_bound(x))))


@dataclass(frozen=True)
class CycW:
    """Binary-sequence code wrapping a canonical cyclic word."""

    word: CyclicWord

    def __post_init__(self):
        if isinstance(self.word, str):
            object.__setattr__(self, "word", CyclicWord(self.word))
        elif not isinstance(self.word, CyclicWord):
            raise TypeError("CycW wraps a CyclicWord")


@dataclass(frozen=True)
class Pullback:
    """b(k) = 1 iff value_at(base, k) is in aset.

    Only the non-degenerate case survives construction: a pair-merge base
    with a proper nonempty subset of its range.  Use :func:`pullback` to
    build normalized binary-sequence codes.
    """

    base: AtomSeqCode
    aset: AtomSet

    def __post_init__(self):
        if not isinstance(self.base, PairMerge):
            raise ValueError("Pullback keeps only pair-merge bases; use pullback()")
        rng = range_set(self.base)
        if not self.aset.issubset(rng) or len(self.aset) == 0 or self.aset == rng:
            raise ValueError(
                "Pullback set must be a proper nonempty subset of the base range; "
                "use pullback()"
            )


BinSeqCode = Union[CycW, Pullback]


def pullback(base, aset):
    """Normalized binary-sequence code for k -> [value_at(base, k) in aset].

    The set is clipped to the base range; an empty or full clip yields the
    constant word, and a cyclic base is evaluated through to a word of one
    base period, so equality among codes built here never needs the
    undecidable mixed comparison.
    """
    rng = range_set(base)
    aset = aset.intersection(rng)
    if len(aset) == 0:
        return CycW(CyclicWord("0"))
    if aset == rng:
        return CycW(CyclicWord("1"))
    if isinstance(base, Cyclic):
        bits = "".join("1" if a in aset else "0" for a in base.entries)
        return CycW(CyclicWord(bits))
    return Pullback(base, aset)


def binseq_value_at(b, k):
    """Bit k of the denoted binary sequence."""
    if isinstance(b, CycW):
        return b.word.bit_at(k)
    if isinstance(b, Pullback):
        return 1 if value_at(b.base, k) in b.aset else 0
    raise TypeError(f"not a binary-sequence code: {b!r}")


def binseq_eq(u, v, n_cmp=DEFAULT_N_CMP):
    """Pointwise equality of denoted binary sequences, where decidable.

    word/word: canonical forms identical (equivalently, agreement over the
    lcm of the two periods).  pullback/pullback: agreement over the grid
    k = e(i, j) for i < lcm(s, s') and j < lcm(p_i, p'_i), sufficient since
    the bit at e(i, j) depends only on (i mod s, j mod p_{i mod s}) on one
    side and (i mod s', j mod p'_{i mod s'}) on the other.  word/pullback
    equality is not known to be decidable: we search for a disagreement
    below ``n_cmp`` and raise IncomparableCodes rather than guess.
    """
    if isinstance(u, CycW) and isinstance(v, CycW):
        return u.word == v.word
    if isinstance(u, Pullback) and isinstance(v, Pullback):
        zu, zv = u.base.z.entries, v.base.z.entries
        s, s2 = len(zu), len(zv)
        for i in range(math.lcm(s, s2)):
            pi = len(zu[i % s].entries)
            pi2 = len(zv[i % s2].entries)
            for j in range(math.lcm(pi, pi2)):
                k = cantor_pair(i, j)
                if binseq_value_at(u, k) != binseq_value_at(v, k):
                    return False
        return True
    for k in range(n_cmp):
        if binseq_value_at(u, k) != binseq_value_at(v, k):
            return False
    raise IncomparableCodes(
        f"word/pullback comparison found no disagreement below {n_cmp}"
    )


@dataclass(frozen=True)
class YSeq:
    """Cyclic list of binary-sequence codes: y(n) = entries[n mod len]."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("YSeq needs at least one entry")
        for b in entries:
            if not isinstance(b, (CycW, Pullback)):
                raise TypeError(f"YSeq entries must be binary-sequence codes, got {b!r}")
        object.__setattr__(self, "entries", entries)


def iota(a, bit):
    """Injective pairing of an atom with a bit, realized by the Tag constructor."""
    return Tag(bit, a)


def atom_to_binseq(a):
    """Injective map from atoms to word codes.

    The atom's canonical text is spelled as 8-bit characters and framed
    self-delimitingly as 1^L 0 payload (L = payload length); the word is
    "1" + frame.  No framed string is a proper prefix of another (equal
    leading-one runs force equal payload lengths, hence equal total
    lengths), so if two such words were powers of a common primitive root
    the shorter would be a proper prefix of the longer; distinct atoms
    therefore denote distinct sequences.
    """
    from .serialize import atom_to_text

    payload = "".join(f"{ord(c):08b}" for c in atom_to_text(a))
    framed = "1" * len(payload) + "0" + payload
    return CycW(CyclicWord("1" + framed))


def atom_from_binseq(b, max_len=10**6):
    """Inverse of atom_to_binseq, reading the denoted sequence.

    Decoding works off the sequence rather than the stored word, since
    canonicalization may have shrunk the word to a primitive root.
    """
    from .serialize import parse_atom

    if binseq_value_at(b, 0) != 1:
        raise ValueError("not an encoded atom: missing leading marker")
    length = 0
    while binseq_value_at(b, 1 + length) == 1:
        length += 1
        if length > max_len:
            raise ValueError("not an encoded atom: unterminated length prefix")
    start = 2 + length
    bits = "".join(str(binseq_value_at(b, start + t)) for t in range(length))
    if length % 8:
        raise ValueError("not an encoded atom: ragged payload")
    text = "".join(chr(int(bits[i : i + 8], 2)) for i in range(0, length, 8))
    return parse_atom(text)
