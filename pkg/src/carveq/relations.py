"""Equivalence relations on codes.

Base equalities, the jump operator, products, range equality, the carving
of subsets out of an enumerated set, and the validated membership set for
pairs (x, y).  Quantifiers over N are replaced by finite bounds whose
sufficiency is argued next to each use; decisions are pure and total on
the closed code algebra.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .atoms import AtomSet, atom_eq
from .codes import (
    DEFAULT_N_CMP,
    CycW,
    Cyclic,
    PairMerge,
    Pullback,
    YSeq,
    binseq_eq,
    range_set,
    saturation_bound,
    value_at,
)
from .errors import ClauseViolation, DomainViolation, IncomparableCodes, StructuralMismatch


@dataclass(frozen=True)
class EqRelHandle:
    """A named decidable equivalence relation, with an optional domain predicate."""

    name: str
    decide: Callable
    member: Optional[Callable] = None

    def relates(self, a, b):
        if self.member is not None:
            for v in (a, b):
                if not self.member(v):
                    raise DomainViolation(f"{v!r} is outside the domain of {self.name}")
        return self.decide(a, b)


ATOM_EQ = EqRelHandle("eq", atom_eq)


def jump(e):
    """The jump of a relation: sequence codes are related iff their entries
    hit the same set of classes of ``e``.

    The defining condition quantifies entry indices over all of N; entries
    repeat cyclically, so ranging over the finite entry lists is sound and
    complete.  Operands are any cyclic entry-list codes over e's domain.
    """

    def decide(u, v):
        return all(any(e.decide(a, b) for b in v.entries) for a in u.entries) and all(
            any(e.decide(b, a) for a in u.entries) for b in v.entries
        )

    return EqRelHandle(name=e.name + "+", decide=decide)


def product(e1, e2):
    """Pointwise relation on pairs: both coordinates must relate."""

    def decide(p, q):
        return e1.decide(p[0], q[0]) and e2.decide(p[1], q[1])

    return EqRelHandle(name=f"{e1.name}x{e2.name}", decide=decide)


def rel_F(x, x2):
    """Two atom-sequence codes relate iff they enumerate the same set.

    Decided through range-set invariants; equivalent to the mutual
    forall/exists matching of values, and cheaper.
    """
    return range_set(x) == range_set(x2)


F_REL = EqRelHandle("F", rel_F)


def _exists_match(entry, others, n_cmp):
    unknown = False
    for o in others:
        try:
            if binseq_eq(entry, o, n_cmp):
                return True
        except IncomparableCodes:
            unknown = True
    if unknown:
        raise IncomparableCodes(
            "an entry's match could not be decided against the other side"
        )
    return False


def rel_G(y, y2, n_cmp=DEFAULT_N_CMP):
    """Jump of binary-sequence equality on entry lists.

    Returns True only with definite witnesses for every entry, False only
    when some entry is definitely unmatched; raises IncomparableCodes when
    the verdict would otherwise rest on an undecided comparison.
    """
    return all(_exists_match(e, y2.entries, n_cmp) for e in y.entries) and all(
        _exists_match(e, y.entries, n_cmp) for e in y2.entries
    )


def g_handle(n_cmp=DEFAULT_N_CMP):
    return EqRelHandle("G", lambda y, y2: rel_G(y, y2, n_cmp))


def carve_pair(x, entry):
    """Subset of range(x) carved out by one binary-sequence entry.

    Word entry over a cyclic x: scan positions below lcm(period(x),
    period(word)); both m -> x(m) and the bit at m are periodic with that
    modulus, so the scan is exhaustive.  Constant words carve everything or
    nothing over any base.  A pullback entry must sit over this very x; its
    stored set (already clipped to the base range) is the carve.
    """
    if isinstance(entry, Pullback):
        if entry.base != x:
            raise StructuralMismatch("pullback entry over a different base")
        return entry.aset
    if not isinstance(entry, CycW):
        raise TypeError(f"not a binary-sequence code: {entry!r}")
    if entry.word.is_constant():
        return range_set(x) if entry.word.bits == "1" else AtomSet(())
    if not isinstance(x, Cyclic):
        raise StructuralMismatch("non-constant word entry over a pair-merge base")
    span = math.lcm(len(x.entries), len(entry.word))
    return AtomSet(
        tuple(x.entries[m % len(x.entries)] for m in range(span) if entry.word.bit_at(m))
    )


def _validate_membership(x, y):
    if not isinstance(x, (Cyclic, PairMerge)):
        raise TypeError(f"not an atom-sequence code: {x!r}")
    if not isinstance(y, YSeq):
        raise TypeError(f"not a YSeq: {y!r}")

    for k, entry in enumerate(y.entries):
        if isinstance(entry, Pullback):
            if entry.base != x:
                raise StructuralMismatch(f"entry {k} pulls back over a different base")
        elif isinstance(x, PairMerge) and not entry.word.is_constant():
            raise StructuralMismatch(f"entry {k}: non-constant word over a pair-merge base")

    # Clause (3): equal values of x force equal bits at those positions.
    # Pullback entries satisfy it structurally (the bit is a function of the
    # value); constant words trivially; for a word entry over a cyclic x both
    # sides are periodic with lcm(period(x), period(word)), so positions below
    # that modulus exhaust all cases.
    for k, entry in enumerate(y.entries):
        if not isinstance(entry, CycW) or entry.word.is_constant():
            continue
        if isinstance(x, Cyclic):
            span = math.lcm(len(x.entries), len(entry.word))
            first_seen = {}
            for pos in range(span):
                val = x.entries[pos % len(x.entries)]
                bit = entry.word.bit_at(pos)
                if val in first_seen:
                    at, b0 = first_seen[val]
                    if b0 != bit:
                        raise ClauseViolation(3, (k, at, pos))
                else:
                    first_seen[val] = (pos, bit)

    # Clause (2): every carved set is nonempty.
    carves = []
    for k, entry in enumerate(y.entries):
        aset = carve_pair(x, entry)
        if len(aset) == 0:
            raise ClauseViolation(2, (k,))
        carves.append(aset)

    # Clause (1): every enumerated value is carved by some entry.
    covered = AtomSet(())
    for aset in carves:
        covered = covered.union(aset)
    for m in range(saturation_bound(x)):
        if value_at(x, m) not in covered:
            raise ClauseViolation(1, (m,))


@dataclass(frozen=True)
class PPoint:
    """A pair (x, y) validated at construction against the three membership
    clauses, with y read entrywise as characteristic functions carving
    subsets out of the set enumerated by x.

    Construction is the only gate: a PPoint in hand is always valid, so
    relation decisions downstream have vacuous preconditions.
    """

    x: object
    y: YSeq

    def __post_init__(self):
        _validate_membership(self.x, self.y)


def p_membership(x, y):
    """Validate the three clauses and return the point, or raise
    ClauseViolation / StructuralMismatch with a witness."""
    return PPoint(x, y)


def carve(p, n):
    """The n-th carved subset; indices beyond the entry list reduce mod its
    length, matching the cyclic completion of y."""
    entries = p.y.entries
    return carve_pair(p.x, entries[n % len(entries)])


def carve_family(p):
    """All carved subsets of a point, as a hashable set of sets."""
    return frozenset(carve(p, n) for n in range(len(p.y.entries)))


def rel_E(p, q):
    """Two points relate iff they carve the same family of subsets."""
    return carve_family(p) == carve_family(q)


E_REL = EqRelHandle("E", rel_E)


def restrict_to_fiber(x0):
    """The relation E restricted to points whose first coordinate enumerates
    the same set as ``x0``."""
    from .serialize import aseq_to_text

    def member(p):
        return isinstance(p, PPoint) and rel_F(p.x, x0)

    return EqRelHandle(name=f"E|{aseq_to_text(x0)}", decide=rel_E, member=member)
