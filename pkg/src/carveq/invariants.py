"""Canonical invariants classifying codes up to each relation, and
brute-force class counting over finite atom universes."""

import itertools
from dataclasses import dataclass

from .atoms import AtomSet, CyclicWord, Rational, atom_sort_key, primitive_root
from .codes import CycW, Cyclic, Pullback, pullback, range_set, YSeq
from .errors import ResourceLimit
from .relations import PPoint, carve


def atomset_sort_key(s):
    """Total order on atom sets: cardinality first, then elementwise atom
    order.  Any total order works for canonical storage; this one is cheap
    and stable."""
    return (len(s), tuple(atom_sort_key(a) for a in s))


@dataclass(frozen=True)
class SetOfAtomSets:
    """Canonical finite family of atom sets: sorted, duplicate-free storage,
    so family equality is structural equality."""

    elements: tuple

    def __post_init__(self):
        for s in self.elements:
            if not isinstance(s, AtomSet):
                raise TypeError(f"not an AtomSet: {s!r}")
        canon = tuple(sorted(set(self.elements), key=atomset_sort_key))
        object.__setattr__(self, "elements", canon)

    def __contains__(self, s):
        return s in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def f_invariant(x):
    """Complete invariant for range equality: the range set itself."""
    return range_set(x)


def e_invariant(p):
    """Complete invariant for carve-family equality, in canonical storage."""
    return SetOfAtomSets(tuple(carve(p, n) for n in range(len(p.y.entries))))


def fs2_invariant(z):
    """The family of row ranges of a row code, canonical."""
    return SetOfAtomSets(tuple(range_set(row) for row in z.entries))


def binseq_class_rep(entry):
    """Canonical representative of the sequence a binary code denotes.

    Words: ("word", primitive bits).  Pullbacks: ("pull", row carve words),
    each row's bit pattern reduced to its primitive root and the row-word
    list itself reduced as a cyclic word over the word alphabet; two
    pullbacks denote the same sequence iff these match, since the bit at
    e(i, j) is row i's pattern at j and rows repeat cyclically.  The two
    kinds never collide; cross-kind pairs are exactly the ones equality
    refuses to answer.
    """
    if isinstance(entry, CycW):
        return ("word", entry.word.bits)
    if isinstance(entry, Pullback):
        words = tuple(
            CyclicWord("".join("1" if a in entry.aset else "0" for a in row.entries)).bits
            for row in entry.base.z.entries
        )
        return ("pull", primitive_root(words))
    raise TypeError(f"not a binary-sequence code: {entry!r}")


def g_invariant(y):
    """Set of canonical entry representatives; complete for entry-class
    equality wherever that is decidable."""
    return frozenset(binseq_class_rep(e) for e in y.entries)


def closed_form(level, n):
    """Expected class counts over an n-atom universe: nonempty subsets for
    level F, nonempty families of nonempty subsets for level E."""
    if level == "F":
        return 2**n - 1
    if level == "E":
        return 2 ** (2**n - 1) - 1
    raise ValueError(f"unknown level {level!r}")


DEFAULT_ENUM_CAP = 2_000_000


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.spent = 0

    def spend(self, amount=1):
        self.spent += amount
        if self.spent > self.cap:
            raise ResourceLimit(f"enumeration exceeded the cap of {self.cap}")


def atom_universe(n):
    """The fixed n-atom universe used for counting: small positive rationals."""
    return tuple(Rational(i, 1) for i in range(1, n + 1))


def _all_cyclic_codes(universe, max_period, budget):
    for length in range(1, max_period + 1):
        for combo in itertools.product(universe, repeat=length):
            budget.spend()
            yield Cyclic(combo)


def count_classes(level, n, max_period=None, cap=DEFAULT_ENUM_CAP):
    """Brute-force class count over the n-atom universe.

    Level F enumerates every cyclic code with period <= max_period and
    deduplicates by range set.  Level E enumerates validated points and
    deduplicates by carve family; two documented prunings keep it honest
    and finite: entry order and multiplicity never change the family (set
    semantics), so families are enumerated as sets, and the reachable
    families depend on x only through range(x), so one sorted enumeration
    per nonempty range suffices.  The universe is fixed: maps that mint
    fresh atoms (tagging, word atoms) fall outside these counts, which
    illustrate growth under the jump rather than prove non-reducibility.
    Raises ResourceLimit past ``cap``.
    """
    if level not in ("F", "E"):
        raise ValueError(f"unknown level {level!r}")
    if n < 1:
        raise ValueError("universe size must be at least 1")
    if max_period is None:
        max_period = n
    if max_period < n:
        raise ValueError("max_period must be at least the universe size")

    universe = atom_universe(n)
    budget = _Budget(cap)

    if level == "F":
        seen = set()
        for code in _all_cyclic_codes(universe, max_period, budget):
            seen.add(f_invariant(code))
        return len(seen)

    seen = set()
    for r in range(1, n + 1):
        for base_atoms in itertools.combinations(universe, r):
            x = Cyclic(base_atoms)
            subsets = [
                AtomSet(sub)
                for size in range(1, r + 1)
                for sub in itertools.combinations(base_atoms, size)
            ]
            for mask in range(1, 2 ** len(subsets)):
                budget.spend()
                family = [subsets[i] for i in range(len(subsets)) if mask >> i & 1]
                covered = AtomSet(())
                for aset in family:
                    covered = covered.union(aset)
                if len(covered) != r:
                    continue
                y = YSeq(tuple(pullback(x, aset) for aset in family))
                seen.add(e_invariant(PPoint(x, y)))
    return len(seen)
