"""Shared atoms and independent oracle routines for the test suite.

Oracles here deliberately avoid the library's decision paths: they scan,
enumerate, or use Python's native set machinery, so agreement with the
library is evidence rather than tautology.
"""

import itertools

from carveq import (
    AtomSet,
    Cyclic,
    PPoint,
    Rational,
    YSeq,
    binseq_value_at,
    pullback,
    value_at,
)

R1, R2, R3, R4, R5, R6 = (Rational(i, 1) for i in range(1, 7))
UNIVERSE3 = (R1, R2, R3)


def agree_below(u, v, bound):
    """Pointwise agreement of two binary-sequence codes below ``bound``."""
    return all(binseq_value_at(u, k) == binseq_value_at(v, k) for k in range(bound))


def forall_exists(left, right, rel):
    """The mutual matching condition, straight from the definition."""
    return all(any(rel(a, b) for b in right) for a in left) and all(
        any(rel(b, a) for a in left) for b in right
    )


def partition_classes(items, rel):
    """Brute-force partition of ``items`` into classes of ``rel`` (first fit)."""
    classes = []
    for item in items:
        for cls in classes:
            if rel(cls[0], item):
                cls.append(item)
                break
        else:
            classes.append([item])
    return classes


def naive_carve(x, entry):
    """Carve oracle for a word entry over a cyclic x: plain scan over the
    product of the two periods (a common multiple), native frozenset."""
    span = len(x.entries) * len(entry.word.bits)
    return frozenset(
        x.entries[m % len(x.entries)] for m in range(span) if entry.word.bit_at(m)
    )


def naive_clause3_ok(x, y, span):
    """Clause-(3) oracle: scan every index pair below ``span``."""
    for entry in y.entries:
        for l1 in range(span):
            for l2 in range(span):
                if value_at(x, l1) == value_at(x, l2):
                    if binseq_value_at(entry, l1) != binseq_value_at(entry, l2):
                        return False
    return True


def enumerate_points(universe, max_period):
    """Every validated point realizable with cyclic first coordinates over
    the universe: all cyclic codes up to the period bound, crossed with all
    covering families over each code's range."""
    points = []
    for length in range(1, max_period + 1):
        for combo in itertools.product(universe, repeat=length):
            x = Cyclic(combo)
            rng = sorted(set(combo), key=lambda a: (a.num, a.den))
            subs = [
                tuple(sub)
                for size in range(1, len(rng) + 1)
                for sub in itertools.combinations(rng, size)
            ]
            for mask in range(1, 2 ** len(subs)):
                family = [subs[i] for i in range(len(subs)) if mask >> i & 1]
                if set().union(*(set(s) for s in family)) != set(rng):
                    continue
                y = YSeq(tuple(pullback(x, AtomSet(s)) for s in family))
                points.append(PPoint(x, y))
    return points


def partition_indexes(items, key):
    """Partition of item indexes by a key function, as a set of frozensets."""
    groups = {}
    for i, item in enumerate(items):
        groups.setdefault(key(item), []).append(i)
    return frozenset(frozenset(g) for g in groups.values())
