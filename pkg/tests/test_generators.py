import pytest

from carveq import (
    Cyclic,
    FuzzConfig,
    PairMerge,
    SplitMix64,
    p_membership,
    rel_E,
    stream,
    to_text,
)
from carveq.invariants import SetOfAtomSets, e_invariant
from carveq.generators import (
    gen_covering_family,
    gen_infiber_pair,
    gen_ppoint,
    gen_subset,
    realize_ppoint,
)


def test_splitmix_reference_values():
    # published SplitMix64 stream for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_streams_are_deterministic_and_independent():
    a = [stream(42, i).next_u64() for i in range(5)]
    b = [stream(42, i).next_u64() for i in range(5)]
    c = [stream(43, i).next_u64() for i in range(5)]
    assert a == b
    assert a != c
    assert len(set(a)) == 5


def test_fuzz_config_validation():
    assert FuzzConfig(cases=0).cases == 0
    with pytest.raises(ValueError):
        FuzzConfig(cases=-1)
    for field in ("atom_universe", "max_period", "max_entries", "n_cmp"):
        with pytest.raises(ValueError):
            FuzzConfig(**{field: 0})


def test_generated_points_are_valid_and_match_family():
    cfg = FuzzConfig(cases=0)
    cyclic_seen = pairmerge_seen = 0
    for i in range(400):
        rng = stream(301, i)
        p, family = gen_ppoint(rng, cfg)
        assert p_membership(p.x, p.y) == p
        assert e_invariant(p) == SetOfAtomSets(tuple(family))
        cyclic_seen += isinstance(p.x, Cyclic)
        pairmerge_seen += isinstance(p.x, PairMerge)
    assert cyclic_seen > 50 and pairmerge_seen > 50


def test_covering_family_covers():
    cfg = FuzzConfig(cases=0)
    for i in range(300):
        rng = stream(303, i)
        base = gen_subset(rng, cfg.universe())
        family = gen_covering_family(rng, base, cfg.max_entries)
        union = set()
        for aset in family:
            union |= set(aset)
        assert union == set(base)
        assert all(len(aset) for aset in family)


def test_infiber_pairs_cover_both_outcomes():
    cfg = FuzzConfig(cases=0)
    related = unrelated = 0
    for i in range(1000):
        rng = stream(307, i)
        p, q, known = gen_infiber_pair(rng, cfg)
        assert rel_E(p, q) == known
        related += known
        unrelated += not known
    print(f"\nin-fiber pair coverage: related={related} unrelated={unrelated} of 1000")
    assert related > 100 and unrelated > 100


def test_generation_is_reproducible():
    cfg = FuzzConfig(cases=0)
    first = [to_text(gen_ppoint(stream(5, i), cfg)[0]) for i in range(40)]
    second = [to_text(gen_ppoint(stream(5, i), cfg)[0]) for i in range(40)]
    assert first == second


def test_realize_ppoint_preserves_intended_family():
    cfg = FuzzConfig(cases=0)
    for i in range(200):
        rng = stream(311, i)
        base = gen_subset(rng, cfg.universe())
        family = gen_covering_family(rng, base, cfg.max_entries)
        p = realize_ppoint(rng, base, family, cfg)
        assert e_invariant(p) == SetOfAtomSets(tuple(family))
