import pytest

from carveq import (
    AtomSet,
    ClauseViolation,
    CycW,
    Cyclic,
    FuzzConfig,
    ParseError,
    PairMerge,
    Rational,
    Tag,
    WordAtom,
    ZCode,
    parse_any,
    parse_aseq,
    parse_atom,
    parse_binseq,
    parse_ppoint,
    pullback,
    stream,
    to_text,
)
from carveq.generators import gen_serial_value

from helpers import R1, R2

# strings the printer would never emit, plus canonical ones
VECTORS = [
    "(rat 1 2)",
    "(rat 2 4)",
    "(rat -6 4)",
    "(rat 0 5)",
    "(tag 1 (rat -3 6))",
    "(word 10)",
    "(word 0101)",
    "(cw 1010)",
    "(cw 1)",
    "(cyc (rat 1 2))",
    "(cyc (rat 1 1) (rat 1 1) (rat 2 1))",
    "(pairmerge (zlist (cyc (rat 1 1)) (cyc (rat 2 1) (rat 1 1))))",
    "(pull (cyc (rat 1 1) (rat 2 1)) (set (rat 1 1)))",
    "(pull (cyc (rat 1 1)) (set))",
    "(pull (pairmerge (zlist (cyc (rat 1 1)) (cyc (rat 2 1)))) (set (rat 1 1)))",
    "(ylist (cw 10) (cw 01))",
    "(zlist (cyc (rat 1 1)) (cyc (rat 2 1) (rat 2 1)))",
    "(p (cyc (rat 1 1) (rat 2 1)) (ylist (cw 10) (cw 01)))",
    "  ( cw\t 10 )  ",
    "(tag 0 (tag 1 (word 11)))",
]


def test_known_canonicalizations():
    assert to_text(parse_any("(cw 1010)")) == "(cw 10)"
    assert to_text(parse_any("(cyc (rat 1 2))")) == "(cyc (rat 1 2))"
    assert to_text(parse_any("(rat 2 4)")) == "(rat 1 2)"
    assert to_text(parse_any("(word 0101)")) == "(word 01)"
    # pullback over a cyclic base normalizes to a word
    assert to_text(parse_any("(pull (cyc (rat 1 1) (rat 2 1)) (set (rat 1 1)))")) == "(cw 10)"
    assert to_text(parse_any("(pull (cyc (rat 1 1)) (set))")) == "(cw 0)"


@pytest.mark.parametrize("vector", VECTORS)
def test_print_parse_idempotent(vector):
    once = to_text(parse_any(vector))
    assert to_text(parse_any(once)) == once


def test_parse_print_identity_on_random_codes():
    cfg = FuzzConfig(cases=0, max_period=4, max_entries=3, atom_universe=3)
    for i in range(1200):
        rng = stream(31, i)
        value = gen_serial_value(rng, cfg)
        assert parse_any(to_text(value)) == value


def test_whitespace_insensitive():
    assert parse_any(" (  cyc (rat   1 2) ) ") == Cyclic((Rational(1, 2),))
    assert parse_any("(p(cyc(rat 1 1))(ylist(cw 1)))") is not None


def test_typed_entry_points():
    assert parse_atom("(tag 0 (rat 1 1))") == Tag(0, Rational(1, 1))
    assert parse_aseq("(cyc (word 10))") == Cyclic((WordAtom("10"),))
    assert parse_binseq("(cw 01)") == CycW("01")
    p = parse_ppoint("(p (cyc (rat 1 1)) (ylist (cw 1)))")
    assert p.x == Cyclic((R1,))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_any("(cw )")
    assert err.value.position == 4

    with pytest.raises(ParseError):
        parse_any("(cw 10")
    with pytest.raises(ParseError):
        parse_any("(unknown 1)")
    with pytest.raises(ParseError):
        parse_any("(rat 1 0)")
    with pytest.raises(ParseError):
        parse_any("(rat x 1)")
    with pytest.raises(ParseError) as err:
        parse_any("(cw 10) junk")
    assert err.value.position == 8
    with pytest.raises(ParseError):
        parse_any("")
    with pytest.raises(ParseError):
        parse_any("(cyc)")


def test_parse_ppoint_validates():
    with pytest.raises(ClauseViolation) as err:
        parse_ppoint("(p (cyc (rat 1 1) (rat 1 1)) (ylist (cw 10)))")
    assert err.value.clause == 3


def test_printer_emits_canonical_pullback():
    z = ZCode((Cyclic((R1,)), Cyclic((R2,))))
    pb = pullback(PairMerge(z), AtomSet.of(R1))
    text = to_text(pb)
    assert text == "(pull (pairmerge (zlist (cyc (rat 1 1)) (cyc (rat 2 1)))) (set (rat 1 1)))"
    assert parse_any(text) == pb
