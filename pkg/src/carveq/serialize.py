"""Canonical textual serialization of codes.

Grammar (whitespace-insensitive between tokens):

    atom   := "(rat " int " " posint ")" | "(tag " bit " " atom ")" | "(word " bits ")"
    aseq   := "(cyc" {" " atom}+ ")" | "(pairmerge " zcode ")"
    binseq := "(cw " bits ")" | "(pull " aseq " (set" {" " atom}* "))"
    yseq   := "(ylist" {" " binseq}+ ")"
    zcode  := "(zlist" {" " "(cyc" {" " atom}+ ")"}+ ")"
    ppoint := "(p " aseq " " yseq ")"

The printer emits canonical forms (single spaces, lowest terms, primitive
words, normalized pullbacks); the parser builds values through the normal
constructors, so print . parse is idempotent and parse . print is the
identity on canonical values.
"""

import re

from .atoms import AtomSet, Rational, Tag, WordAtom
from .codes import CycW, Cyclic, PairMerge, Pullback, YSeq, ZCode, pullback
from .errors import ParseError

_INT_RE = re.compile(r"-?\d+\Z")
_POSINT_RE = re.compile(r"\d+\Z")
_BITS_RE = re.compile(r"[01]+\Z")


def atom_to_text(a):
    if isinstance(a, Rational):
        return f"(rat {a.num} {a.den})"
    if isinstance(a, Tag):
        return f"(tag {a.bit} {atom_to_text(a.inner)})"
    if isinstance(a, WordAtom):
        return f"(word {a.word.bits})"
    raise TypeError(f"not an atom: {a!r}")


def aseq_to_text(x):
    if isinstance(x, Cyclic):
        return "(cyc " + " ".join(atom_to_text(a) for a in x.entries) + ")"
    if isinstance(x, PairMerge):
        return f"(pairmerge {zcode_to_text(x.z)})"
    raise TypeError(f"not an atom-sequence code: {x!r}")


def binseq_to_text(b):
    if isinstance(b, CycW):
        return f"(cw {b.word.bits})"
    if isinstance(b, Pullback):
        inner = " ".join(atom_to_text(a) for a in b.aset)
        joint = f" {inner}" if inner else ""
        return f"(pull {aseq_to_text(b.base)} (set{joint}))"
    raise TypeError(f"not a binary-sequence code: {b!r}")


def yseq_to_text(y):
    return "(ylist " + " ".join(binseq_to_text(b) for b in y.entries) + ")"


def zcode_to_text(z):
    return "(zlist " + " ".join(aseq_to_text(row) for row in z.entries) + ")"


def ppoint_to_text(p):
    return f"(p {aseq_to_text(p.x)} {yseq_to_text(p.y)})"


def to_text(value):
    """Serialize any value of the algebra, dispatching on its type."""
    from .relations import PPoint

    if isinstance(value, (Rational, Tag, WordAtom)):
        return atom_to_text(value)
    if isinstance(value, (Cyclic, PairMerge)):
        return aseq_to_text(value)
    if isinstance(value, (CycW, Pullback)):
        return binseq_to_text(value)
    if isinstance(value, YSeq):
        return yseq_to_text(value)
    if isinstance(value, ZCode):
        return zcode_to_text(value)
    if isinstance(value, PPoint):
        return ppoint_to_text(value)
    raise TypeError(f"not serializable: {value!r}")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()":
            tokens.append((c, i))
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in "()":
            j += 1
        tokens.append((text[i:j], i))
        i = j
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def error(self, message):
        at = self.tokens[self.pos][1] if self.pos < len(self.tokens) else len(self.text)
        raise ParseError(message, at)

    def peek(self):
        if self.pos >= len(self.tokens):
            self.error("unexpected end of input")
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        if self.peek() != tok:
            self.error(f"expected {tok!r}, found {self.peek()!r}")
        return self.next()

    def head(self):
        """Consume '(' and return the keyword after it (not consumed)."""
        self.expect("(")
        kw = self.peek()
        if kw in "()":
            self.error("expected a keyword after '('")
        return kw

    def done(self):
        if self.pos != len(self.tokens):
            self.error("trailing input after complete form")

    def int_token(self):
        tok = self.next()
        if not _INT_RE.match(tok):
            self.pos -= 1
            self.error(f"expected an integer, found {tok!r}")
        return int(tok)

    def posint_token(self):
        tok = self.next()
        if not _POSINT_RE.match(tok) or int(tok) == 0:
            self.pos -= 1
            self.error(f"expected a positive integer, found {tok!r}")
        return int(tok)

    def bit_token(self):
        tok = self.next()
        if tok not in ("0", "1"):
            self.pos -= 1
            self.error(f"expected a bit, found {tok!r}")
        return int(tok)

    def bits_token(self):
        tok = self.next()
        if not _BITS_RE.match(tok):
            self.pos -= 1
            self.error(f"expected a 0/1 string, found {tok!r}")
        return tok

    def atom(self):
        kw = self.head()
        if kw == "rat":
            self.next()
            num = self.int_token()
            den = self.posint_token()
            self.expect(")")
            return Rational(num, den)
        if kw == "tag":
            self.next()
            bit = self.bit_token()
            inner = self.atom()
            self.expect(")")
            return Tag(bit, inner)
        if kw == "word":
            self.next()
            bits = self.bits_token()
            self.expect(")")
            return WordAtom(bits)
        self.error(f"expected an atom keyword, found {kw!r}")

    def _cyc(self):
        kw = self.head()
        if kw != "cyc":
            self.error(f"expected 'cyc', found {kw!r}")
        self.next()
        entries = []
        while self.peek() != ")":
            entries.append(self.atom())
        if not entries:
            self.error("cyc needs at least one atom")
        self.expect(")")
        return Cyclic(tuple(entries))

    def aseq(self):
        kw = self.head()
        if kw == "cyc":
            self.pos -= 1
            return self._cyc()
        if kw == "pairmerge":
            self.next()
            z = self.zcode()
            self.expect(")")
            return PairMerge(z)
        self.error(f"expected an atom-sequence keyword, found {kw!r}")

    def binseq(self):
        kw = self.head()
        if kw == "cw":
            self.next()
            bits = self.bits_token()
            self.expect(")")
            return CycW(bits)
        if kw == "pull":
            self.next()
            base = self.aseq()
            skw = self.head()
            if skw != "set":
                self.error(f"expected 'set', found {skw!r}")
            self.next()
            atoms = []
            while self.peek() != ")":
                atoms.append(self.atom())
            self.expect(")")
            self.expect(")")
            return pullback(base, AtomSet(tuple(atoms)))
        self.error(f"expected a binary-sequence keyword, found {kw!r}")

    def yseq(self):
        kw = self.head()
        if kw != "ylist":
            self.error(f"expected 'ylist', found {kw!r}")
        self.next()
        entries = []
        while self.peek() != ")":
            entries.append(self.binseq())
        if not entries:
            self.error("ylist needs at least one entry")
        self.expect(")")
        return YSeq(tuple(entries))

    def zcode(self):
        kw = self.head()
        if kw != "zlist":
            self.error(f"expected 'zlist', found {kw!r}")
        self.next()
        rows = []
        while self.peek() != ")":
            rows.append(self._cyc())
        if not rows:
            self.error("zlist needs at least one row")
        self.expect(")")
        return ZCode(tuple(rows))

    def ppoint(self):
        from .relations import PPoint

        kw = self.head()
        if kw != "p":
            self.error(f"expected 'p', found {kw!r}")
        self.next()
        x = self.aseq()
        y = self.yseq()
        self.expect(")")
        return PPoint(x, y)

    def any(self):
        kw = self.head()
        self.pos -= 1
        if kw in ("rat", "tag", "word"):
            return self.atom()
        if kw in ("cyc", "pairmerge"):
            return self.aseq()
        if kw in ("cw", "pull"):
            return self.binseq()
        if kw == "ylist":
            return self.yseq()
        if kw == "zlist":
            return self.zcode()
        if kw == "p":
            return self.ppoint()
        self.pos += 1
        self.error(f"unknown form keyword {kw!r}")


def _run(text, method):
    p = _Parser(text)
    value = method(p)
    p.done()
    return value


def parse_atom(text):
    return _run(text, _Parser.atom)


def parse_aseq(text):
    return _run(text, _Parser.aseq)


def parse_binseq(text):
    return _run(text, _Parser.binseq)


def parse_yseq(text):
    return _run(text, _Parser.yseq)


def parse_zcode(text):
    return _run(text, _Parser.zcode)


def parse_ppoint(text):
    return _run(text, _Parser.ppoint)


def parse_any(text):
    """Parse any form of the grammar, dispatching on the leading keyword."""
    return _run(text, _Parser.any)
