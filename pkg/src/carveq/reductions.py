"""Executable reductions between the relation layers, a sampling verifier,
and the assembled reducibility-chain report.

A reduction is a map f with: points relate iff their images relate.  That
equivalence is never assumed here; check_reduction evaluates both verdicts
on supplied pairs and reports every disagreement.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Callable

from .atoms import CyclicWord, WordAtom
from .codes import (
    CycW,
    Cyclic,
    YSeq,
    ZCode,
    binseq_value_at,
    iota,
    range_set,
    saturation_bound,
    value_at,
)
from .errors import CarveqError, DomainViolation, IncomparableCodes, NoWitness, StructuralMismatch, TypeMismatch
from .relations import ATOM_EQ, E_REL, F_REL, EqRelHandle, PPoint, g_handle, jump, product, rel_F


@dataclass(frozen=True)
class ReductionRecord:
    """A named map between relation handles; correctness is a tested
    property, never an assumption."""

    name: str
    source: EqRelHandle
    target: EqRelHandle
    map: Callable


def identity_reduction(e):
    return ReductionRecord(name=f"id[{e.name}]", source=e, target=e, map=lambda v: v)


def compose(r1, r2):
    """Composition r2 . r1; endpoints must line up by name."""
    if r1.target.name != r2.source.name:
        raise TypeMismatch(f"cannot compose: {r1.name} targets {r1.target.name}, {r2.name} expects {r2.source.name}")
    return ReductionRecord(
        name=f"{r1.name}>>{r2.name}",
        source=r1.source,
        target=r2.target,
        map=lambda v: r2.map(r1.map(v)),
    )


def canonical_basepoint(aset):
    """Sorted cyclic enumeration of an atom set: the canonical representative
    of its range class."""
    if len(aset) == 0:
        raise ValueError("a basepoint needs a nonempty range")
    return Cyclic(aset.elements)


def fiber_reduction(x0):
    """Reduction of E restricted to the fiber of ``x0`` into the jump of
    binary-sequence equality.

    Output entry n is a word of one x0-period: bit k is y(n) at any witness
    index k' with x(k') = x0(k).  A witness below saturation_bound(x) exists
    because the fiber condition forces range(x) to cover every x0(k), and
    clause (3) makes every witness give the same bit, so the first is taken.
    """
    if not isinstance(x0, Cyclic):
        raise StructuralMismatch("fiber basepoints must be cyclic codes")
    from .relations import restrict_to_fiber

    def fmap(p):
        if not isinstance(p, PPoint) or not rel_F(p.x, x0):
            raise DomainViolation("point outside the fiber of the basepoint")
        bound = saturation_bound(p.x)
        out = []
        for entry in p.y.entries:
            bits = []
            for k in range(len(x0.entries)):
                target = x0.entries[k]
                for kp in range(bound):
                    if value_at(p.x, kp) == target:
                        bits.append("1" if binseq_value_at(entry, kp) else "0")
                        break
                else:
                    raise NoWitness(f"no index of x takes the value x0({k})")
            out.append(CycW(CyclicWord("".join(bits))))
        return YSeq(tuple(out))

    from .serialize import aseq_to_text

    return ReductionRecord(
        name=f"fiber[{aseq_to_text(x0)}]",
        source=restrict_to_fiber(x0),
        target=g_handle(),
        map=fmap,
    )


def embed_fs2(z):
    """Embed a row code as a validated point: the pair-merge of z enumerates
    every value of every row, and entry n pulls back the range of row n.

    Validation cannot fail: pullbacks (and the constant words they normalize
    to) satisfy clause (3) structurally, rows are nonempty so every carve is
    nonempty, and the row ranges cover the merged range.
    """
    if not isinstance(z, ZCode):
        raise TypeError(f"not a ZCode: {z!r}")
    from .codes import PairMerge, pullback

    x = PairMerge(z)
    y = YSeq(tuple(pullback(x, range_set(row)) for row in z.entries))
    return PPoint(x, y)


def embed_fs2_record():
    return ReductionRecord(
        name="fs2_to_e", source=jump(jump(ATOM_EQ)), target=E_REL, map=embed_fs2
    )


def pair_interleave(x, y):
    """Merge a pair of cyclic codes into one: even slots take the 0-tagged
    values of x, odd slots the 1-tagged values of y.

    One lcm of the two periods suffices; beyond it both coordinates repeat,
    so the cyclic completion of the output matches the full interleaving.
    """
    if not (isinstance(x, Cyclic) and isinstance(y, Cyclic)):
        raise StructuralMismatch("pair_interleave needs two cyclic codes")
    span = math.lcm(len(x.entries), len(y.entries))
    out = []
    for n in range(span):
        out.append(iota(x.entries[n % len(x.entries)], 0))
        out.append(iota(y.entries[n % len(y.entries)], 1))
    return Cyclic(tuple(out))


def interleave_record():
    return ReductionRecord(
        name="fxf_to_f",
        source=product(F_REL, F_REL),
        target=F_REL,
        map=lambda xy: pair_interleave(xy[0], xy[1]),
    )


def g_to_f(y):
    """Map a sequence of word entries to the cyclic code of their word atoms;
    class sets of entries become range sets of atoms."""
    atoms = []
    for k, entry in enumerate(y.entries):
        if not isinstance(entry, CycW):
            raise IncomparableCodes(f"entry {k} is a proper pullback with no word form")
        atoms.append(WordAtom(entry.word))
    return Cyclic(tuple(atoms))


def gxf_record(n_cmp=None):
    from .codes import DEFAULT_N_CMP

    g = g_handle(n_cmp if n_cmp is not None else DEFAULT_N_CMP)
    return ReductionRecord(
        name="fxg_to_fxf",
        source=product(F_REL, g),
        target=product(F_REL, F_REL),
        map=lambda xy: (xy[0], g_to_f(xy[1])),
    )


def const_jump_embedding(e, wrap=Cyclic):
    """Points map to one-entry sequences; the class set of a singleton list
    is the singleton of the point's class, so the jump relates images exactly
    when the points relate.  ``wrap`` picks the sequence type of the image
    (Cyclic for atoms, ZCode for cyclic codes)."""
    return ReductionRecord(
        name=f"const[{e.name}]", source=e, target=jump(e), map=lambda v: wrap((v,))
    )


def _describe(value):
    from .serialize import to_text

    try:
        return to_text(value)
    except TypeError:
        return repr(value)


@dataclass
class Violation:
    index: int
    detail: str
    source_verdict: object
    target_verdict: object

    def to_machine(self):
        return {
            "index": self.index,
            "detail": self.detail,
            "source_verdict": self.source_verdict,
            "target_verdict": self.target_verdict,
        }


@dataclass
class VerificationReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self):
        return "pass" if not self.violations else "fail"

    def to_text(self):
        lines = [f"{self.name}: {self.status}  checked={self.checked}  violations={len(self.violations)}"]
        for v in self.violations:
            lines.append(
                f"  violation #{v.index}: source={v.source_verdict} target={v.target_verdict}  {v.detail}"
            )
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)

    def to_machine(self):
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": [v.to_machine() for v in self.violations],
            "status": self.status,
            "notes": list(self.notes),
        }


def check_reduction(record, pairs):
    """Evaluate the defining equivalence on every supplied pair.

    Each disagreement (or per-pair domain error) is recorded with both
    verdicts; an empty violation list is a pass.
    """
    report = VerificationReport(name=record.name)
    for idx, (a, b) in enumerate(pairs):
        report.checked += 1
        try:
            src = record.source.relates(a, b)
            fa, fb = record.map(a), record.map(b)
            tgt = record.target.relates(fa, fb)
        except CarveqError as err:
            report.violations.append(
                Violation(idx, f"{type(err).__name__}: {err}", "error", "error")
            )
            continue
        if src != tgt:
            report.violations.append(
                Violation(
                    idx,
                    f"pair {_describe(a)} | {_describe(b)}",
                    src,
                    tgt,
                )
            )
    return report


@dataclass
class LinkResult:
    name: str
    status: str
    checked: int = 0
    violations: list = field(default_factory=list)

    def to_machine(self):
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": [v.to_machine() for v in self.violations],
            "status": self.status,
        }


@dataclass
class ChainReport:
    seed: int
    cases: int
    links: list = field(default_factory=list)
    growth: list = field(default_factory=list)

    @property
    def status(self):
        implemented = [l for l in self.links if l.status != "hypothetical"]
        if all(l.status == "verified" for l in implemented):
            return "counterexample structure verified"
        return "violations found"

    def to_text(self):
        lines = [f"chain report  seed={self.seed} cases={self.cases}"]
        for link in self.links:
            if link.status == "hypothetical":
                lines.append(f"  [conj] {link.name:<12} hypothetical: conjectured link, never verified")
            else:
                mark = "ok" if link.status == "verified" else "XX"
                lines.append(
                    f"  [{mark}]   {link.name:<12} checked={link.checked}  violations={len(link.violations)}"
                )
        lines.append("class-count growth (brute-force, per universe size):")
        lines.append("  level n count closed-form match")
        for level, n, count, closed, match in self.growth:
            lines.append(f"  {level} {n} {count} {closed} {'yes' if match else 'NO'}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)

    def to_machine(self):
        return {
            "seed": self.seed,
            "cases": self.cases,
            "links": [l.to_machine() for l in self.links],
            "growth": [
                {"level": lv, "n": n, "count": c, "closed_form": cf, "match": m}
                for lv, n, c, cf, m in self.growth
            ],
            "status": self.status,
        }

    def to_json(self):
        return json.dumps(self.to_machine(), sort_keys=True)


def _constant_corruption(record, pairs):
    """Test hook: replace the map by a constant map to the image of the first
    pair's first point, which any source-unrelated sampled pair exposes."""
    if not pairs:
        return record
    fixed = record.map(pairs[0][0])
    return ReductionRecord(
        name=record.name, source=record.source, target=record.target, map=lambda v: fixed
    )


def chain_report(cfg, corrupt=None):
    """Verify every implemented chain link on seeded samples.

    Links, in chain order: the second-jump embedding into E; the conjectured
    link from E into the product (typed, never verified); folding the second
    product coordinate from word-class sequences into atom sequences; and the
    interleaving of a product into a single sequence.  The class-count growth
    table for universe sizes 1..3 is attached.  ``corrupt`` names a link
    whose map gets deliberately broken (test hook).
    """
    from .generators import gen_cyclic_pair, gen_yseq_pair, gen_zcode_pair, stream
    from .invariants import closed_form, count_classes

    report = ChainReport(seed=cfg.seed, cases=cfg.cases)

    def sample(pair_gen, salt):
        pairs = []
        for i in range(cfg.cases):
            rng = stream(cfg.seed, i * 4 + salt)
            pairs.append(pair_gen(rng, cfg))
        return pairs

    def product_pairs(salt):
        pairs = []
        for i in range(cfg.cases):
            rng = stream(cfg.seed, i * 4 + salt)
            x, x2 = gen_cyclic_pair(rng, cfg)
            y, y2 = gen_yseq_pair(rng, cfg)
            pairs.append(((x, y), (x2, y2)))
        return pairs

    def ff_pairs(salt):
        pairs = []
        for i in range(cfg.cases):
            rng = stream(cfg.seed, i * 4 + salt)
            x, x2 = gen_cyclic_pair(rng, cfg)
            y, y2 = gen_cyclic_pair(rng, cfg)
            pairs.append(((x, y), (x2, y2)))
        return pairs

    staged = [
        (embed_fs2_record(), sample(gen_zcode_pair, 0)),
        None,  # the conjectured link occupies this slot
        (gxf_record(cfg.n_cmp), product_pairs(1)),
        (interleave_record(), ff_pairs(2)),
    ]

    for slot in staged:
        if slot is None:
            report.links.append(LinkResult(name="e_to_fxg", status="hypothetical"))
            continue
        record, pairs = slot
        if corrupt == record.name:
            record = _constant_corruption(record, pairs)
        result = check_reduction(record, pairs)
        report.links.append(
            LinkResult(
                name=record.name,
                status="verified" if not result.violations else "violated",
                checked=result.checked,
                violations=result.violations,
            )
        )

    for n in (1, 2, 3):
        for level in ("F", "E"):
            count = count_classes(level, n)
            closed = closed_form(level, n)
            report.growth.append((level, n, count, closed, count == closed))

    return report
