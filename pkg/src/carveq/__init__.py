"""carveq: decidable equivalence relations on finitary sequence codes.

Atoms with structural equality; cyclic and pair-merged sequence codes with
total evaluation and finite saturation bounds; the jump operator, products,
range equality, and carve-family equality on validated points; canonical
invariants and brute-force class counting; executable reductions with a
sampling verifier; and a seeded property harness with a CLI front end.
"""

from .atoms import (
    Atom,
    AtomSet,
    CyclicWord,
    Rational,
    Tag,
    WordAtom,
    atom_eq,
    atom_lt,
    atom_sort_key,
    primitive_root,
)
from .codes import (
    DEFAULT_N_CMP,
    AtomSeqCode,
    BinSeqCode,
    CycW,
    Cyclic,
    PairMerge,
    Pullback,
    YSeq,
    ZCode,
    atom_from_binseq,
    atom_to_binseq,
    binseq_eq,
    binseq_value_at,
    iota,
    pullback,
    range_set,
    saturation_bound,
    value_at,
)
from .errors import (
    CarveqError,
    ClauseViolation,
    DomainViolation,
    IncomparableCodes,
    NoWitness,
    ParseError,
    ResourceLimit,
    StructuralMismatch,
    TypeMismatch,
)
from .generators import FuzzConfig, SplitMix64, stream
from .invariants import (
    SetOfAtomSets,
    atom_universe,
    atomset_sort_key,
    binseq_class_rep,
    closed_form,
    count_classes,
    e_invariant,
    f_invariant,
    fs2_invariant,
    g_invariant,
)
from .pairing import cantor_pair, cantor_unpair
from .reductions import (
    ChainReport,
    LinkResult,
    ReductionRecord,
    VerificationReport,
    Violation,
    canonical_basepoint,
    chain_report,
    check_reduction,
    compose,
    const_jump_embedding,
    embed_fs2,
    fiber_reduction,
    g_to_f,
    identity_reduction,
    pair_interleave,
)
from .relations import (
    ATOM_EQ,
    E_REL,
    F_REL,
    EqRelHandle,
    PPoint,
    carve,
    carve_family,
    carve_pair,
    g_handle,
    jump,
    p_membership,
    product,
    rel_E,
    rel_F,
    rel_G,
    restrict_to_fiber,
)
from .serialize import (
    parse_any,
    parse_aseq,
    parse_atom,
    parse_binseq,
    parse_ppoint,
    parse_yseq,
    parse_zcode,
    to_text,
)

__version__ = "0.1.0"
