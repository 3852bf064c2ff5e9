"""The four explicit correspondences between marked-partition pairs and
symbol families, and their composition with the staircase down to labelled
bipartition blocks.

Each group case fixes a marked-partition kind, a total, symbol family
parameters and a symbol rank:

* ``sp``      - kind V over 2n,      (rho=4, s=2, odd defects),    rank n
* ``o-outer`` - kind VP over 2n,     (rho=4, s=0, positive odds),  rank n-1
* ``a-odd``   - kind VPP over 2n+1,  (rho=4, s=1, odd defects),    rank n
* ``a-even``  - kind VPP over 2n,    (rho=4, s=1, even defects),   rank n

A pair (marked partition, character of its space) is sent to the member of
the similarity class of its interleaved c-sequence singled out by the
character, read through the order-preserving identification of the space's
canonical basis with the class's proper intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import BasisCountMismatch, InvalidCharacter, NotInImage
from .gf2 import BitVector, canonicalize_coset, characters
from .partitions import Bipartition, count_p2
from .symbols import (
    DefectSet,
    Symbol,
    SymbolParams,
    class_member,
    class_of,
    family_defects,
    n_min,
    normal_form,
    staircase_from_symbol,
    staircase_to_symbol,
    validate,
)
from .unipotent import Kind, MarkedPartition, a_space, c_sequence, enumerate_marked, validate_marked

FAMILIES = ("sp", "o-outer", "a-odd", "a-even")

_CONFIG = {
    "sp": (Kind.V, SymbolParams(4, 2, DefectSet.ODD)),
    "o-outer": (Kind.VP, SymbolParams(4, 0, DefectSet.ODD_POSITIVE)),
    "a-odd": (Kind.VPP, SymbolParams(4, 1, DefectSet.ODD)),
    "a-even": (Kind.VPP, SymbolParams(4, 1, DefectSet.EVEN)),
}


@dataclass(frozen=True)
class GroupCase:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in _CONFIG:
            raise ValueError(f"unknown family {self.family!r}; pick from {FAMILIES}")
        if self.n < 0:
            raise ValueError("the size parameter must be a natural number")

    @property
    def kind(self) -> Kind:
        return _CONFIG[self.family][0]

    @property
    def params(self) -> SymbolParams:
        return _CONFIG[self.family][1]

    @property
    def total(self) -> int:
        if self.family == "a-odd":
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def symbol_rank(self) -> int:
        return self.n - 1 if self.family == "o-outer" else self.n


@dataclass(frozen=True)
class SpringerLabel:
    """A block index (defect) plus a bipartition naming an irreducible."""

    defect: int
    bipartition: Bipartition

    @property
    def weyl_rank(self) -> int:
        return sum(self.bipartition[0]) + sum(self.bipartition[1])


def interleaved_symbol(case: GroupCase, mp: MarkedPartition) -> Symbol:
    """Odd-position c-entries form row a, even-position entries row b."""
    c = c_sequence(case.kind, mp)
    return Symbol(c[0::2], c[1::2])


def to_symbol(case: GroupCase, mp: MarkedPartition, chi: BitVector) -> Symbol:
    """Map (marked partition, character) to its symbol.

    chi is a bit-vector over the canonical basis of a_space(case.kind, mp);
    on a quotient-flagged space any coset representative is accepted.  The
    zero character lands on the class member whose proper intervals all start
    in row a.
    """
    validate_marked(case.kind, case.total, mp)
    space = a_space(case.kind, mp)
    chi = tuple(chi)
    if len(chi) != len(space.canonical_basis) or any(b not in (0, 1) for b in chi):
        raise InvalidCharacter(
            f"character needs {len(space.canonical_basis)} bits, got {chi!r}"
        )
    chi = canonicalize_coset(chi, space.quotient_by_all_ones)

    sym0 = interleaved_symbol(case, mp)
    rank, _ = validate(case.params, sym0)
    if rank != case.symbol_rank:
        raise BasisCountMismatch(
            f"interleaved symbol {sym0} has rank {rank}, expected {case.symbol_rank}"
        )
    cls = class_of(case.params, case.symbol_rank, sym0)
    proper_count = sum(1 for iv in cls.intervals if iv.proper)
    if proper_count != len(space.canonical_basis):
        raise BasisCountMismatch(
            f"{len(space.canonical_basis)} basis classes vs "
            f"{proper_count} proper intervals at {mp}"
        )
    return class_member(cls, chi)


@lru_cache(maxsize=None)
def correspondence(
    case: GroupCase,
) -> Tuple[Tuple[MarkedPartition, BitVector, Symbol, SpringerLabel], ...]:
    """The full (marked partition, character) -> symbol -> label table."""
    rows = []
    for mp in enumerate_marked(case.kind, case.total):
        space = a_space(case.kind, mp)
        for chi in characters(space):
            sym = to_symbol(case, mp, chi)
            d, bp = staircase_from_symbol(case.params, sym)
            rows.append((mp, chi, sym, SpringerLabel(d, bp)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _symbol_index(case: GroupCase) -> Dict[Symbol, Tuple[MarkedPartition, BitVector]]:
    index: Dict[Symbol, Tuple[MarkedPartition, BitVector]] = {}
    for mp, chi, sym, _ in correspondence(case):
        if sym in index:
            raise RuntimeError(f"correspondence not injective at {sym} in {case}")
        index[sym] = (mp, chi)
    return index


def from_symbol(case: GroupCase, sym: Symbol) -> Tuple[MarkedPartition, BitVector]:
    """Invert to_symbol by table lookup over the case's finite range."""
    nf = normal_form(case.params, sym)
    try:
        return _symbol_index(case)[nf]
    except KeyError:
        raise NotInImage(f"{sym} is not a rank-{case.symbol_rank} image for {case}") from None


def springer_map(case: GroupCase, mp: MarkedPartition, chi: BitVector) -> SpringerLabel:
    sym = to_symbol(case, mp, chi)
    d, bp = staircase_from_symbol(case.params, sym)
    return SpringerLabel(d, bp)


def springer_inverse(
    case: GroupCase, label: SpringerLabel
) -> Tuple[MarkedPartition, BitVector]:
    params = case.params
    if not params.defects.contains(label.defect):
        raise NotInImage(f"defect {label.defect} is outside the family's range")
    rank = label.weyl_rank + n_min(params, label.defect)
    if rank != case.symbol_rank:
        raise NotInImage(
            f"label sits at symbol rank {rank}, case expects {case.symbol_rank}"
        )
    sym = staircase_to_symbol(params, label.defect, label.bipartition)
    return from_symbol(case, sym)


def block_defects(case: GroupCase) -> List[int]:
    """Defects with a nonempty block for the case's rank."""
    return family_defects(case.params, case.symbol_rank)


def cuspidal_datum(case: GroupCase) -> Optional[Tuple[MarkedPartition, BitVector]]:
    """The unique pair whose block is a single rank-zero bipartition, if any."""
    rank = case.symbol_rank
    lonely = [
        d
        for d in block_defects(case)
        if rank - n_min(case.params, d) == 0 and count_p2(0) == 1
    ]
    if len(lonely) != 1:
        return None
    return springer_inverse(case, SpringerLabel(lonely[0], ((), ())))
