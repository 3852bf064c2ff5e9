"""Marked partitions: weakly increasing parts with a block structure of
singletons and adjacent equal pairs, parametrizing unipotent class data.

Three kinds are supported:

* ``V``   - an odd number of parts in {0, 1, 2, ...} (at most one zero)
            summing to an even total; singletons carry even parts.
* ``VP``  - the subset of ``V`` with strictly positive parts.
* ``VPP`` - any number of positive parts; singletons carry odd parts.

Each kind defines a weakly increasing c-sequence and a GF(2) space presented
by identify/kill relations on the block generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Tuple

from .errors import (
    BadBlockShape,
    MarkedPartitionError,
    PairMismatch,
    ParityViolation,
    PartCountParity,
    SingletonPairClash,
    ZeroCount,
)
from .gf2 import PresentedSpace, build_space
from .partitions import enumerate_partitions


class Kind(Enum):
    V = "v"
    VP = "v-prime"
    VPP = "v-double-prime"


@dataclass(frozen=True)
class MarkedPartition:
    """parts are weakly increasing; blocks partition range(len(parts)) into
    singletons and adjacent pairs, listed left to right (0-based indices)."""

    parts: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]


def _check_block_shape(mp: MarkedPartition) -> None:
    parts, blocks = mp.parts, mp.blocks
    if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        raise BadBlockShape(f"parts must be weakly increasing: {parts}")
    expected = 0
    for block in blocks:
        if len(block) == 1:
            if block[0] != expected:
                raise BadBlockShape(f"blocks must tile the index range: {blocks}")
            expected += 1
        elif len(block) == 2:
            if block != (expected, expected + 1):
                raise BadBlockShape(f"pair blocks must be adjacent: {blocks}")
            expected += 2
        else:
            raise BadBlockShape(f"blocks must have one or two elements: {blocks}")
    if expected != len(parts):
        raise BadBlockShape(f"blocks must cover all {len(parts)} parts: {blocks}")


def validate_marked(kind: Kind, total: int, mp: MarkedPartition) -> None:
    """Raise unless mp is a valid kind-`kind` marked partition of `total`."""
    parts, blocks = mp.parts, mp.blocks
    _check_block_shape(mp)
    if sum(parts) != total:
        raise MarkedPartitionError(f"parts sum to {sum(parts)}, expected {total}")
    if kind in (Kind.V, Kind.VP):
        if len(parts) % 2 == 0:
            raise PartCountParity("the number of parts must be odd")
        floor = 1 if kind is Kind.VP else 0
        if any(p < floor for p in parts):
            raise ZeroCount(f"parts must be >= {floor}: {parts}")
        if kind is Kind.V and sum(1 for p in parts if p == 0) > 1:
            raise ZeroCount(f"at most one part may be zero: {parts}")
        singleton_parity = 0
    else:
        if any(p < 1 for p in parts):
            raise ZeroCount(f"parts must be positive: {parts}")
        singleton_parity = 1

    singleton_values = set()
    pair_values = set()
    for block in blocks:
        if len(block) == 1:
            value = parts[block[0]]
            if value % 2 != singleton_parity:
                want = "even" if singleton_parity == 0 else "odd"
                raise ParityViolation(f"singleton part {value} must be {want}")
            singleton_values.add(value)
        else:
            i, j = block
            if parts[i] != parts[j]:
                raise PairMismatch(f"pair parts differ: {parts[i]} != {parts[j]}")
            pair_values.add(parts[i])
    clash = singleton_values & pair_values
    if clash:
        raise SingletonPairClash(
            f"value(s) {sorted(clash)} appear both as singleton and pair"
        )


def _block_patterns(
    parts: Tuple[int, ...], singleton_parity: int
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    r = len(parts)

    def rec(i: int, acc: Tuple[Tuple[int, ...], ...]):
        if i == r:
            yield acc
            return
        if parts[i] % 2 == singleton_parity:
            yield from rec(i + 1, acc + ((i,),))
        if i + 1 < r and parts[i] == parts[i + 1]:
            yield from rec(i + 2, acc + ((i, i + 1),))

    for blocks in rec(0, ()):
        singles = {parts[b[0]] for b in blocks if len(b) == 1}
        pairs = {parts[b[0]] for b in blocks if len(b) == 2}
        if not singles & pairs:
            yield blocks


@lru_cache(maxsize=None)
def _enumerate_marked(kind: Kind, total: int) -> Tuple[MarkedPartition, ...]:
    out: List[MarkedPartition] = []
    if total < 0:
        return ()
    for mu in enumerate_partitions(total):
        if kind is Kind.V:
            lam = mu if len(mu) % 2 == 1 else (0,) + mu
        elif kind is Kind.VP:
            if len(mu) % 2 == 0:
                continue
            lam = mu
        else:
            lam = mu
        parity = 0 if kind in (Kind.V, Kind.VP) else 1
        for blocks in _block_patterns(lam, parity):
            out.append(MarkedPartition(lam, blocks))
    return tuple(out)


def enumerate_marked(kind: Kind, total: int) -> List[MarkedPartition]:
    """All valid marked partitions of `total`, deterministic order
    (partitions ascending, then block patterns singleton-first)."""
    return list(_enumerate_marked(kind, total))


def c_sequence(kind: Kind, mp: MarkedPartition) -> Tuple[int, ...]:
    """The weakly increasing sequence attached to a marked partition.

    Kind V uses the parts directly, kind VPP uses parts minus one, and kind
    VP is the kind-V sequence shifted down by one.
    """
    parts = mp.parts
    drop = 1 if kind is Kind.VPP else 0
    out = [0] * len(parts)
    for block in mp.blocks:
        i = block[0]
        v = parts[i] - drop
        if len(block) == 1:
            out[i] = v // 2 + 2 * i
        elif v % 2 == 1:
            out[i] = (v + 1) // 2 + 2 * i
            out[i + 1] = out[i] + 1
        else:
            out[i] = (v + 2) // 2 + 2 * i
            out[i + 1] = out[i]
    if kind is Kind.VP:
        out = [c - 1 for c in out]
    return tuple(out)


def a_space(kind: Kind, mp: MarkedPartition) -> PresentedSpace:
    """The GF(2) space on block generators.

    Kind V kills generators with part <= 2.  Kind VP keeps all generators and
    raises the all-ones quotient flag, modelling the dual of the even-sum
    subspace.  Kind VPP kills generators with part 1.
    """
    parts = mp.parts
    gen_parity = 1 if kind in (Kind.V, Kind.VP) else 0
    singles = {b[0] for b in mp.blocks if len(b) == 1}
    gens = sorted(
        i for i in range(len(parts)) if i in singles or parts[i] % 2 == gen_parity
    )
    local = {g: k for k, g in enumerate(gens)}

    idents = set()
    same_parity_step = 0 if kind in (Kind.V, Kind.VP) else 1
    for i, j in combinations(gens, 2):
        vi, vj = sorted((parts[i], parts[j]))
        tie = (
            vi == vj
            or vj == vi + 1
            or (vi % 2 == same_parity_step and vj % 2 == same_parity_step and vj == vi + 2)
        )
        if tie:
            idents.add((local[i], local[j]))

    if kind is Kind.V:
        kills = {local[i] for i in gens if parts[i] <= 2}
    elif kind is Kind.VPP:
        kills = {local[i] for i in gens if parts[i] == 1}
    else:
        kills = set()
    return build_space(len(gens), idents, kills, quotient_by_all_ones=kind is Kind.VP)


_BLOCK_RE = re.compile(r"\(([^()]*)\)")


def format_marked(mp: MarkedPartition) -> str:
    """Bracketed block text, e.g. "(11)(2)(44)" for parts (1,1,2,4,4) with the
    ones and fours paired.  Multi-digit values use commas; a singleton whose
    digits are all equal is written with a trailing comma to keep the text
    unambiguous."""
    out = []
    for block in mp.blocks:
        values = [mp.parts[i] for i in block]
        if len(block) == 2:
            if values[0] <= 9:
                out.append(f"({values[0]}{values[1]})")
            else:
                out.append(f"({values[0]},{values[1]})")
        else:
            text = str(values[0])
            if len(text) >= 2 and len(set(text)) == 1:
                out.append(f"({text},)")
            else:
                out.append(f"({text})")
    return "".join(out)


def parse_marked(text: str) -> MarkedPartition:
    """Invert format_marked; raises MarkedPartitionError on malformed blocks."""
    raw = text.strip()
    pieces = _BLOCK_RE.findall(raw)
    if "".join(f"({p})" for p in pieces) != raw:
        raise BadBlockShape(f"malformed block text: {text!r}")
    parts: List[int] = []
    blocks: List[Tuple[int, ...]] = []
    for piece in pieces:
        body = piece.strip()
        if "," in body:
            values = [int(tok) for tok in body.split(",") if tok != ""]
        elif len(body) == 1:
            values = [int(body)]
        elif len(body) == 2 and body[0] == body[1] and body.isdigit():
            values = [int(body[0]), int(body[1])]
        elif body.isdigit() and len(set(body)) == 1:
            raise BadBlockShape(f"block {piece!r} has more than two members")
        elif body.isdigit():
            values = [int(body)]
        else:
            raise BadBlockShape(f"cannot parse block {piece!r}")
        if not 1 <= len(values) <= 2:
            raise BadBlockShape(f"block {piece!r} must have one or two members")
        if len(values) == 2 and values[0] != values[1]:
            raise PairMismatch(f"pair block {piece!r} must repeat one value")
        start = len(parts)
        parts.extend(values)
        blocks.append(tuple(range(start, start + len(values))))
    mp = MarkedPartition(tuple(parts), tuple(blocks))
    _check_block_shape(mp)
    return mp
