"""Two-row symbols: validation, shift equivalence, the staircase bijection
onto bipartitions, similarity classes and their GF(2) structure.

A symbol is an ordered pair (A; B) of weakly increasing natural-number rows
with a minimum gap ``rho`` between consecutive entries of a row and a floor
``s`` on the second row.  The defect is ``len(A) - len(B)``; the rank is
recovered from the entry sum.  Symbols are considered up to the shift that
prepends (0; s) and translates the old entries by ``rho``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    BoundViolation,
    GapViolation,
    LengthMismatch,
    NotInClass,
    ParityMismatch,
)
from .gf2 import BitVector, PresentedSpace, build_space, canonicalize_coset, characters
from .partitions import Bipartition, enumerate_bipartitions


class DefectSet(str, Enum):
    """Which defects a symbol family ranges over."""

    EVEN = "even"
    ODD = "odd"
    ODD_POSITIVE = "odd-positive"

    @property
    def parity(self) -> int:
        return 0 if self is DefectSet.EVEN else 1

    def contains(self, d: int) -> bool:
        if self is DefectSet.EVEN:
            return d % 2 == 0
        if self is DefectSet.ODD:
            return d % 2 == 1
        return d % 2 == 1 and d > 0


@dataclass(frozen=True)
class SymbolParams:
    """Family parameters: row gap rho, second-row floor s, defect range."""

    rho: int
    s: int
    defects: DefectSet

    def __post_init__(self):
        if self.rho < 0 or self.s < 0:
            raise ValueError("rho and s must be natural numbers")
        if self.s == 0 and self.defects is not DefectSet.ODD_POSITIVE:
            raise ValueError("s = 0 requires the odd-positive defect set")
        if self.s > 0 and self.defects is DefectSet.ODD_POSITIVE:
            raise ValueError("s > 0 requires the even or odd defect set")


@dataclass(frozen=True)
class Symbol:
    row_a: Tuple[int, ...]
    row_b: Tuple[int, ...]

    def __str__(self) -> str:
        a = ",".join(str(x) for x in self.row_a)
        b = ",".join(str(x) for x in self.row_b)
        return f"({a};{b})"

    @property
    def defect(self) -> int:
        return len(self.row_a) - len(self.row_b)

    @property
    def size(self) -> int:
        return len(self.row_a) + len(self.row_b)


def parse_symbol(text: str) -> Symbol:
    """Parse "(0,4;2)"; an empty row may be written "", "∅" or "\\emptyset"."""
    raw = text.strip()
    if not (raw.startswith("(") and raw.endswith(")")):
        raise ValueError(f"symbol text must be parenthesised: {text!r}")
    body = raw[1:-1]
    if body.count(";") != 1:
        raise ValueError(f"symbol text needs exactly one ';': {text!r}")

    def row(part: str) -> Tuple[int, ...]:
        part = part.strip()
        if part in ("", "∅", "\\emptyset"):
            return ()
        return tuple(int(tok) for tok in part.split(","))

    left, right = body.split(";")
    return Symbol(row(left), row(right))


def _offset(params: SymbolParams, size: int, d: int) -> int:
    # entry-sum offset of the rank condition; integral since size and d share parity
    if d % 2 == 0:
        return params.rho * size * (size - 2) // 4 + params.s * size // 2
    return params.rho * (size - 1) ** 2 // 4 + params.s * (size - 1) // 2


def validate(params: SymbolParams, sym: Symbol) -> Tuple[int, int]:
    """Check the gap and floor conditions; return (rank n, defect d).

    Membership of d in the family's defect set is deliberately not checked
    here; families enforce it when assembling.
    """
    for name, row in (("a", sym.row_a), ("b", sym.row_b)):
        for x in row:
            if x < 0:
                raise BoundViolation(f"row {name} entry {x} is negative")
        for prev, cur in zip(row, row[1:]):
            if cur - prev < params.rho:
                raise GapViolation(
                    f"row {name} gap {cur}-{prev} is below rho={params.rho}"
                )
    for x in sym.row_b:
        if x < params.s:
            raise BoundViolation(f"row b entry {x} is below s={params.s}")
    d = sym.defect
    n = sum(sym.row_a) + sum(sym.row_b) - _offset(params, sym.size, d)
    return n, d


def n_min(params: SymbolParams, d: int) -> int:
    """Smallest rank with a nonempty defect-d block (the staircase weight)."""
    if d % 2 == 0:
        return (params.rho * d * d - 2 * params.s * d) // 4
    return params.rho * (d * d - 1) // 4 - params.s * (d - 1) // 2


def shift(params: SymbolParams, sym: Symbol) -> Symbol:
    return Symbol(
        (0,) + tuple(x + params.rho for x in sym.row_a),
        (params.s,) + tuple(x + params.rho for x in sym.row_b),
    )


def unshift(params: SymbolParams, sym: Symbol) -> Optional[Symbol]:
    """Invert one shift, or return None when the symbol does not start (0; s)."""
    if not sym.row_a or not sym.row_b:
        return None
    if sym.row_a[0] != 0 or sym.row_b[0] != params.s:
        return None
    return Symbol(
        tuple(x - params.rho for x in sym.row_a[1:]),
        tuple(x - params.rho for x in sym.row_b[1:]),
    )


def normal_form(params: SymbolParams, sym: Symbol) -> Symbol:
    while True:
        smaller = unshift(params, sym)
        if smaller is None:
            return sym
        sym = smaller


def is_normal(params: SymbolParams, sym: Symbol) -> bool:
    return unshift(params, sym) is None


def staircase_to_symbol(params: SymbolParams, d: int, bp: Bipartition) -> Symbol:
    """Embed a bipartition into the defect-d block: minimal zero padding plus
    the staircase (i-th entry gains (i-1)*rho, second row additionally s)."""
    alpha, beta = bp
    excess = d - (len(alpha) - len(beta))
    pad_a = max(excess, 0)
    pad_b = max(-excess, 0)
    row_a = (0,) * pad_a + tuple(alpha)
    row_b = (0,) * pad_b + tuple(beta)
    return Symbol(
        tuple(v + i * params.rho for i, v in enumerate(row_a)),
        tuple(v + params.s + i * params.rho for i, v in enumerate(row_b)),
    )


def staircase_from_symbol(params: SymbolParams, sym: Symbol) -> Tuple[int, Bipartition]:
    """Invert the staircase on the normal form; returns (defect, bipartition)."""
    validate(params, sym)
    nf = normal_form(params, sym)
    alpha = tuple(
        v for v in (x - i * params.rho for i, x in enumerate(nf.row_a)) if v > 0
    )
    beta = tuple(
        v
        for v in (x - params.s - i * params.rho for i, x in enumerate(nf.row_b))
        if v > 0
    )
    return nf.defect, (alpha, beta)


def enumerate_symbols(params: SymbolParams, n: int, d: int) -> List[Symbol]:
    """Normal forms of the defect-d block at rank n, via the staircase."""
    weight = n - n_min(params, d)
    if weight < 0:
        return []
    return [staircase_to_symbol(params, d, bp) for bp in enumerate_bipartitions(weight)]


def _row_candidates(
    length: int, total: int, lo: int, rho: int, caps: Sequence[int]
) -> Iterator[Tuple[int, ...]]:
    # weakly increasing rows with gap >= rho, exact sum, per-position caps
    if length == 0:
        if total == 0:
            yield ()
        return

    def rec(idx: int, lo_here: int, remaining: int, acc: Tuple[int, ...]):
        slots = length - idx
        if slots == 0:
            if remaining == 0:
                yield acc
            return
        # remaining must be reachable: slots entries, each >= lo_here + k*rho
        floor_sum = slots * lo_here + rho * slots * (slots - 1) // 2
        if remaining < floor_sum:
            return
        hi = min(caps[idx], remaining - (floor_sum - lo_here))
        for v in range(lo_here, hi + 1):
            yield from rec(idx + 1, v + rho, remaining - v, acc + (v,))

    yield from rec(0, lo, total, ())


def brute_force_symbols(params: SymbolParams, n: int, d: int) -> List[Symbol]:
    """Direct search oracle for enumerate_symbols, independent of the staircase.

    Every valid symbol satisfies a_i <= w + (i-1)*rho and
    b_i <= w + s + (i-1)*rho where w = n - n_min, and normal forms have total
    size at most 2w + |d|; the search is exhaustive within those bounds.
    """
    weight = n - n_min(params, d)
    if weight < 0:
        return []
    out: List[Symbol] = []
    size_bound = 2 * weight + abs(d)
    len_b = 0
    while True:
        len_a = len_b + d
        size = len_a + len_b
        if len_a < 0:
            len_b += 1
            continue
        if size > size_bound:
            break
        target = n + _offset(params, size, d)
        caps_a = [weight + i * params.rho for i in range(len_a)]
        caps_b = [weight + params.s + i * params.rho for i in range(len_b)]
        min_a = params.rho * len_a * (len_a - 1) // 2
        min_b = params.s * len_b + params.rho * len_b * (len_b - 1) // 2
        lo_sum = max(min_a, target - sum(caps_b, 0))
        hi_sum = min(sum(caps_a, 0), target - min_b)
        for sum_a in range(lo_sum, hi_sum + 1):
            for row_a in _row_candidates(len_a, sum_a, 0, params.rho, caps_a):
                for row_b in _row_candidates(
                    len_b, target - sum_a, params.s, params.rho, caps_b
                ):
                    sym = Symbol(row_a, row_b)
                    if not is_normal(params, sym):
                        continue
                    got = validate(params, sym)
                    if got == (n, d):
                        out.append(sym)
        len_b += 1
    out.sort(key=lambda s: (s.size, s.row_a, s.row_b))
    return out


def family_defects(params: SymbolParams, n: int) -> List[int]:
    """Defects d in the family's range with a nonempty block at rank n.

    Ordered by |d|, positive sign first.  Needs rho >= 1; with rho = 0 and
    s > 0 infinitely many defects contribute.
    """
    if params.rho == 0:
        raise ValueError("family enumeration requires rho >= 1")
    out = []
    misses = 0
    stop_after = 2 + 2 * params.s // params.rho
    magnitude = params.defects.parity
    while True:
        group = []
        if params.defects.contains(magnitude):
            group.append(magnitude)
        if magnitude and params.defects.contains(-magnitude):
            group.append(-magnitude)
        hits = [d for d in group if n - n_min(params, d) >= 0]
        out.extend(hits)
        misses = 0 if hits else misses + 1
        if misses > stop_after:
            return out
        magnitude += 2


def enumerate_family(params: SymbolParams, n: int) -> List[Symbol]:
    """Normal forms of the whole rank-n family, over all contributing defects."""
    out: List[Symbol] = []
    for d in family_defects(params, n):
        out.extend(enumerate_symbols(params, n, d))
    return out


def _union_and_intersection(sym: Symbol) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    union = tuple(sorted(sym.row_a + sym.row_b))
    inter = tuple(sorted(set(sym.row_a) & set(sym.row_b)))
    return union, inter


def similar(params: SymbolParams, x: Symbol, y: Symbol) -> bool:
    """Equality of entry multiset and shared-entry set at a common total size."""
    if params.rho < 1:
        raise ValueError("similarity requires rho >= 1")
    validate(params, x)
    validate(params, y)
    if (x.size - y.size) % 2 != 0:
        raise ParityMismatch(
            f"total sizes {x.size} and {y.size} differ in parity"
        )
    while x.size < y.size:
        x = shift(params, x)
    while y.size < x.size:
        y = shift(params, y)
    return _union_and_intersection(x) == _union_and_intersection(y)


@dataclass(frozen=True)
class Interval:
    """A maximal run of unshared entries with consecutive gaps below rho.

    Proper means the run avoids [0, s-1] entirely, i.e. min(entries) >= s.
    """

    entries: Tuple[int, ...]
    proper: bool


@dataclass(frozen=True)
class SimilarityClass:
    params: SymbolParams
    n: int
    size: int
    union: Tuple[int, ...]
    intersection: Tuple[int, ...]
    intervals: Tuple[Interval, ...]
    space: PresentedSpace
    members: Tuple[Symbol, ...]

    @property
    def dimension(self) -> int:
        return self.space.dimension


def _split_intervals(
    entries: Sequence[int], rho: int, s: int
) -> Tuple[Interval, ...]:
    groups: List[List[int]] = []
    for v in sorted(entries):
        if groups and v - groups[-1][-1] < rho:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple(Interval(tuple(g), proper=g[0] >= s) for g in groups)


def _member_from_bits(
    intersection: Sequence[int], intervals: Sequence[Interval], bits: Sequence[int]
) -> Symbol:
    # bits address the proper intervals in order; improper runs start in row a
    row_a = list(intersection)
    row_b = list(intersection)
    it = iter(bits)
    for iv in intervals:
        start_in_b = next(it) if iv.proper else 0
        for pos, v in enumerate(iv.entries):
            if start_in_b ^ (pos & 1):
                row_b.append(v)
            else:
                row_a.append(v)
    return Symbol(tuple(sorted(row_a)), tuple(sorted(row_b)))


def _resolve_member(cls_like, bits: Sequence[int]) -> Symbol:
    params = cls_like.params
    sym = _member_from_bits(cls_like.intersection, cls_like.intervals, bits)
    if params.s == 0 and not params.defects.contains(sym.defect):
        flipped = tuple(1 - b for b in bits)
        sym = _member_from_bits(cls_like.intersection, cls_like.intervals, flipped)
    return sym


def class_member(cls: SimilarityClass, bits: Sequence[int]) -> Symbol:
    """The member whose i-th proper interval starts in row b iff bits[i] is set.

    With s = 0 the bits are read as a coset representative modulo all-ones and
    the lift whose defect is positive is returned.
    """
    proper_count = sum(1 for iv in cls.intervals if iv.proper)
    if len(bits) != proper_count:
        raise LengthMismatch(
            f"expected {proper_count} bits, got {len(bits)}"
        )
    if cls.params.s == 0:
        bits = canonicalize_coset(tuple(bits), True)
    return _resolve_member(cls, bits)


def class_vector(cls: SimilarityClass, member: Symbol) -> BitVector:
    """Bits over the proper intervals: 1 iff the interval's minimum sits in
    row b.  With s = 0 the result is coset-canonicalized."""
    sym = normal_form(cls.params, member)
    if sym not in cls.members:
        raise NotInClass(f"{sym} is not a member of the class of {cls.members[0]}")
    in_b = set(sym.row_b)
    bits = tuple(
        1 if iv.entries[0] in in_b else 0 for iv in cls.intervals if iv.proper
    )
    return canonicalize_coset(bits, cls.params.s == 0)


def _class_sort_key(cls: SimilarityClass):
    return (cls.size, tuple(-v for v in sorted(cls.union, reverse=True)))


@lru_cache(maxsize=None)
def similarity_classes(params: SymbolParams, n: int) -> Tuple[SimilarityClass, ...]:
    """Partition the rank-n family into similarity classes.

    Classes are ordered by total size, then by entry multiset (largest entries
    first); members are ordered by their class_vector bits.  All members of a
    class share one normal-form total size, so normal forms are grouped
    directly by (size, entry multiset).
    """
    if params.rho <= params.s:
        raise ValueError("similarity classes require rho > s")
    grouped: Dict[tuple, List[Symbol]] = {}
    for sym in enumerate_family(params, n):
        union, inter = _union_and_intersection(sym)
        grouped.setdefault((sym.size, union, inter), []).append(sym)

    out = []
    for (size, union, inter), found in grouped.items():
        singles = [v for v in union if v not in inter]
        intervals = _split_intervals(singles, params.rho, params.s)
        proper_count = sum(1 for iv in intervals if iv.proper)
        space = build_space(proper_count, quotient_by_all_ones=params.s == 0)
        skeleton = SimilarityClass(
            params=params,
            n=n,
            size=size,
            union=union,
            intersection=inter,
            intervals=intervals,
            space=space,
            members=(),
        )
        members = tuple(
            _resolve_member(skeleton, bits) for bits in characters(space)
        )
        if set(members) != set(found) or len(members) != len(found):
            raise RuntimeError(
                f"class reconstruction mismatch at {found}: got {members}"
            )
        out.append(
            SimilarityClass(
                params=params,
                n=n,
                size=size,
                union=union,
                intersection=inter,
                intervals=intervals,
                space=space,
                members=members,
            )
        )
    out.sort(key=_class_sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _class_index(params: SymbolParams, n: int) -> Dict[Symbol, SimilarityClass]:
    index: Dict[Symbol, SimilarityClass] = {}
    for cls in similarity_classes(params, n):
        for member in cls.members:
            index[member] = cls
    return index


def class_of(params: SymbolParams, n: int, sym: Symbol) -> SimilarityClass:
    """The similarity class containing sym within the rank-n family."""
    nf = normal_form(params, sym)
    try:
        return _class_index(params, n)[nf]
    except KeyError:
        raise NotInClass(f"{sym} is not in the rank-{n} family") from None
