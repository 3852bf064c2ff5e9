"""Minimal exact GF(2) linear algebra for identify/kill generator presentations.

Spaces are given by generators s_0, ..., s_{g-1} together with relations of
exactly two shapes: ``s_i = s_j`` (identify) and ``s_i = 0`` (kill).  An
optional flag quotients by the sum of all canonical basis elements; the dual
of the even-sum subspace of such a presentation is modelled this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Sequence, Tuple

BitVector = Tuple[int, ...]


def bits_to_str(bits: Sequence[int]) -> str:
    """Serialize a bit-vector as a string, basis order, e.g. (1, 0) -> "10"."""
    return "".join(str(b) for b in bits)


def str_to_bits(text: str) -> BitVector:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"bit string must consist of 0/1 only: {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class PresentedSpace:
    """A GF(2) vector space presented by identify/kill relations.

    ``classes`` is the partition of generator indices under the transitive
    closure of the identifications, ordered by least member.  A class is dead
    iff it contains a killed index; ``canonical_basis`` lists the surviving
    classes in the same order.  With ``quotient_by_all_ones`` set, the space
    is the quotient by the sum of all basis elements (and the quotient of the
    zero space is the zero space).
    """

    generator_count: int
    identifications: frozenset
    kills: frozenset
    classes: Tuple[Tuple[int, ...], ...]
    canonical_basis: Tuple[Tuple[int, ...], ...]
    quotient_by_all_ones: bool

    @property
    def dimension(self) -> int:
        k = len(self.canonical_basis)
        if self.quotient_by_all_ones and k >= 1:
            return k - 1
        return k


def build_space(
    generator_count: int,
    identifications: Iterable[Tuple[int, int]] = (),
    kills: Iterable[int] = (),
    quotient_by_all_ones: bool = False,
) -> PresentedSpace:
    """Build the space, computing classes, kill status and the ordered basis."""
    pairs = frozenset(
        (min(i, j), max(i, j)) for i, j in identifications if i != j
    )
    killed = frozenset(kills)
    for i, j in pairs:
        if not (0 <= i < generator_count and 0 <= j < generator_count):
            raise ValueError(f"identification ({i},{j}) out of range")
    for i in killed:
        if not 0 <= i < generator_count:
            raise ValueError(f"killed index {i} out of range")

    parent = list(range(generator_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    groups: dict = {}
    for i in range(generator_count):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(tuple(groups[r]) for r in sorted(groups))
    basis = tuple(cls for cls in classes if not (set(cls) & killed))
    return PresentedSpace(
        generator_count=generator_count,
        identifications=pairs,
        kills=killed,
        classes=classes,
        canonical_basis=basis,
        quotient_by_all_ones=quotient_by_all_ones,
    )


def canonicalize_coset(bits: Sequence[int], quotient_by_all_ones: bool) -> BitVector:
    """Pick the lexicographically smaller of {v, v + all-ones} when quotienting.

    The two coset members differ in every coordinate, so the choice is decided
    by the leading bit.  Without the flag this is the identity.
    """
    v = tuple(bits)
    if not quotient_by_all_ones or not v:
        return v
    if v[0] == 0:
        return v
    return tuple(1 - b for b in v)


def characters(space: PresentedSpace) -> List[BitVector]:
    """All 2^dimension functionals as bit-vectors over the canonical basis.

    Vectors are listed in lexicographic order.  On a quotiented space the
    returned vectors are the canonical coset representatives (leading bit 0).
    """
    k = len(space.canonical_basis)
    if not space.quotient_by_all_ones:
        return [tuple(bits) for bits in product((0, 1), repeat=k)]
    if k == 0:
        return [()]
    return [(0,) + tuple(bits) for bits in product((0, 1), repeat=k - 1)]
