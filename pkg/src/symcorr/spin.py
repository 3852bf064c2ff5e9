"""Closed-form spin correspondence: partitions with even parts of even
multiplicity and distinct odd parts, rewritten entrywise into a signed block
index t and a bipartition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .errors import NotInImage, NotInXn
from .partitions import Bipartition, Partition, enumerate_partitions


def d_of(s: int) -> int:
    """0 on even integers, (-1)^((s-1)/2) on odd ones."""
    if s % 2 == 0:
        return 0
    return -1 if (s - 1) // 2 % 2 else 1


def is_admissible(parts: Partition) -> bool:
    """Even parts appear an even number of times; odd parts at most once."""
    for p in set(parts):
        count = parts.count(p)
        if p % 2 == 0 and count % 2 == 1:
            return False
        if p % 2 == 1 and count > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _xn(n: int) -> Tuple[Partition, ...]:
    return tuple(p for p in enumerate_partitions(n) if is_admissible(p))


def enumerate_xn(n: int) -> List[Partition]:
    """Admissible partitions of n, lexicographically ascending."""
    return list(_xn(n))


@dataclass(frozen=True)
class MarkedEntry:
    """A rewritten entry; source_index is the 1-based position in the input."""

    value: int
    mark: str
    source_index: int


def modify(parts: Partition) -> List[MarkedEntry]:
    """Rewrite the entries of an admissible partition.

    With t_i the running signed count of odd parts before position i:
    4k+1 entries become (e-1)/4 - t_i marked a; 4k+3 entries (e-3)/4 + t_i
    marked b; a run of 2p equal entries e alternates e/4 -+ t_i (for 4 | e)
    or (e+2)/4 - t_i, (e-2)/4 + t_i (for e in 4Z+2), marked a, b, a, b, ...
    """
    if not is_admissible(parts):
        raise NotInXn(f"{parts} violates the multiplicity rules")
    out: List[MarkedEntry] = []
    t_run = 0
    i = 0
    m = len(parts)
    while i < m:
        e = parts[i]
        if e % 2 == 1:
            if e % 4 == 1:
                out.append(MarkedEntry((e - 1) // 4 - t_run, "a", i + 1))
            else:
                out.append(MarkedEntry((e - 3) // 4 + t_run, "b", i + 1))
            t_run += d_of(e)
            i += 1
            continue
        j = i
        while j < m and parts[j] == e:
            j += 1
        for k in range(j - i):
            if e % 4 == 0:
                value = e // 4 - t_run if k % 2 == 0 else e // 4 + t_run
            else:
                value = (e + 2) // 4 - t_run if k % 2 == 0 else (e - 2) // 4 + t_run
            out.append(MarkedEntry(value, "a" if k % 2 == 0 else "b", i + k + 1))
        i = j
    return out


def block_index(parts: Partition) -> int:
    """t = sum of d over all parts; always congruent to n mod 4."""
    return sum(d_of(p) for p in parts)


def weyl_rank(n: int, t: int) -> int:
    return (n - 2 * t * t + t) // 4


def spin_springer(parts: Partition) -> Tuple[int, Bipartition]:
    """Map an admissible partition to (t, bipartition).

    The a-marked values form one side, the b-marked values the other; the
    pair is (a-side, b-side) for t >= 1 and swapped for t <= 0.  Zero values
    are dropped from the partition label.
    """
    marked = modify(parts)
    alpha = tuple(e.value for e in marked if e.mark == "a")
    beta = tuple(e.value for e in marked if e.mark == "b")
    t = block_index(parts)
    first, second = (alpha, beta) if t >= 1 else (beta, alpha)
    strip = lambda seq: tuple(v for v in seq if v > 0)
    return t, (strip(first), strip(second))


def spin_springer_inverse(n: int, t: int, bp: Bipartition) -> Partition:
    """The unique admissible partition of n mapping to (t, bp)."""
    if (t - n) % 4 != 0:
        raise NotInImage(f"t={t} is not congruent to n={n} mod 4")
    if weyl_rank(n, t) != sum(bp[0]) + sum(bp[1]):
        raise NotInImage(f"bipartition size does not match rank {weyl_rank(n, t)}")
    for parts in _xn(n):
        if spin_springer(parts) == (t, bp):
            return parts
    raise NotInImage(f"no admissible partition of {n} maps to ({t}, {bp})")
