"""Integer partitions and bipartitions, with memoized counting.

Partitions are stored weakly increasing (lambda_1 <= lambda_2 <= ...), which
matches every index formula used elsewhere in the package.  Bipartitions
(alpha, beta) label the irreducible representations of the hyperoctahedral
group of rank |alpha| + |beta|.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

Partition = Tuple[int, ...]
Bipartition = Tuple[Partition, Partition]


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out: List[Partition] = []

    def rec(remaining: int, lo: int, acc: Tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for p in range(lo, remaining + 1):
            rec(remaining - p, p, acc + (p,))

    rec(n, 1, ())
    return tuple(out)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n, lexicographically ascending; [] for n < 0."""
    return list(_partitions(n))


def enumerate_bipartitions(n: int) -> List[Bipartition]:
    """All ordered pairs (alpha, beta) with |alpha| + |beta| = n.

    Alpha-major order: |alpha| descends from n to 0, each side ascending
    lexicographically.  Empty for n < 0.
    """
    if n < 0:
        return []
    out: List[Bipartition] = []
    for k in range(n, -1, -1):
        for alpha in _partitions(k):
            for beta in _partitions(n - k):
                out.append((alpha, beta))
    return out


@lru_cache(maxsize=None)
def _count_le(n: int, k: int) -> int:
    # partitions of n into parts <= k
    if n == 0:
        return 1
    if n < 0 or k == 0:
        return 0
    return _count_le(n - k, k) + _count_le(n, k - 1)


def count_p(n: int) -> int:
    """Partition count p(n); 0 for n < 0, 1 for n = 0."""
    if n < 0:
        return 0
    return _count_le(n, n)


@lru_cache(maxsize=None)
def count_p2(n: int) -> int:
    """Bipartition count p2(n) = sum_k p(k) p(n-k); 0 for n < 0, 1 for n = 0."""
    if n < 0:
        return 0
    return sum(count_p(k) * count_p(n - k) for k in range(n + 1))


def format_partition(parts: Partition) -> str:
    return ",".join(str(p) for p in parts)


def parse_partition(text: str) -> Partition:
    """Parse "1,3" into (1, 3); parts must be positive and weakly increasing."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition text {text!r}: {exc}") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be >= 1: {text!r}")
    if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly increasing: {text!r}")
    return parts


def format_bipartition(bp: Bipartition) -> str:
    alpha, beta = bp
    return f"{format_partition(alpha)}|{format_partition(beta)}"


def parse_bipartition(text: str) -> Bipartition:
    if text.count("|") != 1:
        raise ValueError(f"bipartition text needs exactly one '|': {text!r}")
    left, right = text.split("|")
    return parse_partition(left), parse_partition(right)
