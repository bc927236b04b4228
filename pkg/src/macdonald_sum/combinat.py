"""Partitions, compositions and the statistics used by the sum formula.

Partitions are plain tuples of fixed length n, weakly decreasing and padded
with zeros; compositions are arbitrary tuples of nonnegative integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple
Composition = tuple


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse ``"3,1,0"``."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as comma-separated integers") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for p in lam if p > 0)


def conjugate(lam: Sequence[int]) -> Partition:
    """Column lengths, up to the largest part."""
    r = max(lam, default=0)
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, r + 1))


def conjugate_at(conj: Sequence[int], i: int) -> int:
    """lambda'_i with lambda'_i = 0 beyond the largest part (1-based i)."""
    return conj[i - 1] if 1 <= i <= len(conj) else 0


def truncate(lam: Sequence[int], k: int) -> Partition:
    """lambda[k]: parts of size <= k replaced by 0."""
    r = max(lam, default=0)
    if not 0 <= k <= r:
        raise ValueError(f"truncation level {k} outside [0, {r}]")
    return tuple(p if p > k else 0 for p in lam)


def multiplicity(mu: Sequence[int], i: int) -> int:
    return sum(1 for p in mu if p == i)


def _check_pair(lam, mu):
    if len(lam) != len(mu):
        raise ValueError(f"length mismatch: {lam} vs {mu}")


def a_stat(lam: Sequence[int], mu: Sequence[int], i: int) -> int:
    """#{k : lam_k = 0 and mu_k = i}."""
    _check_pair(lam, mu)
    return sum(1 for l, m in zip(lam, mu) if l == 0 and m == i)


def b_stat(lam: Sequence[int], mu: Sequence[int], i: int) -> int:
    """#{k : lam_k = i > mu_k}."""
    _check_pair(lam, mu)
    return sum(1 for l, m in zip(lam, mu) if l == i and l > m)


def sort_desc(mu: Sequence[int]) -> Partition:
    return tuple(sorted(mu, reverse=True))


def dominance_less(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Strict dominance mu < lam for partitions of the same size."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: |{mu}| != |{lam}|")
    width = max(len(mu), len(lam))
    mu = tuple(mu) + (0,) * (width - len(mu))
    lam = tuple(lam) + (0,) * (width - len(lam))
    if mu == lam:
        return False
    s_mu = s_lam = 0
    for a, b in zip(mu, lam):
        s_mu += a
        s_lam += b
        if s_mu > s_lam:
            return False
    return True


def z_factor(lam: Sequence[int]) -> int:
    """z_lambda = prod_i i^{m_i} m_i!."""
    counts = Counter(p for p in lam if p > 0)
    return prod(i**m * factorial(m) for i, m in counts.items())


def enumerate_partitions(d: int, max_len: int) -> list[Partition]:
    """Partitions of d with at most max_len nonzero parts, zero-padded to max_len.

    Listed in reverse lexicographic order, so (d) comes first.
    """
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix) + (0,) * (max_len - len(prefix)))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def distinct_rearrangements(lam: Sequence[int]) -> Iterator[Composition]:
    """Distinct permutations of a multiset, lexicographically descending."""
    counts = Counter(lam)
    values = sorted(counts, reverse=True)
    n = len(lam)
    prefix: list[int] = []

    def rec():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec()
                prefix.pop()
                counts[v] += 1

    yield from rec()


@dataclass(frozen=True)
class CosetElement:
    """A distinct rearrangement of a partition with a reduced word reaching it.

    ``word`` lists adjacent-transposition indices (1-based) as written in a
    product T_{w1} T_{w2} ...: the last index acts first.
    """

    arrangement: Composition
    word: tuple[int, ...]


def reduced_word(lam: Sequence[int], arrangement: Sequence[int]) -> tuple[int, ...]:
    """Word taking the partition ``lam`` to ``arrangement`` through strict descents.

    Each position is filled in turn with the leftmost matching entry of the
    remaining (still decreasing) suffix, bubbled left one swap at a time.
    """
    current = list(lam)
    arrangement = list(arrangement)
    if sorted(current) != sorted(arrangement):
        raise ValueError(f"{arrangement} is not a rearrangement of {tuple(lam)}")
    applied = []
    for p, target in enumerate(arrangement):
        k = current.index(target, p)
        for j in range(k, p, -1):
            # swap positions j-1, j (0-based) = generator index j
            current[j - 1], current[j] = current[j], current[j - 1]
            applied.append(j)
    return tuple(reversed(applied))


def reduced_words(lam: Sequence[int], arrangement: Sequence[int]) -> list[tuple[int, ...]]:
    """Every word taking ``lam`` to ``arrangement`` through strict descents."""
    lam, arrangement = tuple(lam), tuple(arrangement)
    if sorted(lam) != sorted(arrangement):
        raise ValueError(f"{arrangement} is not a rearrangement of {lam}")
    if arrangement == lam:
        return [()]
    out = []
    for i in range(1, len(arrangement)):
        if arrangement[i - 1] < arrangement[i]:
            prev = list(arrangement)
            prev[i - 1], prev[i] = prev[i], prev[i - 1]
            out.extend((i,) + w for w in reduced_words(lam, prev))
    return out


def apply_word(lam: Sequence[int], word: Sequence[int]) -> Composition:
    """Replay a word on a composition, rightmost index first."""
    cur = list(lam)
    for i in reversed(word):
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return tuple(cur)


def coset_reps(lam: Sequence[int]) -> list[CosetElement]:
    lam = tuple(lam)
    return [CosetElement(arr, reduced_word(lam, arr)) for arr in distinct_rearrangements(lam)]


def inversion_count(arrangement: Sequence[int]) -> int:
    """Pairs of positions whose unequal values are out of decreasing order."""
    return sum(1 for a in range(len(arrangement)) for b in range(a + 1, len(arrangement)) if arrangement[a] < arrangement[b])


def coset_count(lam: Sequence[int]) -> int:
    counts = Counter(lam)
    return factorial(len(lam)) // prod(factorial(m) for m in counts.values())
