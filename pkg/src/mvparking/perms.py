"""Permutation utilities: inversions, pattern containment, named families.

Permutations are tuples in one-line notation, pi = (pi_1, ..., pi_n).  A
pair (j, i) with j < i and pi_j > pi_i is an inversion; the inversion graph
has vertex set [n] and one edge per inversion.  Arcs are always written
(j, i) with j < i, i.e. directed left to right.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

__all__ = [
    "bipart",
    "check_permutation",
    "contains_pattern",
    "dec",
    "edges_acyclic",
    "format_permutation",
    "inversion_graph_acyclic",
    "inversions",
    "left_inversion_lists",
    "left_inversions",
    "parse_permutation",
    "split_left",
    "split_right",
]


def check_permutation(w: Iterable[int]) -> tuple[int, ...]:
    """Validate one-line notation: a rearrangement of 1..n."""
    word = tuple(w)
    n = len(word)
    if n == 0:
        raise ValueError("permutation must be non-empty")
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"{word} is not a rearrangement of 1..{n}")
    return word


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse "3412" (digit string, n <= 9) or "10,3,1,..." (comma-separated)."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        return check_permutation(int(t) for t in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None


def format_permutation(w: Iterable[int]) -> str:
    """Digit string for n <= 9, comma-separated beyond."""
    word = tuple(w)
    if len(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def inversions(pi: Iterable[int]) -> frozenset[tuple[int, int]]:
    """All pairs (j, i) with j < i and pi_j > pi_i."""
    word = check_permutation(pi)
    n = len(word)
    return frozenset(
        (j, i)
        for j in range(1, n + 1)
        for i in range(j + 1, n + 1)
        if word[j - 1] > word[i - 1]
    )


def left_inversions(pi: Iterable[int], i: int) -> frozenset[int]:
    """Sources j of inversions (j, i) ending at position i."""
    word = check_permutation(pi)
    if not 1 <= i <= len(word):
        raise IndexError(f"position {i} outside [1, {len(word)}]")
    return frozenset(j for j in range(1, i) if word[j - 1] > word[i - 1])


def left_inversion_lists(pi: tuple[int, ...]) -> list[list[int]]:
    """Ascending left-inversion sources per position; index 0 is unused."""
    n = len(pi)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(2, n + 1):
        out[i] = [j for j in range(1, i) if pi[j - 1] > pi[i - 1]]
    return out


def contains_pattern(pi: Iterable[int], tau: Iterable[int]) -> bool:
    """True iff some subsequence of pi is order-isomorphic to tau.

    Brute force over position subsets; the patterns used here have length
    at most 4, so this is plenty fast at desk scale.
    """
    word = check_permutation(pi)
    pat = check_permutation(tau)
    k = len(pat)
    if k > len(word):
        raise ValueError(f"pattern of length {k} longer than host of length {len(word)}")
    for positions in combinations(range(len(word)), k):
        vals = [word[p] for p in positions]
        if all((vals[a] < vals[b]) == (pat[a] < pat[b]) for a in range(k) for b in range(a + 1, k)):
            return True
    return False


def inversion_graph_acyclic(pi: Iterable[int]) -> bool:
    """True iff the inversion graph has no cycle, i.e. pi avoids 321 and 3412."""
    word = check_permutation(pi)
    if len(word) < 3:
        return True
    if contains_pattern(word, (3, 2, 1)):
        return False
    return len(word) < 4 or not contains_pattern(word, (3, 4, 1, 2))


def edges_acyclic(edges: Iterable[tuple[int, int]], n: int) -> bool:
    """Union-find cycle check on an undirected edge set over vertices 1..n.

    Independent of the pattern characterisation; used to cross-check it.
    """
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def dec(n: int) -> tuple[int, ...]:
    """The decreasing permutation n (n-1) ... 1; its inversion graph is complete."""
    if n < 1:
        raise ValueError("size must be positive")
    return tuple(range(n, 0, -1))


def bipart(m: int, n: int) -> tuple[int, ...]:
    """(n+1) ... (n+m) 1 ... n, whose inversion graph is complete bipartite.

    m = 0 is allowed and gives the identity of length n.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    return tuple(range(n + 1, n + m + 1)) + tuple(range(1, n + 1))


def split_right(m: int, n: int) -> tuple[int, ...]:
    """(n+1) ... (n+m) n (n-1) ... 1; inversion graph is a complete split graph."""
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    return tuple(range(n + 1, n + m + 1)) + tuple(range(n, 0, -1))


def split_left(m: int, n: int) -> tuple[int, ...]:
    """(m+n) (m+n-1) ... (m+1) 1 2 ... m; the other complete split family."""
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    return tuple(range(m + n, m, -1)) + tuple(range(1, m + 1))
