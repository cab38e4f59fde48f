"""Motzkin paths, two-cars-per-spot parking functions, non-crossing matchings.

A lattice path over steps U (up), H (flat), D (down) is a Motzkin path when
no prefix has more D than U steps and the full path balances.  A preference
vector maps to such a path by spot popularity: spot j contributes U when at
least two cars prefer it, H when exactly one does, D when none does.  The
parking functions whose path is Motzkin are exactly those where every spot
is preferred by at most two cars.

Non-crossing matchings on [n] (vertex-disjoint arcs, no two crossing) are
counted by the Motzkin numbers and coincide with the valid 1-subgraphs of
the decreasing permutation's inversion graph, so they parametrise the
decreasing fibre.  A small arc surgery near the right end carries them onto
the valid subgraphs of the split permutation n (n-1) ... 3 1 2.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .parking import _mvp_final, check_preference, is_parking_function, NotAParkingFunction
from .perms import dec
from .subgraphs import subgraph_to_pf

__all__ = [
    "NotAMotzkinParkingFunction",
    "NotAMotzkinPath",
    "NotANonCrossingMatching",
    "check_path",
    "dec_to_split_subgraph",
    "decreasing_fibre",
    "decreasing_representative",
    "is_motzkin_pf",
    "is_motzkin_path",
    "is_noncrossing_matching",
    "noncross_to_motzkin",
    "noncrossing_matchings",
    "path_to_preference",
    "preference_path",
    "prime_decomposition",
]


class NotAMotzkinPath(ValueError):
    """The step string dips below the axis or does not balance."""


class NotAMotzkinParkingFunction(ValueError):
    """Some spot is preferred by three or more cars."""


class NotANonCrossingMatching(ValueError):
    """The arc set has a shared endpoint or a crossing pair."""


def check_path(path: str) -> str:
    """Validate the step alphabet (U/H/D only); returns the path."""
    bad = set(path) - {"U", "H", "D"}
    if bad:
        raise ValueError(f"steps {sorted(bad)} not in alphabet U/H/D")
    return path


def preference_path(p: Iterable[int]) -> str:
    """Spot-popularity path: U/H/D per spot preferred by >=2 / 1 / 0 cars."""
    prefs = check_preference(p)
    count = Counter(prefs)
    steps = []
    for j in range(1, len(prefs) + 1):
        k = count.get(j, 0)
        steps.append("U" if k >= 2 else "H" if k == 1 else "D")
    return "".join(steps)


def is_motzkin_path(path: str) -> bool:
    """Prefixwise #U >= #D and overall #U == #D."""
    check_path(path)
    height = 0
    for step in path:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
            if height < 0:
                return False
    return height == 0


def path_to_preference(path: str) -> tuple[int, ...]:
    """The unique non-decreasing parking function whose popularity path is
    the given Motzkin path.

    Streaming construction: walk the steps keeping a car counter i and a
    spot counter k; a U step hands spot k to cars i and i+1, an H step to
    car i alone, a D step to nobody.
    """
    if not is_motzkin_path(path):
        raise NotAMotzkinPath(f"{path!r} is not a Motzkin path")
    n = len(path)
    prefs = [0] * n
    i = 1
    for k, step in enumerate(path, start=1):
        if step == "U":
            prefs[i - 1] = k
            prefs[i] = k
            i += 2
        elif step == "H":
            prefs[i - 1] = k
            i += 1
    return tuple(prefs)


def is_motzkin_pf(p: Iterable[int]) -> bool:
    """True iff the parking function has every spot preferred at most twice."""
    prefs = check_preference(p)
    if not is_parking_function(prefs):
        raise NotAParkingFunction(f"{prefs} is not a parking function")
    return max(Counter(prefs).values()) <= 2


def _distinct_rearrangements(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, lexicographically."""
    pool = Counter(values)
    buf: list[int] = []
    n = len(values)

    def rec() -> Iterator[tuple[int, ...]]:
        if len(buf) == n:
            yield tuple(buf)
            return
        for v in sorted(pool):
            if pool[v]:
                pool[v] -= 1
                buf.append(v)
                yield from rec()
                buf.pop()
                pool[v] += 1

    return rec()


def decreasing_representative(p: Iterable[int]) -> tuple[int, ...]:
    """The unique rearrangement of p whose MVP outcome is decreasing.

    Searches the distinct rearrangements of the preference multiset and
    insists on exactly one hit; anything else is an internal failure, since
    existence and uniqueness are guaranteed for two-cars-per-spot parking
    functions.
    """
    prefs = check_preference(p)
    if not is_motzkin_pf(prefs):
        raise NotAMotzkinParkingFunction(f"some spot preferred >2 times in {prefs}")
    n = len(prefs)
    target = list(dec(n))
    hits = [q for q in _distinct_rearrangements(prefs) if _mvp_final(q, n) == target]
    if len(hits) != 1:
        raise AssertionError(
            f"expected exactly one rearrangement of {prefs} parking to {target}, got {len(hits)}"
        )
    return hits[0]


def is_noncrossing_matching(arcs: Iterable[tuple[int, int]], n: int) -> bool:
    """Matching (every vertex on at most one arc) with no crossing pair."""
    pairs = sorted(tuple(a) for a in arcs)
    seen: set[int] = set()
    for j, i in pairs:
        if not 1 <= j < i <= n:
            return False
        if j in seen or i in seen:
            return False
        seen.update((j, i))
    for x in range(len(pairs)):
        a, b = pairs[x]
        for y in range(x + 1, len(pairs)):
            c, d = pairs[y]
            if a < c < b < d:
                return False
    return True


def noncrossing_matchings(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Yield every non-crossing matching on [n] exactly once.

    Recursive interval splitting: vertex lo is either isolated or matched
    to some k, with independent subproblems inside and outside the arc.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")

    def rec(lo: int, hi: int) -> Iterator[frozenset[tuple[int, int]]]:
        if lo > hi:
            yield frozenset()
            return
        yield from rec(lo + 1, hi)
        for k in range(lo + 1, hi + 1):
            arc = frozenset({(lo, k)})
            for inside in rec(lo + 1, k - 1):
                base = arc | inside
                for outside in rec(k + 1, hi):
                    yield base | outside

    return rec(1, n)


def noncross_to_motzkin(arcs: Iterable[tuple[int, int]], n: int) -> str:
    """U at arc openers, D at arc closers, H at isolated vertices."""
    steps = ["H"] * n
    for j, i in arcs:
        steps[j - 1] = "U"
        steps[i - 1] = "D"
    return "".join(steps)


def prime_decomposition(arcs: Iterable[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    """Maximal factors of a non-crossing matching, as intervals partitioning [n].

    Outermost arcs span their interval; vertices outside every outermost
    arc become singleton intervals.
    """
    pairs = sorted(tuple(a) for a in arcs)
    outer = [
        (a, b)
        for a, b in pairs
        if not any(x < a and b < y for x, y in pairs)
    ]
    intervals: list[tuple[int, int]] = []
    v = 1
    for a, b in outer:
        while v < a:
            intervals.append((v, v))
            v += 1
        intervals.append((a, b))
        v = b + 1
    while v <= n:
        intervals.append((v, v))
        v += 1
    return intervals


def decreasing_fibre(n: int) -> list[tuple[int, ...]]:
    """The MVP fibre of the decreasing permutation, via non-crossing matchings.

    Lexicographically sorted, so directly comparable with the subgraph and
    brute-force enumerations.
    """
    word = dec(n)
    fibre = [subgraph_to_pf(delta, word) for delta in noncrossing_matchings(n)]
    fibre.sort()
    return fibre


def dec_to_split_subgraph(arcs: Iterable[tuple[int, int]], n: int) -> frozenset[tuple[int, int]]:
    """Carry a valid decreasing-permutation subgraph onto the split
    permutation n (n-1) ... 3 1 2.

    The input must be a non-crossing matching on [n] (those are exactly the
    valid subgraphs of the decreasing permutation).  Arc sets without the
    arc (n-1, n) pass through unchanged; otherwise that arc is replaced by
    a pair of arcs out of the closest suitable vertex on the left, shifting
    any arcs nested strictly inside one column to the right.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    sub = frozenset(tuple(a) for a in arcs)
    if not is_noncrossing_matching(sub, n):
        raise NotANonCrossingMatching(f"{sorted(sub)} on [{n}]")
    last = (n - 1, n)
    if last not in sub:
        return sub
    left = next(((j, i) for j, i in sub if i == n - 2), None)
    if left is None:
        return (sub - {last}) | {(n - 2, n - 1), (n - 2, n)}
    i = left[0]
    nested = {(a, b) for a, b in sub if i < a and b < n - 2}
    shifted = {(a + 1, b + 1) for a, b in nested}
    return (sub - nested - {left, last}) | shifted | {(i, n - 1), (i, n)}
