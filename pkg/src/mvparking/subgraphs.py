"""1-subgraphs of inversion graphs and the outcome-fibre correspondence.

A 1-subgraph of the inversion graph of pi is a set of inversion arcs with
at most one left-arc (j, i) per vertex i.  Each parking function whose MVP
outcome is pi induces such a subgraph (arc (j, i) when the car that ends up
in spot i originally preferred spot j), and conversely every 1-subgraph
induces a parking function.  The fibre of pi under the MVP outcome map is
exactly the set of parking functions induced by the *valid* subgraphs: the
ones whose induced preference parks back to pi.

Two cheap structural filters bracket validity: a valid subgraph can contain
no directed two-arc path i -> j -> k (P2-free, necessary), and any subgraph
whose arcs are pairwise horizontally disjoint, endpoints included, is valid
(HS, sufficient).  The P2-free filter is what makes exhaustive fibre
enumeration feasible: for the decreasing permutation it cuts the candidate
count from n! to the n-th Bell number.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Iterable, Iterator, NamedTuple

from .parking import _mvp_final, check_preference, outcome_mvp
from .perms import check_permutation, left_inversion_lists

__all__ = [
    "BRUTE_FORCE_CAP",
    "FibreBounds",
    "NotASubgraph",
    "SizeCapExceeded",
    "bounds",
    "check_one_subgraph",
    "count_one_subgraphs",
    "enumerate_one_subgraphs",
    "fibre_brute",
    "fibre_via_subgraphs",
    "format_arcs",
    "hs_count",
    "is_hs",
    "is_p2_free",
    "is_valid",
    "p2_free_count",
    "parse_arcs",
    "pf_to_subgraph",
    "subgraph_to_pf",
    "valid_subgraphs",
]

BRUTE_FORCE_CAP = 7


class NotASubgraph(ValueError):
    """The arc set is not a 1-subgraph of the given inversion graph."""


class SizeCapExceeded(ValueError):
    """Brute-force enumeration refused: n is above the configured cap."""


def _check_arc_pairs(arcs) -> frozenset[tuple[int, int]]:
    out = set()
    for arc in arcs:
        j, i = arc
        if not (isinstance(j, int) and isinstance(i, int) and 1 <= j < i):
            raise ValueError(f"malformed arc {arc!r}: need integers 1 <= j < i")
        out.add((j, i))
    return frozenset(out)


def check_one_subgraph(arcs: Iterable[tuple[int, int]], pi: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Validate `arcs` as a 1-subgraph of the inversion graph of pi."""
    word = check_permutation(pi)
    n = len(word)
    out = _check_arc_pairs(arcs)
    targets = set()
    for j, i in out:
        if i > n or word[j - 1] <= word[i - 1]:
            raise NotASubgraph(f"arc ({j},{i}) is not an inversion of {word}")
        if i in targets:
            raise NotASubgraph(f"vertex {i} has two incident left-arcs")
        targets.add(i)
    return out


def enumerate_one_subgraphs(pi: Iterable[int]) -> Iterator[frozenset[tuple[int, int]]]:
    """Yield every 1-subgraph of the inversion graph of pi exactly once.

    Mixed-radix walk: for each vertex i = 1..n pick "no left-arc" or one
    source j in ascending order, vertex 1 varying slowest.
    """
    word = check_permutation(pi)
    n = len(word)
    linv = left_inversion_lists(word)

    def walk(i: int, chosen: list[tuple[int, int]]) -> Iterator[frozenset[tuple[int, int]]]:
        if i > n:
            yield frozenset(chosen)
            return
        yield from walk(i + 1, chosen)
        for j in linv[i]:
            chosen.append((j, i))
            yield from walk(i + 1, chosen)
            chosen.pop()

    return walk(1, [])


def count_one_subgraphs(pi: Iterable[int]) -> int:
    """Product formula: prod over i of (1 + #left-inversions at i)."""
    word = check_permutation(pi)
    return prod(1 + len(s) for s in left_inversion_lists(word)[1:])


def pf_to_subgraph(p: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Subgraph induced by a parking function on its own MVP outcome.

    Arc (j, i) whenever the car parked in spot i originally preferred j < i.
    """
    prefs = check_preference(p)
    word = outcome_mvp(prefs).outcome
    arcs = set()
    for i, car in enumerate(word, start=1):
        j = prefs[car - 1]
        if j != i:
            arcs.add((j, i))
    return frozenset(arcs)


def subgraph_to_pf(arcs: Iterable[tuple[int, int]], pi: Iterable[int]) -> tuple[int, ...]:
    """Preference induced by a 1-subgraph: the car ending in spot i prefers
    the source of its left-arc, or i itself when there is none."""
    word = check_permutation(pi)
    sub = check_one_subgraph(arcs, word)
    n = len(word)
    prefs = [0] * n
    left = {i: j for j, i in sub}
    for i in range(1, n + 1):
        prefs[word[i - 1] - 1] = left.get(i, i)
    return tuple(prefs)


def is_valid(arcs: Iterable[tuple[int, int]], pi: Iterable[int]) -> bool:
    """True iff the induced preference parks back to pi under the MVP rule.

    Resolved by full simulation; a preference that fails to park counts as
    invalid rather than raising.
    """
    word = check_permutation(pi)
    prefs = subgraph_to_pf(arcs, word)
    return _mvp_final(prefs, len(word)) == list(word)


def is_p2_free(arcs: Iterable[tuple[int, int]]) -> bool:
    """No directed path of two arcs: never (i, j) and (j, k) together."""
    pairs = _check_arc_pairs(arcs)
    sources = {j for j, _ in pairs}
    targets = {i for _, i in pairs}
    return sources.isdisjoint(targets)


def is_hs(arcs: Iterable[tuple[int, int]]) -> bool:
    """Horizontally separated: arcs pairwise disjoint in column span,
    endpoints included."""
    pairs = sorted(_check_arc_pairs(arcs))
    for a in range(len(pairs)):
        ja, ia = pairs[a]
        for b in range(a + 1, len(pairs)):
            jb, ib = pairs[b]
            if not (ia < jb or ib < ja):
                return False
    return True


def _walk_valid(word, prune_p2, emit):
    """DFS over the 1-subgraph choice tree, calling emit(prefs, chosen) at
    every leaf whose induced preference parks back to `word`.

    `prefs` and `chosen` are reused buffers; emit must copy what it keeps.
    With prune_p2, branches creating a directed two-arc path are skipped,
    which is sound because no such subgraph is valid.
    """
    n = len(word)
    linv = left_inversion_lists(word)
    target = list(word)
    prefs = [0] * n
    chosen: list[tuple[int, int]] = []
    has_left = [False] * (n + 1)

    def walk(i: int) -> None:
        if i > n:
            if _mvp_final(prefs, n) == target:
                emit(prefs, chosen)
            return
        car = word[i - 1]
        prefs[car - 1] = i
        walk(i + 1)
        wrote_arc = False
        for j in linv[i]:
            if prune_p2 and has_left[j]:
                continue
            prefs[car - 1] = j
            if wrote_arc:
                chosen[-1] = (j, i)
            else:
                chosen.append((j, i))
                has_left[i] = True
                wrote_arc = True
            walk(i + 1)
        if wrote_arc:
            chosen.pop()
            has_left[i] = False

    walk(1)


def fibre_via_subgraphs(pi: Iterable[int], prune_p2: bool = True) -> list[tuple[int, ...]]:
    """The MVP outcome fibre of pi, enumerated through valid 1-subgraphs.

    Returned lexicographically sorted.
    """
    word = check_permutation(pi)
    found: list[tuple[int, ...]] = []
    _walk_valid(word, prune_p2, lambda prefs, _arcs: found.append(tuple(prefs)))
    found.sort()
    return found


def valid_subgraphs(pi: Iterable[int], prune_p2: bool = True) -> list[frozenset[tuple[int, int]]]:
    """All valid 1-subgraphs of the inversion graph of pi."""
    word = check_permutation(pi)
    found: list[frozenset[tuple[int, int]]] = []
    _walk_valid(word, prune_p2, lambda _prefs, arcs: found.append(frozenset(arcs)))
    return found


def fibre_brute(pi: Iterable[int], cap: int = BRUTE_FORCE_CAP) -> list[tuple[int, ...]]:
    """Independent oracle: scan all n^n preferences and keep the fibre.

    Lexicographically sorted; refuses n above `cap`.
    """
    word = check_permutation(pi)
    n = len(word)
    if n > cap:
        raise SizeCapExceeded(f"n={n} above brute-force cap {cap}")
    target = list(word)
    return [
        prefs
        for prefs in product(range(1, n + 1), repeat=n)
        if _mvp_final(prefs, n) == target
    ]


def p2_free_count(pi: Iterable[int]) -> int:
    """Number of P2-free 1-subgraphs (no simulation, pruned walk)."""
    word = check_permutation(pi)
    n = len(word)
    linv = left_inversion_lists(word)
    has_left = [False] * (n + 1)

    def walk(i: int) -> int:
        if i > n:
            return 1
        total = walk(i + 1)
        free = [j for j in linv[i] if not has_left[j]]
        if free:
            has_left[i] = True
            for _ in free:
                total += walk(i + 1)
            has_left[i] = False
        return total

    return walk(1)


def hs_count(pi: Iterable[int]) -> int:
    """Number of horizontally separated 1-subgraphs.

    Processing vertices left to right keeps arc targets ascending, so a new
    arc (j, i) is admissible iff j lies strictly right of the last target.
    """
    word = check_permutation(pi)
    n = len(word)
    linv = left_inversion_lists(word)

    def walk(i: int, last_target: int) -> int:
        if i > n:
            return 1
        total = walk(i + 1, last_target)
        for j in linv[i]:
            if j > last_target:
                total += walk(i + 1, i)
        return total

    return walk(1, 0)


class FibreBounds(NamedTuple):
    product_upper: int
    p2free_count: int
    fibre_size: int
    hs_count: int
    single_arc_lower: int


def bounds(pi: Iterable[int]) -> FibreBounds:
    """The sandwich single_arc <= HS <= fibre <= P2-free <= product for pi."""
    word = check_permutation(pi)
    n_inv = sum(len(s) for s in left_inversion_lists(word)[1:])
    return FibreBounds(
        product_upper=count_one_subgraphs(word),
        p2free_count=p2_free_count(word),
        fibre_size=len(fibre_via_subgraphs(word)),
        hs_count=hs_count(word),
        single_arc_lower=1 + n_inv,
    )


def format_arcs(arcs: Iterable[tuple[int, int]]) -> str:
    """Render as sorted "j-i" tokens joined by commas, e.g. "2-3,2-4"."""
    return ",".join(f"{j}-{i}" for j, i in sorted(_check_arc_pairs(arcs)))


def parse_arcs(text: str) -> frozenset[tuple[int, int]]:
    """Inverse of format_arcs; the empty string is the empty arc set."""
    text = text.strip()
    if not text:
        return frozenset()
    arcs = []
    for token in text.split(","):
        left, sep, right = token.partition("-")
        if not sep:
            raise ValueError(f"malformed arc token {token!r}")
        arcs.append((int(left), int(right)))
    return _check_arc_pairs(arcs)
