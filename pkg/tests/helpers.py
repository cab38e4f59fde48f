"""Small independent oracles shared across test modules.

These deliberately avoid the package's own enumeration code paths so that
counting and generation checks are two-sided.
"""

from __future__ import annotations

from itertools import product


def motzkin_numbers(upto: int) -> list[int]:
    """M_0..M_upto via the recurrence M_n = M_{n-1} + sum M_k M_{n-2-k}."""
    m = [1, 1]
    for n in range(2, upto + 1):
        m.append(m[n - 1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
    return m[: upto + 1]


def bell_numbers(upto: int) -> list[int]:
    """B_0..B_upto via the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(upto):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        bells.append(nxt[0])
        row = nxt
    return bells[: upto + 1]


def gen_motzkin_paths(n: int):
    """All balanced non-negative U/H/D strings of length n, recursively."""

    def rec(steps_left: int, height: int, acc: str):
        if steps_left == 0:
            if height == 0:
                yield acc
            return
        if height + 1 <= steps_left - 1:
            yield from rec(steps_left - 1, height + 1, acc + "U")
        if height <= steps_left - 1:
            yield from rec(steps_left - 1, height, acc + "H")
        if height > 0:
            yield from rec(steps_left - 1, height - 1, acc + "D")

    return rec(n, 0, "")


def brute_noncrossing(n: int) -> set[frozenset[tuple[int, int]]]:
    """Non-crossing matchings on [n] by filtering every subset of arcs."""
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    found = set()
    for bits in range(1 << len(pairs)):
        arcs = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        used = [v for arc in arcs for v in arc]
        if len(used) != len(set(used)):
            continue
        if any(a < c < b < d for a, b in arcs for c, d in arcs):
            continue
        found.add(frozenset(arcs))
    return found


def all_preferences(n: int):
    return product(range(1, n + 1), repeat=n)
