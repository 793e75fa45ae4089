#!/usr/bin/env python3
"""Independent census of small lambda terms.

Counts the terms with at most N AST nodes whose variable and binder names
are drawn from a fixed alphabet of k names. Two independent methods are
used and cross-checked:

  1. a recurrence:  C(1) = k
                    C(n) = k*C(n-1) + sum_{i=1..n-2} C(i)*C(n-1-i)
     (Abs contributes one node plus a body; App one node plus two subterms)

  2. explicit enumeration of the term trees themselves.

The numbers printed here are frozen into the test suite; the C++
enumerator must reproduce them exactly.
"""

import itertools
import sys


def counts_recurrence(max_nodes: int, k: int) -> list[int]:
    c = [0] * (max_nodes + 1)
    if max_nodes >= 1:
        c[1] = k
    for n in range(2, max_nodes + 1):
        total = k * c[n - 1]
        for i in range(1, n - 1):
            total += c[i] * c[n - 1 - i]
        c[n] = total
    return c


def enumerate_terms(max_nodes: int, names: list[str]):
    """All term trees with exactly n nodes, for n = 1..max_nodes."""
    exact: list[list] = [[] for _ in range(max_nodes + 1)]
    if max_nodes >= 1:
        exact[1] = [("var", x) for x in names]
    for n in range(2, max_nodes + 1):
        level = []
        for i in range(1, n - 1):
            level.extend(
                ("app", f, a)
                for f, a in itertools.product(exact[i], exact[n - 1 - i])
            )
        for x in names:
            level.extend(("abs", x, b) for b in exact[n - 1])
        exact[n] = level
    return exact


def main() -> int:
    names2 = ["x", "y"]
    names1 = ["x"]

    for max_nodes, names in [(4, names2), (3, names2), (2, names1)]:
        k = len(names)
        rec = counts_recurrence(max_nodes, k)
        exact = enumerate_terms(max_nodes, names)
        brute = [len(level) for level in exact]
        for n in range(1, max_nodes + 1):
            assert rec[n] == brute[n], (max_nodes, names, n, rec[n], brute[n])
        # enumeration yields no duplicates
        for level in exact:
            assert len(set(map(repr, level))) == len(level)
        cum = sum(rec[1:])
        print(f"names={names} max_nodes={max_nodes}: "
              f"per-size={rec[1:]} cumulative={cum} pairs={cum * cum}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
