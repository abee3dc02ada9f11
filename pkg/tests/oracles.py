"""Independent brute-force oracles used to pin expected values.

Nothing here shares code paths with the library: the chromatic oracle
enumerates partitions into independent sets, the clique oracle enumerates
all vertex subsets, the SNF oracle goes through gcds of minors, and the
determinant is a plain Laplace expansion.
"""

from __future__ import annotations

import itertools
from math import gcd


def brute_force_chromatic(g) -> int:
    """Fewest blocks over all partitions of the vertices into independent
    sets, by exhaustive backtracking."""
    if g.n == 0:
        return 0
    best = g.n
    blocks: list[list[int]] = []

    def extend(v: int) -> None:
        nonlocal best
        if len(blocks) >= best:
            return
        if v == g.n:
            best = len(blocks)
            return
        for block in blocks:
            if all(v not in g.adj[u] for u in block):
                block.append(v)
                extend(v + 1)
                block.pop()
        blocks.append([v])
        extend(v + 1)
        blocks.pop()

    extend(0)
    return best


def brute_force_is_k_colorable(g, k: int) -> bool:
    """Literal enumeration of all k**n assignments."""
    for assignment in itertools.product(range(k), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in g.edges()):
            return True
    return g.n == 0


def brute_force_max_clique(g) -> int:
    best = 0
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if len(members) <= best:
            continue
        if all(
            v in g.adj[u] for u, v in itertools.combinations(members, 2)
        ):
            best = len(members)
    return best


def brute_force_triangle_free(g) -> bool:
    return not any(
        w in g.adj[u] and w in g.adj[v]
        for u, v in g.edges()
        for w in range(g.n)
    )


def determinant(matrix: list[list[int]]) -> int:
    """Laplace expansion along the first row; exact for integer input."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j, head in enumerate(matrix[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total += (-1) ** j * head * determinant(minor)
    return total


def minor_gcd_invariant_factors(dense: list[list[int]]) -> tuple[int, ...]:
    """Invariant factors via d_k = gcd(k x k minors) / gcd((k-1) x (k-1)
    minors); the textbook characterization, independent of elimination."""
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    factors = []
    previous = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in itertools.combinations(range(rows), k):
            for csel in itertools.combinations(range(cols), k):
                sub = [[dense[r][c] for c in csel] for r in rsel]
                g = gcd(g, abs(determinant(sub)))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return tuple(factors)


def mat_mult(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                aik = a[i][k]
                for j in range(cols):
                    if b[k][j]:
                        out[i][j] += aik * b[k][j]
    return out


def is_zero_matrix(a: list[list[int]]) -> bool:
    return all(all(x == 0 for x in row) for row in a)
