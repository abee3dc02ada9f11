"""Exact chromatic number, clique number, and certificate checks.

The coloring solver is an exhaustive DSATUR branch-and-bound on the
k-colorability decision problem, with the maximum clique precolored and
new colors introduced in order (0, 1, 2, ...) to break color symmetry.
The clique solver is a branch-and-bound with greedy-coloring upper bounds
over a degeneracy vertex order.  Both are deterministic: saturation ties
break by degree, then by vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class ColoringWitness:
    """Proper coloring using every color in 0..k-1."""

    k: int
    assignment: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if len(self.assignment) != g.n:
            raise CertificateError("coloring length disagrees with vertex count")
        used = set(self.assignment)
        if g.n and used != set(range(self.k)):
            raise CertificateError(f"colors used {sorted(used)} != 0..{self.k - 1}")
        if g.n == 0 and self.k != 0:
            raise CertificateError("empty graph must have an empty coloring")
        for u, v in g.edges():
            if self.assignment[u] == self.assignment[v]:
                raise CertificateError(f"monochromatic edge ({u},{v})")


@dataclass(frozen=True)
class CliqueWitness:
    vertices: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if list(vs) != sorted(set(vs)):
            raise CertificateError("clique witness not sorted and duplicate-free")
        for i, u in enumerate(vs):
            if not (0 <= u < g.n):
                raise CertificateError(f"clique vertex {u} out of range")
            for v in vs[i + 1 :]:
                if not g.has_edge(u, v):
                    raise CertificateError(f"clique witness misses edge ({u},{v})")


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            masks[v] |= 1 << u
    return masks


def _degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex
    (smallest id on ties)."""
    degrees = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        v = min(
            (u for u in range(g.n) if not removed[u]),
            key=lambda u: (degrees[u], u),
        )
        removed[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                degrees[u] -= 1
    return order


# ---------------------------------------------------------------------------
# cliques


def max_clique(g: Graph) -> tuple[int, CliqueWitness]:
    """Maximum clique via branch and bound: candidates are greedily colored
    and a branch is cut when |current| + color bound cannot beat the best."""
    if g.n == 0:
        return 0, CliqueWitness(())
    masks = _adj_masks(g)
    search_order = list(reversed(_degeneracy_order(g)))
    best: list[int] = []

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        remaining = cand
        while remaining:
            color += 1
            avail = remaining
            while avail:
                v = next(u for u in search_order if avail >> u & 1)
                order.append(v)
                bounds.append(color)
                avail &= ~(masks[v] | 1 << v)
                remaining &= ~(1 << v)
        return order, bounds

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if cand == 0:
            if len(current) > len(best):
                best = current[:]
            return
        order, bounds = color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            expand(current, cand & masks[v])
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    witness = CliqueWitness(tuple(sorted(best)))
    return len(best), witness


def contains_triangle(g: Graph) -> CliqueWitness | None:
    """First triangle in lexicographic order, or None after an exhaustive
    scan of all adjacent pairs' common neighbors."""
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common:
            w = min(common)
            return CliqueWitness(tuple(sorted((u, v, w))))
    return None


def verify_biclique_certificate(g: Graph, a, b) -> bool:
    """True iff every vertex of ``a`` is adjacent to every vertex of ``b``
    (edges inside either side are permitted: containment as a subgraph)."""
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise CertificateError("biclique sides must be nonempty")
    if sa & sb:
        raise CertificateError(f"biclique sides overlap: {sorted(sa & sb)}")
    for v in sa | sb:
        if not (0 <= v < g.n):
            raise CertificateError(f"biclique vertex {v} out of range")
    return all(g.has_edge(u, v) for u in sa for v in sb)


# ---------------------------------------------------------------------------
# coloring


def _select_dsatur(
    g: Graph, colors: list[int], neighbor_colors: list[int]
) -> int:
    """Uncolored vertex with maximum saturation; ties by degree, then id."""
    chosen = -1
    key = (-1, -1)
    for v in range(g.n):
        if colors[v] != -1:
            continue
        sat = neighbor_colors[v].bit_count()
        cand = (sat, g.degree(v))
        if chosen == -1 or cand > key:
            chosen, key = v, cand
    return chosen


def greedy_dsatur_bound(g: Graph) -> tuple[int, ColoringWitness]:
    """Greedy DSATUR coloring; its color count upper-bounds the chromatic
    number."""
    if g.n == 0:
        return 0, ColoringWitness(0, ())
    colors = [-1] * g.n
    neighbor_colors = [0] * g.n
    used = 0
    for _ in range(g.n):
        v = _select_dsatur(g, colors, neighbor_colors)
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
        for u in g.adj[v]:
            neighbor_colors[u] |= 1 << c
    witness = ColoringWitness(used, tuple(colors))
    return used, witness


def is_k_colorable(
    g: Graph, k: int, clique: tuple[int, ...] | None = None
) -> ColoringWitness | None:
    """Exhaustive k-colorability decision.  Returns a proper coloring
    (normalized so that exactly its ``k`` colors are used) or None when no
    proper k-coloring exists."""
    if k < 0:
        raise ParameterError(f"color count must be >= 0, got {k}")
    if g.n == 0:
        return ColoringWitness(0, ())
    if k == 0:
        return None
    if g.m == 0:
        return ColoringWitness(1, (0,) * g.n)
    if clique is None:
        _, cw = max_clique(g)
        clique = cw.vertices
    if len(clique) > k:
        return None

    colors = [-1] * g.n
    neighbor_colors = [0] * g.n
    for c, v in enumerate(clique):
        colors[v] = c
        for u in g.adj[v]:
            neighbor_colors[u] |= 1 << c
    uncolored = g.n - len(clique)

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        changed = []
        bit = 1 << c
        for u in g.adj[v]:
            if colors[u] == -1 and not neighbor_colors[u] & bit:
                neighbor_colors[u] |= bit
                changed.append(u)
        return changed

    def unassign(v: int, c: int, changed: list[int]) -> None:
        colors[v] = -1
        bit = 1 << c
        for u in changed:
            neighbor_colors[u] &= ~bit

    def search(remaining: int, palette: int) -> bool:
        # palette = number of colors in use; a fresh color may only be
        # introduced as palette itself (symmetry breaking)
        if remaining == 0:
            return True
        v = _select_dsatur(g, colors, neighbor_colors)
        top = min(k, palette + 1)
        for c in range(top):
            if neighbor_colors[v] >> c & 1:
                continue
            changed = assign(v, c)
            if search(remaining - 1, max(palette, c + 1)):
                return True
            unassign(v, c, changed)
        return False

    if not search(uncolored, len(clique)):
        return None
    used = max(colors) + 1
    return ColoringWitness(used, tuple(colors))


def chromatic_number(g: Graph) -> tuple[int, ColoringWitness]:
    """Exact chromatic number with a proper coloring as witness.  Searches
    k upward from the clique number; the DSATUR greedy bound closes the
    interval from above."""
    if g.n == 0:
        return 0, ColoringWitness(0, ())
    size, cw = max_clique(g)
    upper, greedy_witness = greedy_dsatur_bound(g)
    for k in range(size, upper):
        witness = is_k_colorable(g, k, clique=cw.vertices)
        if witness is not None:
            return witness.k, witness
    return upper, greedy_witness
