"""Finite simple graphs and the constructions the verification pipelines run on.

Vertex ids are contiguous 0-based integers everywhere.  Composite
constructions (gadget, corollary graph) return explicit offset information
so that witnesses located in a building block can be found again in the
composite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor set of ``v``.  Instances are immutable; all
    operations in this package are pure functions over them.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"loop at vertex {u} not allowed")
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in sets))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        ]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def validate(self) -> None:
        """Check symmetry, irreflexivity and id range; raise on violation."""
        if len(self.adj) != self.n:
            raise ParameterError("adjacency length disagrees with vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not (0 <= u < self.n):
                    raise ParameterError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ParameterError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ParameterError(f"asymmetric edge ({v},{u})")


# ---------------------------------------------------------------------------
# standard families


def complete_graph(p: int) -> Graph:
    if p < 1:
        raise ParameterError(f"complete graph needs p >= 1, got {p}")
    return Graph.from_edges(p, itertools.combinations(range(p), 2))


def complete_bipartite(l: int, m: int) -> Graph:
    """K_{l,m} with left part 0..l-1 and right part l..l+m-1."""
    if l < 1 or m < 1:
        raise ParameterError(f"complete bipartite needs l, m >= 1, got ({l},{m})")
    return Graph.from_edges(
        l + m, ((u, l + v) for u in range(l) for v in range(m))
    )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3 to stay a simple graph, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def kneser_graph(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of {0..n-1} in lexicographic order,
    adjacent iff disjoint."""
    if k < 1 or n < 2 * k:
        raise ParameterError(f"kneser needs n >= 2k >= 2, got (n={n}, k={k})")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not (subsets[i] & subsets[j])
    ]
    return Graph.from_edges(len(subsets), edges)


def construct_family(family: str, **params: int) -> Graph:
    """Dispatch helper mirroring the CLI's construct vocabulary."""
    builders = {
        "complete": lambda: complete_graph(params["p"]),
        "complete_bipartite": lambda: complete_bipartite(params["l"], params["m"]),
        "cycle": lambda: cycle_graph(params["n"]),
        "kneser": lambda: kneser_graph(params["n"], params["k"]),
    }
    if family not in builders:
        raise ParameterError(f"unknown family {family!r}")
    try:
        return builders[family]()
    except KeyError as missing:
        raise ParameterError(f"family {family!r} needs parameter {missing}")


# ---------------------------------------------------------------------------
# chromatic-number-raising constructions


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: original vertices 0..n-1, shadow vertices
    n..2n-1 (shadow i adjacent to the neighbors of i), apex 2n adjacent to
    every shadow.  Raises the chromatic number by one without creating
    triangles."""
    if g.n < 1:
        raise ParameterError("mycielskian needs at least one vertex")
    n = g.n
    edges: list[Edge] = list(g.edges())
    for v in range(n):
        for u in sorted(g.adj[v]):
            edges.append((n + v, u))
    apex = 2 * n
    edges.extend((n + v, apex) for v in range(n))
    return Graph.from_edges(2 * n + 1, edges)


def triangle_free_chromatic(q: int) -> Graph:
    """Triangle-free graph with chromatic number exactly q: the (q-2)-fold
    Mycielski iterate of a single edge."""
    if q < 2:
        raise ParameterError(f"target chromatic number must be >= 2, got {q}")
    g = complete_graph(2)
    for _ in range(q - 2):
        g = mycielskian(g)
    return g


# ---------------------------------------------------------------------------
# the bridged gadget


@dataclass(frozen=True)
class GadgetSpec:
    """Two graphs to be joined by a two-edge bridge through a fresh vertex.

    ``x`` and ``y`` are the attachment vertices inside ``h`` and ``k``.
    Connectivity / non-bipartiteness of the parts is only required by the
    wedge verifier, not by the construction itself.
    """

    h: Graph
    x: int
    k: Graph
    y: int

    def validate(self) -> None:
        if not (0 <= self.x < self.h.n):
            raise ParameterError(f"attachment vertex x={self.x} not in first graph")
        if not (0 <= self.y < self.k.n):
            raise ParameterError(f"attachment vertex y={self.y} not in second graph")


@dataclass(frozen=True)
class GadgetResult:
    graph: Graph
    z: int
    h_vertices: range
    k_vertices: range
    x: int  # position of the first attachment vertex in the composite
    y: int  # position of the second attachment vertex in the composite


def build_gadget(spec: GadgetSpec) -> GadgetResult:
    """Disjoint copies of the two graphs plus a bridge vertex z adjacent to
    exactly the two attachment vertices.  First graph keeps its ids, second
    graph is shifted by ``h.n``, and ``z = h.n + k.n``."""
    spec.validate()
    off = spec.h.n
    z = spec.h.n + spec.k.n
    edges: list[Edge] = list(spec.h.edges())
    edges.extend((off + u, off + v) for u, v in spec.k.edges())
    edges.append((spec.x, z))
    edges.append((off + spec.y, z))
    return GadgetResult(
        graph=Graph.from_edges(z + 1, edges),
        z=z,
        h_vertices=range(0, spec.h.n),
        k_vertices=range(off, off + spec.k.n),
        x=spec.x,
        y=off + spec.y,
    )


# ---------------------------------------------------------------------------
# the separation construction


@dataclass(frozen=True)
class CorollaryParams:
    """Parameters of the separation graph: biclique sides l, m; clique size
    p; target chromatic number q."""

    l: int
    m: int
    p: int
    q: int

    def validate(self) -> None:
        if self.l < 1 or self.m < 1:
            raise ParameterError(f"biclique sides must be positive, got ({self.l},{self.m})")
        if self.p < 2:
            raise ParameterError(f"clique size must be >= 2, got {self.p}")
        if self.q < self.p:
            raise ParameterError(f"need p <= q, got p={self.p}, q={self.q}")
        if self.q < 3:
            raise ParameterError(
                "q >= 3 required: with q = 2 the block graph is bipartite and "
                "the wedge verifier's hypotheses fail"
            )


@dataclass(frozen=True)
class CorollaryResult:
    graph: Graph
    biclique_left: tuple[int, ...]
    biclique_right: tuple[int, ...]
    clique: tuple[int, ...]
    s_first: int
    s_second: int
    z: int
    block_size: int  # vertex count of one composite block


def _corollary_block(params: CorollaryParams) -> Graph:
    """One block: K_p, K_{l,m} and the triangle-free q-chromatic graph,
    glued by the two edges {a,c} and {b,d} with a=0, b=1 in the clique,
    c = first biclique vertex, d = first vertex of the triangle-free part."""
    clique = complete_graph(params.p)
    biclique = complete_bipartite(params.l, params.m)
    tfree = triangle_free_chromatic(params.q)
    off_b = clique.n
    off_t = clique.n + biclique.n
    edges: list[Edge] = list(clique.edges())
    edges.extend((off_b + u, off_b + v) for u, v in biclique.edges())
    edges.extend((off_t + u, off_t + v) for u, v in tfree.edges())
    edges.append((0, off_b))      # a-c
    edges.append((1, off_t))      # b-d
    return Graph.from_edges(off_t + tfree.n, edges)


def build_corollary_graph(params: CorollaryParams) -> CorollaryResult:
    """Gadget over two disjoint copies of the block graph, bridged at vertex
    0 of each copy.  Returns witness locations: the biclique sides of the
    first copy, the clique of the first copy, both designated vertices, and
    the bridge."""
    params.validate()
    block = _corollary_block(params)
    built = build_gadget(GadgetSpec(h=block, x=0, k=block, y=0))
    left = tuple(range(params.p, params.p + params.l))
    right = tuple(range(params.p + params.l, params.p + params.l + params.m))
    return CorollaryResult(
        graph=built.graph,
        biclique_left=left,
        biclique_right=right,
        clique=tuple(range(params.p)),
        s_first=built.x,
        s_second=built.y,
        z=built.z,
        block_size=block.n,
    )


# ---------------------------------------------------------------------------
# structure checks


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for u in sorted(g.adj[v]):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """True iff the graph has at most one component (empty graph counts as
    connected)."""
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """BFS 2-coloring.  Returns ``(True, coloring)`` with colors in {0,1},
    or ``(False, walk)`` where ``walk`` is an odd closed walk given as a
    vertex sequence whose first and last entries coincide."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in sorted(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    return False, _odd_closed_walk(parent, v, u)
    return True, color


def _odd_closed_walk(parent: list[int], u: int, v: int) -> list[int]:
    def to_root(w: int) -> list[int]:
        path = [w]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        return path

    up = to_root(u)  # u .. root
    down = to_root(v)  # v .. root
    # root .. u, then the conflicting edge to v, then v .. root
    return list(reversed(up)) + down
