"""Neighborhood complexes and facet-wise simplicial complexes.

Complexes are stored by their maximal faces only; lower faces are
enumerated on demand per dimension.  Certifying the degree-0 connectivity
bound needs faces of dimension <= 2, which stays polynomial even when the
full closure would be exponential (one side of the biclique complex alone
has 2^m - 1 faces).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import BudgetExceededError, InputError, ParameterError
from .graphs import Graph

DEFAULT_FACE_BUDGET = 10_000_000

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets (an antichain of
    sorted vertex tuples).  ``num_vertices`` sizes the ground set; unused
    ids are allowed and contribute nothing."""

    num_vertices: int
    facets: tuple[Face, ...]

    @staticmethod
    def from_faces(num_vertices: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from arbitrary faces: dedupe, drop empties, keep only the
        inclusion-maximal ones."""
        cleaned: set[Face] = set()
        for face in faces:
            tface = tuple(sorted(set(face)))
            if not tface:
                continue
            if tface[0] < 0 or tface[-1] >= num_vertices:
                raise ParameterError(
                    f"face {tface} out of range for ground set 0..{num_vertices - 1}"
                )
            cleaned.add(tface)
        by_size = sorted(cleaned, key=len, reverse=True)
        maximal: list[Face] = []
        maximal_sets: list[frozenset[int]] = []
        for face in by_size:
            fs = frozenset(face)
            if not any(fs <= other for other in maximal_sets):
                maximal.append(face)
                maximal_sets.append(fs)
        return SimplicialComplex(num_vertices, tuple(sorted(maximal)))

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 when empty."""
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def validate(self) -> None:
        seen = set(self.facets)
        if len(seen) != len(self.facets):
            raise ParameterError("duplicate facets")
        for face in self.facets:
            if not face:
                raise ParameterError("empty facet")
            if list(face) != sorted(set(face)):
                raise ParameterError(f"facet {face} not sorted and duplicate-free")
            if face[0] < 0 or face[-1] >= self.num_vertices:
                raise ParameterError(f"facet {face} out of ground-set range")
        for a, b in itertools.permutations(self.facets, 2):
            if set(a) <= set(b):
                raise ParameterError(f"facet {a} contained in facet {b}")


def neighborhood_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are the vertex sets with a common neighbor; its
    facets are the maximal neighbor sets.  Isolated vertices contribute
    nothing."""
    return SimplicialComplex.from_faces(
        g.n, (sorted(g.adj[v]) for v in range(g.n) if g.adj[v])
    )


@dataclass(frozen=True)
class FaceTable:
    """All faces up to a requested dimension, sorted lexicographically per
    dimension to give deterministic boundary-matrix indexing."""

    max_dim: int
    faces: tuple[tuple[Face, ...], ...]

    def faces_of_dim(self, i: int) -> tuple[Face, ...]:
        if 0 <= i <= self.max_dim:
            return self.faces[i]
        return ()

    def count(self) -> int:
        return sum(len(level) for level in self.faces)


def faces_up_to(
    c: SimplicialComplex, d: int, limit: int = DEFAULT_FACE_BUDGET
) -> FaceTable:
    """Enumerate every face of dimension <= d.  Aborts with a size-guard
    error naming the offending dimension once the total face count passes
    ``limit``."""
    if d < 0:
        raise ParameterError(f"dimension bound must be >= 0, got {d}")
    if limit < 1:
        raise ParameterError(f"face budget must be >= 1, got {limit}")
    levels: list[set[Face]] = [set() for _ in range(d + 1)]
    total = 0
    for size in range(1, d + 2):
        level = levels[size - 1]
        for facet in c.facets:
            if len(facet) < size:
                continue
            for face in itertools.combinations(facet, size):
                if face not in level:
                    level.add(face)
                    total += 1
                    if total > limit:
                        raise BudgetExceededError(dimension=size - 1, limit=limit)
    return FaceTable(d, tuple(tuple(sorted(level)) for level in levels))


def euler_characteristic(
    c: SimplicialComplex, limit: int = DEFAULT_FACE_BUDGET
) -> int:
    """Alternating sum of face counts over the full (finite) enumeration."""
    if c.is_empty():
        return 0
    table = faces_up_to(c, c.dim, limit)
    return sum(
        (-1) ** i * len(table.faces_of_dim(i)) for i in range(table.max_dim + 1)
    )


def cone(c: SimplicialComplex) -> SimplicialComplex:
    """Cone with a fresh apex joined to every facet; acyclic by construction.
    The cone over the empty complex is a single point."""
    apex = c.num_vertices
    if c.is_empty():
        return SimplicialComplex(apex + 1, ((apex,),))
    return SimplicialComplex(
        apex + 1, tuple(face + (apex,) for face in c.facets)
    )


# ---------------------------------------------------------------------------
# facet-list text format: one face per line, 0-based ids, '#' comments


def parse_faces(lines, num_vertices: int | None = None, source: str = "<input>") -> SimplicialComplex:
    faces: list[list[int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"{source}:{lineno}: non-integer vertex id in {line!r}")
        if any(v < 0 for v in ids):
            raise InputError(f"{source}:{lineno}: negative vertex id")
        faces.append(ids)
    n = num_vertices
    if n is None:
        n = 1 + max((max(f) for f in faces if f), default=-1)
    return SimplicialComplex.from_faces(n, faces)


def read_facets(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_faces(handle, source=path)


def format_facets(c: SimplicialComplex) -> str:
    lines = [" ".join(str(v) for v in face) for face in sorted(c.facets)]
    return "\n".join(lines) + ("\n" if lines else "")


def write_facets(c: SimplicialComplex, target: str | IO[str]) -> None:
    text = format_facets(c)
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        target.write(text)
