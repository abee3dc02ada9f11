"""Integer boundary operators, reduced homology, and connectivity
certificates.

All homology here is reduced: a c-component complex has betti c-1 in
degree 0, so "connectivity -1 iff nonempty with H~0 = 0" lines up with the
sphere-extension convention.  Degree-1 homology doubles as a sound
certificate that the space's connectivity is exactly 0: path-connectedness
plus H_1 != 0 forces a nontrivial loop, while nothing here ever claims the
converse for higher degrees (homological connectivity can overshoot the
homotopical one, and reports are flagged accordingly).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DEFAULT_FACE_BUDGET, FaceTable, SimplicialComplex, faces_up_to
from .errors import ParameterError
from .snf import IntegerMatrix, SnfResult, smith_normal_form

EMPTY_SENTINEL = -2  # "connectivity" of the empty complex

FLAG_EMPTY = "empty"
FLAG_NO_CERTIFICATE = "no-certificate"
FLAG_HOMOLOGICAL_ONLY = "homological-only"


@dataclass(frozen=True)
class HomologyGroup:
    """Reduced integral homology in one degree: free rank plus torsion
    coefficients in divisibility order."""

    dimension: int
    betti: int
    torsion: tuple[int, ...]

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion


@dataclass(frozen=True)
class ConnectivityCertificate:
    """Machine-checkable evidence about conn of a complex's realization.

    ``certified_conn_zero`` is sound: nonempty + path-connected + H_1 != 0
    pins the connectivity to exactly 0.  ``homological_connectivity`` is
    reported even when certification fails; the value is exact for -2, -1
    and 0 and only a homological estimate above that (flagged)."""

    nonempty: bool
    connected: bool
    h1: HomologyGroup
    certified_conn_zero: bool
    homological_connectivity: int | str
    flags: tuple[str, ...] = ()


class UnionFind:
    def __init__(self, items) -> None:
        self.parent = {x: x for x in items}
        self.count = len(self.parent)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def boundary_matrix(table: FaceTable, i: int) -> IntegerMatrix:
    """Simplicial boundary in degree i >= 1: rows are (i-1)-faces, columns
    are i-faces, and dropping the j-th vertex of a sorted face contributes
    (-1)**j."""
    if i < 1:
        raise ParameterError(f"boundary degree must be >= 1, got {i}")
    if i > table.max_dim:
        raise ParameterError(
            f"face table populated to dimension {table.max_dim}, need {i}"
        )
    lower = table.faces_of_dim(i - 1)
    upper = table.faces_of_dim(i)
    index = {face: pos for pos, face in enumerate(lower)}
    entries = []
    for col, face in enumerate(upper):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            entries.append((index[sub], col, -1 if j % 2 else 1))
    return IntegerMatrix.from_entries(len(lower), len(upper), entries)


def _boundary_snfs(table: FaceTable, top: int) -> list[SnfResult]:
    """SNF of every boundary operator up to degree ``top`` (1-indexed entry
    i holds the SNF of the degree-i boundary)."""
    snfs: list[SnfResult] = [SnfResult((), 0)]  # placeholder for degree 0
    for i in range(1, top + 1):
        if len(table.faces_of_dim(i)) == 0:
            snfs.append(SnfResult((), 0))
        else:
            snfs.append(smith_normal_form(boundary_matrix(table, i)))
    return snfs


def homology_profile(
    c: SimplicialComplex,
    max_dim: int,
    limit: int = DEFAULT_FACE_BUDGET,
    table: FaceTable | None = None,
) -> tuple[HomologyGroup, ...]:
    """Reduced homology in degrees 0..max_dim.

    betti_i = #(i-faces) - rank(boundary_i) - rank(boundary_{i+1}), with the
    augmentation map standing in for the degree-0 boundary; torsion in
    degree i comes from the invariant factors of boundary_{i+1}."""
    if max_dim < 0:
        raise ParameterError(f"max_dim must be >= 0, got {max_dim}")
    if table is None or table.max_dim < max_dim + 1:
        table = faces_up_to(c, max_dim + 1, limit)
    counts = [len(table.faces_of_dim(i)) for i in range(max_dim + 2)]
    snfs = _boundary_snfs(table, max_dim + 1)
    rank_aug = 1 if counts[0] else 0
    groups = []
    for i in range(max_dim + 1):
        lower_rank = rank_aug if i == 0 else snfs[i].rank
        upper = snfs[i + 1]
        groups.append(
            HomologyGroup(i, counts[i] - lower_rank - upper.rank, upper.torsion)
        )
    return tuple(groups)


def reduced_homology(
    c: SimplicialComplex, i: int, limit: int = DEFAULT_FACE_BUDGET
) -> HomologyGroup:
    if i < 0:
        raise ParameterError(f"homology degree must be >= 0, got {i}")
    return homology_profile(c, i, limit)[i]


def skeleton_components(table: FaceTable) -> int:
    """Number of components of the 1-skeleton, isolated complex vertices
    included."""
    uf = UnionFind(table.faces_of_dim(0))
    for edge in table.faces_of_dim(1):
        uf.union((edge[0],), (edge[1],))
    return uf.count


def certify_conn_zero(
    c: SimplicialComplex, limit: int = DEFAULT_FACE_BUDGET
) -> ConnectivityCertificate:
    """Certify conn = 0 for the complex's realization.

    Connectedness is established by union-find over the 1-skeleton and the
    nontrivial loop by H_1 != 0 (the abelianization shadow of a nontrivial
    fundamental group)."""
    zero_h1 = HomologyGroup(1, 0, ())
    if c.is_empty():
        return ConnectivityCertificate(
            nonempty=False,
            connected=False,
            h1=zero_h1,
            certified_conn_zero=False,
            homological_connectivity=EMPTY_SENTINEL,
            flags=(FLAG_EMPTY,),
        )
    table = faces_up_to(c, 2, limit)
    connected = skeleton_components(table) == 1
    h1 = homology_profile(c, 1, limit, table=table)[1]
    certified = connected and not h1.is_trivial()
    if certified:
        conn: int | str = 0
        flags: tuple[str, ...] = ()
    elif not connected:
        conn = -1
        flags = (FLAG_NO_CERTIFICATE,)
    else:
        # connected with trivial H_1: every reduced group vanishes through
        # degree 1, so homologically conn >= 1; homotopically unknown
        conn = ">=1"
        flags = (FLAG_NO_CERTIFICATE, FLAG_HOMOLOGICAL_ONLY)
    return ConnectivityCertificate(
        nonempty=True,
        connected=connected,
        h1=h1,
        certified_conn_zero=certified,
        homological_connectivity=conn,
        flags=flags,
    )


def homological_connectivity(
    c: SimplicialComplex, cap: int = 2, limit: int = DEFAULT_FACE_BUDGET
) -> int | str:
    """(min degree i <= cap with nonvanishing reduced homology) - 1, or
    ">=cap" when all degrees through cap vanish; the empty complex reports
    the -2 sentinel."""
    if cap < 0:
        raise ParameterError(f"cap must be >= 0, got {cap}")
    if c.is_empty():
        return EMPTY_SENTINEL
    for group in homology_profile(c, cap, limit):
        if not group.is_trivial():
            return group.dimension - 1
    return f">={cap}"
