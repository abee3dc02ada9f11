"""Exact Smith normal form over the integers.

Two elimination paths compute the same invariant factors:

* a dense classical elimination (minimum-absolute-value pivot, Euclidean
  row/column reduction, divisibility sweep) that can also track the
  unimodular transforms U, V with U*M*V = diag(d_1..d_r);
* a sparse fast path for the large, very sparse boundary matrices from
  simplicial homology: entries of absolute value 1 are pivoted first,
  picked by least Markowitz fill, and only the (typically tiny) residual
  goes through the dense routine.

Everything is plain Python ints, so intermediate growth is exact.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

DENSE_CUTOFF = 4096  # rows*cols at or below this always uses the dense path


@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse integer matrix: sorted (row, col, value) triples, value != 0."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    @staticmethod
    def from_dense(dense: list[list[int]]) -> "IntegerMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = tuple(
            (r, c, dense[r][c])
            for r in range(rows)
            for c in range(cols)
            if dense[r][c]
        )
        return IntegerMatrix(rows, cols, entries)

    @staticmethod
    def from_entries(rows: int, cols: int, entries) -> "IntegerMatrix":
        return IntegerMatrix(
            rows, cols, tuple(sorted((r, c, v) for r, c, v in entries if v))
        )

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    @property
    def nnz(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r, all positive.

    When transforms were requested, ``row_transform * M * col_transform``
    equals the diagonal matrix of the factors and both transforms are
    unimodular.
    """

    invariant_factors: tuple[int, ...]
    rank: int
    row_transform: tuple[tuple[int, ...], ...] | None = None
    col_transform: tuple[tuple[int, ...], ...] | None = None

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def smith_normal_form(m: IntegerMatrix, want_transforms: bool = False) -> SnfResult:
    if want_transforms or m.rows * m.cols <= DENSE_CUTOFF:
        return _dense_snf(m, want_transforms)
    return _sparse_snf(m)


# ---------------------------------------------------------------------------
# dense classical elimination


def _dense_snf(m: IntegerMatrix, track: bool) -> SnfResult:
    a = m.to_dense()
    nr, nc = m.rows, m.cols
    u = [[int(i == j) for j in range(nr)] for i in range(nr)] if track else None
    v = [[int(i == j) for j in range(nc)] for i in range(nc)] if track else None

    def swap_rows(i: int, j: int) -> None:
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        if track:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, factor: int) -> None:
        # row[dst] += factor * row[src]
        arow, srow = a[dst], a[src]
        for j in range(nc):
            if srow[j]:
                arow[j] += factor * srow[j]
        if track:
            urow, usrow = u[dst], u[src]
            for j in range(nr):
                if usrow[j]:
                    urow[j] += factor * usrow[j]

    def add_col(dst: int, src: int, factor: int) -> None:
        for row in a:
            if row[src]:
                row[dst] += factor * row[src]
        if track:
            for row in v:
                if row[src]:
                    row[dst] += factor * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        if track:
            u[i] = [-x for x in u[i]]

    t = 0
    while t < nr and t < nc:
        # minimum-|value| pivot in the trailing submatrix, smallest (i, j) on ties
        pi = pj = -1
        pv = 0
        for i in range(t, nr):
            for j in range(t, nc):
                val = abs(a[i][j])
                if val and (pv == 0 or val < pv):
                    pv, pi, pj = val, i, j
        if pv == 0:
            break
        swap_rows(t, pi)
        swap_cols(t, pj)

        while True:
            # clear column t below the pivot; a nonzero remainder becomes
            # the new, strictly smaller pivot
            restart = False
            for i in range(t + 1, nr):
                if a[i][t] == 0:
                    continue
                q, r = divmod(a[i][t], a[t][t])
                add_row(i, t, -q)
                if r:
                    swap_rows(t, i)
                    restart = True
                    break
            if restart:
                continue
            # clear row t right of the pivot
            for j in range(t + 1, nc):
                if a[t][j] == 0:
                    continue
                q, r = divmod(a[t][j], a[t][t])
                add_col(j, t, -q)
                if r:
                    swap_cols(t, j)
                    restart = True
                    break
            if restart:
                continue
            # pivot must divide the whole remaining submatrix; if not, fold
            # the offending row into row t and keep reducing (gcd shrinks)
            offender = -1
            d = a[t][t]
            for i in range(t + 1, nr):
                if any(a[i][j] % d for j in range(t + 1, nc)):
                    offender = i
                    break
            if offender >= 0:
                add_row(t, offender, 1)
                continue
            break

        if a[t][t] < 0:
            negate_row(t)
        t += 1

    factors = tuple(a[i][i] for i in range(t))
    return SnfResult(
        invariant_factors=factors,
        rank=t,
        row_transform=tuple(tuple(row) for row in u) if track else None,
        col_transform=tuple(tuple(row) for row in v) if track else None,
    )


# ---------------------------------------------------------------------------
# sparse unit-pivot reduction


def _sparse_snf(m: IntegerMatrix) -> SnfResult:
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for r, c, val in m.entries:
        rows.setdefault(r, {})[c] = val
        cols.setdefault(c, set()).add(r)

    # lazy min-heap of (markowitz cost, row, col) over entries of value +-1;
    # stale entries are revalidated on pop, so pivot choice is deterministic
    heap: list[tuple[int, int, int]] = []

    def cost(r: int, c: int) -> int:
        return (len(rows[r]) - 1) * (len(cols[c]) - 1)

    for r, c, val in m.entries:
        if val in (1, -1):
            heap.append((cost(r, c), r, c))
    heapq.heapify(heap)

    unit_pivots = 0
    while heap:
        popped_cost, r, c = heapq.heappop(heap)
        row = rows.get(r)
        if row is None:
            continue
        val = row.get(c)
        if val not in (1, -1):
            continue
        current = cost(r, c)
        if current != popped_cost:
            heapq.heappush(heap, (current, r, c))
            continue

        unit_pivots += 1
        piv_row = rows.pop(r)
        p = piv_row.pop(c)
        cols[c].discard(r)
        for c2 in piv_row:
            cols[c2].discard(r)
        touched = sorted(cols.pop(c, ()))
        for r2 in touched:
            row2 = rows[r2]
            q = row2.pop(c) * p  # multiplier so that column c of r2 vanishes
            for c2, val2 in piv_row.items():
                new = row2.get(c2, 0) - q * val2
                if new == 0:
                    if c2 in row2:
                        del row2[c2]
                        cols[c2].discard(r2)
                else:
                    row2[c2] = new
                    cols[c2].add(r2)
                    if new in (1, -1):
                        heapq.heappush(heap, (cost(r2, c2), r2, c2))
            if not row2:
                del rows[r2]

    if not rows:
        return SnfResult((1,) * unit_pivots, unit_pivots)

    # residual has no +-1 entries left; finish densely
    row_ids = sorted(rows)
    col_ids = sorted({c for row in rows.values() for c in row})
    col_pos = {c: j for j, c in enumerate(col_ids)}
    dense = [[0] * len(col_ids) for _ in row_ids]
    for i, r in enumerate(row_ids):
        for c, val in rows[r].items():
            dense[i][col_pos[c]] = val
    rest = _dense_snf(IntegerMatrix.from_dense(dense), track=False)
    return SnfResult(
        (1,) * unit_pivots + rest.invariant_factors,
        unit_pivots + rest.rank,
    )
