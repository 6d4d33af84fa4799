"""Dense square matrices of arbitrary-precision integers.

Everything here is exact: a fraction-free elimination determinant, an
inclusion-exclusion permanent with Gray-code row-sum updates, principal
and complementary submatrix extraction, and the three entry-masking
constructions the identity verifiers are built on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

SUBMATRIX_MODES = ("principal", "complement", "delete")
MASK_KINDS = ("entry", "symmetric", "cross")


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable n-by-n integer matrix; n = 0 is the empty matrix."""

    entries: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError(f"row of length {len(row)} in an order-{n} matrix")
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise TypeError(f"non-integer matrix entry {value!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExactMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def is_symmetric(self) -> bool:
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.n) for j in range(i + 1, self.n))

    def scaled_identity_minus(self, x0: int) -> "ExactMatrix":
        """The matrix x0*I - M."""
        e = self.entries
        return ExactMatrix(
            tuple(
                tuple(x0 - e[i][j] if i == j else -e[i][j] for j in range(self.n))
                for i in range(self.n)
            )
        )

    def to_json(self) -> dict:
        """JSON form with decimal-string entries so precision survives transport."""
        return {"n": self.n, "entries": [[str(v) for v in row] for row in self.entries]}

    @staticmethod
    def from_json(obj) -> "ExactMatrix":
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("matrix JSON must be an object with an 'entries' field")
        rows = [[int(v) for v in row] for row in obj["entries"]]
        matrix = ExactMatrix.from_rows(rows)
        if "n" in obj and int(obj["n"]) != matrix.n:
            raise ValueError(f"declared order {obj['n']} does not match {matrix.n} rows")
        return matrix


def determinant(matrix: ExactMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All intermediate values stay integral; the empty matrix has
    determinant 1.
    """
    n = matrix.n
    if n == 0:
        return 1
    a = [list(row) for row in matrix.entries]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if a[col][col] == 0:
            for r in range(col + 1, n):
                if a[r][col]:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[col][col]
        for i in range(col + 1, n):
            row_i = a[i]
            row_c = a[col]
            factor = row_i[col]
            for j in range(col + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_c[j]) // prev
            row_i[col] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def permanent(matrix: ExactMatrix) -> int:
    """Exact permanent by inclusion-exclusion over column subsets.

    Column subsets are visited in Gray-code order so each step updates the
    n running row sums by a single entry; the empty matrix has permanent 1.
    """
    n = matrix.n
    if n == 0:
        return 1
    rows = matrix.entries
    sums = [0] * n
    gray = 0
    sign = 1
    total = 0
    for counter in range(1, 1 << n):
        j = (counter & -counter).bit_length() - 1
        bit = 1 << j
        gray ^= bit
        if gray & bit:
            for i in range(n):
                sums[i] += rows[i][j]
        else:
            for i in range(n):
                sums[i] -= rows[i][j]
        sign = -sign
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += sign * prod
    return total if n % 2 == 0 else -total


def _check_index_seq(indices: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    out = tuple(indices)
    for pos, idx in enumerate(out):
        if isinstance(idx, bool) or not isinstance(idx, int):
            raise TypeError(f"{what} index {idx!r} is not an integer")
        if not 0 <= idx < n:
            raise IndexError(f"{what} index {idx} out of range for order {n}")
        if pos and idx <= out[pos - 1]:
            raise ValueError(f"{what} indices must be strictly increasing, got {out}")
    return out


def submatrix(
    matrix: ExactMatrix,
    mode: str,
    rows: Sequence[int],
    cols: Sequence[int] | None = None,
) -> ExactMatrix:
    """Extract a principal, complementary, or row/column-deleted submatrix.

    principal:  keep exactly the rows and columns in `rows` (cols must match).
    complement: keep everything outside `rows` (cols must match).
    delete:     drop the rows in `rows` and the columns in `cols`.
    """
    if mode not in SUBMATRIX_MODES:
        raise ValueError(f"unknown submatrix mode {mode!r}")
    n = matrix.n
    row_idx = _check_index_seq(rows, n, "row")
    col_idx = row_idx if cols is None else _check_index_seq(cols, n, "column")
    if mode in ("principal", "complement"):
        if col_idx != row_idx:
            raise ValueError(f"{mode} submatrix requires identical row and column sets")
        keep = row_idx if mode == "principal" else tuple(
            i for i in range(n) if i not in set(row_idx)
        )
        keep_rows = keep_cols = keep
    else:
        drop_r, drop_c = set(row_idx), set(col_idx)
        if len(drop_r) != len(drop_c):
            raise ValueError("deleting unequal numbers of rows and columns")
        keep_rows = tuple(i for i in range(n) if i not in drop_r)
        keep_cols = tuple(j for j in range(n) if j not in drop_c)
    e = matrix.entries
    return ExactMatrix(tuple(tuple(e[i][j] for j in keep_cols) for i in keep_rows))


def mask(matrix: ExactMatrix, kind: str, i: int, j: int) -> ExactMatrix:
    """Zero out entries around position (i, j).

    entry:     zero the single entry (i, j).
    symmetric: zero both (i, j) and (j, i).
    cross:     keep (i, j) but zero every other entry of row i and column j.
    """
    if kind not in MASK_KINDS:
        raise ValueError(f"unknown mask kind {kind!r}")
    n = matrix.n
    for idx in (i, j):
        if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < n:
            raise IndexError(f"mask index {idx!r} out of range for order {n}")
    e = matrix.entries
    if kind == "entry":
        zapped = {(i, j)}
        return ExactMatrix(
            tuple(
                tuple(0 if (r, c) in zapped else e[r][c] for c in range(n))
                for r in range(n)
            )
        )
    if kind == "symmetric":
        zapped = {(i, j), (j, i)}
        return ExactMatrix(
            tuple(
                tuple(0 if (r, c) in zapped else e[r][c] for c in range(n))
                for r in range(n)
            )
        )
    return ExactMatrix(
        tuple(
            tuple(
                e[r][c] if (r, c) == (i, j) or (r != i and c != j) else 0
                for c in range(n)
            )
            for r in range(n)
        )
    )
