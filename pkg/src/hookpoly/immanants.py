"""Hook immanants of exact integer matrices.

Three routes are provided on purpose.  `immanant_bruteforce` is the
definitional permutation sum and exists to check everything else.
`hook_immanant` follows the alternating recursion

    d_k(B) = sum over (k-1)-subsets a of per B[a] * det B(a)  -  d_{k-1}(B)

with d_1 = det.  For a single small k on a large matrix the subset sum is
evaluated literally with the permanent/determinant kernels.  Otherwise all
n values d_1..d_n are produced at once from tables of principal-minor
permanents and determinants over every vertex subset, built by a
cycle-partition dynamic program: a permutation of a subset decomposes into
cycles, the cycle through the subset's smallest element is peeled off, and
path sums with fixed starting point enumerate those cycles.  The tables
cost O(3^n) ring operations total instead of a permanent per subset.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .characters import CycleType, HookLabel, hook_character
from .matrices import ExactMatrix, determinant, permanent, submatrix


def _perm_cycle_parts(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def immanant_bruteforce(matrix: ExactMatrix, label: HookLabel) -> int:
    """Definitional immanant: sum of character times diagonal product over S_n.

    Intended as an oracle for small orders (roughly n <= 9).
    """
    n = matrix.n
    if not label.is_valid:
        raise ValueError(f"label ({label.arm}, 1^{label.legs}) is not a valid hook")
    if label.size != n:
        raise ValueError(f"label size {label.size} does not match matrix order {n}")
    if n == 0:
        return 1
    entries = matrix.entries
    char_by_type: dict[tuple[int, ...], int] = {}
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i, j in enumerate(sigma):
            e = entries[i][j]
            if not e:
                prod = 0
                break
            prod *= e
        if not prod:
            continue
        parts = _perm_cycle_parts(sigma)
        chi = char_by_type.get(parts)
        if chi is None:
            chi = hook_character(label, CycleType(parts))
            char_by_type[parts] = chi
        if chi:
            total += chi * prod
    return total


def _cycle_sums(entries: Sequence[Sequence[int]]) -> list:
    """Hamiltonian-cycle weight sums for every vertex subset of size >= 2.

    cyc[mask] sums, over all directed cycles visiting exactly the vertices
    in `mask`, the product of the traversed off-diagonal entries.  Paths
    grow only toward vertices above the subset minimum, so the minimum
    stays the anchor and each cycle is counted once.
    """
    n = len(entries)
    size = 1 << n
    cyc = [0] * size
    path: list = [None] * size
    for i in range(n):
        row = [0] * n
        row[i] = 1
        path[1 << i] = row
    for msk in range(1, size):
        pm = path[msk]
        if pm is None:
            continue
        low_i = (msk & -msk).bit_length() - 1
        single = msk == (msk & -msk)
        closing = 0
        for v in range(n):
            w = pm[v]
            if not w:
                continue
            row_v = entries[v]
            for u in range(low_i + 1, n):
                if msk >> u & 1:
                    continue
                a = row_v[u]
                if not a:
                    continue
                nxt = msk | (1 << u)
                npm = path[nxt]
                if npm is None:
                    npm = [0] * n
                    path[nxt] = npm
                npm[u] += w * a
            if not single:
                closing += w * row_v[low_i]
        if not single:
            cyc[msk] = closing
        path[msk] = None  # free as we go; supersets are already seeded
    return cyc


def _cover_tables(n: int, cyc: Sequence[int], diag: Sequence[int]):
    """Permanents and determinants of every principal submatrix.

    Builds both tables in one submask sweep: the cycle through the subset
    minimum is either the 1-cycle weighted by the diagonal entry or a
    longer cycle from `cyc`, with the sign (-1)^(len-1) applied on the
    determinant side only.
    """
    size = 1 << n
    per = [0] * size
    det = [0] * size
    per[0] = det[0] = 1
    for msk in range(1, size):
        low = msk & -msk
        li = low.bit_length() - 1
        rest = msk ^ low
        d0 = diag[li]
        p = d0 * per[rest] if d0 else 0
        d = d0 * det[rest] if d0 else 0
        sub = rest
        while sub:
            c = cyc[sub | low]
            if c:
                remainder = rest ^ sub
                p += c * per[remainder]
                cd = c * det[remainder]
                d += cd if sub.bit_count() % 2 == 0 else -cd
            sub = (sub - 1) & rest
        per[msk] = p
        det[msk] = d
    return per, det


def _immanant_vector(n: int, per: Sequence[int], det: Sequence[int]) -> list[int]:
    """All hook immanants [d_1, ..., d_n] from the principal-minor tables."""
    split = [0] * n
    full = (1 << n) - 1
    for alpha in range(1 << n):
        s = alpha.bit_count()
        if s < n:
            split[s] += per[alpha] * det[full ^ alpha]
    out = []
    acc = 0
    for k in range(1, n + 1):
        acc = split[k - 1] - acc
        out.append(acc)
    return out


def _table_immanants(matrix: ExactMatrix) -> list[int]:
    n = matrix.n
    cyc = _cycle_sums(matrix.entries)
    diag = [matrix.entries[i][i] for i in range(n)]
    per, det = _cover_tables(n, cyc, diag)
    return _immanant_vector(n, per, det)


def _subset_route_cost(n: int, k: int) -> int:
    total = 0
    for s in range(k):
        total += comb(n, s) * ((1 << s) * max(s, 1) + (n - s) ** 3 // 3 + 1)
    return total


def _hook_immanant_by_subsets(matrix: ExactMatrix, k: int) -> int:
    n = matrix.n
    d = 0
    for j in range(k):
        split = 0
        for alpha in combinations(range(n), j):
            split += permanent(submatrix(matrix, "principal", alpha)) * determinant(
                submatrix(matrix, "complement", alpha)
            )
        d = split - d
    return d


def hook_immanant(matrix: ExactMatrix, k: int) -> int:
    """The k-th hook immanant d_k, exactly; d_1 = det and d_n = per."""
    n = matrix.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for matrix order {n}")
    if k == 1:
        return determinant(matrix)
    if _subset_route_cost(n, k) < 3**n:
        return _hook_immanant_by_subsets(matrix, k)
    return _table_immanants(matrix)[k - 1]


def hook_immanant_all(matrix: ExactMatrix) -> list[int]:
    """All hook immanants [d_1, ..., d_n] in one shared-table pass."""
    if matrix.n < 1:
        raise ValueError("matrix must have order at least 1")
    return _table_immanants(matrix)


def label_immanant(matrix: ExactMatrix, label: HookLabel) -> int:
    """Immanant for a possibly degenerate hook label.

    Invalid labels contribute 0 and the empty-shape labels contribute 1
    (the matrix must then be empty); ordinary hooks defer to hook_immanant.
    """
    if label.denotes_empty:
        if matrix.n != 0:
            raise ValueError("empty-shape label applied to a non-empty matrix")
        return 1
    if not label.is_hook:
        if label.size != matrix.n:
            raise ValueError(
                f"label size {label.size} does not match matrix order {matrix.n}"
            )
        return 0
    if label.size != matrix.n:
        raise ValueError(
            f"label size {label.size} does not match matrix order {matrix.n}"
        )
    return hook_immanant(matrix, label.arm)


def characteristic_immanants(
    matrix: ExactMatrix, points: Sequence[int]
) -> list[list[int]]:
    """Vectors [d_1..d_n] of (x0*I - M) for each x0, sharing the cycle sums.

    Off-diagonal entries of x0*I - M do not depend on x0, so the cycle
    weight sums are computed once and only the diagonal is refreshed per
    evaluation point.
    """
    n = matrix.n
    if n < 1:
        raise ValueError("matrix must have order at least 1")
    entries = matrix.entries
    negated = tuple(tuple(-v for v in row) for row in entries)
    cyc = _cycle_sums(negated)
    out = []
    for x0 in points:
        diag = [x0 - entries[i][i] for i in range(n)]
        per, det = _cover_tables(n, cyc, diag)
        out.append(_immanant_vector(n, per, det))
    return out
