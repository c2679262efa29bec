"""GF(2) linear algebra: dense bit-packed elimination plus a sparse variant.

Rows are Python ints used as bitmasks for the sparse routines; the dense
routines pack rows into numpy uint64 words.  Dense is used below a column
threshold, sparse above; both must agree (cross-checked in tests).
"""

from __future__ import annotations

import numpy as np

DENSE_COLUMN_LIMIT = 1 << 14


def _pack(rows, ncols):
    nw = (ncols + 63) // 64
    mat = np.zeros((len(rows), nw), dtype=np.uint64)
    for i, r in enumerate(rows):
        w = 0
        while r:
            chunk = r & 0xFFFFFFFFFFFFFFFF
            if chunk:
                mat[i, w] = chunk
            r >>= 64
            w += 1
    return mat


def _unpack_row(row) -> int:
    out = 0
    for w in range(len(row) - 1, -1, -1):
        out = (out << 64) | int(row[w])
    return out


def _rref_dense(rows, ncols):
    mat = _pack(rows, ncols)
    m = mat.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        w, b = divmod(c, 64)
        col = (mat[r:, w] >> np.uint64(b)) & np.uint64(1)
        hits = np.nonzero(col)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            mat[[r, p]] = mat[[p, r]]
        onescol = (mat[:, w] >> np.uint64(b)) & np.uint64(1)
        ones = np.nonzero(onescol)[0]
        ones = ones[ones != r]
        if ones.size:
            mat[ones] ^= mat[r]
        pivots.append(c)
        r += 1
    return pivots, [_unpack_row(mat[i]) for i in range(len(pivots))]


def _rref_sparse(rows, ncols):
    piv = {}
    for row in rows:
        while row:
            lead = (row & -row).bit_length() - 1
            if lead in piv:
                row ^= piv[lead]
            else:
                piv[lead] = row
                break
    order = sorted(piv)
    for c in reversed(order):
        row = piv[c]
        for c2 in order:
            if c2 > c and (row >> c2) & 1:
                row ^= piv[c2]
        piv[c] = row
    return order, [piv[c] for c in order]


def rref(rows, ncols):
    """Reduced row echelon form: (sorted pivot columns, aligned echelon rows)."""
    rows = [r for r in rows]
    if not rows:
        return [], []
    if ncols <= DENSE_COLUMN_LIMIT:
        return _rref_dense(rows, ncols)
    return _rref_sparse(rows, ncols)


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[0])


def reduce_vector(v: int, pivots, ech_rows) -> int:
    """Reduce v against reduced echelon rows."""
    for c, row in zip(pivots, ech_rows):
        if (v >> c) & 1:
            v ^= row
    return v


def in_span(v: int, pivots, ech_rows) -> bool:
    return reduce_vector(v, pivots, ech_rows) == 0


def left_nullspace(rows):
    """Basis of {x over row indices : xor of selected rows = 0}."""
    piv = {}
    combos = {}
    basis = []
    for i, r in enumerate(rows):
        v, combo = r, 1 << i
        while v:
            lead = (v & -v).bit_length() - 1
            if lead in piv:
                v ^= piv[lead]
                combo ^= combos[lead]
            else:
                piv[lead] = v
                combos[lead] = combo
                break
        if v == 0:
            basis.append(combo)
    return basis


def nullspace(rows, ncols):
    """Basis (list of bitmasks over columns) of {x : M x = 0} for row-matrix M."""
    cols = []
    for c in range(ncols):
        v = 0
        for i, r in enumerate(rows):
            if (r >> c) & 1:
                v |= 1 << i
        cols.append(v)
    piv = {}
    combos = {}
    basis = []
    for c in range(ncols):
        v = cols[c]
        combo = 1 << c
        while v:
            lead = (v & -v).bit_length() - 1
            if lead in piv:
                v ^= piv[lead]
                combo ^= combos[lead]
            else:
                piv[lead] = v
                combos[lead] = combo
                break
        if v == 0:
            basis.append(combo)
    return basis


def solve(rows, ncols, target: int):
    """One x (bitmask over rows) with xor of chosen rows = target, or None."""
    piv = {}
    combos = {}
    for i, r in enumerate(rows):
        v, combo = r, 1 << i
        while v:
            lead = (v & -v).bit_length() - 1
            if lead in piv:
                v ^= piv[lead]
                combo ^= combos[lead]
            else:
                piv[lead] = v
                combos[lead] = combo
                break
    v, combo = target, 0
    while v:
        lead = (v & -v).bit_length() - 1
        if lead not in piv:
            return None
        v ^= piv[lead]
        combo ^= combos[lead]
    return combo


def quotient_basis(sub_rows, ncols):
    """Columns forming a basis of F2^ncols modulo the span of sub_rows."""
    pivots, _ = rref(sub_rows, ncols)
    pv = set(pivots)
    return [c for c in range(ncols) if c not in pv]
