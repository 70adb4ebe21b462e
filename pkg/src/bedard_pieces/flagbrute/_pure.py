"""Reference implementations of the hot matrix kernels.

Matrices are tuples of row tuples holding field element codes.  The same
signatures are provided by the compiled extension `_core`; see `kernels`
for the selection logic.
"""

from __future__ import annotations

BACKEND = "pure"


def rref(mat, field):
    """Canonical reduced row echelon form; zero rows dropped.

    Equal row spaces always produce identical outputs, which is what makes
    subspaces hashable.
    """
    if not mat:
        return ()
    rows = [list(r) for r in mat]
    nrows, ncols = len(rows), len(rows[0])
    mul_t, add_t, neg_t, inv_t = field.mul_t, field.add_t, field.neg_t, \
        field.inv_t
    top = 0
    for col in range(ncols):
        pivot = -1
        for r in range(top, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        prow = rows[top]
        inv = inv_t[prow[col]]
        if inv != 1:
            mrow = mul_t[inv]
            for j in range(col, ncols):
                prow[j] = mrow[prow[j]]
        for r in range(nrows):
            if r == top:
                continue
            c = rows[r][col]
            if c:
                mrow = mul_t[c]
                row = rows[r]
                for j in range(col, ncols):
                    row[j] = add_t[row[j]][neg_t[mrow[prow[j]]]]
        top += 1
        if top == nrows:
            break
    return tuple(tuple(r) for r in rows[:top])


def mat_mul(a, b, field):
    """Matrix product over the field."""
    if not a or not b:
        return ()
    mul_t, add_t = field.mul_t, field.add_t
    bt = tuple(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add_t[acc][mul_t[x][y]]
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_inv(a, field):
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    aug = rref(tuple(tuple(r) + tuple(1 if i == j else 0 for j in range(n))
                     for i, r in enumerate(a)), field)
    if len(aug) != n or any(aug[i][i] != 1 or
                            any(aug[i][j] for j in range(n) if j != i)
                            for i in range(n)):
        return None
    return tuple(r[n:] for r in aug)
