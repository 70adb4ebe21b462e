# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
"""Compiled finite-field matrix kernels.

Behaviour mirrors `_pure` exactly: same signatures, same canonical
outputs.  Field tables are flattened into C integer arrays once per field;
matrices small enough for the fixed working buffer are processed entirely
in C, anything larger falls back to the reference implementation.
"""

import array as _array

from . import _pure

BACKEND = "cython"

cdef enum:
    MAXDIM = 32

_tables = {}


cdef class _FieldTables:
    cdef int q
    cdef int[::1] add
    cdef int[::1] mul
    cdef int[::1] neg
    cdef int[::1] inv


cdef _FieldTables _get_tables(object field):
    t = _tables.get(field)
    if t is not None:
        return <_FieldTables>t
    cdef _FieldTables built = _FieldTables()
    built.q = field.q
    built.add = _array.array("i", [x for row in field.add_t for x in row])
    built.mul = _array.array("i", [x for row in field.mul_t for x in row])
    built.neg = _array.array("i", list(field.neg_t))
    built.inv = _array.array("i", list(field.inv_t))
    _tables[field] = built
    return built


def rref(mat, field):
    """Canonical reduced row echelon form; zero rows dropped."""
    if not mat:
        return ()
    cdef int nrows = len(mat)
    cdef int ncols = len(mat[0])
    if nrows > MAXDIM or ncols > MAXDIM:
        return _pure.rref(mat, field)
    cdef _FieldTables t = _get_tables(field)
    cdef int q = t.q
    cdef int[::1] add = t.add
    cdef int[::1] mul = t.mul
    cdef int[::1] neg = t.neg
    cdef int[::1] inv = t.inv
    cdef int buf[MAXDIM][MAXDIM]
    cdef int i, j, col, top, pivot, r, pinv, factor, tmp
    for i in range(nrows):
        row = mat[i]
        for j in range(ncols):
            buf[i][j] = row[j]
    top = 0
    for col in range(ncols):
        pivot = -1
        for r in range(top, nrows):
            if buf[r][col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != top:
            for j in range(ncols):
                tmp = buf[top][j]
                buf[top][j] = buf[pivot][j]
                buf[pivot][j] = tmp
        pinv = inv[buf[top][col]]
        if pinv != 1:
            for j in range(col, ncols):
                buf[top][j] = mul[pinv * q + buf[top][j]]
        for r in range(nrows):
            if r == top:
                continue
            factor = buf[r][col]
            if factor != 0:
                for j in range(col, ncols):
                    buf[r][j] = add[buf[r][j] * q
                                    + neg[mul[factor * q + buf[top][j]]]]
        top += 1
        if top == nrows:
            break
    return tuple(tuple(buf[i][j] for j in range(ncols))
                 for i in range(top))


def mat_mul(a, b, field):
    """Matrix product over the field."""
    if not a or not b:
        return ()
    cdef int nrows = len(a)
    cdef int inner = len(b)
    cdef int ncols = len(b[0])
    if nrows > MAXDIM or inner > MAXDIM or ncols > MAXDIM:
        return _pure.mat_mul(a, b, field)
    cdef _FieldTables t = _get_tables(field)
    cdef int q = t.q
    cdef int[::1] add = t.add
    cdef int[::1] mul = t.mul
    cdef int abuf[MAXDIM][MAXDIM]
    cdef int bbuf[MAXDIM][MAXDIM]
    cdef int i, j, k, acc, x
    for i in range(nrows):
        row = a[i]
        for k in range(inner):
            abuf[i][k] = row[k]
    for k in range(inner):
        row = b[k]
        for j in range(ncols):
            bbuf[k][j] = row[j]
    out = []
    for i in range(nrows):
        orow = []
        for j in range(ncols):
            acc = 0
            for k in range(inner):
                x = abuf[i][k]
                if x != 0 and bbuf[k][j] != 0:
                    acc = add[acc * q + mul[x * q + bbuf[k][j]]]
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_inv(a, field):
    """Inverse of a square matrix, or None if singular."""
    cdef int n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    aug = rref(tuple(tuple(r) + tuple(1 if i == j else 0 for j in range(n))
                     for i, r in enumerate(a)), field)
    if len(aug) != n:
        return None
    cdef int i, j
    for i in range(n):
        row = aug[i]
        for j in range(n):
            if row[j] != (1 if i == j else 0):
                return None
    return tuple(r[n:] for r in aug)
