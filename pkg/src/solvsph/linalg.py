"""Exact linear algebra over the rationals and the integers.

Everything in this package that looks like linear algebra goes through
here: rational row reduction (for ranks, spans and kernels), integer
kernels computed with unimodular column operations, lattice saturation,
and the row-style Hermite normal form used as the canonical shape for
integer lattices.  No floating point anywhere.

Matrices are plain lists of lists; rows of integers or Fractions.
"""

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form over Q.

    Returns (reduced rows, pivot column list).  Zero rows are dropped.
    The input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def in_span(vec, rows):
    """Is vec in the rational span of the given rows?"""
    if not rows:
        return all(x == 0 for x in vec)
    return rank(rows) == rank(list(rows) + [list(vec)])


def same_span(rows_a, rows_b):
    """Do two row lists span the same rational subspace?"""
    ra = rank(rows_a) if rows_a else 0
    rb = rank(rows_b) if rows_b else 0
    if ra != rb:
        return False
    return rank(list(rows_a) + list(rows_b)) == ra


def _primitive(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g == 0:
        return row
    row = [x // g for x in row]
    for x in row:
        if x != 0:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def integer_kernel(rows, ncols=None):
    """Z-basis of {x in Z^n : A x = 0} for an integer matrix A.

    Performs unimodular column operations on A while mirroring them on
    an identity matrix; columns of the mirror that correspond to zeroed
    columns of A form a basis of the integer kernel.  Rows of the
    result are the kernel vectors.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    a = [list(r) for r in rows]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    # column c of the working pair is (a[*][c], v[*][c])
    lead = 0
    for i in range(len(a)):
        # eliminate row i across columns lead..ncols-1 by gcd steps
        while True:
            cols = [c for c in range(lead, ncols) if a[i][c] != 0]
            if len(cols) <= 1:
                break
            cols.sort(key=lambda c: abs(a[i][c]))
            c0 = cols[0]
            for c in cols[1:]:
                q = a[i][c] // a[i][c0]
                for k in range(len(a)):
                    a[k][c] -= q * a[k][c0]
                for k in range(ncols):
                    v[k][c] -= q * v[k][c0]
        cols = [c for c in range(lead, ncols) if a[i][c] != 0]
        if cols:
            c0 = cols[0]
            if c0 != lead:
                for k in range(len(a)):
                    a[k][lead], a[k][c0] = a[k][c0], a[k][lead]
                for k in range(ncols):
                    v[k][lead], v[k][c0] = v[k][c0], v[k][lead]
            lead += 1
    kernel = []
    for c in range(lead, ncols):
        kernel.append([v[k][c] for k in range(ncols)])
    return kernel


def hnf(rows):
    """Row-style Hermite normal form of the lattice spanned by rows.

    Canonical: pivots positive, entries above a pivot reduced into
    [0, pivot).  Zero rows dropped.  Input rows must be integer.
    """
    m = [list(r) for r in rows if any(x != 0 for x in r)]
    if not m:
        return []
    ncols = len(m[0])
    result = []
    r = 0
    for c in range(ncols):
        # gcd-eliminate column c among rows r..end
        while True:
            live = [i for i in range(r, len(m)) if m[i][c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(m[i][c]))
            i0 = live[0]
            for i in live[1:]:
                q = m[i][c] // m[i0][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
        live = [i for i in range(r, len(m)) if m[i][c] != 0]
        if not live:
            continue
        i0 = live[0]
        m[r], m[i0] = m[i0], m[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r] if any(x != 0 for x in row)]


def saturate(rows, ncols=None):
    """Integer saturation of the lattice generated by the rows.

    sat(L) = (L tensor Q) intersect Z^n, computed as the integer kernel
    of the integer kernel of the generator matrix.  Returned in Hermite
    normal form (canonical, deterministic).
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    rows = [r for r in rows if any(x != 0 for x in r)]
    if not rows:
        return []
    perp = integer_kernel(rows, ncols)
    if not perp:
        return hnf([[1 if i == j else 0 for j in range(ncols)]
                    for i in range(ncols)])
    return hnf(integer_kernel(perp, ncols))


def rational_kernel(rows, ncols=None):
    """Basis (primitive integer rows) of {x in Q^n : A x = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[1 if i == j else 0 for j in range(ncols)]
                for i in range(ncols)]
    # clear denominators row by row, then the integer kernel spans it
    cleared = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        cleared.append([int(x * den) for x in fr])
    return [_primitive(v) for v in integer_kernel(cleared, ncols)]
