"""Exact linear algebra over Q and fraction-free elimination over Q[vars]."""

from __future__ import annotations

from fractions import Fraction

from .errors import NonzeroRemainder
from .ring import Polynomial


def rref(rows, ncols=None):
    """Reduced row echelon form of a rational matrix.

    Returns ``(nonzero_rows, pivot_columns)``; the input is not modified.
    """
    M = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g`` when ``g`` divides ``f``; raises otherwise."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    glm = g.lm()
    glc = g.lc()
    quotient = {}
    rem = f
    while rem:
        m = rem.lm()
        if any(a < b for a, b in zip(m, glm)):
            raise NonzeroRemainder(f"{g} does not divide {f}")
        qm = tuple(a - b for a, b in zip(m, glm))
        qc = rem.coefficient(m) / glc
        quotient[qm] = qc
        rem = rem - g.mul_term(qc, qm)
    return Polynomial(ring, quotient)


def _bareiss(M, want_det=False):
    """Fraction-free elimination with full pivoting on a copy of ``M``.

    Returns ``(rank, det_or_None)``.  Entries are polynomials of one ring.
    """
    M = [list(r) for r in M]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0, None
    ring = M[0][0].ring
    prev = ring.one()
    sign = 1
    r = 0
    for k in range(min(nrows, ncols)):
        piv = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                if M[i][j]:
                    if piv is None or len(M[i][j]) < len(M[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i, j = piv
        if i != k:
            M[k], M[i] = M[i], M[k]
            sign = -sign
        if j != k:
            for row in M:
                row[k], row[j] = row[j], row[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                num = pk * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = divide_exact(num, prev) if num else num
            M[i][k] = ring.zero()
        prev = pk
        r += 1
    det = None
    if want_det and nrows == ncols:
        det = M[-1][-1] * sign if r == nrows else ring.zero()
    return r, det


def generic_rank(M) -> int:
    """Rank of a polynomial matrix over the fraction field of its ring."""
    return _bareiss(M)[0]


def determinant(M) -> Polynomial:
    if len(M) == 1:
        return M[0][0]
    return _bareiss(M, want_det=True)[1]
