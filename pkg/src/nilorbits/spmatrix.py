"""Exact-rational matrices in Sp_2N for the antidiagonal symplectic form.

The form is [[0, v], [-v, 0]] with v the N x N antidiagonal of ones, so
the Gram matrix is antidiagonal: J[i, 2N+1-i] = 1 for i <= N and -1 for
i > N (1-based).  Coordinate p <= N carries e_p, coordinate 2N+1-p its
dual, and a matrix entry (r, c) sits in the root space phi(r) - phi(c)
where phi(p) = e_p for p <= N and -e_{2N+1-p} beyond.

One-parameter root elements are built entry-wise so that g^T J g = J holds
exactly; commutators are computed over Fraction with exact inverses.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvariantBreach, ValidationError
from .roots import Root

Matrix = list[list[Fraction]]


def identity(size: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    bt = list(zip(*b))
    return [[sum(ra[k] * cb[k] for k in range(size)) for cb in bt] for ra in a]


def mat_inv(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    size = len(a)
    work = [row[:] + ident_row for row, ident_row in zip(a, identity(size))]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Fraction(1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[size:] for row in work]


def gram_matrix(n: int) -> Matrix:
    size = 2 * n
    j = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        j[i][size - 1 - i] = Fraction(1 if i < n else -1)
    return j


def preserves_form(g: Matrix, n: int) -> bool:
    j = gram_matrix(n)
    gt = [list(row) for row in zip(*g)]
    return mat_mul(mat_mul(gt, j), g) == j


def _dual(p: int, size: int) -> int:
    return size + 1 - p


def entry_root(r: int, c: int, n: int) -> Root:
    """Root space of the off-diagonal entry (r, c), 1-based."""
    size = 2 * n
    coeffs: dict[int, int] = {}
    for pos, sign in ((r, 1), (c, -1)):
        if pos <= n:
            coeffs[pos] = coeffs.get(pos, 0) + sign
        else:
            coeffs[_dual(pos, size)] = coeffs.get(_dual(pos, size), 0) - sign
    pairs = tuple(sorted((i, cc) for i, cc in coeffs.items() if cc))
    return Root(pairs)


def _entry_positions(root: Root, n: int) -> list[tuple[int, int, int]]:
    """(row, col, sign) entries of the one-parameter element for the root.

    Signs follow from exact form preservation: a lone entry for the long
    roots, a pair with relative sign -eps(row)*eps(col-dual) otherwise.
    """
    size = 2 * n
    pairs = root.pairs
    if any(i > n for i, _ in pairs):
        raise ValidationError(f"root {root} does not fit in Sp_{2 * n}")
    if len(pairs) == 1:
        (i, c), = pairs
        return [(i, _dual(i, size), 1)] if c > 0 else [(_dual(i, size), i, 1)]
    (i, ci), (j, cj) = pairs
    if (ci, cj) == (1, -1):
        r, c = i, j
    elif (ci, cj) == (-1, 1):
        r, c = j, i
    elif (ci, cj) == (1, 1):
        r, c = i, _dual(j, size)
    else:
        r, c = _dual(i, size), j
    eps = lambda p: 1 if p <= n else -1
    partner_sign = -eps(r) * eps(c)
    return [(r, c, 1), (_dual(c, size), _dual(r, size), partner_sign)]


def one_parameter_matrix(root: Root, t, n: int) -> Matrix:
    """The element x_root(t) of Sp_2N, exact in t.

    >>> one_parameter_matrix(Root(((1, 2),)), Fraction(5), 1)[0][1]
    Fraction(5, 1)
    """
    g = identity(2 * n)
    for r, c, sign in _entry_positions(root, n):
        g[r - 1][c - 1] += sign * Fraction(t)
    if not preserves_form(g, n):
        raise InvariantBreach(f"generator for {root} does not preserve the form")
    return g


def commutator(x: Matrix, y: Matrix) -> Matrix:
    """x y x^-1 y^-1 in exact arithmetic."""
    if len(x) != len(y):
        raise ValidationError("commutator needs matrices of equal size")
    return mat_mul(mat_mul(x, y), mat_mul(mat_inv(x), mat_inv(y)))


def support_roots(g: Matrix, n: int) -> dict[Root, Fraction]:
    """Nonzero off-diagonal entries of a unipotent element, grouped by root.

    Each root keeps the entry at its canonical (first) generator position;
    the mirrored entry is forced by the form and not reported separately.
    """
    out: dict[Root, Fraction] = {}
    size = 2 * n
    for r in range(1, size + 1):
        for c in range(1, size + 1):
            if r == c:
                continue
            val = g[r - 1][c - 1]
            if val == 0:
                continue
            root = entry_root(r, c, n)
            if root not in out:
                out[root] = val
    return out
