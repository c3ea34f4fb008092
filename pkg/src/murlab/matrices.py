"""Dense exact linear algebra.

Rank over the rationals and over the trivariate parameter ring is
computed by fraction-free (Bareiss) elimination; rank over an algebraic
extension uses straightforward elimination with dynamic splitting of the
modulus.  Characteristic polynomials use the trace recursion.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .algebraic import AlgebraicContext, AlgebraicNumber, SplitRequired
from .multipoly import TriPoly
from .polynomials import Poly

Matrix = list  # list of rows; rows are lists of entries


def dimensions(m) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def transpose(m):
    return [list(col) for col in zip(*m)]


def _integer_rows(m) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank preserving)."""
    out = []
    for row in m:
        fracs = [Fraction(x) for x in row]
        scale = 1
        for x in fracs:
            scale = lcm(scale, x.denominator)
        out.append([int(x * scale) for x in fracs])
    return out


def _bareiss_rank_int(rows: list[list[int]]) -> int:
    nr, nc = len(rows), len(rows[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        piv_row = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != r:
            rows[r], rows[piv_row] = rows[piv_row], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            head = rows[i][c]
            for j in range(c + 1, nc):
                num = piv * rows[i][j] - head * rows[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free step not exact"
                rows[i][j] = q
            rows[i][c] = 0
        prev = piv
        r += 1
    return r


def rank_rational(m) -> int:
    """Exact rank of a matrix with rational entries."""
    nr, nc = dimensions(m)
    if nr == 0 or nc == 0:
        return 0
    return _bareiss_rank_int(_integer_rows(m))


def rank_generic(m) -> int:
    """Rank over the fraction field of the parameter ring Q[beta,gamma,delta].

    Equals the maximum of the evaluated rank over all parameter points.
    Pivots prefer low total degree to limit intermediate growth.
    """
    nr, nc = dimensions(m)
    rows = [[e if isinstance(e, TriPoly) else TriPoly.constant(e) for e in row] for row in m]
    r = 0
    prev = TriPoly.constant(1)
    for c in range(nc):
        if r == nr:
            break
        best = None
        for i in range(r, nr):
            e = rows[i][c]
            if not e.is_zero() and (best is None or e.total_degree() < rows[best][c].total_degree()):
                best = i
        if best is None:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            head = rows[i][c]
            for j in range(c + 1, nc):
                rows[i][j] = (piv * rows[i][j] - head * rows[r][j]).exact_div(prev)
            rows[i][c] = TriPoly()
        prev = piv
        r += 1
    return r


def rank_algebraic(m, context: AlgebraicContext) -> list[tuple[Poly, int]]:
    """Rank of a matrix over Q[x]/(modulus), branch by branch.

    Returns (branch modulus, rank) pairs; the branch moduli are pairwise
    coprime, monic, and multiply back to the context modulus.  Elimination
    restarts on each branch whenever a pivot turns out to be a zero divisor.
    """
    nr, nc = dimensions(m)
    reps = [[(e.rep if isinstance(e, AlgebraicNumber) else Poly((e,))) for e in row] for row in m]

    def go(rows: list[list[Poly]], modulus: Poly) -> list[tuple[Poly, int]]:
        ctx = AlgebraicContext(modulus)
        mat = [[ctx.element(e) for e in row] for row in rows]
        r = 0
        for c in range(nc):
            if r == nr:
                break
            piv_row = None
            for i in range(r, nr):
                if not mat[i][c].is_zero():
                    piv_row = i
                    break
            if piv_row is None:
                continue
            if piv_row != r:
                mat[r], mat[piv_row] = mat[piv_row], mat[r]
            try:
                inv = mat[r][c].inverse()
            except SplitRequired as exc:
                snapshot = [[e.rep for e in row] for row in mat]
                return go(snapshot, exc.split.f1) + go(snapshot, exc.split.f2)
            for i in range(r + 1, nr):
                head = mat[i][c]
                if head.is_zero():
                    continue
                factor = head * inv
                for j in range(c + 1, nc):
                    mat[i][j] = mat[i][j] - factor * mat[r][j]
                mat[i][c] = ctx.element(0)
            r += 1
        return [(modulus, r)]

    branches = go(reps, context.modulus)
    return sorted(branches, key=lambda br: (br[0].degree, br[0].coeffs))


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> Matrix:
    ra, ca = dimensions(a)
    rb, cb = dimensions(b)
    if ca != rb:
        raise ValueError("incompatible dimensions")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def trace(m) -> Fraction:
    return sum(m[i][i] for i in range(len(m)))


def charpoly(m) -> Poly:
    """Monic characteristic polynomial det(xI - m) by the trace recursion."""
    nr, nc = dimensions(m)
    if nr != nc:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = nr
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    work = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, work)
        ck = -trace(am) / k
        coeffs[n - k] = ck
        if k < n:
            work = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return Poly(coeffs)


def in_column_space(m, v) -> bool:
    """Whether m @ x = v has a rational solution."""
    nr, nc = dimensions(m)
    if len(v) != nr:
        raise ValueError("incompatible dimensions")
    aug = [[Fraction(x) for x in row] + [Fraction(v[i])] for i, row in enumerate(m)]
    r = 0
    for c in range(nc):
        piv_row = None
        for i in range(r, nr):
            if aug[i][c] != 0:
                piv_row = i
                break
        if piv_row is None:
            continue
        aug[r], aug[piv_row] = aug[piv_row], aug[r]
        piv = aug[r][c]
        for i in range(r + 1, nr):
            if aug[i][c] != 0:
                factor = aug[i][c] / piv
                for j in range(c, nc + 1):
                    aug[i][j] -= factor * aug[r][j]
        r += 1
        if r == nr:
            break
    return all(row[nc] == 0 for row in aug[r:])


def evaluate_tri_matrix(m, beta, gamma, delta) -> Matrix:
    """Evaluate a TriPoly matrix at a rational parameter point."""
    return [[e.evaluate(beta, gamma, delta) for e in row] for row in m]
