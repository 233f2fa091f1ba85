"""Structured integer matrices and exact linear algebra.

Three matrix families drive the closed-form counts:

* the transfer matrix of order s+1, whose (i, j) entry (0-indexed) is
  s+1-i-j inside the anti-triangle i+j <= s and 0 outside it;
* its explicit inverse, a banded matrix with 1, -2, 1 on the three
  anti-diagonals just below the main anti-diagonal;
* two "mirror tridiagonal" matrices, obtained by reversing the rows of a
  tridiagonal (-1, 2, -1) matrix, which differ only in the top-right
  corner entry (1 in one family, 2 in the other).

Determinants over the integers use fraction-free Bareiss elimination.
Determinants of matrices whose entries are linear in a variable y, such
as det(I - yM) and det(yI - M), are recovered by evaluating at n+1
integer points and interpolating, with an integrality check on the
result; the degree bounds are known a priori so this is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .poly import Coeff, Poly, interpolate


class DimensionMismatch(ValueError):
    """Operands have incompatible sizes."""


class Matrix:
    """Immutable square matrix of exact integers, row-major."""

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be square")
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix([[int(i == j) for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def __str__(self) -> str:
        width = max((len(str(e)) for row in self.rows for e in row), default=1)
        return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.order != other.order:
            raise DimensionMismatch(f"orders {self.order} and {other.order} differ")
        n = self.order
        cols = tuple(zip(*other.rows))
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def power(self, exponent: int) -> Matrix:
        """Binary exponentiation; the zeroth power is the identity."""
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.order))

    def entry_sum(self) -> int:
        """Sum of all entries, i.e. the quadratic form with the all-ones vector."""
        return sum(sum(row) for row in self.rows)

    def to_json(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows]


# -- the structured families ------------------------------------------------


def transfer_matrix(s: int) -> Matrix:
    """The (s+1) x (s+1) transfer matrix for magic sum s.

    Entry (i, j), 0-indexed, counts labelings of one chain link with
    boundary labels i and j: s+1-i-j when i+j <= s, else 0.
    """
    if s < 0:
        raise ValueError("magic sum must be nonnegative")
    return Matrix([[s + 1 - i - j if i + j <= s else 0 for j in range(s + 1)] for i in range(s + 1)])


def transfer_inverse(n: int) -> Matrix:
    """Explicit inverse of the order-n transfer matrix.

    Banded along anti-diagonals: entry 1 where i+j = n-1, -2 where
    i+j = n, 1 where i+j = n+1 (0-indexed), 0 elsewhere.  The product
    check transfer_matrix(n-1) @ transfer_inverse(n) == identity is the
    normative definition; see the test suite.
    """
    if n < 1:
        raise ValueError("order must be positive")

    def entry(i: int, j: int) -> int:
        band = i + j
        if band == n - 1:
            return 1
        if band == n:
            return -2
        if band == n + 1:
            return 1
        return 0

    return Matrix([[entry(i, j) for j in range(n)] for i in range(n)])


def mirror_tridiagonal(n: int, corner: int) -> Matrix:
    """Row-reversed tridiagonal (-1, 2, -1) matrix of order n.

    The main anti-diagonal carries 2, the two neighbouring anti-diagonals
    carry -1, and the top-right corner is overridden by ``corner`` (1 or
    2); the two choices give the two comparison families used by the
    characteristic-polynomial identities.  Defined for all n >= 1; the
    order-1 instances are (1) and (2).
    """
    if n < 1:
        raise ValueError("order must be positive")
    if corner not in (1, 2):
        raise ValueError("corner entry must be 1 or 2")

    def entry(i: int, j: int) -> int:
        band = i + j
        if i == 0 and j == n - 1:
            return corner
        if band == n - 1:
            return 2
        if band in (n - 2, n):
            return -1
        return 0

    return Matrix([[entry(i, j) for j in range(n)] for i in range(n)])


# -- exact determinants -----------------------------------------------------


def det(m: Matrix) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    n = m.order
    if n == 0:
        return 1
    work = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if pivot is None:
                return 0
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def _interpolate_integral(values: list[tuple[int, int]]) -> Poly:
    p = interpolate(values)
    if not p.is_integral():
        raise ArithmeticError("interpolated matrix polynomial is not integral")
    return p


def char_poly(m: Matrix) -> Poly:
    """Characteristic polynomial det(yI - M), monic of degree n.

    Computed by evaluating at y = 0..n and interpolating.
    """
    n = m.order
    values = []
    for point in range(n + 1):
        shifted = Matrix([[point * int(i == j) - m.rows[i][j] for j in range(n)] for i in range(n)])
        values.append((point, det(shifted)))
    p = _interpolate_integral(values)
    if p.degree != n or p.coefficient(n) != 1:
        raise ArithmeticError("characteristic polynomial is not monic of full degree")
    return p


def det_identity_minus_y(m: Matrix) -> Poly:
    """det(I - yM) as an exact integer polynomial of degree <= n."""
    n = m.order
    values = []
    for point in range(n + 1):
        shifted = Matrix([[int(i == j) - point * m.rows[i][j] for j in range(n)] for i in range(n)])
        values.append((point, det(shifted)))
    return _interpolate_integral(values)


def adjugate_allones_form(m: Matrix) -> Poly:
    """The polynomial u^T adj(I - yM) u for the all-ones vector u.

    Uses the bordered-determinant identity v^T adj(A) v = -det([[0, v^T],
    [v, A]]), one (n+1) x (n+1) determinant per evaluation point instead
    of n^2 cofactors.  Degree bound n; the true degree is at most n-1.
    """
    n = m.order
    values = []
    for point in range(n + 1):
        bordered = [[0] + [1] * n]
        for i in range(n):
            bordered.append([1] + [int(i == j) - point * m.rows[i][j] for j in range(n)])
        values.append((point, -det(Matrix(bordered))))
    return _interpolate_integral(values)


# -- exact rational elimination ----------------------------------------------


def solve_exact(
    system: Sequence[Sequence[Coeff]], rhs: Sequence[Coeff]
) -> Optional[list[Fraction]]:
    """Solve a square linear system over the rationals.

    Returns None when the system is singular.
    """
    n = len(system)
    if len(rhs) != n or any(len(row) != n for row in system):
        raise DimensionMismatch("system must be square with matching rhs")
    work = [[Fraction(e) for e in row] + [Fraction(rhs[i])] for i, row in enumerate(system)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] / work[col][col]
                for j in range(col, n + 1):
                    work[r][j] -= factor * work[col][j]
    solution = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = work[i][n]
        for j in range(i + 1, n):
            acc -= work[i][j] * solution[j]
        solution[i] = acc / work[i][i]
    return solution


def rational_rank(rows: Sequence[Sequence[Coeff]]) -> int:
    """Rank of a rectangular matrix over the rationals, by elimination."""
    work = [[Fraction(e) for e in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col] / work[rank][col]
                for j in range(col, n_cols):
                    work[r][j] -= factor * work[rank][j]
        rank += 1
        if rank == len(work):
            break
    return rank
