"""Exact and floating-point linear algebra kernels.

Integer and rational matrices are plain lists of lists (entries int or
Fraction); floating-point work uses numpy arrays.  The quadratic classes
model elements of Z[sqrt(d)] and Q(sqrt(d)), which covers all the surd
arithmetic the chain invariants need: d=6 for the Pell-type powers and
d=3 for the symmetric block of the normalized Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

Scalar = Union[int, Fraction]

_SUPPORTED_RADICANDS = (3, 6)


class SingularMatrixError(ArithmeticError):
    """Raised when an exact solve or inverse hits a singular matrix."""


class DimensionMismatchError(ValueError):
    """Raised when matrix/vector shapes do not line up."""


class ConvergenceError(RuntimeError):
    """Raised when the iterative eigensolver fails to reach tolerance."""


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(d) of the ring Z[sqrt(d)]."""

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        if self.d not in _SUPPORTED_RADICANDS:
            raise ValueError(f"unsupported radicand {self.d}")

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, QuadInt):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.a - o.a, self.b - o.b, self.d)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadInt":
        if k < 0:
            raise ValueError("negative powers leave the ring")
        result = QuadInt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.a, -self.b, self.d)

    def norm(self) -> int:
        return self.a * self.a - self.d * self.b * self.b

    def __float__(self) -> float:
        return self.a + self.b * math.sqrt(self.d)


@dataclass(frozen=True)
class QuadRat:
    """Element a + b*sqrt(d) of the field Q(sqrt(d))."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        if self.d not in _SUPPORTED_RADICANDS:
            raise ValueError(f"unsupported radicand {self.d}")
        # normalize so int arguments are accepted at construction
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _coerce(self, other) -> "QuadRat":
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRat(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRat(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRat(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRat(o.a - self.a, o.b - self.b, self.d)

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRat(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        # norm is nonzero for nonzero elements because sqrt(d) is irrational
        n = self.a * self.a - self.d * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        return QuadRat(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatchError("matrix is not square")
    return n


def det_exact(m: Sequence[Sequence[Scalar]]):
    """Exact determinant of an integer or rational matrix.

    Integer input goes through fraction-free (Bareiss) elimination and
    returns an int; anything with Fraction entries goes through plain
    Gaussian elimination over Fraction.
    """
    n = _check_square(m)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in m for x in row):
        return _det_bareiss([list(row) for row in m])
    a = [[Fraction(x) for x in row] for row in m]
    return _det_gauss(a)


def _det_bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_gauss(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            row_i = a[i]
            row_k = a[k]
            for j in range(k, n):
                row_i[j] -= factor * row_k[j]
    return sign * det


def det_quad_field(m: Sequence[Sequence], d: int = 3) -> QuadRat:
    """Exact determinant over Q(sqrt(d)); entries may be QuadRat, int or Fraction."""
    n = _check_square(m)
    zero = QuadRat(0, 0, d)
    if n == 0:
        return QuadRat(1, 0, d)
    a = [[zero + x for x in row] for row in m]
    sign = 1
    det = QuadRat(1, 0, d)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if not a[r][k].is_zero), None)
        if pivot_row is None:
            return zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(k + 1, n):
            if a[i][k].is_zero:
                continue
            factor = a[i][k] * inv
            row_i = a[i]
            row_k = a[k]
            for j in range(k, n):
                row_i[j] = row_i[j] - factor * row_k[j]
    if sign < 0:
        det = -det
    return det


def _charpoly(a: list[list], one):
    """Faddeev-LeVerrier: coefficients of det(yI - A), descending powers.

    Division happens only by the integers 1..n, so this stays exact over
    any coefficient field containing the rationals.
    """
    n = len(a)
    coeffs = [one]
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        trace = mk[0][0]
        for i in range(1, n):
            trace = trace + mk[i][i]
        ck = trace * Fraction(-1, k)
        coeffs.append(ck)
        if k == n:
            break
        # M_{k+1} = A (M_k + c_k I)
        for i in range(n):
            mk[i][i] = mk[i][i] + ck
        nxt = []
        for i in range(n):
            arow = a[i]
            out = []
            for j in range(n):
                s = arow[0] * mk[0][j]
                for t in range(1, n):
                    s = s + arow[t] * mk[t][j]
                out.append(s)
            nxt.append(out)
        mk = nxt
    return coeffs


def rational_charpoly(m: Sequence[Sequence[Scalar]]) -> list[Fraction]:
    """Characteristic polynomial det(yI - M) of a rational matrix.

    Returns coefficients [1, c1, ..., cn] in descending powers of y.
    """
    n = _check_square(m)
    if n == 0:
        return [Fraction(1)]
    a = [[Fraction(x) for x in row] for row in m]
    return [Fraction(c) for c in _charpoly(a, Fraction(1))]


def quad_charpoly(m: Sequence[Sequence], d: int = 3) -> list[QuadRat]:
    """Characteristic polynomial of a matrix over Q(sqrt(d)), descending powers."""
    n = _check_square(m)
    one = QuadRat(1, 0, d)
    if n == 0:
        return [one]
    zero = QuadRat(0, 0, d)
    a = [[zero + x for x in row] for row in m]
    return [one * c for c in _charpoly(a, one)]


def as_float_array(m) -> np.ndarray:
    """Convert a list-of-lists matrix (int/Fraction/QuadRat entries) to float64."""
    if isinstance(m, np.ndarray):
        return np.array(m, dtype=float)
    return np.array([[float(x) for x in row] for row in m], dtype=float)


def symmetric_eigenvalues(m, tol: float = 1e-10, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps run until the Frobenius norm of the off-diagonal part drops
    below tol.  Input must be symmetric within tol.
    """
    a = as_float_array(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError("matrix is not square")
    n = a.shape[0]
    if n == 0:
        return []
    if np.max(np.abs(a - a.T)) > max(tol, 1e-12):
        raise ValueError("matrix is not symmetric")
    if n == 1:
        return [float(a[0, 0])]
    a = (a + a.T) / 2.0
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # summed directly over the off-diagonal entries; a difference of
        # two large sums would bottom out near sqrt(eps) * norm
        off = math.sqrt(float(np.sum(a[off_mask] ** 2)))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # rotation angle would underflow; the entry is noise
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise ConvergenceError(f"Jacobi sweeps did not reach tol={tol}")
    return [float(x) for x in np.sort(np.diag(a))]


def solve_linear(a, b, mode: str | None = None):
    """Solve a x = b.

    mode "exact" runs Gaussian elimination over Fraction and returns a
    list of Fractions; mode "float" uses numpy.  Default picks exact for
    int/Fraction entries and float for anything else.
    """
    n = _check_square(a)
    if len(b) != n:
        raise DimensionMismatchError("right-hand side length mismatch")
    if mode is None:
        exact = all(isinstance(x, (int, Fraction)) for row in a for x in row)
        mode = "exact" if exact else "float"
    if mode == "float":
        try:
            return np.linalg.solve(as_float_array(a), np.array([float(x) for x in b]))
        except np.linalg.LinAlgError as exc:
            raise SingularMatrixError(str(exc)) from None
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("singular matrix in exact solve")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            if aug[i][k] == 0:
                continue
            factor = aug[i][k] / pivot
            for j in range(k, n + 1):
                aug[i][j] -= factor * aug[k][j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = aug[i][n]
        for j in range(i + 1, n):
            s -= aug[i][j] * x[j]
        x[i] = s / aug[i][i]
    return x


def invert_exact(m: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Exact inverse of a rational matrix via Gauss-Jordan elimination."""
    n = _check_square(m)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        aug[k] = [x / pivot for x in aug[k]]
        for i in range(n):
            if i == k or aug[i][k] == 0:
                continue
            factor = aug[i][k]
            row_i = aug[i]
            row_k = aug[k]
            for j in range(k, 2 * n):
                row_i[j] -= factor * row_k[j]
    return [row[n:] for row in aug]
