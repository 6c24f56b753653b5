"""Direct solvers for the small banded systems of the collocation method.

Both solvers run plain Gaussian elimination without pivoting: the
collocation matrices are diagonally dominant for the parameter ranges the
scheme accepts, and a zero pivot is reported loudly instead of repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TridiagonalSystem", "BandedSystem", "ZeroPivotError", "thomas_solve", "banded_solve"]

PIVOT_TOL = 1e-300


class ZeroPivotError(ArithmeticError):
    """Raised when forward elimination meets a (numerically) zero pivot."""

    def __init__(self, row: int):
        super().__init__(f"zero pivot in row {row}")
        self.row = row


@dataclass
class TridiagonalSystem:
    """A x = rhs with A tridiagonal; ``sub``/``sup`` have length n-1."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        n = len(self.diag)
        if n < 1 or len(self.sub) != n - 1 or len(self.sup) != n - 1 or len(self.rhs) != n:
            raise ValueError("inconsistent tridiagonal band lengths")

    def dense(self) -> np.ndarray:
        a = np.diag(self.diag)
        a += np.diag(self.sub, -1)
        a += np.diag(self.sup, 1)
        return a

    def residual(self, x: np.ndarray) -> float:
        return float(np.max(np.abs(self.dense() @ x - self.rhs)))


@dataclass
class BandedSystem:
    """A x = rhs with A banded, bandwidth two on each side.

    ``bands`` has shape (n, 5); column j holds the coefficient at offset
    j - 2 from the diagonal (entries that would fall outside the matrix
    must be zero).
    """

    n: int
    bands: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        self.bands = np.asarray(self.bands, dtype=float)
        self.rhs = np.asarray(self.rhs, dtype=float)
        if self.bands.shape != (self.n, 5) or len(self.rhs) != self.n:
            raise ValueError("bands must be (n, 5) and rhs length n")

    def dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i in range(self.n):
            for off in range(-2, 3):
                j = i + off
                if 0 <= j < self.n:
                    a[i, j] = self.bands[i, off + 2]
        return a


def thomas_solve(sys: TridiagonalSystem) -> np.ndarray:
    """Solve a tridiagonal system by forward elimination / back substitution."""
    n = len(sys.diag)
    d = [float(v) for v in sys.diag]
    r = [float(v) for v in sys.rhs]
    sub, sup = sys.sub, sys.sup
    for i in range(1, n):
        piv = d[i - 1]
        if abs(piv) < PIVOT_TOL:
            raise ZeroPivotError(i - 1)
        m = float(sub[i - 1]) / piv
        d[i] -= m * float(sup[i - 1])
        r[i] -= m * r[i - 1]
    if abs(d[n - 1]) < PIVOT_TOL:
        raise ZeroPivotError(n - 1)
    x = np.empty(n)
    x[n - 1] = r[n - 1] / d[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = (r[i] - float(sup[i]) * x[i + 1]) / d[i]
    return x


def banded_solve(sys: BandedSystem) -> np.ndarray:
    """Solve a bandwidth-2 system by elimination restricted to the band."""
    n = sys.n
    band = sys.bands.copy()
    rhs = sys.rhs.copy()
    for col in range(n - 1):
        piv = band[col, 2]
        if abs(piv) < PIVOT_TOL:
            raise ZeroPivotError(col)
        for below in range(col + 1, min(col + 3, n)):
            off = col - below + 2  # column ``col`` as seen from row ``below``
            if band[below, off] == 0.0:
                continue
            m = band[below, off] / piv
            band[below, off] = 0.0
            for k in range(1, 3):
                j = col + k
                if j < n:
                    band[below, off + k] -= m * band[col, 2 + k]
            rhs[below] -= m * rhs[col]
    if abs(band[n - 1, 2]) < PIVOT_TOL:
        raise ZeroPivotError(n - 1)
    x = np.zeros(n)
    for row in range(n - 1, -1, -1):
        acc = rhs[row]
        for k in range(1, 3):
            j = row + k
            if j < n:
                acc -= band[row, 2 + k] * x[j]
        x[row] = acc / band[row, 2]
    return x
