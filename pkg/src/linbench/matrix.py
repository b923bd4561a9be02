"""Dense column-major matrix storage and the element-manipulation kernels.

Covers seeded matrix generation, the creation/transposition/deformation
task, element-wise powers, the cross-product matrix and value sorting.
`transpose_naive` intentionally implements the per-element double loop so
the harness can measure the anti-pattern against the builtin path.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import InvalidArgumentError
from .rng import RngStream


class DenseMatrix:
    """Real float64 matrix, column-major: element (i, j) sits at j*rows + i."""

    __slots__ = ("a",)

    def __init__(self, values, copy: bool = True):
        arr = np.array(values, dtype=np.float64, order="F", copy=copy)
        if arr.ndim != 2:
            raise InvalidArgumentError(f"expected a 2-D array, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidArgumentError(f"dimensions must be positive, got {arr.shape}")
        if not arr.flags.f_contiguous:
            arr = np.asfortranarray(arr)
        self.a = arr

    @classmethod
    def from_flat(cls, data: Sequence[float], rows: int, cols: int) -> "DenseMatrix":
        """Build from a column-major flat sequence of length rows*cols."""
        flat = np.asarray(data, dtype=np.float64)
        if flat.ndim != 1 or flat.size != rows * cols:
            raise InvalidArgumentError(
                f"flat data of length {flat.size} does not fill {rows}x{cols}")
        return cls(flat.reshape((rows, cols), order="F"), copy=True)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        if rows < 1 or cols < 1:
            raise InvalidArgumentError(f"dimensions must be positive, got {rows}x{cols}")
        return cls(np.zeros((rows, cols), order="F"), copy=False)

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        if n < 1:
            raise InvalidArgumentError(f"dimension must be positive, got {n}")
        return cls(np.eye(n, order="F"), copy=False)

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def flat(self) -> np.ndarray:
        """The column-major data sequence (offset j*rows + i holds (i, j))."""
        return self.a.ravel(order="F")

    def __getitem__(self, ij: tuple[int, int]) -> float:
        return float(self.a[ij])

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"


def randn_matrix(rng: RngStream, n: int, m: int, scale: float) -> DenseMatrix:
    """n x m matrix of standard-normal draws divided by `scale`.

    Consumes exactly n*m normal deviates, filled column by column.
    """
    if n < 1 or m < 1:
        raise InvalidArgumentError(f"dimensions must be positive, got {n}x{m}")
    if scale == 0:
        raise InvalidArgumentError("scale must be nonzero")
    draws = rng.normals(n * m) / scale
    return DenseMatrix(draws.reshape((n, m), order="F"), copy=False)


def transpose(a: DenseMatrix) -> DenseMatrix:
    """result(i, j) = a(j, i), via the library transpose."""
    return DenseMatrix(np.asfortranarray(a.a.T), copy=False)


def transpose_naive(a: DenseMatrix) -> DenseMatrix:
    """Same value contract as `transpose`, but one element at a time.

    Kept as an explicit double loop on purpose: this is the anti-pattern
    the harness measures against the builtin path.
    """
    src = a.a
    out = np.empty((a.cols, a.rows), order="F")
    for i in range(a.cols):
        for j in range(a.rows):
            out[i, j] = src[j, i]
    return DenseMatrix(out, copy=False)


def reshape(a: DenseMatrix, new_rows: int, new_cols: int) -> DenseMatrix:
    """Reinterpret the column-major data sequence with new dimensions."""
    if new_rows < 1 or new_cols < 1:
        raise InvalidArgumentError(f"dimensions must be positive, got {new_rows}x{new_cols}")
    if new_rows * new_cols != a.rows * a.cols:
        raise InvalidArgumentError(
            f"cannot reshape {a.rows}x{a.cols} ({a.rows * a.cols} elements) "
            f"to {new_rows}x{new_cols} ({new_rows * new_cols} elements)")
    return DenseMatrix(a.a.reshape((new_rows, new_cols), order="F"), copy=True)


def create_modify_task(
    rng: RngStream,
    n: int,
    sink: Callable[[DenseMatrix], None] | None = None,
    shape_trace: list[tuple[int, int]] | None = None,
    transpose_fn: Callable[[DenseMatrix], DenseMatrix] = transpose,
) -> int:
    """Create an n x n scaled-normal matrix, transpose, reshape, transpose back.

    Returns 0 on success. `sink` receives the final matrix (checksum hook);
    `shape_trace` collects the intermediate shapes; `transpose_fn` lets the
    harness swap in the naive or builtin transposition variant.
    """
    if n < 2 or n % 2 != 0:
        raise InvalidArgumentError(f"n must be even and >= 2, got {n}")
    a = randn_matrix(rng, n, n, 10.0)
    if shape_trace is not None:
        shape_trace.append(a.shape)
    b = transpose_fn(a)
    b = reshape(b, n // 2, n * 2)
    if shape_trace is not None:
        shape_trace.append(b.shape)
    a = transpose_fn(b)
    if shape_trace is not None:
        shape_trace.append(a.shape)
    if sink is not None:
        sink(a)
    return 0


def power_input(rng: RngStream, n: int) -> DenseMatrix:
    """n x n matrix of |standard normal| / 2 entries."""
    m = randn_matrix(rng, n, n, 2.0)
    return DenseMatrix(np.abs(m.a), copy=False)


def power_apply(m: DenseMatrix, exponent: float) -> DenseMatrix:
    """Element-wise power; overflow to inf is accepted IEEE behaviour."""
    with np.errstate(over="ignore"):
        return DenseMatrix(m.a ** exponent, copy=False)


def elementwise_power_task(
    rng: RngStream,
    n: int,
    exponent: float,
    sink: Callable[[DenseMatrix], None] | None = None,
) -> int:
    """Raise each |normal|/2 entry of an n x n matrix to `exponent`; return 0."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    result = power_apply(power_input(rng, n), exponent)
    if sink is not None:
        sink(result)
    return 0


def crossprod(a: DenseMatrix) -> DenseMatrix:
    """transpose(a) . a — cols x cols, symmetric, positive semi-definite."""
    return DenseMatrix(a.a.T @ a.a, copy=False)


def sort_values(v) -> np.ndarray:
    """Ascending sort of a real sequence; NaN inputs are rejected."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidArgumentError(f"expected a 1-D sequence, got ndim={arr.ndim}")
    if np.isnan(arr).any():
        raise InvalidArgumentError("input contains NaN")
    return np.sort(arr)
