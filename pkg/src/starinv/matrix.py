"""Dense exact matrices and the elimination primitives built on them.

Matrices are immutable after construction and carry the field mode of
their entries, so the conjugate transpose knows which involution to
apply. Rank, reduced row echelon form, full rank factorization and
inner (von Neumann) inverses are all computed by exact Gaussian
elimination with a deterministic pivot rule: first nonzero entry of the
current column scanning top to bottom, columns left to right.

The arithmetic kernels work on the scalar components directly and skip
zero entries; the structured matrices this package manipulates are mostly
zeros and their powers stay sparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .field import FieldMode, Scalar, ZERO, ONE, _Q0, _raw, as_scalar, parse_scalar


class DimensionMismatch(ValueError):
    pass


class ZeroMatrixError(ValueError):
    pass


def _coerce_entry(v, mode: FieldMode) -> Scalar:
    s = parse_scalar(v) if isinstance(v, str) else as_scalar(v)
    if not mode.admits(s):
        raise ValueError(f"entry {s} is not an element of {mode}")
    return s


class Matrix:
    """A rows x cols array of scalars over a single field mode."""

    __slots__ = ("mode", "rows", "cols", "_data", "_rank")

    def __init__(self, mode: FieldMode, data: Sequence[Sequence]):
        rows = len(data)
        if rows == 0 or len(data[0]) == 0:
            raise DimensionMismatch("matrices must have at least one row and column")
        cols = len(data[0])
        grid = []
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch("ragged row lengths")
            grid.append(tuple(_coerce_entry(v, mode) for v in row))
        self.mode = mode
        self.rows = rows
        self.cols = cols
        self._data = tuple(grid)
        self._rank = None

    @classmethod
    def _trusted(cls, mode: FieldMode, grid) -> "Matrix":
        """Wrap rows of Scalars without re-validation (internal use)."""
        m = cls.__new__(cls)
        m.mode = mode
        m.rows = len(grid)
        m.cols = len(grid[0])
        m._data = tuple(tuple(row) for row in grid)
        m._rank = None
        return m

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, mode: FieldMode, rows: int, cols: int) -> "Matrix":
        return cls._trusted(mode, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, mode: FieldMode, n: int) -> "Matrix":
        return cls._trusted(
            mode, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    # -- access ----------------------------------------------------------

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def entries(self) -> tuple:
        return self._data

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._data for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.mode == other.mode
            and self.shape == other.shape
            and all(
                a.re == b.re and a.im == b.im
                for ra, rb in zip(self._data, other._data)
                for a, b in zip(ra, rb)
            )
        )

    def __hash__(self):
        return hash((self.mode, tuple(tuple((e.re, e.im) for e in r) for r in self._data)))

    def __str__(self):
        return "\n".join("[" + "  ".join(str(e) for e in row) + "]" for row in self._data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.mode})"

    # -- arithmetic --------------------------------------------------------

    def _same_mode(self, other: "Matrix"):
        if self.mode != other.mode:
            raise ValueError("mixed field modes")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_mode(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix._trusted(
            self.mode,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_mode(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix._trusted(
            self.mode,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self.mode, [[-e for e in row] for row in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_mode(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        bdata = other._data
        ncols = other.cols
        out = []
        for arow in self._data:
            nonzero = [(k, a) for k, a in enumerate(arow) if a.re or a.im]
            row_out = []
            for j in range(ncols):
                acc_re = _Q0
                acc_im = _Q0
                for k, a in nonzero:
                    b = bdata[k][j]
                    if b.re or b.im:
                        acc_re += a.re * b.re - a.im * b.im
                        acc_im += a.re * b.im + a.im * b.re
                row_out.append(_raw(acc_re, acc_im))
            out.append(row_out)
        return Matrix._trusted(self.mode, out)

    def __mul__(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._trusted(self.mode, [[c * e for e in row] for row in self._data])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("powers need a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = Matrix.identity(self.mode, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    # -- involution ---------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix._trusted(self.mode, list(zip(*self._data)))

    def star(self) -> "Matrix":
        """Conjugate transpose under the mode's involution."""
        inv = self.mode.involve
        return Matrix._trusted(
            self.mode,
            [[inv(self._data[i][j]) for i in range(self.rows)] for j in range(self.cols)],
        )

    # -- elimination ----------------------------------------------------------

    def rref(self) -> "RrefResult":
        """Reduced row echelon form with the accumulated row operations.

        Returns R, the rank, the pivot columns, and an invertible matrix
        ``ops`` with ``ops @ self == R``.
        """
        n, m = self.rows, self.cols
        work = [list(row) for row in self._data]
        ops = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        piv_row = 0
        pivots = []
        for col in range(m):
            src = None
            for r in range(piv_row, n):
                e = work[r][col]
                if e.re or e.im:
                    src = r
                    break
            if src is None:
                continue
            if src != piv_row:
                work[piv_row], work[src] = work[src], work[piv_row]
                ops[piv_row], ops[src] = ops[src], ops[piv_row]
            pivot = work[piv_row][col]
            if pivot.re != 1 or pivot.im:
                factor = ONE / pivot
                work[piv_row] = _scale_row(work[piv_row], factor)
                ops[piv_row] = _scale_row(ops[piv_row], factor)
            for r in range(n):
                if r == piv_row:
                    continue
                f = work[r][col]
                if f.re or f.im:
                    work[r] = _axpy_row(work[r], f, work[piv_row])
                    ops[r] = _axpy_row(ops[r], f, ops[piv_row])
            pivots.append(col)
            piv_row += 1
            if piv_row == n:
                break
        return RrefResult(
            matrix=Matrix._trusted(self.mode, work),
            rank=piv_row,
            pivot_cols=tuple(pivots),
            rowops=Matrix._trusted(self.mode, ops),
        )

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.rref().rank
        return self._rank

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("only square matrices can be inverted")
        res = self.rref()
        if res.rank < self.rows:
            raise ValueError("matrix is singular")
        return res.rowops

    def full_rank_factorization(self) -> tuple:
        """Split A = F G with F of full column rank and G of full row rank.

        G is the nonzero rows of the RREF and F the matching pivot columns
        of A. The zero matrix is rejected; callers treat rank 0 separately.
        """
        res = self.rref()
        if res.rank == 0:
            raise ZeroMatrixError("the zero matrix has no full rank factorization")
        g_rows = [res.matrix.row(i) for i in range(res.rank)]
        f_rows = [[row[c] for c in res.pivot_cols] for row in self._data]
        return Matrix._trusted(self.mode, f_rows), Matrix._trusted(self.mode, g_rows)

    def inner_inverse(self) -> "Matrix":
        """Some X with A X A = A, via reduction to the rank normal form.

        Row-reduce A to R, then row-reduce R transposed (plain transpose,
        no conjugation) to reach P A Q = [[I_r, 0], [0, 0]]; the transposed
        normal form sandwiched as Q [[I_r,0],[0,0]] P is an inner inverse.
        For A = 0 this yields the zero matrix of transposed shape.
        """
        first = self.rref()
        r = first.rank
        if r == 0:
            return Matrix.zeros(self.mode, self.cols, self.rows)
        second = first.matrix.transpose().rref()
        p = first.rowops
        q = second.rowops.transpose()
        normal = [
            [ONE if (i == j and i < r) else ZERO for j in range(self.rows)]
            for i in range(self.cols)
        ]
        return (q @ Matrix._trusted(self.mode, normal)) @ p

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "mode": self.mode.to_json(),
            "entries": [[str(e) for e in row] for row in self._data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        mode = FieldMode.from_json(obj["mode"])
        mat = cls(mode, obj["entries"])
        if mat.shape != (obj["rows"], obj["cols"]):
            raise DimensionMismatch("declared shape does not match the entries")
        return mat


def _scale_row(row, factor: Scalar):
    fre, fim = factor.re, factor.im
    if not fim:
        return [_raw(fre * e.re, fre * e.im) if (e.re or e.im) else e for e in row]
    return [factor * e for e in row]


def _axpy_row(row, f: Scalar, pivot_row):
    """row - f * pivot_row, skipping zero pivot entries."""
    fre, fim = f.re, f.im
    out = []
    for e, p in zip(row, pivot_row):
        if p.re or p.im:
            out.append(
                _raw(
                    e.re - (fre * p.re - fim * p.im),
                    e.im - (fre * p.im + fim * p.re),
                )
            )
        else:
            out.append(e)
    return out


class RrefResult(NamedTuple):
    matrix: Matrix
    rank: int
    pivot_cols: tuple
    rowops: Matrix


@dataclass(frozen=True)
class Permutation:
    """A bijection of 0..n-1; ``image[k]`` is where position k looks."""

    image: tuple

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError("image is not a bijection on 0..n-1")

    def __len__(self):
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for k, v in enumerate(self.image):
            inv[v] = k
        return Permutation(tuple(inv))

    def matrix(self, mode: FieldMode) -> Matrix:
        """The permutation matrix P with P[i, j] = 1 iff i = image[j]."""
        n = len(self.image)
        return Matrix._trusted(
            mode,
            [[ONE if i == self.image[j] else ZERO for j in range(n)] for i in range(n)],
        )

    def conjugate(self, a: Matrix) -> Matrix:
        """P^{-1} A P, i.e. the relabelling A[image[i], image[j]]."""
        if not a.is_square() or a.rows != len(self.image):
            raise DimensionMismatch("permutation order must match the matrix order")
        img = self.image
        return Matrix._trusted(
            a.mode,
            [[a[img[i], img[j]] for j in range(a.cols)] for i in range(a.rows)],
        )


def perm_similar(a: Matrix, p: Permutation) -> Matrix:
    return p.conjugate(a)
