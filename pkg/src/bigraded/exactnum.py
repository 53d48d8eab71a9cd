"""Exact scalars in Q(sqrt 2) and dense exact linear algebra.

Every value is immutable and every operation is a pure function, so the
module is safe to use from concurrent code without locking.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "SQRT2",
    "ExactMatrix",
    "rref",
    "rank",
    "nullspace",
    "span_dim",
]


def _as_fraction(x: int | Fraction) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


class Scalar:
    """The number r + s*sqrt(2) with exact rational components.

    The representation is unique: sqrt(2) is irrational, so two Scalars
    are equal exactly when their components are equal, and a Scalar is
    zero exactly when both components are.
    """

    __slots__ = ("r", "s")

    def __init__(self, r: int | Fraction = 0, s: int | Fraction = 0):
        self.r = _as_fraction(r)
        self.s = _as_fraction(s)

    @staticmethod
    def _coerce(x) -> "Scalar | None":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        return None

    def __add__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(o.r - self.r, o.s - self.s)

    def __mul__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.r * o.r + 2 * self.s * o.s, self.r * o.s + self.s * o.r)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        # (r + s*sqrt2)^-1 = (r - s*sqrt2) / (r^2 - 2 s^2); the denominator
        # vanishes only for the zero element because sqrt2 is irrational.
        d = self.r * self.r - 2 * self.s * self.s
        if not d:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return Scalar(self.r / d, -self.s / d)

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar(-self.r, -self.s)

    def __pos__(self) -> "Scalar":
        return self

    def __bool__(self) -> bool:
        return bool(self.r) or bool(self.s)

    def __eq__(self, other) -> bool:
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self.r == o.r and self.s == o.s

    def __hash__(self) -> int:
        return hash((self.r, self.s))

    def __repr__(self) -> str:
        return f"Scalar({self.r}, {self.s})"

    def __str__(self) -> str:
        if not self.s:
            return str(self.r)
        if self.s == 1:
            root = "sqrt2"
        elif self.s == -1:
            root = "-sqrt2"
        else:
            root = f"{self.s}*sqrt2"
        if not self.r:
            return root
        sign = "+" if self.s > 0 else "-"
        mag = root.lstrip("-")
        return f"{self.r} {sign} {mag}"

    def to_json(self) -> dict:
        out = {"r": _fraction_str(self.r)}
        if self.s:
            out["s"] = _fraction_str(self.s)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Scalar":
        if not isinstance(obj, dict) or "r" not in obj:
            raise ValueError(f"not a scalar object: {obj!r}")
        return cls(Fraction(obj["r"]), Fraction(obj.get("s", 0)))


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)


def _as_scalar(v) -> Scalar:
    s = Scalar._coerce(v)
    if s is None:
        raise TypeError(f"expected Scalar, int or Fraction, got {type(v).__name__}")
    return s


class ExactMatrix:
    """Immutable dense matrix of Scalars.

    The multiplication routine skips zero entries of the left factor, so
    products involving sparse matrices cost far less than the cubic worst
    case while remaining exact.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_as_scalar(v) for v in row) for row in data)
        if rows:
            cols = len(rows[0])
            for row in rows:
                if len(row) != cols:
                    raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, value=ONE) -> "ExactMatrix":
        if not (0 <= i < rows and 0 <= j < cols):
            raise IndexError("unit position out of range")
        v = _as_scalar(value)
        return cls(
            [[v if (a, b) == (i, j) else ZERO for b in range(cols)] for a in range(rows)]
        )

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.data)

    def _same_shape(self, other: "ExactMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._same_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._same_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.data], cols=self.cols)

    def scaled(self, k) -> "ExactMatrix":
        k = _as_scalar(k)
        return ExactMatrix([[a * k for a in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch for product: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}"
            )
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                for j, b in enumerate(bdata[k]):
                    if b:
                        orow[j] = orow[j] + a * b
        return ExactMatrix(out, cols=other.cols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def first_nonzero(self) -> tuple[int, int, Scalar] | None:
        """Row-major position and value of the first nonzero entry."""
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    return i, j, v
        return None

    def flatten(self) -> tuple[Scalar, ...]:
        return tuple(v for row in self.data for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("  ".join(str(v) for v in row) for row in self.data)


def rref(m: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form with the deterministic pivot rule:
    leftmost unresolved column, first row with a nonzero entry in it.

    Returns the reduced matrix and the tuple of pivot column indices.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.data]
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, nrows):
            if a[i][pc]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            a[pr], a[pivot_row] = a[pivot_row], a[pr]
        prow = a[pr]
        pv = prow[pc]
        if pv != ONE:
            inv = pv.inverse()
            for j in range(pc, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        support = [j for j in range(pc, ncols) if prow[j]]
        for i in range(nrows):
            if i == pr:
                continue
            f = a[i][pc]
            if not f:
                continue
            arow = a[i]
            for j in support:
                arow[j] = arow[j] - f * prow[j]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return ExactMatrix(a, cols=ncols), tuple(pivots)


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: ExactMatrix) -> list[ExactMatrix]:
    """Basis of the right nullspace as column vectors.

    Vectors are ordered by the index of the free column they correspond
    to, and each has coefficient one at that free column.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[ExactMatrix] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            val = reduced[i, f]
            if val:
                v[p] = -val
        basis.append(ExactMatrix([[x] for x in v], cols=1))
    return basis


def span_dim(mats: Sequence[ExactMatrix]) -> int:
    """Dimension of the linear span of the given same-shaped matrices."""
    mats = list(mats)
    if not mats:
        return 0
    shape = (mats[0].rows, mats[0].cols)
    for m in mats:
        if (m.rows, m.cols) != shape:
            raise ValueError("span of matrices with mismatched shapes")
    ncols = shape[0] * shape[1]
    stacked = ExactMatrix([list(m.flatten()) for m in mats], cols=ncols)
    return len(rref(stacked)[1])
