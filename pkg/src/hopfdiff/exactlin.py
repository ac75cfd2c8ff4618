"""Exact rational linear algebra: dense matrices and affine system solving.

Everything is computed over the rationals with no rounding; scalars are
``fractions.Fraction`` values (always in lowest terms, positive
denominator).  Matrices are small and dense; elimination picks the first
nonzero pivot in row-major order so that identical inputs always produce
identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value, den=None) -> Rat:
    """Coerce ints, strings like "p/q", or Fractions to an exact rational."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot build a rational from {value!r}")


def rat_str(value: Rat) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Mat:
    """Dense row-major rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [rat(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "Mat":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def from_cols(cls, cols) -> "Mat":
        cols = [list(c) for c in cols]
        return cls.from_rows(list(zip(*cols))) if cols else cls(0, 0, [])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, rc) -> Rat:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> list[Rat]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def col(self, c: int) -> list[Rat]:
        return self.entries[c :: self.cols]

    def to_rows(self) -> list[list[Rat]]:
        return [self.row(r) for r in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols})"

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = [ZERO] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if not a:
                    continue
                obase = k * other.cols
                row = i * other.cols
                for j in range(other.cols):
                    b = other.entries[obase + j]
                    if b:
                        out[row + j] += a * b
        return Mat(self.rows, other.cols, out)

    def apply(self, vec: list[Rat]) -> list[Rat]:
        """Matrix-vector product; vec has one entry per column."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [ZERO] * self.rows
        for j, x in enumerate(vec):
            if not x:
                continue
            for i in range(self.rows):
                e = self.entries[i * self.cols + j]
                if e:
                    out[i] += e * x
        return out


@dataclass
class AffineSolutionSpace:
    """Full solution set of A v = b: particular + span(kernel_basis).

    ``particular`` is None when the system is inconsistent.  The kernel
    basis is in reduced echelon form with respect to the deterministic
    pivot order, so equal systems yield identical bases.
    """

    particular: list[Rat] | None
    kernel_basis: list[list[Rat]]

    @property
    def inconsistent(self) -> bool:
        return self.particular is None

    @property
    def unique(self) -> bool:
        return self.particular is not None and not self.kernel_basis

    def dim(self) -> int:
        return len(self.kernel_basis)


def _row_reduce(rows: list[list[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_affine(a: Mat, b: list[Rat]) -> AffineSolutionSpace:
    """Solve A v = b exactly, returning the whole affine solution space."""
    if a.rows != len(b):
        raise ValueError(f"matrix has {a.rows} rows but b has {len(b)} entries")
    aug = [a.row(i) + [rat(b[i])] for i in range(a.rows)]
    aug, pivots = _row_reduce(aug)
    n = a.cols
    if n in pivots:
        return AffineSolutionSpace(None, [])
    particular = [ZERO] * n
    for r, c in enumerate(pivots):
        particular[c] = aug[r][-1]
    kernel = _kernel_from_echelon([row[:-1] for row in aug[: len(pivots)]], pivots, n)
    return AffineSolutionSpace(particular, kernel)


def _kernel_from_echelon(rows: list[list[Rat]], pivots: list[int], n: int) -> list[list[Rat]]:
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * n
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def kernel(a: Mat) -> list[list[Rat]]:
    """Reduced-echelon basis of the null space, one vector per free column."""
    rows, pivots = _row_reduce(a.to_rows())
    return _kernel_from_echelon(rows[: len(pivots)], pivots, a.cols)


def row_space_basis(vectors: list[list[Rat]]) -> list[list[Rat]]:
    """Reduced-echelon basis of the span of the given vectors."""
    rows = [list(v) for v in vectors if any(v)]
    rows, pivots = _row_reduce(rows)
    return rows[: len(pivots)]


def in_span(basis_echelon: list[list[Rat]], v: list[Rat]) -> bool:
    """Membership test against a reduced-echelon basis."""
    v = list(v)
    for row in basis_echelon:
        p = next(i for i, x in enumerate(row) if x)
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def invert(a: Mat) -> Mat | None:
    """Exact inverse, or None when the matrix is singular."""
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    n = a.rows
    aug = [a.row(i) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    aug, pivots = _row_reduce(aug)
    if len(pivots) != n or pivots != list(range(n)):
        return None
    return Mat.from_rows([row[n:] for row in aug])
