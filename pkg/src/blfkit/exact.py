"""Exact linear algebra over the integers.

Everything here runs on Python's arbitrary-precision ints; no floats enter at
any point. IntMatrix is immutable, so matrices can be shared freely between
fibration records.

Conventions fixed for the whole package:
  * homology bases are interleaved (a1, b1, a2, b2, ...);
  * the intersection form on a genus-g surface is the block-diagonal J with
    blocks [[0, 1], [-1, 0]], i.e. <a_i, b_i> = +1;
  * pairing(x, y) = x^T J y, and a 2g x 2g matrix M is symplectic when
    M^T J M = J.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; dimensions may be zero (genus-0 fibers)."""

    rows: tuple[tuple[int, ...], ...]
    ncols_hint: int = -1  # disambiguates the column count of 0-row matrices

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError(f"ragged rows: widths {sorted(widths)}")
        ncols = widths.pop() if widths else 0
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def block_diag(cls, a: "IntMatrix", b: "IntMatrix") -> "IntMatrix":
        rows = [list(r) + [0] * b.ncols for r in a.rows]
        rows += [[0] * a.ncols + list(r) for r in b.rows]
        return cls.from_rows(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        if self.rows:
            return len(self.rows[0])
        return max(self.ncols_hint, 0)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}"
            )
        cols = other.ncols
        out = [
            [
                sum(self.rows[i][k] * other.rows[k][j] for k in range(self.ncols))
                for j in range(cols)
            ]
            for i in range(self.nrows)
        ]
        m = IntMatrix.from_rows(out)
        if not m.rows:
            m = IntMatrix(m.rows, cols)
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.nrows == other.nrows
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def transpose(self) -> "IntMatrix":
        out = IntMatrix.from_rows(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )
        if not out.rows:
            out = IntMatrix(out.rows, self.nrows)
        return out

    def apply(self, vec) -> tuple[int, ...]:
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.ncols:
            raise DimensionError(
                f"matrix is {self.nrows}x{self.ncols}, vector has length {len(vec)}"
            )
        return tuple(
            sum(row[j] * vec[j] for j in range(self.ncols)) for row in self.rows
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.nrows) and self.nrows == self.ncols


def standard_symplectic_matrix(genus: int) -> IntMatrix:
    """J in the interleaved basis: blocks [[0, 1], [-1, 0]] per handle."""
    if genus < 0:
        raise DimensionError(f"genus must be nonnegative, got {genus}")
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    m = IntMatrix.from_rows(rows)
    return m if m.rows else IntMatrix((), 0)


def pairing(x, y, genus: int) -> int:
    """Algebraic intersection number x^T J y of two homology classes."""
    x = tuple(int(v) for v in x)
    y = tuple(int(v) for v in y)
    if len(x) != 2 * genus or len(y) != 2 * genus:
        raise DimensionError(
            f"genus {genus} needs vectors of length {2 * genus}, "
            f"got {len(x)} and {len(y)}"
        )
    total = 0
    for i in range(genus):
        total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
    return total


def is_symplectic(m: IntMatrix, genus: int) -> bool:
    """True when M^T J M = J for the genus-g standard form."""
    n = 2 * genus
    if m.nrows != n or m.ncols != n:
        raise DimensionError(
            f"expected a {n}x{n} matrix for genus {genus}, "
            f"got {m.nrows}x{m.ncols}"
        )
    j = standard_symplectic_matrix(genus)
    return m.transpose() * j * m == j


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with D = U * M * V.

    D is diagonal with nonnegative entries and d_i | d_{i+1}; U and V are
    unimodular products of the elementary row / column operations performed.
    """
    nrows, ncols = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def smallest_pivot(t):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = abs(a[i][j])
                if x and (best is None or x < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    for t in range(min(nrows, ncols)):
        while True:
            pos = smallest_pivot(t)
            if pos is None:
                break
            swap_rows(t, pos[0])
            swap_cols(t, pos[1])
            p = a[t][t]
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    add_row(t, i, -q)
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    add_col(t, j, -q)
            if any(a[i][t] for i in range(t + 1, nrows)):
                continue
            if any(a[t][j] for j in range(t + 1, ncols)):
                continue
            # pivot must divide every remaining entry for the divisor chain
            stray = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            add_row(stray, t, 1)
        if a[t][t] < 0:
            negate_row(t)

    d = IntMatrix.from_rows(a) if a else IntMatrix((), ncols)
    return d, IntMatrix.from_rows(u), IntMatrix.from_rows(v)
