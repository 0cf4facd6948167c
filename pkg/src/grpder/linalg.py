"""Exact linear algebra over Q, F_p and Z.

Field-side solving (kernels, particular solutions, span bases) goes through
:class:`LinearSystem`, an incremental sparse row-echelon accumulator. Over Q
every stored row is a primitive integer vector and elimination is
fraction-free; rationals only appear when the reduced echelon form is
extracted. Integer-side solvability is decided by Smith normal form with
tracked unimodular factors.

All outputs are canonical: the reduced row echelon form of a row space is
unique, so kernel bases, span bases and the particular solution with free
variables set to zero do not depend on row insertion order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAField
from .rings import ZZ, Ring, Scalar, require_same_ring
from .util import CancelToken, check_cancel


class ExactMatrix:
    """Dense row-major matrix with entries in a single exact ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries) -> None:
        rows = [list(row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.ring = ring
        self.rows = len(rows)
        self.cols = cols
        self.entries = [[ring.coerce(v) for v in row] for row in rows]

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "ExactMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    def mul_vec(self, vector) -> list[Scalar]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [self.ring.coerce(v) for v in vector]
        out = []
        for row in self.entries:
            acc = self.ring.zero
            for a, b in zip(row, vec):
                acc = acc + a * b
            out.append(self.ring.normalize(acc))
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        require_same_ring(self.ring, other.ring)
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(self.ring.normalize(acc))
            out.append(row)
        return ExactMatrix(self.ring, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.ring}, {self.rows}x{self.cols})"


def gcd_list(values) -> int:
    """gcd of absolute values; empty or all-zero input gives 0."""
    return math.gcd(*(abs(int(v)) for v in values))


def _content_reduce(row: dict[int, int]) -> dict[int, int]:
    g = math.gcd(*(abs(v) for v in row.values()))
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class LinearSystem:
    """Incremental sparse echelon accumulator over a field (Q or F_p).

    Rows are dicts ``column -> coefficient``. When constructed with
    ``augmented=True`` the right-hand side is carried in a virtual extra
    column, and a row reducing to "0 = nonzero" marks the system
    inconsistent.
    """

    def __init__(self, ncols: int, ring: Ring, *, augmented: bool = False) -> None:
        if not ring.is_field:
            raise NotAField(f"linear system requires a field, got {ring}")
        self.ncols = ncols
        self.ring = ring
        self._p = ring.characteristic  # 0 for Q
        self._aug = ncols if augmented else None
        self._pivots: dict[int, dict[int, int]] = {}
        self._consistent = True
        self._rref_cache: tuple[int, dict[int, dict[int, Scalar]]] | None = None

    @property
    def consistent(self) -> bool:
        return self._consistent

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)

    def add_row(self, coeffs: dict[int, Scalar], rhs: Scalar = 0) -> None:
        row = self._prepare(coeffs, rhs)
        if row is None:
            return
        self._rref_cache = None
        if self._p:
            self._insert_mod(row)
        else:
            self._insert_int(row)

    def _prepare(self, coeffs, rhs) -> dict[int, int] | None:
        p = self._p
        row: dict[int, int] = {}
        if p:
            for c, v in coeffs.items():
                v = self.ring.coerce(v)
                if v:
                    row[c] = v
            if self._aug is not None:
                v = self.ring.coerce(rhs)
                if v:
                    row[self._aug] = v
        else:
            items = list(coeffs.items())
            if self._aug is not None:
                items.append((self._aug, rhs))
            den = 1
            for _, v in items:
                if isinstance(v, Fraction):
                    den = den * v.denominator // math.gcd(den, v.denominator)
            for c, v in items:
                iv = int(v * den) if isinstance(v, Fraction) else v * den
                if iv:
                    row[c] = iv
            if row:
                row = _content_reduce(row)
        return row or None

    def _insert_int(self, row: dict[int, int]) -> None:
        pivots = self._pivots
        aug = self._aug
        while row:
            lead = min(row)
            if lead == aug:
                self._consistent = False
                return
            piv = pivots.get(lead)
            if piv is None:
                if row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                pivots[lead] = row
                return
            a, b = row[lead], piv[lead]
            g = math.gcd(a, b)
            ma, mb = b // g, a // g
            merged = {c: v * ma for c, v in row.items()}
            for c, v in piv.items():
                w = merged.get(c, 0) - v * mb
                if w:
                    merged[c] = w
                else:
                    merged.pop(c, None)
            row = _content_reduce(merged) if merged else merged

    def _insert_mod(self, row: dict[int, int]) -> None:
        pivots = self._pivots
        aug = self._aug
        p = self._p
        while row:
            lead = min(row)
            if lead == aug:
                self._consistent = False
                return
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], p - 2, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                return
            factor = row[lead]  # pivot rows are normalized to leading 1
            merged = dict(row)
            for c, v in piv.items():
                w = (merged.get(c, 0) - factor * v) % p
                if w:
                    merged[c] = w
                else:
                    merged.pop(c, None)
            row = merged

    def _rref(self) -> dict[int, dict[int, Scalar]]:
        """Canonical reduced rows keyed by pivot column, leading entry 1."""
        if self._rref_cache is not None and self._rref_cache[0] == len(self._pivots):
            return self._rref_cache[1]
        p = self._p
        reduced: dict[int, dict[int, Scalar]] = {}
        if p:
            for c in sorted(self._pivots, reverse=True):
                row = dict(self._pivots[c])
                for c2 in list(row):
                    if c2 != c and c2 in reduced:
                        f = row.pop(c2)
                        for c3, v in reduced[c2].items():
                            if c3 == c2:
                                continue
                            w = (row.get(c3, 0) - f * v) % p
                            if w:
                                row[c3] = w
                            else:
                                row.pop(c3, None)
                reduced[c] = row
        else:
            for c in sorted(self._pivots, reverse=True):
                lead = self._pivots[c][c]
                row = {c2: Fraction(v, lead) for c2, v in self._pivots[c].items()}
                for c2 in list(row):
                    if c2 != c and c2 in reduced:
                        f = row.pop(c2)
                        for c3, v in reduced[c2].items():
                            if c3 == c2:
                                continue
                            w = row.get(c3, 0) - f * v
                            if w:
                                row[c3] = w
                            else:
                                row.pop(c3, None)
                reduced[c] = row
        self._rref_cache = (len(self._pivots), reduced)
        return reduced

    def rref_rows(self) -> list[tuple[int, dict[int, Scalar]]]:
        """Reduced rows as ``(pivot column, row dict)`` sorted by pivot."""
        reduced = self._rref()
        return [(c, dict(reduced[c])) for c in sorted(reduced)]

    def particular_solution(self) -> list[Scalar] | None:
        """Solution with all free variables set to zero, or None if infeasible."""
        if self._aug is None:
            raise ValueError("system was not built with a right-hand side")
        if not self._consistent:
            return None
        reduced = self._rref()
        sol = [self.ring.zero] * self.ncols
        for c, row in reduced.items():
            sol[c] = self.ring.coerce(row.get(self._aug, 0))
        return sol

    def kernel_basis(self) -> list[list[Scalar]]:
        """Canonical nullspace basis, one vector per free column, ascending."""
        if self._aug is not None:
            raise ValueError("kernel basis is only defined for homogeneous systems")
        reduced = self._rref()
        free_cols = [c for c in range(self.ncols) if c not in reduced]
        basis = []
        for f in free_cols:
            vec = [self.ring.zero] * self.ncols
            vec[f] = self.ring.one
            for c, row in reduced.items():
                v = row.get(f)
                if v:
                    vec[c] = self.ring.normalize(-self.ring.coerce(v))
            basis.append(vec)
        return basis

    def span_basis(self) -> list[list[Scalar]]:
        """Canonical basis of the row span (densified reduced rows)."""
        vectors = []
        for c, row in self.rref_rows():
            vec = [self.ring.zero] * self.ncols
            for c2, v in row.items():
                if c2 != self._aug:
                    vec[c2] = self.ring.coerce(v)
            vectors.append(vec)
        return vectors

    def reduce_vector(self, vector) -> list[Scalar]:
        """Remainder of ``vector`` after elimination against the reduced rows."""
        work = [self.ring.coerce(v) for v in vector]
        for c, row in self._rref().items():
            f = work[c]
            if f:
                for c2, v in row.items():
                    if c2 != self._aug:
                        work[c2] = self.ring.normalize(work[c2] - f * v)
        return work

    def contains(self, vector) -> bool:
        """True iff the vector lies in the accumulated row span."""
        return not any(self.reduce_vector(vector))


def _require_field_matrix(matrix: ExactMatrix) -> None:
    if not matrix.ring.is_field:
        raise NotAField(f"operation requires field coefficients, got {matrix.ring}")


def kernel_basis(matrix: ExactMatrix) -> list[list[Scalar]]:
    """Basis of the right nullspace of a matrix over Q or F_p."""
    _require_field_matrix(matrix)
    system = LinearSystem(matrix.cols, matrix.ring)
    for row in matrix.entries:
        system.add_row({c: v for c, v in enumerate(row) if v})
    return system.kernel_basis()


def solve(matrix: ExactMatrix, rhs) -> list[Scalar] | None:
    """Some solution of ``A x = b`` with free variables zeroed, or None."""
    _require_field_matrix(matrix)
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length does not match row count")
    system = LinearSystem(matrix.cols, matrix.ring, augmented=True)
    for row, b in zip(matrix.entries, rhs):
        system.add_row({c: v for c, v in enumerate(row) if v}, matrix.ring.coerce(b))
    return system.particular_solution()


def rank(matrix: ExactMatrix) -> int:
    _require_field_matrix(matrix)
    system = LinearSystem(matrix.cols, matrix.ring)
    for row in matrix.entries:
        system.add_row({c: v for c, v in enumerate(row) if v})
    return system.rank


@dataclass(frozen=True)
class SNFDecomposition:
    """Smith normal form ``U A V = S`` with unimodular integer U, V."""

    U: ExactMatrix
    S: ExactMatrix
    V: ExactMatrix

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.rows, self.S.cols)
        return [self.S.entries[i][i] for i in range(k)]


def _nearest_quotient(a: int, b: int) -> int:
    """Quotient leaving a remainder of minimal absolute value."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(matrix: ExactMatrix, *, cancel: CancelToken | None = None) -> SNFDecomposition:
    """Diagonalize an integer matrix by unimodular row/column operations.

    The diagonal is nonnegative with each entry dividing the next; signs are
    pushed into U. Pivoting picks the entry of smallest absolute value in the
    working submatrix (row-major on ties) with nearest-integer reduction:
    first-nonzero pivoting makes intermediate entries blow up exponentially
    on dense inputs, this keeps them small. Fully deterministic.
    """
    require_same_ring(matrix.ring, ZZ)
    m, n = matrix.rows, matrix.cols
    S = [row[:] for row in matrix.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        # row_dst += factor * row_src
        Ss, Sd = S[src], S[dst]
        for c in range(n):
            Sd[c] += factor * Ss[c]
        Us, Ud = U[src], U[dst]
        for c in range(m):
            Ud[c] += factor * Us[c]

    def add_col(src, dst, factor):
        for row in S:
            row[dst] += factor * row[src]
        for row in V:
            row[dst] += factor * row[src]

    def find_min_pivot(t):
        best = None
        where = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(S[i][j])
                if v and (best is None or v < best):
                    best = v
                    where = (i, j)
        return where

    t = 0
    limit = min(m, n)
    while t < limit:
        check_cancel(cancel)
        pivot = find_min_pivot(t)
        if pivot is None:
            break
        while True:
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = S[t][t]
            clear = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = _nearest_quotient(S[i][t], p)
                    if q:
                        add_row(t, i, -q)
                    if S[i][t]:
                        clear = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = _nearest_quotient(S[t][j], p)
                    if q:
                        add_col(t, j, -q)
                    if S[t][j]:
                        clear = False
            if not clear:
                pivot = find_min_pivot(t)
                continue
            # Row and column are clear; enforce divisibility into the rest.
            offender = None
            d = S[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
            pivot = (t, t)
        if S[t][t] < 0:
            for c in range(n):
                S[t][c] = -S[t][c]
            for c in range(m):
                U[t][c] = -U[t][c]
        t += 1

    return SNFDecomposition(
        U=ExactMatrix(ZZ, U), S=ExactMatrix(ZZ, S), V=ExactMatrix(ZZ, V)
    )


def integer_solve(matrix: ExactMatrix, rhs, *, cancel: CancelToken | None = None) -> list[int] | None:
    """Integer solution of ``A x = b`` via Smith normal form, or None.

    With ``U A V = S`` the system becomes ``S y = U b``; each coordinate is
    solvable iff the diagonal entry divides the transformed right-hand side
    (zero divides only zero), and ``x = V y`` with free coordinates zeroed.
    """
    require_same_ring(matrix.ring, ZZ)
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length does not match row count")
    b = [ZZ.coerce(v) for v in rhs]
    snf = smith_normal_form(matrix, cancel=cancel)
    c = snf.U.mul_vec(b)
    m, n = matrix.rows, matrix.cols
    y = [0] * n
    for i in range(min(m, n)):
        d = snf.S.entries[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    for i in range(min(m, n), m):
        if c[i] != 0:
            return None
    return snf.V.mul_vec(y)


def determinant(matrix: ExactMatrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    require_same_ring(matrix.ring, ZZ)
    if matrix.rows != matrix.cols:
        raise ValueError("determinant requires a square matrix")
    n = matrix.rows
    a = [row[:] for row in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
