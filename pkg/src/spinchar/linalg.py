"""Small dense matrices over Q(w) or Q(zeta9), and exact linear solving.

Everything is exact: entries are `cyclo.Cyc` or `cyclo9.Cyc9` (one field per
matrix, mixed operands promote to Q(zeta9)), elimination uses first-nonzero
pivoting (there is no rounding, so no pivot-magnitude heuristics), and a
singular inverse or dimension mismatch raises instead of degrading.
"""

from fractions import Fraction
import math

from .cyclo import Cyc
from .cyclo9 import Cyc9, scalar_str


class MatrixError(ArithmeticError):
    """Dimension mismatch or inversion of a singular matrix."""


def _lift(x, field):
    if isinstance(x, field):
        return x
    return field.from_scalar(x)


def _infer_field(values):
    for x in values:
        if isinstance(x, Cyc9):
            return Cyc9
    return Cyc


class CycMatrix:
    """An n x n matrix over Q(w) or Q(zeta9), immutable."""

    __slots__ = ("rows", "n", "field")

    def __init__(self, rows, field=None):
        rows = [list(row) for row in rows]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise MatrixError("matrix must be square")
        if field is None:
            field = _infer_field(x for row in rows for x in row)
        rows = tuple(tuple(_lift(x, field) for x in row) for row in rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("CycMatrix is immutable")

    @staticmethod
    def identity(n, field=Cyc):
        one, zero = field.one(), field.zero()
        return CycMatrix([[one if i == j else zero for j in range(n)]
                          for i in range(n)], field)

    @staticmethod
    def zero(n, field=Cyc):
        return CycMatrix([[field.zero()] * n for _ in range(n)], field)

    @staticmethod
    def diagonal(entries, field=None):
        entries = list(entries)
        if field is None:
            field = _infer_field(entries)
        entries = [_lift(e, field) for e in entries]
        zero = field.zero()
        n = len(entries)
        return CycMatrix([[entries[i] if i == j else zero for j in range(n)]
                          for i in range(n)], field)

    @staticmethod
    def scalar(n, value):
        return CycMatrix.diagonal([value] * n)

    def to_field(self, field):
        if field is self.field:
            return self
        return CycMatrix(self.rows, field)

    def _common(self, other):
        if not isinstance(other, CycMatrix) or other.n != self.n:
            raise MatrixError("dimension mismatch")
        if self.field is other.field:
            return self, other
        return self.to_field(Cyc9), other.to_field(Cyc9)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        a, b = self._common(other)
        return a.rows == b.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        a, b = self._common(other)
        return CycMatrix([[x + y for x, y in zip(r1, r2)]
                          for r1, r2 in zip(a.rows, b.rows)], a.field)

    def __sub__(self, other):
        a, b = self._common(other)
        return CycMatrix([[x - y for x, y in zip(r1, r2)]
                          for r1, r2 in zip(a.rows, b.rows)], a.field)

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            a, b = self._common(other)
            cols = list(zip(*b.rows))
            zero = a.field.zero()
            return CycMatrix([[_dot(row, col, zero) for col in cols]
                              for row in a.rows], a.field)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        field = self.field
        if isinstance(c, Cyc9) and field is Cyc:
            return self.to_field(Cyc9).scale(c)
        c = _lift(c, field)
        return CycMatrix([[c * x for x in row] for row in self.rows], field)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycMatrix.identity(self.n, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -------------------------------------------------------

    def trace(self):
        t = self.field.zero()
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def det(self):
        """Exact determinant by elimination with row swaps."""
        n = self.n
        m = [list(row) for row in self.rows]
        det = self.field.one()
        for col in range(n):
            pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
            if pivot is None:
                return self.field.zero()
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            p = m[col][col]
            det = det * p
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    f = m[r][col] / p
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def inverse(self):
        """Exact inverse via Gauss-Jordan; raises MatrixError when singular."""
        n = self.n
        one, zero = self.field.one(), self.field.zero()
        m = [list(row) + [one if i == j else zero for j in range(n)]
             for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
            if pivot is None:
                raise MatrixError("singular matrix has no inverse")
            m[col], m[pivot] = m[pivot], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and not m[r][col].is_zero():
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return CycMatrix([row[n:] for row in m], self.field)

    def conj_transpose(self):
        return CycMatrix([[self.rows[j][i].conj() for j in range(self.n)]
                          for i in range(self.n)], self.field)

    def is_unitary(self):
        return self * self.conj_transpose() == CycMatrix.identity(self.n, self.field)

    def as_scalar(self):
        """The c with self = c*I, or None if not a scalar matrix."""
        c = self.rows[0][0]
        if self != CycMatrix.diagonal([c] * self.n, self.field):
            return None
        return c

    def str_rows(self):
        return [[scalar_str(x) for x in row] for row in self.rows]

    def __repr__(self):
        return "CycMatrix(%r)" % (self.str_rows(),)


def _dot(u, v, zero):
    t = zero
    for x, y in zip(u, v):
        if not x.is_zero():
            t = t + x * y
    return t


# The cyclic shift and its square; J sends basis vector e_i to e_{i-1}.
J_SHIFT = CycMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
K_SHIFT = CycMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


# -- exact homogeneous solving -------------------------------------------

def nullspace(rows, ncols, field=None):
    """Basis of the right nullspace of the given row list, exactly.

    Gaussian elimination with first-nonzero pivoting; each input row is
    cleared of denominators first, and the returned basis has one vector per
    free column (that column's entry set to 1).
    """
    if field is None:
        field = _infer_field(x for row in rows for x in row
                             if isinstance(x, (Cyc, Cyc9)))
    one, zero = field.one(), field.zero()
    work = []
    for row in rows:
        row = [_lift(x, field) for x in row]
        if len(row) != ncols:
            raise MatrixError("row length mismatch")
        den = 1
        for x in row:
            d = x.denominator_lcm()
            den = den * d // math.gcd(den, d)
        work.append([x * Fraction(den) for x in row])

    pivots = {}  # column -> row index in echelon list
    echelon = []
    for row in work:
        row = list(row)
        for col, r in pivots.items():
            if not row[col].is_zero():
                f = row[col]
                row = [x - f * y for x, y in zip(row, echelon[r])]
        lead = next((c for c in range(ncols) if not row[c].is_zero()), None)
        if lead is None:
            continue
        p = row[lead]
        row = [x / p for x in row]
        for r, other in enumerate(echelon):
            if not other[lead].is_zero():
                f = other[lead]
                echelon[r] = [x - f * y for x, y in zip(other, row)]
        pivots[lead] = len(echelon)
        echelon.append(row)

    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for col, r in pivots.items():
            vec[col] = -echelon[r][fc]
        basis.append(vec)
    return basis


def intertwiner_space(pairs, n):
    """Basis of {X : A*X = X*B for every (A, B) pair}, as CycMatrix list.

    Each matrix equation contributes n^2 homogeneous linear rows in the n^2
    entries of X (row-major unknown order).
    """
    field = Cyc
    for A, B in pairs:
        if A.n != n or B.n != n:
            raise MatrixError("dimension mismatch in constraint pair")
        if A.field is Cyc9 or B.field is Cyc9:
            field = Cyc9
    zero = field.zero()
    rows = []
    for A, B in pairs:
        A = A.to_field(field)
        B = B.to_field(field)
        for p in range(n):
            for q in range(n):
                row = [zero] * (n * n)
                # sum_j A[p,j] X[j,q] - sum_j X[p,j] B[j,q] = 0
                for j in range(n):
                    row[j * n + q] = row[j * n + q] + A[p, j]
                    row[p * n + j] = row[p * n + j] - B[j, q]
                rows.append(row)
    basis = nullspace(rows, n * n, field)
    return [CycMatrix([vec[i * n:(i + 1) * n] for i in range(n)], field)
            for vec in basis]
