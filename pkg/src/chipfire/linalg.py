"""Exact integer/rational matrices and fraction-free linear algebra.

Everything here is exact: entries are Python ints or ``fractions.Fraction``
values in lowest terms, determinants use Bareiss fraction-free elimination,
and solves return exact rational vectors.  No floating point anywhere —
every consumer of this module is an integrality test, and rounding would
be unsound.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import GraphError, SingularMatrixError


def _norm(x):
    # keep integers as ints so hot integer paths stay cheap
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return int(x)


class ExactVector:
    """Immutable vector of exact rationals."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(_norm(x) for x in entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, ExactVector):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ExactVector({list(self.entries)!r})"

    def __add__(self, other):
        return ExactVector(a + b for a, b in zip(self.entries, other, strict=True))

    def __sub__(self, other):
        return ExactVector(a - b for a, b in zip(self.entries, other, strict=True))

    def scale(self, c):
        return ExactVector(c * a for a in self.entries)

    @property
    def is_integral(self):
        return all(not isinstance(x, Fraction) for x in self.entries)

    def denominator_lcm(self):
        out = 1
        for x in self.entries:
            if isinstance(x, Fraction):
                out = out * x.denominator // math.gcd(out, x.denominator)
        return out


class ExactMatrix:
    """Immutable dense matrix of exact rationals (rows of tuples)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        entries = tuple(tuple(_norm(x) for x in row) for row in rows_of_entries)
        if entries:
            width = len(entries[0])
            if any(len(r) != width for r in entries):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.entries = entries
        self.rows = len(entries)
        self.cols = width

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.entries]!r})"

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_integral(self):
        return all(not isinstance(x, Fraction) for row in self.entries for x in row)

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        vv = tuple(v)
        return ExactVector(
            sum(a * b for a, b in zip(row, vv)) for row in self.entries
        )

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = [tuple(other.entries[k][j] for k in range(other.rows)) for j in range(other.cols)]
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def transpose(self):
        return ExactMatrix(zip(*self.entries)) if self.rows else ExactMatrix([])


class Partition:
    """Disjoint, exhaustive, nonempty classes over indices 0..n-1."""

    __slots__ = ("classes", "n")

    def __init__(self, classes, n):
        cls = tuple(tuple(c) for c in classes)
        seen = set()
        for c in cls:
            if not c:
                raise ValueError("empty partition class")
            for i in c:
                if i in seen:
                    raise ValueError(f"index {i} appears in two classes")
                seen.add(i)
        if seen != set(range(n)):
            raise ValueError("classes do not cover 0..n-1 exactly")
        self.classes = cls
        self.n = n

    def __len__(self):
        return len(self.classes)


def _integer_rows(m):
    """Scale each row to integers; returns (int rows, per-row scale factors)."""
    rows = []
    scales = []
    for row in m.entries:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        if lcm == 1:
            rows.append(list(row))
        else:
            rows.append([int(x * lcm) for x in row])
        scales.append(lcm)
    return rows, scales


def _bareiss_forward(rows, width):
    """In-place fraction-free elimination on augmented integer rows.

    Returns (pivot sign, last pivot) where last pivot = +-det of the square
    part times the row scaling.  Raises SingularMatrixError on rank deficiency
    of the leading square block.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrixError("zero pivot column")
        piv = rows[k][k]
        for r in range(k + 1, n):
            mrk = rows[r][k]
            row = rows[r]
            rowk = rows[k]
            # Bareiss one-step update: every entry stays an exact minor
            for c in range(k + 1, width):
                row[c] = (row[c] * piv - mrk * rowk[c]) // prev
            row[k] = 0
        prev = piv
    return sign, prev


def _back_substitute(rows, n, col):
    """Solve the triangular system for augmented column ``col``.

    Returns the integer vector z = det_T * y where det_T = rows[n-1][n-1];
    all divisions are exact (z is an adjugate image).
    """
    d = rows[n - 1][n - 1]
    z = [0] * n
    for k in range(n - 1, -1, -1):
        acc = d * rows[k][col]
        for c in range(k + 1, n):
            acc -= rows[k][c] * z[c]
        q, rem = divmod(acc, rows[k][k])
        if rem:
            raise ArithmeticError("inexact back-substitution (corrupt elimination)")
        z[k] = q
    return z, d


def determinant(m: ExactMatrix):
    """Exact determinant via Bareiss fraction-free elimination."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    rows, scales = _integer_rows(m)
    try:
        sign, last = _bareiss_forward(rows, n)
    except SingularMatrixError:
        return 0
    det = sign * last
    scale = 1
    for s in scales:
        scale *= s
    if scale == 1:
        return det
    return _norm(Fraction(det, scale))


def solve_exact(m: ExactMatrix, b) -> ExactVector:
    """Exact solution of m @ y = b; verifies m @ y == b before returning."""
    if not m.is_square:
        raise ValueError("solve requires a square matrix")
    n = m.rows
    bv = list(b)
    if len(bv) != n:
        raise ValueError("dimension mismatch")
    if n == 0:
        return ExactVector([])
    blcm = 1
    for x in bv:
        if isinstance(x, Fraction):
            blcm = blcm * x.denominator // math.gcd(blcm, x.denominator)
    rows, scales = _integer_rows(m)
    for row, x, s in zip(rows, bv, scales):
        row.append(int(x * blcm) * s)
    _bareiss_forward(rows, n + 1)
    z, d = _back_substitute(rows, n, n)
    y = ExactVector(Fraction(zi, d * blcm) for zi in z)
    if m.matvec(y) != ExactVector(bv):
        raise ArithmeticError("solve verification failed")  # pragma: no cover
    return y


def solve_many(m: ExactMatrix, rhs_columns):
    """Exact solutions for several right-hand sides off one elimination.

    ``rhs_columns`` is a sequence of integer vectors.  Returns a list of
    ExactVector solutions in the same order.  Integer input only; that is
    the only case the callers need.
    """
    if not m.is_square:
        raise ValueError("solve requires a square matrix")
    n = m.rows
    cols = [list(c) for c in rhs_columns]
    rows, scales = _integer_rows(m)
    for i, row in enumerate(rows):
        s = scales[i]
        for c in cols:
            if len(c) != n:
                raise ValueError("dimension mismatch")
            row.append(c[i] * s)
    width = n + len(cols)
    _bareiss_forward(rows, width)
    out = []
    for j in range(len(cols)):
        z, d = _back_substitute(rows, n, n + j)
        out.append(ExactVector(Fraction(zi, d) for zi in z))
    return out


def inverse_exact(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises SingularMatrixError when none exists."""
    n = m.rows
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    sols = solve_many(m, [[1 if i == j else 0 for i in range(n)] for j in range(n)])
    return ExactMatrix(zip(*(s.entries for s in sols))) if n else ExactMatrix([])


def lcd_of_entries(m: ExactMatrix) -> int:
    """Least common multiple of all entry denominators (1 for integer input)."""
    out = 1
    for row in m.entries:
        for x in row:
            if isinstance(x, Fraction):
                out = out * x.denominator // math.gcd(out, x.denominator)
    return out


def partition_collapse(m: ExactMatrix, p: Partition) -> ExactMatrix:
    """Collapse rows and columns by summing over partition classes:
    out[A][B] = sum of m[u][v] over u in A, v in B."""
    if m.rows != p.n or m.cols != p.n:
        raise ValueError("partition dimensions do not match matrix")
    out = []
    for A in p.classes:
        row = []
        for B in p.classes:
            row.append(sum(m.entries[u][v] for u in A for v in B))
        out.append(row)
    return ExactMatrix(out)


def partition_collapse_vec(v, p: Partition) -> ExactVector:
    vv = tuple(v)
    if len(vv) != p.n:
        raise ValueError("partition dimensions do not match vector")
    return ExactVector(sum(vv[u] for u in A) for A in p.classes)


def full_laplacian(g) -> ExactMatrix:
    """Graph Laplacian: degree on the diagonal, minus edge weight off it."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        rows[v][v] = g.degree(v)
    for u, v, w in g.edges:
        rows[u][v] = -w
        rows[v][u] = -w
    return ExactMatrix(rows)


def reduced_laplacian(g, sink: int) -> ExactMatrix:
    """Laplacian with the sink's row and column removed (vertex order kept)."""
    if not g.is_connected():
        raise GraphError("reduced Laplacian requires a connected graph")
    if not 0 <= sink < g.n:
        raise GraphError(f"sink {sink} out of range")
    keep = [v for v in range(g.n) if v != sink]
    pos = {v: i for i, v in enumerate(keep)}
    m = len(keep)
    rows = [[0] * m for _ in range(m)]
    for v in keep:
        rows[pos[v]][pos[v]] = g.degree(v)
    for u, v, w in g.edges:
        if u != sink and v != sink:
            rows[pos[u]][pos[v]] = -w
            rows[pos[v]][pos[u]] = -w
    return ExactMatrix(rows)


def spanning_tree_count(g) -> int:
    """Number of spanning trees by the matrix-tree theorem.

    Computes det of the reduced Laplacian at every sink and asserts they
    agree (sink independence of the sandpile group order).
    """
    if not g.is_connected():
        raise GraphError("spanning trees of a disconnected graph")
    if g.n == 1:
        return 1
    dets = [determinant(reduced_laplacian(g, s)) for s in range(g.n)]
    first = dets[0]
    if any(d != first for d in dets):
        raise AssertionError("determinant depends on sink choice")  # pragma: no cover
    return int(first)
