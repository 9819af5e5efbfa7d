"""Exact dense linear algebra over the rationals.

Row reduction, kernels, span dimensions and unital matrix-algebra closure.
Everything here is exact; matrices are dense row-major lists of rationals
and all operations return fresh objects (matrices are treated as immutable
values once built).
"""

from __future__ import annotations

from .rational import Q, ZERO, ONE


class Mat:
    """Dense rows x cols matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [[Q(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        m = cls.__new__(cls)
        m.rows, m.cols = rows, cols
        m.data = [[ZERO] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, n: int) -> "Mat":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> "Mat":
        """Build from a {(i, j): value} mapping."""
        m = cls.zeros(rows, cols)
        for (i, j), v in entries.items():
            m.data[i][j] = Q(v)
        return m

    @classmethod
    def from_columns(cls, columns, length: int | None = None) -> "Mat":
        cols = list(columns)
        if not cols:
            if length is None:
                raise ValueError("cannot infer row count of empty column set")
            return cls.zeros(length, 0)
        n = len(cols[0])
        m = cls.zeros(n, len(cols))
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                m.data[i][j] = Q(v)
        return m

    # -- basic ops ----------------------------------------------------

    def copy(self) -> "Mat":
        m = Mat.__new__(Mat)
        m.rows, m.cols = self.rows, self.cols
        m.data = [row[:] for row in self.data]
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __add__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        m = Mat.__new__(Mat)
        m.rows, m.cols = self.rows, self.cols
        m.data = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return m

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        m = Mat.__new__(Mat)
        m.rows, m.cols = self.rows, self.cols
        m.data = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return m

    def scale(self, c) -> "Mat":
        c = Q(c)
        m = Mat.__new__(Mat)
        m.rows, m.cols = self.rows, self.cols
        m.data = [[c * x for x in row] for row in self.data]
        return m

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out = Mat.zeros(self.rows, other.cols)
        odata = out.data
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = odata[i]
            for k, aik in enumerate(arow):
                if aik:
                    brow = bdata[k]
                    for j, bkj in enumerate(brow):
                        if bkj:
                            orow[j] += aik * bkj
        return out

    def commutator(self, other: "Mat") -> "Mat":
        return self * other - other * self

    def transpose(self) -> "Mat":
        m = Mat.zeros(self.cols, self.rows)
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    m.data[j][i] = v
        return m

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def flat(self) -> list:
        return [v for row in self.data for v in row]

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def apply(self, vec: list) -> list:
        """Matrix times column vector."""
        out = []
        for row in self.data:
            s = ZERO
            for a, v in zip(row, vec):
                if a and v:
                    s += a * v
            out.append(s)
        return out

    @property
    def shape(self):
        return (self.rows, self.cols)

    def _check_shape(self, other: "Mat"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"Mat[{self.rows}x{self.cols}: {body}]"


def rref(m: Mat):
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  Exact Gauss-Jordan with leading
    pivots normalized to 1 and eliminated above and below.
    """
    r = m.copy()
    data = r.data
    pivots = []
    row = 0
    for col in range(r.cols):
        if row >= r.rows:
            break
        piv = None
        for i in range(row, r.rows):
            if data[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != row:
            data[row], data[piv] = data[piv], data[row]
        inv = 1 / data[row][col]
        data[row] = [inv * x for x in data[row]]
        prow = data[row]
        for i in range(r.rows):
            if i != row and data[i][col]:
                f = data[i][col]
                data[i] = [x - f * p for x, p in zip(data[i], prow)]
        pivots.append(col)
        row += 1
    return r, row, pivots


def rank(m: Mat) -> int:
    return rref(m)[1]


def kernel_basis(m: Mat) -> list:
    """Basis of the right null space, as a list of column vectors.

    Vectors are ordered by free column; each has a 1 in its free column.
    """
    r, rk, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r.data[i][f]
        basis.append(v)
    return basis


def stack_rows(mats) -> Mat:
    """Vertically concatenate matrices with equal column counts."""
    mats = list(mats)
    cols = mats[0].cols
    out = Mat.__new__(Mat)
    out.cols = cols
    out.data = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column count mismatch in stack")
        out.data.extend(row[:] for row in m.data)
    out.rows = len(out.data)
    return out


class SpanTracker:
    """Incrementally row-reduce a growing set of vectors.

    Keeps an echelonized basis; add() reports whether the vector enlarged
    the span.  Used wherever we only need dimensions of large spanning
    sets without materializing one huge matrix.
    """

    def __init__(self, length: int):
        self.length = length
        self._pivots: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: list) -> list:
        v = [Q(x) for x in vec]
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        for col in sorted(self._pivots):
            c = v[col]
            if c:
                prow = self._pivots[col]
                v = [x - c * p for x, p in zip(v, prow)]
        return v

    def add(self, vec: list) -> bool:
        v = self.reduce(vec)
        for col, c in enumerate(v):
            if c:
                inv = 1 / c
                self._pivots[col] = [inv * x for x in v]
                return True
        return False

    def contains(self, vec: list) -> bool:
        return all(not x for x in self.reduce(vec))


def span_dimension(vectors_or_mats) -> int:
    """Dimension of the rational span of vectors (or flattened matrices)."""
    tracker = None
    for item in vectors_or_mats:
        vec = item.flat() if isinstance(item, Mat) else list(item)
        if tracker is None:
            tracker = SpanTracker(len(vec))
        elif tracker.length != len(vec):
            raise ValueError("shape mismatch in span_dimension")
        tracker.add(vec)
    return tracker.dim if tracker is not None else 0


def algebra_closure(gens, size: int) -> list:
    """Basis of the smallest unital matrix algebra containing ``gens``.

    Seeds with the identity and the generators, then repeatedly multiplies
    basis elements pairwise and re-spans until the dimension stabilizes;
    terminates because the dimension is bounded by size**2.
    """
    gens = list(gens)
    for g in gens:
        if g.shape != (size, size):
            raise ValueError(f"generator of shape {g.shape}, expected square {size}")
    tracker = SpanTracker(size * size)
    basis: list[Mat] = []

    def absorb(m: Mat) -> bool:
        if tracker.add(m.flat()):
            basis.append(m)
            return True
        return False

    absorb(Mat.identity(size))
    for g in gens:
        absorb(g)
    while True:
        grew = False
        snapshot = list(basis)
        for a in snapshot:
            for b in snapshot:
                if absorb(a * b):
                    grew = True
        if not grew:
            return basis


def solve_columns(b: Mat, c: Mat) -> Mat:
    """Solve B X = C where B has full column rank.

    Used to restrict operators to invariant subspaces (columns of B).
    Raises ValueError if the system is inconsistent or underdetermined.
    """
    aug = Mat.zeros(b.rows, b.cols + c.cols)
    for i in range(b.rows):
        aug.data[i][: b.cols] = b.data[i][:]
        aug.data[i][b.cols :] = c.data[i][:]
    r, rk, pivots = rref(aug)
    x = Mat.zeros(b.cols, c.cols)
    for i, p in enumerate(pivots):
        if p >= b.cols:
            raise ValueError("inconsistent system in solve_columns")
        x.data[p] = r.data[i][b.cols :]
    if len(pivots) < b.cols:
        raise ValueError("solve_columns requires full column rank")
    return x


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    return solve_columns(m, Mat.identity(m.rows))
