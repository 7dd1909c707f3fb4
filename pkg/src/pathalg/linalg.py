"""Exact dense matrices and the row-reduced subspace calculus.

Everything here works over one of the fields from :mod:`pathalg.fields` and
never rounds.  Pivoting is deterministic (first nonzero column), so reduced
bases are reproducible across runs and platforms.

Large homogeneous systems (the derivation solvers assemble up to dim^3
equations) go through :class:`SparseSolver`, which keeps rows as dicts and
stays in echelon (not fully reduced) form until the kernel is extracted.
"""

from .errors import DimensionMismatchError


class Matrix:
    """Dense rectangular matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise DimensionMismatchError("empty matrix needs explicit ncols")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows")

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    def copy(self):
        return Matrix(self.field, self.rows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"

    def rref(self):
        """Return (reduced matrix, pivot column list); zero rows sink to the bottom."""
        f = self.field
        sub, mul = f.sub, f.mul
        rows = [list(r) for r in self.rows]
        pivots = []
        piv_r = 0
        for col in range(self.ncols):
            src = None
            for r in range(piv_r, self.nrows):
                if rows[r][col]:
                    src = r
                    break
            if src is None:
                continue
            rows[piv_r], rows[src] = rows[src], rows[piv_r]
            lead = rows[piv_r][col]
            if lead != f.one:
                inv = f.inv(lead)
                rows[piv_r] = [mul(inv, x) for x in rows[piv_r]]
            prow = rows[piv_r]
            support = [(j, prow[j]) for j in range(col, self.ncols) if prow[j]]
            for r in range(self.nrows):
                if r == piv_r:
                    continue
                c = rows[r][col]
                if c:
                    rr = rows[r]
                    for j, pv in support:
                        rr[j] = sub(rr[j], mul(c, pv))
            pivots.append(col)
            piv_r += 1
            if piv_r == self.nrows:
                break
        return Matrix(f, rows, self.ncols), pivots

    def kernel(self):
        """Nullspace {x : Mx = 0} as a Subspace of ambient ncols."""
        solver = SparseSolver(self.field, self.ncols)
        for row in self.rows:
            solver.add_row({j: v for j, v in enumerate(row) if v})
        return Subspace.from_vectors(self.field, self.ncols, solver.kernel_basis())

    def solve(self, b):
        """Any solution x of Mx = b, or None if inconsistent."""
        if len(b) != self.nrows:
            raise DimensionMismatchError("rhs length != row count")
        f = self.field
        zero = f.zero
        aug = Matrix(f, [list(r) + [b[i]] for i, r in enumerate(self.rows)], self.ncols + 1)
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [zero] * self.ncols
        for r, col in enumerate(pivots):
            x[col] = red.rows[r][self.ncols]
        return x

    def mul_vector(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatchError("vector length != column count")
        f = self.field
        zero = f.zero
        out = []
        for row in self.rows:
            s = zero
            for a, x in zip(row, v):
                if a and x:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out


class SparseSolver:
    """Incremental echelon form over sparse rows (dict col -> nonzero scalar).

    Rows are kept normalized (pivot coefficient 1) but not inter-reduced;
    full reduction happens only during kernel extraction, which keeps fill-in
    down on the big derivation systems.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = {}  # pivot col -> row dict

    @property
    def rank(self):
        return len(self.rows)

    def add_row(self, row):
        """Insert one constraint; returns True if it increased the rank."""
        f = self.field
        zero = f.zero
        rows = self.rows
        sub, mul = f.sub, f.mul
        row = {c: v for c, v in row.items() if v}
        while row:
            p = min(row)
            existing = rows.get(p)
            if existing is None:
                coef = row[p]
                if coef != f.one:
                    inv = f.inv(coef)
                    row = {c: mul(inv, v) for c, v in row.items()}
                rows[p] = row
                return True
            coef = row.pop(p)
            get = row.get
            for c, v in existing.items():
                if c == p:
                    continue
                w = sub(get(c, zero), mul(coef, v))
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
        return False

    def add_rows(self, rows):
        for r in rows:
            self.add_row(r)

    def free_columns(self):
        return [c for c in range(self.ncols) if c not in self.rows]

    def kernel_basis(self):
        """Kernel vectors (dense lists), one per free column, back-substituted."""
        f = self.field
        zero = f.zero
        pivots = sorted(self.rows)
        free = self.free_columns()
        basis = []
        for fc in free:
            x = {fc: f.one}
            get = x.get
            for p in reversed(pivots):
                row = self.rows[p]
                s = zero
                for c, v in row.items():
                    if c == p:
                        continue
                    xc = get(c)
                    if xc is not None:
                        s = f.add(s, f.mul(v, xc))
                if s:
                    x[p] = f.neg(s)
            vec = [zero] * self.ncols
            for c, v in x.items():
                vec[c] = v
            basis.append(vec)
        return basis

    def contains(self, vector):
        """True iff the vector lies in the row space."""
        f = self.field
        zero = f.zero
        row = {c: v for c, v in enumerate(vector) if v}
        while row:
            p = min(row)
            existing = self.rows.get(p)
            if existing is None:
                return False
            coef = row.pop(p)
            for c, v in existing.items():
                if c == p:
                    continue
                w = f.sub(row.get(c, zero), f.mul(coef, v))
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
        return True


class Subspace:
    """A subspace of K^ambient held as a row-reduced echelon basis.

    Rows are nonzero with strictly increasing pivots, pivot columns are zero
    elsewhere, and the basis is unique for the subspace, so equality is just
    row-list equality.
    """

    __slots__ = ("field", "ambient", "rows", "pivots", "_sparse")

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        self._sparse = None

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, [], [])

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        """Span of the given dense vectors, fully reduced."""
        zero = field.zero
        m = Matrix(field, list(vectors) or [[zero] * ambient], ambient)
        red, pivots = m.rref()
        rows = [red.rows[i] for i in range(len(pivots))]
        return cls(field, ambient, rows, pivots)

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient} over {self.field.name})"

    def _check_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatchError("ambient spaces differ")

    def _sparse_rows(self):
        if self._sparse is None:
            self._sparse = [
                [(j, c) for j, c in enumerate(row) if c] for row in self.rows
            ]
        return self._sparse

    def reduce(self, vector):
        """Residual of a vector after reduction against the basis."""
        if len(vector) != self.ambient:
            raise DimensionMismatchError("vector has wrong ambient dimension")
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vector)
        for srow, p in zip(self._sparse_rows(), self.pivots):
            c = v[p]
            if c:
                for j, rv in srow:
                    v[j] = sub(v[j], mul(c, rv))
        return v

    def contains(self, vector):
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Coefficients of the vector over the basis rows, or None."""
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vector)
        coords = []
        for srow, p in zip(self._sparse_rows(), self.pivots):
            c = v[p]
            coords.append(c)
            if c:
                for j, rv in srow:
                    v[j] = sub(v[j], mul(c, rv))
        if any(v):
            return None
        return coords

    def sum(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other):
        """Zassenhaus: eliminate [v|v] over self stacked with [w|0] over other."""
        self._check_ambient(other)
        f = self.field
        zero = f.zero
        n = self.ambient
        stacked = []
        for v in self.rows:
            stacked.append(list(v) + list(v))
        for w in other.rows:
            stacked.append(list(w) + [zero] * n)
        if not stacked:
            return Subspace.zero(f, n)
        red, pivots = Matrix(f, stacked, 2 * n).rref()
        inter = []
        for i in range(len(pivots)):
            row = red.rows[i]
            if not any(row[:n]):
                inter.append(row[n:])
        return Subspace.from_vectors(f, n, inter)

    def basis_vectors(self):
        return [list(r) for r in self.rows]


def subspace_sum(a, b):
    return a.sum(b)


def subspace_intersect(a, b):
    return a.intersect(b)


def subspace_eq(a, b):
    if a.ambient != b.ambient or a.field != b.field:
        raise DimensionMismatchError("ambient spaces differ")
    return a.rows == b.rows
