"""Bound path algebras: path enumeration, products, relation ideals.

The product convention is fixed once: for paths x and y, the product x*y is
the concatenation "y first, then x" and is nonzero exactly when e(y) = s(x).
Input documents write paths in traversal order; they are converted here.
"""

from dataclasses import dataclass

from .errors import DimensionMismatchError, RelationError
from .linalg import SparseSolver, Subspace
from .parser import RelationSpec, parse_quiver


@dataclass(frozen=True)
class Path:
    """A path of the quiver; arrows stored in traversal order (first first).

    A trivial path has an empty arrow tuple and source == target.
    """

    arrows: tuple
    source: str
    target: str

    @staticmethod
    def trivial(vertex):
        return Path((), vertex, vertex)

    @staticmethod
    def from_arrows(quiver, names):
        """Path from traversal-order arrow names; raises on broken chains."""
        if not names:
            raise RelationError("empty arrow sequence")
        arrs = []
        for n in names:
            a = quiver.arrow_by_name.get(n)
            if a is None:
                raise RelationError(f"unknown arrow {n!r}")
            arrs.append(a)
        for prev, nxt in zip(arrs, arrs[1:]):
            if prev.target != nxt.source:
                raise RelationError(
                    f"arrows {prev.name!r} and {nxt.name!r} do not compose"
                )
        return Path(tuple(a.name for a in arrs), arrs[0].source, arrs[-1].target)

    @property
    def length(self):
        return len(self.arrows)

    def is_trivial(self):
        return not self.arrows

    def __str__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows)


def multiply_paths(x, y):
    """Product x*y: concatenation with y traversed first, or None for zero."""
    if x.is_trivial():
        return y if y.target == x.source else None
    if y.is_trivial():
        return x if x.source == y.source else None
    if y.target != x.source:
        return None
    return Path(y.arrows + x.arrows, y.source, x.target)


def enumerate_paths(q):
    """All paths of an acyclic quiver in canonical order.

    Trivial paths come first in vertex declaration order; nontrivial paths
    are sorted by length, then lexicographically by their traversal-order
    arrow-name sequence.
    """
    paths = [Path.trivial(v) for v in q.vertices]
    frontier = [Path((a.name,), a.source, a.target) for a in q.arrows]
    by_source = {}
    for a in q.arrows:
        by_source.setdefault(a.source, []).append(a)
    while frontier:
        frontier.sort(key=Path.sort_key)
        paths.extend(frontier)
        nxt = []
        for p in frontier:
            for a in by_source.get(p.target, ()):
                nxt.append(Path(p.arrows + (a.name,), p.source, a.target))
        frontier = nxt
    return paths


class Relation:
    """A linear combination of parallel paths of length >= 2."""

    def __init__(self, field, terms):
        terms = [(c, p) for c, p in terms if c != field.zero]
        if not terms:
            raise RelationError("relation needs at least one nonzero coefficient")
        src = {p.source for _, p in terms}
        tgt = {p.target for _, p in terms}
        if len(src) != 1 or len(tgt) != 1:
            raise RelationError("relation terms must be parallel paths")
        for _, p in terms:
            if p.length < 2:
                raise RelationError(f"relation path {p} has length {p.length} < 2")
        self.field = field
        self.terms = terms
        self.source = src.pop()
        self.target = tgt.pop()

    @staticmethod
    def from_spec(quiver, field, spec):
        terms = []
        for coeff, names in spec.terms:
            path = Path.from_arrows(quiver, names)
            terms.append((field.from_fraction(coeff), path))
        return Relation(field, terms)

    def __repr__(self):
        return "Relation(" + " + ".join(f"{c}*{p}" for c, p in self.terms) + ")"


class PathAlgebra:
    """The quotient of a path algebra by the ideal of a relation set.

    Immutable after construction.  ``basis`` lists the surviving path cosets
    in canonical order; ``table[i][j]`` holds the product of basis elements
    i and j as a sparse dict {k: coefficient}.
    """

    def __init__(self, quiver, field, relations=()):
        self.quiver = quiver
        self.field = field
        self.relations = list(relations)
        self.paths = enumerate_paths(quiver)
        self.path_index = {p: i for i, p in enumerate(self.paths)}
        self._cache = {}  # memo for the solved derivation-type spaces

        self.ideal = self._ideal_span()
        pivot_set = set(self.ideal.pivots)
        self.basis = [p for i, p in enumerate(self.paths) if i not in pivot_set]
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.table = self._multiplication_table()

    # -- construction ---------------------------------------------------

    def _ideal_span(self):
        f = self.field
        nfull = len(self.paths)
        solver = SparseSolver(f, nfull)
        for rel in self.relations:
            # u * sigma * v over all composable path sandwiches
            lefts = [u for u in self.paths if u.source == rel.target]
            rights = [v for v in self.paths if v.target == rel.source]
            for u in lefts:
                for v in rights:
                    row = {}
                    for coeff, p in rel.terms:
                        up = multiply_paths(u, p)
                        upv = multiply_paths(up, v)
                        idx = self.path_index[upv]
                        prev = row.get(idx, f.zero)
                        row[idx] = f.add(prev, coeff)
                    solver.add_row(row)
        rows = []
        for p in sorted(solver.rows):
            vec = [f.zero] * nfull
            for c, val in solver.rows[p].items():
                vec[c] = val
            rows.append(vec)
        # inter-reduce for a genuine RREF basis of the ideal
        return Subspace.from_vectors(f, nfull, rows)

    def _reduce_full_vector(self, vec):
        """KGamma coefficient vector -> quotient coordinates over self.basis."""
        f = self.field
        residual = self.ideal.reduce(vec) if self.ideal.rows else vec
        out = [f.zero] * self.dim
        for i, val in enumerate(residual):
            if val != f.zero:
                out[self.basis_index[self.paths[i]]] = val
        return out

    def _multiplication_table(self):
        f = self.field
        table = [[None] * self.dim for _ in range(self.dim)]
        for i, p in enumerate(self.basis):
            for j, q in enumerate(self.basis):
                prod = multiply_paths(p, q)
                if prod is None:
                    table[i][j] = {}
                    continue
                vec = [f.zero] * len(self.paths)
                vec[self.path_index[prod]] = f.one
                coords = self._reduce_full_vector(vec)
                table[i][j] = {k: v for k, v in enumerate(coords) if v != f.zero}
        return table

    # -- element helpers -------------------------------------------------

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def unit(self):
        """1 = sum of all trivial-path cosets."""
        v = self.zero_vector()
        for vert in self.quiver.vertices:
            v[self.basis_index[Path.trivial(vert)]] = self.field.one
        return v

    def idempotent(self, vertex):
        v = self.zero_vector()
        v[self.basis_index[Path.trivial(vertex)]] = self.field.one
        return v

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def multiply(self, x, y):
        """Product of two coefficient vectors over the quotient basis."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("element vectors must match the basis")
        f = self.field
        out = self.zero_vector()
        ys = [(j, yj) for j, yj in enumerate(y) if yj]
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in ys:
                cell = row[j]
                if cell:
                    c = f.mul(xi, yj)
                    for k, ck in cell.items():
                        out[k] = f.add(out[k], f.mul(c, ck))
        return out

    def commutator(self, x, y):
        f = self.field
        xy = self.multiply(x, y)
        yx = self.multiply(y, x)
        return [f.sub(a, b) for a, b in zip(xy, yx)]

    def reduce(self, full_vector):
        """Coset map: KGamma path coefficients -> quotient coordinates."""
        if len(full_vector) != len(self.paths):
            raise DimensionMismatchError("vector over the full path list expected")
        return self._reduce_full_vector(list(full_vector))

    def element_from_path_coeffs(self, terms):
        """Quotient coordinates from {path-string: scalar} over KGamma paths."""
        f = self.field
        vec = [f.zero] * len(self.paths)
        names = {str(p): i for i, p in enumerate(self.paths)}
        for name, coeff in terms.items():
            if name not in names:
                raise KeyError(f"unknown path {name!r}")
            i = names[name]
            vec[i] = f.add(vec[i], coeff)
        return self._reduce_full_vector(vec)

    def format_element(self, vec):
        f = self.field
        parts = [
            f"{f.format(c)}*{self.basis[i]}" for i, c in enumerate(vec) if c != f.zero
        ]
        return " + ".join(parts) if parts else "0"

    # -- structural checks ------------------------------------------------

    def check_axioms(self):
        """Exhaustive unit, orthogonal-idempotent, and associativity checks."""
        f = self.field
        one = self.unit()
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.multiply(one, b) != b or self.multiply(b, one) != b:
                raise AssertionError(f"unit law fails on basis element {self.basis[i]}")
        for v in self.quiver.vertices:
            for w in self.quiver.vertices:
                ev, ew = self.idempotent(v), self.idempotent(w)
                prod = self.multiply(ev, ew)
                expect = ev if v == w else self.zero_vector()
                if prod != expect:
                    raise AssertionError(f"idempotents e_{v}, e_{w} misbehave")
        table = self.table
        for i in range(self.dim):
            for j in range(self.dim):
                tij = table[i][j]
                for k in range(self.dim):
                    left = {}
                    for m, c in tij.items():
                        for l, cl in table[m][k].items():
                            left[l] = f.add(left.get(l, f.zero), f.mul(c, cl))
                    right = {}
                    for m, c in table[j][k].items():
                        for l, cl in table[i][m].items():
                            right[l] = f.add(right.get(l, f.zero), f.mul(c, cl))
                    left = {l: v for l, v in left.items() if v != f.zero}
                    right = {l: v for l, v in right.items() if v != f.zero}
                    if left != right:
                        raise AssertionError(
                            f"associativity fails on basis triple ({i}, {j}, {k})"
                        )
        return True

    def __repr__(self):
        return f"PathAlgebra(dim {self.dim} over {self.field.name})"


def build_algebra(quiver, relations, field):
    """Construct the bound path algebra from Relation objects or specs."""
    rels = []
    for r in relations:
        if isinstance(r, Relation):
            rels.append(r)
        elif isinstance(r, RelationSpec):
            rels.append(Relation.from_spec(quiver, field, r))
        else:
            raise RelationError(f"not a relation: {r!r}")
    return PathAlgebra(quiver, field, rels)


def load_algebra(text, field):
    """Parse a quiver document and build its algebra over the given field."""
    doc = parse_quiver(text)
    return build_algebra(doc.quiver, doc.relations, field)
