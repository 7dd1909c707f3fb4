"""Pierce blocks, one-point peeling, triangular map forms, saturation.

An acyclic bound path algebra is triangular at every source vertex i: the
corner e_i*A*(1-e_i) vanishes and e_i*A*e_i is one-dimensional, so the
algebra splits as a one-point extension.  This module extracts that
structure, decomposes maps into their block components, and drives the
source-peeling recursion that re-verifies the block conditions level by
level with exact arithmetic.
"""

from dataclasses import dataclass, field

from .algebra import PathAlgebra
from .derivations import (
    DER,
    JORDAN,
    LIE,
    LinMap,
    commutator_subspace,
    jordan_derivation_space,
)
from .errors import (
    BlockLeakError,
    DimensionMismatchError,
    NotASourceError,
    NotIdempotentError,
)
from .linalg import SparseSolver, Subspace
from .quiver import Quiver, sources


@dataclass
class PierceBlocks:
    """The four corner subspaces cut out by an idempotent."""

    algebra: object
    e: list
    complement: list
    top_left: Subspace  # e A e
    top_right: Subspace  # e A (1-e)
    bottom_left: Subspace  # (1-e) A e
    bottom_right: Subspace  # (1-e) A (1-e)

    @property
    def dims(self):
        return (
            self.top_left.dim,
            self.top_right.dim,
            self.bottom_left.dim,
            self.bottom_right.dim,
        )

    def triangular_split(self):
        """Orient the blocks as [[A, M], [0, B]]; needs one zero corner."""
        if self.bottom_left.is_zero():
            return TriangularSplit(
                self.algebra, self.e, self.complement,
                self.top_left, self.top_right, self.bottom_right,
            )
        if self.top_right.is_zero():
            return TriangularSplit(
                self.algebra, self.complement, self.e,
                self.bottom_right, self.bottom_left, self.top_left,
            )
        raise BlockLeakError("neither off-diagonal corner vanishes")

    def check_block_products(self):
        """Products of block elements land in the predicted blocks."""
        A = self.algebra
        blocks = {
            (0, 0): self.top_left,
            (0, 1): self.top_right,
            (1, 0): self.bottom_left,
            (1, 1): self.bottom_right,
        }
        for (l1, r1), s1 in blocks.items():
            for (l2, r2), s2 in blocks.items():
                target = blocks[(l1, r2)] if r1 == l2 else None
                for u in s1.rows:
                    for v in s2.rows:
                        prod = A.multiply(u, v)
                        if target is None:
                            if any(prod):
                                raise BlockLeakError("mismatched corners multiplied nonzero")
                        elif not target.contains(prod):
                            raise BlockLeakError("block product escaped its corner")
        return True


@dataclass
class TriangularSplit:
    """Blocks arranged as [[A, M], [0, B]] with their diagonal idempotents."""

    algebra: object
    a_idem: list
    b_idem: list
    a_space: Subspace
    m_space: Subspace
    b_space: Subspace


def pierce_decompose(algebra, e):
    """Split the algebra along an idempotent e into its four corners."""
    A = algebra
    f = A.field
    if A.multiply(e, e) != list(e):
        raise NotIdempotentError("element is not idempotent")
    comp = [f.sub(u, x) for u, x in zip(A.unit(), e)]
    corners = ([], [], [], [])
    for i in range(A.dim):
        x = A.basis_vector(i)
        ex = A.multiply(e, x)
        cx = A.multiply(comp, x)
        corners[0].append(A.multiply(ex, e))
        corners[1].append(A.multiply(ex, comp))
        corners[2].append(A.multiply(cx, e))
        corners[3].append(A.multiply(cx, comp))
    spans = [Subspace.from_vectors(f, A.dim, vecs) for vecs in corners]
    blocks = PierceBlocks(A, list(e), comp, *spans)
    if sum(blocks.dims) != A.dim:
        raise BlockLeakError("block dimensions do not sum to the algebra dimension")
    return blocks


@dataclass
class PeeledExtension:
    """One-point extension data: parent = [[sub, M], [0, K]] at a source."""

    parent: object
    sub: object
    source: str
    m_paths: list  # parent basis paths spanning the corner bimodule
    left_action: dict = field(default_factory=dict)  # (sub idx, m idx) -> {m idx: c}

    @property
    def m_dim(self):
        return len(self.m_paths)


def one_point_peel(algebra, vertex):
    """Split off a source vertex: algebra = [[sub, M], [0, K]].

    The subalgebra keeps every relation not starting at the peeled vertex;
    paths through a source all start there, so surviving relations carry
    over unchanged.
    """
    A = algebra
    q = A.quiver
    if vertex not in sources(q):
        raise NotASourceError(f"vertex {vertex!r} is not a source")
    if len(q.vertices) < 2:
        raise NotASourceError("peeling needs at least two vertices")
    subquiver = Quiver(
        [v for v in q.vertices if v != vertex],
        [a for a in q.arrows if a.source != vertex and a.target != vertex],
    )
    kept = [rel for rel in A.relations if rel.source != vertex]
    sub = PathAlgebra(subquiver, A.field, kept)

    m_paths = [p for p in A.basis if p.source == vertex and not p.is_trivial()]
    m_index = {p: i for i, p in enumerate(m_paths)}
    ext = PeeledExtension(A, sub, vertex, m_paths)

    f = A.field
    for si, sp in enumerate(sub.basis):
        ai = A.basis_index[sp]
        for mi, mp in enumerate(m_paths):
            prod = A.multiply(A.basis_vector(ai), A.basis_vector(A.basis_index[mp]))
            entry = {}
            for k, c in enumerate(prod):
                if c:
                    pk = A.basis[k]
                    if pk not in m_index:
                        raise BlockLeakError("left action escaped the corner bimodule")
                    entry[m_index[pk]] = c
            if entry:
                ext.left_action[(si, mi)] = entry
    return ext


def left_annihilator(algebra, acting, module):
    """Elements a of the acting subspace with a*m = 0 for every m."""
    return _annihilator(algebra, acting, module, left=True)


def right_annihilator(algebra, acting, module):
    return _annihilator(algebra, acting, module, left=False)


def _annihilator(algebra, acting, module, left):
    A = algebra
    f = A.field
    k = acting.dim
    solver = SparseSolver(f, k)
    for m in module.rows:
        cols = []
        for a in acting.rows:
            cols.append(A.multiply(a, m) if left else A.multiply(m, a))
        for coord in range(A.dim):
            row = {t: cols[t][coord] for t in range(k) if cols[t][coord]}
            solver.add_row(row)
    coeff_basis = solver.kernel_basis()
    vecs = []
    for coeffs in coeff_basis:
        v = [f.zero] * A.dim
        for t, c in enumerate(coeffs):
            if c:
                for j, av in enumerate(acting.rows[t]):
                    if av:
                        v[j] = f.add(v[j], f.mul(c, av))
        vecs.append(v)
    return Subspace.from_vectors(f, A.dim, vecs)


def bimodule_faithful(blocks, side):
    """Faithfulness of the corner bimodule, with an annihilator witness.

    side "left": does a*M = 0 force a = 0 in the A-block?  Returns
    (True, None) or (False, witness) with the witness a nonzero annihilator
    element in algebra coordinates.
    """
    split = blocks.triangular_split()
    if side == "left":
        ann = left_annihilator(blocks.algebra, split.a_space, split.m_space)
    elif side == "right":
        ann = right_annihilator(blocks.algebra, split.b_space, split.m_space)
    else:
        raise ValueError("side must be 'left' or 'right'")
    if ann.dim == 0:
        return True, None
    return False, ann.rows[0]


class BlockMap:
    """A linear map defined on a block subspace by images of its basis."""

    def __init__(self, algebra, space, images):
        if len(images) != space.dim:
            raise DimensionMismatchError("one image per block basis vector")
        self.algebra = algebra
        self.space = space
        self.images = images

    def apply(self, vec):
        coords = self.space.coordinates(vec)
        if coords is None:
            raise DimensionMismatchError("vector outside the block")
        f = self.algebra.field
        out = [f.zero] * self.algebra.dim
        for c, img in zip(coords, self.images):
            if c:
                for j, v in enumerate(img):
                    if v:
                        out[j] = f.add(out[j], f.mul(c, v))
        return out

    def is_zero(self):
        return all(not any(img) for img in self.images)


@dataclass
class TriangularForm:
    """Block components of a map on a triangular algebra.

    For [[a, m], [0, b]] the image decomposes as
    [[delta1(a) + delta4(b), a*m0 - m0*b + tau2(m)], [0, mu1(a) + mu4(b)]],
    with delta4 and mu1 present only in the Lie case (and central-valued).
    """

    split: TriangularSplit
    kind: str
    m0: list
    delta1: BlockMap
    tau2: BlockMap
    mu4: BlockMap
    delta4: BlockMap = None
    mu1: BlockMap = None

    def reassemble(self):
        """Rebuild the full map from the components (inverse of extraction)."""
        A = self.split.algebra
        f = A.field
        fa, fb = self.split.a_idem, self.split.b_idem
        cols = []
        for j in range(A.dim):
            x = A.basis_vector(j)
            xa = A.multiply(A.multiply(fa, x), fa)
            xm = A.multiply(A.multiply(fa, x), fb)
            xb = A.multiply(A.multiply(fb, x), fb)
            out = self.delta1.apply(xa)
            for part in (
                A.multiply(xa, self.m0),
                [f.neg(v) for v in A.multiply(self.m0, xb)],
                self.tau2.apply(xm),
                self.mu4.apply(xb),
                self.delta4.apply(xb) if self.delta4 else None,
                self.mu1.apply(xa) if self.mu1 else None,
            ):
                if part is not None:
                    out = [f.add(u, v) for u, v in zip(out, part)]
            cols.append(out)
        return LinMap(A, cols)


def _project(A, left_idem, x, right_idem):
    return A.multiply(A.multiply(left_idem, x), right_idem)


def _commutes_with_block(A, v, block):
    for w in block.rows:
        if any(A.commutator(v, w)):
            return False
    return True


def extract_triangular_form(blocks, theta, kind):
    """Component maps of a derivation-type map in triangular block form.

    The input must satisfy the block pattern of its kind exactly; any
    component escaping its block raises BlockLeakError.  All side
    conditions (module-derivation laws, centrality, vanishing on
    commutators, and the forced vanishing of the scalar component on a
    one-point extension with nonzero corner) are verified before returning.
    """
    if kind not in (DER, JORDAN, LIE):
        raise ValueError(f"unknown kind {kind!r}")
    split = blocks.triangular_split()
    A = split.algebra
    f = A.field
    fa, fb = split.a_idem, split.b_idem

    m0 = _project(A, fa, theta.apply(fa), fb)

    delta1, tau2, mu4 = [], [], []
    delta4, mu1 = [], []
    for a in split.a_space.rows:
        img = theta.apply(a)
        comp_a = _project(A, fa, img, fa)
        comp_m = _project(A, fa, img, fb)
        comp_b = _project(A, fb, img, fb)
        if comp_m != A.multiply(a, m0):
            raise BlockLeakError("corner component of an A-block image is not a*m0")
        if kind == LIE:
            if not _commutes_with_block(A, comp_b, split.b_space):
                raise BlockLeakError("mu1 image is not central in the B-block")
            mu1.append(comp_b)
        elif any(comp_b):
            raise BlockLeakError("A-block image leaked into the B-block")
        delta1.append(comp_a)
    for b in split.b_space.rows:
        img = theta.apply(b)
        comp_a = _project(A, fa, img, fa)
        comp_m = _project(A, fa, img, fb)
        comp_b = _project(A, fb, img, fb)
        if comp_m != [f.neg(v) for v in A.multiply(m0, b)]:
            raise BlockLeakError("corner component of a B-block image is not -m0*b")
        if kind == LIE:
            if not _commutes_with_block(A, comp_a, split.a_space):
                raise BlockLeakError("delta4 image is not central in the A-block")
            delta4.append(comp_a)
        elif any(comp_a):
            raise BlockLeakError("B-block image leaked into the A-block")
        mu4.append(comp_b)
    for m in split.m_space.rows:
        img = theta.apply(m)
        if any(_project(A, fa, img, fa)) or any(_project(A, fb, img, fb)):
            raise BlockLeakError("corner-bimodule image left the corner")
        tau2.append(_project(A, fa, img, fb))

    form = TriangularForm(
        split,
        kind,
        m0,
        BlockMap(A, split.a_space, delta1),
        BlockMap(A, split.m_space, tau2),
        BlockMap(A, split.b_space, mu4),
        BlockMap(A, split.b_space, delta4) if kind == LIE else None,
        BlockMap(A, split.a_space, mu1) if kind == LIE else None,
    )
    _check_form_conditions(form)
    return form


def _is_block_derivation(A, space, bmap, kind):
    """The component map satisfies its derivation law inside the block."""
    f = A.field
    for u in space.rows:
        du = bmap.apply(u)
        for v in space.rows:
            dv = bmap.apply(v)
            if kind == DER:
                lhs = bmap.apply(A.multiply(u, v))
                rhs = _addv(f, A.multiply(du, v), A.multiply(u, dv))
            elif kind == JORDAN:
                lhs = bmap.apply(_addv(f, A.multiply(u, v), A.multiply(v, u)))
                rhs = _addv(
                    f,
                    _addv(f, A.multiply(du, v), A.multiply(v, du)),
                    _addv(f, A.multiply(u, dv), A.multiply(dv, u)),
                )
            else:
                lhs = bmap.apply(A.commutator(u, v))
                rhs = _addv(f, A.commutator(du, v), A.commutator(u, dv))
            if lhs != rhs:
                return False
    return True


def _addv(f, x, y):
    return [f.add(a, b) for a, b in zip(x, y)]


def _subv(f, x, y):
    return [f.sub(a, b) for a, b in zip(x, y)]


def _check_form_conditions(form):
    split = form.split
    A = split.algebra
    f = A.field
    kind = form.kind
    if not _is_block_derivation(A, split.a_space, form.delta1, kind):
        raise BlockLeakError("delta1 fails its derivation law on the A-block")
    if not _is_block_derivation(A, split.b_space, form.mu4, kind):
        raise BlockLeakError("mu4 fails its derivation law on the B-block")

    # module compatibility of tau2, with the central corrections in the Lie case
    for a in split.a_space.rows:
        d1a = form.delta1.apply(a)
        m1a = form.mu1.apply(a) if form.mu1 else None
        for m in split.m_space.rows:
            lhs = form.tau2.apply(A.multiply(a, m))
            rhs = _addv(f, A.multiply(a, form.tau2.apply(m)), A.multiply(d1a, m))
            if m1a is not None:
                rhs = _subv(f, rhs, A.multiply(m, m1a))
            if lhs != rhs:
                raise BlockLeakError("tau2 is not compatible with the left action")
    for b in split.b_space.rows:
        m4b = form.mu4.apply(b)
        d4b = form.delta4.apply(b) if form.delta4 else None
        for m in split.m_space.rows:
            lhs = form.tau2.apply(A.multiply(m, b))
            rhs = _addv(f, A.multiply(form.tau2.apply(m), b), A.multiply(m, m4b))
            if d4b is not None:
                rhs = _subv(f, rhs, A.multiply(d4b, m))
            if lhs != rhs:
                raise BlockLeakError("tau2 is not compatible with the right action")

    if kind == LIE:
        # central components vanish on commutators of their source block
        for i, u in enumerate(split.a_space.rows):
            for v in split.a_space.rows[i + 1 :]:
                if any(form.mu1.apply(A.commutator(u, v))):
                    raise BlockLeakError("mu1 does not kill A-block commutators")
        for i, u in enumerate(split.b_space.rows):
            for v in split.b_space.rows[i + 1 :]:
                if any(form.delta4.apply(A.commutator(u, v))):
                    raise BlockLeakError("delta4 does not kill B-block commutators")

    # one-point extension with nonzero corner forces the scalar part to vanish
    if kind in (DER, JORDAN) and split.b_space.dim == 1 and split.m_space.dim > 0:
        if not form.mu4.is_zero():
            raise BlockLeakError("mu4 must vanish on a one-point extension")


def saturated_subalgebra(algebra):
    """Smallest product-closed span of the idempotents and all commutators.

    This is a certified lower bound for the closure used by the standard-
    form sufficiency condition; on every acyclic bound path algebra it
    saturates to the full algebra (each nontrivial basis coset is already a
    commutator with its source idempotent).
    """
    A = algebra
    f = A.field
    solver = SparseSolver(f, A.dim)

    def add_vec(v):
        return solver.add_row({i: c for i, c in enumerate(v) if c})

    for v in A.quiver.vertices:
        add_vec(A.idempotent(v))
    for w in commutator_subspace(A).rows:
        add_vec(w)

    changed = True
    while changed:
        changed = False
        basis = []
        for p in sorted(solver.rows):
            vec = [f.zero] * A.dim
            for c, val in solver.rows[p].items():
                vec[c] = val
            basis.append(vec)
        for u in basis:
            for v in basis:
                if add_vec(A.multiply(u, v)):
                    changed = True
    vecs = []
    for p in sorted(solver.rows):
        vec = [f.zero] * A.dim
        for c, val in solver.rows[p].items():
            vec[c] = val
        vecs.append(vec)
    return Subspace.from_vectors(f, A.dim, vecs)


@dataclass
class PeelLevel:
    source: str
    dims: tuple  # (dim A-block, dim M, dim B)
    m_faithful_left: bool
    jordan_basis_checked: int
    all_conditions_hold: bool

    def to_json(self):
        return {
            "source": self.source,
            "dims": list(self.dims),
            "m_faithful_left": self.m_faithful_left,
            "jordan_basis_checked": self.jordan_basis_checked,
            "all_conditions_hold": self.all_conditions_hold,
        }


@dataclass
class PeelReport:
    levels: list
    terminated_at_dim: int

    @property
    def ok(self):
        return all(lv.all_conditions_hold for lv in self.levels) and self.terminated_at_dim == 1

    def to_json(self):
        return {
            "levels": [lv.to_json() for lv in self.levels],
            "terminated_at_dim": self.terminated_at_dim,
            "ok": self.ok,
        }


def source_peel_verify(algebra):
    """Peel sources down to the base field, re-checking the block form.

    At each level the first source (declaration order) is peeled; blocks
    must be triangular with a one-dimensional corner, and every basis
    element of the level's Jordan-derivation space must extract to a valid
    triangular form.  BlockLeakError propagating out of here is a
    theorem-violation alarm.
    """
    A = algebra
    levels = []
    while A.dim > 1:
        q = A.quiver
        src = next(v for v in q.vertices if v in sources(q))
        e = A.idempotent(src)
        blocks = pierce_decompose(A, e)
        if not blocks.top_right.is_zero() or blocks.top_left.dim != 1:
            raise BlockLeakError(f"blocks at source {src!r} are not triangular")
        faithful, _ = bimodule_faithful(blocks, "left")
        checked = 0
        for theta in jordan_derivation_space(A).basis_maps():
            extract_triangular_form(blocks, theta, JORDAN)
            checked += 1
        ext = one_point_peel(A, src)
        levels.append(
            PeelLevel(
                source=src,
                dims=(ext.sub.dim, ext.m_dim, 1),
                m_faithful_left=faithful,
                jordan_basis_checked=checked,
                all_conditions_hold=True,
            )
        )
        A = ext.sub
    return PeelReport(levels, A.dim)
