import pytest

from pathalg import (
    Path,
    QQ,
    Relation,
    RelationError,
    enumerate_paths,
    load_algebra,
    multiply_paths,
    parse_quiver,
)
from pathalg.fields import PrimeField

from conftest import fixture_text, line_quiver_doc


def test_line_quiver_path_count():
    q = parse_quiver(line_quiver_doc(3)).quiver
    assert len(enumerate_paths(q)) == 6


@pytest.mark.parametrize("n", range(2, 7))
def test_line_quiver_dimension_formula(n):
    A = load_algebra(line_quiver_doc(n), QQ)
    assert A.dim == n * (n + 1) // 2


def test_single_vertex_paths():
    q = parse_quiver("vertex 1\n").quiver
    assert enumerate_paths(q) == [Path.trivial("1")]


def test_six_vertex_has_22_paths(six_vertex):
    assert six_vertex.dim == 22
    strings = {str(p) for p in six_vertex.basis}
    assert "alpha.beta.zeta" in strings and "beta.epsilon" in strings


def test_path_order_by_length_then_names(six_vertex):
    lengths = [p.length for p in six_vertex.basis]
    assert lengths == sorted(lengths)
    trivial = [str(p) for p in six_vertex.basis[:6]]
    assert trivial == ["e_1", "e_2", "e_3", "e_4", "e_5", "e_6"]


def test_multiply_paths_composition(six_vertex):
    q = six_vertex.quiver
    zeta = Path.from_arrows(q, ["zeta"])
    beta = Path.from_arrows(q, ["beta"])
    prod = multiply_paths(zeta, beta)  # traverse beta then zeta
    assert prod == Path.from_arrows(q, ["beta", "zeta"])
    assert str(prod) == "beta.zeta"


def test_multiply_trivial_paths():
    e1 = Path.trivial("1")
    e2 = Path.trivial("2")
    assert multiply_paths(e1, e1) == e1
    assert multiply_paths(e1, e2) is None


def test_multiply_non_composable_is_zero(cospan):
    q = cospan.quiver
    alpha = Path.from_arrows(q, ["alpha"])  # 1 -> 2
    beta = Path.from_arrows(q, ["beta"])  # 3 -> 2
    assert multiply_paths(beta, alpha) is None
    assert multiply_paths(alpha, beta) is None


def test_trivial_path_products_in_algebra(cospan):
    e1 = cospan.idempotent("1")
    e2 = cospan.idempotent("2")
    assert cospan.multiply(e1, e1) == e1
    assert not any(cospan.multiply(e1, e2))


def test_bound_algebra_dimension_and_basis(six_vertex_bound):
    assert six_vertex_bound.dim == 20
    expected = {
        "e_1", "e_2", "e_3", "e_4", "e_5", "e_6",
        "alpha", "beta", "gamma", "zeta", "epsilon", "eta",
        "alpha.beta", "alpha.gamma",
        "alpha.beta.zeta", "alpha.gamma.zeta", "alpha.gamma.epsilon",
        "beta.zeta", "gamma.zeta", "gamma.epsilon",
    }
    assert {str(p) for p in six_vertex_bound.basis} == expected


def test_ideal_closure_kills_extension(six_vertex, six_vertex_bound):
    A = six_vertex_bound
    full = [A.field.zero] * len(A.paths)
    # the relation path itself
    full[A.path_index[Path.from_arrows(A.quiver, ["beta", "epsilon"])]] = A.field.one
    assert not any(A.reduce(full))
    # and its extension by alpha
    full = [A.field.zero] * len(A.paths)
    full[A.path_index[Path.from_arrows(A.quiver, ["alpha", "beta", "epsilon"])]] = A.field.one
    assert not any(A.reduce(full))


def test_reduce_keeps_surviving_coset(six_vertex_bound):
    A = six_vertex_bound
    full = [A.field.zero] * len(A.paths)
    target = Path.from_arrows(A.quiver, ["gamma", "zeta"])
    full[A.path_index[target]] = A.field.one
    reduced = A.reduce(full)
    assert reduced[A.basis_index[target]] == A.field.one
    assert sum(1 for c in reduced if c) == 1


def test_no_relations_means_zero_ideal(six_vertex):
    assert six_vertex.ideal.dim == 0
    assert len(six_vertex.basis) == len(six_vertex.paths)


def test_dim_equals_paths_minus_ideal(six_vertex_bound):
    A = six_vertex_bound
    assert A.dim == len(A.paths) - A.ideal.dim


def test_axioms_on_fixtures(t2, cospan, four_vertex, six_vertex_bound):
    for A in (t2, cospan, four_vertex, six_vertex_bound):
        assert A.check_axioms()


def test_unit_acts_as_identity(six_vertex_bound):
    A = six_vertex_bound
    one = A.unit()
    for i in range(A.dim):
        b = A.basis_vector(i)
        assert A.multiply(one, b) == b
        assert A.multiply(b, one) == b


def test_algebra_over_prime_field():
    A = load_algebra(fixture_text("six_vertex_bound.quiver"), PrimeField(5))
    assert A.dim == 20
    assert A.check_axioms()


def test_algebra_over_f2_construction_allowed():
    A = load_algebra(fixture_text("cospan.quiver"), PrimeField(2))
    assert A.dim == 5


def test_relation_must_be_parallel():
    q = parse_quiver("vertex 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\n").quiver
    p1 = Path.from_arrows(q, ["a", "b"])
    p2 = Path.from_arrows(q, ["a", "c"])
    with pytest.raises(RelationError, match="parallel"):
        Relation(QQ, [(QQ.one, p1), (QQ.one, p2)])


def test_relation_requires_length_two():
    q = parse_quiver("vertex 1 2\narrow a 1 2\n").quiver
    with pytest.raises(RelationError, match="length"):
        Relation(QQ, [(QQ.one, Path.from_arrows(q, ["a"]))])


def test_relation_requires_nonzero_coefficient():
    q = parse_quiver("vertex 1 2 3\narrow a 1 2\narrow b 2 3\n").quiver
    with pytest.raises(RelationError, match="nonzero"):
        Relation(QQ, [(QQ.zero, Path.from_arrows(q, ["a", "b"]))])


def test_relation_with_broken_chain_rejected():
    q = parse_quiver("vertex 1 2 3\narrow a 1 2\narrow b 1 3\n").quiver
    with pytest.raises(RelationError, match="compose"):
        Path.from_arrows(q, ["a", "b"])


def test_binomial_relation_quotient():
    # two parallel length-2 paths identified up to sign
    text = "vertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 2 3\nrelation a.b - a.c\n"
    A = load_algebra(text, QQ)
    assert A.dim == 7  # 8 paths, 1-dim ideal
    assert A.check_axioms()


def test_element_from_path_coeffs_unknown_path(cospan):
    with pytest.raises(KeyError):
        cospan.element_from_path_coeffs({"nope": QQ.one})


def test_grading_respected(six_vertex_bound):
    A = six_vertex_bound
    for i, p in enumerate(A.basis):
        for j, q in enumerate(A.basis):
            prod = A.table[i][j]
            for k in prod:
                r = A.basis[k]
                assert r.source == q.source and r.target == p.target
