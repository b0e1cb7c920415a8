"""Desk-scale ceiling: the whole stack on a 3-dimensional base algebra."""

from fractions import Fraction

from qta import (
    A, APRIME, AssociativeAlgebra, build_standard, cohomology_dims,
    controlling_structure, explicit_formula_check, left_residual,
    linear_map_from_matrix, random_map, regular_representation,
    right_residual, seeded_rng, structure_residuals, twist_left, twist_right,
    conjugation_twist, validate,
)

# K[t]/(t^3), basis (1, t, t^2)
TRUNC3 = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
]


def trunc3():
    return AssociativeAlgebra.from_table(TRUNC3, 3, basis_names=["1", "t", "t2"])


def test_builders_validate_dim3():
    alg = trunc3()
    assert alg.is_associative()
    for kind, ing in [
        ("modified_direct_sum", {"algebra": alg, "weight": Fraction(4)}),
        ("semidirect", {"rep": regular_representation(alg)}),
        ("reynolds", {"algebra": alg}),
        ("direct_product", {"algebra": alg, "algebra_prime": alg}),
    ]:
        q = build_standard(kind, **ing)
        assert validate(q).is_zero(), kind
        assert all(r.residual.is_zero() for r in structure_residuals(q)), kind


def test_euler_type_derivation_dim3():
    # D(t^k) = k t^k is a derivation of the truncated polynomial algebra
    q = build_standard("semidirect", rep=regular_representation(trunc3()))
    d = linear_map_from_matrix(
        [[0, 0, 0], [0, 1, 0], [0, 0, 2]], A, APRIME, q.dims)
    assert right_residual(q, d).is_zero()
    dims = cohomology_dims(q, d, "right", 2)
    assert len(dims) == 3 and all(x >= 0 for x in dims)


def test_reynolds_operator_dim3():
    q = build_standard("reynolds", algebra=trunc3())
    b = linear_map_from_matrix(
        [[-1, 0, 0], [0, -1, 0], [0, 0, -1]], APRIME, A, q.dims)
    assert left_residual(q, b).is_zero()
    tw = twist_left(q, b)
    assert tw.reassemble() == conjugation_twist(q, b, "left")
    assert validate(tw.to_quasi_twilled()).is_zero()


def test_twist_oracle_and_formulas_dim3():
    rng = seeded_rng(300)
    q = build_standard("reynolds", algebra=trunc3())
    d = random_map(rng, (A,), APRIME, q.dims, bound=2)
    assert twist_right(q, d).reassemble() == conjugation_twist(q, d, "right")
    s = controlling_structure(q, "left")
    f1 = random_map(rng, (APRIME,), A, q.dims, bound=2)
    f2 = random_map(rng, (APRIME, APRIME), A, q.dims, bound=2)
    assert s.jacobi_residual(2, [f1, f2]).is_zero()
    assert explicit_formula_check(q, "left", 2, [f1, f2])
    assert explicit_formula_check(q, "left", 3, [f1, f1, f2])
