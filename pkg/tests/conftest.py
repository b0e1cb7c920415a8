"""Shared instances: the stock algebras and one structure per builder kind."""

import pytest

from qta import (
    A, APRIME, AssociativeAlgebra, AssociativeRepresentation, Cocycle2,
    MatchedPairData, MultilinearMap, build_standard, linear_map_from_matrix,
    regular_representation,
)

# 1-dim algebra e.e = e
ONE_DIM_TABLE = [[[1]]]
# dual numbers K[t]/(t^2), basis (1, t)
DUAL_TABLE = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]


def one_dim_algebra():
    return AssociativeAlgebra.from_table(ONE_DIM_TABLE, 1, basis_names=["e"])


def dual_numbers():
    return AssociativeAlgebra.from_table(DUAL_TABLE, 2, basis_names=["1", "t"])


@pytest.fixture
def alg1():
    return one_dim_algebra()


@pytest.fixture
def dual():
    return dual_numbers()


def right_map(q, rows):
    return linear_map_from_matrix(rows, A, APRIME, q.dims)


def left_map(q, rows):
    return linear_map_from_matrix(rows, APRIME, A, q.dims)


def scaled_identity_rows(n, scalar):
    return [[scalar if i == j else 0 for j in range(n)] for i in range(n)]


def regular_assoc_rep(alg):
    """The regular representation viewed as an associative representation."""
    rep = regular_representation(alg)
    dims = rep.rho.dims
    star = alg.product.relabel((APRIME, APRIME), APRIME, dims)
    return AssociativeRepresentation(rep.algebra, rep.rho, rep.mu, star)


def product_cocycle(alg):
    """omega = the product itself, over the regular representation."""
    rep = regular_representation(alg)
    dims = rep.rho.dims
    omega = alg.product.with_dims(dims).relabel((A, A), APRIME, dims)
    return Cocycle2(rep, omega)


def regular_matched_pair(alg):
    """rho/mu regular, eta/xi zero; a matched pair for any algebra."""
    dims = (alg.dim, alg.dim)
    alg_a = AssociativeAlgebra(alg.product.with_dims(dims), alg.basis_names)
    alg_p = AssociativeAlgebra(
        alg.product.relabel((APRIME, APRIME), APRIME, dims))
    rho = alg.product.with_dims(dims).relabel((A, APRIME), APRIME, dims)
    mu = alg.product.with_dims(dims).relabel((APRIME, A), APRIME, dims)
    eta = MultilinearMap.zero((APRIME, A), A, dims)
    xi = MultilinearMap.zero((A, APRIME), A, dims)
    return MatchedPairData(alg_a, alg_p, rho, mu, eta, xi)


def builder_instances(alg):
    """One structure per builder kind over the given base algebra."""
    rep = regular_representation(alg)
    return {
        "modified_direct_sum": build_standard(
            "modified_direct_sum", algebra=alg, weight=4),
        "semidirect": build_standard("semidirect", rep=rep),
        "semidirect_assoc": build_standard(
            "semidirect_assoc", assoc_rep=regular_assoc_rep(alg)),
        "direct_product": build_standard(
            "direct_product", algebra=alg, algebra_prime=alg),
        "abelian_extension": build_standard(
            "abelian_extension", cocycle=product_cocycle(alg)),
        "reynolds": build_standard("reynolds", algebra=alg),
        "matched_pair": build_standard(
            "matched_pair", matched_pair=regular_matched_pair(alg)),
    }
