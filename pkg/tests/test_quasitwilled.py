from fractions import Fraction

import pytest

from qta import (
    A, APRIME, IngredientError, MultilinearMap, QuasiTwilledAlgebra,
    AssociativeAlgebra, build_standard, circle, project, structure_residuals,
    total_product, validate,
)

from conftest import builder_instances, dual_numbers, one_dim_algebra


@pytest.mark.parametrize("algname", ["one", "dual"])
def test_all_builders_validate(algname):
    alg = one_dim_algebra() if algname == "one" else dual_numbers()
    for kind, q in builder_instances(alg).items():
        assert validate(q).is_zero(), kind
        rows = structure_residuals(q)
        assert len(rows) == 16
        assert all(r.residual.is_zero() for r in rows), kind


def test_zero_structure_validates():
    q = QuasiTwilledAlgebra.from_components((2, 2))
    assert validate(q).is_zero()
    assert all(r.residual.is_zero() for r in structure_residuals(q))


def test_total_product_examples():
    # direct product: Omega((x,u),(y,v)) = (x.y, u.v)
    alg = one_dim_algebra()
    q = build_standard("direct_product", algebra=alg, algebra_prime=alg)
    omega = total_product(q)
    assert omega.value((0, 0)) == (1, 0)   # (e,0)(e,0) = (e, 0)
    assert omega.value((1, 1)) == (0, 1)   # (0,e')(0,e') = (0, e')
    assert omega.value((0, 1)) == (0, 0)

    # modified direct sum, weight 4: Omega((e,0),(e,0)) = (0, 4e)
    q4 = build_standard("modified_direct_sum", algebra=alg, weight=4)
    omega4 = total_product(q4)
    assert omega4.value((0, 0)) == (0, 4)

    # all components zero
    assert total_product(QuasiTwilledAlgebra.from_components((1, 1))).is_zero()


def test_no_prime_prime_to_a_block():
    for alg in (one_dim_algebra(), dual_numbers()):
        for kind, q in builder_instances(alg).items():
            omega = total_product(q)
            blk = project(omega, (APRIME, APRIME), A)
            assert blk.is_zero(), kind


def test_residual_rows_match_bracket_blocks():
    # every displayed row equals the matching block of (1/2)[Omega,Omega];
    # the [beta,beta] row is twice its block (full bracket as displayed)
    for alg in (one_dim_algebra(), dual_numbers()):
        for kind, q in builder_instances(alg).items():
            half = validate(q)
            for row in structure_residuals(q):
                dom, cod = row.block
                blk = project(half, dom, cod)
                expected = row.residual
                if row.name == "[beta,beta]":
                    expected = expected.scale(Fraction(1, 2))
                assert blk == expected, (kind, row.name)


def _perturb(q, rng):
    """Add 1 to a random entry of a random component."""
    comps = q.components()
    name = rng.choice(sorted(comps))
    m = comps[name]
    idx = rng.randrange(len(m.coeffs))
    coeffs = list(m.coeffs)
    coeffs[idx] += 1
    comps[name] = MultilinearMap(m.domain, m.codomain, m.dims, coeffs)
    return QuasiTwilledAlgebra(**comps)


def test_detectors_agree_on_perturbations():
    from qta import seeded_rng
    rng = seeded_rng(2024)
    alg = dual_numbers()
    for kind, q in builder_instances(alg).items():
        fired = 0
        while fired < 3:
            qbad = _perturb(q, rng)
            v_zero = validate(qbad).is_zero()
            rows_zero = all(r.residual.is_zero()
                            for r in structure_residuals(qbad))
            assert v_zero == rows_zero, kind
            if not v_zero:
                fired += 1


def test_corrupted_semidirect_mu_detected():
    alg = dual_numbers()
    q = builder_instances(alg)["semidirect"]
    bump = MultilinearMap.from_function(
        (APRIME, A), APRIME, q.dims,
        lambda t: [2 if (t == (0, 0) and k == 0) else 0 for k in range(2)])
    qbad = QuasiTwilledAlgebra(q.pi, q.xi, q.eta, q.beta, q.rho,
                               q.mu + bump, q.theta)
    assert not validate(qbad).is_zero()


def test_half_bracket_definition():
    for alg in (one_dim_algebra(),):
        q = build_standard("reynolds", algebra=alg)
        omega = total_product(q)
        assert validate(q) == circle(omega, omega)


def test_builder_rejects_bad_ingredients():
    bad = AssociativeAlgebra.from_table(
        [[[0, 1], [0, 0]], [[1, 0], [0, 0]]], 2)
    with pytest.raises(IngredientError):
        build_standard("reynolds", algebra=bad)
    with pytest.raises(IngredientError):
        build_standard("modified_direct_sum", algebra=bad, weight=1)


def test_modified_direct_sum_any_weight():
    for alg in (one_dim_algebra(), dual_numbers()):
        for lam in (0, 1, Fraction(-7, 3), 12):
            q = build_standard("modified_direct_sum", algebra=alg, weight=lam)
            assert validate(q).is_zero()


def test_matched_pair_oracle_equivalence():
    # validity of the assembled structure is equivalent to: both products
    # associative, both action pairs representations, and the six
    # compatibility identities -- tested by perturbing the raw components
    # (bypassing the builder's ingredient checks)
    from qta import (
        AssociativeAlgebra, MatchedPairData, check_associative,
        check_matched_pair, check_representation, seeded_rng,
    )
    from conftest import regular_matched_pair
    rng = seeded_rng(77)
    mp = regular_matched_pair(dual_numbers())

    def assemble(mp_data):
        return QuasiTwilledAlgebra.from_components(
            mp_data.dims,
            pi=mp_data.alg_a.product.with_dims(mp_data.dims),
            beta=mp_data.alg_prime.product.with_dims(mp_data.dims),
            rho=mp_data.rho, mu=mp_data.mu, eta=mp_data.eta, xi=mp_data.xi)

    def full_check(mp_data):
        return (check_associative(mp_data.alg_a).is_zero()
                and check_associative(mp_data.alg_prime).is_zero()
                and check_representation(
                    mp_data.representation_on_prime()).is_zero
                and check_representation(mp_data.representation_on_a()).is_zero
                and check_matched_pair(mp_data).is_zero)

    assert validate(assemble(mp)).is_zero() == full_check(mp) == True

    names = ["rho", "mu", "eta", "xi"]
    seen_invalid = 0
    for _ in range(12):
        which = rng.choice(names)
        m = getattr(mp, which)
        coeffs = list(m.coeffs)
        coeffs[rng.randrange(len(coeffs))] += 1
        bumped = MultilinearMap(m.domain, m.codomain, m.dims, coeffs)
        kw = {n: getattr(mp, n) for n in names}
        kw[which] = bumped
        mp2 = MatchedPairData(mp.alg_a, mp.alg_prime, **kw)
        ok_full = full_check(mp2)
        ok_validate = validate(assemble(mp2)).is_zero()
        assert ok_full == ok_validate
        if not ok_validate:
            seen_invalid += 1
    assert seen_invalid > 0


def _raw_total_eval(q, a, b):
    """Total product on basis indices via component tables only (no kernel)."""
    da, dap = q.dims
    out = [Fraction(0)] * (da + dap)

    def add(offset, vals):
        for k, v in enumerate(vals):
            out[offset + k] += v

    a_is_a, b_is_a = a < da, b < da
    if a_is_a and b_is_a:
        add(0, q.pi.value((a, b)))
        add(da, q.theta.value((a, b)))
    elif a_is_a and not b_is_a:
        add(0, q.xi.value((a, b - da)))
        add(da, q.rho.value((a, b - da)))
    elif not a_is_a and b_is_a:
        add(0, q.eta.value((a - da, b)))
        add(da, q.mu.value((a - da, b)))
    else:
        add(da, q.beta.value((a - da, b - da)))
    return out


def test_validate_against_raw_triple_oracle():
    # third path: associativity checked by direct basis-triple evaluation
    # of the component tables, with no shared code with the bracket engine
    for alg in (one_dim_algebra(), dual_numbers()):
        instances = list(builder_instances(alg).items())
        for kind, q in instances:
            dt = q.dims[0] + q.dims[1]

            def mul_vec(vec, c):
                out = [Fraction(0)] * dt
                for a, coeff in enumerate(vec):
                    if coeff:
                        for k, v in enumerate(_raw_total_eval(q, a, c)):
                            out[k] += coeff * v
                return out

            def vec_mul(a, vec):
                out = [Fraction(0)] * dt
                for b, coeff in enumerate(vec):
                    if coeff:
                        for k, v in enumerate(_raw_total_eval(q, a, b)):
                            out[k] += coeff * v
                return out

            ok = True
            for a in range(dt):
                for b in range(dt):
                    ab = _raw_total_eval(q, a, b)
                    for c in range(dt):
                        bc = _raw_total_eval(q, b, c)
                        if mul_vec(ab, c) != vec_mul(a, bc):
                            ok = False
            assert ok == validate(q).is_zero() == True, kind


def test_perturbed_raw_oracle_agrees():
    from qta import seeded_rng
    rng = seeded_rng(2025)
    q = builder_instances(dual_numbers())["matched_pair"]
    disagreements = 0
    for _ in range(6):
        qbad = _perturb(q, rng)
        dt = qbad.dims[0] + qbad.dims[1]
        raw_ok = True
        for a in range(dt):
            for b in range(dt):
                ab = _raw_total_eval(qbad, a, b)
                for c in range(dt):
                    bc = _raw_total_eval(qbad, b, c)
                    left = [Fraction(0)] * dt
                    for i, coeff in enumerate(ab):
                        if coeff:
                            for k, v in enumerate(_raw_total_eval(qbad, i, c)):
                                left[k] += coeff * v
                    right = [Fraction(0)] * dt
                    for j, coeff in enumerate(bc):
                        if coeff:
                            for k, v in enumerate(_raw_total_eval(qbad, a, j)):
                                right[k] += coeff * v
                    if left != right:
                        raw_ok = False
        assert raw_ok == validate(qbad).is_zero()
        if not raw_ok:
            disagreements += 1
    assert disagreements > 0
